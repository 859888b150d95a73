#pragma once

inline float snap_to_grid(float v, float grid) { return grid * static_cast<int>(v / grid); }
