#pragma once
#include "../math/vector3.h"

inline float clamp01(float v) { return v < 0 ? 0 : (v > 1 ? 1 : v); }
