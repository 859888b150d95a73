#pragma once
#include "core/math/vector3.h"
#include "render/shader.h"

struct Bone { Vector3 rest; int parent; };
