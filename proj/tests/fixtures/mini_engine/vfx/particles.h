#pragma once
#include "render/shader.h"
#include "core/math/vector3.h"

struct Particle { Vector3 position; float life; };
