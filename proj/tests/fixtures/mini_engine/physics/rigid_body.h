#pragma once
#include "core/math/vector3.h"

struct RigidBody { Vector3 velocity; float mass; };
