#include "rigid_body.h"
#include "scene/octree.h"

bool overlaps(const RigidBody&, const RigidBody&) { return false; }
