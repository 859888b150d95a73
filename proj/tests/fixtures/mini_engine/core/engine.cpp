#include "memory.h"
#include "math/vector3.h"
#include <render/renderer.h>

int engine_main() { return 0; }
