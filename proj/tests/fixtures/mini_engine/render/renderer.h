#pragma once
#include "shader.h"
#include "camera.h"
#include "core/memory.h"

class Renderer { public: void draw(); };
