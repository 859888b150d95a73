#pragma once
// #include "debug/logger.h"
/* #include "gui/hud.h" */
#include "memory.h"
#include <cstddef>

void* engine_alloc(std::size_t bytes);
