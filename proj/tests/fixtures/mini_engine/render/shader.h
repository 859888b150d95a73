#pragma once
#include "resources/loader.h"

struct Shader { unsigned program; };
