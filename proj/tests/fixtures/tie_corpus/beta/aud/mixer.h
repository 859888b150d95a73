#pragma once
#include "cor/core.h"
