#pragma once
#include "res/asset.h"
