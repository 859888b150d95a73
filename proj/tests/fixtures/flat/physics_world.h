#pragma once
#include "render_device.h"
