#pragma once
#  include   "core/memory.h"

class Hud {};
