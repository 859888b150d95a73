#pragma once
#include <AzCore/Memory/SystemAllocator.h>
