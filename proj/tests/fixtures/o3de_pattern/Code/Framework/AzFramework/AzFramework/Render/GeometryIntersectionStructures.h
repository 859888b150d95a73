#pragma once
#include <AzCore/Math/Vector3.h>
