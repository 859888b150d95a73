#include "render_device.h"
#include "audio_mixer.h"
