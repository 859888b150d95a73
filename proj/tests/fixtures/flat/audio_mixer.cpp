#include "audio_mixer.h"
