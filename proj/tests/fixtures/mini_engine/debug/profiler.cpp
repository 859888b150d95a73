#include "logger.h"
#include "platform/os.h"

const char* kReportTemplate = R"(
#include "not/a/real/include.h"
)";

void profile_frame() { log_line("frame"); }
