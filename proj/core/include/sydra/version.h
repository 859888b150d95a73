#ifndef SYDRA_VERSION_H_
#define SYDRA_VERSION_H_

#include <string_view>

namespace sydra {

std::string_view ToolVersion();

}  // namespace sydra

#endif  // SYDRA_VERSION_H_
