#pragma once

#include <string>
#include <vector>

namespace polycsp {

// Exit codes: 0 success/equivalent, 1 inequivalent, 2 usage, 3 parse,
// 4 resource/guard.
int cli_main(const std::vector<std::string>& args);

int cli_main(int argc, const char* const* argv);

}  // namespace polycsp
