#pragma once

#include <string>
#include <vector>

namespace rheat {

// Exit codes: 0 success, 1 a check failed, 2 configuration or usage error.
int dispatch(int argc, const char* const* argv);
int dispatch(const std::vector<std::string>& args);  // args[0] is the program name

// Fixed 17-significant-digit formatting used by every CSV writer.
std::string fmt17(double v);

}  // namespace rheat
