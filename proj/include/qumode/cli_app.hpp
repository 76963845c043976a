#pragma once

#include <string>
#include <vector>

namespace qumode {

// Full command-line frontend; the binary's main() is a one-line wrapper so
// tests can drive the exact production code path in-process.
// Exit codes: 0 ok, 2 usage or validation failure, 3 no peak cleared the
// threshold, 4 classical rejection, 5 measurement budget exhausted.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace qumode
