#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neurobench {

/// Exit 0 on success, 2 on usage errors, 1 on data or model errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neurobench
