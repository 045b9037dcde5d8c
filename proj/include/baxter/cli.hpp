#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace baxter {

// Command-line driver; exit code 0 on success, 1 when a verification check
// fails, 2 on argument or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace baxter
