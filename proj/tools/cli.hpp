#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppfast/io.hpp"

namespace ppfast::cli {

// args excludes the program name. Exit codes: 0 affirmative, 1 negative,
// 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// A file path, "-" for stdin, or "fixture:NAME".
Json load_input(const std::string& spec);

Json fastness_json(const Family& x);
Json marking_json(const Family& x);

}  // namespace ppfast::cli
