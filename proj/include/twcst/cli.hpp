#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twcst::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,  // a lemma / theorem / bound check failed
    kUsage = 2,        // bad arguments or input files
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twcst::cli
