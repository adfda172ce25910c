#pragma once

// The command-line front end: verbs, the operations each one reaches, and
// an in-process entry point (the binary is a thin wrapper around run_cli).

#include <iosfwd>
#include <string>
#include <vector>

namespace ringext::cli {

struct Verb {
    std::string name;
    std::string summary;
    std::vector<std::string> operations;  // library operations the verb exercises
};

const std::vector<Verb>& verb_table();

/// 0: passed / succeeded, 1: well-formed input that fails a check,
/// 2: malformed input, usage error or guard exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringext::cli
