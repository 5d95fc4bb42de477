#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ak::cli {

struct CliInvocation {
    std::string command;              // validate | report | identities | spectrum | hlc | constants | decompose
    std::optional<std::string> builtin;
    std::optional<std::string> file;
    std::string format = "markdown";  // json | markdown
    std::string eig_width = "1/1000000000000000000000000000000";
    unsigned seed = 0;
    std::optional<int> degree;
    std::optional<std::string> family;     // M | Mtilde | Mbar
    std::optional<std::string> op;         // d | dLambda | dbar | mu | dbar-mu
    std::optional<std::string> form_json;  // decompose: inline form
    std::optional<std::string> form_file;  // decompose: form from file
};

// Exit codes: 0 success, 1 validation failure, 2 internal consistency
// failure (an exact identity has a nonzero defect), 3 I/O or usage error.
int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

}  // namespace ak::cli
