#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "factorwidth/sym_matrix.hpp"

namespace fw::cli {

/// Parsed command line. `verb` is one of check, decompose, bounds, cover,
/// cliquecover, hadamard, conjecture.
struct Command {
    std::string verb;
    std::vector<std::string> inputs;
    std::optional<int> k;
    std::optional<double> s;
    std::optional<int> n;
    ToleranceConfig tol;
    std::uint64_t budget = 10'000'000;
    long m_cap = 10'000;
    long trials = 100;
    std::uint64_t seed = 0;
    std::string format = "text";  // text | json
    int jobs = 1;
};

/// Exit codes: 0 success, 2 parse error, 3 precondition error,
/// 4 undetermined-only outcome. In json mode errors are emitted as a JSON
/// object on the error stream.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace fw::cli
