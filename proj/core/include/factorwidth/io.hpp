#pragma once

#include <iosfwd>
#include <string>

#include "factorwidth/sym_matrix.hpp"
#include "factorwidth/support_graph.hpp"

namespace fw {

/// Reads either matrix text format.
///
/// Dense:       line 1 holds n, lines 2..n+1 hold n whitespace-separated
///              decimals each. Symmetry is enforced with relative deviation
///              <= 1e-10; larger deviations are a parse error.
/// Coordinate:  header line `%SymCoord n m`, then m lines `i j value` with
///              1-based indices and i <= j.
SymMatrix parse_matrix(std::istream& in);
SymMatrix parse_matrix_file(const std::string& path);

/// Graph text format: line 1 `n m`, then m lines `i j` (1-based).
SupportGraph parse_graph(std::istream& in);
SupportGraph parse_graph_file(const std::string& path);

void write_matrix_dense(std::ostream& out, const SymMatrix& a);

/// Shortest decimal form that round-trips a double; used everywhere output
/// must be byte-identical across runs.
std::string format_double(double v);

}  // namespace fw
