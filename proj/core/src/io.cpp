#include "factorwidth/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace fw {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { raise(ErrorCode::ParseError, what); }

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first != std::string::npos) return line;
    }
    return {};
}

}  // namespace

SymMatrix parse_matrix(std::istream& in) {
    std::string header = next_content_line(in);
    if (header.empty()) parse_fail("empty matrix file");

    std::istringstream hs(header);
    std::string tag;
    hs >> tag;

    if (tag == "%SymCoord") {
        int n = 0;
        long m = -1;
        if (!(hs >> n >> m) || n < 1 || m < 0) parse_fail("bad %SymCoord header");
        SymMatrix a(n);
        std::vector<char> seen(SymMatrix::packed_size(n), 0);
        for (long e = 0; e < m; ++e) {
            int i = 0, j = 0;
            double v = 0.0;
            if (!(in >> i >> j >> v)) parse_fail("truncated coordinate entry");
            if (i < 1 || j < 1 || i > n || j > n) parse_fail("coordinate index out of range");
            if (i > j) parse_fail("coordinate entries must satisfy i <= j");
            const std::size_t slot =
                static_cast<std::size_t>(i - 1) * (2 * n - i) / 2 + (j - 1);
            if (seen[slot]) parse_fail("duplicate coordinate entry");
            seen[slot] = 1;
            a.set(i - 1, j - 1, v);
        }
        return a;
    }

    int n = 0;
    {
        std::istringstream ns(header);
        if (!(ns >> n) || n < 1) parse_fail("bad dimension line");
        std::string extra;
        if (ns >> extra) parse_fail("unexpected tokens after dimension");
    }
    std::vector<double> dense(static_cast<std::size_t>(n) * n);
    for (std::size_t t = 0; t < dense.size(); ++t)
        if (!(in >> dense[t])) parse_fail("truncated dense matrix body");

    double scale = 0.0;
    for (double v : dense) scale = std::max(scale, std::fabs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = std::fabs(dense[static_cast<std::size_t>(i) * n + j] -
                                       dense[static_cast<std::size_t>(j) * n + i]);
            if (d > 1e-10 * scale) parse_fail("matrix is not symmetric");
        }
    return SymMatrix::from_dense(n, dense);
}

SymMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open matrix file: " + path);
    return parse_matrix(in);
}

SupportGraph parse_graph(std::istream& in) {
    int n = 0;
    long m = -1;
    if (!(in >> n >> m) || n < 1 || m < 0) parse_fail("bad graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e) {
        int i = 0, j = 0;
        if (!(in >> i >> j)) parse_fail("truncated edge list");
        if (i < 1 || j < 1 || i > n || j > n) parse_fail("edge endpoint out of range");
        if (i == j) parse_fail("self-loops are not allowed");
        edges.emplace_back(i - 1, j - 1);
    }
    try {
        return SupportGraph(n, std::move(edges));
    } catch (const Error&) {
        parse_fail("invalid edge set (duplicate edge?)");
    }
}

SupportGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_double(double v) {
    if (v == 0.0) return "0";  // avoid "-0"
    char buf[64];
    // Shortest representation that parses back to the same double.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

void write_matrix_dense(std::ostream& out, const SymMatrix& a) {
    out << a.dim() << '\n';
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (j) out << ' ';
            out << format_double(a(i, j));
        }
        out << '\n';
    }
}

}  // namespace fw
