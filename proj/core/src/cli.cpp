#include "factorwidth/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <future>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "factorwidth/bounds.hpp"
#include "factorwidth/covering.hpp"
#include "factorwidth/decompose.hpp"
#include "factorwidth/hadamard.hpp"
#include "factorwidth/io.hpp"
#include "factorwidth/matrix_ops.hpp"
#include "factorwidth/membership.hpp"
#include "factorwidth/support_graph.hpp"

namespace fw::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitUndetermined = 4;

json one_based(const std::vector<int>& indices) {
    json arr = json::array();
    for (int i : indices) arr.push_back(i + 1);
    return arr;
}

json decomposition_json(const FWDecomposition& dec) {
    json terms = json::array();
    for (const auto& v : dec.vectors)
        terms.push_back({{"support", one_based(v.support)}, {"values", v.values}});
    return {{"k", dec.k}, {"terms", terms}, {"residual", dec.residual}};
}

json bounds_json(const BoundsReport& rep) {
    json lower = json::array();
    for (const auto& e : rep.lower) lower.push_back({{"value", e.value}, {"source", e.source}});
    json upper = json::array();
    for (const auto& e : rep.upper) upper.push_back({{"value", e.value}, {"source", e.source}});
    json out{{"k", rep.k}, {"lower", lower}, {"upper", upper}, {"notes", rep.notes}};
    out["exact"] = rep.exact ? json(*rep.exact) : json(nullptr);
    return out;
}

json matrix_json(const SymMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.dim(); ++j) row.push_back(a(i, j));
        rows.push_back(row);
    }
    return rows;
}

struct VerbResult {
    json report;
    int exit_code = kExitOk;
    std::string jsonl;  // conjecture trial stream, already serialized
};

VerbResult run_check(const Command& cmd, const std::string& path) {
    VerbResult res;
    const SymMatrix a = parse_matrix_file(path);
    const FactorWidthResult width = factor_width(a, cmd.tol);
    res.report = {{"verb", "check"},
                  {"input", path},
                  {"n", a.dim()},
                  {"width",
                   {{"value", width.width},
                    {"exactness", width.exactness == Exactness::Exact ? "exact" : "numeric"},
                    {"bracket", {width.bracket_lo, width.bracket_hi}}}}};
    if (!width.determined()) res.exit_code = kExitUndetermined;

    if (cmd.k) {
        const MembershipVerdict verdict = membership(a, *cmd.k, cmd.tol);
        json m{{"k", *cmd.k},
               {"status", membership_name(verdict.status)},
               {"distance", verdict.distance_estimate},
               {"iterations", verdict.iterations_used}};
        if (verdict.certificate) m["certificate_terms"] = verdict.certificate->term_count();
        if (verdict.witness) m["witness_inner_product"] = verdict.witness->inner_product;
        res.report["membership"] = m;
        res.exit_code =
            verdict.status == Membership::Undetermined ? kExitUndetermined : kExitOk;
    }
    return res;
}

VerbResult run_decompose(const Command& cmd, const std::string& path) {
    VerbResult res;
    const SymMatrix a = parse_matrix_file(path);

    int k = 0;
    if (cmd.k) {
        k = *cmd.k;
    } else {
        const FactorWidthResult width = factor_width(a, cmd.tol);
        k = width.bracket_hi;  // certified width even when undetermined below
    }

    std::string method;
    std::optional<FWDecomposition> dec;
    auto attempt = [&](const char* tag, auto&& op) {
        if (dec) return;
        try {
            dec = op();
            method = tag;
        } catch (const Error&) {
        }
    };
    if (bandwidth(a, cmd.tol) <= k)
        attempt("banded", [&] { return decompose_banded(a, k, cmd.tol); });
    if (k >= 2) attempt("arrowhead", [&] { return decompose_arrowhead(a, cmd.tol); });
    if (k >= 2) {
        attempt("block-overlap", [&] {
            const SupportGraph g = support_graph(a, cmd.tol);
            std::vector<int> cuts;
            int lo = 0;
            const int n = a.dim();
            const double thr = cmd.tol.tol_zero * a.max_abs();
            auto block_ok = [&](int from, int to) {
                for (int i = from; i <= to; ++i) {
                    if (a(i, i) <= thr) return false;
                    for (int j = i + 1; j <= to; ++j)
                        if (std::fabs(a(i, j)) <= thr) return false;
                }
                return true;
            };
            while (lo < n - 1) {
                int hi = lo + 1;
                if (!block_ok(lo, hi)) raise(ErrorCode::BadBlockStructure, "no block chain");
                while (hi + 1 < n && block_ok(lo, hi + 1)) ++hi;
                if (hi == n - 1) break;
                cuts.push_back(hi);
                lo = hi;
            }
            if (cuts.empty()) raise(ErrorCode::BadBlockStructure, "single block");
            return decompose_block_overlap(a, cuts, cmd.tol);
        });
        attempt("fw2-optimal", [&] { return decompose_fw2_optimal(a, cmd.tol); });
    }
    if (!dec) {
        const MembershipVerdict verdict = membership(a, k, cmd.tol);
        if (verdict.status == Membership::Member) {
            dec = verdict.certificate;
            method = "membership";
        } else {
            res.report = {{"verb", "decompose"},
                          {"input", path},
                          {"n", a.dim()},
                          {"k", k},
                          {"status", membership_name(verdict.status)},
                          {"distance", verdict.distance_estimate}};
            res.exit_code = verdict.status == Membership::Undetermined ? kExitUndetermined
                                                                       : kExitPrecondition;
            return res;
        }
    }

    res.report = {{"verb", "decompose"}, {"input", path},     {"n", a.dim()},
                  {"k", k},              {"method", method},  {"status", "member"},
                  {"decomposition", decomposition_json(*dec)}};
    return res;
}

VerbResult run_bounds(const Command& cmd, const std::string& path) {
    VerbResult res;
    const SymMatrix a = parse_matrix_file(path);
    const int k = cmd.k ? *cmd.k : factor_width(a, cmd.tol).bracket_hi;

    const BoundsReport rep = bounds_report(a, k, cmd.tol, cmd.budget);
    res.report = {{"verb", "bounds"},
                  {"input", path},
                  {"n", a.dim()},
                  {"k", k},
                  {"report", bounds_json(rep)}};
    if (a.dim() <= 4) {
        const SmallFranResult small = fran_exact_small(a, cmd.tol, cmd.budget);
        res.report["small_exact"] = {{"k", small.k},
                                     {"exact", small.exact},
                                     {"lo", small.lo},
                                     {"hi", small.hi},
                                     {"trace", small.trace}};
    }
    return res;
}

VerbResult run_cover(const Command& cmd) {
    VerbResult res;
    if (!cmd.n || !cmd.k) raise(ErrorCode::BadArgs, "cover requires --n and --k");
    const CoverResult cover = covering_number(*cmd.n, *cmd.k, cmd.budget);
    json blocks = json::array();
    for (const auto& b : cover.design.blocks) blocks.push_back(one_based(b));
    res.report = {{"verb", "cover"},         {"n", *cmd.n},
                  {"k", *cmd.k},             {"value", cover.value},
                  {"certified", cover.certified}, {"nodes", cover.nodes_expanded},
                  {"schonheim", schonheim_bound(*cmd.n, *cmd.k)}, {"design", blocks}};
    return res;
}

VerbResult run_cliquecover(const Command& cmd, const std::string& path) {
    VerbResult res;
    if (!cmd.k) raise(ErrorCode::BadArgs, "cliquecover requires --k");
    const SupportGraph g = parse_graph_file(path);
    const CliqueCoverResult cc = clique_cover_number(g, *cmd.k, cmd.budget);
    json cliques = json::array();
    for (const auto& c : cc.cover.cliques) cliques.push_back(one_based(c));
    res.report = {{"verb", "cliquecover"}, {"input", path},
                  {"n", g.vertex_count()}, {"edges", g.edge_count()},
                  {"k", *cmd.k},           {"value", cc.value},
                  {"certified", cc.certified}, {"nodes", cc.nodes_expanded},
                  {"cover", cliques}};
    return res;
}

VerbResult run_hadamard(const Command& cmd) {
    VerbResult res;
    if (cmd.inputs.empty()) raise(ErrorCode::BadArgs, "hadamard requires at least one matrix");
    if (cmd.inputs.size() > 2) raise(ErrorCode::BadArgs, "hadamard takes at most two matrices");
    const bool product = cmd.inputs.size() == 2;
    if (product && cmd.s) raise(ErrorCode::BadArgs, "--s does not apply to a product");

    if (!product && !cmd.s) {
        // Single matrix, no exponent: find the smallest power with width 2.
        const SymMatrix m = parse_matrix_file(cmd.inputs[0]);
        const MinimalPowerResult mp = minimal_power_to_fw2(m, cmd.m_cap, cmd.tol);
        res.report = {{"verb", "hadamard"},
                      {"operation", "minimal_power"},
                      {"inputs",
                       json::array({{{"path", cmd.inputs[0]},
                                     {"n", m.dim()},
                                     {"width", factor_width(m, cmd.tol).bracket_hi},
                                     {"rank", is_psd(m, cmd.tol).rank}}})},
                      {"m_cap", cmd.m_cap},
                      {"minimal_power",
                       {{"first_success", mp.first_success},
                        {"verified_through", mp.verified_through}}}};
        return res;
    }

    json inputs = json::array();
    std::vector<SymMatrix> mats;
    std::vector<int> widths;
    for (const auto& path : cmd.inputs) {
        SymMatrix m = parse_matrix_file(path);
        const FactorWidthResult width = factor_width(m, cmd.tol);
        widths.push_back(width.bracket_hi);
        inputs.push_back({{"path", path},
                          {"n", m.dim()},
                          {"width", width.bracket_hi},
                          {"rank", is_psd(m, cmd.tol).rank}});
        mats.push_back(std::move(m));
    }

    SymMatrix result(0);
    std::string operation;
    if (product) {
        result = hadamard_product(mats[0], mats[1]);
        operation = "product";
    } else {
        result = hadamard_power(mats[0], *cmd.s, cmd.tol);
        operation = *cmd.s == std::floor(*cmd.s) ? "integer_power" : "real_power";
    }

    const int k = product ? std::max(widths[0], widths[1]) : widths[0];
    json claim(nullptr);
    std::string justification;
    json fran_bound(nullptr);
    auto min_upper = [&](const SymMatrix& m) {
        long best = static_cast<long>(m.dim()) * (m.dim() + 1) / 2;
        for (const auto& e : fran_upper_bounds(m, k, cmd.tol, cmd.budget))
            best = std::min(best, e.value);
        return best;
    };
    if (product) {
        claim = k;
        justification = "product-closure";
        fran_bound = fran_product_bound(min_upper(mats[0]), min_upper(mats[1]));
    } else if (operation == "integer_power") {
        claim = k;
        justification = "integer-power";
        fran_bound = fran_power_bound(min_upper(mats[0]), static_cast<long>(*cmd.s));
    } else {
        const PowerRule rule = power_preserves_width(mats[0], k, *cmd.s, cmd.tol);
        justification = rule.rule;
        if (rule.verdict == PowerVerdict::Guaranteed) claim = k;
    }

    const CholeskyResult psd = is_psd(result, cmd.tol);
    res.report = {{"verb", "hadamard"},
                  {"operation", operation},
                  {"inputs", inputs},
                  {"result",
                   {{"n", result.dim()},
                    {"psd", psd.success},
                    {"rank", psd.rank},
                    {"width_claim", claim},
                    {"justification", justification},
                    {"fran_bound", fran_bound}}}};
    if (cmd.s) res.report["s"] = *cmd.s;
    if (cmd.format == "json") res.report["result"]["matrix"] = matrix_json(result);
    return res;
}

VerbResult run_conjecture(const Command& cmd) {
    VerbResult res;
    if (!cmd.n || !cmd.k || !cmd.s)
        raise(ErrorCode::BadArgs, "conjecture requires --n, --k and --s");
    const ConjectureSearchResult search =
        conjecture_search(*cmd.n, *cmd.k, *cmd.s, cmd.trials, cmd.seed, cmd.tol);

    std::ostringstream lines;
    for (const auto& trial : search.trials) {
        const json rec{{"trial", trial.trial},
                       {"seed", trial.seed},
                       {"verdict", trial.verdict},
                       {"residual", trial.residual},
                       {"counterexample", trial.counterexample}};
        lines << rec.dump() << '\n';
    }
    res.jsonl = lines.str();
    res.report = {{"verb", "conjecture"},
                  {"n", *cmd.n},
                  {"k", *cmd.k},
                  {"s", *cmd.s},
                  {"seed", cmd.seed},
                  {"tested", search.tested},
                  {"counterexamples", static_cast<long>(search.counterexamples.size())}};
    return res;
}

void render_text(std::ostream& out, const json& j, int indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            out << pad << key << ":\n";
            render_text(out, value, indent + 2);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out << pad << key << ":\n";
            for (const auto& item : value) {
                out << pad << "  -\n";
                render_text(out, item, indent + 4);
            }
        } else {
            out << pad << key << ": " << (value.is_string() ? value.get<std::string>()
                                                            : value.dump())
                << '\n';
        }
    }
}

void emit(const Command& cmd, std::ostream& out, const VerbResult& res) {
    if (!res.jsonl.empty() && cmd.format == "json") out << res.jsonl;
    if (cmd.format == "json") {
        out << res.report.dump(2) << '\n';
    } else {
        render_text(out, res.report, 0);
    }
}

VerbResult dispatch_file(const Command& cmd, const std::string& path) {
    if (cmd.verb == "check") return run_check(cmd, path);
    if (cmd.verb == "decompose") return run_decompose(cmd, path);
    if (cmd.verb == "bounds") return run_bounds(cmd, path);
    if (cmd.verb == "cliquecover") return run_cliquecover(cmd, path);
    raise(ErrorCode::BadArgs, "unknown verb: " + cmd.verb);
}

int error_exit_code(const Error& e) {
    return e.code() == ErrorCode::ParseError ? kExitParse : kExitPrecondition;
}

void emit_error(const Command& cmd, std::ostream& err, const Error& e) {
    if (cmd.format == "json") {
        err << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump() << '\n';
    } else {
        err << "error: " << e.what() << '\n';
    }
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        cmd.tol.validate();
        if (cmd.format != "text" && cmd.format != "json")
            raise(ErrorCode::BadArgs, "format must be text or json");

        if (cmd.verb == "cover" || cmd.verb == "hadamard" || cmd.verb == "conjecture") {
            VerbResult res;
            if (cmd.verb == "cover")
                res = run_cover(cmd);
            else if (cmd.verb == "hadamard")
                res = run_hadamard(cmd);
            else
                res = run_conjecture(cmd);
            emit(cmd, out, res);
            return res.exit_code;
        }

        if (cmd.inputs.empty()) raise(ErrorCode::BadArgs, cmd.verb + " requires an input file");

        // Per-file isolation: each input produces its own report; failures
        // surface per file and the worst exit code wins.
        std::vector<VerbResult> results(cmd.inputs.size());
        std::vector<std::optional<Error>> failures(cmd.inputs.size());
        const int jobs = std::max(1, cmd.jobs);
        if (jobs == 1 || cmd.inputs.size() == 1) {
            for (std::size_t t = 0; t < cmd.inputs.size(); ++t) {
                try {
                    results[t] = dispatch_file(cmd, cmd.inputs[t]);
                } catch (const Error& e) {
                    failures[t] = e;
                }
            }
        } else {
            std::vector<std::future<void>> tasks;
            std::size_t next = 0;
            std::mutex mtx;
            for (int w = 0; w < jobs; ++w)
                tasks.push_back(std::async(std::launch::async, [&] {
                    while (true) {
                        std::size_t mine;
                        {
                            std::lock_guard<std::mutex> lock(mtx);
                            if (next >= cmd.inputs.size()) return;
                            mine = next++;
                        }
                        try {
                            results[mine] = dispatch_file(cmd, cmd.inputs[mine]);
                        } catch (const Error& e) {
                            failures[mine] = e;
                        }
                    }
                }));
            for (auto& task : tasks) task.get();
        }

        int exit_code = kExitOk;
        for (std::size_t t = 0; t < cmd.inputs.size(); ++t) {
            if (failures[t]) {
                emit_error(cmd, err, *failures[t]);
                exit_code = std::max(exit_code, error_exit_code(*failures[t]));
            } else {
                emit(cmd, out, results[t]);
                exit_code = std::max(exit_code, results[t].exit_code);
            }
        }
        return exit_code;
    } catch (const Error& e) {
        emit_error(cmd, err, e);
        return error_exit_code(e);
    }
}

}  // namespace fw::cli
