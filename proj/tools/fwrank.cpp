#include <CLI11.hpp>

#include <iostream>

#include "factorwidth/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Factor width membership, decompositions, and term-count bounds "
                 "for real PSD matrices"};
    app.require_subcommand(1);

    fw::cli::Command cmd;
    int k = 0;
    double s = 0.0;
    int n = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol-psd", cmd.tol.tol_psd, "relative PSD pivot tolerance");
        sub->add_option("--tol-recon", cmd.tol.tol_recon, "relative reconstruction tolerance");
        sub->add_option("--tol-zero", cmd.tol.tol_zero, "structural zero tolerance");
        sub->add_option("--max-iter", cmd.tol.max_iter, "solver iteration cap");
        sub->add_option("--budget", cmd.budget, "search node budget");
        sub->add_option("--seed", cmd.seed, "random seed");
        sub->add_option("--format", cmd.format, "output format: text|json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", cmd.jobs, "parallel workers over multiple input files");
    };

    auto* check = app.add_subcommand("check", "factor width and cone membership");
    check->add_option("inputs", cmd.inputs, "matrix file(s)")->required();
    check->add_option("--k", k, "membership width to test");
    add_common(check);

    auto* decompose = app.add_subcommand("decompose", "constructive width-k decomposition");
    decompose->add_option("inputs", cmd.inputs, "matrix file(s)")->required();
    decompose->add_option("--k", k, "target width (defaults to the computed factor width)");
    add_common(decompose);

    auto* bounds = app.add_subcommand("bounds", "term-count bounds report");
    bounds->add_option("inputs", cmd.inputs, "matrix file(s)")->required();
    bounds->add_option("--k", k, "width the bounds refer to (defaults to the factor width)");
    add_common(bounds);

    auto* cover = app.add_subcommand("cover", "minimum (n,k,2)-covering design");
    cover->add_option("--n", n, "ground set size")->required();
    cover->add_option("--k", k, "block size")->required();
    add_common(cover);

    auto* cliquecover = app.add_subcommand("cliquecover", "minimum k-clique edge covering");
    cliquecover->add_option("inputs", cmd.inputs, "graph file(s)")->required();
    cliquecover->add_option("--k", k, "clique size")->required();
    add_common(cliquecover);

    auto* hadamard = app.add_subcommand("hadamard", "entrywise product / power analysis");
    hadamard->add_option("inputs", cmd.inputs,
                         "one matrix (power, or minimal-power search without --s) or two "
                         "(product)")
        ->required();
    hadamard->add_option("--s", s, "entrywise power exponent");
    hadamard->add_option("--m-cap", cmd.m_cap, "minimal-power search cap");
    add_common(hadamard);

    auto* conjecture = app.add_subcommand("conjecture", "power-preservation counterexample search");
    conjecture->add_option("--n", n, "matrix dimension")->required();
    conjecture->add_option("--k", k, "factor width of the samples")->required();
    conjecture->add_option("--s", s, "non-integer exponent")->required();
    conjecture->add_option("--trials", cmd.trials, "number of sampled matrices");
    conjecture->add_option("--m-cap", cmd.m_cap, "power cap");
    add_common(conjecture);

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    cmd.verb = sub->get_name();
    auto passed = [&](const char* name) {
        const auto* opt = sub->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (passed("--k")) cmd.k = k;
    if (passed("--s")) cmd.s = s;
    if (passed("--n")) cmd.n = n;

    return fw::cli::run(cmd, std::cout, std::cerr);
}
