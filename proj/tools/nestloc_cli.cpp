/* Command-line surface of the nested-instanton computation engine.  Every
 * subcommand prints one JSON document on standard output (or a text
 * rendering of the same data with --format text).
 *
 * Exit codes: 0 success, 1 usage or internal error, 2 a conjecture check
 * failed, 3 a closed-form/oracle discrepancy was logged. */

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "nestloc/api.hpp"

int main(int argc, char** argv) {
    CLI::App app{"nestloc - exact invariants of nested instanton moduli"};
    app.require_subcommand(1);

    nestloc::api::JobSpec spec;
    if (const char* env = std::getenv("NESTLOC_CACHE_DIR"))
        spec.cache_dir = env;

    std::string mu0_csv, y_at;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--rank", spec.rank, "framing rank r")->check(CLI::Range(1, 8));
        cmd->add_option("--profile", spec.profile, "numerical type n0,n1,...");
        cmd->add_option("--cache-dir", spec.cache_dir, "result cache directory");
        cmd->add_option("--jobs", spec.jobs, "parallel workers")->check(CLI::Range(1, 256));
        cmd->add_option("--format", spec.format, "json|text")
            ->check(CLI::IsMember({"json", "text"}));
        return cmd;
    };

    auto* enumerate = add_common(app.add_subcommand("enumerate", "list fixed points"));
    auto* tangent =
        add_common(app.add_subcommand("tangent", "virtual tangent characters"));
    auto* chivir = add_common(
        app.add_subcommand("chi-vir", "virtual holomorphic Euler characteristic"));
    chivir->add_option("--flavor", spec.flavor, "euler|chi_y");
    auto* chiy = add_common(app.add_subcommand("chi-y", "virtual chi_-y genus"));
    chiy->add_option("--y-at", y_at, "exact y specialization (integer or p/q)");
    auto* elliptic = add_common(app.add_subcommand("elliptic", "virtual elliptic genus"));
    elliptic->add_option("--qmax", spec.qmax, "nome truncation order")
        ->check(CLI::Range(0, 16));
    auto* extractp =
        add_common(app.add_subcommand("extract-p", "inner sums P and polynomiality"));
    extractp->add_option("--mu0", mu0_csv, "outer partition parts, e.g. 2,1");

    auto* conjecture = app.add_subcommand("conjecture", "machine conjecture checks");
    conjecture->require_subcommand(1);
    auto* cpoly = add_common(conjecture->add_subcommand("poly", "polynomiality sweep"));
    cpoly->add_option("--nmax", spec.nmax, "largest outer size");
    cpoly->add_option("--levels", spec.levels, "deepest nesting");
    auto* cmac = add_common(
        conjecture->add_subcommand("macdonald", "staircase Kostka-sum comparison"));
    cmac->add_option("--nmax", spec.nmax, "largest outer size");

    auto* toric = add_common(app.add_subcommand("toric", "surface generating functions"));
    toric->add_option("--surface", spec.surface, "p2|p1xp1")
        ->check(CLI::IsMember({"p2", "p1xp1"}));
    toric->add_option("--nmax", spec.nmax, "total size bound");
    toric->add_option("--levels", spec.levels, "nesting depth");

    auto* macmahon =
        add_common(app.add_subcommand("macmahon", "stacked chain counts vs plane partitions"));
    macmahon->add_option("--nmax", spec.nmax, "largest order");

    auto* smooth = add_common(
        app.add_subcommand("smooth-nested", "counting limits of one-box nestings"));
    smooth->add_option("--nmax", spec.nmax, "largest outer size");

    CLI11_PARSE(app, argc, argv);

    if (enumerate->parsed())
        spec.command = "enumerate";
    else if (tangent->parsed())
        spec.command = "tangent";
    else if (chivir->parsed())
        spec.command = "chi-vir";
    else if (chiy->parsed()) {
        spec.command = "chi-y";
        spec.flavor = "chi_y";
    } else if (elliptic->parsed())
        spec.command = "elliptic";
    else if (extractp->parsed())
        spec.command = "extract-p";
    else if (conjecture->parsed())
        spec.command = cpoly->parsed() ? "conjecture poly" : "conjecture macdonald";
    else if (toric->parsed())
        spec.command = "toric";
    else if (macmahon->parsed())
        spec.command = "macmahon";
    else if (smooth->parsed())
        spec.command = "smooth-nested";

    if (!mu0_csv.empty())
        spec.mu0 = mu0_csv;
    if (!y_at.empty())
        spec.y_at = y_at;

    try {
        auto result = nestloc::api::run(spec);
        std::cout << result.output;
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "nestloc: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "nestloc: internal error: " << e.what() << "\n";
        return 1;
    }
}
