#include "commands.hpp"

#include "dwork/error.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_field(CLI::App* cmd, dworkcli::FieldArgs& f)
{
    cmd->add_option("--p", f.p, "characteristic")->required();
    cmd->add_option("--e", f.e, "extension degree, q = p^e")->check(CLI::Range(1u, 24u));
    cmd->add_option("--generator-rank", f.generator_rank, "use the k-th primitive element in index order");
    cmd->add_option("--zeta-root", f.zeta_root, "additive character exp(2 pi i r tr(x)/p)")->check(CLI::Range(1u, 1u << 30));
}

int exit_for(const dwork::Error& e)
{
    using dwork::ErrorCode;
    switch (e.code()) {
    case ErrorCode::Io:
    case ErrorCode::CacheFormat:
        return dworkcli::Exit::io;
    default:
        return dwork::is_precondition(e.code()) ? dworkcli::Exit::usage : dworkcli::Exit::verification_failed;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Point counts on Dwork hypersurfaces over finite fields"};
    app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();

    dworkcli::Common common;
    app.add_option("--cache-dir", common.cache_dir, "directory for cached Gauss sum tables")->envname("DWORK_CACHE_DIR");
    app.add_option("--guard", common.guard, "max distance from an integer before rounding fails")
        ->check(CLI::Range(0.0, 0.5));
    app.add_option("--tol", common.tol, "relative tolerance override for identity checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", common.seed, "seed for randomized checks");
    app.add_option("--threads", common.threads, "worker threads, 0 for hardware concurrency");

    dworkcli::CountArgs count;
    auto* c = app.add_subcommand("count", "count points on X_lambda");
    c->add_option("--d", count.d, "degree")->required()->check(CLI::Range(2u, 12u));
    add_field(c, count.field);
    c->add_option("--lambda", count.lambda, "lambda as a field element index")->required();
    c->add_option("--method", count.method)
        ->check(CLI::IsMember({"brute", "koblitz", "theorem11", "threefold", "decompose", "all"}));
    c->add_option("--format", count.format)->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_flag("--conjecture", count.conjecture, "allow decompose for even d");

    dworkcli::VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "run an identity suite over a parameter grid");
    v->add_option("--suite", verify.suite)
        ->required()
        ->check(CLI::IsMember(
            {"hasse-davenport", "prop31", "thm32", "greene-defs", "koike", "igusa", "cancellation"}));
    v->add_option("--d", verify.d)->check(CLI::Range(2u, 12u));
    v->add_option("--p", verify.p);
    v->add_option("--e", verify.e)->check(CLI::Range(1u, 24u));
    v->add_option("--qmax", verify.qmax);
    v->add_option("--pmax", verify.pmax);
    v->add_option("--n", verify.n, "random instances per grid cell");
    v->add_flag("--verbose", verify.verbose, "print every check");

    dworkcli::CosetsArgs cosets;
    auto* k = app.add_subcommand("cosets", "coset classes of W/W_ss");
    k->add_option("--d", cosets.d)->required();
    k->add_flag("--classify", cosets.classify, "predicted hypergeometric term shapes");
    k->add_flag("--list", cosets.list, "list every coset (d <= 8)");
    k->add_option("--format", cosets.format)->check(CLI::IsMember({"text", "json"}));

    dworkcli::TableArgs table;
    auto* t = app.add_subcommand("table", "per-lambda counts with per-class contributions");
    t->add_option("--d", table.d)->required()->check(CLI::Range(2u, 12u));
    add_field(t, table.field);
    t->add_option("--lambda-min", table.lambda_min);
    t->add_option("--lambda-max", table.lambda_max);
    t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
    t->add_option("--out", table.out);
    t->add_flag("--verify", table.verify, "compare every row with brute force");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? dworkcli::Exit::ok : dworkcli::Exit::usage;
    }

    try {
        if (c->parsed())
            return dworkcli::cmd_count(count, common, std::cout);
        if (v->parsed())
            return dworkcli::cmd_verify(verify, common, std::cout);
        if (k->parsed())
            return dworkcli::cmd_cosets(cosets, std::cout);
        if (t->parsed())
            return dworkcli::cmd_table(table, common, std::cout);
    } catch (const dwork::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return dworkcli::Exit::io;
    }
    return dworkcli::Exit::usage;
}
