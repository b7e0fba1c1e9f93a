#include "commands.hpp"

#include "dwork/count.hpp"
#include "dwork/error.hpp"
#include "dwork/identities.hpp"
#include "dwork/oracle.hpp"
#include "dwork/parallel.hpp"
#include "dwork/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

using namespace dwork;
using nlohmann::json;

namespace dworkcli {

namespace {

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fixed6(double v)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

template <class V>
std::string tuple_text(const V& w, char sep = ',')
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(w[i]);
    }
    return s;
}

std::shared_ptr<const Context> make_context(std::uint32_t p, std::uint32_t e, std::uint32_t rank, std::uint32_t root,
                                            const Common& common)
{
    FieldOptions fo;
    fo.generator_rank = rank;
    ContextOptions co;
    co.zeta_root = root;
    if (common.cache_dir)
        co.cache_dir = *common.cache_dir;
    return Context::create(Field::build(p, e, fo), co);
}

std::shared_ptr<const Context> make_context(const FieldArgs& f, const Common& common)
{
    return make_context(f.p, f.e, f.generator_rank, f.zeta_root, common);
}

json params_json(const Context& ctx, std::uint32_t d)
{
    const Field& f = ctx.field();
    return {{"d", d},
            {"p", f.p()},
            {"e", f.e()},
            {"q", f.q()},
            {"modulus", f.modulus()},
            {"generator", f.generator().v},
            {"zeta_root", ctx.chars().zeta_root()}};
}

std::vector<std::uint32_t> prime_powers(std::uint32_t lo, std::uint32_t hi)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = lo; q <= hi; ++q) {
        const auto f = prime_factors(q);
        if (f.size() == 1)
            out.push_back(q);
    }
    return out;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint32_t q)
{
    const auto f = prime_factors(q);
    std::uint32_t e = 0;
    for (std::uint32_t v = q; v > 1; v /= static_cast<std::uint32_t>(f[0]))
        ++e;
    return {static_cast<std::uint32_t>(f[0]), e};
}

} // namespace

// ---------------------------------------------------------------------------- count

int cmd_count(const CountArgs& args, const Common& common, std::ostream& out)
{
    auto ctx = make_context(args.field, common);
    const Field& f = ctx->field();
    if (args.d < 2)
        throw Error(ErrorCode::InvalidParams, "d must be at least 2");
    const std::uint32_t d = args.d;
    const Elem lam = f.element(args.lambda);
    const bool all = args.method == "all";
    if (args.method != "brute")
        step_for(f, d);
    if (all && lam.v == 0)
        throw Error(ErrorCode::LambdaZero, "the formula methods need lambda != 0");

    std::vector<CountReport> reports;
    std::vector<HGFTerm> terms;
    std::optional<Decomposition> dec;
    std::optional<Theorem11Result> t11;
    std::vector<std::string> notes;

    auto run = [&](const std::string& m) {
        if (m == "brute") {
            const auto c = brute_projective_count(f, d, lam);
            CountReport r;
            r.method = Method::brute;
            r.raw = static_cast<double>(c);
            r.count = static_cast<std::int64_t>(c);
            r.d = d;
            r.q = f.q();
            r.lambda = lam;
            reports.push_back(r);
        } else if (m == "koblitz") {
            reports.push_back(koblitz_count(*ctx, d, lam, common.guard));
        } else if (m == "theorem11") {
            t11 = theorem11_count(*ctx, d, lam, common.guard);
            reports.push_back(t11->report);
        } else if (m == "threefold") {
            if (d != 5)
                throw Error(ErrorCode::InvalidParams, "the threefold formula needs d = 5");
            auto r = threefold_count(*ctx, lam, common.guard);
            reports.push_back(r.report);
            if (terms.empty())
                terms = std::move(r.terms);
        } else if (m == "decompose") {
            DecomposeOptions o;
            o.conjecture_mode = args.conjecture;
            o.guard = common.guard;
            if (common.tol)
                o.cancel_tol = *common.tol;
            dec = decompose(*ctx, d, lam, o);
            reports.push_back(dec->report);
            terms = dec->terms;
            if (!dec->cancelled)
                notes.push_back("leftover cancellation failed: residual " + sci(dec->cancellation_residual));
        }
    };

    if (all) {
        run("brute");
        run("koblitz");
        run("theorem11");
        if (d == 5)
            run("threefold");
        if (f.pow(lam, d) == f.one())
            notes.push_back("decompose skipped: lambda^d = 1");
        else if (d % 2 == 0 && !args.conjecture)
            notes.push_back("decompose skipped: even d needs --conjecture");
        else
            run("decompose");
    } else {
        run(args.method);
    }
    if (t11 && t11->literal_residual >= common.guard)
        notes.push_back("theorem11 verbatim four-term expression is off by " + num(t11->literal_residual));

    const bool agree = std::all_of(reports.begin(), reports.end(),
                                   [&](const CountReport& r) { return r.count == reports.front().count; });
    if (!agree)
        notes.push_back("methods disagree");

    if (args.format == "json") {
        json doc;
        doc["params"] = params_json(*ctx, d);
        doc["params"]["lambda"] = lam.v;
        doc["totals"] = reports;
        doc["terms"] = terms;
        json residuals = json::object();
        double worst = 0.0;
        for (const auto& r : reports)
            worst = std::max(worst, r.residual);
        residuals["rounding_max"] = worst;
        if (dec) {
            residuals["cancellation"] = dec->cancellation_residual;
            residuals["cancellation_scale"] = dec->cancellation_scale;
            doc["traces"] = dec->traces;
        }
        if (t11)
            residuals["theorem11_literal"] = t11->literal_residual;
        doc["residuals"] = residuals;
        doc["agree"] = agree;
        doc["notes"] = notes;
        out << doc.dump(2) << '\n';
    } else if (args.format == "csv") {
        out << "method,count,raw_re,raw_im,residual\n";
        for (const auto& r : reports)
            out << to_string(r.method) << ',' << r.count << ',' << num(r.raw.real()) << ',' << num(r.raw.imag()) << ','
                << num(r.residual) << '\n';
    } else {
        out << "d=" << d << " p=" << f.p() << " e=" << f.e() << " q=" << f.q() << " lambda=" << lam.v << '\n';
        out << std::left << std::setw(12) << "method" << std::right << std::setw(14) << "count" << "  residual\n";
        for (const auto& r : reports)
            out << std::left << std::setw(12) << to_string(r.method) << std::right << std::setw(14) << r.count << "  "
                << sci(r.residual) << '\n';
        if (!terms.empty()) {
            out << "terms:\n";
            for (const auto& t : terms) {
                out << "  " << std::left << std::setw(15) << to_string(t.kind) << std::right;
                if (!t.source_class.empty())
                    out << " class (" << tuple_text(t.source_class) << ")";
                out << " x" << t.multiplicity;
                if (t.params)
                    out << " top [" << tuple_text(t.params->top) << "] bottom ["
                        << tuple_text(t.params->bottom) << "]";
                out << " value " << fixed6(t.value.real()) << '\n';
            }
        }
        if (dec)
            out << "cancellation residual " << sci(dec->cancellation_residual) << " (scale "
                << num(dec->cancellation_scale) << ")\n";
        for (const auto& n : notes)
            out << "note: " << n << '\n';
        if (reports.size() > 1)
            out << (agree ? "all methods agree\n" : "METHODS DISAGREE\n");
    }
    return agree ? Exit::ok : Exit::verification_failed;
}

// ---------------------------------------------------------------------------- verify

namespace {

struct Cell {
    explicit Cell(std::string l) : label(std::move(l)) {}

    std::string label;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst = 0.0; // max residual / scale
    std::vector<std::string> detail;

    void add(const IdentityReport& r, const std::string& what, bool verbose)
    {
        ++checks;
        if (!r.passed)
            ++failures;
        worst = std::max(worst, r.residual / r.scale);
        if (verbose || !r.passed)
            detail.push_back(std::string(r.passed ? "  pass " : "  FAIL ") + what + " residual=" + sci(r.residual)
                             + " scale=" + sci(r.scale));
    }

    void add(bool passed, const std::string& what, bool verbose)
    {
        ++checks;
        if (!passed)
            ++failures;
        if (verbose || !passed)
            detail.push_back(std::string(passed ? "  pass " : "  FAIL ") + what);
    }
};

using CellFn = std::function<Cell()>;

int run_cells(const std::string& suite, std::vector<CellFn> cells, const Common& common, std::ostream& out)
{
    auto results = parallel_map(cells.size(), [&](std::size_t i) { return cells[i](); }, common.threads);
    std::size_t checks = 0, failures = 0;
    double worst = 0.0;
    for (const auto& c : results) {
        out << (c.failures ? "FAIL " : "PASS ") << suite << ' ' << c.label << " checks=" << c.checks
            << " max_rel_residual=" << sci(c.worst) << '\n';
        for (const auto& line : c.detail)
            out << line << '\n';
        checks += c.checks;
        failures += c.failures;
        worst = std::max(worst, c.worst);
    }
    out << suite << ": " << (failures ? "FAIL" : "PASS") << " cells=" << results.size() << " checks=" << checks
        << " failures=" << failures << " max_rel_residual=" << sci(worst) << '\n';
    return failures ? Exit::verification_failed : Exit::ok;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> grid(const VerifyArgs& a,
                                                          std::vector<std::pair<std::uint32_t, std::uint32_t>> dflt)
{
    if (a.d.has_value() != a.p.has_value())
        throw Error(ErrorCode::InvalidParams, "give both --d and --p, or neither");
    if (a.d)
        return {{*a.d, *a.p}};
    return dflt;
}

} // namespace

int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out)
{
    const bool v = args.verbose;
    std::vector<CellFn> cells;
    auto tol = [&](double dflt) { return common.tol.value_or(dflt); };

    if (args.suite == "hasse-davenport") {
        for (std::uint32_t q : prime_powers(3, args.qmax)) {
            const auto [p, e] = split_prime_power(q);
            for (std::uint32_t m = 2; m <= 5; ++m) {
                if ((q - 1) % m != 0)
                    continue;
                cells.push_back([=, &common] {
                    auto ctx = make_context(p, e, 0, 1, common);
                    Cell c("q=" + std::to_string(q) + " m=" + std::to_string(m));
                    for (std::int64_t j = 0; j < q - 1; ++j)
                        c.add(hasse_davenport_check(ctx->chars(), ctx->gauss(), m, j, tol(1e-7)),
                              "psi=T^" + std::to_string(j), v);
                    return c;
                });
            }
        }
    } else if (args.suite == "prop31") {
        std::vector<std::uint32_t> ps = args.p ? std::vector<std::uint32_t>{*args.p} : std::vector<std::uint32_t>{13, 17, 29};
        for (std::uint32_t p : ps)
            cells.push_back([=, &common] {
                auto ctx = make_context(p, args.e, 0, 1, common);
                const Field& f = ctx->field();
                const std::int64_t t = step_for(f, 4);
                Cell c("q=" + std::to_string(f.q()));
                for (std::int64_t a = 0; a < f.units(); a += t)
                    for (std::int64_t b = 0; b < f.units(); b += t)
                        for (std::uint32_t l = 1; l < f.q(); ++l) {
                            if (f.pow(Elem{l}, 4) == f.one())
                                continue;
                            c.add(prop31_check(*ctx, a, b, Elem{l}, tol(1e-6)),
                                  "a=" + std::to_string(a) + " b=" + std::to_string(b) + " lambda=" + std::to_string(l), v);
                        }
                return c;
            });
    } else if (args.suite == "thm32") {
        for (auto [d, p] : grid(args, {{3, 7}, {4, 13}, {5, 11}}))
            cells.push_back([=, &common] {
                auto ctx = make_context(p, args.e, 0, 1, common);
                const Field& f = ctx->field();
                Cell c("d=" + std::to_string(d) + " q=" + std::to_string(f.q()));
                std::mt19937_64 rng(common.seed);
                std::uniform_int_distribution<std::uint32_t> pick(1, f.q() - 1);
                for (std::uint32_t i = 0; i < args.n; ++i) {
                    const auto ex = random_exponent_lists(*ctx, d, rng);
                    const Elem lam{pick(rng)};
                    std::ostringstream what;
                    what << "#" << i << " a=[";
                    for (std::size_t k = 0; k < ex.a.size(); ++k)
                        what << (k ? "," : "") << ex.a[k];
                    what << "] b=[";
                    for (std::size_t k = 0; k < ex.b.size(); ++k)
                        what << (k ? "," : "") << ex.b[k];
                    what << "] lambda=" << lam.v;
                    c.add(thm32_check(*ctx, ex, lam, tol(1e-6)), what.str(), v);
                }
                return c;
            });
    } else if (args.suite == "greene-defs") {
        const std::uint32_t p = args.p.value_or(13);
        auto ctx = make_context(p, args.e, 0, 1, common);
        const std::uint32_t q = ctx->q();
        for (std::int64_t a = 0; a < q - 1; ++a)
            cells.push_back([=, &common] {
                Cell c("q=" + std::to_string(q) + " A=T^" + std::to_string(a));
                for (std::int64_t b = 0; b < q - 1; ++b)
                    for (std::int64_t cc = 0; cc < q - 1; ++cc)
                        for (std::uint32_t x = 0; x < q; ++x) {
                            const HGFParams prm{{a, b}, {cc}};
                            const Cx h = hgf(*ctx, prm, Elem{x});
                            const std::string what = "B=T^" + std::to_string(b) + " C=T^" + std::to_string(cc) + " x=" + std::to_string(x);
                            c.add(compare(h, hgf_2f1_alt(*ctx, a, b, cc, Elem{x}), q, tol(1e-7)), what + " single-sum", v);
                            c.add(compare(h, hgf_multisum(*ctx, prm, Elem{x}), q, tol(1e-7)), what + " multisum", v);
                        }
                return c;
            });
    } else if (args.suite == "koike" || args.suite == "igusa") {
        const bool koike = args.suite == "koike";
        for (std::uint32_t p = 3; p <= args.pmax; ++p) {
            if (!is_prime(p))
                continue;
            cells.push_back([=, &common] {
                Cell c("p=" + std::to_string(p));
                std::shared_ptr<const Context> ctx;
                if (koike)
                    ctx = make_context(p, 1, 0, 1, common);
                for (std::int64_t l = 2; l < p; ++l) {
                    const std::string what = "lambda=" + std::to_string(l);
                    if (koike)
                        c.add(koike_check(*ctx, l), what, v);
                    else
                        c.add(igusa_check(p, l), what, v);
                }
                return c;
            });
        }
    } else if (args.suite == "cancellation") {
        for (auto [d, p] : grid(args, {{3, 7}, {3, 13}, {5, 11}, {5, 31}, {4, 13}, {4, 17}}))
            cells.push_back([=, &common] {
                auto ctx = make_context(p, args.e, 0, 1, common);
                const Field& f = ctx->field();
                const auto brute = brute_projective_counts(f, d);
                DecomposeOptions o;
                o.conjecture_mode = d % 2 == 0;
                o.guard = common.guard;
                o.cancel_tol = tol(1e-6);
                Cell c("d=" + std::to_string(d) + " q=" + std::to_string(f.q())
                       + (o.conjecture_mode ? " (conjecture mode)" : ""));
                for (std::uint32_t l = 1; l < f.q(); ++l) {
                    if (f.pow(Elem{l}, d) == f.one())
                        continue;
                    IdentityReport r;
                    std::string what = "lambda=" + std::to_string(l);
                    bool total_ok = false;
                    try {
                        const auto dec = decompose(*ctx, d, Elem{l}, o);
                        r = compare(dec.wss_part, -dec.leftover_total, dec.cancellation_scale, o.cancel_tol);
                        total_ok = dec.report.count == static_cast<std::int64_t>(brute[l]);
                        what += " total=" + std::to_string(dec.report.count) + " oracle=" + std::to_string(brute[l]);
                    } catch (const Error& e) {
                        r.residual = std::numeric_limits<double>::infinity();
                        what += std::string(" error ") + e.what();
                    }
                    r.passed = r.passed && total_ok;
                    c.add(r, what, v);
                }
                return c;
            });
    } else {
        throw Error(ErrorCode::InvalidParams, "unknown suite " + args.suite);
    }
    return run_cells(args.suite, std::move(cells), common, out);
}

// ---------------------------------------------------------------------------- cosets

int cmd_cosets(const CosetsArgs& args, std::ostream& out)
{
    if (args.d < 2 || args.d > 10)
        throw Error(ErrorCode::OutOfRange, "d must lie in [2, 10]");
    const std::uint32_t d = args.d;
    const auto classes = coset_classes(d);
    std::optional<TermClassification> cls;
    if (args.classify)
        cls = classify_terms(d);
    std::vector<CosetRep> cosets;
    if (args.list)
        cosets = enumerate_cosets(d);

    auto prediction = [&](const Tuple& rep) -> const ClassPrediction& {
        return *std::find_if(cls->classes.begin(), cls->classes.end(),
                             [&](const ClassPrediction& p) { return p.rep == rep; });
    };
    auto shape = [&](const ClassPrediction& p) -> std::string {
        if (p.n == 0)
            return "delta";
        return std::to_string(p.n) + "F" + std::to_string(p.n - 1) + (p.trivial_bottom ? " trivial-bottom" : "");
    };

    if (args.format == "json") {
        json doc;
        doc["d"] = d;
        doc["cosets"] = coset_count(d);
        doc["classes"] = classes;
        if (cls) {
            json rows = json::array();
            for (const auto& p : cls->classes)
                rows.push_back({{"rep", p.rep}, {"size", p.size}, {"n", p.n}, {"trivial_bottom", p.trivial_bottom},
                                {"shape", shape(p)}});
            doc["classification"] = {{"classes", rows},
                                     {"constant_multiplicity", cls->constant_multiplicity},
                                     {"one_f_zero_multiplicity", cls->one_f_zero_multiplicity},
                                     {"has_order_d_minus_2", cls->has_order_d_minus_2},
                                     {"trivial_bottom_pairs", cls->trivial_bottom_pairs}};
        }
        if (args.list) {
            json list = json::array();
            for (const auto& c : cosets)
                list.push_back({{"w", c.w}, {"class", c.class_index}});
            doc["list"] = list;
        }
        out << doc.dump(2) << '\n';
        return Exit::ok;
    }

    out << "d=" << d << " cosets=" << coset_count(d) << " classes=" << classes.size() << '\n';
    out << std::left << std::setw(3 * d + 2) << "rep" << std::right << std::setw(10) << "size" << std::setw(10)
        << "distinct" << std::setw(10) << "zero_free";
    if (cls)
        out << "  term";
    out << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        out << std::left << std::setw(3 * d + 2) << ("(" + tuple_text(c.rep) + ")") << std::right << std::setw(10)
            << c.size << std::setw(10) << c.distinct << std::setw(10) << c.zero_free;
        if (cls)
            out << "  " << shape(prediction(c.rep));
        out << '\n';
    }
    if (cls) {
        out << "constant multiplicity: " << cls->constant_multiplicity << '\n';
        out << "1F0 multiplicity: " << cls->one_f_zero_multiplicity << '\n';
        out << d - 2 << "F" << d - 3 << " present: " << (cls->has_order_d_minus_2 ? "yes" : "no") << '\n';
        out << "trivial-bottom pairs: " << cls->trivial_bottom_pairs << '\n';
    }
    for (const auto& c : cosets)
        out << "(" << tuple_text(c.w) << ") class " << c.class_index << '\n';
    return Exit::ok;
}

// ---------------------------------------------------------------------------- table

int cmd_table(const TableArgs& args, const Common& common, std::ostream& out)
{
    auto ctx = make_context(args.field, common);
    const Field& f = ctx->field();
    const std::uint32_t d = args.d;
    step_for(f, d);
    const std::uint64_t lo = args.lambda_min.value_or(1);
    const std::uint64_t hi = args.lambda_max.value_or(f.q() - 1);
    if (lo < 1 || hi >= f.q() || lo > hi)
        throw Error(ErrorCode::OutOfRange, "lambda range must be a nonempty subrange of [1, q-1]");

    const auto classes = coset_classes(d);
    const Cx fermat = baseline(d, f.q()) + wss_gauss_part(*ctx, d);

    struct Row {
        std::uint32_t lambda;
        CountReport report;
        bool delta_active;
        std::vector<Cx> terms;
    };
    const std::size_t n = hi - lo + 1;
    auto rows = parallel_map(n, [&](std::size_t i) {
        const Elem lam{static_cast<std::uint32_t>(lo + i)};
        Row r{lam.v, {}, f.pow(lam, d) == f.one(), {}};
        Cx raw = fermat;
        for (const auto& c : classes) {
            r.terms.push_back(static_cast<double>(c.size) * s_coset(*ctx, d, c.rep, lam));
            raw += r.terms.back();
        }
        r.report = make_report(Method::koblitz, raw, d, f.q(), lam, common.guard);
        return r;
    }, common.threads);

    int status = Exit::ok;
    if (args.verify) {
        const auto brute = brute_projective_counts(f, d);
        for (const auto& r : rows)
            if (r.report.count != static_cast<std::int64_t>(brute[r.lambda])) {
                std::cerr << "lambda=" << r.lambda << ": table " << r.report.count << " oracle " << brute[r.lambda]
                          << '\n';
                status = Exit::verification_failed;
            }
    }

    std::ostringstream buf;
    if (args.format == "json") {
        json doc;
        doc["params"] = params_json(*ctx, d);
        json cols = json::array();
        for (const auto& c : classes)
            cols.push_back({{"class", c.rep}, {"size", c.size}});
        doc["term_columns"] = cols;
        doc["nq0"] = cx_json(fermat);
        json jrows = json::array();
        for (const auto& r : rows) {
            json terms = json::array();
            for (const auto& t : r.terms)
                terms.push_back(cx_json(t));
            jrows.push_back({{"lambda", r.lambda},
                             {"count", r.report.count},
                             {"residual", r.report.residual},
                             {"delta_active", r.delta_active},
                             {"terms", terms}});
        }
        doc["rows"] = jrows;
        buf << doc.dump(2) << '\n';
    } else {
        buf << "lambda,count,delta_active,nq0";
        for (const auto& c : classes)
            buf << ",S_" << tuple_text(c.rep, '.') << "_re,S_" << tuple_text(c.rep, '.') << "_im";
        buf << '\n';
        for (const auto& r : rows) {
            buf << r.lambda << ',' << r.report.count << ',' << (r.delta_active ? 1 : 0) << ',' << num(fermat.real());
            for (const auto& t : r.terms)
                buf << ',' << num(t.real()) << ',' << num(t.imag());
            buf << '\n';
        }
    }

    if (args.out) {
        std::ofstream file(*args.out);
        if (!file)
            throw Error(ErrorCode::Io, "cannot open " + *args.out);
        file << buf.str();
        if (!file)
            throw Error(ErrorCode::Io, "write failed for " + *args.out);
    } else {
        out << buf.str();
    }
    return status;
}

} // namespace dworkcli
