#include "dwork/count.hpp"

#include "dwork/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace dwork {

namespace {

void require_lambda(Elem lam)
{
    if (lam.v == 0)
        throw Error(ErrorCode::LambdaZero, "lambda must be nonzero");
}

double qpow(std::uint32_t q, double e) { return std::pow(static_cast<double>(q), e); }

Elem lambda_pow_d(const Field& f, std::uint32_t d, Elem lam) { return f.pow(lam, d); }

// G_d = prod_{k=1}^{d-1} g(T^{kt})
Cx gauss_prefix(const Context& ctx, std::uint32_t d, std::int64_t t)
{
    Cx r = 1.0;
    for (std::int64_t k = 1; k < d; ++k)
        r *= ctx.g(k * t);
    return r;
}

Cx gauss_prefix_closed(const Context& ctx, std::uint32_t d, std::int64_t t)
{
    const std::uint32_t q = ctx.q();
    if (d % 2 == 1) {
        const std::int64_t alpha = std::int64_t{d - 1} * (d + 1) / 8 * t;
        return qpow(q, (d - 1) / 2.0) * ctx.sign(alpha);
    }
    const std::int64_t alpha = std::int64_t{d - 2} * d / 8 * t;
    return qpow(q, (d - 2) / 2.0) * ctx.g(std::int64_t{d} * t / 2) * ctx.sign(alpha);
}

} // namespace

std::string_view to_string(Method m) noexcept
{
    switch (m) {
    case Method::brute: return "brute";
    case Method::koblitz: return "koblitz";
    case Method::theorem11: return "theorem11";
    case Method::theorem14: return "threefold";
    case Method::decompose: return "decompose";
    }
    return "unknown";
}

std::string_view to_string(TermKind k) noexcept
{
    switch (k) {
    case TermKind::constant: return "constant";
    case TermKind::delta: return "delta";
    case TermKind::hypergeometric: return "hypergeometric";
    case TermKind::gauss_leftover: return "gauss_leftover";
    }
    return "unknown";
}

std::string_view to_string(Argument a) noexcept
{
    switch (a) {
    case Argument::none: return "none";
    case Argument::lambda_d: return "lambda^d";
    case Argument::inverse_lambda_d: return "lambda^-d";
    }
    return "unknown";
}

CountReport make_report(Method method, Cx raw, std::uint32_t d, std::uint32_t q, Elem lam, double guard)
{
    CountReport r;
    r.method = method;
    r.raw = raw;
    r.count = std::llround(raw.real());
    r.residual = std::abs(raw - Cx(static_cast<double>(r.count), 0.0));
    r.d = d;
    r.q = q;
    r.lambda = lam;
    if (!(r.residual < guard) || r.count < 0) {
        std::ostringstream os;
        os << to_string(method) << " d=" << d << " q=" << q << " lambda=" << lam.v << ": raw (" << raw.real()
           << ", " << raw.imag() << ") is not within " << guard << " of a nonnegative integer";
        throw Error(ErrorCode::RoundingGuard, os.str());
    }
    return r;
}

double baseline(std::uint32_t d, std::uint32_t q)
{
    // 1 + q + ... + q^{d-2}, exact in double for desk-scale q
    double r = 0.0;
    double term = 1.0;
    for (std::uint32_t i = 0; i + 1 < d; ++i) {
        r += term;
        term *= q;
    }
    return r;
}

Cx wss_gauss_part(const Context& ctx, std::uint32_t d)
{
    const std::int64_t t = step_for(ctx.field(), d);
    Cx acc = 0.0;
    for (const auto& m : wss_multisets(d)) {
        Cx prod = static_cast<double>(m.tuples);
        for (std::uint32_t v = 1; v < d; ++v)
            for (std::uint32_t k = 0; k < m.counts[v]; ++k)
                prod *= ctx.g(std::int64_t{v} * t);
        acc += prod;
    }
    return acc / static_cast<double>(ctx.q());
}

CountReport nq0(const Context& ctx, std::uint32_t d, double guard)
{
    const Cx raw = baseline(d, ctx.q()) + wss_gauss_part(ctx, d);
    return make_report(Method::koblitz, raw, d, ctx.q(), ctx.field().zero(), guard);
}

Cx s_coset(const Context& ctx, std::uint32_t d, const Tuple& w, Elem lam)
{
    require_lambda(lam);
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, d);
    if (w.size() != d)
        throw Error(ErrorCode::InvalidParams, "tuple length must equal d");
    const std::int64_t n = f.units();
    const std::int64_t l = f.dlog(f.mul(f.from_int(d), lam));
    Cx acc = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        Cx num = 1.0;
        for (auto wi : w)
            num *= ctx.g(std::int64_t{wi} * t + j);
        acc += num / ctx.g(std::int64_t{d} * j) * ctx.chars().root(std::int64_t{d} * j * l);
    }
    return acc / static_cast<double>(n);
}

CountReport koblitz_count(const Context& ctx, std::uint32_t d, Elem lam, double guard)
{
    require_lambda(lam);
    step_for(ctx.field(), d);
    Cx raw = baseline(d, ctx.q()) + wss_gauss_part(ctx, d);
    for (const auto& cls : coset_classes(d))
        raw += static_cast<double>(cls.size) * s_coset(ctx, d, cls.rep, lam);
    return make_report(Method::koblitz, raw, d, ctx.q(), lam, guard);
}

Theorem11Result theorem11_count(const Context& ctx, std::uint32_t d, Elem lam, double guard)
{
    require_lambda(lam);
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, d);
    const std::uint32_t q = ctx.q();

    HGFParams params;
    for (std::int64_t k = 1; k < d; ++k)
        params.top.push_back(ctx.idx(k * t));
    params.bottom.assign(d - 2, 0);
    const Elem arg = f.inv(lambda_pow_d(f, d, lam));
    const Cx big_f = qpow(q, d - 2.0) * hgf(ctx, params, arg);

    auto power_sum = [&](std::int64_t from) {
        Cx s = 0.0;
        for (std::int64_t j = from; j < d; ++j)
            s += std::pow(ctx.g(j * t), static_cast<double>(d));
        return s / static_cast<double>(q);
    };

    Theorem11Result res;
    res.zero_coset_closed = big_f - power_sum(1);
    res.zero_coset_direct = s_coset(ctx, d, Tuple(d, 0), lam);

    Cx raw = baseline(d, q) + wss_gauss_part(ctx, d) + res.zero_coset_closed;
    for (const auto& cls : coset_classes(d)) {
        if (cls.distinct == 1)
            continue; // the zero coset, taken in closed form above
        raw += static_cast<double>(cls.size) * s_coset(ctx, d, cls.rep, lam);
    }
    res.report = make_report(Method::theorem11, raw, d, q, lam, guard);

    // Verbatim expression: the last sum runs over every tuple of W.
    Cx w_sum = 0.0;
    {
        auto rec = [&](auto&& self, std::uint32_t i, std::uint64_t s, Cx prod) -> void {
            if (i + 1 == d) {
                const std::uint32_t last = static_cast<std::uint32_t>((d - s % d) % d);
                w_sum += prod * ctx.g(std::int64_t{last} * t);
                return;
            }
            for (std::uint32_t v = 0; v < d; ++v)
                self(self, i + 1, s + v, prod * ctx.g(std::int64_t{v} * t));
        };
        rec(rec, 0, 0, 1.0);
    }
    res.literal = baseline(d, q) + big_f - power_sum(0) - w_sum / static_cast<double>(q - 1);
    res.literal_residual = std::abs(res.literal - static_cast<double>(res.report.count));
    return res;
}

ThreefoldResult threefold_count(const Context& ctx, Elem lam, double guard)
{
    require_lambda(lam);
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, 5);
    const double q = ctx.q();
    const Elem lam5 = f.pow(lam, 5);
    const Elem arg = f.inv(lam5);
    const double delta = lam5 == f.one() ? 1.0 : 0.0;

    ThreefoldResult res;
    HGFTerm base;
    base.kind = TermKind::constant;
    base.coefficient = baseline(5, ctx.q());
    base.value = base.coefficient;
    res.terms.push_back(base);

    HGFTerm del;
    del.kind = TermKind::delta;
    del.coefficient = q * q;
    del.multiplicity = 24;
    del.argument = Argument::lambda_d;
    del.source_class = {0, 1, 2, 3, 4};
    del.value = 24.0 * q * q * delta;
    res.terms.push_back(del);

    auto hyper = [&](double coef, std::uint64_t mult, std::vector<std::int64_t> top, std::vector<std::int64_t> bottom,
                     Tuple source) {
        HGFTerm h;
        h.kind = TermKind::hypergeometric;
        h.coefficient = coef;
        h.multiplicity = mult;
        h.params = HGFParams{std::move(top), std::move(bottom)};
        h.argument = Argument::inverse_lambda_d;
        h.source_class = std::move(source);
        h.value = static_cast<double>(mult) * coef * hgf(ctx, *h.params, arg);
        res.terms.push_back(std::move(h));
    };
    const auto T = [&](std::int64_t k) { return std::int64_t{ctx.idx(k * t)}; };
    hyper(q * q * q, 1, {T(1), T(2), T(3), T(4)}, {0, 0, 0}, {0, 0, 0, 0, 0});
    hyper(q * q, 20, {T(2), T(3)}, {0}, {0, 0, 0, 1, 4});
    hyper(q * q, 20, {T(1), T(4)}, {0}, {0, 0, 0, 2, 3});
    hyper(q * q, 30, {T(1), T(3)}, {T(4)}, {0, 0, 1, 1, 3});
    hyper(q * q, 30, {T(1), T(2)}, {T(3)}, {0, 0, 1, 2, 2});

    Cx raw = 0.0;
    for (const auto& term : res.terms)
        raw += term.value;
    res.report = make_report(Method::theorem14, raw, 5, ctx.q(), lam, guard);
    return res;
}

Decomposition decompose(const Context& ctx, std::uint32_t d, Elem lam, const DecomposeOptions& opts)
{
    require_lambda(lam);
    const Field& f = ctx.field();
    const std::int64_t t = step_for(f, d);
    const std::int64_t N = f.units();
    const std::uint32_t q = ctx.q();
    if (d % 2 == 0 && !opts.conjecture_mode)
        throw Error(ErrorCode::ConjectureModeRequired, "even d needs conjecture mode");
    const Elem lam_d = lambda_pow_d(f, d, lam);
    if (lam_d == f.one())
        throw Error(ErrorCode::LambdaDthPowerOne, "lambda^d = 1");
    const Elem arg = f.inv(lam_d);

    Decomposition dec;
    dec.G_d = gauss_prefix(ctx, d, t);
    dec.G_d_closed = gauss_prefix_closed(ctx, d, t);
    const Cx Gd = dec.G_d;

    HGFTerm base;
    base.kind = TermKind::constant;
    base.coefficient = baseline(d, q);
    base.value = base.coefficient;
    dec.terms.push_back(base);

    for (const auto& cls : coset_classes(d)) {
        DecompTrace tr;
        tr.class_rep = cls.rep;
        tr.class_size = cls.size;
        const double size = static_cast<double>(cls.size);

        // a: repeated entries beyond the first copy; b: residues absent from the rep.
        std::vector<std::uint32_t> counts(d, 0);
        for (auto v : cls.rep)
            ++counts[v];
        for (std::uint32_t v = 0; v < d; ++v) {
            for (std::uint32_t k = 1; k < counts[v]; ++k)
                tr.a_list.push_back(v);
            if (counts[v] == 0)
                tr.b_list.push_back(v);
        }
        const std::size_t n = tr.a_list.size();
        tr.s_direct = s_coset(ctx, d, cls.rep, lam);

        HGFTerm term;
        term.multiplicity = cls.size;
        term.source_class = cls.rep;
        Cx per_coset;
        if (n == 0) {
            term.kind = TermKind::delta;
            term.coefficient = Gd;
            term.argument = Argument::lambda_d;
            per_coset = 0.0; // lam^d != 1 here
            tr.G = 1.0;
        } else {
            std::vector<std::int64_t> ap, bp;
            for (auto a : tr.a_list)
                ap.push_back(ctx.idx(a * t));
            for (auto b : tr.b_list)
                bp.push_back(ctx.idx(-b * t));
            std::sort(ap.begin(), ap.end());
            std::sort(bp.begin(), bp.end());
            Cx G = ctx.g(bp[n - 1] + ap[0]);
            for (std::size_t k = 1; k < n; ++k)
                G *= ctx.g(ap[k] + bp[k - 1]);
            tr.G = G;
            tr.sign_exponent = (std::accumulate(ap.begin(), ap.end(), std::int64_t{0})
                                + std::accumulate(bp.begin(), bp.end(), std::int64_t{0}))
                               % N;
            HGFParams params;
            params.top.push_back(ctx.idx(bp[n - 1] + ap[0]));
            for (std::size_t k = 0; k + 1 < n; ++k)
                params.top.push_back(ctx.idx(bp[k] + ap[0]));
            for (std::size_t k = 1; k < n; ++k)
                params.bottom.push_back(ctx.idx(ap[0] - ap[k]));

            term.kind = TermKind::hypergeometric;
            term.coefficient = ctx.sign(tr.sign_exponent) * G * Gd / static_cast<double>(q);
            term.argument = Argument::inverse_lambda_d;
            per_coset = term.coefficient * hgf(ctx, params, arg);
            term.params = std::move(params);

            // Gauss leftover, entering the coset sum with a minus sign.
            const double scale = 1.0 / qpow(q, static_cast<double>(n));
            for (std::size_t i = 0; i < n; ++i) {
                LeftoverTerm lt;
                Cx v = 1.0;
                for (std::size_t k = 0; k < n; ++k) {
                    lt.gauss.push_back(ctx.idx((tr.a_list[k] - tr.b_list[i]) * t));
                    v *= ctx.g((tr.a_list[k] - tr.b_list[i]) * t);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i)
                        continue;
                    lt.sign_exponent += (tr.b_list[k] - tr.b_list[i]) * t;
                    lt.gauss.push_back(ctx.idx((tr.b_list[i] - tr.b_list[k]) * t));
                    v *= ctx.g((tr.b_list[i] - tr.b_list[k]) * t);
                }
                lt.sign_exponent = ((lt.sign_exponent % N) + N) % N;
                lt.value = -Gd * scale * ctx.sign(lt.sign_exponent) * v;
                tr.leftover_sum += lt.value;
                tr.leftover.push_back(std::move(lt));
            }
        }
        term.value = size * per_coset;
        tr.s_decomposed = per_coset + tr.leftover_sum;
        dec.leftover_total += size * tr.leftover_sum;
        dec.terms.push_back(std::move(term));
        dec.traces.push_back(std::move(tr));
    }

    dec.wss_part = wss_gauss_part(ctx, d);
    dec.cancellation_residual = std::abs(dec.wss_part + dec.leftover_total);
    dec.cancellation_scale = qpow(q, (d - 1) / 2.0);
    dec.cancelled = dec.cancellation_residual < opts.cancel_tol * dec.cancellation_scale;
    if (!dec.cancelled && d % 2 == 1) {
        std::ostringstream os;
        os << "leftover residual " << dec.cancellation_residual << " at d=" << d << " q=" << q << " lambda=" << lam.v;
        throw Error(ErrorCode::CancellationFailed, os.str());
    }

    Cx raw = 0.0;
    for (const auto& term : dec.terms)
        raw += term.value;
    dec.report = make_report(Method::decompose, raw, d, q, lam, opts.guard);
    return dec;
}

TermClassification classify_terms(std::uint32_t d)
{
    if (d < 3 || d > 10)
        throw Error(ErrorCode::OutOfRange, "classification covers 3 <= d <= 10");
    TermClassification out;
    out.d = d;
    for (const auto& cls : coset_classes(d)) {
        ClassPrediction p;
        p.rep = cls.rep;
        p.size = cls.size;
        p.n = d - cls.distinct;
        std::vector<std::uint32_t> counts(d, 0);
        for (auto v : cls.rep)
            ++counts[v];
        const auto repeated = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 1; });
        p.trivial_bottom = p.n >= 1 && repeated == 1;
        if (p.n == 0)
            out.constant_multiplicity += cls.size;
        if (p.n == 1)
            out.one_f_zero_multiplicity += cls.size;
        if (p.n + 2 == d)
            out.has_order_d_minus_2 = true;
        if (cls.distinct == 3 && *std::max_element(counts.begin(), counts.end()) == d - 2)
            ++out.trivial_bottom_pairs;
        out.classes.push_back(std::move(p));
    }
    return out;
}

bool matches(const TermClassification& cls, const std::vector<HGFTerm>& terms)
{
    std::map<Tuple, const ClassPrediction*> by_rep;
    for (const auto& p : cls.classes)
        by_rep[p.rep] = &p;
    std::size_t seen = 0;
    for (const auto& term : terms) {
        if (term.kind == TermKind::constant && term.source_class.empty())
            continue;
        auto it = by_rep.find(term.source_class);
        if (it == by_rep.end())
            return false;
        const ClassPrediction& p = *it->second;
        ++seen;
        if (term.multiplicity != p.size)
            return false;
        if (p.n == 0) {
            if (term.kind != TermKind::delta)
                return false;
            continue;
        }
        if (term.kind != TermKind::hypergeometric || !term.params || term.params->top.size() != p.n)
            return false;
        const bool trivial = std::all_of(term.params->bottom.begin(), term.params->bottom.end(),
                                         [](std::int64_t b) { return b == 0; });
        if (trivial != p.trivial_bottom)
            return false;
    }
    return seen == cls.classes.size();
}

} // namespace dwork
