#include "dwork/field.hpp"

#include "dwork/error.hpp"

#include <algorithm>
#include <sstream>

namespace dwork {

namespace {

using Poly = std::vector<std::uint32_t>;

constexpr std::uint64_t kMaxOrder = 1u << 24;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = lead * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return r;
}

Poly index_digits(std::uint64_t index, std::uint32_t p, std::uint32_t len)
{
    Poly d(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return d;
}

std::uint32_t digits_index(const Poly& d, std::uint32_t p)
{
    std::uint64_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        idx = idx * p + d[i];
    return static_cast<std::uint32_t>(idx);
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0)
                n /= f;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p)
{
    Poly m = poly;
    trim(m);
    if (m.size() < 2)
        return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
    // Any factorization has a monic factor of degree at most deg/2.
    for (std::uint32_t k = 1; 2 * k <= deg; ++k) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly f = index_digits(idx, p, k);
            f.push_back(1);
            if (poly_rem(m, f, p).empty())
                return false;
        }
    }
    return true;
}

Field Field::build(std::uint64_t p, std::uint32_t e, const FieldOptions& opts)
{
    if (!is_prime(p))
        throw Error(ErrorCode::NotPrime, "p=" + std::to_string(p) + " is not prime");
    if (e < 1)
        throw Error(ErrorCode::InvalidParams, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorCode::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
    }

    Field f;
    f.p_ = static_cast<std::uint32_t>(p);
    f.e_ = e;
    f.q_ = static_cast<std::uint32_t>(q);
    f.pow_p_.resize(e);
    for (std::uint32_t i = 0, v = 1; i < e; ++i, v *= f.p_)
        f.pow_p_[i] = v;

    if (opts.modulus) {
        const Poly& m = *opts.modulus;
        if (m.size() != e + 1 || m.back() != 1
            || std::any_of(m.begin(), m.end(), [&](std::uint32_t c) { return c >= p; }))
            throw Error(ErrorCode::BadModulusPolynomial, "modulus must be monic of degree e with coefficients in [0,p)");
        if (!is_irreducible(m, f.p_))
            throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        if (e > 1)
            f.modulus_ = m;
    } else if (e > 1) {
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Poly m = index_digits(idx, f.p_, e);
            m.push_back(1);
            if (is_irreducible(m, f.p_)) {
                f.modulus_ = std::move(m);
                break;
            }
        }
    }

    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (e == 1)
            return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
        Poly r = poly_rem(poly_mul(index_digits(a, f.p_, e), index_digits(b, f.p_, e), f.p_), f.modulus_, f.p_);
        r.resize(e, 0);
        return digits_index(r, f.p_);
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t r = 1;
        while (k) {
            if (k & 1)
                r = slow_mul(r, a);
            a = slow_mul(a, a);
            k >>= 1;
        }
        return r;
    };

    const std::uint64_t n = q - 1;
    const auto factors = prime_factors(n);
    std::uint32_t rank = 0;
    bool found = false;
    for (std::uint32_t cand = 1; cand < q && !found; ++cand) {
        const bool primitive = std::all_of(factors.begin(), factors.end(),
                                           [&](std::uint64_t r) { return slow_pow(cand, n / r) != 1; });
        if (!primitive)
            continue;
        if (rank++ == opts.generator_rank) {
            f.gen_ = Elem{cand};
            found = true;
        }
    }
    if (!found)
        throw Error(ErrorCode::NoGeneratorFound,
                    "no primitive element of rank " + std::to_string(opts.generator_rank) + " in " + f.describe());
    f.gen_rank_ = opts.generator_rank;

    f.exp_.resize(n);
    f.log_.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        f.exp_[k] = x;
        f.log_[x] = static_cast<std::uint32_t>(k);
        x = slow_mul(x, f.gen_.v);
    }
    if (x != 1)
        throw Error(ErrorCode::NoGeneratorFound, "generator order check failed");

    f.trace_.assign(q, 0);
    for (std::uint32_t v = 1; v < q; ++v) {
        Elem y{v};
        Elem acc = f.zero();
        for (std::uint32_t i = 0; i < e; ++i) {
            acc = f.add(acc, y);
            y = f.pow(y, p);
        }
        if (acc.v >= p)
            throw Error(ErrorCode::NoGeneratorFound, "trace left the prime field");
        f.trace_[v] = acc.v;
    }
    return f;
}

Elem Field::element(std::uint64_t index) const
{
    if (index >= q_)
        throw Error(ErrorCode::ElementOutOfRange, std::to_string(index) + " is not below q=" + std::to_string(q_));
    return Elem{static_cast<std::uint32_t>(index)};
}

Elem Field::from_int(std::int64_t n) const noexcept
{
    const std::int64_t r = ((n % p_) + p_) % p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::add(Elem a, Elem b) const noexcept
{
    if (e_ == 1)
        return Elem{(a.v + b.v) % p_};
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const std::uint32_t da = a.v / pow_p_[i] % p_;
        const std::uint32_t db = b.v / pow_p_[i] % p_;
        r += (da + db) % p_ * pow_p_[i];
    }
    return Elem{r};
}

Elem Field::neg(Elem a) const noexcept
{
    if (e_ == 1)
        return Elem{(p_ - a.v) % p_};
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
        r += (p_ - a.v / pow_p_[i] % p_) % p_ * pow_p_[i];
    return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept
{
    if (a.v == 0 || b.v == 0)
        return zero();
    return Elem{exp_[(std::uint64_t{log_[a.v]} + log_[b.v]) % units()]};
}

Elem Field::inv(Elem a) const
{
    if (a.v == 0)
        throw Error(ErrorCode::LogOfZero, "zero has no inverse");
    return Elem{exp_[(units() - log_[a.v]) % units()]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t k) const
{
    if (a.v == 0) {
        if (k < 0)
            throw Error(ErrorCode::LogOfZero, "negative power of zero");
        return k == 0 ? one() : zero();
    }
    const std::int64_t n = units();
    const std::int64_t r = ((std::int64_t{log_[a.v]} * (k % n)) % n + n) % n;
    return Elem{exp_[r]};
}

Elem Field::exp(std::int64_t k) const noexcept
{
    const std::int64_t n = units();
    return Elem{exp_[((k % n) + n) % n]};
}

std::uint32_t Field::dlog(Elem x) const
{
    if (x.v == 0)
        throw Error(ErrorCode::LogOfZero, "discrete log of zero");
    return log_[x.v];
}

std::vector<std::uint32_t> Field::digits(Elem x) const { return index_digits(x.v, p_, e_); }

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const
{
    if (d.size() != e_ || std::any_of(d.begin(), d.end(), [&](std::uint32_t c) { return c >= p_; }))
        throw Error(ErrorCode::ElementOutOfRange, "digit vector does not describe an element");
    return Elem{digits_index(d, p_)};
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "F_" << q_ << "(p=" << p_ << ",e=" << e_;
    if (!modulus_.empty()) {
        os << ",m=";
        for (std::size_t i = 0; i < modulus_.size(); ++i)
            os << (i ? "." : "") << modulus_[i];
    }
    os << ",g=" << gen_.v << ")";
    return os.str();
}

} // namespace dwork
