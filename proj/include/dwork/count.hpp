#pragma once

#include "dwork/cosets.hpp"
#include "dwork/greene.hpp"

#include <optional>
#include <string_view>

namespace dwork {

enum class Method { brute, koblitz, theorem11, theorem14, decompose };
std::string_view to_string(Method m) noexcept;

struct CountReport {
    Method method = Method::brute;
    Cx raw;
    std::int64_t count = 0;
    double residual = 0.0;
    std::uint32_t d = 0;
    std::uint32_t q = 0;
    Elem lambda;
};

constexpr double kRoundingGuard = 0.01;

/// Rounds raw to the nearest integer; throws RoundingGuard if |raw - count| >= guard or count < 0.
CountReport make_report(Method method, Cx raw, std::uint32_t d, std::uint32_t q, Elem lam,
                        double guard = kRoundingGuard);

enum class TermKind { constant, delta, hypergeometric, gauss_leftover };
std::string_view to_string(TermKind k) noexcept;

enum class Argument { none, lambda_d, inverse_lambda_d };
std::string_view to_string(Argument a) noexcept;

/// One summand: value = multiplicity * coefficient * (F(argument) | delta(1 - lam^d) | 1).
struct HGFTerm {
    TermKind kind = TermKind::constant;
    Cx coefficient;
    std::uint64_t multiplicity = 1;
    std::optional<HGFParams> params;
    Argument argument = Argument::none;
    Tuple source_class;
    Cx value;
};

/// (q^{d-1} - 1) / (q - 1)
double baseline(std::uint32_t d, std::uint32_t q);

/// (1/q) sum over zero-free w in W of prod g(T^{w_i t}).
Cx wss_gauss_part(const Context& ctx, std::uint32_t d);

/// Diagonal hypersurface count from the Gauss-sum formula.
CountReport nq0(const Context& ctx, std::uint32_t d, double guard = kRoundingGuard);

/// Single-coset sum (1/(q-1)) sum_j prod g(T^{w_i t + j}) / g(T^{dj}) T^{dj}(d lam).
Cx s_coset(const Context& ctx, std::uint32_t d, const Tuple& w, Elem lam);

CountReport koblitz_count(const Context& ctx, std::uint32_t d, Elem lam, double guard = kRoundingGuard);

struct Theorem11Result {
    CountReport report;
    Cx zero_coset_closed;  // q^{d-2} F(T^t..T^{(d-1)t}; eps..eps | lam^{-d}) - (1/q) sum g(T^{jt})^d
    Cx zero_coset_direct;  // s_coset of (0,...,0)
    Cx literal;            // the four-term expression taken verbatim
    double literal_residual = 0.0; // |literal - count|
};

Theorem11Result theorem11_count(const Context& ctx, std::uint32_t d, Elem lam, double guard = kRoundingGuard);

struct ThreefoldResult {
    CountReport report;
    std::vector<HGFTerm> terms;
};

/// d = 5 closed form with baseline, delta term, one 4F3 and four 2F1 terms.
ThreefoldResult threefold_count(const Context& ctx, Elem lam, double guard = kRoundingGuard);

struct LeftoverTerm {
    std::vector<std::int64_t> gauss; // g(T^j) factors
    std::int64_t sign_exponent = 0;  // T^{sign_exponent}(-1)
    Cx value;                        // contribution to the coset sum
};

struct DecompTrace {
    Tuple class_rep;
    std::uint64_t class_size = 0;
    std::vector<std::int64_t> a_list; // in units of t, ascending
    std::vector<std::int64_t> b_list;
    Cx G;
    std::int64_t sign_exponent = 0; // T^{m}(-1) on the hypergeometric term
    std::vector<LeftoverTerm> leftover;
    Cx leftover_sum;  // per coset
    Cx s_direct;      // s_coset of the representative
    Cx s_decomposed;  // hypergeometric/delta value + leftover_sum, per coset
};

struct DecomposeOptions {
    bool conjecture_mode = false; // required for even d
    double guard = kRoundingGuard;
    double cancel_tol = 1e-6;     // relative to q^{(d-1)/2}
};

struct Decomposition {
    CountReport report;
    std::vector<HGFTerm> terms;
    std::vector<DecompTrace> traces;
    Cx G_d;        // prod_{k=1}^{d-1} g(T^{kt})
    Cx G_d_closed; // parity-dependent closed form of G_d
    Cx wss_part;
    Cx leftover_total;
    double cancellation_residual = 0.0;
    double cancellation_scale = 1.0;
    bool cancelled = false;
};

/// Sum of hypergeometric and delta terms plus baseline, with the Gauss leftovers checked to cancel
/// the zero-free part of the diagonal count. Odd d throws CancellationFailed; even d reports it.
Decomposition decompose(const Context& ctx, std::uint32_t d, Elem lam, const DecomposeOptions& opts = {});

/// Term shape a permutation class produces under decomposition.
struct ClassPrediction {
    Tuple rep;
    std::uint64_t size = 0;
    std::uint32_t n = 0;            // nF_{n-1}; 0 means the delta term
    bool trivial_bottom = false;    // all bottom parameters trivial
};

struct TermClassification {
    std::uint32_t d = 0;
    std::vector<ClassPrediction> classes;
    std::uint64_t constant_multiplicity = 0;  // delta-class cosets; 0 when absent
    std::uint64_t one_f_zero_multiplicity = 0;
    bool has_order_d_minus_2 = false;         // a _{d-2}F_{d-3} term
    std::uint32_t trivial_bottom_pairs = 0;   // classes (0^{d-2}, u, d-u)
};

/// 3 <= d <= 10.
TermClassification classify_terms(std::uint32_t d);

/// True when every term of a decomposition has the predicted shape for its class.
bool matches(const TermClassification& cls, const std::vector<HGFTerm>& terms);

} // namespace dwork
