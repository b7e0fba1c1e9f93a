#include "dwork/serialize.hpp"

#include "dwork/error.hpp"

namespace dwork {

nlohmann::json cx_json(Cx v) { return {{"re", v.real()}, {"im", v.imag()}}; }

Cx cx_from_json(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

void to_json(nlohmann::json& j, const CountReport& r)
{
    j = {{"method", to_string(r.method)},
         {"d", r.d},
         {"q", r.q},
         {"lambda", r.lambda.v},
         {"raw", cx_json(r.raw)},
         {"count", r.count},
         {"residual", r.residual}};
}

void to_json(nlohmann::json& j, const HGFParams& p) { j = {{"top", p.top}, {"bottom", p.bottom}}; }

void from_json(const nlohmann::json& j, HGFParams& p)
{
    j.at("top").get_to(p.top);
    j.at("bottom").get_to(p.bottom);
}

void to_json(nlohmann::json& j, const HGFTerm& t)
{
    j = {{"kind", to_string(t.kind)},
         {"coefficient", cx_json(t.coefficient)},
         {"multiplicity", t.multiplicity},
         {"argument", to_string(t.argument)},
         {"source_class", t.source_class},
         {"value", cx_json(t.value)}};
    j["params"] = t.params ? nlohmann::json(*t.params) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, HGFTerm& t)
{
    t.kind = term_kind_from_string(j.at("kind").get<std::string>());
    t.coefficient = cx_from_json(j.at("coefficient"));
    t.multiplicity = j.at("multiplicity").get<std::uint64_t>();
    t.argument = argument_from_string(j.at("argument").get<std::string>());
    j.at("source_class").get_to(t.source_class);
    t.value = cx_from_json(j.at("value"));
    if (j.at("params").is_null())
        t.params.reset();
    else
        t.params = j.at("params").get<HGFParams>();
}

void to_json(nlohmann::json& j, const LeftoverTerm& t)
{
    j = {{"gauss", t.gauss}, {"sign_exponent", t.sign_exponent}, {"value", cx_json(t.value)}};
}

void to_json(nlohmann::json& j, const DecompTrace& t)
{
    j = {{"class_rep", t.class_rep},
         {"class_size", t.class_size},
         {"a", t.a_list},
         {"b", t.b_list},
         {"G", cx_json(t.G)},
         {"sign_exponent", t.sign_exponent},
         {"leftover", t.leftover},
         {"leftover_sum", cx_json(t.leftover_sum)},
         {"s_direct", cx_json(t.s_direct)},
         {"s_decomposed", cx_json(t.s_decomposed)}};
}

void to_json(nlohmann::json& j, const CosetClass& c)
{
    j = {{"rep", c.rep}, {"size", c.size}, {"distinct", c.distinct}, {"zero_free", c.zero_free}};
}

void to_json(nlohmann::json& j, const IdentityReport& r)
{
    j = {{"lhs", cx_json(r.lhs)},
         {"rhs", cx_json(r.rhs)},
         {"residual", r.residual},
         {"scale", r.scale},
         {"tol", r.tol},
         {"passed", r.passed}};
}

TermKind term_kind_from_string(std::string_view s)
{
    for (auto k : {TermKind::constant, TermKind::delta, TermKind::hypergeometric, TermKind::gauss_leftover})
        if (to_string(k) == s)
            return k;
    throw Error(ErrorCode::InvalidParams, "unknown term kind " + std::string(s));
}

Argument argument_from_string(std::string_view s)
{
    for (auto a : {Argument::none, Argument::lambda_d, Argument::inverse_lambda_d})
        if (to_string(a) == s)
            return a;
    throw Error(ErrorCode::InvalidParams, "unknown argument " + std::string(s));
}

} // namespace dwork
