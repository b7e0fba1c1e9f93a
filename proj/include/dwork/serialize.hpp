#pragma once

#include "dwork/count.hpp"

#include <json.hpp>

namespace dwork {

nlohmann::json cx_json(Cx v);
Cx cx_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const CountReport& r);
void to_json(nlohmann::json& j, const HGFParams& p);
void from_json(const nlohmann::json& j, HGFParams& p);
void to_json(nlohmann::json& j, const HGFTerm& t);
void from_json(const nlohmann::json& j, HGFTerm& t);
void to_json(nlohmann::json& j, const LeftoverTerm& t);
void to_json(nlohmann::json& j, const DecompTrace& t);
void to_json(nlohmann::json& j, const CosetClass& c);
void to_json(nlohmann::json& j, const IdentityReport& r);

TermKind term_kind_from_string(std::string_view s);
Argument argument_from_string(std::string_view s);

} // namespace dwork
