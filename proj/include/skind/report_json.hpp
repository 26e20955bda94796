#pragma once

#include "json.hpp"

#include "skind/bounds.hpp"
#include "skind/codes.hpp"
#include "skind/exact.hpp"
#include "skind/spectrum.hpp"

namespace skind {

// Field names are part of the CLI output format; keep them stable.

void to_json(nlohmann::json& j, const Spectrum& s);
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const QuotientMatrix& q);
void to_json(nlohmann::json& j, const ExactResult& r);
void to_json(nlohmann::json& j, const Equitability& e);

} // namespace skind
