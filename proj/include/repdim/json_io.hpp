#pragma once

#include <string>

#include <json.hpp>

#include "repdim/embed.hpp"
#include "repdim/oracle.hpp"
#include "repdim/repnum.hpp"
#include "repdim/spectral.hpp"

namespace repdim {

using ordered_json = nlohmann::ordered_json;

// Round to 12 significant digits so serialized output is byte-stable.
double round12(double x);

ordered_json to_json(const SpectrumSummary& s);
ordered_json to_json(const RepResult& r);
ordered_json to_json(const Embedding& e);
ordered_json to_json(const OracleReport& r);
ordered_json to_json(const VerifyReport& r);

std::string embedding_to_csv(const Embedding& e);

} // namespace repdim
