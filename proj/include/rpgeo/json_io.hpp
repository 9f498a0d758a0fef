#pragma once

// JSON encoding of models, systems and reports. Numbers that may be
// irrational travel as strings ("1/3", "sqrt(2) - 1"); integers may also be
// plain JSON numbers. Unknown keys are rejected.

#include <string>
#include <vector>

#include "json.hpp"
#include "rpgeo/interval_engine.hpp"
#include "rpgeo/irrational_systems.hpp"
#include "rpgeo/loop_homology.hpp"
#include "rpgeo/symplectic.hpp"

namespace rpgeo::io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file. Throws IoError when unreadable, ParseError on bad JSON.
Json load_file(const std::string& path);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational rational_from(const Json& j, const std::string& where);
ExactReal exact_from(const Json& j, const std::string& where);

NormalForm normal_form_from(const Json& j);
GeodesicModel geodesic_from(const Json& j);
IrrationalSystem system_from(const Json& j);
Rank1Model rank1_from(const Json& j);

/// {"n": N, "models": [...]}
struct ModelSet {
  std::int64_t n = 0;
  std::vector<GeodesicModel> models;
};
ModelSet model_set_from(const Json& j);

Json to_json(const NormalForm& nf);
Json to_json(const GeodesicModel& g);
Json to_json(const IrrationalSystem& sys);
Json to_json(const Rank1Model& m);
Json to_json(const ResonanceReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const Rank1Conditions& c);

}  // namespace rpgeo::io
