#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "behrend/behrend.hpp"
#include "behrend/hilb.hpp"

namespace behrend {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string order = "degrevlex";
  std::uint64_t seed = 0;
  std::uint64_t characteristic = 0;
  std::size_t max_n = 12;
  std::size_t max_variables = 16;
  std::size_t max_gb_pairs = 200000;
  std::string format = "json";
  int jobs = 0;
};

/// Reads the keys of RunConfig from a JSON object; unknown keys are errors.
RunConfig config_from_json(const Json& j, RunConfig base = {});
Json to_json(const RunConfig& c);

Json to_json(const Ideal& I);
Json to_json(const Point& p);
Json to_json(const PrimeComponent& c);
Json to_json(const ConeComponent& c);
Json to_json(const Cycle& c);
Json to_json(const EuVerdict& v);
Json to_json(const ConstructibleEvaluation& e);
Json to_json(const BehrendEvaluation& e);
Json to_json(const ComponentReport& r);
Json to_json(const ConstancyCertificate& c);
Json to_json(const PlanePartition& p);
Json to_json(const TangentReport& r);
Json to_json(const ParityScan& s);
Json to_json(const QuotTangentReport& r);

struct ModuleText {
  RingPtr ring;
  std::size_t rank = 0;
  std::vector<ModuleVector> generators;
};

/// `ring x, y, z;` header, then one generator per line written as a tuple
/// "(x, 0)". All tuples must have the same length.
ModuleText parse_module_text(std::string_view text, std::uint64_t characteristic = 0);

}  // namespace behrend
