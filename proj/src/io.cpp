#include "behrend/io.hpp"

#include "behrend/parse.hpp"

namespace behrend {

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) throw std::invalid_argument("configuration must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "order")
      c.order = value.get<std::string>();
    else if (key == "seed")
      c.seed = value.get<std::uint64_t>();
    else if (key == "characteristic")
      c.characteristic = value.get<std::uint64_t>();
    else if (key == "max_n")
      c.max_n = value.get<std::size_t>();
    else if (key == "max_variables")
      c.max_variables = value.get<std::size_t>();
    else if (key == "max_gb_pairs")
      c.max_gb_pairs = value.get<std::size_t>();
    else if (key == "format")
      c.format = value.get<std::string>();
    else if (key == "jobs")
      c.jobs = value.get<int>();
    else
      throw std::invalid_argument("unknown configuration key '" + key + "'");
  }
  if (c.max_n == 0 || c.max_variables == 0 || c.max_gb_pairs == 0)
    throw std::invalid_argument("configuration bounds must be positive");
  return c;
}

Json to_json(const RunConfig& c) {
  return {{"order", c.order},
          {"seed", c.seed},
          {"characteristic", c.characteristic},
          {"bounds", {{"max_n", c.max_n}, {"max_variables", c.max_variables}, {"max_gb_pairs", c.max_gb_pairs}}},
          {"format", c.format}};
}

Json to_json(const Ideal& I) { return I.to_strings(); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(to_string(c));
  return out;
}

Json to_json(const PrimeComponent& c) {
  return {{"generators", to_json(c.prime)},
          {"multiplicity", c.multiplicity},
          {"dimension", c.dimension},
          {"degree", c.degree},
          {"primality_status", to_string(c.status)},
          {"method", c.method}};
}

Json to_json(const ConeComponent& c) {
  return {{"cone_prime", to_json(c.cone_prime)},
          {"multiplicity", c.multiplicity},
          {"image", to_json(c.image)},
          {"image_dim", c.image_dimension},
          {"dominates", c.dominates},
          {"primality_status", to_string(c.status)}};
}

Json to_json(const Cycle& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"prime", to_json(t.prime)}, {"coeff", t.coefficient}, {"dimension", t.dimension}});
  return {{"terms", terms}};
}

Json to_json(const EuVerdict& v) {
  Json out{{"value", v.value ? Json(*v.value) : Json(nullptr)}, {"rule", to_string(v.rule)}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json to_json(const ConstructibleEvaluation& e) {
  Json terms = Json::array();
  for (const auto& t : e.per_term)
    terms.push_back({{"prime", to_json(t.prime)}, {"coeff", t.coefficient}, {"eu", to_json(t.verdict)}});
  return {{"point", to_json(e.point)}, {"value", e.value ? Json(*e.value) : Json(nullptr)}, {"per_term", terms}};
}

Json to_json(const BehrendEvaluation& e) {
  Json terms = Json::array();
  for (const auto& t : e.breakdown)
    terms.push_back({{"image", to_json(t.component.image)},
                     {"image_dim", t.component.image_dimension},
                     {"multiplicity", t.component.multiplicity},
                     {"dominates", t.component.dominates},
                     {"eu", to_json(t.eu)},
                     {"contribution", t.contribution}});
  Json out{{"point", to_json(e.point)},
           {"value", e.value ? Json(*e.value) : Json(nullptr)},
           {"breakdown", terms},
           {"split", {{"dominating", e.dominant_sum}, {"other", e.other_sum}}}};
  if (!e.failure.empty()) out["failure"] = e.failure;
  return out;
}

Json to_json(const ComponentReport& r) {
  return {{"component", to_json(r.component)},
          {"generically_reduced", r.generically_reduced},
          {"dim", r.dim},
          {"generic_tangent_dim", r.generic_tangent_dim},
          {"sign_dim", r.sign_dim},
          {"sign_tangent", r.sign_tangent},
          {"m", r.m},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason}};
}

Json to_json(const ConstancyCertificate& c) {
  Json comps = Json::array();
  for (const auto& r : c.reports) comps.push_back(to_json(r));
  return {{"sign", c.sign},
          {"sign_inferred", c.sign_inferred},
          {"components", comps},
          {"overall", to_string(c.overall)},
          {"witnesses", c.witnesses}};
}

Json to_json(const PlanePartition& p) {
  Json out = Json::array();
  for (const auto& b : p.boxes) out.push_back({b[0], b[1], b[2]});
  return out;
}

Json to_json(const TangentReport& r) {
  return {{"ideal", to_json(r.ideal)},
          {"colength", r.colength},
          {"tangent_dim", r.tangent_dim},
          {"parity_holds", r.parity_holds}};
}

Json to_json(const ParityScan& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows)
    rows.push_back({{"partition_id", r.id},
                    {"partition", to_json(r.partition)},
                    {"tangent_dim", r.tangent_dim},
                    {"parity", r.parity_holds}});
  return {{"n", s.n},
          {"count", s.rows.size()},
          {"violations", s.violations},
          {"max_tangent", s.max_tangent},
          {"argmax", s.argmax},
          {"rows", rows}};
}

Json to_json(const QuotTangentReport& r) {
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_string());
  return {{"generators", gens},
          {"rank", r.rank},
          {"colength", r.colength},
          {"tangent_dim", r.tangent_dim},
          {"parity_holds", r.parity_holds}};
}

ModuleText parse_module_text(std::string_view raw, std::uint64_t characteristic) {
  std::string text;
  bool comment = false;
  for (char c : raw) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    if (!comment) text += c;
  }
  std::size_t semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("missing 'ring ...;' header", 0);
  ModuleText out;
  out.ring = parse_ideal_text(text.substr(0, semi + 1), characteristic).ring;
  std::size_t i = semi + 1;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c != '(') throw ParseError("expected '(' to open a module generator", i);
    int depth = 0;
    std::size_t start = i + 1, item = start;
    std::vector<Polynomial> comps;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if ((text[i] == ',' && depth == 1) || depth == 0) {
        comps.push_back(parse_polynomial(std::string_view(text).substr(item, i - item), out.ring));
        item = i + 1;
      }
      if (depth == 0) break;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in module generator", start - 1);
    ++i;
    if (out.rank == 0) out.rank = comps.size();
    if (comps.size() != out.rank) throw ParseError("module generators have different lengths", start - 1);
    out.generators.emplace_back(std::move(comps));
  }
  if (out.generators.empty()) throw ParseError("no module generators", semi + 1);
  return out;
}

}  // namespace behrend
