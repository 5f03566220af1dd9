#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "behrend/io.hpp"
#include "behrend/parse.hpp"

using namespace behrend;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInconclusive = 2;

struct Outcome {
  Json result;
  int code = kOk;
  std::vector<std::string> text;
  std::vector<std::vector<std::string>> csv;  // header row first; empty when unsupported
};

struct Flags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;
  std::optional<std::uint64_t> characteristic;
  std::optional<int> jobs;
  std::optional<std::string> format;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> max_pairs;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig resolve(const Flags& f) {
  RunConfig c;
  std::string path = f.config_path;
  if (path.empty())
    if (const char* env = std::getenv("BEHREND_CONFIG")) path = env;
  if (!path.empty()) {
    try {
      c = config_from_json(Json::parse(read_file(path)));
    } catch (const Json::exception& e) {
      throw InputError("bad configuration file '" + path + "': " + e.what());
    }
  }
  if (f.seed) c.seed = *f.seed;
  if (f.order) c.order = *f.order;
  if (f.characteristic) c.characteristic = *f.characteristic;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.format) c.format = *f.format;
  if (f.max_n) c.max_n = *f.max_n;
  if (f.max_pairs) c.max_gb_pairs = *f.max_pairs;
  if (c.format != "json" && c.format != "csv" && c.format != "text")
    throw InputError("unknown output format '" + c.format + "'");
  return c;
}

Ideal load_ideal(const std::string& path, const RunConfig& c) {
  auto parsed = parse_ideal_text(read_file(path), c.characteristic);
  if (parsed.ring->size() > c.max_variables)
    throw InputError("ring has " + std::to_string(parsed.ring->size()) + " variables; bound is " +
                     std::to_string(c.max_variables));
  return Ideal(parsed.ring, std::move(parsed.generators));
}

Point load_point(const std::string& text, const Ideal& I) {
  Point p = parse_point(text);
  if (p.size() != I.ring()->size())
    throw InputError("point has " + std::to_string(p.size()) + " coordinates; ring has " +
                     std::to_string(I.ring()->size()));
  return p;
}

std::string joined(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string value_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "none"; }

void emit(const std::string& command, const RunConfig& c, const Outcome& o) {
  if (c.format == "json") {
    Json doc{{"command", command}, {"config", to_json(c)}, {"result", o.result}, {"exit_code", o.code}};
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "# behrend " << command << " seed=" << c.seed << " order=" << c.order << " char=" << c.characteristic
            << "\n";
  if (c.format == "text") {
    for (const auto& line : o.text) std::cout << line << "\n";
    return;
  }
  for (const auto& row : o.csv) {
    std::vector<std::string> fields;
    for (const auto& f : row) fields.push_back(csv_field(f));
    std::cout << joined(fields, ",") << "\n";
  }
}

// ---- commands ----

Outcome cmd_gb(const std::string& file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  auto order = order_from_name(c.order, I.ring()->size());
  const auto& gb = I.groebner(order);
  Outcome o;
  Json basis = Json::array();
  for (const auto& g : gb.elements()) {
    basis.push_back(g.to_string());
    o.text.push_back(g.to_string());
  }
  o.result = {{"ring", I.ring()->variables()}, {"order", c.order}, {"basis", basis}};
  o.csv.push_back({"generator"});
  for (const auto& g : gb.elements()) o.csv.push_back({g.to_string()});
  return o;
}

Outcome cmd_eliminate(const std::string& file, const std::string& vars, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  std::vector<std::size_t> drop;
  std::stringstream ss(vars);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    auto idx = I.ring()->index_of(name);
    if (!idx) throw InputError("unknown variable '" + name + "'");
    drop.push_back(*idx);
  }
  Ideal E = eliminate(I, drop).reduced();
  Outcome o;
  o.result = {{"eliminated", vars}, {"ideal", to_json(E)}};
  o.text = E.to_strings();
  o.csv.push_back({"generator"});
  for (const auto& g : E.to_strings()) o.csv.push_back({g});
  return o;
}

Outcome cmd_saturate(const std::string& file, const std::string& by, const std::string& by_file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  Ideal S(I.ring());
  if (!by_file.empty()) {
    auto J = parse_ideal_text(read_file(by_file), c.characteristic, I.ring());
    if (!same_ring(J.ring, I.ring())) throw InputError("saturating ideal lives in a different ring");
    S = saturate(I, Ideal(I.ring(), J.generators));
  } else if (!by.empty()) {
    S = saturate(I, parse_polynomial(by, I.ring()));
  } else {
    throw InputError("saturate needs --by or --by-ideal");
  }
  S = S.reduced();
  Outcome o;
  o.result = {{"ideal", to_json(S)}};
  o.text = S.to_strings();
  o.csv.push_back({"generator"});
  for (const auto& g : S.to_strings()) o.csv.push_back({g});
  return o;
}

Outcome cmd_dim(const std::string& file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  Outcome o;
  int d = dimension(I);
  Json r{{"dimension", d}};
  if (d >= 0) {
    std::vector<std::string> u;
    for (auto i : independent_set(I)) u.push_back(I.ring()->variable(i));
    r["independent_set"] = u;
    r["affine_degree"] = affine_degree(I);
    if (I.is_homogeneous()) {
      auto hs = hilbert_series(I);
      std::vector<std::string> num;
      for (const auto& a : hs.numerator) num.push_back(a.get_str());
      r["hilbert_numerator"] = num;
      r["hilbert_degree"] = hs.degree().get_str();
    }
    if (auto n = colength(I)) r["colength"] = *n;
  }
  o.result = r;
  o.text.push_back("dimension " + std::to_string(d));
  if (r.contains("affine_degree")) o.text.push_back("degree " + std::to_string(r["affine_degree"].get<int>()));
  o.csv = {{"dimension"}, {std::to_string(d)}};
  return o;
}

Outcome cmd_mincomp(const std::string& file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  auto comps = minimal_primes(I, true);
  Outcome o;
  o.result = Json::array();
  o.csv.push_back({"generators", "multiplicity", "dimension", "degree", "primality_status"});
  for (const auto& pc : comps) {
    o.result.push_back(to_json(pc));
    o.text.push_back(pc.prime.to_string() + "  mult " + std::to_string(pc.multiplicity) + "  dim " +
                     std::to_string(pc.dimension) + "  deg " + std::to_string(pc.degree) + "  " + to_string(pc.status));
    o.csv.push_back({joined(pc.prime.to_strings()), std::to_string(pc.multiplicity), std::to_string(pc.dimension),
                     std::to_string(pc.degree), to_string(pc.status)});
    if (pc.status == PrimalityStatus::Undecided) o.code = kInconclusive;
  }
  return o;
}

Outcome cmd_cone(const std::string& file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  auto d = cone_components(I);
  Outcome o;
  Json comps = Json::array();
  o.csv.push_back({"image", "multiplicity", "image_dim", "dominates", "cone_prime"});
  for (const auto& comp : d.components) {
    comps.push_back(to_json(comp));
    o.text.push_back("D = " + comp.cone_prime.to_string() + "  mult " + std::to_string(comp.multiplicity) +
                     "  image " + comp.image.to_string() + (comp.dominates ? "  dominating" : "  contracted"));
    o.csv.push_back({comp.image.to_string(), std::to_string(comp.multiplicity), std::to_string(comp.image_dimension),
                     comp.dominates ? "true" : "false", comp.cone_prime.to_string()});
    if (comp.status == PrimalityStatus::Undecided) o.code = kInconclusive;
  }
  o.result = {{"cone_variables", d.setup.cone_vars},
              {"generators", to_json(Ideal(d.setup.base, d.setup.generators))},
              {"cone_ideal", to_json(d.cone_ideal)},
              {"components", comps}};
  return o;
}

Outcome cmd_cycle(const std::string& file, const RunConfig& c) {
  Ideal I = load_ideal(file, c);
  auto cyc = signed_support_cycle(I);
  Outcome o;
  o.result = to_json(cyc);
  o.csv.push_back({"prime", "coeff", "dimension"});
  for (const auto& t : cyc.terms) {
    o.text.push_back((t.coefficient >= 0 ? "+" : "") + std::to_string(t.coefficient) + " [" + t.prime.to_string() + "]");
    o.csv.push_back({t.prime.to_string(), std::to_string(t.coefficient), std::to_string(t.dimension)});
    if (t.status == PrimalityStatus::Undecided) o.code = kInconclusive;
  }
  return o;
}

Outcome cmd_eu(const std::string& file, const std::string& point, bool assume_prime, const RunConfig& c) {
  Ideal V = load_ideal(file, c);
  Point p = load_point(point, V);
  std::optional<PrimalityStatus> status;
  if (assume_prime) status = PrimalityStatus::Certified;
  auto v = eu_point({V, p, status}, c.seed);
  Outcome o;
  o.result = to_json(v);
  o.result["point"] = to_json(p);
  o.result["primality_asserted"] = assume_prime;
  o.text.push_back("Eu = " + value_text(v.value) + "  (" + to_string(v.rule) + (v.note.empty() ? "" : ": " + v.note) + ")");
  o.csv = {{"value", "rule"}, {value_text(v.value), to_string(v.rule)}};
  if (!v.value) o.code = kInconclusive;
  return o;
}

Outcome cmd_eval(const std::string& file, const std::vector<std::string>& points, const RunConfig& c) {
  Ideal J = load_ideal(file, c);
  BehrendEvaluator ev(J, c.seed);
  Outcome o;
  Json evals = Json::array();
  o.csv.push_back({"point", "value", "dominating", "other"});
  for (const auto& text : points) {
    Point p = load_point(text, J);
    auto e = ev.at(p);
    evals.push_back(to_json(e));
    o.text.push_back("nu(" + text + ") = " + value_text(e.value) + (e.failure.empty() ? "" : "  (" + e.failure + ")"));
    o.csv.push_back({text, value_text(e.value), std::to_string(e.dominant_sum), std::to_string(e.other_sum)});
    if (!e.value) o.code = kInconclusive;
  }
  o.result = points.size() == 1 ? evals[0] : evals;
  if (points.size() == 1) o.result["value"] = evals[0]["value"];
  return o;
}

Outcome cmd_falsify(const std::string& file, const std::string& sign, const RunConfig& c) {
  Ideal J = load_ideal(file, c);
  std::optional<int> s;
  if (!sign.empty()) {
    if (sign == "+1" || sign == "1" || sign == "+")
      s = 1;
    else if (sign == "-1" || sign == "-")
      s = -1;
    else
      throw InputError("sign must be +1 or -1");
  }
  auto cert = constancy_falsifier(J, s);
  Outcome o;
  o.result = to_json(cert);
  o.text.push_back(to_string(cert.overall) + "  (sign " + std::to_string(cert.sign) +
                   (cert.sign_inferred ? ", inferred)" : ")"));
  for (const auto& w : cert.witnesses) o.text.push_back("  witness: " + w);
  o.csv.push_back({"component", "verdict", "reason"});
  for (const auto& r : cert.reports)
    o.csv.push_back({r.component.prime.to_string(), to_string(r.verdict), r.reason});
  if (cert.overall == ConstancyCertificate::Overall::Inconclusive) o.code = kInconclusive;
  return o;
}

Outcome cmd_enumerate(std::size_t n, const RunConfig& c) {
  auto parts = enumerate_plane_partitions(n, c.max_n);
  Outcome o;
  o.result = {{"n", n}, {"count", parts.size()}, {"partitions", Json::array()}};
  o.csv.push_back({"partition_id", "n", "boxes"});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    o.result["partitions"].push_back(to_json(parts[i]));
    o.text.push_back(std::to_string(i) + " " + parts[i].to_string());
    o.csv.push_back({std::to_string(i), std::to_string(n), parts[i].to_string()});
  }
  return o;
}

Outcome cmd_tangent(const std::string& file, const RunConfig& c) {
  auto r = tangent_dimension_hilb(load_ideal(file, c));
  Outcome o;
  o.result = to_json(r);
  o.text.push_back("n " + std::to_string(r.colength) + "  tangent_dim " + std::to_string(r.tangent_dim) + "  parity " +
                   (r.parity_holds ? "holds" : "FAILS"));
  o.csv = {{"n", "tangent_dim", "parity"},
           {std::to_string(r.colength), std::to_string(r.tangent_dim), r.parity_holds ? "true" : "false"}};
  return o;
}

Outcome cmd_parity_scan(std::size_t n, const RunConfig& c) {
  auto s = parity_scan(n, c.jobs, c.max_n);
  Outcome o;
  o.result = to_json(s);
  o.csv.push_back({"partition_id", "n", "tangent_dim", "parity"});
  for (const auto& r : s.rows)
    o.csv.push_back({std::to_string(r.id), std::to_string(n), std::to_string(r.tangent_dim), r.parity_holds ? "true" : "false"});
  o.text.push_back(std::to_string(s.rows.size()) + " ideals, " + std::to_string(s.violations.size()) +
                   " parity violations, max tangent " + std::to_string(s.max_tangent));
  return o;
}

Outcome cmd_quot(const std::string& file, const RunConfig& c) {
  auto m = parse_module_text(read_file(file), c.characteristic);
  auto r = quot_tangent_dimension(m.generators, m.rank);
  Outcome o;
  o.result = to_json(r);
  o.text.push_back("r " + std::to_string(r.rank) + "  n " + std::to_string(r.colength) + "  tangent_dim " +
                   std::to_string(r.tangent_dim) + "  parity " + (r.parity_holds ? "holds" : "FAILS"));
  o.csv = {{"rank", "n", "tangent_dim", "parity"},
           {std::to_string(r.rank), std::to_string(r.colength), std::to_string(r.tangent_dim),
            r.parity_holds ? "true" : "false"}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal cones, local Euler obstructions and Behrend functions of affine schemes"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--config", flags.config_path, "JSON configuration file (default: $BEHREND_CONFIG)");
  app.add_option("--seed", flags.seed, "seed for generic choices");
  app.add_option("--order", flags.order, "monomial order for gb: degrevlex or lex");
  app.add_option("--char", flags.characteristic, "coefficient characteristic, 0 or a prime");
  app.add_option("--jobs", flags.jobs, "worker threads (0 = all)");
  app.add_option("--format", flags.format, "json, csv or text");
  app.add_option("--max-n", flags.max_n, "largest n for plane partition enumeration");
  app.add_option("--max-pairs", flags.max_pairs, "S-pair bound for Groebner computations");
  app.fallthrough();

  std::string command;
  std::function<Outcome(const RunConfig&)> action;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome(const RunConfig&)> fn) {
    sub->callback([&, name, fn] {
      command = name;
      action = fn;
    });
  };

  std::string ideal_file, point, by, by_file, vars, sign, module_file;
  std::vector<std::string> points;
  bool assume_prime = false;
  std::size_t n = 0;

  auto gb = app.add_subcommand("gb", "reduced Groebner basis");
  gb->add_option("--ideal", ideal_file)->required();
  bind(gb, "gb", [&](const RunConfig& c) { return cmd_gb(ideal_file, c); });

  auto el = app.add_subcommand("eliminate", "elimination ideal");
  el->add_option("--ideal", ideal_file)->required();
  el->add_option("--vars", vars, "comma-separated variables to eliminate")->required();
  bind(el, "eliminate", [&](const RunConfig& c) { return cmd_eliminate(ideal_file, vars, c); });

  auto sat = app.add_subcommand("saturate", "saturation I : f^inf or I : J^inf");
  sat->add_option("--ideal", ideal_file)->required();
  sat->add_option("--by", by, "polynomial");
  sat->add_option("--by-ideal", by_file, "ideal file");
  bind(sat, "saturate", [&](const RunConfig& c) { return cmd_saturate(ideal_file, by, by_file, c); });

  auto dm = app.add_subcommand("dim", "dimension, degree and Hilbert data");
  dm->add_option("--ideal", ideal_file)->required();
  bind(dm, "dim", [&](const RunConfig& c) { return cmd_dim(ideal_file, c); });

  auto mc = app.add_subcommand("mincomp", "minimal primes with multiplicities");
  mc->add_option("--ideal", ideal_file)->required();
  bind(mc, "mincomp", [&](const RunConfig& c) { return cmd_mincomp(ideal_file, c); });

  auto cn = app.add_subcommand("cone", "components of the normal cone");
  cn->add_option("--ideal", ideal_file)->required();
  bind(cn, "cone", [&](const RunConfig& c) { return cmd_cone(ideal_file, c); });

  auto cy = app.add_subcommand("cycle", "signed support cycle");
  cy->add_option("--ideal", ideal_file)->required();
  bind(cy, "cycle", [&](const RunConfig& c) { return cmd_cycle(ideal_file, c); });

  auto eu = app.add_subcommand("eu", "local Euler obstruction of a prime at a point");
  eu->add_option("--variety", ideal_file)->required();
  eu->add_option("--point", point)->required();
  eu->add_flag("--assume-prime", assume_prime, "skip the primality check; recorded in the output");
  bind(eu, "eu", [&](const RunConfig& c) { return cmd_eu(ideal_file, point, assume_prime, c); });

  auto add_eval = [&](CLI::App* parent, const std::string& name) {
    auto ev = parent->add_subcommand("eval", "Behrend function at points");
    ev->add_option("--ideal", ideal_file)->required();
    ev->add_option("--point", points, "repeatable")->required();
    bind(ev, name, [&](const RunConfig& c) { return cmd_eval(ideal_file, points, c); });
    auto fa = parent->add_subcommand("falsify", "necessary conditions for constancy");
    fa->add_option("--ideal", ideal_file)->required();
    fa->add_option("--sign", sign, "+1 or -1; inferred when absent");
    bind(fa, name == "eval" ? "falsify" : "behrend falsify",
         [&](const RunConfig& c) { return cmd_falsify(ideal_file, sign, c); });
  };
  auto beh = app.add_subcommand("behrend", "Behrend function tools");
  beh->require_subcommand(1);
  add_eval(beh, "behrend eval");
  add_eval(&app, "eval");

  auto hilb = app.add_subcommand("hilb", "Hilbert and Quot schemes of points");
  hilb->require_subcommand(1);
  auto en = hilb->add_subcommand("enumerate", "plane partitions of n");
  en->add_option("--n", n)->required();
  bind(en, "hilb enumerate", [&](const RunConfig& c) { return cmd_enumerate(n, c); });
  auto tg = hilb->add_subcommand("tangent", "dim Hom(I, R/I)");
  tg->add_option("--ideal", ideal_file)->required();
  bind(tg, "hilb tangent", [&](const RunConfig& c) { return cmd_tangent(ideal_file, c); });
  auto ps = hilb->add_subcommand("parity-scan", "tangent parity over monomial ideals of colength n");
  ps->add_option("--n", n)->required();
  bind(ps, "hilb parity-scan", [&](const RunConfig& c) { return cmd_parity_scan(n, c); });
  auto qt = hilb->add_subcommand("quot-tangent", "dim Hom(K, R^r/K)");
  qt->add_option("--module", module_file)->required();
  bind(qt, "hilb quot-tangent", [&](const RunConfig& c) { return cmd_quot(module_file, c); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  RunConfig config;
  try {
    config = resolve(flags);
    Ideal::set_max_pairs(config.max_gb_pairs);
    if (config.jobs > 0) omp_set_num_threads(config.jobs);
    Outcome o = action(config);
    if (config.format == "csv" && o.csv.empty()) throw InputError("csv output is not available for " + command);
    emit(command, config, o);
    return o.code;
  } catch (const ResourceLimit& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  }
  return kInputError;
}
