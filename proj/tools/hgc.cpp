// hgc: generate instances, build and verify containers, count independent sets.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input or an
// unmet precondition.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hgc/hgc.hpp"
#include "hgc/io.hpp"

using namespace hgc;

namespace {

constexpr const char* kToolVersion = "hgc 0.1.0";

struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, std::string>> digests;
  std::optional<std::uint64_t> seed;

  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }

  Json to_json() const {
    Json p = Json::object(), d = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    for (const auto& [k, v] : digests) d[k] = v;
    Json out{{"command", command}, {"parameters", p}, {"inputs", d}};
    out["seed"] = seed ? Json(*seed) : Json(nullptr);
    out["tool"] = kToolVersion;
    return out;
  }

  /// As '#' lines, which every text reader in the library skips.
  std::string comments() const {
    std::ostringstream out;
    out << "# command=" << command << '\n';
    for (const auto& [k, v] : params) out << "# " << k << '=' << v << '\n';
    for (const auto& [k, v] : digests) out << "# input." << k << '=' << v << '\n';
    if (seed) out << "# seed=" << *seed << '\n';
    out << "# tool=" << kToolVersion << '\n';
    return out.str();
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

UniformHypergraph load_hypergraph(const std::string& path, Manifest& manifest, const std::string& role = "hypergraph") {
  std::string text = read_file(path);
  manifest.digests.emplace_back(role, hex_digest(text));
  std::istringstream in(text);
  return read_hypergraph(in);
}

SmallGraph load_graph(const std::string& path, Manifest& manifest) {
  std::string text = read_file(path);
  manifest.digests.emplace_back("graph", hex_digest(text));
  std::istringstream in(text);
  return read_small_graph(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << text;
}

std::string dump(Json j) { return j.dump(2) + "\n"; }

std::size_t parse_min_size(const std::string& family) {
  const std::string prefix = "min-size:";
  if (family.rfind(prefix, 0) != 0) throw InputError("unknown family '" + family + "'; expected min-size:<s>");
  std::string digits = family.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("family size must be a nonnegative integer, got '" + digits + "'");
  return std::stoul(digits);
}

std::vector<std::vector<long long>> parse_config(const std::string& text) {
  std::vector<std::vector<long long>> points;
  std::stringstream all(text);
  std::string point;
  while (std::getline(all, point, ';')) {
    std::vector<long long> coords;
    std::stringstream items(point);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        coords.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw InputError("bad coordinate '" + item + "' in configuration");
      }
    }
    points.push_back(std::move(coords));
  }
  if (points.empty()) throw InputError("empty configuration");
  return points;
}

class Stopwatch {
 public:
  explicit Stopwatch(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    std::chrono::duration<double> s = std::chrono::steady_clock::now() - start_;
    std::cerr << what_ << ": " << s.count() << " s\n";
  }

 private:
  std::string what_;
  std::chrono::steady_clock::time_point start_;
};

struct GenArgs {
  std::size_t n = 0;
  int k = 3;
  int r = 2;
  std::string config;
  std::string graph;
  std::string out;
};

int run_gen(const std::string& kind, const GenArgs& a) {
  Manifest manifest;
  manifest.command = "gen " + kind;
  manifest.param("n", std::to_string(a.n));
  UniformHypergraph h(1, VertexSet(0), {});
  if (kind == "ap") {
    manifest.param("k", std::to_string(a.k));
    h = ap_hypergraph(a.n, a.k);
  } else if (kind == "poly") {
    manifest.param("k", std::to_string(a.k));
    manifest.param("r", std::to_string(a.r));
    h = poly_ap_hypergraph(a.n, a.k, a.r);
  } else if (kind == "homothetic") {
    manifest.param("config", a.config);
    auto config = parse_config(a.config);
    h = homothetic_hypergraph(config, static_cast<int>(config.front().size()), a.n);
  } else {
    auto graph = load_graph(a.graph, manifest);
    h = kind == "copies" ? copies_hypergraph(graph, a.n) : blowup_copies_hypergraph(graph, a.n);
  }
  std::ostringstream text;
  text << manifest.comments();
  write_hypergraph(text, h);
  emit(text.str(), a.out);
  return 0;
}

struct ContainersArgs {
  std::string input, p, c = "auto", eps = "auto", family, source = "all", out;
  std::size_t max_vertices = ExhaustiveLimit{}.max_vertices;
};

int run_containers(const ContainersArgs& a) {
  Stopwatch clock("containers");
  Manifest manifest;
  manifest.command = "containers";
  auto h = load_hypergraph(a.input, manifest);
  const Rational p = parse_rational(a.p);
  const std::size_t s = parse_min_size(a.family);
  if (s > h.vertex_count()) throw InputError("family size exceeds v(H)");
  ExhaustiveLimit limit{a.max_vertices};

  Rational eps = a.eps == "auto" ? density_epsilon(h, s, limit) : parse_rational(a.eps);
  if (eps == 0)
    throw DensityViolation("density_epsilon(H, " + std::to_string(s) +
                           ") = 0 at this n: some member of the family spans no edge");
  const Rational c = a.c == "auto" ? minimal_degree_constant(h, p) : parse_rational(a.c);
  WitnessSource source;
  if (a.source == "all") {
    source = WitnessSource::all;
  } else if (a.source == "maximal-closure") {
    source = WitnessSource::maximal_closure;
  } else {
    throw InputError("unknown source '" + a.source + "'");
  }
  for (auto [k, v] : {std::pair{"p", to_string(p)}, {"c", a.c}, {"eps", a.eps}, {"family", a.family},
                      {"source", a.source}, {"max_vertices", std::to_string(a.max_vertices)}})
    manifest.param(k, v);

  auto family = min_size_family(h.vertex_count(), s, eps);
  auto witnesses = witness_sets(h, source, family, c, p, limit);
  auto map = build_container_family(h, family, c, p, witnesses);
  Json j = to_json(map);
  j["manifest"] = manifest.to_json();
  emit(dump(j), a.out);
  std::cerr << "witnesses: " << witnesses.size() << ", records: " << map.records.size() << '\n';
  return 0;
}

struct VerifyArgs {
  std::string input, containers;
  std::uint64_t seed = 1;
  std::size_t max_vertices = ExhaustiveLimit{}.max_vertices;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  Stopwatch clock("verify");
  Manifest manifest;
  manifest.command = "verify";
  manifest.seed = a.seed;
  auto h = load_hypergraph(a.input, manifest);
  std::string text = read_file(a.containers);
  manifest.digests.emplace_back("containers", hex_digest(text));
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("container file is not JSON: ") + e.what());
  }
  auto map = container_map_from_json(j, h.capacity());
  if (map.k != h.uniformity()) throw InputError("container file was built for a different uniformity");
  auto family = min_size_family(h.vertex_count(), parse_min_size(map.family), map.eps);
  auto witnesses = independent_sets(h, std::nullopt, ExhaustiveLimit{a.max_vertices});
  ConsistencyOptions consistency;
  consistency.seed = a.seed;
  auto report = verify_containers(h, map, family, witnesses, consistency);

  if (a.json) {
    Json contracts = Json::array();
    for (const auto& c : report.contracts)
      contracts.push_back(Json{{"name", c.name},
                               {"passed", c.passed},
                               {"checked", c.checked},
                               {"failures", c.failures},
                               {"first_failure", c.first_failure}});
    std::cout << dump(Json{{"manifest", manifest.to_json()},
                           {"witnesses", witnesses.size()},
                           {"records", map.records.size()},
                           {"contracts", contracts},
                           {"passed", report.passed()}});
  } else {
    std::cout << "witnesses " << witnesses.size() << ", records " << map.records.size() << '\n';
    for (const auto& c : report.contracts) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " checked=" << c.checked << " failures=" << c.failures;
      if (!c.passed) std::cout << " first: " << c.first_failure;
      std::cout << '\n';
    }
  }
  return report.passed() ? 0 : 1;
}

struct CountArgs {
  std::string input, containers, out;
  std::optional<std::size_t> m;
  unsigned threads = 1;
  std::size_t max_vertices = ExhaustiveLimit{}.max_vertices;
  bool json = false;
};

int run_count(const std::string& method, const CountArgs& a) {
  Stopwatch clock("count " + method);
  Manifest manifest;
  manifest.command = "count " + method;
  auto h = load_hypergraph(a.input, manifest);
  CountReport report;
  if (method == "brute") {
    manifest.param("threads", std::to_string(a.threads));
    ExhaustiveLimit limit{a.max_vertices};
    report.counts = a.threads > 1 ? count_independent_by_size_scan(h, limit, a.threads)
                                  : count_independent_by_size(h, limit);
  } else {
    std::string text = read_file(a.containers);
    manifest.digests.emplace_back("containers", hex_digest(text));
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("container file is not JSON: ") + e.what());
    }
    auto map = container_map_from_json(j, h.capacity());
    for (std::size_t m = 0; m <= h.vertex_count(); ++m)
      report.counts.push_back(container_count_bound(map, static_cast<long long>(m)));
  }
  std::size_t first = 0;
  if (a.m) {
    if (*a.m >= report.counts.size()) throw InputError("m exceeds v(H)");
    manifest.param("m", std::to_string(*a.m));
    report.counts.erase(report.counts.begin(), report.counts.begin() + static_cast<std::ptrdiff_t>(*a.m));
    report.counts.resize(1);
    first = *a.m;
  }

  if (a.json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.counts.size(); ++i)
      rows.push_back(Json{{"m", first + i}, {"count", report.counts[i].str()}});
    emit(dump(Json{{"manifest", manifest.to_json()}, {"counts", rows}}), a.out);
    return 0;
  }
  std::ostringstream text;
  text << manifest.comments() << "m,count\n";
  for (std::size_t i = 0; i < report.counts.size(); ++i) text << first + i << ',' << report.counts[i].str() << '\n';
  emit(text.str(), a.out);
  return 0;
}

int run_density(const std::string& input, std::size_t s, std::size_t max_vertices, bool json) {
  Manifest manifest;
  manifest.command = "density";
  manifest.param("s", std::to_string(s));
  auto h = load_hypergraph(input, manifest);
  Rational eps = density_epsilon(h, s, ExhaustiveLimit{max_vertices});
  const char* note = eps == 0 ? "eps = 0 at this n: some s-subset spans no edge" : "";
  if (json) {
    std::cout << dump(Json{{"manifest", manifest.to_json()}, {"eps", to_string(eps)}, {"note", note}});
  } else {
    std::cout << to_string(eps) << '\n';
    if (eps == 0) std::cout << note << '\n';
  }
  return 0;
}

struct McArgs {
  std::size_t n = 0;
  std::string p, delta;
  int k = 3;
  std::uint64_t trials = 100, seed = 1;
  bool json = false;
};

int run_mc(const McArgs& a) {
  Manifest manifest;
  manifest.command = "mc";
  manifest.seed = a.seed;
  const Rational p = parse_rational(a.p), delta = parse_rational(a.delta);
  for (auto [k, v] : {std::pair{"n", std::to_string(a.n)}, {"p", to_string(p)}, {"delta", to_string(delta)},
                      {"k", std::to_string(a.k)}, {"trials", std::to_string(a.trials)}})
    manifest.param(k, v);
  auto est = mc_szemeredi(a.n, p, delta, a.k, a.trials, a.seed);
  if (a.json) {
    std::cout << dump(Json{{"manifest", manifest.to_json()},
                           {"successes", est.successes},
                           {"trials", est.trials},
                           {"fraction", to_string(est.fraction())},
                           {"generator", est.generator}});
  } else {
    std::cout << est.successes << '/' << est.trials << '\n';
  }
  return 0;
}

int run_m2(const std::string& graph_path, bool json) {
  Manifest manifest;
  manifest.command = "m2";
  auto g = load_graph(graph_path, manifest);
  Rational m2 = two_density(g);
  if (json) {
    std::cout << dump(Json{{"manifest", manifest.to_json()}, {"m2", to_string(m2)}});
  } else {
    std::cout << to_string(m2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph containers: instances, construction, verification and counting"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* gen = app.add_subcommand("gen", "Write an instance hypergraph");
  gen->require_subcommand(1);
  GenArgs gen_args;
  for (std::string kind : {"ap", "poly", "homothetic", "copies", "blowup"}) {
    auto* sub = gen->add_subcommand(kind);
    sub->add_option("--n", gen_args.n, "ground set size")->required();
    sub->add_option("--out", gen_args.out, "output path (stdout if omitted)");
    if (kind == "ap" || kind == "poly") sub->add_option("--k", gen_args.k, "progression length (poly: k+1 terms)");
    if (kind == "poly") sub->add_option("--r", gen_args.r, "common difference is a positive r-th power");
    if (kind == "homothetic") sub->add_option("--config", gen_args.config, "points, e.g. 0,0;1,0;0,1")->required();
    if (kind == "copies" || kind == "blowup") sub->add_option("--graph", gen_args.graph, "pattern graph file")->required();
    sub->callback([&, kind] { action = [&, kind] { return run_gen(kind, gen_args); }; });
  }

  ContainersArgs ca;
  auto* containers = app.add_subcommand("containers", "Build fingerprints and containers for every witness");
  containers->add_option("--input", ca.input)->required();
  containers->add_option("--p", ca.p, "num/den in (0,1)")->required();
  containers->add_option("--c", ca.c, "degree constant (auto: smallest valid)");
  containers->add_option("--eps", ca.eps, "density (auto: density_epsilon)");
  containers->add_option("--family", ca.family, "min-size:<s>")->required();
  containers->add_option("--source", ca.source, "all | maximal-closure");
  containers->add_option("--max-vertices", ca.max_vertices);
  containers->add_option("--out", ca.out);
  containers->callback([&] { action = [&] { return run_containers(ca); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check every container contract");
  verify->add_option("--input", va.input)->required();
  verify->add_option("--containers", va.containers)->required();
  verify->add_option("--seed", va.seed, "seed for sampled consistency pairs");
  verify->add_option("--max-vertices", va.max_vertices);
  verify->add_flag("--json", va.json);
  verify->callback([&] { action = [&] { return run_verify(va); }; });

  auto* count = app.add_subcommand("count", "Independent sets by size");
  count->require_subcommand(1);
  CountArgs cnt;
  for (std::string method : {"brute", "bound"}) {
    auto* sub = count->add_subcommand(method);
    sub->add_option("--input", cnt.input)->required();
    sub->add_option("--m", cnt.m, "report a single size");
    sub->add_option("--out", cnt.out);
    sub->add_flag("--json", cnt.json);
    if (method == "brute") {
      sub->add_option("--threads", cnt.threads)->check(CLI::PositiveNumber);
      sub->add_option("--max-vertices", cnt.max_vertices);
    } else {
      sub->add_option("--containers", cnt.containers)->required();
    }
    sub->callback([&, method] { action = [&, method] { return run_count(method, cnt); }; });
  }

  std::string density_input;
  std::size_t density_s = 0, density_limit = ExhaustiveLimit{}.max_vertices;
  bool density_json = false;
  auto* density = app.add_subcommand("density", "Largest eps for the min-size:s family");
  density->add_option("--input", density_input)->required();
  density->add_option("--s", density_s)->required();
  density->add_option("--max-vertices", density_limit);
  density->add_flag("--json", density_json);
  density->callback([&] { action = [&] { return run_density(density_input, density_s, density_limit, density_json); }; });

  McArgs mc_args;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate for random subsets of [n]");
  mc->add_option("--n", mc_args.n)->required();
  mc->add_option("--p", mc_args.p)->required();
  mc->add_option("--delta", mc_args.delta)->required();
  mc->add_option("--k", mc_args.k);
  mc->add_option("--trials", mc_args.trials);
  mc->add_option("--seed", mc_args.seed);
  mc->add_flag("--json", mc_args.json);
  mc->callback([&] { action = [&] { return run_mc(mc_args); }; });

  std::string m2_graph;
  bool m2_json = false;
  auto* m2 = app.add_subcommand("m2", "2-density of a graph");
  m2->add_option("--graph", m2_graph)->required();
  m2->add_flag("--json", m2_json);
  m2->callback([&] { action = [&] { return run_m2(m2_graph, m2_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const ContractError& e) {
    std::cerr << "contract violated: " << e.what() << '\n';
    return 1;
  } catch (const DensityViolation& e) {
    std::cerr << "density violation: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 2;
  }
}
