// Copyright 2026 The romdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// romdom: command-line front end for the solvers, constructions and
// verification suites. stdout carries only the payload; diagnostics go to
// stderr. Exit codes: 0 ok, 1 a checked bound failed, 2 usage or input error.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "romdom/romdom.hpp"

namespace {

using namespace romdom;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

const char* kFamilyHelp =
    "Family specs are kind:params:\n"
    "  path:N  cycle:N  complete:N  star:R (K1,R)  spider:R:MASK  hypercube:D\n"
    "  random:N:P:SEED with P a decimal (0.5) or fraction (1/2)\n"
    "spider:R:MASK subdivides spoke i when bit i of MASK is set.\n"
    "random draws splitmix64 once per pair i<j in lexicographic order and keeps\n"
    "the edge when draw % den < num.";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

template <typename T>
T parse_number(const std::string& s, const std::string& what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("bad " + what + ": '" + s + "'");
  }
  return value;
}

// "0.25" and "1/4" both give 1/4; fractions are kept in lowest terms so
// equal probabilities draw the same graph.
std::pair<std::uint64_t, std::uint64_t> reduce(std::uint64_t num, std::uint64_t den) {
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? std::pair{num, den} : std::pair{num / g, den / g};
}

std::pair<std::uint64_t, std::uint64_t> parse_probability(const std::string& s) {
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return reduce(parse_number<std::uint64_t>(s.substr(0, slash), "probability"),
                  parse_number<std::uint64_t>(s.substr(slash + 1), "probability"));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return {parse_number<std::uint64_t>(s, "probability"), 1};
  const std::string whole = s.substr(0, dot);
  const std::string frac = s.substr(dot + 1);
  if (frac.empty() || frac.size() > 18) throw ParameterError("bad probability: '" + s + "'");
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::uint64_t w = whole.empty() ? 0 : parse_number<std::uint64_t>(whole, "probability");
  return reduce(w * den + parse_number<std::uint64_t>(frac, "probability"), den);
}

FamilySpec parse_family(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& kind = parts[0];
  auto need = [&](std::size_t k) {
    if (parts.size() != k + 1) {
      throw ParameterError("family '" + kind + "' takes " + std::to_string(k) +
                           " parameter(s): '" + text + "'");
    }
  };
  auto arg = [&](std::size_t i) { return parse_number<int>(parts[i], kind + " parameter"); };
  if (kind == "path") return need(1), FamilySpec::path(arg(1));
  if (kind == "cycle") return need(1), FamilySpec::cycle(arg(1));
  if (kind == "complete") return need(1), FamilySpec::complete(arg(1));
  if (kind == "star") return need(1), FamilySpec::star(arg(1));
  if (kind == "hypercube") return need(1), FamilySpec::hypercube(arg(1));
  if (kind == "spider") {
    need(2);
    return FamilySpec::spider(arg(1), parse_number<std::uint64_t>(parts[2], "spider mask"));
  }
  if (kind == "random") {
    need(3);
    auto [num, den] = parse_probability(parts[2]);
    return FamilySpec::random(arg(1), num, den, parse_number<std::uint64_t>(parts[3], "seed"));
  }
  throw ParameterError("unknown family '" + kind + "'");
}

// A family spec when it contains ':', otherwise a graph6 string.
Graph parse_source(const std::string& text) {
  if (text.find(':') != std::string::npos) return make_family(parse_family(text));
  return parse_graph6(text);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line).with_label(path + ":" + std::to_string(lineno)));
    } catch (const ParseError& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError("'" + path + "' holds no graphs");
  return out;
}

Json graph_json(const Graph& g) {
  return Json{{"label", g.label()}, {"graph6", write_graph6(g)}, {"order", g.order()},
              {"edges", g.edge_count()}};
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_output(const std::string& path, bool append = false) {
  std::ofstream out(path, append ? std::ios::app : std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

// ---------------------------------------------------------------------------

struct LimitOptions {
  long long budget = SolverLimits{}.node_budget;
  int enumerate_max_n = SolverLimits{}.enumerate_max_n;

  void add(CLI::App* app) {
    app->add_option("--budget", budget, "Search node budget per solver call")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app->add_option("--enumerate-max-n", enumerate_max_n,
                    "Largest order for optimal-function enumeration")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }
  SolverLimits limits() const {
    SolverLimits l;
    l.node_budget = budget;
    l.enumerate_max_n = enumerate_max_n;
    return l;
  }
};

struct SolveOptions {
  std::string g6, file, family, invariant;
  LimitOptions limits;
};

Json solve_one(const Graph& g, const std::string& invariant, const SolverLimits& limits) {
  Json out{{"graph", graph_json(g)}, {"invariant", invariant}};
  Json value, witness, nodes = nullptr;
  if (invariant == "gamma" || invariant == "p2") {
    auto r = invariant == "gamma" ? domination_number(g, limits) : two_packing_number(g, limits);
    value = r.value;
    witness = to_json(r.witness);
    nodes = r.node_count;
  } else if (invariant == "gamma-r") {
    auto r = roman_domination_number(g, limits);
    value = r.value;
    witness = to_json(r.witness);
    nodes = r.node_count;
  } else if (invariant == "codes") {
    auto codes = efficient_dominating_sets(g, limits);
    value = codes.size();
    witness = Json::array();
    for (const auto& c : codes) witness.push_back(to_json(c));
  } else if (invariant == "roman") {
    auto gm = domination_number(g, limits);
    auto gr = roman_domination_number(g, limits);
    value = gr.value == 2 * gm.value;
    witness = Json{{"gamma", gm.value}, {"gamma_r", gr.value}, {"rdf", to_json(gr.witness)}};
  } else {
    auto rdfs = enumerate_optimal_rdfs(g, limits);
    value = rdfs.size();
    witness = Json::array();
    for (const auto& f : rdfs) witness.push_back(to_json(f));
  }
  out["value"] = std::move(value);
  out["witness"] = std::move(witness);
  out["node_count"] = std::move(nodes);
  return out;
}

int run_solve(const SolveOptions& o) {
  std::vector<Graph> graphs;
  if (!o.g6.empty()) graphs.push_back(parse_graph6(o.g6));
  if (!o.family.empty()) graphs.push_back(make_family(parse_family(o.family)));
  if (!o.file.empty()) graphs = read_graph6_file(o.file);
  for (const auto& g : graphs) std::cout << solve_one(g, o.invariant, o.limits.limits()).dump() << '\n';
  return 0;
}

struct ProductOptions {
  std::string a, b, kind = "cartesian";
};

ProductKind parse_kind(const std::string& s) {
  return s == "strong" ? ProductKind::strong : ProductKind::cartesian;
}

int run_product(const ProductOptions& o) {
  std::cout << write_graph6(product(parse_source(o.a), parse_source(o.b), parse_kind(o.kind)))
            << '\n';
  return 0;
}

struct ConstructOptions {
  std::string theorem, a, b;
  LimitOptions limits;
};

int run_construct(const ConstructOptions& o) {
  const Graph g = parse_source(o.a);
  const Graph h = parse_source(o.b);
  const SolverLimits limits = o.limits.limits();
  const ConstructionOutcome c = o.theorem == "superior" ? replicate_construction(g, h, limits)
                                : o.theorem == "eldek"  ? swap_construction(g, h, limits)
                                : o.theorem == "flojito" ? cross_construction(g, h, limits)
                                                         : strong_case_construction(g, h, limits);
  Json out = to_json(c);
  out["product"] = graph_json(c.product);
  out["valid"] = validate_rdf(c.product, c.rdf);
  std::cout << out.dump() << '\n';
  return 0;
}

struct FamiliesOptions {
  std::string kind, args;
  int from = 1, to = 1;
};

int run_families(const FamiliesOptions& o) {
  if (o.from > o.to) throw ParameterError("--from exceeds --to");
  for (int k = o.from; k <= o.to; ++k) {
    std::string spec = o.kind + ":" + std::to_string(k);
    if (!o.args.empty()) spec += ":" + o.args;
    std::cout << write_graph6(make_family(parse_family(spec))) << '\n';
  }
  return 0;
}

struct VerifyOptions {
  std::string corpus = "families";
  int max_n = 4;
  int min_n = 1;
  int count = 100;
  std::uint64_t seed = 1;
  std::string theorems = "all";
  std::string products = "cartesian,strong";
  int max_product_order = kMaxVertices;
  std::string report, csv, log;
  int jobs = 1;
  LimitOptions limits;
};

int run_verify(const VerifyOptions& o) {
  SuiteSpec spec;
  spec.limits = o.limits.limits();
  spec.jobs = o.jobs;
  spec.max_product_order = o.max_product_order;
  if (o.theorems != "all") {
    spec.theorems.clear();
    for (const auto& name : split(o.theorems, ',')) {
      auto t = parse_theorem(name);
      if (!t) throw ParameterError("unknown theorem '" + name + "'");
      spec.theorems.push_back(*t);
    }
  }
  spec.products.clear();
  for (const auto& p : split(o.products, ',')) {
    if (p != "cartesian" && p != "strong") throw ParameterError("unknown product '" + p + "'");
    spec.products.insert(parse_kind(p));
  }
  if (o.corpus == "exhaustive") {
    if (o.max_n < 1 || o.max_n > 5) throw ParameterError("--max-n must be in 1..5 for exhaustive");
    spec.graphs = exhaustive_labeled(o.max_n);
    spec.corpus_description = "exhaustive-labeled(" + std::to_string(o.max_n) + ")";
  } else if (o.corpus == "random") {
    if (o.min_n < 1 || o.min_n > o.max_n) throw ParameterError("need 1 <= --min-n <= --max-n");
    spec.graphs = random_corpus(o.count, o.min_n, o.max_n, o.seed);
    spec.corpus_description = "random(" + std::to_string(o.count) + "," + std::to_string(o.min_n) +
                              ".." + std::to_string(o.max_n) + "," + std::to_string(o.seed) + ")";
  } else {
    spec.graphs = default_family_corpus();
    spec.corpus_description = "families";
  }
  spec.name = "verify " + spec.corpus_description;

  // Open every output before the run so an unwritable path fails fast.
  std::optional<std::ofstream> report_out, csv_out, log_out;
  if (!o.report.empty()) report_out = open_output(o.report);
  if (!o.csv.empty()) csv_out = open_output(o.csv);
  if (!o.log.empty()) log_out = open_output(o.log, true);

  const auto start = std::chrono::steady_clock::now();
  const Report report = run_suite(spec);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string body = to_json(report).dump(2) + "\n";
  if (report_out) {
    *report_out << body;
    if (!report_out->flush()) throw InputError("cannot write '" + o.report + "'");
  } else {
    std::cout << body;
  }
  if (csv_out) *csv_out << to_csv(report);
  if (log_out) {
    const std::string stamp = utc_timestamp();
    for (const auto& r : report.records) {
      Json line{{"timestamp", stamp}, {"suite", report.suite}, {"record", to_json(r)}};
      *log_out << line.dump() << '\n';
    }
    Json done{{"timestamp", stamp},
              {"suite", report.suite},
              {"summary", to_json(report.summary)},
              {"wall_seconds", seconds}};
    *log_out << done.dump() << '\n';
  }

  const auto& s = report.summary;
  std::cerr << "records " << s.records << ", checked " << s.checked << ", held " << s.held
            << ", violated " << s.violated << ", tight " << s.tight << ", hypothesis-skipped "
            << s.hypothesis_skipped << ", budget-skipped " << s.budget_skipped
            << ", construction failures " << s.construction_failures << '\n';
  for (const auto& r : report.records) {
    if (r.violation()) std::cerr << "VIOLATION " << to_json(r).dump() << '\n';
  }
  return report.all_held() ? 0 : kExitViolation;
}

struct PremiseOptions {
  std::string kind = "cycle";
  std::string partner = "star:3";
  int from = 3, to = 7;
  LimitOptions limits;
};

int run_premise(const PremiseOptions& o) {
  if (o.from > o.to) throw ParameterError("--from exceeds --to");
  const Graph partner = parse_source(o.partner);
  const PathOrCycle kind = o.kind == "path" ? PathOrCycle::path : PathOrCycle::cycle;
  for (int n = o.from; n <= o.to; ++n) {
    std::cout << to_json(check_pncn_premise(n, kind, partner, o.limits.limits())).dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination and Roman domination of graph products"};
  app.footer(kFamilyHelp);
  app.require_subcommand(1, 1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Compute one invariant; one JSON line per graph");
  auto* src = s->add_option_group("source");
  src->add_option("--g6", solve.g6, "graph6 string");
  src->add_option("--file", solve.file, "File of graph6 lines");
  src->add_option("--family", solve.family, "Family spec, e.g. path:4");
  src->require_option(1);
  s->add_option("--invariant", solve.invariant, "Invariant to compute")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma-r", "p2", "codes", "roman", "enumerate-rdfs"}));
  solve.limits.add(s);

  ProductOptions prod;
  auto* p = app.add_subcommand("product", "Print the graph6 of a product");
  p->add_option("--a", prod.a, "First factor: family spec or graph6")->required();
  p->add_option("--b", prod.b, "Second factor: family spec or graph6")->required();
  p->add_option("--kind", prod.kind, "Product kind")
      ->capture_default_str()
      ->check(CLI::IsMember({"cartesian", "strong"}));

  ConstructOptions cons;
  auto* c = app.add_subcommand("construct", "Build a Roman dominating function on a product");
  c->add_option("--theorem", cons.theorem,
                "superior (replicate), eldek (swap), flojito (cross) or strong")
      ->required()
      ->check(CLI::IsMember({"superior", "eldek", "flojito", "strong"}));
  c->add_option("--a", cons.a, "First factor")->required();
  c->add_option("--b", cons.b, "Second factor")->required();
  cons.limits.add(c);

  FamiliesOptions fam;
  auto* f = app.add_subcommand("families", "Print graph6 lines for kind:K[:args], K in a range");
  f->add_option("--kind", fam.kind, "Family kind")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "spider", "hypercube", "random"}));
  f->add_option("--from", fam.from, "First parameter")->required();
  f->add_option("--to", fam.to, "Last parameter")->required();
  f->add_option("--args", fam.args, "Remaining parameters, e.g. 1 for spider or 0.5:42 for random");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--corpus", ver.corpus, "Corpus")
      ->capture_default_str()
      ->check(CLI::IsMember({"exhaustive", "families", "random"}));
  v->add_option("--max-n", ver.max_n, "Largest order (exhaustive, random)")->capture_default_str();
  v->add_option("--min-n", ver.min_n, "Smallest order (random)")->capture_default_str();
  v->add_option("--count", ver.count, "Graph count (random)")->capture_default_str();
  v->add_option("--seed", ver.seed, "Seed (random)")->capture_default_str();
  v->add_option("--theorems", ver.theorems, "Comma-separated theorem ids, or all")
      ->capture_default_str();
  v->add_option("--products", ver.products, "Comma-separated product kinds")->capture_default_str();
  v->add_option("--max-product-order", ver.max_product_order, "Skip larger products")
      ->capture_default_str();
  v->add_option("--report", ver.report, "JSON report path (default stdout)");
  v->add_option("--csv", ver.csv, "CSV projection path");
  v->add_option("--log", ver.log, "RunLog path; appends one JSON line per record");
  v->add_option("--jobs", ver.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  ver.limits.add(v);

  PremiseOptions pre;
  auto* pc = app.add_subcommand("premise-check",
                                "Distinct |B2| over optimal functions of P_n or C_n");
  pc->add_option("--kind", pre.kind, "path or cycle")
      ->capture_default_str()
      ->check(CLI::IsMember({"path", "cycle"}));
  pc->add_option("--from", pre.from, "First n")->capture_default_str();
  pc->add_option("--to", pre.to, "Last n")->capture_default_str();
  pc->add_option("--partner", pre.partner, "Non-empty left factor")->capture_default_str();
  pre.limits.add(pc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (s->parsed()) return run_solve(solve);
    if (p->parsed()) return run_product(prod);
    if (c->parsed()) return run_construct(cons);
    if (f->parsed()) return run_families(fam);
    if (v->parsed()) return run_verify(ver);
    if (pc->parsed()) return run_premise(pre);
  } catch (const std::exception& e) {
    std::cerr << "romdom: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
