#include "circdist/circdist.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using circdist::io::Json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInvalid = 2;
constexpr int kInconsistent = 3;

// Graph given as C(m,p), as a circulant (n, generators) or as a JSON file.
struct GraphSource {
  std::size_t m = 0;
  std::size_t p = 0;
  std::size_t n = 0;
  std::vector<std::size_t> generators;
  std::string file;

  CLI::Option* m_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* gen_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void attach(CLI::App& cmd, bool allow_file = true) {
    m_opt = cmd.add_option("--m", m, "Module size m of C(m,p)");
    p_opt = cmd.add_option("--p", p, "Period p of C(m,p)");
    n_opt = cmd.add_option("--n", n, "Order of a circulant graph");
    gen_opt = cmd.add_option("--generators", generators, "Circulant generators, comma separated")->delimiter(',');
    m_opt->needs(p_opt);
    p_opt->needs(m_opt);
    n_opt->needs(gen_opt)->excludes(m_opt)->excludes(p_opt);
    gen_opt->needs(n_opt);
    if (allow_file) {
      file_opt = cmd.add_option("--graph", file, "Graph JSON file ({n,edges} or {circulant})");
      file_opt->excludes(m_opt)->excludes(p_opt)->excludes(n_opt)->excludes(gen_opt);
    }
  }

  bool has_spec() const { return m_opt->count() > 0; }

  circdist::CmpSpec spec() const {
    if (!has_spec()) throw circdist::ValidationError("this command needs --m and --p");
    circdist::CmpSpec s{m, p};
    s.validate();
    return s;
  }

  circdist::Graph graph() const {
    if (has_spec()) return circdist::build_cmp(spec());
    if (n_opt->count() > 0) return circdist::build_circulant(circdist::CirculantSpec::create(n, generators));
    if (file_opt != nullptr && file_opt->count() > 0) return circdist::io::read_graph_document(read_json(file));
    throw circdist::ValidationError("no graph given: use --m/--p, --n/--generators or --graph");
  }

  std::string name() const {
    if (has_spec()) return "C(" + std::to_string(m) + "," + std::to_string(p) + ")";
    if (n_opt->count() > 0) return "circulant(" + std::to_string(n) + ")";
    return "G";
  }

  static Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw circdist::ValidationError("cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return circdist::io::parse(buffer.str());
  }
};

void emit(const Json& doc) { std::cout << doc.dump() << '\n'; }

std::size_t env_cap() {
  const char* raw = std::getenv("CIRCDIST_CAP");
  if (raw == nullptr || *raw == '\0') return circdist::kDefaultAutomorphismCap;
  try {
    std::size_t used = 0;
    const unsigned long long cap = std::stoull(raw, &used);
    if (used != std::string(raw).size() || cap == 0) throw std::invalid_argument(raw);
    return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    throw circdist::ValidationError(std::string("CIRCDIST_CAP is not a positive integer: ") + raw);
  }
}

std::size_t default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Json permutation_or_null(const std::optional<circdist::Permutation>& sigma) {
  return sigma ? circdist::io::to_json(*sigma) : Json(nullptr);
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  GraphSource source;
  std::string format = "json";
  bool as_circulant = false;
};

int run_construct(const ConstructArgs& args) {
  const circdist::Graph g = args.source.graph();
  std::optional<std::size_t> period;
  if (args.source.has_spec() && args.source.p >= 2) period = args.source.p;

  if (args.format == "dot") {
    std::cout << circdist::io::to_dot(g, args.source.name(), period);
  } else if (args.format == "text") {
    std::cout << args.source.name() << ": n=" << g.order() << " edges=" << g.size() << '\n';
    for (circdist::Vertex v = 0; v < g.order(); ++v) {
      std::cout << v << ':';
      for (circdist::Vertex w : g.neighbors(v)) std::cout << ' ' << w;
      std::cout << '\n';
    }
  } else if (args.as_circulant) {
    if (args.source.has_spec()) {
      emit(circdist::io::to_json(args.source.spec().circulant()));
    } else if (args.source.n_opt->count() > 0) {
      emit(circdist::io::to_json(circdist::CirculantSpec::create(args.source.n, args.source.generators)));
    } else {
      throw circdist::ValidationError("--as-circulant needs --m/--p or --n/--generators");
    }
  } else {
    emit(circdist::io::to_json(g));
  }
  return kOk;
}

struct DnumberArgs {
  GraphSource source;
  bool exact = false;
  bool formula = false;
  std::size_t rmax = 0;
  std::size_t cap = 40;
  std::size_t threads = 0;
};

std::optional<std::size_t> formula_value(const DnumberArgs& args, const circdist::Graph& g) {
  if (args.source.has_spec()) {
    const circdist::CmpSpec spec = args.source.spec();
    if (!circdist::in_cmp_formula_domain(spec)) return std::nullopt;
    return circdist::cmp_distinguishing_formula(spec);
  }
  if (auto sizes = circdist::complete_multipartite_signature(g)) {
    return circdist::multipartite_distinguishing_formula(circdist::MultipartiteShape::from_part_sizes(*sizes));
  }
  return std::nullopt;
}

int run_dnumber(DnumberArgs args) {
  const circdist::Graph g = args.source.graph();
  if (!args.exact && !args.formula) {
    args.formula = args.source.has_spec() || circdist::complete_multipartite_signature(g).has_value();
    args.exact = !args.formula;
  }

  std::optional<std::size_t> from_formula;
  if (args.formula) {
    from_formula = formula_value(args, g);
    if (!from_formula) throw circdist::ValidationError("no closed form applies to this graph; use --exact");
  }

  if (!args.exact) {
    emit(Json{{"d", *from_formula}, {"method", "formula"}, {"witness", nullptr}});
    return kOk;
  }

  if (g.order() > args.cap) {
    throw circdist::ValidationError("exact search limited to " + std::to_string(args.cap) +
                                    " vertices (raise with --cap)");
  }
  const std::size_t rmax = args.rmax == 0 ? std::max<std::size_t>(g.order(), 1) : args.rmax;
  const std::size_t threads = args.threads == 0 ? default_threads() : args.threads;
  const circdist::ExactResult result = circdist::exact_distinguishing_number(g, rmax, threads);

  Json report{{"d", result.value},
              {"method", from_formula ? "exact+formula" : "exact"},
              {"witness", circdist::io::to_json(result.witness)}};
  if (from_formula) {
    report["formula"] = *from_formula;
    report["agree"] = *from_formula == result.value;
  }
  emit(report);
  if (from_formula && *from_formula != result.value) {
    std::cerr << "discrepancy: exact " << result.value << " vs formula " << *from_formula << '\n';
    return kInconsistent;
  }
  return kOk;
}

int run_label(const GraphSource& source) {
  const circdist::CmpSpec spec = source.spec();
  const circdist::Labeling c = circdist::explicit_labeling(spec);
  const bool verified = circdist::is_distinguishing(circdist::build_cmp(spec), c).distinguishing;
  emit(Json{{"labeling", circdist::io::to_json(c)}, {"verified", verified}});
  if (!verified) {
    std::cerr << "explicit labeling of " << source.name() << " is not distinguishing\n";
    return kInconsistent;
  }
  return kOk;
}

struct LabelInput {
  std::vector<std::size_t> labels;
  std::string file;
  CLI::Option* labels_opt = nullptr;
  CLI::Option* file_opt = nullptr;

  void attach(CLI::App& cmd) {
    labels_opt = cmd.add_option("--labels", labels, "Labels 1..r, comma separated")->delimiter(',');
    file_opt = cmd.add_option("--labeling", file, "Labeling JSON file {r,labels}");
    labels_opt->excludes(file_opt);
  }

  bool given() const { return labels_opt->count() > 0 || file_opt->count() > 0; }

  circdist::Labeling get() const {
    if (labels_opt->count() > 0) return circdist::Labeling::from_labels(labels);
    if (file_opt->count() > 0) return circdist::io::labeling_from_json(GraphSource::read_json(file));
    throw circdist::ValidationError("no labeling given: use --labels or --labeling");
  }
};

int run_verify(const GraphSource& source, const LabelInput& input) {
  const circdist::Graph g = source.graph();
  const circdist::DistinguishingReport report = circdist::is_distinguishing(g, input.get());
  emit(Json{{"distinguishing", report.distinguishing}, {"witness", permutation_or_null(report.witness)}});
  return report.distinguishing ? kOk : kFalse;
}

struct BreakArgs {
  GraphSource source;
  LabelInput input;
  bool random = false;
  std::uint64_t seed = 0;
};

int run_break(const BreakArgs& args) {
  const circdist::CmpSpec spec = args.source.spec();
  circdist::Labeling c;
  if (args.random) {
    if (args.input.given()) throw circdist::ValidationError("--random excludes explicit labels");
    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<std::size_t> pick(1, spec.m);
    std::vector<std::size_t> labels(spec.order());
    for (auto& label : labels) label = pick(rng);
    c = circdist::Labeling(spec.m, std::move(labels));
  } else {
    c = args.input.get();
  }

  const circdist::BreakResult broken = circdist::break_m_labeling(spec, c);
  const circdist::Graph g = circdist::build_cmp(spec);
  emit(Json{{"labeling", circdist::io::to_json(c)},
            {"construction", circdist::to_string(broken.construction)},
            {"cycles", broken.sigma.to_cycle_string()},
            {"witness", circdist::io::to_json(broken.sigma)}});
  if (broken.sigma.is_identity() || !circdist::is_automorphism(g, broken.sigma) ||
      !circdist::preserves_colors(broken.sigma, c.labels())) {
    std::cerr << "breaker output is not a nontrivial label-preserving automorphism\n";
    return kInconsistent;
  }
  return kOk;
}

struct AutgroupArgs {
  GraphSource source;
  bool elements = false;
  std::size_t cap = 0;
};

int run_autgroup(const AutgroupArgs& args) {
  const circdist::Graph g = args.source.graph();
  const std::size_t cap = args.cap == 0 ? env_cap() : args.cap;
  const circdist::AutGroup group = circdist::enumerate_automorphisms(g, cap);
  Json report{{"n", group.degree}, {"order", group.order()}};
  if (args.elements) {
    Json list = Json::array();
    for (const auto& sigma : group.elements) list.push_back(circdist::io::to_json(sigma));
    report["elements"] = std::move(list);
  }
  emit(report);
  return kOk;
}

struct FamilyArgs {
  std::vector<std::size_t> targets;
  bool minimal = false;
  bool disconnected = false;
};

int run_family(const FamilyArgs& args) {
  if (args.disconnected) {
    emit(circdist::io::to_json(circdist::build_disconnected_family(args.targets)));
    return kOk;
  }
  const circdist::FamilyPlan plan = args.minimal ? circdist::minimal_common_order(args.targets)
                                                 : circdist::build_connected_family(args.targets);
  if (plan.has_cycle_member) {
    std::cerr << "warning: plan contains a cycle member C_n; its distinguishing number 2 relies on n >= 6\n";
  }
  if (!circdist::plan_is_valid(plan)) {
    emit(circdist::io::to_json(plan));
    std::cerr << "family plan failed validation\n";
    return kInconsistent;
  }
  emit(circdist::io::to_json(plan));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circulant graphs C(m,p) and distinguishing numbers"};
  app.require_subcommand(1, 1);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build C(m,p) or a circulant graph");
  construct.source.attach(*construct_cmd, false);
  construct_cmd->add_option("--format", construct.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  construct_cmd->add_flag("--as-circulant", construct.as_circulant, "Emit the {circulant} JSON form");

  DnumberArgs dnumber;
  auto* dnumber_cmd = app.add_subcommand("dnumber", "Distinguishing number by search or closed form");
  dnumber.source.attach(*dnumber_cmd);
  dnumber_cmd->add_flag("--exact", dnumber.exact, "Exhaustive search");
  dnumber_cmd->add_flag("--formula", dnumber.formula, "Closed form (C(m,p) or complete multipartite)");
  dnumber_cmd->add_option("--rmax", dnumber.rmax, "Largest label count to try (default n)");
  dnumber_cmd->add_option("--cap", dnumber.cap, "Largest order accepted by --exact")->capture_default_str();
  dnumber_cmd->add_option("--threads", dnumber.threads, "Search threads (default all cores)");

  GraphSource label_source;
  auto* label_cmd = app.add_subcommand("label", "Explicit distinguishing labeling of C(m,p)");
  label_source.attach(*label_cmd, false);

  GraphSource verify_source;
  LabelInput verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether a labeling is distinguishing");
  verify_source.attach(*verify_cmd);
  verify_input.attach(*verify_cmd);

  BreakArgs breaker;
  auto* break_cmd = app.add_subcommand("break", "Automorphism preserving a labeling with at most m labels");
  breaker.source.attach(*break_cmd, false);
  breaker.input.attach(*break_cmd);
  break_cmd->add_flag("--random", breaker.random, "Use a random labeling with labels 1..m");
  break_cmd->add_option("--seed", breaker.seed, "Seed for --random")->capture_default_str();

  AutgroupArgs autgroup;
  auto* autgroup_cmd = app.add_subcommand("autgroup", "Enumerate the automorphism group");
  autgroup.source.attach(*autgroup_cmd);
  autgroup_cmd->add_flag("--elements", autgroup.elements, "List every element");
  autgroup_cmd->add_option("--cap", autgroup.cap, "Enumeration cap (default $CIRCDIST_CAP or 1000000)");

  FamilyArgs family;
  auto* family_cmd = app.add_subcommand("family", "Same-order graphs with prescribed distinguishing numbers");
  family_cmd->add_option("--d", family.targets, "Targets, comma separated")->delimiter(',')->required();
  auto* minimal_opt = family_cmd->add_flag("--minimal", family.minimal, "Smallest common order");
  family_cmd->add_flag("--disconnected", family.disconnected, "Clique plus path members")->excludes(minimal_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*construct_cmd) return run_construct(construct);
    if (*dnumber_cmd) return run_dnumber(dnumber);
    if (*label_cmd) return run_label(label_source);
    if (*verify_cmd) return run_verify(verify_source, verify_input);
    if (*break_cmd) return run_break(breaker);
    if (*autgroup_cmd) return run_autgroup(autgroup);
    if (*family_cmd) return run_family(family);
  } catch (const circdist::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kInvalid;
}
