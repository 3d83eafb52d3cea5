#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "xcl/canonical.hpp"
#include "xcl/disintegration.hpp"
#include "xcl/enumerate.hpp"
#include "xcl/extremal.hpp"
#include "xcl/graph6.hpp"
#include "xcl/invariants.hpp"
#include "xcl/search.hpp"

namespace xcl::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Format { kText, kRecord };

long long elapsed_ms(Clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - since).count();
}

void print_record(std::ostream& out, std::string_view command, json inputs, json outputs,
                  long long elapsed) {
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["inputs"] = std::move(inputs);
  record["outputs"] = std::move(outputs);
  record["elapsed_ms"] = elapsed;
  out << record.dump() << '\n';
}

template <typename T>
std::string join_list(const std::vector<T>& items, char sep = ',') {
  std::ostringstream s;
  for (std::size_t i = 0; i < items.size(); ++i) s << (i ? std::string(1, sep) : "") << items[i];
  return s.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kInvalidParams, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return std::string(s);
}

void expect_arity(std::string_view what, const std::vector<int>& args, std::size_t count,
                  std::string_view usage) {
  if (args.size() != count) {
    throw Error(ErrorCode::kInvalidParams, std::string(what) + " takes " + std::string(usage));
  }
}

// Graphs named on the command line, or every line of the given files.
std::vector<std::pair<std::string, Graph>> read_inputs(const std::vector<std::string>& literals,
                                                       const std::vector<std::string>& files) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const auto& text : literals) {
    const std::string clean = trim(text);
    graphs.emplace_back(clean, parse_graph6(clean));
  }
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
    try {
      ingest_graph6(in, {}, [&](const Graph& g) { graphs.emplace_back(encode_graph6(g), g); });
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }
  return graphs;
}

json profile_json(const CliqueProfile& p) { return json(p.counts); }

// construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::vector<int> params;
};

int cmd_construct(const ConstructArgs& a, Format format, std::ostream& out) {
  const auto start = Clock::now();
  ConstructionSpec spec;
  const auto& p = a.params;
  if (a.family == "F" || a.family == "G") {
    expect_arity(a.family, p, 3, "n c k");
    spec.family = a.family == "F" ? Family::kF : Family::kG;
    spec.params = {.n = p[0], .c = p[1], .k = p[2]};
  } else if (a.family == "Gq") {
    expect_arity(a.family, p, 4, "n c k q");
    spec.family = Family::kGq;
    spec.params = {.n = p[0], .c = p[1], .k = p[2], .q = p[3]};
  } else if (a.family == "Fp" || a.family == "Gp") {
    expect_arity(a.family, p, 3, "n p k");
    spec.family = a.family == "Fp" ? Family::kFprime : Family::kGprime;
    spec.params = {.n = p[0], .k = p[2], .p = p[1]};
  } else {
    throw Error(ErrorCode::kInvalidParams, "unknown family '" + a.family + "' (F, G, Gq, Fp, Gp)");
  }
  const Graph g = build(spec);
  const int c = circumference(g);
  const int detour = detour_order(g);
  const bool two = is_two_connected(g);
  const std::string g6 = encode_graph6(g);

  if (format == Format::kText) {
    out << g6 << '\n'
        << "order=" << g.order() << " size=" << size(g) << " delta=" << min_degree(g)
        << " circumference=" << c << " detour=" << detour << " two_connected=" << yes_no(two)
        << " hamiltonian=" << yes_no(c == g.order()) << '\n';
  } else {
    json inputs = {{"family", a.family}, {"params", p}};
    json outputs = {{"graph6", g6},          {"order", g.order()},
                    {"size", size(g)},       {"delta", min_degree(g)},
                    {"circumference", c},    {"detour_order", detour},
                    {"two_connected", two},  {"hamiltonian", c == g.order()}};
    print_record(out, "construct", inputs, outputs, elapsed_ms(start));
  }
  return kExitOk;
}

// invariants --------------------------------------------------------------

struct InputArgs {
  std::vector<std::string> graphs;
  std::vector<std::string> files;
};

int cmd_invariants(const InputArgs& a, Format format, std::ostream& out) {
  const auto graphs = read_inputs(a.graphs, a.files);
  if (graphs.empty()) throw Error(ErrorCode::kInvalidParams, "no input graphs");
  for (const auto& [g6, g] : graphs) {
    const auto start = Clock::now();
    const int n = g.order();
    const auto degrees = degree_sequence(g);
    const int c = circumference(g);
    const int detour = n > 0 ? detour_order(g) : 0;
    const bool two = is_two_connected(g);
    const CliqueProfile cliques = count_cliques(g);
    if (format == Format::kText) {
      out << g6 << " order=" << n << " size=" << size(g) << " degrees=" << join_list(degrees)
          << " delta=" << (n > 0 ? std::to_string(degrees.front()) : "none")
          << " circumference=" << c << " detour=" << detour
          << " hamiltonian=" << yes_no(n >= 3 && c == n) << " traceable=" << yes_no(n > 0 && detour == n)
          << " two_connected=" << yes_no(two) << " cliques=" << join_list(cliques.counts) << '\n';
    } else {
      json outputs = {{"order", n},
                      {"size", size(g)},
                      {"degrees", degrees},
                      {"delta", n > 0 ? json(degrees.front()) : json(nullptr)},
                      {"circumference", c},
                      {"detour_order", detour},
                      {"hamiltonian", n >= 3 && c == n},
                      {"traceable", n > 0 && detour == n},
                      {"two_connected", two},
                      {"cliques", profile_json(cliques)},
                      {"canonical", canonical_label(g).str()}};
      print_record(out, "invariants", {{"graph6", g6}}, outputs, elapsed_ms(start));
    }
  }
  return kExitOk;
}

// formula -----------------------------------------------------------------

struct FormulaArgs {
  std::string name;
  std::vector<int> params;
  int s = 2;
  int q = 1;
};

int cmd_formula(const FormulaArgs& a, Format format, std::ostream& out) {
  const auto start = Clock::now();
  const auto& p = a.params;
  Count value = 0;
  json extra = json::object();
  if (a.name == "f" || a.name == "g" || a.name == "phi" || a.name == "h" || a.name == "gq") {
    expect_arity(a.name, p, 3, "n c k");
    if (a.name == "f") value = f_s(p[0], p[1], p[2], a.s);
    if (a.name == "g") value = g_s(p[0], p[1], p[2], a.s);
    if (a.name == "gq") value = g_sq(p[0], p[1], p[2], a.q, a.s);
    if (a.name == "phi") value = phi_s(p[0], p[1], p[2], a.s);
    if (a.name == "h") value = h_s_bound(p[0], p[1], p[2], a.s);
  } else if (a.name == "erdos") {
    expect_arity(a.name, p, 2, "n k");
    value = erdos_h(p[0], p[1]);
  } else if (a.name == "lambda") {
    expect_arity(a.name, p, 3, "n c x");
    value = lambda_s(p[0], p[1], p[2], a.s);
  } else if (a.name == "phi14") {
    expect_arity(a.name, p, 2, "n k");
    const PiecewisePhi phi = phi_piecewise(p[0], p[1]);
    value = phi.value;
    std::vector<std::string> families;
    for (const auto& spec : phi.extremal) families.emplace_back(to_string(spec.family));
    extra["extremal_families"] = families;
  } else if (a.name == "psi") {
    expect_arity(a.name, p, 3, "n p k");
    value = psi(p[0], p[1], p[2]);
  } else {
    throw Error(ErrorCode::kInvalidParams,
                "unknown formula '" + a.name + "' (f, g, gq, phi, h, erdos, lambda, phi14, psi)");
  }
  if (format == Format::kText) {
    out << value << '\n';
  } else {
    json inputs = {{"name", a.name}, {"params", p}, {"s", a.s}};
    if (a.name == "gq") inputs["q"] = a.q;
    extra["value"] = value;
    print_record(out, "formula", inputs, extra, elapsed_ms(start));
  }
  return kExitOk;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string n_range = "5..8";
  std::string s_range = "2";
  int jobs = 1;
  std::string corpus;
  bool keep_going = false;
};

json report_outputs(const VerificationReport& r) {
  json outputs = {
      {"verdict", to_string(r.verdict)},
      {"empirical_max", r.empirical_max ? json(*r.empirical_max) : json(nullptr)},
      {"formula_value", r.formula_value},
      {"witnesses", r.extremal_witnesses},
      {"graphs_examined", r.graphs_examined},
      {"notes", r.notes},
  };
  if (r.verdict == Verdict::kViolation) outputs["counterexample"] = r.extremal_witnesses;
  return outputs;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << r.theorem_id;
  for (const auto& [key, value] : r.params) s << ' ' << key << '=' << value;
  s << " verdict=" << to_string(r.verdict) << " empirical="
    << (r.empirical_max ? std::to_string(*r.empirical_max) : "none")
    << " formula=" << r.formula_value << " examined=" << r.graphs_examined
    << " witnesses=" << (r.extremal_witnesses.empty() ? "none" : join_list(r.extremal_witnesses));
  if (r.verdict == Verdict::kViolation) s << " counterexample=" << r.extremal_witnesses.front();
  return s.str();
}

int cmd_verify(const VerifyArgs& a, Format format, std::ostream& out) {
  const auto theorem = parse_theorem(a.theorem);
  if (!theorem) {
    std::string names;
    for (Theorem t : all_theorems()) names += (names.empty() ? "" : ", ") + std::string(to_string(t));
    throw Error(ErrorCode::kInvalidParams, "unknown theorem '" + a.theorem + "' (" + names + ")");
  }
  if (a.jobs < 1) throw Error(ErrorCode::kInvalidParams, "--jobs must be at least 1");
  const IntRange n = parse_range(a.n_range);
  const IntRange s = parse_range(a.s_range);
  VerifyOptions options{.n_min = n.lo, .n_max = n.hi, .s_min = s.lo, .s_max = s.hi,
                        .stop_on_violation = !a.keep_going};

  std::optional<GraphSource> source;
  if (a.corpus.empty()) {
    source = GraphSource::enumeration(a.jobs);
  } else {
    source = GraphSource::corpus([&] {
      std::vector<Graph> graphs;
      for (auto& entry : read_inputs({}, {a.corpus})) graphs.push_back(std::move(entry.second));
      return graphs;
    }());
  }

  bool violated = false;
  verify_theorem(*theorem, options, *source, [&](const VerificationReport& r) {
    violated |= r.verdict == Verdict::kViolation;
    if (format == Format::kText) {
      out << report_text(r) << '\n';
    } else {
      json params = json::object();
      for (const auto& [key, value] : r.params) params[key] = value;
      json inputs = {{"theorem", r.theorem_id}, {"params", params}};
      if (!a.corpus.empty()) inputs["corpus"] = a.corpus;
      print_record(out, "verify", inputs, report_outputs(r), r.elapsed.count());
    }
    out.flush();
  });
  return violated ? kExitViolation : kExitOk;
}

// core --------------------------------------------------------------------

struct CoreArgs {
  std::string graph;
  int t = 0;
  std::optional<int> seed;
};

int cmd_core(const CoreArgs& a, Format format, std::ostream& out) {
  const auto start = Clock::now();
  const Graph g = parse_graph6(trim(a.graph));
  if (a.seed && (*a.seed < 0 || *a.seed >= g.order())) {
    throw Error(ErrorCode::kVertexOutOfRange, "seed vertex " + std::to_string(*a.seed) +
                                                  " not in graph of order " +
                                                  std::to_string(g.order()));
  }
  const DisintegrationTrace trace = a.seed ? core_with_seed(g, a.t, *a.seed) : core(g, a.t);
  const std::string core_text = trace.core_is_null() ? "null" : encode_graph6(trace.core);
  if (format == Format::kText) {
    for (const auto& [v, d] : trace.deleted) out << "delete v=" << v << " degree=" << d << '\n';
    out << "core=" << core_text;
    if (!trace.core_is_null()) out << " vertices=" << join_list(trace.core_labels);
    out << '\n';
  } else {
    json deleted = json::array();
    for (const auto& [v, d] : trace.deleted) deleted.push_back({v, d});
    json inputs = {{"graph6", trim(a.graph)}, {"t", a.t}};
    if (a.seed) inputs["seed"] = *a.seed;
    json outputs = {{"deleted", deleted}, {"core", core_text}, {"core_vertices", trace.core_labels}};
    print_record(out, "core", inputs, outputs, elapsed_ms(start));
  }
  return kExitOk;
}

// enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  std::optional<int> min_degree;
  std::optional<int> min_degree_at_least;
  std::optional<int> circumference;
  std::optional<int> circumference_at_most;
  std::optional<int> detour;
  bool two_connected = false;
  bool connected = false;
  bool nonhamiltonian = false;
  bool nontraceable = false;
  bool count_only = false;
  int jobs = 1;
};

int cmd_enumerate(const EnumerateArgs& a, Format format, std::ostream& out) {
  const auto start = Clock::now();
  if (a.min_degree && a.min_degree_at_least) {
    throw Error(ErrorCode::kInvalidParams, "--min-degree and --min-degree-at-least conflict");
  }
  if (a.circumference && a.circumference_at_most) {
    throw Error(ErrorCode::kInvalidParams, "--circumference and --circumference-at-most conflict");
  }
  if (a.jobs < 1) throw Error(ErrorCode::kInvalidParams, "--jobs must be at least 1");
  SearchFilter f;
  if (a.min_degree) f.min_degree = {DegreeConstraint::Mode::kExact, *a.min_degree};
  if (a.min_degree_at_least) f.min_degree = {DegreeConstraint::Mode::kAtLeast, *a.min_degree_at_least};
  if (a.circumference) f.circumference = {CircumferenceConstraint::Mode::kExact, *a.circumference};
  if (a.circumference_at_most)
    f.circumference = {CircumferenceConstraint::Mode::kAtMost, *a.circumference_at_most};
  f.detour_order = a.detour;
  f.two_connected = a.two_connected;
  if (a.connected) f.connected = Requirement::kRequire;
  if (a.nonhamiltonian) f.hamiltonian = Requirement::kForbid;
  if (a.nontraceable) f.traceable = Requirement::kForbid;
  f.validate();

  const auto graphs = enumerate_all(a.n, f, a.jobs);
  std::vector<std::string> labels;
  labels.reserve(graphs.size());
  for (const Graph& g : graphs) labels.push_back(encode_graph6(g));
  if (format == Format::kText) {
    if (a.count_only) {
      out << labels.size() << '\n';
    } else {
      for (const auto& l : labels) out << l << '\n';
    }
  } else {
    json outputs = {{"count", labels.size()}};
    if (!a.count_only) outputs["graphs"] = labels;
    json inputs = {{"n", a.n},
                   {"two_connected", a.two_connected},
                   {"connected", a.connected},
                   {"nonhamiltonian", a.nonhamiltonian},
                   {"nontraceable", a.nontraceable}};
    if (a.min_degree) inputs["min_degree"] = *a.min_degree;
    if (a.min_degree_at_least) inputs["min_degree_at_least"] = *a.min_degree_at_least;
    if (a.circumference) inputs["circumference"] = *a.circumference;
    if (a.circumference_at_most) inputs["circumference_at_most"] = *a.circumference_at_most;
    if (a.detour) inputs["detour_order"] = *a.detour;
    print_record(out, "enumerate", inputs, outputs, elapsed_ms(start));
  }
  return kExitOk;
}

}  // namespace

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) {
    throw Error(ErrorCode::kInvalidParams, "empty range '" + std::string(text) + "'");
  }
  return r;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kOrderTooLarge:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal clique counts under circumference and minimum-degree constraints.", "xcl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "record"}));

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build an extremal graph and summarize it");
  construct->add_option("family", construct_args.family, "F, G, Gq, Fp or Gp")->required();
  construct->add_option("params", construct_args.params, "n c k [q], or n p k for Fp/Gp")
      ->required();

  InputArgs input_args;
  auto* invariants = app.add_subcommand("invariants", "Invariants of graph6 inputs");
  invariants->add_option("graphs", input_args.graphs, "graph6 strings");
  invariants->add_option("--file", input_args.files, "graph6 file, one graph per line");

  FormulaArgs formula_args;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("name", formula_args.name, "f g gq phi h erdos lambda phi14 psi")->required();
  formula->add_option("params", formula_args.params, "integer parameters")->required();
  formula->add_option("--s", formula_args.s, "clique size")->check(CLI::PositiveNumber);
  formula->add_option("--q", formula_args.q, "minimum-degree multiplicity (gq)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a theorem exhaustively over a range");
  verify->add_option("theorem", verify_args.theorem, "theorem id")->required();
  verify->add_option("--n", verify_args.n_range, "order range, e.g. 5..8");
  verify->add_option("--s", verify_args.s_range, "clique-size range, e.g. 2..4");
  verify->add_option("--jobs", verify_args.jobs, "enumeration shards run in parallel");
  verify->add_option("--corpus", verify_args.corpus, "graph6 file used instead of enumeration");
  verify->add_flag("--keep-going", verify_args.keep_going, "continue past a violation");

  CoreArgs core_args;
  auto* core_cmd = app.add_subcommand("core", "Peel vertices of degree <= t");
  core_cmd->add_option("graph", core_args.graph, "graph6 string")->required();
  core_cmd->add_option("t", core_args.t, "degree threshold")->required();
  core_cmd->add_option("--seed", core_args.seed, "vertex deleted first");

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List nonisomorphic graphs of order n");
  enumerate->add_option("n", enum_args.n, "order")->required();
  enumerate->add_option("--min-degree", enum_args.min_degree);
  enumerate->add_option("--min-degree-at-least", enum_args.min_degree_at_least);
  enumerate->add_option("--circumference", enum_args.circumference);
  enumerate->add_option("--circumference-at-most", enum_args.circumference_at_most);
  enumerate->add_option("--detour", enum_args.detour);
  enumerate->add_flag("--two-connected", enum_args.two_connected);
  enumerate->add_flag("--connected", enum_args.connected);
  enumerate->add_flag("--nonhamiltonian", enum_args.nonhamiltonian);
  enumerate->add_flag("--nontraceable", enum_args.nontraceable);
  enumerate->add_flag("--count", enum_args.count_only, "print only the number of classes");
  enumerate->add_option("--jobs", enum_args.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_name == "record" ? Format::kRecord : Format::kText;
  try {
    if (*construct) return cmd_construct(construct_args, format, out);
    if (*invariants) return cmd_invariants(input_args, format, out);
    if (*formula) return cmd_formula(formula_args, format, out);
    if (*verify) return cmd_verify(verify_args, format, out);
    if (*core_cmd) return cmd_core(core_args, format, out);
    if (*enumerate) return cmd_enumerate(enum_args, format, out);
  } catch (const Error& e) {
    err << "xcl: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}

}  // namespace xcl::cli
