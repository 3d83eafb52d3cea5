#include "xcl/search.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "xcl/combinatorics.hpp"
#include "xcl/extremal.hpp"
#include "xcl/graph6.hpp"

namespace xcl {

GraphFacts compute_facts(const Graph& g) {
  GraphFacts f;
  f.graph = g;
  f.label = canonical_label(g);
  f.order = g.order();
  f.size = size(g);
  if (f.order > 0) {
    f.min_degree = min_degree(g);
    for (int v = 0; v < f.order; ++v) f.min_degree_count += degree(g, v) == f.min_degree;
    f.detour_order = detour_order(g);
  }
  f.circumference = circumference(g);
  f.connected = is_connected(g);
  f.two_connected = is_two_connected(g);
  f.cliques = count_cliques(g);
  return f;
}

IngestStats ingest_graph6(std::istream& in, const SearchFilter& filter,
                          const std::function<void(const Graph&)>& sink, IngestOptions options) {
  filter.validate();
  IngestStats stats;
  std::string line;
  while (std::getline(in, line)) {
    ++stats.lines;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& e) {
      if (options.strict) {
        throw Error(e.code(), "line " + std::to_string(stats.lines) + ": " + e.what());
      }
      ++stats.skipped;
      continue;
    }
    if (!matches(g, filter)) continue;
    ++stats.accepted;
    sink(g);
  }
  return stats;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kMatch: return "match";
    case Verdict::kViolation: return "violation";
    case Verdict::kEmptyClass: return "empty-class";
  }
  return "?";
}

GraphSource GraphSource::enumeration(int jobs) {
  GraphSource s;
  s.jobs_ = std::max(jobs, 1);
  return s;
}

GraphSource GraphSource::corpus(std::vector<Graph> graphs) {
  GraphSource s;
  s.corpus_ = std::move(graphs);
  return s;
}

std::vector<GraphFacts> GraphSource::facts(int n, const SearchFilter& coarse) const {
  std::vector<GraphFacts> out;
  if (corpus_) {
    for (const Graph& g : *corpus_)
      if (g.order() == n && matches(g, coarse)) out.push_back(compute_facts(g));
  } else {
    if (n > kEnumerationMaxOrder) {
      throw Error(ErrorCode::kOrderTooLarge,
                  "order " + std::to_string(n) + " exceeds the built-in enumeration limit of " +
                      std::to_string(kEnumerationMaxOrder) + "; supply a corpus");
    }
    std::vector<std::future<std::vector<GraphFacts>>> parts;
    for (int i = 0; i < jobs_; ++i) {
      parts.push_back(std::async(std::launch::async, [=, this, &coarse] {
        std::vector<GraphFacts> part;
        enumerate_graphs(n, coarse, [&](const Graph& g) { part.push_back(compute_facts(g)); },
                         ShardSpec{i, jobs_});
        return part;
      }));
    }
    for (auto& part : parts)
      for (GraphFacts& f : part.get()) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const GraphFacts& a, const GraphFacts& b) { return a.label < b.label; });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct ClassSpec {
  std::vector<std::pair<std::string, int>> params;
  std::function<bool(const GraphFacts&)> member;
  std::function<Count(const GraphFacts&)> measure;
  Count formula = 0;
  bool equality = true;  // otherwise only empirical <= formula is asserted
  std::optional<std::vector<std::string>> expected_witnesses;
  std::optional<std::string> required_witness;
  std::map<std::string, std::string> notes;
};

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : ",") + l;
  return out;
}

VerificationReport evaluate(std::string_view id, const std::vector<GraphFacts>& facts,
                            ClassSpec spec) {
  VerificationReport r;
  r.theorem_id = std::string(id);
  r.params = std::move(spec.params);
  r.formula_value = spec.formula;
  r.notes = std::move(spec.notes);
  for (const GraphFacts& f : facts) {
    if (!spec.member(f)) continue;
    ++r.graphs_examined;
    const Count value = spec.measure(f);
    if (!r.empirical_max || value > *r.empirical_max) {
      r.empirical_max = value;
      r.extremal_witnesses.clear();
    }
    if (value == *r.empirical_max) r.extremal_witnesses.push_back(f.label.str());
  }
  std::sort(r.extremal_witnesses.begin(), r.extremal_witnesses.end());
  if (!r.empirical_max) {
    r.verdict = Verdict::kEmptyClass;
    return r;
  }
  bool ok = spec.equality ? *r.empirical_max == spec.formula : *r.empirical_max <= spec.formula;
  if (spec.expected_witnesses) {
    auto expected = *spec.expected_witnesses;
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    r.notes["expected_witnesses"] = join_labels(expected);
    ok = ok && expected == r.extremal_witnesses;
  }
  if (spec.required_witness) {
    const bool present = std::binary_search(r.extremal_witnesses.begin(),
                                            r.extremal_witnesses.end(), *spec.required_witness);
    r.notes["required_witness"] = *spec.required_witness;
    r.notes["required_witness_attains"] = present ? "true" : "false";
    ok = ok && present;
  }
  r.verdict = ok ? Verdict::kMatch : Verdict::kViolation;
  return r;
}

std::string label_of(const Graph& g) { return canonical_label(g).str(); }

SearchFilter nonhamiltonian() {
  SearchFilter f;
  f.hamiltonian = Requirement::kForbid;
  return f;
}

Count edges_of(const GraphFacts& f) { return static_cast<Count>(f.size); }

std::function<Count(const GraphFacts&)> cliques_of(int s) {
  return [s](const GraphFacts& f) { return f.cliques[s]; };
}

bool nonham_two_connected(const GraphFacts& f, int c) {
  return f.two_connected && f.circumference == c && f.circumference < f.order;
}

}  // namespace

VerificationReport max_cliques_over_class(int n, int c, int k, int s, DegreeMode mode,
                                          std::optional<int> q, const GraphSource& source) {
  const auto start = Clock::now();
  SearchFilter coarse = nonhamiltonian();
  coarse.circumference = {CircumferenceConstraint::Mode::kExact, c};
  coarse.two_connected = true;
  coarse.min_degree = {mode == DegreeMode::kExact ? DegreeConstraint::Mode::kExact
                                                  : DegreeConstraint::Mode::kAtLeast,
                       k};
  if (q) {
    if (mode != DegreeMode::kExact) {
      throw Error(ErrorCode::kInvalidParams, "the q variant needs exact minimum degree");
    }
    coarse.min_degree_multiplicity = q;
  }
  coarse.validate();

  ClassSpec spec;
  spec.params = {{"n", n}, {"c", c}, {"k", k}, {"s", s}};
  if (q) spec.params.emplace_back("q", *q);
  spec.member = [](const GraphFacts&) { return true; };
  spec.measure = cliques_of(s);
  if (q) {
    spec.formula = std::max(f_s(n, c, k, s), g_sq(n, c, k, *q, s));
    spec.equality = false;
  } else {
    spec.formula = mode == DegreeMode::kExact ? phi_s(n, c, k, s) : h_s_bound(n, c, k, s);
  }
  VerificationReport r = evaluate("class", source.facts(n, coarse), std::move(spec));
  r.notes["degree_mode"] = mode == DegreeMode::kExact ? "exact" : "at_least";
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

std::string_view to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::kOre: return "ore";
    case Theorem::kErdos: return "erdos";
    case Theorem::kErdosGallai: return "erdos_gallai";
    case Theorem::kKopylov5: return "kopylov5";
    case Theorem::kLuo6: return "luo6";
    case Theorem::kNingPeng7: return "ning_peng7";
    case Theorem::kMain8: return "main8";
    case Theorem::kCor13: return "cor13";
    case Theorem::kCor14: return "cor14";
    case Theorem::kCor16: return "cor16";
    case Theorem::kCor17: return "cor17";
  }
  return "?";
}

const std::vector<Theorem>& all_theorems() {
  static const std::vector<Theorem> all = {
      Theorem::kOre,       Theorem::kErdos, Theorem::kErdosGallai, Theorem::kKopylov5,
      Theorem::kLuo6,      Theorem::kNingPeng7, Theorem::kMain8,   Theorem::kCor13,
      Theorem::kCor14,     Theorem::kCor16, Theorem::kCor17};
  return all;
}

std::optional<Theorem> parse_theorem(std::string_view id) {
  for (Theorem t : all_theorems())
    if (to_string(t) == id) return t;
  return std::nullopt;
}

namespace {

// Parameter tuples and class definitions for one order n.
std::vector<ClassSpec> sweep(Theorem theorem, int n, int s_min, int s_max) {
  std::vector<ClassSpec> out;
  auto add = [&](ClassSpec spec) { out.push_back(std::move(spec)); };
  switch (theorem) {
    case Theorem::kOre: {
      if (n < 3) break;
      ClassSpec spec;
      spec.params = {{"n", n}};
      spec.member = [](const GraphFacts&) { return true; };
      spec.measure = edges_of;
      spec.formula = checked_add(binomial(n - 1, 2), 1);
      std::vector<std::string> expected{label_of(build_ore_extremal(n))};
      if (n == 5) expected.push_back(label_of(build_ore_exceptional()));
      spec.expected_witnesses = expected;
      add(std::move(spec));
      break;
    }
    case Theorem::kErdos:
      for (int k = 1; k <= (n - 1) / 2; ++k) {
        ClassSpec spec;
        spec.params = {{"n", n}, {"k", k}};
        spec.member = [k](const GraphFacts& f) { return f.min_degree >= k; };
        spec.measure = edges_of;
        spec.formula = std::max(erdos_h(n, k), erdos_h(n, (n - 1) / 2));
        add(std::move(spec));
      }
      break;
    case Theorem::kErdosGallai:
      for (int c = 3; c <= n; ++c) {
        ClassSpec spec;
        spec.params = {{"n", n}, {"c", c}};
        spec.member = [c](const GraphFacts& f) { return f.circumference == c; };
        spec.measure = edges_of;
        spec.formula = static_cast<Count>(c) * static_cast<Count>(n - 1) / 2;
        spec.equality = false;
        if ((n - 1) % (c - 1) == 0) {
          spec.required_witness = label_of(build_erdos_gallai_extremal(n, c));
          spec.notes["tight_construction"] = "((n-1)/(c-1))K_{c-1} join K_1";
        }
        add(std::move(spec));
      }
      break;
    case Theorem::kKopylov5:
    case Theorem::kLuo6: {
      const bool sized = theorem == Theorem::kKopylov5;
      for (int c = 4; c <= n - 1; ++c) {
        for (int s = sized ? 2 : s_min; s <= (sized ? 2 : s_max); ++s) {
          ClassSpec spec;
          spec.params = {{"n", n}, {"c", c}};
          if (!sized) spec.params.emplace_back("s", s);
          spec.member = [c](const GraphFacts& f) { return nonham_two_connected(f, c); };
          spec.measure = cliques_of(s);
          spec.formula = std::max(f_s(n, c, 2, s), f_s(n, c, c / 2, s));
          add(std::move(spec));
        }
      }
      break;
    }
    case Theorem::kNingPeng7:
    case Theorem::kMain8:
    case Theorem::kCor13: {
      const bool sized = theorem == Theorem::kCor13;
      for (int c = 4; c <= n - 1; ++c) {
        for (int k = 2; 2 * k <= c; ++k) {
          for (int s = sized ? 2 : s_min; s <= (sized ? 2 : s_max); ++s) {
            ClassSpec spec;
            spec.params = {{"n", n}, {"c", c}, {"k", k}};
            if (!sized) spec.params.emplace_back("s", s);
            if (theorem == Theorem::kNingPeng7) {
              spec.member = [c, k](const GraphFacts& f) {
                return nonham_two_connected(f, c) && f.min_degree >= k;
              };
              spec.formula = h_s_bound(n, c, k, s);
            } else {
              spec.member = [c, k](const GraphFacts& f) {
                return nonham_two_connected(f, c) && f.min_degree == k;
              };
              spec.formula = phi_s(n, c, k, s);
            }
            spec.measure = cliques_of(s);
            add(std::move(spec));
          }
        }
      }
      break;
    }
    case Theorem::kCor14:
      for (int k = 2; 2 * k + 1 <= n; ++k) {
        const PiecewisePhi phi = phi_piecewise(n, k);
        ClassSpec spec;
        spec.params = {{"n", n}, {"k", k}};
        spec.member = [k](const GraphFacts& f) {
          return f.two_connected && f.circumference < f.order && f.min_degree == k;
        };
        spec.measure = edges_of;
        spec.formula = phi.value;
        std::vector<std::string> expected;
        std::string families;
        for (const auto& family : phi.extremal) {
          expected.push_back(label_of(build(family)));
          families += (families.empty() ? "" : ",") + std::string(to_string(family.family));
        }
        spec.expected_witnesses = expected;
        spec.notes["families"] = families;
        add(std::move(spec));
      }
      break;
    case Theorem::kCor16:
      for (int k = 2; 2 * k + 1 <= n - 1; ++k) {
        for (int p = 2 * k + 1; p <= n - 1; ++p) {
          ClassSpec spec;
          spec.params = {{"n", n}, {"p", p}, {"k", k}};
          spec.member = [p, k](const GraphFacts& f) {
            return f.connected && f.detour_order == p && f.min_degree == k;
          };
          spec.measure = edges_of;
          spec.formula = psi(n, p, k);
          add(std::move(spec));
        }
      }
      break;
    case Theorem::kCor17:
      for (int c = 4; c <= n - 1; ++c) {
        const int t = c / 2;
        for (int k = 2; 2 * k <= c; ++k) {
          for (int q = 1; q <= k && q <= n - c - 1 + t; ++q) {
            for (int s = s_min; s <= s_max; ++s) {
              ClassSpec spec;
              spec.params = {{"n", n}, {"c", c}, {"k", k}, {"q", q}, {"s", s}};
              spec.member = [c, k, q](const GraphFacts& f) {
                return nonham_two_connected(f, c) && f.min_degree == k && f.min_degree_count >= q;
              };
              spec.measure = cliques_of(s);
              const Count f = f_s(n, c, k, s);
              const Count g = g_sq(n, c, k, q, s);
              spec.formula = std::max(f, g);
              spec.equality = false;
              if (g >= f) spec.required_witness = label_of(build_Gq(n, c, k, q));
              add(std::move(spec));
            }
          }
        }
      }
      break;
  }
  return out;
}

SearchFilter coarse_filter(Theorem theorem) {
  switch (theorem) {
    case Theorem::kErdosGallai: return SearchFilter{};
    case Theorem::kCor16: {
      SearchFilter f;
      f.traceable = Requirement::kForbid;
      return f;
    }
    default: return nonhamiltonian();
  }
}

}  // namespace

std::vector<VerificationReport> verify_theorem(
    Theorem theorem, const VerifyOptions& options, const GraphSource& source,
    const std::function<void(const VerificationReport&)>& on_report) {
  if (options.n_min < 1 || options.n_min > options.n_max) {
    throw Error(ErrorCode::kInvalidParams, "n range must satisfy 1 <= min <= max");
  }
  if (options.s_min < 2 || options.s_min > options.s_max) {
    throw Error(ErrorCode::kInvalidParams, "s range must satisfy 2 <= min <= max");
  }
  std::vector<VerificationReport> out;
  for (int n = options.n_min; n <= options.n_max; ++n) {
    auto mark = Clock::now();
    const std::vector<GraphFacts> facts = source.facts(n, coarse_filter(theorem));
    for (ClassSpec& spec : sweep(theorem, n, options.s_min, options.s_max)) {
      VerificationReport r = evaluate(to_string(theorem), facts, std::move(spec));
      const auto now = Clock::now();
      r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(now - mark);
      mark = now;
      if (on_report) on_report(r);
      const bool violated = r.verdict == Verdict::kViolation;
      out.push_back(std::move(r));
      if (violated && options.stop_on_violation) return out;
    }
  }
  return out;
}

}  // namespace xcl
