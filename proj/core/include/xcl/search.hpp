#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xcl/canonical.hpp"
#include "xcl/enumerate.hpp"
#include "xcl/invariants.hpp"

namespace xcl {

/// Invariants of one graph, computed once and shared by every class test.
struct GraphFacts {
  Graph graph;
  CanonicalLabel label;
  int order = 0;
  int size = 0;
  int min_degree = 0;
  int min_degree_count = 0;  // vertices attaining min_degree
  int circumference = 0;
  int detour_order = 0;
  bool connected = false;
  bool two_connected = false;
  CliqueProfile cliques;
};

GraphFacts compute_facts(const Graph& g);

struct IngestOptions {
  bool strict = true;  // throw on the first bad line; otherwise skip it
};

struct IngestStats {
  std::uint64_t lines = 0;
  std::uint64_t accepted = 0;
  std::uint64_t skipped = 0;  // malformed lines dropped in lenient mode
};

// Reads graph6 lines (blank lines ignored) and passes graphs matching
// `filter` to `sink`. Parse errors carry the 1-based line number.
// Ordering and deduplication are the producer's business.
IngestStats ingest_graph6(std::istream& in, const SearchFilter& filter,
                          const std::function<void(const Graph&)>& sink,
                          IngestOptions options = {});

enum class Verdict { kMatch, kViolation, kEmptyClass };
std::string_view to_string(Verdict verdict);

struct VerificationReport {
  std::string theorem_id;
  std::vector<std::pair<std::string, int>> params;  // in sweep order
  std::optional<Count> empirical_max;               // empty class: none
  Count formula_value = 0;
  std::vector<std::string> extremal_witnesses;      // canonical graph6, sorted
  Verdict verdict = Verdict::kEmptyClass;
  std::uint64_t graphs_examined = 0;                // members of the class
  std::chrono::milliseconds elapsed{0};
  std::map<std::string, std::string> notes;
};

/// Where class members come from: built-in enumeration or a corpus.
class GraphSource {
 public:
  // Enumerates every order on demand with `jobs` shards.
  static GraphSource enumeration(int jobs = 1);
  // Uses only the given graphs (any orders; one per class assumed).
  static GraphSource corpus(std::vector<Graph> graphs);

  // Facts for all n-vertex graphs passing `coarse`, sorted by label.
  std::vector<GraphFacts> facts(int n, const SearchFilter& coarse) const;

 private:
  int jobs_ = 1;
  std::optional<std::vector<Graph>> corpus_;
};

enum class DegreeMode { kExact, kAtLeast };

// Maximum N_s over 2-connected nonhamiltonian n-vertex graphs with
// circumference c and minimum degree k (exactly, or at least), optionally
// with at least q vertices of minimum degree. Compared against phi_s,
// h_s_bound, or max{f_s, g_sq} respectively; the q form only asserts the
// inequality.
VerificationReport max_cliques_over_class(int n, int c, int k, int s, DegreeMode mode,
                                          std::optional<int> q = std::nullopt,
                                          const GraphSource& source = GraphSource::enumeration());

enum class Theorem {
  kOre,
  kErdos,
  kErdosGallai,
  kKopylov5,
  kLuo6,
  kNingPeng7,
  kMain8,
  kCor13,
  kCor14,
  kCor16,
  kCor17,
};

std::string_view to_string(Theorem theorem);
std::optional<Theorem> parse_theorem(std::string_view id);
const std::vector<Theorem>& all_theorems();

struct VerifyOptions {
  int n_min = 5;
  int n_max = 8;
  int s_min = 2;
  int s_max = 2;
  bool stop_on_violation = false;
};

// One report per parameter tuple in the theorem's sweep, in tuple order.
// `on_report` (optional) sees each report as soon as it is final.
std::vector<VerificationReport> verify_theorem(
    Theorem theorem, const VerifyOptions& options,
    const GraphSource& source = GraphSource::enumeration(),
    const std::function<void(const VerificationReport&)>& on_report = {});

}  // namespace xcl
