#pragma once

// Supports (multisets of multidegrees) and their labelled graph.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radsupp/error.hpp"

namespace radsupp {

/// A non-empty set of 1-based grading labels, kept sorted and duplicate free.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(int label) const;
  int max_label() const { return members_.empty() ? 0 : members_.back(); }

  auto operator<=>(const Multidegree&) const = default;

 private:
  std::vector<int> members_;
};

/// An ordered list A_1..A_s of multidegrees over labels 1..n. Repetitions
/// are allowed; vertex v of the graph is the (v+1)-th entry.
class Support {
 public:
  Support(int n, std::vector<Multidegree> sets);

  int n() const { return n_; }
  std::size_t size() const { return sets_.size(); }
  const std::vector<Multidegree>& sets() const { return sets_; }
  const Multidegree& operator[](std::size_t v) const { return sets_[v]; }

  /// Sub-multiset keeping the entries whose indices are listed (in that order).
  Support select(const std::vector<std::size_t>& indices) const;

  /// "1 2; 2 3; 1 3"
  std::string to_text() const;

  bool operator==(const Support&) const = default;

 private:
  int n_;
  std::vector<Multidegree> sets_;
};

/// Parses "1 2; 2 3; 1 3". When `n` is absent it is the largest label seen.
Support parse_support_text(std::string_view text, std::optional<int> n = std::nullopt);

/// Parses {"n": 3, "sets": [[1,2],[2,3],[1,3]]}.
Support parse_support_json(std::string_view text);

/// Dispatches on the first non-blank character ('{' selects JSON).
Support parse_support(std::string_view text, std::optional<int> n = std::nullopt);

struct LabeledEdge {
  int v;
  int w;
  int label;
  auto operator<=>(const LabeledEdge&) const = default;
};

/// G(A): vertices are support indices (0-based), one edge per shared label.
class LabeledMultigraph {
 public:
  LabeledMultigraph(int vertex_count, std::vector<LabeledEdge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<LabeledEdge>& edges() const { return edges_; }
  bool has_edge(int v, int w, int label) const;
  /// Labels on edges between v and w, ascending.
  std::vector<int> labels_between(int v, int w) const;

 private:
  int vertex_count_;
  std::vector<LabeledEdge> edges_;  // v < w, sorted
  std::vector<std::vector<std::vector<int>>> between_;
};

/// Vertices v_1..v_k (0-based indices) with label j_t on edge (v_t, v_{t+1})
/// and j_k on (v_k, v_1).
struct LabeledCycle {
  std::vector<int> vertices;
  std::vector<int> labels;

  std::size_t length() const { return vertices.size(); }
  bool has_distinct_labels() const;
  bool has_constant_labels() const;
  /// Smallest vertex first, then the orientation whose vertex sequence is
  /// lexicographically smaller (label sequence breaks ties for 2-cycles).
  LabeledCycle canonical() const;
  bool is_cycle_of(const LabeledMultigraph& graph) const;

  auto operator<=>(const LabeledCycle&) const = default;
};

/// Label/generator incidences of an acyclic incidence graph.
struct IncidenceForest {
  std::vector<std::pair<int, int>> incidences;  // (label, vertex)
  int components = 0;
};

struct SupportVerdict {
  bool is_radical_support = false;
  std::optional<IncidenceForest> forest;  // set iff radical
  std::optional<LabeledCycle> cycle;      // set iff not radical; distinct labels
};

LabeledMultigraph build_graph(const Support& support);

/// Forest test on the bipartite label/generator incidence graph. A failing
/// support comes back with a canonical distinct-label cycle in which no
/// vertex carries a cycle label other than its two incident ones.
SupportVerdict is_radical_support(const Support& support);

/// All cycles with at most `max_len` edges, canonical, deduplicated, sorted.
std::vector<LabeledCycle> enumerate_cycles(const LabeledMultigraph& graph, int max_len);

/// Shortcuts a cycle with non-constant labels down to one with distinct labels.
LabeledCycle reduce_to_distinct_labels(const LabeledMultigraph& graph, const LabeledCycle& cycle);

/// Shortcuts a distinct-label cycle until every vertex v_t meets the cycle's
/// label set exactly in {j_{t-1}, j_t}. The result still has distinct labels.
LabeledCycle tighten_cycle(const Support& support, const LabeledCycle& cycle);

/// m_j = max(1, #{v : j in A_v}).
std::vector<int> min_ring_dims(const Support& support);

}  // namespace radsupp
