#ifndef BICYCLIC_GRAPH_HPP
#define BICYCLIC_GRAPH_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "bicyclic/element.hpp"
#include "bicyclic/partition.hpp"
#include "bicyclic/target_set.hpp"
#include "bicyclic/window.hpp"

namespace bicyclic {

/// The graph on a window whose edges are the pairs {r,s} with rs or sr in
/// the target set. The target is avoidable on the window exactly when this
/// graph is bipartite; an odd cycle certifies unavoidability. Products are
/// evaluated in the full monoid, so edges are exact even when rs leaves the
/// window.
class AssociatedGraph {
public:
  AssociatedGraph(Window window, const TargetSet& target);

  const Window& window() const { return window_; }
  const std::vector<Element>& vertices() const { return window_.elements(); }
  std::size_t vertex_count() const { return window_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::int32_t>& neighbors(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;
  int degree(std::size_t v) const { return static_cast<int>(adj_[v].size()); }

private:
  Window window_;
  std::vector<std::vector<std::int32_t>> adj_;  // sorted ascending
  std::size_t edge_count_ = 0;
};

struct TwoColoring {
  std::vector<ColorClass> colors;  // indexed by graph vertex
};

struct OddCycle {
  std::vector<Element> vertices;  // cyclic, consecutive adjacent, odd length
};

using Certificate = std::variant<TwoColoring, OddCycle>;

/// BFS in vertex order with parent tracking; returns a proper two-coloring
/// when the graph is bipartite and otherwise the odd cycle closed by the
/// first conflicting edge. Deterministic for a fixed window order.
Certificate bipartition_or_odd_cycle(const AssociatedGraph& g);

/// Re-checks a certificate from scratch against the graph's edge relation;
/// independent of how the certificate was produced.
bool verify_certificate(const AssociatedGraph& g, const Certificate& c);

enum class ColoringStatus {
  Found,     // proper coloring returned
  None,      // search space exhausted, no coloring exists
  Undecided  // node budget hit before exhaustion
};

struct ColoringSearch {
  ColoringStatus status = ColoringStatus::Undecided;
  std::vector<int> colors;  // by vertex, only when Found
  std::uint64_t nodes = 0;  // search nodes expanded
};

/// Exact k-coloring by backtracking over vertices in descending-degree
/// order. "Undecided at this budget" is a first-class outcome, distinct
/// from a proved absence.
ColoringSearch k_colorable(const AssociatedGraph& g, int k,
                           std::uint64_t node_budget = 50'000'000);

/// DOT export; vertices are labeled "(a,b)" and carry fill colors when a
/// two-coloring is supplied.
std::string to_dot(const AssociatedGraph& g, const TwoColoring* coloring = nullptr);

// Structured-text certificate serialization:
//   certificate: two-coloring          certificate: odd-cycle
//   A: (0,0); ...                      cycle: (0,1); (1,1); (2,1)
//   B: (0,1); ...
std::string certificate_to_text(const AssociatedGraph& g, const Certificate& c);
Certificate certificate_from_text(const AssociatedGraph& g, std::string_view text);

}  // namespace bicyclic

#endif
