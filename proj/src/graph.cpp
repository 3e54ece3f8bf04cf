#include "bicyclic/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicyclic {

AssociatedGraph::AssociatedGraph(Window window, const TargetSet& target)
    : window_(std::move(window)), adj_(window_.size()) {
  const auto& elems = window_.elements();
  const std::size_t n = elems.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (target.contains(elems[i] * elems[j]) || target.contains(elems[j] * elems[i])) {
        adj_[i].push_back(static_cast<std::int32_t>(j));
        adj_[j].push_back(static_cast<std::int32_t>(i));
        ++edge_count_;
      }
    }
  }
  // neighbor scans built ascending already; i<j insertion keeps adj_[i]
  // sorted for j-half, but the i-half entries arrive out of order
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool AssociatedGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), static_cast<std::int32_t>(v));
}

Certificate bipartition_or_odd_cycle(const AssociatedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<std::int32_t> parent(n, -1);
  std::vector<std::int32_t> depth(n, 0);

  auto extract_cycle = [&](std::int32_t u, std::int32_t v) {
    // climb to equal depth, then to the least common ancestor
    std::vector<std::int32_t> up, vp;
    std::int32_t x = u, y = v;
    while (depth[x] > depth[y]) { up.push_back(x); x = parent[x]; }
    while (depth[y] > depth[x]) { vp.push_back(y); y = parent[y]; }
    while (x != y) {
      up.push_back(x); x = parent[x];
      vp.push_back(y); y = parent[y];
    }
    up.push_back(x);  // the common ancestor
    // cycle order: ancestor -> ... -> u, v -> ... -> child-of-ancestor;
    // u--v is the conflict edge, the wrap closes on a tree edge
    std::vector<Element> cycle;
    cycle.reserve(up.size() + vp.size());
    for (auto it = up.rbegin(); it != up.rend(); ++it) cycle.push_back(g.vertices()[*it]);
    for (std::int32_t w : vp) cycle.push_back(g.vertices()[w]);
    return OddCycle{std::move(cycle)};
  };

  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<std::int32_t> queue{static_cast<std::int32_t>(s)};
    while (!queue.empty()) {
      std::int32_t u = queue.front();
      queue.pop_front();
      for (std::int32_t v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return extract_cycle(u, v);
        }
      }
    }
  }
  TwoColoring out;
  out.colors.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.colors.push_back(color[i] == 0 ? ColorClass::A : ColorClass::B);
  return out;
}

bool verify_certificate(const AssociatedGraph& g, const Certificate& c) {
  if (const auto* coloring = std::get_if<TwoColoring>(&c)) {
    if (coloring->colors.size() != g.vertex_count()) return false;
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (std::int32_t v : g.neighbors(u))
        if (coloring->colors[u] == coloring->colors[v]) return false;
    return true;
  }
  const auto& cycle = std::get<OddCycle>(c).vertices;
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
  std::vector<std::size_t> idx;
  idx.reserve(cycle.size());
  for (Element x : cycle) {
    auto i = g.window().index_of(x);
    if (!i) return false;
    idx.push_back(*i);
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::size_t j = (i + 1) % idx.size();
    if (idx[i] == idx[j]) return false;
    if (!g.adjacent(idx[i], idx[j])) return false;
  }
  return true;
}

namespace {

bool try_extend(const AssociatedGraph& g, const std::vector<std::int32_t>& order, int k,
                std::vector<int>& colors, std::size_t pos, std::uint64_t budget,
                std::uint64_t& nodes, bool& exhausted) {
  if (pos == order.size()) return true;
  if (++nodes > budget) {
    exhausted = true;
    return false;
  }
  const std::int32_t v = order[pos];
  for (int c = 0; c < k; ++c) {
    bool clash = false;
    for (std::int32_t w : g.neighbors(v)) {
      if (colors[w] == c) { clash = true; break; }
    }
    if (clash) continue;
    colors[v] = c;
    if (try_extend(g, order, k, colors, pos + 1, budget, nodes, exhausted)) return true;
    colors[v] = -1;
    if (exhausted) return false;
  }
  return false;
}

}  // namespace

ColoringSearch k_colorable(const AssociatedGraph& g, int k, std::uint64_t node_budget) {
  if (k < 1) throw std::invalid_argument("k_colorable: k must be >= 1");
  ColoringSearch result;
  std::vector<std::int32_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int32_t l, std::int32_t r) { return g.degree(l) > g.degree(r); });
  std::vector<int> colors(g.vertex_count(), -1);
  bool exhausted = false;
  bool found = try_extend(g, order, k, colors, 0, node_budget, result.nodes, exhausted);
  if (found) {
    // validate before returning
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
      if (colors[u] < 0 || colors[u] >= k) throw std::logic_error("k_colorable: incomplete coloring");
      for (std::int32_t v : g.neighbors(u))
        if (colors[u] == colors[v]) throw std::logic_error("k_colorable: improper coloring");
    }
    result.status = ColoringStatus::Found;
    result.colors = std::move(colors);
  } else {
    result.status = exhausted ? ColoringStatus::Undecided : ColoringStatus::None;
  }
  return result;
}

std::string to_dot(const AssociatedGraph& g, const TwoColoring* coloring) {
  std::ostringstream os;
  os << "graph bicyclic {\n";
  os << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    os << "  \"" << g.vertices()[i] << "\"";
    if (coloring) {
      os << " [style=filled, fillcolor="
         << (coloring->colors[i] == ColorClass::A ? "lightblue" : "lightsalmon") << "]";
    }
    os << ";\n";
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::int32_t v : g.neighbors(u))
      if (static_cast<std::size_t>(v) > u)
        os << "  \"" << g.vertices()[u] << "\" -- \"" << g.vertices()[v] << "\";\n";
  os << "}\n";
  return os.str();
}

std::string certificate_to_text(const AssociatedGraph& g, const Certificate& c) {
  std::ostringstream os;
  if (const auto* coloring = std::get_if<TwoColoring>(&c)) {
    os << "certificate: two-coloring\n";
    std::vector<Element> as, bs;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      (coloring->colors[i] == ColorClass::A ? as : bs).push_back(g.vertices()[i]);
    os << "A: " << format_elements(as) << "\n";
    os << "B: " << format_elements(bs) << "\n";
  } else {
    os << "certificate: odd-cycle\n";
    os << "cycle: " << format_elements(std::get<OddCycle>(c).vertices) << "\n";
  }
  return os.str();
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Certificate certificate_from_text(const AssociatedGraph& g, std::string_view text) {
  std::istringstream in({text.begin(), text.end()});
  std::string line;
  std::string kind;
  std::vector<Element> as, bs, cycle;
  bool have_a = false, have_b = false, have_cycle = false;
  while (std::getline(in, line)) {
    std::string_view sv = strip(line);
    if (sv.empty()) continue;
    if (sv.rfind("certificate:", 0) == 0) {
      kind = std::string(strip(sv.substr(12)));
    } else if (sv.rfind("A:", 0) == 0) {
      as = parse_element_list(sv.substr(2));
      have_a = true;
    } else if (sv.rfind("B:", 0) == 0) {
      bs = parse_element_list(sv.substr(2));
      have_b = true;
    } else if (sv.rfind("cycle:", 0) == 0) {
      cycle = parse_element_list(sv.substr(6));
      have_cycle = true;
    } else {
      throw std::invalid_argument("certificate: unrecognized line \"" + line + "\"");
    }
  }
  if (kind == "two-coloring") {
    if (!have_a || !have_b) throw std::invalid_argument("two-coloring certificate needs A: and B: lines");
    TwoColoring out;
    out.colors.assign(g.vertex_count(), ColorClass::A);
    std::vector<bool> seen(g.vertex_count(), false);
    auto place = [&](const std::vector<Element>& xs, ColorClass cc) {
      for (Element x : xs) {
        auto i = g.window().index_of(x);
        if (!i) throw std::invalid_argument("certificate mentions " + to_string(x) + " outside the window");
        if (seen[*i]) throw std::invalid_argument("certificate colors " + to_string(x) + " twice");
        seen[*i] = true;
        out.colors[*i] = cc;
      }
    };
    place(as, ColorClass::A);
    place(bs, ColorClass::B);
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw std::invalid_argument("certificate misses " + to_string(g.vertices()[i]));
    return out;
  }
  if (kind == "odd-cycle") {
    if (!have_cycle) throw std::invalid_argument("odd-cycle certificate needs a cycle: line");
    return OddCycle{std::move(cycle)};
  }
  throw std::invalid_argument("unknown certificate kind \"" + kind + "\"");
}

}  // namespace bicyclic
