#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "ocvar/digest.hpp"
#include "ocvar/variants.hpp"
#include "wl_internal.hpp"

namespace ocvar {
namespace {

constexpr std::uint32_t kUnmapped = UINT32_MAX;

std::size_t distinct(std::vector<std::uint64_t> colors) {
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

bool same_multiset(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// State of a VF2-style depth-first matcher from p into q.
class Matcher {
 public:
  Matcher(const ProjectedExecution& p, const ProjectedExecution& q, const std::vector<std::uint64_t>& p_colors,
          const std::vector<std::uint64_t>& q_colors)
      : p_(p), q_(q), p_colors_(p_colors), p_to_q_(p.node_count(), kUnmapped), q_to_p_(q.node_count(), kUnmapped) {
    for (std::uint32_t v = 0; v < q.node_count(); ++v) classes_[q_colors[v]].push_back(v);
    build_order();
  }

  bool run() {
    const std::size_t n = order_.size();
    if (n == 0) return true;
    std::vector<std::size_t> next_candidate(n, 0);
    std::size_t depth = 0;
    for (;;) {
      const std::uint32_t u = order_[depth];
      const auto& candidates = classes_[p_colors_[u]];
      bool placed = false;
      while (next_candidate[depth] < candidates.size()) {
        const std::uint32_t v = candidates[next_candidate[depth]++];
        if (q_to_p_[v] != kUnmapped || !feasible(u, v)) continue;
        p_to_q_[u] = v;
        q_to_p_[v] = u;
        placed = true;
        break;
      }
      if (placed) {
        if (depth + 1 == n) return true;
        next_candidate[++depth] = 0;
        continue;
      }
      if (depth == 0) return false;
      --depth;
      const std::uint32_t back = order_[depth];
      q_to_p_[p_to_q_[back]] = kUnmapped;
      p_to_q_[back] = kUnmapped;
    }
  }

 private:
  // Connectivity-first order: each next node has the most already-ordered
  // neighbors; ties go to rarer color classes, then higher degree.
  void build_order() {
    const std::size_t n = p_.node_count();
    std::vector<std::size_t> links(n, 0);
    std::vector<bool> taken(n, false);
    std::vector<long long> rarity(n);
    std::vector<std::size_t> degree(n);
    for (std::uint32_t u = 0; u < n; ++u) {
      rarity[u] = -static_cast<long long>(classes_[p_colors_[u]].size());
      degree[u] = p_.out_edges(u).size() + p_.in_edges(u).size();
    }
    order_.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::uint32_t best = kUnmapped;
      auto key = [&](std::uint32_t u) { return std::make_tuple(links[u], rarity[u], degree[u]); };
      for (std::uint32_t u = 0; u < n; ++u) {
        if (taken[u]) continue;
        if (best == kUnmapped || key(u) > key(best)) best = u;
      }
      taken[best] = true;
      order_.push_back(best);
      for (auto e : p_.out_edges(best)) ++links[p_.edges()[e].to];
      for (auto e : p_.in_edges(best)) ++links[p_.edges()[e].from];
    }
  }

  bool feasible(std::uint32_t u, std::uint32_t v) const {
    if (p_.out_edges(u).size() != q_.out_edges(v).size()) return false;
    if (p_.in_edges(u).size() != q_.in_edges(v).size()) return false;
    if (p_.node_key(u) != q_.node_key(v)) return false;

    std::size_t p_links = 0;
    for (auto e : p_.out_edges(u)) {
      const std::uint32_t w = p_.edges()[e].to;
      const std::uint32_t target = w == u ? v : p_to_q_[w];
      if (target == kUnmapped) continue;
      auto f = q_.find_edge(v, target);
      if (!f || q_.edge_key(*f) != p_.edge_key(e)) return false;
      ++p_links;
    }
    for (auto e : p_.in_edges(u)) {
      const std::uint32_t w = p_.edges()[e].from;
      if (w == u) continue;  // self loop already checked above
      const std::uint32_t source = p_to_q_[w];
      if (source == kUnmapped) continue;
      auto f = q_.find_edge(source, v);
      if (!f || q_.edge_key(*f) != p_.edge_key(e)) return false;
      ++p_links;
    }

    std::size_t q_links = 0;
    for (auto e : q_.out_edges(v)) {
      const std::uint32_t w = q_.edges()[e].to;
      if (w == v || q_to_p_[w] != kUnmapped) ++q_links;
    }
    for (auto e : q_.in_edges(v)) {
      const std::uint32_t w = q_.edges()[e].from;
      if (w != v && q_to_p_[w] != kUnmapped) ++q_links;
    }
    return p_links == q_links;
  }

  const ProjectedExecution& p_;
  const ProjectedExecution& q_;
  const std::vector<std::uint64_t>& p_colors_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> p_to_q_;
  std::vector<std::uint32_t> q_to_p_;
};

}  // namespace

bool iso_check(const ProjectedExecution& p, const ProjectedExecution& q) {
  if (p.node_count() != q.node_count() || p.edge_count() != q.edge_count()) return false;

  // Refine both graphs in lock step until p's partition is stable. Colors
  // after a fixed number of rounds are isomorphism invariant, so any
  // difference in the color multisets proves non-isomorphism.
  const auto p_edges = detail::edge_digests(p);
  const auto q_edges = detail::edge_digests(q);
  std::vector<std::uint64_t> p_colors = detail::initial_colors(p);
  std::vector<std::uint64_t> q_colors = detail::initial_colors(q);
  std::size_t classes = distinct(p_colors);
  for (std::size_t round = 1;; ++round) {
    if (!same_multiset(p_colors, q_colors)) return false;
    if (round > p.node_count()) break;
    auto p_next = detail::refine(p, p_colors, p_edges);
    auto q_next = detail::refine(q, q_colors, q_edges);
    const std::size_t next_classes = distinct(p_next);
    if (next_classes == classes) break;
    classes = next_classes;
    p_colors = std::move(p_next);
    q_colors = std::move(q_next);
  }

  return Matcher(p, q, p_colors, q_colors).run();
}

}  // namespace ocvar
