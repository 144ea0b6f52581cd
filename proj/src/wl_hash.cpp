#include <algorithm>
#include <tuple>

#include "ocvar/digest.hpp"
#include "ocvar/variants.hpp"
#include "wl_internal.hpp"

namespace ocvar {
namespace detail {

std::vector<std::uint64_t> edge_digests(const ProjectedExecution& p) {
  std::vector<std::uint64_t> out(p.edge_count());
  for (std::size_t e = 0; e < p.edge_count(); ++e) out[e] = digest_of(p.edge_key(e));
  return out;
}

std::vector<std::uint64_t> refine(const ProjectedExecution& p, const std::vector<std::uint64_t>& colors,
                                  const std::vector<std::uint64_t>& edge_digest) {
  std::vector<std::uint64_t> next(colors.size());
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> neighborhood;
  for (std::size_t n = 0; n < colors.size(); ++n) {
    neighborhood.clear();
    for (auto e : p.out_edges(n)) neighborhood.emplace_back(edge_digest[e], 0, colors[p.edges()[e].to]);
    for (auto e : p.in_edges(n)) neighborhood.emplace_back(edge_digest[e], 1, colors[p.edges()[e].from]);
    std::sort(neighborhood.begin(), neighborhood.end());
    Digest d;
    d.u64(colors[n]).u64(neighborhood.size());
    for (const auto& [label, direction, color] : neighborhood) d.u64(label).u64(direction).u64(color);
    next[n] = d.finish();
  }
  return next;
}

std::vector<std::uint64_t> initial_colors(const ProjectedExecution& p) {
  std::vector<std::uint64_t> colors(p.node_count());
  for (std::size_t n = 0; n < colors.size(); ++n) colors[n] = digest_of(p.node_key(n));
  return colors;
}

}  // namespace detail

using detail::edge_digests;
using detail::initial_colors;
using detail::refine;

std::vector<std::uint64_t> wl_colors(const ProjectedExecution& p, std::size_t rounds) {
  const auto edge_digest = edge_digests(p);
  auto colors = initial_colors(p);
  for (std::size_t r = 0; r < rounds; ++r) colors = refine(p, colors, edge_digest);
  return colors;
}

std::string wl_hash(const ProjectedExecution& p, std::size_t iterations) {
  iterations = std::max<std::size_t>(iterations, 1);
  const auto edge_digest = edge_digests(p);
  auto colors = initial_colors(p);
  std::vector<std::uint64_t> all(colors);
  all.reserve(colors.size() * (iterations + 1));
  for (std::size_t r = 0; r < iterations; ++r) {
    colors = refine(p, colors, edge_digest);
    all.insert(all.end(), colors.begin(), colors.end());
  }
  std::sort(all.begin(), all.end());
  Digest d;
  d.u64(p.node_count()).u64(p.edge_count());
  for (auto c : all) d.u64(c);
  return to_hex(d.finish());
}

}  // namespace ocvar
