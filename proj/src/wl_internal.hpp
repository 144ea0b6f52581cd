#pragma once

#include <cstdint>
#include <vector>

#include "ocvar/projection.hpp"

namespace ocvar::detail {

std::vector<std::uint64_t> edge_digests(const ProjectedExecution& p);
std::vector<std::uint64_t> initial_colors(const ProjectedExecution& p);

/// One Weisfeiler-Lehman round.
std::vector<std::uint64_t> refine(const ProjectedExecution& p, const std::vector<std::uint64_t>& colors,
                                  const std::vector<std::uint64_t>& edge_digest);

}  // namespace ocvar::detail
