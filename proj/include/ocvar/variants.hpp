#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ocvar/extraction.hpp"
#include "ocvar/projection.hpp"

namespace ocvar {

inline constexpr std::size_t kDefaultWlIterations = 3;

/// Weisfeiler-Lehman color of every node after `rounds` refinement rounds
/// (round 0 = digest of the node label).
std::vector<std::uint64_t> wl_colors(const ProjectedExecution& p, std::size_t rounds);

/// Isomorphism-invariant digest of p as 16 hex digits. iterations >= 1.
std::string wl_hash(const ProjectedExecution& p, std::size_t iterations = kDefaultWlIterations);

/// Label-respecting isomorphism test on directed graphs.
bool iso_check(const ProjectedExecution& p, const ProjectedExecution& q);

enum class MiningMode { Exact, Approximate };

const char* to_string(MiningMode mode);

/// Exact rational size/total; not reduced.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct EquivalenceClass {
  std::string class_id;
  std::vector<std::size_t> members;  // indices into the mined execution list
  std::size_t representative = 0;    // member index whose projection is kept
  ProjectedExecution representative_projection;
  Fraction frequency;
};

struct VariantReport {
  std::string attribute;
  MiningMode mode = MiningMode::Exact;
  std::size_t total_executions = 0;
  /// Sorted by frequency descending, then class_id ascending.
  std::vector<EquivalenceClass> classes;
};

struct MiningOptions {
  MiningMode mode = MiningMode::Exact;
  std::size_t wl_iterations = kDefaultWlIterations;
  unsigned threads = 1;
  /// Called with the number of executions hashed so far, every 10000 and at the end.
  std::function<void(std::size_t)> progress;
};

/// Two-step equivalence class mining: bucket by wl_hash, then (exact mode)
/// split each bucket with iso_check against one representative per
/// subclass. Output is independent of `threads`.
VariantReport mine_variants(const EventLog& log, const std::vector<ProcessExecution>& execs,
                            std::string_view attribute, const MiningOptions& options = {});

/// Same pipeline over already projected graphs.
VariantReport mine_projected(std::vector<ProjectedExecution> projections, std::string_view attribute,
                             const MiningOptions& options = {});

}  // namespace ocvar
