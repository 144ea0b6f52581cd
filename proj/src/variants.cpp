#include "ocvar/variants.hpp"

#include <algorithm>
#include <map>

#include "ocvar/parallel.hpp"

namespace ocvar {

const char* to_string(MiningMode mode) {
  return mode == MiningMode::Exact ? "exact" : "approximate";
}

namespace {

constexpr std::size_t kProgressStep = 10000;

/// Runs fn over [0, count) in blocks so progress can be reported in order.
template <typename Fn>
void blocked_for(std::size_t count, const MiningOptions& options, Fn&& fn) {
  for (std::size_t start = 0; start < count; start += kProgressStep) {
    const std::size_t end = std::min(count, start + kProgressStep);
    parallel_for(end - start, options.threads, [&](std::size_t i) { fn(start + i); });
    if (options.progress) options.progress(end);
  }
}

}  // namespace

VariantReport mine_projected(std::vector<ProjectedExecution> projections, std::string_view attribute,
                             const MiningOptions& options) {
  const std::size_t total = projections.size();
  std::vector<std::string> hashes(total);
  blocked_for(total, options, [&](std::size_t i) { hashes[i] = wl_hash(projections[i], options.wl_iterations); });

  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < total; ++i) buckets[hashes[i]].push_back(i);
  std::vector<const std::pair<const std::string, std::vector<std::size_t>>*> bucket_list;
  bucket_list.reserve(buckets.size());
  for (const auto& bucket : buckets) bucket_list.push_back(&bucket);

  std::vector<std::vector<std::vector<std::size_t>>> refined(bucket_list.size());
  parallel_for(bucket_list.size(), options.threads, [&](std::size_t b) {
    const auto& members = bucket_list[b]->second;
    auto& subclasses = refined[b];
    if (options.mode == MiningMode::Approximate) {
      subclasses.push_back(members);
      return;
    }
    for (std::size_t member : members) {
      bool matched = false;
      for (auto& sub : subclasses) {
        if (iso_check(projections[sub.front()], projections[member])) {
          sub.push_back(member);
          matched = true;
          break;
        }
      }
      if (!matched) subclasses.push_back({member});
    }
  });

  VariantReport report;
  report.attribute = std::string(attribute);
  report.mode = options.mode;
  report.total_executions = total;
  for (std::size_t b = 0; b < bucket_list.size(); ++b) {
    const auto& hash = bucket_list[b]->first;
    const auto& subclasses = refined[b];
    for (std::size_t k = 0; k < subclasses.size(); ++k) {
      EquivalenceClass cls;
      cls.class_id = subclasses.size() == 1 ? hash : hash + "-" + std::to_string(k + 1);
      cls.members = subclasses[k];
      cls.representative = cls.members.front();
      cls.representative_projection = projections[cls.representative];
      cls.frequency = {cls.members.size(), total};
      report.classes.push_back(std::move(cls));
    }
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.class_id < b.class_id;
  });
  return report;
}

VariantReport mine_variants(const EventLog& log, const std::vector<ProcessExecution>& execs,
                            std::string_view attribute, const MiningOptions& options) {
  std::vector<ProjectedExecution> projections(execs.size());
  parallel_for(execs.size(), options.threads,
               [&](std::size_t i) { projections[i] = project(log, execs[i], attribute); });
  return mine_projected(std::move(projections), attribute, options);
}

}  // namespace ocvar
