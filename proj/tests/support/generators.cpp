#include "support/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "support/fixtures.hpp"

namespace ocvar::testing {
namespace {

struct ClusterEvent {
  std::string activity;
  std::int64_t minute;
  std::vector<std::size_t> objects;  // positions within the cluster
};

struct Cluster {
  std::vector<std::string> types;
  std::vector<ClusterEvent> events;
};

Cluster random_cluster(Rng& rng, std::size_t max_events) {
  static const std::vector<std::string> kTypes = {"A", "B"};
  static const std::vector<std::string> kActivities = {"a", "b", "c"};
  Cluster c;
  const std::size_t object_count = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t i = 0; i < object_count; ++i) c.types.push_back(kTypes[rng() % kTypes.size()]);
  const std::size_t event_count = std::uniform_int_distribution<std::size_t>(1, max_events)(rng);
  for (std::size_t i = 0; i < event_count; ++i) {
    ClusterEvent e;
    e.activity = kActivities[rng() % kActivities.size()];
    e.minute = static_cast<std::int64_t>(rng() % 6);  // narrow range forces timestamp ties
    for (std::size_t o = 0; o < object_count; ++o) {
      if (rng() % 2 == 0) e.objects.push_back(o);
    }
    if (e.objects.empty()) e.objects.push_back(rng() % object_count);
    c.events.push_back(std::move(e));
  }
  return c;
}

}  // namespace

EventLog random_small_log(Rng& rng, std::size_t clusters, std::size_t max_events_per_cluster) {
  EventLogBuilder builder;
  builder.declare_type("A").declare_type("B");
  std::vector<Cluster> made;
  std::size_t event_serial = 0;
  for (std::size_t c = 0; c < clusters; ++c) {
    Cluster cluster = (!made.empty() && rng() % 2 == 0) ? made[rng() % made.size()]
                                                         : random_cluster(rng, max_events_per_cluster);
    made.push_back(cluster);
    // Renamed copies get permuted object names so index orders differ.
    auto names = random_permutation(rng, cluster.types.size());
    for (std::size_t o = 0; o < cluster.types.size(); ++o) {
      builder.add_object("c" + std::to_string(c) + "_o" + std::to_string(names[o]), cluster.types[o]);
    }
    const std::int64_t base = static_cast<std::int64_t>(c) * 1000;
    for (const auto& e : cluster.events) {
      std::vector<std::string> refs;
      for (auto o : e.objects) refs.push_back("c" + std::to_string(c) + "_o" + std::to_string(names[o]));
      // Zero-padded serials keep id order equal to creation order.
      char id[32];
      std::snprintf(id, sizeof id, "ev%06zu", event_serial++);
      builder.add_event(id, e.activity, minutes(base + e.minute), std::move(refs));
    }
  }
  return std::move(builder).build();
}

ProjectedExecution random_projected(Rng& rng, std::size_t nodes, double edge_probability) {
  static const std::vector<std::string> kValues = {"x", "y"};
  std::bernoulli_distribution has_edge(edge_probability);
  std::vector<NodeLabel> labels;
  for (std::size_t i = 0; i < nodes; ++i) {
    NodeLabel label{kValues[rng() % kValues.size()], {}};
    const auto a = static_cast<std::uint32_t>(rng() % 3);
    const auto b = static_cast<std::uint32_t>(rng() % 2);
    if (a > 0) label.counts.push_back({"A", a});
    if (b > 0) label.counts.push_back({"B", b});
    labels.push_back(std::move(label));
  }
  std::vector<LocalEdge> edges;
  std::vector<EdgeLabel> edge_labels;
  for (std::uint32_t i = 0; i < nodes; ++i) {
    for (std::uint32_t j = i + 1; j < nodes; ++j) {
      if (!has_edge(rng)) continue;
      edges.push_back({i, j});
      EdgeLabel label;
      label.counts.push_back({"A", static_cast<std::uint32_t>(1 + rng() % 2)});
      edge_labels.push_back(std::move(label));
    }
  }
  return ProjectedExecution(std::move(labels), std::move(edges), std::move(edge_labels));
}

std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

EventLog synthetic_log(std::size_t clusters, std::uint64_t seed) {
  Rng rng(seed);
  EventLogBuilder builder;
  builder.declare_type("item").declare_type("order").declare_type("package");

  // Lifecycle steps: (activity, participating object positions).
  // Position 0 = order, 1 and 2 = items, 3 = package.
  struct Step {
    const char* activity;
    std::vector<std::size_t> objects;
  };
  const std::vector<Step> kOpening = {{"place order", {0, 1, 2}}};
  const std::vector<Step> kMiddle = {
      {"confirm order", {0}},    {"pick item", {1}},       {"pick item", {2}},
      {"check stock", {1}},      {"check stock", {2}},     {"send reminder", {0}},
      {"create package", {3}},   {"pack items", {1, 2, 3}}, {"weigh package", {3}},
      {"update order", {0, 1}},  {"update order", {0, 2}}, {"reschedule", {3}},
  };
  const std::vector<Step> kClosing = {
      {"ship", {3}}, {"deliver", {0, 3}}, {"pay order", {0}}};
  constexpr std::size_t kEventsPerCluster = 20;
  const std::size_t middle_count = kEventsPerCluster - kOpening.size() - kClosing.size() - 1;

  std::size_t serial = 0;
  for (std::size_t c = 0; c < clusters; ++c) {
    const std::string prefix = "c" + std::to_string(c);
    const std::string ids[4] = {prefix + "_order", prefix + "_item1", prefix + "_item2", prefix + "_pkg"};
    builder.add_object(ids[0], "order").add_object(ids[1], "item").add_object(ids[2], "item");
    builder.add_object(ids[3], "package");

    // Most clusters follow one of a few fixed routes; the rest are random.
    std::vector<const Step*> route;
    for (const auto& s : kOpening) route.push_back(&s);
    const std::uint64_t route_seed = rng() % 4 == 0 ? rng() : rng() % 6;
    Rng route_rng(route_seed);
    for (std::size_t i = 0; i < middle_count; ++i) route.push_back(&kMiddle[route_rng() % kMiddle.size()]);
    static const Step kPack{"pack items", {1, 2, 3}};
    route.push_back(&kPack);
    for (const auto& s : kClosing) route.push_back(&s);

    const std::int64_t base = static_cast<std::int64_t>(c) * 100;
    for (std::size_t i = 0; i < route.size(); ++i) {
      std::vector<std::string> refs;
      for (auto pos : route[i]->objects) refs.push_back(ids[pos]);
      char id[32];
      std::snprintf(id, sizeof id, "e%08zu", serial++);
      builder.add_event(id, route[i]->activity, minutes(base + static_cast<std::int64_t>(i)), std::move(refs));
    }
  }
  return std::move(builder).build();
}

}  // namespace ocvar::testing
