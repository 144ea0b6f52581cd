#include <gtest/gtest.h>

#include <algorithm>

#include "ocvar/variants.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace ocvar {
namespace {

std::vector<std::vector<std::size_t>> partition(const VariantReport& report) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& c : report.classes) out.push_back(c.members);
  return testing::normalize_partition(out);
}

void check_report_shape(const VariantReport& report, std::size_t total) {
  EXPECT_EQ(report.total_executions, total);
  std::size_t sum = 0;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& c = report.classes[i];
    sum += c.members.size();
    EXPECT_EQ(c.frequency, (Fraction{c.members.size(), total}));
    EXPECT_TRUE(ids.insert(c.class_id).second);
    EXPECT_NE(std::find(c.members.begin(), c.members.end(), c.representative), c.members.end());
    EXPECT_TRUE(std::is_sorted(c.members.begin(), c.members.end()));
    if (i > 0) {
      const auto& prev = report.classes[i - 1];
      EXPECT_TRUE(prev.members.size() > c.members.size() ||
                  (prev.members.size() == c.members.size() && prev.class_id < c.class_id));
    }
  }
  EXPECT_EQ(sum, total);
}

TEST(Variants, SampleComponentsGiveTwoHalfClasses) {
  const EventLog log = testing::sample_log();
  const auto execs = extract_components(log);
  const VariantReport report = mine_variants(log, execs, kActivityKey);
  ASSERT_EQ(report.classes.size(), 2u);
  for (const auto& c : report.classes) EXPECT_EQ(c.frequency, (Fraction{1, 2}));
  check_report_shape(report, 2);
  EXPECT_EQ(report.attribute, "ocel:activity");
}

TEST(Variants, SampleLeadingType2PairsByCluster) {
  // {m1,o1} ~ {m2,o1} and {m3,o2} ~ {m4,o2}; the clusters order their events differently.
  const EventLog log = testing::sample_log();
  const auto execs = extract_leading_type(log, "Type2");
  const VariantReport report = mine_variants(log, execs, kActivityKey);
  ASSERT_EQ(report.classes.size(), 2u);
  EXPECT_EQ(partition(report), (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
  for (const auto& c : report.classes) EXPECT_EQ(c.frequency, (Fraction{2, 4}));
}

TEST(Variants, CopiesCollapse) {
  testing::Rng rng(1);
  const auto p = testing::random_projected(rng, 8);
  std::vector<ProjectedExecution> projs;
  for (int i = 0; i < 10; ++i) projs.push_back(p.permuted(testing::random_permutation(rng, 8)));
  const VariantReport report = mine_projected(projs, "a");
  ASSERT_EQ(report.classes.size(), 1u);
  EXPECT_EQ(report.classes[0].frequency, (Fraction{10, 10}));
  EXPECT_EQ(report.classes[0].class_id, wl_hash(p));
}

TEST(Variants, CollisionSplitsGetSuffixes) {
  std::vector<NodeLabel> nodes(6, NodeLabel{"x", {}});
  auto make = [&](std::vector<LocalEdge> edges) {
    return ProjectedExecution(nodes, edges, std::vector<EdgeLabel>(edges.size()));
  };
  const auto six = make({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const auto threes = make({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  const VariantReport exact = mine_projected({six, threes, threes}, "a");
  ASSERT_EQ(exact.classes.size(), 2u);
  const std::string h = wl_hash(six);
  EXPECT_EQ(exact.classes[0].class_id, h + "-2");
  EXPECT_EQ(exact.classes[0].members, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(exact.classes[1].class_id, h + "-1");

  MiningOptions approx;
  approx.mode = MiningMode::Approximate;
  const VariantReport coarse = mine_projected({six, threes, threes}, "a", approx);
  ASSERT_EQ(coarse.classes.size(), 1u);
  EXPECT_EQ(coarse.classes[0].class_id, h);
}

TEST(VariantsProperty, ExactMatchesBruteForce) {
  testing::Rng rng(31);
  for (int round = 0; round < 30; ++round) {
    const EventLog log = testing::random_small_log(rng, 8);
    const auto execs = extract_components(log);
    std::vector<ProjectedExecution> projs;
    for (const auto& e : execs) projs.push_back(project(log, e, kActivityKey));
    const VariantReport exact = mine_variants(log, execs, kActivityKey);
    check_report_shape(exact, execs.size());
    EXPECT_EQ(partition(exact), testing::normalize_partition(testing::brute_force_classes(projs)));

    MiningOptions approx;
    approx.mode = MiningMode::Approximate;
    const VariantReport coarse = mine_variants(log, execs, kActivityKey, approx);
    check_report_shape(coarse, execs.size());
    EXPECT_LE(coarse.classes.size(), exact.classes.size());
    // Every exact class lies inside one approximate class.
    for (const auto& c : exact.classes) {
      const auto owner = std::find_if(coarse.classes.begin(), coarse.classes.end(), [&](const auto& k) {
        return std::find(k.members.begin(), k.members.end(), c.members.front()) != k.members.end();
      });
      ASSERT_NE(owner, coarse.classes.end());
      for (auto m : c.members) {
        EXPECT_NE(std::find(owner->members.begin(), owner->members.end(), m), owner->members.end());
      }
    }
  }
}

TEST(VariantsProperty, InputOrderAndThreadsDoNotMatter) {
  testing::Rng rng(41);
  std::vector<ProjectedExecution> projs;
  for (int i = 0; i < 40; ++i) {
    const auto base = testing::random_projected(rng, 5);
    projs.push_back(base);
    projs.push_back(base.permuted(testing::random_permutation(rng, 5)));
  }
  const VariantReport a = mine_projected(projs, "a");

  const auto perm = testing::random_permutation(rng, projs.size());
  std::vector<ProjectedExecution> shuffled(projs.size());
  for (std::size_t i = 0; i < projs.size(); ++i) shuffled[perm[i]] = projs[i];
  MiningOptions threaded;
  threaded.threads = 4;
  const VariantReport b = mine_projected(shuffled, "a", threaded);

  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].class_id, b.classes[i].class_id);
    EXPECT_EQ(a.classes[i].frequency, b.classes[i].frequency);
    std::vector<std::size_t> mapped;
    for (auto m : a.classes[i].members) mapped.push_back(perm[m]);
    std::sort(mapped.begin(), mapped.end());
    EXPECT_EQ(mapped, b.classes[i].members);
  }

  const VariantReport c = mine_projected(projs, "a", threaded);
  ASSERT_EQ(a.classes.size(), c.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) EXPECT_EQ(a.classes[i].members, c.classes[i].members);
}

TEST(Variants, ProgressAndEmptyInput) {
  const VariantReport empty = mine_projected({}, "a");
  EXPECT_TRUE(empty.classes.empty());
  EXPECT_EQ(empty.total_executions, 0u);

  std::vector<ProjectedExecution> many(20001, ProjectedExecution({NodeLabel{"a", {}}}, {}, {}));
  std::vector<std::size_t> calls;
  MiningOptions options;
  options.mode = MiningMode::Approximate;
  options.progress = [&](std::size_t done) { calls.push_back(done); };
  const VariantReport report = mine_projected(std::move(many), "a", options);
  EXPECT_EQ(report.classes.size(), 1u);
  ASSERT_FALSE(calls.empty());
  EXPECT_EQ(calls.front(), 10000u);
  EXPECT_EQ(calls.back(), 20001u);
}

}  // namespace
}  // namespace ocvar
