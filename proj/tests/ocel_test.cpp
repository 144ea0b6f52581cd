#include <gtest/gtest.h>

#include <random>

#include "ocvar/ocel.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace ocvar {
namespace {

using testing::sample_log;

std::vector<std::string> trace_ids(const EventLog& log, std::string_view object) {
  std::vector<std::string> out;
  for (auto e : log.trace(log.object_index(object))) out.push_back(log.event(e).id);
  return out;
}

LogErrorKind parse_error_kind(const std::string& text) {
  try {
    parse_log(text);
  } catch (const LogError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a LogError";
  return LogErrorKind::MalformedJson;
}

TEST(ParseLog, SampleTraces) {
  const EventLog log = sample_log();
  EXPECT_EQ(trace_ids(log, "o1"), (std::vector<std::string>{"e3", "e4", "e6"}));
  EXPECT_EQ(trace_ids(log, "m1"), (std::vector<std::string>{"e1", "e3", "e5", "e6"}));
  EXPECT_EQ(trace_ids(log, "m4"), (std::vector<std::string>{"e7", "e10", "e11", "e12"}));
  EXPECT_EQ(log.object_type_name(log.object_index("o2")), "Type1");
  EXPECT_TRUE(log.warnings().empty());
  EXPECT_EQ(*log.attribute(*log.find_event("e4"), "resource"), "billing");
  EXPECT_EQ(*log.attribute(*log.find_event("e4"), "ocel:activity"), "Send Invoice");
  EXPECT_EQ(*log.attribute(*log.find_event("e1"), "ocel:timestamp"), "2021-03-01T08:00:00.000Z");
  EXPECT_FALSE(log.attribute(*log.find_event("e4"), "cost").has_value());
}

TEST(ParseLog, EmptyDocument) {
  const EventLog log = parse_log(R"({"ocel:global-log": {}, "ocel:events": {}, "ocel:objects": {}})");
  EXPECT_TRUE(log.events().empty());
  EXPECT_TRUE(log.objects().empty());
  const LogStats stats = log_stats(log);
  EXPECT_EQ(stats.events, 0u);
  EXPECT_EQ(stats.objects, 0u);
  EXPECT_EQ(stats.types, 0u);
}

TEST(ParseLog, UnknownObjectReference) {
  const std::string text = R"({"ocel:events": {"eX": {"ocel:activity": "a",
      "ocel:timestamp": "2020-01-01T00:00:00Z", "ocel:omap": ["ghost"], "ocel:vmap": {}}},
      "ocel:objects": {}})";
  try {
    parse_log(text);
    FAIL() << "expected UnknownObjectRef";
  } catch (const LogError& e) {
    EXPECT_EQ(e.kind(), LogErrorKind::UnknownObjectRef);
    EXPECT_NE(std::string(e.what()).find("eX"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("ghost"), std::string::npos);
  }
}

TEST(ParseLog, ErrorKinds) {
  EXPECT_EQ(parse_error_kind("{not json"), LogErrorKind::MalformedJson);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {}})"), LogErrorKind::MissingField);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {"e": {"ocel:timestamp": "2020-01-01T00:00:00Z",
      "ocel:omap": []}}, "ocel:objects": {}})"),
            LogErrorKind::MissingField);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {"e": {"ocel:activity": "a", "ocel:omap": [],
      "ocel:timestamp": "2020-01-01T00:00:00"}}, "ocel:objects": {}})"),
            LogErrorKind::InvalidField);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {}, "ocel:objects": {"o": {"ocel:type": "T"},
      "o": {"ocel:type": "T"}}})"),
            LogErrorKind::DuplicateId);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {"e": {"ocel:activity": "a", "ocel:omap": [],
      "ocel:timestamp": "2020-01-01T00:00:00Z"}, "e": {"ocel:activity": "b", "ocel:omap": [],
      "ocel:timestamp": "2020-01-01T00:00:00Z"}}, "ocel:objects": {}})"),
            LogErrorKind::DuplicateId);
  EXPECT_EQ(parse_error_kind(R"({"ocel:events": {}, "ocel:objects": {"o": {}}})"), LogErrorKind::MissingField);
  EXPECT_EQ(parse_error_kind("[1, 2]"), LogErrorKind::InvalidField);
}

TEST(ParseLog, EqualTimestampsOrderedById) {
  const EventLog log = parse_log(R"({"ocel:events": {
      "b": {"ocel:activity": "x", "ocel:timestamp": "2020-01-01T00:00:00Z", "ocel:omap": ["o"]},
      "a": {"ocel:activity": "y", "ocel:timestamp": "2020-01-01T00:00:00Z", "ocel:omap": ["o"]},
      "c": {"ocel:activity": "z", "ocel:timestamp": "2019-12-31T23:59:59Z", "ocel:omap": ["o"]}},
      "ocel:objects": {"o": {"ocel:type": "T"}}})");
  EXPECT_EQ(trace_ids(log, "o"), (std::vector<std::string>{"c", "a", "b"}));
}

TEST(ParseLog, EmptyOmapAndIdleObjectsWarn) {
  const EventLog log = parse_log(R"({"ocel:events": {
      "e": {"ocel:activity": "x", "ocel:timestamp": "2020-01-01T00:00:00Z", "ocel:omap": []}},
      "ocel:objects": {"idle": {"ocel:type": "T"}}})");
  EXPECT_EQ(log.events().size(), 1u);
  EXPECT_EQ(log.warnings().size(), 2u);
  EXPECT_TRUE(log.trace(log.object_index("idle")).empty());
}

TEST(ParseLog, DuplicateOmapEntriesCollapse) {
  const EventLog log = parse_log(R"({"ocel:events": {
      "e": {"ocel:activity": "x", "ocel:timestamp": "2020-01-01T00:00:00Z", "ocel:omap": ["o", "o"]}},
      "ocel:objects": {"o": {"ocel:type": "T"}}})");
  EXPECT_EQ(log.trace(log.object_index("o")).size(), 1u);
}

TEST(ParseLog, UnknownKeysSurviveRoundTrip) {
  const std::string text = R"({"ocel:global-log": {"ocel:object-types": ["T"], "custom": 1},
      "ocel:events": {"e": {"ocel:activity": "x", "ocel:timestamp": "2020-01-01T00:00:00+02:00",
        "ocel:omap": ["o"], "ocel:vmap": {"cost": 12.5, "flag": true, "who": "ann"}, "note": "keep"}},
      "ocel:objects": {"o": {"ocel:type": "T", "ocel:ovmap": {"size": 3}, "tag": [1]}},
      "ocel:global-event": {"ocel:activity": "__INVALID__"}})";
  const EventLog first = parse_log(text);
  const std::string serialized = serialize_log(first);
  const EventLog second = parse_log(serialized);
  EXPECT_EQ(first, second);
  EXPECT_EQ(serialize_log(second), serialized);
  EXPECT_NE(serialized.find("\"note\""), std::string::npos);
  EXPECT_NE(serialized.find("\"tag\""), std::string::npos);
  EXPECT_NE(serialized.find("ocel:global-event"), std::string::npos);
  EXPECT_NE(serialized.find("12.5"), std::string::npos);
  EXPECT_EQ(*second.attribute(0, "cost"), "12.5");
}

TEST(LogStats, SampleCounts) {
  const LogStats stats = log_stats(sample_log());
  EXPECT_EQ(stats.events, 12u);
  EXPECT_EQ(stats.types, 2u);
  EXPECT_EQ(stats.objects, 6u);
  EXPECT_EQ(stats.objects_per_type.at("Type1"), 2u);
  EXPECT_EQ(stats.objects_per_type.at("Type2"), 4u);
}

// Round trip and trace invariants over random logs.
TEST(ParseLogProperty, RoundTripAndTraceInvariant) {
  testing::Rng rng(7);
  for (int round = 0; round < 40; ++round) {
    const EventLog log = testing::random_small_log(rng, 6);
    const std::string text = serialize_log(log);
    const EventLog parsed = parse_log(text);
    ASSERT_EQ(parsed, log);
    EXPECT_EQ(parse_log(text), parsed);  // deterministic

    for (ObjectIndex o = 0; o < parsed.objects().size(); ++o) {
      auto trace = parsed.trace(o);
      std::vector<EventIndex> expected;
      for (EventIndex e = 0; e < parsed.events().size(); ++e) {
        const auto& objs = parsed.event(e).objects;
        if (std::find(objs.begin(), objs.end(), o) != objs.end()) expected.push_back(e);
      }
      ASSERT_EQ(std::vector<EventIndex>(trace.begin(), trace.end()), expected);
      for (std::size_t i = 1; i < trace.size(); ++i) {
        const Event& a = parsed.event(trace[i - 1]);
        const Event& b = parsed.event(trace[i]);
        ASSERT_TRUE(a.timestamp < b.timestamp || (a.timestamp == b.timestamp && a.id < b.id));
      }
    }
  }
}

}  // namespace
}  // namespace ocvar
