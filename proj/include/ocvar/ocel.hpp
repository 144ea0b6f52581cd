#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ocvar/timestamp.hpp"

namespace ocvar {

using EventIndex = std::uint32_t;
using ObjectIndex = std::uint32_t;
using TypeIndex = std::uint32_t;

inline constexpr std::string_view kActivityKey = "ocel:activity";
inline constexpr std::string_view kTimestampKey = "ocel:timestamp";

enum class LogErrorKind {
  MalformedJson,
  MissingField,
  InvalidField,
  UnknownObjectRef,
  DuplicateId,
  UnknownObject,
  UnknownType,
};

const char* to_string(LogErrorKind kind);

/// Raised for every ingest and lookup failure on an event log.
class LogError : public std::runtime_error {
 public:
  LogError(LogErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  LogErrorKind kind() const noexcept { return kind_; }

 private:
  LogErrorKind kind_;
};

/// An event attribute value. Values are compared as text; `is_string`
/// remembers whether the source JSON value was a string so that numbers and
/// booleans serialize back unchanged.
struct AttributeValue {
  std::string text;
  bool is_string = true;

  friend bool operator==(const AttributeValue&, const AttributeValue&) = default;
};

struct Event {
  std::string id;
  std::string activity;
  Timestamp timestamp;
  std::vector<ObjectIndex> objects;  // sorted, unique
  std::map<std::string, AttributeValue> attributes;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const Event&, const Event&) = default;
};

struct Object {
  std::string id;
  TypeIndex type = 0;
  nlohmann::ordered_json ovmap = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  friend bool operator==(const Object&, const Object&) = default;
};

struct LogStats {
  std::size_t events = 0;
  std::size_t objects = 0;
  std::size_t types = 0;
  std::map<std::string, std::size_t> objects_per_type;

  friend bool operator==(const LogStats&, const LogStats&) = default;
};

/// Validated, immutable object-centric event log.
///
/// Events are stored in global order (timestamp, then id byte-wise), so an
/// EventIndex doubles as the event's rank in that order. Objects and types
/// are stored sorted by id/name, so index order equals id order.
class EventLog {
 public:
  EventLog() = default;

  std::span<const Event> events() const noexcept { return events_; }
  std::span<const Object> objects() const noexcept { return objects_; }
  std::span<const std::string> types() const noexcept { return types_; }

  const Event& event(EventIndex e) const { return events_.at(e); }
  const Object& object(ObjectIndex o) const { return objects_.at(o); }
  const std::string& type_name(TypeIndex t) const { return types_.at(t); }
  const std::string& object_type_name(ObjectIndex o) const {
    return types_.at(objects_.at(o).type);
  }

  /// Events of `o` ordered by (timestamp, id).
  std::span<const EventIndex> trace(ObjectIndex o) const { return traces_.at(o); }

  std::optional<EventIndex> find_event(std::string_view id) const;
  std::optional<ObjectIndex> find_object(std::string_view id) const;
  std::optional<TypeIndex> find_type(std::string_view name) const;

  /// Throwing lookups (LogErrorKind::UnknownObject / UnknownType).
  ObjectIndex object_index(std::string_view id) const;
  TypeIndex type_index(std::string_view name) const;

  /// Value of `attribute` on event `e`; the reserved keys ocel:activity and
  /// ocel:timestamp are always defined.
  std::optional<std::string> attribute(EventIndex e, std::string_view attribute) const;

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  const nlohmann::ordered_json& global_log() const noexcept { return global_log_; }
  const nlohmann::ordered_json& extra() const noexcept { return extra_; }

  friend bool operator==(const EventLog& a, const EventLog& b) {
    return a.events_ == b.events_ && a.objects_ == b.objects_ && a.types_ == b.types_ &&
           a.traces_ == b.traces_ && a.global_log_ == b.global_log_ && a.extra_ == b.extra_;
  }

 private:
  friend EventLog parse_log(std::string_view);
  friend class EventLogBuilder;

  std::vector<Event> events_;
  std::vector<Object> objects_;
  std::vector<std::string> types_;
  std::vector<std::vector<EventIndex>> traces_;
  std::vector<EventIndex> events_by_id_;
  std::vector<std::string> warnings_;
  nlohmann::ordered_json global_log_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
};

/// Programmatic construction, used by generators and tests. Validation and
/// ordering rules are the same as for parse_log.
class EventLogBuilder {
 public:
  EventLogBuilder& declare_type(std::string name);
  EventLogBuilder& add_object(std::string id, std::string type);
  EventLogBuilder& add_event(std::string id, std::string activity, Timestamp timestamp,
                             std::vector<std::string> objects,
                             std::map<std::string, std::string> attributes = {});
  EventLog build() &&;

 private:
  struct PendingEvent {
    std::string id;
    std::string activity;
    Timestamp timestamp;
    std::vector<std::string> objects;
    std::map<std::string, AttributeValue> attributes;
    nlohmann::ordered_json extra;
  };
  struct PendingObject {
    std::string id;
    std::string type;
    nlohmann::ordered_json ovmap;
    nlohmann::ordered_json extra;
  };

  friend EventLog parse_log(std::string_view);

  bool from_document_ = false;
  std::vector<std::string> declared_types_;
  std::vector<PendingObject> objects_;
  std::vector<PendingEvent> events_;
  nlohmann::ordered_json global_log_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json extra_ = nlohmann::ordered_json::object();
};

/// Parses an OCEL JSON document.
EventLog parse_log(std::string_view json_text);

/// Serializes to OCEL JSON; parse_log(serialize_log(l)) == l.
std::string serialize_log(const EventLog& log);

LogStats log_stats(const EventLog& log);

}  // namespace ocvar
