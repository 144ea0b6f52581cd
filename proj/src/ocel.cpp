#include "ocvar/ocel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace ocvar {

using ojson = nlohmann::ordered_json;

const char* to_string(LogErrorKind kind) {
  switch (kind) {
    case LogErrorKind::MalformedJson: return "MalformedJson";
    case LogErrorKind::MissingField: return "MissingField";
    case LogErrorKind::InvalidField: return "InvalidField";
    case LogErrorKind::UnknownObjectRef: return "UnknownObjectRef";
    case LogErrorKind::DuplicateId: return "DuplicateId";
    case LogErrorKind::UnknownObject: return "UnknownObject";
    case LogErrorKind::UnknownType: return "UnknownType";
  }
  return "Unknown";
}

namespace {

constexpr std::string_view kGlobalLog = "ocel:global-log";
constexpr std::string_view kEvents = "ocel:events";
constexpr std::string_view kObjects = "ocel:objects";
constexpr std::string_view kObjectTypes = "ocel:object-types";
constexpr std::string_view kOmap = "ocel:omap";
constexpr std::string_view kVmap = "ocel:vmap";
constexpr std::string_view kType = "ocel:type";
constexpr std::string_view kOvmap = "ocel:ovmap";

[[noreturn]] void fail(LogErrorKind kind, std::string message) {
  throw LogError(kind, std::move(message));
}

const ojson& require(const ojson& parent, std::string_view key, const std::string& path) {
  auto it = parent.find(key);
  if (it == parent.end()) {
    fail(LogErrorKind::MissingField, "missing field " + path + "/" + std::string(key));
  }
  return *it;
}

std::string require_string(const ojson& parent, std::string_view key, const std::string& path) {
  const ojson& value = require(parent, key, path);
  if (!value.is_string()) {
    fail(LogErrorKind::InvalidField, "field " + path + "/" + std::string(key) + " must be a string");
  }
  return value.get<std::string>();
}

ojson extra_keys(const ojson& object, std::initializer_list<std::string_view> known) {
  ojson extra = ojson::object();
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) extra[it.key()] = it.value();
  }
  return extra;
}

}  // namespace

// --- EventLog -------------------------------------------------------------

std::optional<EventIndex> EventLog::find_event(std::string_view id) const {
  auto it = std::lower_bound(events_by_id_.begin(), events_by_id_.end(), id,
                             [this](EventIndex e, std::string_view key) { return events_[e].id < key; });
  if (it == events_by_id_.end() || events_[*it].id != id) return std::nullopt;
  return *it;
}

std::optional<ObjectIndex> EventLog::find_object(std::string_view id) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), id,
                             [](const Object& o, std::string_view key) { return o.id < key; });
  if (it == objects_.end() || it->id != id) return std::nullopt;
  return static_cast<ObjectIndex>(it - objects_.begin());
}

std::optional<TypeIndex> EventLog::find_type(std::string_view name) const {
  auto it = std::lower_bound(types_.begin(), types_.end(), name);
  if (it == types_.end() || *it != name) return std::nullopt;
  return static_cast<TypeIndex>(it - types_.begin());
}

ObjectIndex EventLog::object_index(std::string_view id) const {
  if (auto o = find_object(id)) return *o;
  fail(LogErrorKind::UnknownObject, "unknown object '" + std::string(id) + "'");
}

TypeIndex EventLog::type_index(std::string_view name) const {
  if (auto t = find_type(name)) return *t;
  fail(LogErrorKind::UnknownType, "unknown object type '" + std::string(name) + "'");
}

std::optional<std::string> EventLog::attribute(EventIndex e, std::string_view attribute) const {
  const Event& ev = events_.at(e);
  if (attribute == kActivityKey) return ev.activity;
  if (attribute == kTimestampKey) return format_rfc3339(ev.timestamp);
  auto it = ev.attributes.find(std::string(attribute));
  if (it == ev.attributes.end()) return std::nullopt;
  return it->second.text;
}

// --- EventLogBuilder ------------------------------------------------------

EventLogBuilder& EventLogBuilder::declare_type(std::string name) {
  declared_types_.push_back(std::move(name));
  return *this;
}

EventLogBuilder& EventLogBuilder::add_object(std::string id, std::string type) {
  objects_.push_back({std::move(id), std::move(type), ojson::object(), ojson::object()});
  return *this;
}

EventLogBuilder& EventLogBuilder::add_event(std::string id, std::string activity,
                                            Timestamp timestamp, std::vector<std::string> objects,
                                            std::map<std::string, std::string> attributes) {
  std::map<std::string, AttributeValue> values;
  for (auto& [k, v] : attributes) values.emplace(k, AttributeValue{std::move(v), true});
  events_.push_back({std::move(id), std::move(activity), timestamp, std::move(objects),
                     std::move(values), ojson::object()});
  return *this;
}

EventLog EventLogBuilder::build() && {
  EventLog log;

  if (!from_document_ && !global_log_.contains(kObjectTypes)) {
    // Programmatic logs: publish the declared types like an OCEL writer would.
    std::vector<std::string> declared = declared_types_;
    for (const auto& o : objects_) declared.push_back(o.type);
    std::sort(declared.begin(), declared.end());
    declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
    global_log_[std::string(kObjectTypes)] = declared;
    global_log_["ocel:attribute-names"] = ojson::array();
  }
  log.global_log_ = std::move(global_log_);
  log.extra_ = std::move(extra_);

  // Types.
  std::vector<std::string> types = declared_types_;
  for (const auto& o : objects_) types.push_back(o.type);
  for (const auto& t : types) {
    if (t.empty()) fail(LogErrorKind::InvalidField, "object type names must be non-empty");
  }
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());
  log.types_ = std::move(types);

  // Objects, sorted by id.
  std::sort(objects_.begin(), objects_.end(),
            [](const PendingObject& a, const PendingObject& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i].id.empty()) fail(LogErrorKind::InvalidField, "object ids must be non-empty");
    if (i > 0 && objects_[i].id == objects_[i - 1].id) {
      fail(LogErrorKind::DuplicateId, "duplicate object id '" + objects_[i].id + "'");
    }
  }
  log.objects_.reserve(objects_.size());
  for (auto& p : objects_) {
    Object o;
    o.id = std::move(p.id);
    o.type = *log.find_type(p.type);
    o.ovmap = std::move(p.ovmap);
    o.extra = std::move(p.extra);
    log.objects_.push_back(std::move(o));
  }

  // Events, sorted by (timestamp, id).
  {
    std::vector<const std::string*> ids;
    ids.reserve(events_.size());
    for (const auto& e : events_) {
      if (e.id.empty()) fail(LogErrorKind::InvalidField, "event ids must be non-empty");
      ids.push_back(&e.id);
    }
    std::sort(ids.begin(), ids.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < ids.size(); ++i) {
      if (*ids[i] == *ids[i - 1]) fail(LogErrorKind::DuplicateId, "duplicate event id '" + *ids[i] + "'");
    }
  }
  std::sort(events_.begin(), events_.end(), [](const PendingEvent& a, const PendingEvent& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.id < b.id;
  });

  log.events_.reserve(events_.size());
  log.traces_.assign(log.objects_.size(), {});
  for (auto& p : events_) {
    Event e;
    e.id = std::move(p.id);
    e.activity = std::move(p.activity);
    e.timestamp = p.timestamp;
    e.objects.reserve(p.objects.size());
    for (const auto& ref : p.objects) {
      auto o = log.find_object(ref);
      if (!o) {
        fail(LogErrorKind::UnknownObjectRef,
             "event '" + e.id + "' references undeclared object '" + ref + "'");
      }
      e.objects.push_back(*o);
    }
    std::sort(e.objects.begin(), e.objects.end());
    e.objects.erase(std::unique(e.objects.begin(), e.objects.end()), e.objects.end());
    e.attributes = std::move(p.attributes);
    e.extra = std::move(p.extra);

    const auto index = static_cast<EventIndex>(log.events_.size());
    for (ObjectIndex o : e.objects) log.traces_[o].push_back(index);
    if (e.objects.empty()) {
      log.warnings_.push_back("event '" + e.id + "' has no objects and belongs to no execution");
    }
    log.events_.push_back(std::move(e));
  }
  for (ObjectIndex o = 0; o < log.objects_.size(); ++o) {
    if (log.traces_[o].empty()) {
      log.warnings_.push_back("object '" + log.objects_[o].id + "' has no events and produces no execution");
    }
  }
  log.events_by_id_.resize(log.events_.size());
  std::iota(log.events_by_id_.begin(), log.events_by_id_.end(), EventIndex{0});
  std::sort(log.events_by_id_.begin(), log.events_by_id_.end(),
            [&log](EventIndex a, EventIndex b) { return log.events_[a].id < log.events_[b].id; });
  return log;
}

// --- parsing ----------------------------------------------------------------

EventLog parse_log(std::string_view json_text) {
  std::string duplicate;
  std::vector<std::string> path;
  std::set<std::string> seen_events;
  std::set<std::string> seen_objects;

  auto track = [&](int depth, ojson::parse_event_t event, ojson& parsed) {
    if (event != ojson::parse_event_t::key) return true;
    const auto d = static_cast<std::size_t>(depth);
    path.resize(d + 1);
    path[d] = parsed.get<std::string>();
    if (d == 2 && duplicate.empty()) {
      if (path[1] == kEvents && !seen_events.insert(path[2]).second) {
        duplicate = "duplicate event id '" + path[2] + "'";
      } else if (path[1] == kObjects && !seen_objects.insert(path[2]).second) {
        duplicate = "duplicate object id '" + path[2] + "'";
      }
    }
    return true;
  };

  ojson doc;
  try {
    doc = ojson::parse(json_text.begin(), json_text.end(), track);
  } catch (const ojson::parse_error& err) {
    fail(LogErrorKind::MalformedJson, err.what());
  }
  if (!duplicate.empty()) fail(LogErrorKind::DuplicateId, duplicate);
  if (!doc.is_object()) fail(LogErrorKind::InvalidField, "top-level value must be a JSON object");

  EventLogBuilder builder;
  builder.from_document_ = true;

  if (auto it = doc.find(kGlobalLog); it != doc.end()) {
    if (!it->is_object()) fail(LogErrorKind::InvalidField, "ocel:global-log must be an object");
    builder.global_log_ = *it;
    if (auto types = it->find(kObjectTypes); types != it->end()) {
      if (!types->is_array()) fail(LogErrorKind::InvalidField, "ocel:global-log/ocel:object-types must be an array");
      for (const auto& t : *types) {
        if (!t.is_string()) fail(LogErrorKind::InvalidField, "object type names must be strings");
        builder.declare_type(t.get<std::string>());
      }
    }
  }
  builder.extra_ = extra_keys(doc, {kGlobalLog, kEvents, kObjects});

  const ojson& objects = require(doc, kObjects, "");
  if (!objects.is_object()) fail(LogErrorKind::InvalidField, "ocel:objects must be an object");
  for (auto it = objects.begin(); it != objects.end(); ++it) {
    const std::string path_prefix = "/ocel:objects/" + it.key();
    if (!it->is_object()) fail(LogErrorKind::InvalidField, path_prefix + " must be an object");
    EventLogBuilder::PendingObject o;
    o.id = it.key();
    o.type = require_string(*it, kType, path_prefix);
    if (auto ov = it->find(kOvmap); ov != it->end()) o.ovmap = *ov;
    else o.ovmap = ojson::object();
    o.extra = extra_keys(*it, {kType, kOvmap});
    builder.objects_.push_back(std::move(o));
  }

  const ojson& events = require(doc, kEvents, "");
  if (!events.is_object()) fail(LogErrorKind::InvalidField, "ocel:events must be an object");
  for (auto it = events.begin(); it != events.end(); ++it) {
    const std::string path_prefix = "/ocel:events/" + it.key();
    if (!it->is_object()) fail(LogErrorKind::InvalidField, path_prefix + " must be an object");
    EventLogBuilder::PendingEvent e;
    e.id = it.key();
    e.activity = require_string(*it, kActivityKey, path_prefix);
    const std::string ts = require_string(*it, kTimestampKey, path_prefix);
    try {
      e.timestamp = parse_rfc3339(ts);
    } catch (const std::invalid_argument& err) {
      fail(LogErrorKind::InvalidField, path_prefix + "/ocel:timestamp: " + err.what());
    }
    const ojson& omap = require(*it, kOmap, path_prefix);
    if (!omap.is_array()) fail(LogErrorKind::InvalidField, path_prefix + "/ocel:omap must be an array");
    for (const auto& ref : omap) {
      if (!ref.is_string()) fail(LogErrorKind::InvalidField, path_prefix + "/ocel:omap entries must be strings");
      e.objects.push_back(ref.get<std::string>());
    }
    if (auto vmap = it->find(kVmap); vmap != it->end()) {
      if (!vmap->is_object()) fail(LogErrorKind::InvalidField, path_prefix + "/ocel:vmap must be an object");
      for (auto a = vmap->begin(); a != vmap->end(); ++a) {
        if (a->is_string()) e.attributes[a.key()] = {a->get<std::string>(), true};
        else e.attributes[a.key()] = {a->dump(), false};
      }
    }
    e.extra = extra_keys(*it, {kActivityKey, kTimestampKey, kOmap, kVmap});
    builder.events_.push_back(std::move(e));
  }

  return std::move(builder).build();
}

std::string serialize_log(const EventLog& log) {
  ojson doc = ojson::object();
  doc[std::string(kGlobalLog)] = log.global_log();

  ojson events = ojson::object();
  for (const Event& e : log.events()) {
    ojson j = ojson::object();
    j[std::string(kActivityKey)] = e.activity;
    j[std::string(kTimestampKey)] = format_rfc3339(e.timestamp);
    ojson omap = ojson::array();
    for (ObjectIndex o : e.objects) omap.push_back(log.object(o).id);
    j[std::string(kOmap)] = std::move(omap);
    ojson vmap = ojson::object();
    for (const auto& [name, value] : e.attributes) {
      vmap[name] = value.is_string ? ojson(value.text) : ojson::parse(value.text);
    }
    j[std::string(kVmap)] = std::move(vmap);
    for (auto it = e.extra.begin(); it != e.extra.end(); ++it) j[it.key()] = it.value();
    events[e.id] = std::move(j);
  }

  ojson objects = ojson::object();
  for (const Object& o : log.objects()) {
    ojson j = ojson::object();
    j[std::string(kType)] = log.type_name(o.type);
    j[std::string(kOvmap)] = o.ovmap;
    for (auto it = o.extra.begin(); it != o.extra.end(); ++it) j[it.key()] = it.value();
    objects[o.id] = std::move(j);
  }

  doc[std::string(kEvents)] = std::move(events);
  doc[std::string(kObjects)] = std::move(objects);
  for (auto it = log.extra().begin(); it != log.extra().end(); ++it) doc[it.key()] = it.value();
  return doc.dump(2);
}

LogStats log_stats(const EventLog& log) {
  LogStats stats;
  stats.events = log.events().size();
  stats.objects = log.objects().size();
  stats.types = log.types().size();
  for (const auto& t : log.types()) stats.objects_per_type[t] = 0;
  for (const Object& o : log.objects()) ++stats.objects_per_type[log.type_name(o.type)];
  return stats;
}

}  // namespace ocvar
