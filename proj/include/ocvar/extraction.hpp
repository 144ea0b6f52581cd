#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ocvar/event_graph.hpp"
#include "ocvar/object_graph.hpp"
#include "ocvar/ocel.hpp"

namespace ocvar {

enum class ExtractionErrorKind { DisconnectedObjectSet, EmptyExecution };

class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(ExtractionErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ExtractionErrorKind kind() const noexcept { return kind_; }

 private:
  ExtractionErrorKind kind_;
};

enum class Strategy { Components, LeadingType, ObjectSet };

const char* to_string(Strategy s);

struct Provenance {
  Strategy strategy = Strategy::ObjectSet;
  std::optional<TypeIndex> leading_type;
  std::optional<ObjectIndex> lead_object;
  /// Leading-type only: BFS level of each member, parallel to objects.
  std::vector<std::uint32_t> levels;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Directed event graph induced by a connected object set. All id sets are
/// sorted ascending and refer to the log by index.
struct ProcessExecution {
  std::vector<ObjectIndex> objects;
  std::vector<EventIndex> events;
  std::vector<DirectedEdge> edges;
  Provenance provenance;

  friend bool operator==(const ProcessExecution&, const ProcessExecution&) = default;
};

/// Holds the derived graphs of one log and extracts executions from it.
class ExecutionExtractor {
 public:
  explicit ExecutionExtractor(const EventLog& log);

  const EventLog& log() const noexcept { return *log_; }
  const EventObjectGraph& event_graph() const noexcept { return event_graph_; }
  const ObjectGraph& object_graph() const noexcept { return object_graph_; }

  /// Execution of an explicit object set. Throws ExtractionError when the
  /// set is empty, disconnected in the object graph, or has no events.
  ProcessExecution from_objects(std::span<const ObjectIndex> objects) const;

  /// One execution per connected component with at least one event.
  std::vector<ProcessExecution> components() const;

  /// One execution per object of `leading_type` (level-pruned BFS). Result
  /// content and order do not depend on `threads` (0 = all cores).
  std::vector<ProcessExecution> leading_type(TypeIndex leading_type, unsigned threads = 1) const;

 private:
  ProcessExecution materialize(std::vector<ObjectIndex> objects, Provenance provenance) const;

  const EventLog* log_;
  EventObjectGraph event_graph_;
  ObjectGraph object_graph_;
};

std::vector<ProcessExecution> extract_components(const EventLog& log);

/// Throws LogError(UnknownType) if `leading_type` is not declared.
std::vector<ProcessExecution> extract_leading_type(const EventLog& log, std::string_view leading_type,
                                                   unsigned threads = 1);

ProcessExecution execution_from_objects(const EventLog& log, std::span<const std::string> object_ids);

/// Objects admitted by level-pruned BFS from `lead`, with their levels.
struct LeadingTypeSelection {
  std::vector<ObjectIndex> objects;  // ascending
  std::vector<std::uint32_t> levels;  // parallel to objects
};
LeadingTypeSelection leading_type_selection(const EventLog& log, const ObjectGraph& graph,
                                            ObjectIndex lead);

}  // namespace ocvar
