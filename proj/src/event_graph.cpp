#include "ocvar/event_graph.hpp"

#include <algorithm>
#include <sstream>

namespace ocvar {

std::optional<std::size_t> EventObjectGraph::find_edge(EventIndex from, EventIndex to) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), DirectedEdge{from, to});
  if (it == edges_.end() || it->from != from || it->to != to) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

EventObjectGraph build_event_graph(const EventLog& log) {
  EventObjectGraph g;
  const std::size_t n = log.events().size();
  g.node_objects_.resize(n);
  for (EventIndex e = 0; e < n; ++e) {
    const auto& objs = log.event(e).objects;
    g.node_objects_[e].assign(objs.begin(), objs.end());
  }

  struct Contribution {
    DirectedEdge edge;
    ObjectIndex object;
  };
  std::vector<Contribution> pairs;
  for (ObjectIndex o = 0; o < log.objects().size(); ++o) {
    auto trace = log.trace(o);
    for (std::size_t i = 1; i < trace.size(); ++i) {
      // Event indices are ranks in the global (timestamp, id) order.
      if (trace[i - 1] >= trace[i]) {
        throw CycleDetected("trace of object '" + log.object(o).id +
                            "' is not consistent with the global event order");
      }
      pairs.push_back({{trace[i - 1], trace[i]}, o});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Contribution& a, const Contribution& b) {
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.object < b.object;
  });

  for (const auto& p : pairs) {
    if (g.edges_.empty() || g.edges_.back() != p.edge) {
      g.edges_.push_back(p.edge);
      g.edge_objects_.emplace_back();
    }
    g.edge_objects_.back().push_back(p.object);
  }

  g.out_.resize(n);
  g.in_.resize(n);
  for (std::uint32_t i = 0; i < g.edges_.size(); ++i) {
    g.out_[g.edges_[i].from].push_back(i);
    g.in_[g.edges_[i].to].push_back(i);
  }
  return g;
}

std::string to_dot(const EventLog& log, const EventObjectGraph& graph) {
  std::ostringstream out;
  out << "digraph event_object_graph {\n  rankdir=LR;\n  node [shape=box];\n";
  for (EventIndex e = 0; e < graph.node_count(); ++e) {
    out << "  n" << e << " [label=\"" << log.event(e).id << " |";
    for (ObjectIndex o : graph.node_objects(e)) out << ' ' << log.object(o).id;
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    const auto& edge = graph.edges()[i];
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\"";
    bool first = true;
    for (ObjectIndex o : graph.edge_objects(i)) {
      out << (first ? "" : ",") << log.object(o).id;
      first = false;
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ocvar
