#include "ocvar/projection.hpp"

#include <algorithm>
#include <numeric>

#include "ocvar/digest.hpp"

namespace ocvar {

std::string to_hex(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[value & 0xf];
    value >>= 4;
  }
  return out;
}

namespace {

void append_counts(std::string& out, const std::vector<TypeCount>& counts) {
  for (const auto& tc : counts) {
    out += std::to_string(tc.type.size());
    out += ':';
    out += tc.type;
    out += '=';
    out += std::to_string(tc.count);
    out += ';';
  }
}

void check_counts(const std::vector<TypeCount>& counts) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i].count == 0) throw std::invalid_argument("type counts must be positive");
    if (i > 0 && !(counts[i - 1].type < counts[i].type)) {
      throw std::invalid_argument("type counts must be sorted by type name without repeats");
    }
  }
}

}  // namespace

std::string encode_label(const NodeLabel& label) {
  std::string out = std::to_string(label.value.size());
  out += ':';
  out += label.value;
  out += '|';
  append_counts(out, label.counts);
  return out;
}

std::string encode_label(const EdgeLabel& label) {
  std::string out;
  append_counts(out, label.counts);
  return out;
}

ProjectedExecution::ProjectedExecution(std::vector<NodeLabel> node_labels, std::vector<LocalEdge> edges,
                                       std::vector<EdgeLabel> edge_labels,
                                       std::vector<EventIndex> source_events)
    : node_labels_(std::move(node_labels)),
      edges_(std::move(edges)),
      edge_labels_(std::move(edge_labels)),
      source_events_(std::move(source_events)) {
  const std::size_t n = node_labels_.size();
  if (edges_.size() != edge_labels_.size()) throw std::invalid_argument("one label per edge required");
  if (!source_events_.empty() && source_events_.size() != n) {
    throw std::invalid_argument("source_events must be empty or one per node");
  }
  out_.resize(n);
  in_.resize(n);
  node_keys_.reserve(n);
  for (const auto& label : node_labels_) {
    check_counts(label.counts);
    node_keys_.push_back(encode_label(label));
  }
  edge_keys_.reserve(edges_.size());
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.from >= n || e.to >= n) throw std::invalid_argument("edge endpoint out of range");
    check_counts(edge_labels_[i].counts);
    edge_keys_.push_back(encode_label(edge_labels_[i]));
    out_[e.from].push_back(i);
    in_[e.to].push_back(i);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end(), [this](auto a, auto b) { return edges_[a].to < edges_[b].to; });
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (edges_[list[i]].to == edges_[list[i - 1]].to) throw std::invalid_argument("duplicate edge");
    }
  }
  for (auto& list : in_) {
    std::sort(list.begin(), list.end(), [this](auto a, auto b) { return edges_[a].from < edges_[b].from; });
  }
}

std::optional<std::size_t> ProjectedExecution::find_edge(std::uint32_t from, std::uint32_t to) const {
  const auto& list = out_[from];
  auto it = std::lower_bound(list.begin(), list.end(), to,
                             [this](std::uint32_t e, std::uint32_t target) { return edges_[e].to < target; });
  if (it == list.end() || edges_[*it].to != to) return std::nullopt;
  return *it;
}

ProjectedExecution ProjectedExecution::permuted(std::span<const std::uint32_t> perm) const {
  const std::size_t n = node_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<NodeLabel> labels(n);
  std::vector<EventIndex> sources(source_events_.empty() ? 0 : n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.at(perm[i]) = node_labels_[i];
    if (!sources.empty()) sources[perm[i]] = source_events_[i];
  }
  std::vector<LocalEdge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back({perm[e.from], perm[e.to]});
  return ProjectedExecution(std::move(labels), std::move(edges), edge_labels_, std::move(sources));
}

ProjectedExecution project(const EventLog& log, const ProcessExecution& exec, std::string_view attribute) {
  const auto& members = exec.objects;
  auto count_types = [&](const std::vector<ObjectIndex>& objects) {
    std::vector<TypeCount> counts;
    // Type indices are ordered by name, so accumulating in index order keeps
    // the result sorted by type name.
    std::vector<std::pair<TypeIndex, std::uint32_t>> by_type;
    for (ObjectIndex o : objects) {
      const TypeIndex t = log.object(o).type;
      auto it = std::lower_bound(by_type.begin(), by_type.end(), t,
                                 [](const auto& p, TypeIndex key) { return p.first < key; });
      if (it != by_type.end() && it->first == t) ++it->second;
      else by_type.insert(it, {t, 1});
    }
    counts.reserve(by_type.size());
    for (auto [t, c] : by_type) counts.push_back({log.type_name(t), c});
    return counts;
  };
  auto members_of = [&](EventIndex e) {
    const auto& objs = log.event(e).objects;
    std::vector<ObjectIndex> in_exec;
    std::set_intersection(objs.begin(), objs.end(), members.begin(), members.end(),
                          std::back_inserter(in_exec));
    return in_exec;
  };

  std::vector<NodeLabel> nodes;
  nodes.reserve(exec.events.size());
  std::vector<std::vector<ObjectIndex>> node_members;
  node_members.reserve(exec.events.size());
  for (EventIndex e : exec.events) {
    auto value = log.attribute(e, attribute);
    if (!value) throw MissingAttribute(log.event(e).id, std::string(attribute));
    node_members.push_back(members_of(e));
    nodes.push_back({std::move(*value), count_types(node_members.back())});
  }

  auto position = [&](EventIndex e) {
    auto it = std::lower_bound(exec.events.begin(), exec.events.end(), e);
    return static_cast<std::uint32_t>(it - exec.events.begin());
  };
  std::vector<LocalEdge> edges;
  std::vector<EdgeLabel> edge_labels;
  edges.reserve(exec.edges.size());
  edge_labels.reserve(exec.edges.size());
  for (const auto& edge : exec.edges) {
    const auto from = position(edge.from);
    const auto to = position(edge.to);
    std::vector<ObjectIndex> shared;
    std::set_intersection(node_members[from].begin(), node_members[from].end(), node_members[to].begin(),
                          node_members[to].end(), std::back_inserter(shared));
    edges.push_back({from, to});
    edge_labels.push_back({count_types(shared)});
  }
  return ProjectedExecution(std::move(nodes), std::move(edges), std::move(edge_labels), exec.events);
}

}  // namespace ocvar
