#pragma once

#include <cstdint>
#include <vector>

namespace atomkit {

// Augmenting-path max flow for the small integral networks built by the
// min-cut engine. Capacities are reset between queries so one network can be
// reused for many (source, sink) pairs.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1) {}

  void add_edge(std::size_t from, std::size_t to, std::int32_t capacity);
  void reset();

  // Stops early once the flow reaches `limit`; the returned value is then
  // exactly `limit`.
  std::int32_t max_flow(std::size_t source, std::size_t sink, std::int32_t limit);

  // Nodes reachable from `source` along edges with positive residual capacity.
  std::vector<char> residual_reachable(std::size_t source) const;

  std::size_t node_count() const noexcept { return head_.size(); }

 private:
  struct Edge {
    std::uint32_t to;
    std::int32_t next;
    std::int32_t capacity;
    std::int32_t initial;
  };

  std::vector<std::int32_t> head_;
  std::vector<Edge> edges_;
};

}  // namespace atomkit
