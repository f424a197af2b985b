#include "atomkit/maxflow.hpp"

#include <algorithm>

namespace atomkit {

void FlowNetwork::add_edge(std::size_t from, std::size_t to, std::int32_t capacity) {
  edges_.push_back({static_cast<std::uint32_t>(to), head_[from], capacity, capacity});
  head_[from] = static_cast<std::int32_t>(edges_.size() - 1);
  edges_.push_back({static_cast<std::uint32_t>(from), head_[to], 0, 0});
  head_[to] = static_cast<std::int32_t>(edges_.size() - 1);
}

void FlowNetwork::reset() {
  for (auto& e : edges_) e.capacity = e.initial;
}

std::int32_t FlowNetwork::max_flow(std::size_t source, std::size_t sink, std::int32_t limit) {
  std::int32_t flow = 0;
  std::vector<std::int32_t> via(head_.size());
  std::vector<std::uint32_t> queue;
  queue.reserve(head_.size());
  while (flow < limit) {
    std::fill(via.begin(), via.end(), -1);
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(source));
    via[source] = -2;
    for (std::size_t qi = 0; qi < queue.size() && via[sink] == -1; ++qi) {
      const auto u = queue[qi];
      for (auto e = head_[u]; e != -1; e = edges_[e].next) {
        const auto v = edges_[e].to;
        if (edges_[e].capacity > 0 && via[v] == -1) {
          via[v] = e;
          queue.push_back(v);
        }
      }
    }
    if (via[sink] == -1) break;
    std::int32_t push = limit - flow;
    for (auto v = sink; v != source; v = edges_[via[v] ^ 1].to) push = std::min(push, edges_[via[v]].capacity);
    for (auto v = sink; v != source; v = edges_[via[v] ^ 1].to) {
      edges_[via[v]].capacity -= push;
      edges_[via[v] ^ 1].capacity += push;
    }
    flow += push;
  }
  return flow;
}

std::vector<char> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<std::size_t> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto e = head_[u]; e != -1; e = edges_[e].next) {
      if (edges_[e].capacity > 0 && !seen[edges_[e].to]) {
        seen[edges_[e].to] = 1;
        stack.push_back(edges_[e].to);
      }
    }
  }
  return seen;
}

}  // namespace atomkit
