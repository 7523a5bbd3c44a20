#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace drli {

/// Undirected mesh topology over node ids 0..node_count-1.
/// Immutable after construction; safe to share across concurrent runs.
class Topology {
public:
    /// Highest supported per-node degree (payloads carry one slot per neighbor).
    static constexpr int kMaxDegree = 32;

    Topology(int node_count, std::vector<std::pair<int, int>> edges);

    int node_count() const { return node_count_; }

    /// 1-hop neighbors of `node`, ascending. Throws on unknown node id.
    std::span<const int> neighbors(int node) const;

    int degree(int node) const;

    /// True iff a transmission by `sender` is heard at `receiver`'s position,
    /// i.e. sender is `receiver` itself or one of its 1-hop neighbors.
    bool interferes(int sender, int receiver) const {
        return hears_[static_cast<std::size_t>(receiver) * node_count_ + sender] != 0;
    }

    /// Nodes reachable from `node` in at most two hops, excluding itself.
    int two_hop_degree(int node) const;

    /// Max over nodes of two_hop_degree.
    int max_two_hop_degree() const;

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    void check_node(int node) const;

    int node_count_ = 0;
    std::vector<std::vector<int>> adj_;          // sorted ascending
    std::vector<std::uint8_t> hears_;            // receiver-major n*n matrix
    std::vector<std::pair<int, int>> edges_;     // normalized (a < b), sorted
};

}  // namespace drli
