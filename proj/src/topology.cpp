#include "drli/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace drli {

Topology::Topology(int node_count, std::vector<std::pair<int, int>> edges)
    : node_count_(node_count) {
    if (node_count <= 0) {
        throw std::invalid_argument("topology: node_count must be positive");
    }
    adj_.resize(node_count);
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("topology: self-loop on node " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
            throw std::invalid_argument("topology: edge endpoint out of range");
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (int v = 0; v < node_count_; ++v) {
        auto& nbrs = adj_[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (nbrs.empty()) {
            throw std::invalid_argument("topology: node " + std::to_string(v) +
                                        " is isolated (needs at least one neighbor)");
        }
        if (static_cast<int>(nbrs.size()) > kMaxDegree) {
            throw std::invalid_argument("topology: node degree exceeds supported maximum");
        }
    }

    hears_.assign(static_cast<std::size_t>(node_count_) * node_count_, 0);
    for (int r = 0; r < node_count_; ++r) {
        hears_[static_cast<std::size_t>(r) * node_count_ + r] = 1;
        for (int s : adj_[r]) {
            hears_[static_cast<std::size_t>(r) * node_count_ + s] = 1;
        }
    }
}

void Topology::check_node(int node) const {
    if (node < 0 || node >= node_count_) {
        throw std::invalid_argument("topology: unknown node id " + std::to_string(node));
    }
}

std::span<const int> Topology::neighbors(int node) const {
    check_node(node);
    return adj_[node];
}

int Topology::degree(int node) const {
    check_node(node);
    return static_cast<int>(adj_[node].size());
}

int Topology::two_hop_degree(int node) const {
    check_node(node);
    std::vector<std::uint8_t> seen(node_count_, 0);
    int count = 0;
    for (int u : adj_[node]) {
        if (!seen[u]) {
            seen[u] = 1;
            ++count;
        }
    }
    for (int u : adj_[node]) {
        for (int v : adj_[u]) {
            if (v != node && !seen[v]) {
                seen[v] = 1;
                ++count;
            }
        }
    }
    return count;
}

int Topology::max_two_hop_degree() const {
    int best = 0;
    for (int v = 0; v < node_count_; ++v) {
        best = std::max(best, two_hop_degree(v));
    }
    return best;
}

}  // namespace drli
