#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "netmix/errors.hpp"

namespace netmix {

/// Packed key for an unordered node pair, canonical order i < j.
using PairKey = std::uint64_t;

inline PairKey pair_key(int i, int j) {
    if (i > j)
        std::swap(i, j);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
           static_cast<std::uint32_t>(j);
}

inline std::pair<int, int> key_pair(PairKey k) {
    return {static_cast<int>(k >> 32), static_cast<int>(k & 0xFFFFFFFFULL)};
}

inline std::int64_t pair_count(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

/// One binary undirected network on n labeled nodes. Edges live in a hash
/// set keyed by canonical pair, so membership is O(1); sorted_edge_keys()
/// gives a deterministic iteration order when one is needed.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 1)
            throw validation_error("Graph: node count must be >= 1");
    }

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

    bool has_edge(int i, int j) const { return edges_.count(pair_key(i, j)) != 0; }
    bool has_edge_key(PairKey k) const { return edges_.count(k) != 0; }

    /// Inserts the canonicalized pair; returns false if already present.
    bool add_edge(int i, int j) {
        check_pair(i, j);
        return edges_.insert(pair_key(i, j)).second;
    }
    bool add_edge_key(PairKey k) { return edges_.insert(k).second; }

    bool remove_edge(int i, int j) {
        check_pair(i, j);
        return edges_.erase(pair_key(i, j)) != 0;
    }

    const std::unordered_set<PairKey>& edge_keys() const { return edges_; }

    std::vector<PairKey> sorted_edge_keys() const {
        std::vector<PairKey> keys(edges_.begin(), edges_.end());
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_pair(int i, int j) const {
        if (i == j)
            throw validation_error("Graph: self-loops are not allowed");
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw validation_error("Graph: node index out of range");
    }

    int n_ = 0;
    std::unordered_set<PairKey> edges_;
};

/// |edges(a) ∩ edges(b)|, probing the smaller set against the other.
inline std::int64_t edge_intersection_count(const Graph& a, const Graph& b) {
    const Graph& small = a.edge_count() <= b.edge_count() ? a : b;
    const Graph& large = a.edge_count() <= b.edge_count() ? b : a;
    std::int64_t count = 0;
    for (const PairKey k : small.edge_keys())
        count += large.has_edge_key(k) ? 1 : 0;
    return count;
}

/// An ordered set of N graphs measured on a shared node set.
struct Population {
    int n = 0;
    std::vector<Graph> graphs;

    Population() = default;
    Population(int n_nodes, std::vector<Graph> g) : n(n_nodes), graphs(std::move(g)) {
        for (const Graph& gr : graphs)
            if (gr.node_count() != n)
                throw validation_error("Population: all graphs must share the node count");
    }

    int size() const { return static_cast<int>(graphs.size()); }
};

} // namespace netmix
