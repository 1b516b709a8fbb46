#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace shiftdec {

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
class BitGraph {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    explicit BitGraph(std::size_t n) : adj_(n, Bits(n)) {}

    std::size_t size() const noexcept { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    const Bits & neighbours(std::size_t v) const { return adj_[v]; }

private:
    std::vector<Bits> adj_;
};

using CliqueVisitor = std::function<void(const std::vector<std::size_t> &)>;

/// Bron-Kerbosch with Tomita pivoting. Calls visit once per maximal clique
/// (vertex lists ascending) and returns the number of recursion nodes.
std::uint64_t enumerate_maximal_cliques(const BitGraph & graph, const CliqueVisitor & visit);

struct MaxClique {
    std::vector<std::size_t> vertices;  ///< ascending
    std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound with a greedy colouring bound.
MaxClique maximum_clique(const BitGraph & graph);

} // namespace shiftdec
