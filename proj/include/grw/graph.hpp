#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grw/errors.hpp"

namespace grw {

// Identifiers are opaque totally-ordered tokens.
using Id = std::uint32_t;

enum class Flavor : std::uint8_t { Directed, Undirected };

// Endpoints are ordered (src, tgt) for Directed and stored as a sorted pair
// for Undirected; self-loops are allowed in both flavors.
struct Edge {
    Id id;
    Id a;
    Id b;
};

class Graph {
public:
    // Validates all invariants: duplicate-free identifiers, endpoints present.
    static Graph make(Flavor flavor, std::vector<Id> vertices, std::vector<Edge> edges);
    static Graph empty(Flavor flavor);

    Flavor flavor() const { return flavor_; }
    const std::vector<Id>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool is_empty() const { return vertices_.empty(); }

    bool has_vertex(Id v) const;
    const Edge* find_edge(Id e) const;

    // Endpoint comparison respecting the flavor (unordered for Undirected).
    bool ends_equal(const Edge& e, Id a, Id b) const;

    // Subgraph induced by explicit vertex and edge id sets; the edge set must
    // be closed over the vertex set.
    Graph subgraph(const std::vector<Id>& vs, const std::vector<Id>& es) const;

    // Label-independent code; equal codes iff isomorphic.
    std::vector<std::uint64_t> canonical_code() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    Flavor flavor_ = Flavor::Directed;
    std::vector<Id> vertices_; // sorted
    std::vector<Edge> edges_;  // sorted by id
};

// All graphs with at most the given vertex and edge counts, one representative
// per isomorphism class, in a deterministic order. Cached per argument tuple.
const std::vector<Graph>& all_graphs_up_to(Flavor flavor, std::size_t max_vertices,
                                           std::size_t max_edges);

} // namespace grw
