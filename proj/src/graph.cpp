#include "grw/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace grw {

Graph Graph::make(Flavor flavor, std::vector<Id> vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        fail(Errc::DuplicateId, "duplicate vertex identifier");

    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].id == edges[i].id) fail(Errc::DuplicateId, "duplicate edge identifier");

    Graph g;
    g.flavor_ = flavor;
    g.vertices_ = std::move(vertices);
    for (Edge e : edges) {
        if (flavor == Flavor::Undirected && e.b < e.a) std::swap(e.a, e.b);
        if (!std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.a) ||
            !std::binary_search(g.vertices_.begin(), g.vertices_.end(), e.b))
            fail(Errc::DanglingEndpoint, "edge " + std::to_string(e.id) + " references a missing vertex");
        g.edges_.push_back(e);
    }
    return g;
}

Graph Graph::empty(Flavor flavor) { return make(flavor, {}, {}); }

bool Graph::has_vertex(Id v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

const Edge* Graph::find_edge(Id e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [](const Edge& x, Id id) { return x.id < id; });
    if (it == edges_.end() || it->id != e) return nullptr;
    return &*it;
}

bool Graph::ends_equal(const Edge& e, Id a, Id b) const {
    if (flavor_ == Flavor::Undirected && b < a) std::swap(a, b);
    return e.a == a && e.b == b;
}

Graph Graph::subgraph(const std::vector<Id>& vs, const std::vector<Id>& es) const {
    std::vector<Id> verts;
    for (Id v : vs) {
        if (!has_vertex(v)) fail(Errc::DanglingEndpoint, "subgraph vertex not in graph");
        verts.push_back(v);
    }
    std::vector<Edge> edges;
    for (Id e : es) {
        const Edge* ed = find_edge(e);
        if (!ed) fail(Errc::DanglingEndpoint, "subgraph edge not in graph");
        edges.push_back(*ed);
    }
    return make(flavor_, std::move(verts), std::move(edges)); // re-validates closure
}

bool Graph::operator==(const Graph& other) const {
    if (flavor_ != other.flavor_ || vertices_ != other.vertices_ ||
        edges_.size() != other.edges_.size())
        return false;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id != other.edges_[i].id || edges_[i].a != other.edges_[i].a ||
            edges_[i].b != other.edges_[i].b)
            return false;
    }
    return true;
}

namespace {

// Edge multiset under a relabeling of vertices to 0..n-1.
std::vector<std::uint64_t> relabeled_code(const Graph& g, const std::vector<std::size_t>& pos) {
    // pos[i] = new label of vertices()[i]
    std::vector<std::uint64_t> enc;
    enc.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        auto ia = std::lower_bound(g.vertices().begin(), g.vertices().end(), e.a) -
                  g.vertices().begin();
        auto ib = std::lower_bound(g.vertices().begin(), g.vertices().end(), e.b) -
                  g.vertices().begin();
        std::uint64_t x = pos[static_cast<std::size_t>(ia)];
        std::uint64_t y = pos[static_cast<std::size_t>(ib)];
        if (g.flavor() == Flavor::Undirected && y < x) std::swap(x, y);
        enc.push_back((x << 32) | y);
    }
    std::sort(enc.begin(), enc.end());
    return enc;
}

} // namespace

std::vector<std::uint64_t> Graph::canonical_code() const {
    const std::size_t n = vertices_.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    std::optional<std::vector<std::uint64_t>> best;
    // perm[i]: which original position receives label i; graphs are small
    // enough that plain permutation search suffices.
    std::vector<std::size_t> pos(n);
    do {
        for (std::size_t i = 0; i < n; ++i) pos[perm[i]] = i;
        auto enc = relabeled_code(*this, pos);
        if (!best || enc < *best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> code;
    code.push_back(flavor_ == Flavor::Directed ? 0u : 1u);
    code.push_back(n);
    code.push_back(edges_.size());
    if (best) code.insert(code.end(), best->begin(), best->end());
    return code;
}

namespace {

void endpoint_universe(Flavor flavor, std::size_t n, std::vector<std::pair<Id, Id>>& out) {
    out.clear();
    for (Id a = 0; a < n; ++a)
        for (Id b = 0; b < n; ++b) {
            if (flavor == Flavor::Undirected && b < a) continue;
            out.emplace_back(a, b);
        }
}

void enumerate_multisets(std::size_t universe, std::size_t max_size, std::size_t start,
                         std::vector<std::size_t>& current,
                         const std::function<void(const std::vector<std::size_t>&)>& sink) {
    sink(current);
    if (current.size() == max_size) return;
    for (std::size_t i = start; i < universe; ++i) {
        current.push_back(i);
        enumerate_multisets(universe, max_size, i, current, sink);
        current.pop_back();
    }
}

} // namespace

const std::vector<Graph>& all_graphs_up_to(Flavor flavor, std::size_t max_vertices,
                                           std::size_t max_edges) {
    using Key = std::tuple<int, std::size_t, std::size_t>;
    static std::map<Key, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    Key key{flavor == Flavor::Directed ? 0 : 1, max_vertices, max_edges};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::map<std::vector<std::uint64_t>, Graph> found;
    std::vector<std::pair<Id, Id>> universe;
    for (std::size_t n = 0; n <= max_vertices; ++n) {
        endpoint_universe(flavor, n, universe);
        std::vector<Id> verts(n);
        std::iota(verts.begin(), verts.end(), Id{0});
        std::vector<std::size_t> pick;
        enumerate_multisets(universe.size(), max_edges, 0, pick,
                            [&](const std::vector<std::size_t>& sel) {
                                std::vector<Edge> edges;
                                for (std::size_t k = 0; k < sel.size(); ++k)
                                    edges.push_back(
                                        Edge{static_cast<Id>(k), universe[sel[k]].first,
                                             universe[sel[k]].second});
                                Graph g = Graph::make(flavor, verts, std::move(edges));
                                auto code = g.canonical_code();
                                found.emplace(std::move(code), std::move(g));
                            });
    }
    std::vector<Graph> result;
    result.reserve(found.size());
    for (auto& f : found) result.push_back(std::move(f.second));
    return cache.emplace(key, std::move(result)).first->second;
}

} // namespace grw
