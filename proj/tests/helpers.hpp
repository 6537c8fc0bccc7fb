#pragma once

#include <functional>
#include <initializer_list>
#include <tuple>

#include "grw/cat_ops.hpp"
#include "grw/match.hpp"

namespace grwtest {

using namespace grw;

inline Graph dg(std::initializer_list<Id> verts,
                std::initializer_list<std::tuple<Id, Id, Id>> edges = {}) {
    std::vector<Edge> es;
    for (const auto& [id, a, b] : edges) es.push_back(Edge{id, a, b});
    return Graph::make(Flavor::Directed, verts, es);
}

inline Graph ug(std::initializer_list<Id> verts,
                std::initializer_list<std::tuple<Id, Id, Id>> edges = {}) {
    std::vector<Edge> es;
    for (const auto& [id, a, b] : edges) es.push_back(Edge{id, a, b});
    return Graph::make(Flavor::Undirected, verts, es);
}

inline Morphism mor(const Graph& dom, const Graph& cod,
                    std::initializer_list<std::pair<Id, Id>> vmap,
                    std::initializer_list<std::pair<Id, Id>> emap = {}) {
    return Morphism::make(dom, cod, vmap, emap);
}

// exhaustive-map count of monos A -> B, independent of the backtracker
inline std::size_t brute_force_mono_count(const Graph& A, const Graph& B);

namespace detail {

inline void all_vertex_maps(const std::vector<Id>& from, const std::vector<Id>& to,
                            std::vector<std::vector<std::pair<Id, Id>>>& out) {
    out.clear();
    std::vector<std::pair<Id, Id>> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == from.size()) {
            out.push_back(current);
            return;
        }
        for (Id t : to) {
            current.emplace_back(from[i], t);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

} // namespace detail

inline std::size_t brute_force_mono_count(const Graph& A, const Graph& B) {
    std::vector<std::vector<std::pair<Id, Id>>> vmaps;
    detail::all_vertex_maps(A.vertices(), B.vertices(), vmaps);
    std::vector<Id> a_edges, b_edges;
    for (const Edge& e : A.edges()) a_edges.push_back(e.id);
    for (const Edge& e : B.edges()) b_edges.push_back(e.id);

    std::size_t count = 0;
    for (const auto& vm : vmaps) {
        std::vector<std::vector<std::pair<Id, Id>>> emaps;
        detail::all_vertex_maps(a_edges, b_edges, emaps);
        for (const auto& em : emaps) {
            try {
                Morphism m = Morphism::make(A, B, vm, em);
                if (m.is_mono()) ++count;
            } catch (const Error&) {
            }
        }
    }
    return count;
}

// brute-force pushout-complement search: subgraphs C of X whose pushout with
// the rule leg reproduces X; counts isomorphism classes
inline std::size_t brute_force_complement_count(const Morphism& i, const Morphism& m) {
    const Graph& X = m.cod();
    std::size_t classes = 0;
    std::vector<Graph> found;
    for (const SubgraphParts& part : subgraphs_containing(X, {}, {})) {
        Graph C = X.subgraph(part.vertices, part.edges);
        // candidate K -> C sending K through the match
        std::vector<std::pair<Id, Id>> vm, em;
        bool total = true;
        for (Id v : i.dom().vertices()) {
            Id img = m.v(i.v(v));
            if (!C.has_vertex(img)) {
                total = false;
                break;
            }
            vm.emplace_back(v, img);
        }
        if (total)
            for (const Edge& e : i.dom().edges()) {
                Id img = m.e(i.e(e.id));
                if (!C.find_edge(img)) {
                    total = false;
                    break;
                }
                em.emplace_back(e.id, img);
            }
        if (!total) continue;
        Morphism k = Morphism::make(i.dom(), C, vm, em);
        PushoutResult po = pushout(Span::make(k, i));
        // the pushout must rebuild X compatibly: the I-leg becomes the match
        // and the C-leg becomes the subgraph inclusion
        PartialMap pin;
        for (Id v : i.cod().vertices()) pin.v.emplace_back(po.from_right.v(v), m.v(v));
        for (const Edge& e : i.cod().edges()) pin.e.emplace_back(po.from_right.e(e.id), m.e(e.id));
        for (Id v : C.vertices()) pin.v.emplace_back(po.from_left.v(v), v);
        for (const Edge& e : C.edges()) pin.e.emplace_back(po.from_left.e(e.id), e.id);
        std::sort(pin.v.begin(), pin.v.end());
        pin.v.erase(std::unique(pin.v.begin(), pin.v.end()), pin.v.end());
        std::sort(pin.e.begin(), pin.e.end());
        pin.e.erase(std::unique(pin.e.begin(), pin.e.end()), pin.e.end());
        bool contradictory = false;
        for (std::size_t t = 1; t < pin.v.size(); ++t)
            if (pin.v[t - 1].first == pin.v[t].first) contradictory = true;
        for (std::size_t t = 1; t < pin.e.size(); ++t)
            if (pin.e[t - 1].first == pin.e[t].first) contradictory = true;
        if (contradictory || !find_iso_extending(po.object, X, pin)) continue;
        bool fresh = true;
        for (const Graph& g : found)
            if (are_isomorphic(g, C)) {
                fresh = false;
                break;
            }
        if (fresh) {
            found.push_back(C);
            ++classes;
        }
    }
    return classes;
}

} // namespace grwtest
