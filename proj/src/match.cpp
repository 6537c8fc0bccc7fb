#include "grw/match.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grw {

namespace {

struct Search {
    const Graph& A;
    const Graph& B;
    bool injective = false;
    bool require_bijective = false;
    bool first_only = false;

    std::map<Id, Id> vassign;
    std::map<Id, Id> eassign; // pinned edges seeded here
    std::set<Id> used_v;
    std::set<Id> used_e;
    std::vector<Morphism> out;

    bool done() const { return first_only && !out.empty(); }

    bool vertex_ok(Id va, Id vb) const {
        // every A-edge between va and an already-assigned vertex needs a
        // candidate edge in B between the images
        for (const Edge& e : A.edges()) {
            Id other;
            bool va_is_a;
            if (e.a == va) {
                other = e.b;
                va_is_a = true;
            } else if (e.b == va) {
                other = e.a;
                va_is_a = false;
            } else {
                continue;
            }
            Id img_other;
            if (other == va) {
                img_other = vb;
            } else {
                auto it = vassign.find(other);
                if (it == vassign.end()) continue;
                img_other = it->second;
            }
            Id ia = va_is_a ? vb : img_other;
            Id ib = va_is_a ? img_other : vb;
            bool any = false;
            for (const Edge& be : B.edges())
                if (B.ends_equal(be, ia, ib)) {
                    any = true;
                    break;
                }
            if (!any) return false;
        }
        return true;
    }

    void assign_edges(std::size_t idx) {
        if (done()) return;
        if (idx == A.edges().size()) {
            std::vector<std::pair<Id, Id>> vm(vassign.begin(), vassign.end());
            std::vector<std::pair<Id, Id>> em(eassign.begin(), eassign.end());
            out.push_back(Morphism::make(A, B, std::move(vm), std::move(em)));
            return;
        }
        const Edge& e = A.edges()[idx];
        Id ia = vassign.at(e.a);
        Id ib = vassign.at(e.b);
        auto pinned = eassign.find(e.id);
        if (pinned != eassign.end()) {
            const Edge* be = B.find_edge(pinned->second);
            if (be && B.ends_equal(*be, ia, ib)) assign_edges(idx + 1);
            return;
        }
        for (const Edge& be : B.edges()) {
            if (!B.ends_equal(be, ia, ib)) continue;
            if (injective && used_e.count(be.id)) continue;
            eassign[e.id] = be.id;
            if (injective) used_e.insert(be.id);
            assign_edges(idx + 1);
            if (injective) used_e.erase(be.id);
            eassign.erase(e.id);
            if (done()) return;
        }
    }

    void assign_vertices(std::size_t idx) {
        if (done()) return;
        if (idx == A.vertices().size()) {
            assign_edges(0);
            return;
        }
        Id va = A.vertices()[idx];
        if (vassign.count(va)) { // pinned
            assign_vertices(idx + 1);
            return;
        }
        for (Id vb : B.vertices()) {
            if (injective && used_v.count(vb)) continue;
            if (!vertex_ok(va, vb)) continue;
            vassign[va] = vb;
            if (injective) used_v.insert(vb);
            assign_vertices(idx + 1);
            if (injective) used_v.erase(vb);
            vassign.erase(va);
            if (done()) return;
        }
    }

    // returns false when the pins are already contradictory
    bool seed(const PartialMap& pin) {
        for (const auto& [k, v] : pin.v) {
            if (!A.has_vertex(k) || !B.has_vertex(v))
                fail(Errc::NotTotal, "vertex pin outside graphs");
            auto it = vassign.find(k);
            if (it != vassign.end()) {
                if (it->second != v) return false;
                continue;
            }
            if (injective && used_v.count(v)) return false;
            vassign[k] = v;
            if (injective) used_v.insert(v);
        }
        for (const auto& [k, v] : pin.e) {
            if (!A.find_edge(k) || !B.find_edge(v))
                fail(Errc::NotTotal, "edge pin outside graphs");
            auto it = eassign.find(k);
            if (it != eassign.end()) {
                if (it->second != v) return false;
                continue;
            }
            if (injective && used_e.count(v)) return false;
            eassign[k] = v;
            if (injective) used_e.insert(v);
        }
        return true;
    }

    std::vector<Morphism> run(const PartialMap& pin) {
        if (A.flavor() != B.flavor()) fail(Errc::FlavorMismatch, "match across flavors");
        if (require_bijective &&
            (A.vertex_count() != B.vertex_count() || A.edge_count() != B.edge_count()))
            return {};
        if (injective &&
            (A.vertex_count() > B.vertex_count() || A.edge_count() > B.edge_count()))
            return {};
        if (!seed(pin)) return {};
        assign_vertices(0);
        return std::move(out);
    }
};

std::vector<Morphism> run_search(const Graph& A, const Graph& B, bool injective, bool bij,
                                 bool first_only, const PartialMap& pin) {
    Search s{A, B, injective, bij, first_only};
    return s.run(pin);
}

} // namespace

std::vector<Morphism> enumerate_monos(const Graph& A, const Graph& B) {
    return run_search(A, B, true, false, false, {});
}

std::vector<Morphism> enumerate_monos_extending(const Graph& A, const Graph& B,
                                                const PartialMap& pin) {
    return run_search(A, B, true, false, false, pin);
}

std::vector<Morphism> enumerate_morphisms(const Graph& A, const Graph& B) {
    return run_search(A, B, false, false, false, {});
}

std::vector<Morphism> enumerate_morphisms_extending(const Graph& A, const Graph& B,
                                                    const PartialMap& pin) {
    return run_search(A, B, false, false, false, pin);
}

bool exists_mono_extending(const Graph& A, const Graph& B, const PartialMap& pin) {
    return !run_search(A, B, true, false, true, pin).empty();
}

std::optional<Morphism> are_isomorphic(const Graph& A, const Graph& B) {
    auto r = run_search(A, B, true, true, true, {});
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::optional<Morphism> find_iso_extending(const Graph& A, const Graph& B,
                                           const PartialMap& pin) {
    auto r = run_search(A, B, true, true, true, pin);
    if (r.empty()) return std::nullopt;
    return r.front();
}

std::vector<SubgraphParts> subgraphs_containing(const Graph& G, const std::vector<Id>& base_vs,
                                                const std::vector<Id>& base_es) {
    std::set<Id> base_v(base_vs.begin(), base_vs.end());
    std::set<Id> base_e(base_es.begin(), base_es.end());
    for (Id e : base_es) {
        const Edge* ed = G.find_edge(e);
        if (!ed) fail(Errc::DanglingEndpoint, "base edge not in graph");
        base_v.insert(ed->a);
        base_v.insert(ed->b);
    }
    std::vector<Id> free_v;
    for (Id v : G.vertices())
        if (!base_v.count(v)) free_v.push_back(v);

    std::vector<SubgraphParts> out;
    const std::size_t nv = free_v.size();
    for (std::uint64_t vmask = 0; vmask < (std::uint64_t{1} << nv); ++vmask) {
        std::set<Id> verts(base_v.begin(), base_v.end());
        for (std::size_t i = 0; i < nv; ++i)
            if (vmask & (std::uint64_t{1} << i)) verts.insert(free_v[i]);
        std::vector<Id> free_e;
        for (const Edge& e : G.edges())
            if (!base_e.count(e.id) && verts.count(e.a) && verts.count(e.b))
                free_e.push_back(e.id);
        const std::size_t ne = free_e.size();
        for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << ne); ++emask) {
            SubgraphParts part;
            part.vertices.assign(verts.begin(), verts.end());
            part.edges.assign(base_e.begin(), base_e.end());
            for (std::size_t i = 0; i < ne; ++i)
                if (emask & (std::uint64_t{1} << i)) part.edges.push_back(free_e[i]);
            std::sort(part.edges.begin(), part.edges.end());
            out.push_back(std::move(part));
        }
    }
    return out;
}

} // namespace grw
