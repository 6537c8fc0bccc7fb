#include "grw/cat_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "grw/match.hpp"

namespace grw {

const char* square_kind_name(SquareKind k) {
    switch (k) {
        case SquareKind::Pushout: return "pushout";
        case SquareKind::Pullback: return "pullback";
        case SquareKind::PushoutComplement: return "pushout-complement";
        case SquareKind::FinalPullbackComplement: return "final-pullback-complement";
    }
    return "?";
}

bool SquareWitness::commutes() const {
    return compose(top, right) == compose(left, bottom);
}

CoproductResult coproduct(const Graph& A, const Graph& B) {
    if (A.flavor() != B.flavor()) fail(Errc::FlavorMismatch, "coproduct across flavors");

    std::vector<Id> verts;
    std::vector<Edge> edges;
    std::vector<std::pair<Id, Id>> vmA, emA, vmB, emB;

    Id nv = 0;
    for (Id v : A.vertices()) vmA.emplace_back(v, nv++);
    for (Id v : B.vertices()) vmB.emplace_back(v, nv++);
    for (Id i = 0; i < nv; ++i) verts.push_back(i);

    auto mapped_v = [](const std::vector<std::pair<Id, Id>>& m, Id k) {
        for (const auto& [a, b] : m)
            if (a == k) return b;
        fail(Errc::NotTotal, "coproduct vertex lookup");
    };

    Id ne = 0;
    for (const Edge& e : A.edges()) {
        edges.push_back(Edge{ne, mapped_v(vmA, e.a), mapped_v(vmA, e.b)});
        emA.emplace_back(e.id, ne++);
    }
    for (const Edge& e : B.edges()) {
        edges.push_back(Edge{ne, mapped_v(vmB, e.a), mapped_v(vmB, e.b)});
        emB.emplace_back(e.id, ne++);
    }

    Graph obj = Graph::make(A.flavor(), std::move(verts), std::move(edges));
    Morphism ia = Morphism::make(A, obj, std::move(vmA), std::move(emA));
    Morphism ib = Morphism::make(B, obj, std::move(vmB), std::move(emB));
    return CoproductResult{std::move(obj), std::move(ia), std::move(ib)};
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

PushoutResult pushout(const Span& s) {
    const Morphism& f = s.left;  // P -> Q
    const Morphism& g = s.right; // P -> A
    if (!f.is_mono() && !g.is_mono()) fail(Errc::NoMonoLeg, "pushout needs a mono leg");

    const Graph& Q = f.cod();
    const Graph& A = g.cod();
    CoproductResult co = coproduct(Q, A);

    UnionFind vuf(co.object.vertex_count());
    UnionFind euf(co.object.edge_count());
    for (Id p : s.apex().vertices()) vuf.unite(co.inj_left.v(f.v(p)), co.inj_right.v(g.v(p)));
    for (const Edge& e : s.apex().edges())
        euf.unite(co.inj_left.e(f.e(e.id)), co.inj_right.e(g.e(e.id)));

    // classes keyed by their minimal member; fresh ids in that order
    std::map<std::size_t, Id> vclass, eclass;
    for (Id v : co.object.vertices()) {
        std::size_t r = vuf.find(v);
        if (!vclass.count(r)) vclass.emplace(r, static_cast<Id>(vclass.size()));
    }
    for (const Edge& e : co.object.edges()) {
        std::size_t r = euf.find(e.id);
        if (!eclass.count(r)) eclass.emplace(r, static_cast<Id>(eclass.size()));
    }

    std::vector<Id> verts;
    for (const auto& [r, id] : vclass) verts.push_back(id);
    std::vector<Edge> edges;
    std::set<Id> emitted;
    for (const Edge& e : co.object.edges()) {
        Id id = eclass.at(euf.find(e.id));
        if (!emitted.insert(id).second) continue;
        edges.push_back(Edge{id, vclass.at(vuf.find(e.a)), vclass.at(vuf.find(e.b))});
    }
    Graph obj = Graph::make(Q.flavor(), std::move(verts), std::move(edges));

    auto leg = [&](const Graph& src, const Morphism& inj) {
        std::vector<std::pair<Id, Id>> vm, em;
        for (Id v : src.vertices()) vm.emplace_back(v, vclass.at(vuf.find(inj.v(v))));
        for (const Edge& e : src.edges()) em.emplace_back(e.id, eclass.at(euf.find(inj.e(e.id))));
        return Morphism::make(src, obj, std::move(vm), std::move(em));
    };
    Morphism from_left = leg(Q, co.inj_left);
    Morphism from_right = leg(A, co.inj_right);

    SquareWitness sq{f, g, from_left, from_right, SquareKind::Pushout};
    return PushoutResult{std::move(obj), std::move(from_left), std::move(from_right),
                         std::move(sq)};
}

PullbackResult pullback(const Cospan& c) {
    const Morphism& f = c.left;  // B -> D
    const Morphism& g = c.right; // C -> D
    const Graph& B = f.dom();
    const Graph& C = g.dom();
    const bool undirected = B.flavor() == Flavor::Undirected;

    std::vector<std::pair<Id, Id>> vpairs;
    for (Id b : B.vertices())
        for (Id cc : C.vertices())
            if (f.v(b) == g.v(cc)) vpairs.emplace_back(b, cc);
    std::map<std::pair<Id, Id>, Id> vid;
    for (const auto& p : vpairs) vid.emplace(p, static_cast<Id>(vid.size()));

    struct ApexEdge {
        Id eb, ec;
        std::pair<Id, Id> enda, endb; // apex vertex pairs
    };
    std::vector<ApexEdge> apex_edges;
    for (const Edge& eb : B.edges()) {
        for (const Edge& ec : C.edges()) {
            if (f.e(eb.id) != g.e(ec.id)) continue;
            // endpoint pairings compatible with both projections
            auto valid = [&](Id x, Id u) { return vid.count({x, u}) != 0; };
            bool p1 = valid(eb.a, ec.a) && valid(eb.b, ec.b);
            bool p2 = valid(eb.a, ec.b) && valid(eb.b, ec.a);
            if (!undirected) {
                apex_edges.push_back({eb.id, ec.id, {eb.a, ec.a}, {eb.b, ec.b}});
                continue;
            }
            if (p1) apex_edges.push_back({eb.id, ec.id, {eb.a, ec.a}, {eb.b, ec.b}});
            bool degenerate = (ec.a == ec.b) || (eb.a == eb.b); // same pairing twice
            if (p2 && !degenerate)
                apex_edges.push_back({eb.id, ec.id, {eb.a, ec.b}, {eb.b, ec.a}});
        }
    }

    std::vector<Id> verts;
    for (const auto& [p, id] : vid) verts.push_back(id);
    std::sort(verts.begin(), verts.end());
    std::vector<Edge> edges;
    std::vector<std::pair<Id, Id>> vm_b, vm_c, em_b, em_c;
    for (const auto& [p, id] : vid) {
        vm_b.emplace_back(id, p.first);
        vm_c.emplace_back(id, p.second);
    }
    Id ne = 0;
    for (const ApexEdge& ae : apex_edges) {
        edges.push_back(Edge{ne, vid.at(ae.enda), vid.at(ae.endb)});
        em_b.emplace_back(ne, ae.eb);
        em_c.emplace_back(ne, ae.ec);
        ++ne;
    }

    Graph apex = Graph::make(B.flavor(), std::move(verts), std::move(edges));
    Morphism to_left = Morphism::make(apex, B, std::move(vm_b), std::move(em_b));
    Morphism to_right = Morphism::make(apex, C, std::move(vm_c), std::move(em_c));
    SquareWitness sq{to_left, to_right, f, g, SquareKind::Pullback};
    return PullbackResult{std::move(apex), std::move(to_left), std::move(to_right),
                          std::move(sq)};
}

namespace {

struct DeletedPart {
    std::set<Id> verts;
    std::set<Id> edges;
};

DeletedPart deleted_by(const Morphism& i, const Morphism& m) {
    if (!i.is_mono() || !m.is_mono()) fail(Errc::InvariantViolation, "complement needs monos");
    if (i.cod() != m.dom()) fail(Errc::DomainMismatch, "complement legs not composable");
    std::set<Id> kept_v, kept_e;
    for (const auto& [k, v] : i.vmap()) kept_v.insert(v);
    for (const auto& [k, v] : i.emap()) kept_e.insert(v);
    DeletedPart d;
    for (Id v : i.cod().vertices())
        if (!kept_v.count(v)) d.verts.insert(m.v(v));
    for (const Edge& e : i.cod().edges())
        if (!kept_e.count(e.id)) d.edges.insert(m.e(e.id));
    return d;
}

ComplementResult build_complement(const Morphism& i, const Morphism& m,
                                  const DeletedPart& d, SquareKind kind) {
    const Graph& X = m.cod();
    std::vector<Id> vs;
    std::vector<Id> es;
    for (Id v : X.vertices())
        if (!d.verts.count(v)) vs.push_back(v);
    for (const Edge& e : X.edges())
        if (!d.edges.count(e.id) && !d.verts.count(e.a) && !d.verts.count(e.b))
            es.push_back(e.id);
    Graph comp = X.subgraph(vs, es);

    std::vector<std::pair<Id, Id>> vm, em;
    for (Id v : i.dom().vertices()) vm.emplace_back(v, m.v(i.v(v)));
    for (const Edge& e : i.dom().edges()) em.emplace_back(e.id, m.e(i.e(e.id)));
    Morphism to_comp = Morphism::make(i.dom(), comp, std::move(vm), std::move(em));
    Morphism embed = Morphism::inclusion(comp, X);
    SquareWitness sq{i, to_comp, m, embed, kind};
    return ComplementResult{std::move(comp), std::move(to_comp), std::move(embed),
                            std::move(sq)};
}

} // namespace

std::optional<ComplementResult> pushout_complement(const Morphism& i, const Morphism& m) {
    DeletedPart d = deleted_by(i, m);
    // dangling condition: no surviving edge may touch a deleted vertex
    for (const Edge& e : m.cod().edges()) {
        if (d.edges.count(e.id)) continue;
        if (d.verts.count(e.a) || d.verts.count(e.b)) return std::nullopt;
    }
    return build_complement(i, m, d, SquareKind::PushoutComplement);
}

ComplementResult final_pullback_complement(const Morphism& i, const Morphism& m) {
    DeletedPart d = deleted_by(i, m);
    return build_complement(i, m, d, SquareKind::FinalPullbackComplement);
}

std::pair<Morphism, Morphism> epi_mono_factorize(const Morphism& f) {
    Graph im = image_subgraph(f);
    Morphism e = corestrict(f, im);
    Morphism m = Morphism::inclusion(im, f.cod());
    return {std::move(e), std::move(m)};
}

std::optional<Morphism> cocone_mediator(const SquareWitness& sq, const Morphism& u,
                                        const Morphism& v) {
    const Graph& D = sq.right.cod();
    const Graph& T = u.cod();
    if (u.dom() != sq.right.dom() || v.dom() != sq.bottom.dom() || v.cod() != T)
        fail(Errc::DomainMismatch, "cocone legs do not fit the square");

    std::map<Id, Id> vm, em;
    auto force = [](std::map<Id, Id>& mp, Id key, Id val) {
        auto it = mp.find(key);
        if (it != mp.end()) return it->second == val;
        mp.emplace(key, val);
        return true;
    };
    for (const auto& [q, d] : sq.right.vmap())
        if (!force(vm, d, u.v(q))) return std::nullopt;
    for (const auto& [a, d] : sq.bottom.vmap())
        if (!force(vm, d, v.v(a))) return std::nullopt;
    for (const auto& [q, d] : sq.right.emap())
        if (!force(em, d, u.e(q))) return std::nullopt;
    for (const auto& [a, d] : sq.bottom.emap())
        if (!force(em, d, v.e(a))) return std::nullopt;
    if (vm.size() != D.vertex_count() || em.size() != D.edge_count())
        return std::nullopt; // legs not jointly epic: no canonical mediator
    try {
        return Morphism::make(D, T, {vm.begin(), vm.end()}, {em.begin(), em.end()});
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<Morphism> cone_mediator(const SquareWitness& sq, const Morphism& u,
                                      const Morphism& v) {
    const Graph& A = sq.top.dom();
    const Graph& T = u.dom();
    if (u.cod() != sq.top.cod() || v.cod() != sq.left.cod() || v.dom() != T)
        fail(Errc::DomainMismatch, "cone legs do not fit the square");

    std::vector<std::pair<Id, Id>> vm, em;
    for (Id t : T.vertices()) {
        std::optional<Id> pick;
        for (Id a : A.vertices())
            if (sq.top.v(a) == u.v(t) && sq.left.v(a) == v.v(t)) {
                if (pick) return std::nullopt; // apex legs not jointly mono
                pick = a;
            }
        if (!pick) return std::nullopt;
        vm.emplace_back(t, *pick);
    }
    for (const Edge& te : T.edges()) {
        std::optional<Id> pick;
        for (const Edge& ae : A.edges())
            if (sq.top.e(ae.id) == u.e(te.id) && sq.left.e(ae.id) == v.e(te.id)) {
                if (pick) return std::nullopt;
                pick = ae.id;
            }
        if (!pick) return std::nullopt;
        em.emplace_back(te.id, *pick);
    }
    try {
        return Morphism::make(T, A, std::move(vm), std::move(em));
    } catch (const Error&) {
        return std::nullopt;
    }
}

namespace {

std::vector<Graph> probe_objects(const SquareWitness& sq, const ProbeConfig& cfg) {
    std::vector<Graph> probes = all_graphs_up_to(sq.top.dom().flavor(), cfg.max_vertices,
                                                 cfg.max_edges);
    for (const Graph* g : {&sq.top.dom(), &sq.top.cod(), &sq.left.cod(), &sq.right.cod()})
        if (g->vertex_count() + g->edge_count() <= cfg.max_object_probe_elements)
            probes.push_back(*g);
    if (probes.size() > cfg.max_probes)
        fail(Errc::ProbeSetTooLarge, "probe set exceeds configured cap");
    return probes;
}

// all v: T -> C with h∘v = t, enumerated with pointwise pruning
std::vector<Morphism> morphisms_over(const Graph& T, const Graph& C, const Morphism& h,
                                     const Morphism& t) {
    std::vector<Morphism> out;
    std::map<Id, Id> vm, em;
    std::function<void(std::size_t)> edges = [&](std::size_t idx) {
        if (idx == T.edges().size()) {
            out.push_back(Morphism::make(T, C, {vm.begin(), vm.end()}, {em.begin(), em.end()}));
            return;
        }
        const Edge& e = T.edges()[idx];
        Id ia = vm.at(e.a);
        Id ib = vm.at(e.b);
        for (const Edge& ce : C.edges()) {
            if (h.e(ce.id) != t.e(e.id)) continue;
            if (!C.ends_equal(ce, ia, ib)) continue;
            em[e.id] = ce.id;
            edges(idx + 1);
            em.erase(e.id);
        }
    };
    std::function<void(std::size_t)> verts = [&](std::size_t idx) {
        if (idx == T.vertices().size()) {
            edges(0);
            return;
        }
        Id tv = T.vertices()[idx];
        for (Id cv : C.vertices()) {
            if (h.v(cv) != t.v(tv)) continue;
            vm[tv] = cv;
            verts(idx + 1);
            vm.erase(tv);
        }
    };
    verts(0);
    return out;
}

// exactly-one check via constrained enumeration
bool unique_cocone_mediator(const SquareWitness& sq, const Morphism& u, const Morphism& v) {
    const Graph& D = sq.right.cod();
    const Graph& T = u.cod();
    PartialMap pin;
    std::map<Id, Id> vm, em;
    auto force = [](std::map<Id, Id>& mp, Id key, Id val) {
        auto it = mp.find(key);
        if (it != mp.end()) return it->second == val;
        mp.emplace(key, val);
        return true;
    };
    for (const auto& [q, d] : sq.right.vmap())
        if (!force(vm, d, u.v(q))) return false;
    for (const auto& [a, d] : sq.bottom.vmap())
        if (!force(vm, d, v.v(a))) return false;
    for (const auto& [q, d] : sq.right.emap())
        if (!force(em, d, u.e(q))) return false;
    for (const auto& [a, d] : sq.bottom.emap())
        if (!force(em, d, v.e(a))) return false;
    pin.v.assign(vm.begin(), vm.end());
    pin.e.assign(em.begin(), em.end());
    return enumerate_morphisms_extending(D, T, pin).size() == 1;
}

bool verify_pushout_square(const SquareWitness& sq, const std::vector<Graph>& probes) {
    const Morphism& f = sq.top;  // P -> Q
    const Morphism& g = sq.left; // P -> A
    const Graph& Q = f.cod();
    const Graph& A = g.cod();
    for (const Graph& T : probes) {
        for (const Morphism& u : enumerate_morphisms(Q, T)) {
            // cocones extend u ∘ f on the image of g
            PartialMap pin;
            std::map<Id, Id> vm, em;
            bool consistent = true;
            for (Id p : f.dom().vertices()) {
                auto it = vm.find(g.v(p));
                Id want = u.v(f.v(p));
                if (it != vm.end() && it->second != want) consistent = false;
                vm.emplace(g.v(p), want);
            }
            for (const Edge& e : f.dom().edges()) {
                auto it = em.find(g.e(e.id));
                Id want = u.e(f.e(e.id));
                if (it != em.end() && it->second != want) consistent = false;
                em.emplace(g.e(e.id), want);
            }
            if (!consistent) continue;
            pin.v.assign(vm.begin(), vm.end());
            pin.e.assign(em.begin(), em.end());
            for (const Morphism& v : enumerate_morphisms_extending(A, T, pin))
                if (!unique_cocone_mediator(sq, u, v)) return false;
        }
    }
    return true;
}

bool unique_cone_mediator(const SquareWitness& sq, const Morphism& u, const Morphism& v) {
    auto med = cone_mediator(sq, u, v);
    if (med) return true;
    // fall back to exhaustive search when the apex legs are not jointly mono
    const Graph& A = sq.top.dom();
    const Graph& T = u.dom();
    std::size_t count = 0;
    for (const Morphism& m : enumerate_morphisms(T, A)) {
        if (compose(m, sq.top) == u && compose(m, sq.left) == v) {
            if (++count > 1) return false;
        }
    }
    return count == 1;
}

bool verify_pullback_square(const SquareWitness& sq, const std::vector<Graph>& probes) {
    const Graph& B = sq.right.dom();
    const Graph& C = sq.bottom.dom();
    for (const Graph& T : probes) {
        for (const Morphism& u : enumerate_morphisms(T, B)) {
            Morphism ud = compose(u, sq.right);
            for (const Morphism& v : morphisms_over(T, C, sq.bottom, ud))
                if (!unique_cone_mediator(sq, u, v)) return false;
        }
    }
    return true;
}

bool verify_fpc_square(const SquareWitness& sq, const std::vector<Graph>& probes) {
    if (!verify_pullback_square(sq, probes)) return false;
    const Morphism& i = sq.top;    // K -> I
    const Morphism& k = sq.left;   // K -> comp
    const Morphism& m = sq.right;  // I -> X
    const Morphism& j = sq.bottom; // comp -> X
    const Graph& X = m.cod();
    for (const Graph& Qp : probes) {
        for (const Morphism& z : enumerate_morphisms(Qp, X)) {
            PullbackResult pb = pullback(Cospan::make(m, z));
            const Morphism& x = pb.to_left;  // P -> I
            const Morphism& y = pb.to_right; // P -> Qp
            std::vector<Morphism> candidates; // all w*: Qp -> comp over z
            bool candidates_ready = false;
            for (const Morphism& w : morphisms_over(pb.apex, i.dom(), i, x)) {
                if (!candidates_ready) {
                    candidates = morphisms_over(Qp, j.dom(), j, z);
                    candidates_ready = true;
                }
                // need exactly one w*: Qp -> comp with j∘w* = z, w*∘y = w
                std::size_t count = 0;
                Morphism lifted = compose(w, k);
                for (const Morphism& ws : candidates) {
                    if (compose(y, ws) == lifted) ++count;
                    if (count > 1) return false;
                }
                if (count != 1) return false;
            }
        }
    }
    return true;
}

} // namespace

bool verify_universal(const SquareWitness& sq, const ProbeConfig& cfg) {
    if (!sq.commutes()) return false;
    std::vector<Graph> probes = probe_objects(sq, cfg);
    switch (sq.kind) {
        case SquareKind::Pushout:
        case SquareKind::PushoutComplement:
            return verify_pushout_square(sq, probes);
        case SquareKind::Pullback:
            return verify_pullback_square(sq, probes);
        case SquareKind::FinalPullbackComplement:
            return verify_fpc_square(sq, probes);
    }
    return false;
}

} // namespace grw
