#include "grw/morphism.hpp"

#include <algorithm>
#include <set>

namespace grw {

namespace {

std::optional<Id> lookup(const std::vector<std::pair<Id, Id>>& map, Id key) {
    auto it = std::lower_bound(map.begin(), map.end(), key,
                               [](const std::pair<Id, Id>& p, Id k) { return p.first < k; });
    if (it == map.end() || it->first != key) return std::nullopt;
    return it->second;
}

bool injective(const std::vector<std::pair<Id, Id>>& map) {
    std::set<Id> seen;
    for (const auto& [k, v] : map)
        if (!seen.insert(v).second) return false;
    return true;
}

} // namespace

Morphism Morphism::make(Graph dom, Graph cod, std::vector<std::pair<Id, Id>> vmap,
                        std::vector<std::pair<Id, Id>> emap) {
    if (dom.flavor() != cod.flavor()) fail(Errc::FlavorMismatch, "morphism across flavors");
    std::sort(vmap.begin(), vmap.end());
    std::sort(emap.begin(), emap.end());
    for (std::size_t i = 1; i < vmap.size(); ++i)
        if (vmap[i - 1].first == vmap[i].first) fail(Errc::NotTotal, "vertex mapped twice");
    for (std::size_t i = 1; i < emap.size(); ++i)
        if (emap[i - 1].first == emap[i].first) fail(Errc::NotTotal, "edge mapped twice");

    if (vmap.size() != dom.vertex_count() || emap.size() != dom.edge_count())
        fail(Errc::NotTotal, "map not total on the domain");
    for (const auto& [k, v] : vmap) {
        if (!dom.has_vertex(k)) fail(Errc::NotTotal, "vertex map key not in domain");
        if (!cod.has_vertex(v)) fail(Errc::NotTotal, "vertex map value not in codomain");
    }
    for (const auto& [k, v] : emap) {
        const Edge* de = dom.find_edge(k);
        const Edge* ce = cod.find_edge(v);
        if (!de) fail(Errc::NotTotal, "edge map key not in domain");
        if (!ce) fail(Errc::NotTotal, "edge map value not in codomain");
        Id ia = *lookup(vmap, de->a);
        Id ib = *lookup(vmap, de->b);
        if (!cod.ends_equal(*ce, ia, ib))
            fail(Errc::IncidenceViolation,
                 "edge " + std::to_string(k) + " endpoints not preserved");
    }

    Morphism m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.vmap_ = std::move(vmap);
    m.emap_ = std::move(emap);
    m.mono_ = injective(m.vmap_) && injective(m.emap_);
    m.epi_ = [&] {
        std::set<Id> vs, es;
        for (const auto& [k, v] : m.vmap_) vs.insert(v);
        for (const auto& [k, v] : m.emap_) es.insert(v);
        return vs.size() == m.cod_.vertex_count() && es.size() == m.cod_.edge_count();
    }();
    return m;
}

Morphism Morphism::identity(const Graph& g) {
    std::vector<std::pair<Id, Id>> vm, em;
    for (Id v : g.vertices()) vm.emplace_back(v, v);
    for (const Edge& e : g.edges()) em.emplace_back(e.id, e.id);
    return make(g, g, std::move(vm), std::move(em));
}

Morphism Morphism::inclusion(const Graph& sub, const Graph& super) {
    std::vector<std::pair<Id, Id>> vm, em;
    for (Id v : sub.vertices()) vm.emplace_back(v, v);
    for (const Edge& e : sub.edges()) em.emplace_back(e.id, e.id);
    return make(sub, super, std::move(vm), std::move(em));
}

Id Morphism::v(Id x) const {
    auto r = lookup(vmap_, x);
    if (!r) fail(Errc::NotTotal, "vertex not in domain");
    return *r;
}

Id Morphism::e(Id x) const {
    auto r = lookup(emap_, x);
    if (!r) fail(Errc::NotTotal, "edge not in domain");
    return *r;
}

std::optional<Id> Morphism::v_preimage(Id y) const {
    for (const auto& [k, v] : vmap_)
        if (v == y) return k;
    return std::nullopt;
}

std::optional<Id> Morphism::e_preimage(Id y) const {
    for (const auto& [k, v] : emap_)
        if (v == y) return k;
    return std::nullopt;
}

std::vector<std::uint64_t> Morphism::encode() const {
    std::vector<std::uint64_t> out;
    out.reserve(vmap_.size() + emap_.size());
    for (const auto& [k, v] : vmap_) out.push_back((std::uint64_t{k} << 32) | v);
    for (const auto& [k, v] : emap_) out.push_back((std::uint64_t{k} << 32) | v);
    return out;
}

bool Morphism::operator==(const Morphism& other) const {
    return dom_ == other.dom_ && cod_ == other.cod_ && vmap_ == other.vmap_ &&
           emap_ == other.emap_;
}

MorphismClass classify(const Morphism& f) {
    return MorphismClass{f.is_mono(), f.is_epi(), f.is_iso()};
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (f.cod() != g.dom()) fail(Errc::DomainMismatch, "composition: cod(f) != dom(g)");
    std::vector<std::pair<Id, Id>> vm, em;
    for (const auto& [k, v] : f.vmap()) vm.emplace_back(k, g.v(v));
    for (const auto& [k, v] : f.emap()) em.emplace_back(k, g.e(v));
    return Morphism::make(f.dom(), g.cod(), std::move(vm), std::move(em));
}

Graph image_subgraph(const Morphism& f) {
    std::vector<Id> vs;
    std::vector<Id> es;
    for (const auto& [k, v] : f.vmap()) vs.push_back(v);
    for (const auto& [k, v] : f.emap()) es.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return f.cod().subgraph(vs, es);
}

Morphism corestrict(const Morphism& f, const Graph& sub) {
    return Morphism::make(f.dom(), sub, f.vmap(), f.emap());
}

std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& t) {
    if (f.cod() != t.cod()) fail(Errc::DomainMismatch, "factorization targets differ");
    if (!t.is_mono()) fail(Errc::InvariantViolation, "factorization through a non-mono");
    std::vector<std::pair<Id, Id>> vm, em;
    for (const auto& [x, y] : f.vmap()) {
        auto pre = t.v_preimage(y);
        if (!pre) return std::nullopt;
        vm.emplace_back(x, *pre);
    }
    for (const auto& [x, y] : f.emap()) {
        auto pre = t.e_preimage(y);
        if (!pre) return std::nullopt;
        em.emplace_back(x, *pre);
    }
    return Morphism::make(f.dom(), t.dom(), std::move(vm), std::move(em));
}

} // namespace grw
