#include "grw/condition.hpp"

#include <algorithm>

#include "grw/cat_ops.hpp"

namespace grw {

const char* cond_op_name(CondOp op) {
    switch (op) {
        case CondOp::True: return "true";
        case CondOp::False: return "false";
        case CondOp::Exists: return "exists";
        case CondOp::Not: return "not";
        case CondOp::And: return "and";
        case CondOp::Or: return "or";
    }
    return "?";
}

ConditionPtr Condition::truth(Graph root) {
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = std::move(root);
    c->op_ = CondOp::True;
    return c;
}

ConditionPtr Condition::falsity(Graph root) {
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = std::move(root);
    c->op_ = CondOp::False;
    return c;
}

ConditionPtr Condition::exists(Morphism a, ConditionPtr sub) {
    if (!a.is_mono()) fail(Errc::InvariantViolation, "exists requires a mono");
    if (!sub || sub->root() != a.cod())
        fail(Errc::RootMismatch, "exists child root must be the morphism target");
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = a.dom();
    c->op_ = CondOp::Exists;
    c->mor_ = std::move(a);
    c->kids_.push_back(std::move(sub));
    return c;
}

ConditionPtr Condition::exists(Morphism a) {
    ConditionPtr t = truth(a.cod());
    return exists(std::move(a), std::move(t));
}

ConditionPtr Condition::negation(ConditionPtr k) {
    if (!k) fail(Errc::InvariantViolation, "negation of nothing");
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = k->root();
    c->op_ = CondOp::Not;
    c->kids_.push_back(std::move(k));
    return c;
}

ConditionPtr Condition::conjunction(Graph root, std::vector<ConditionPtr> kids) {
    for (const auto& k : kids)
        if (!k || k->root() != root) fail(Errc::RootMismatch, "conjunction child root differs");
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = std::move(root);
    c->op_ = CondOp::And;
    c->kids_ = std::move(kids);
    return c;
}

ConditionPtr Condition::disjunction(Graph root, std::vector<ConditionPtr> kids) {
    for (const auto& k : kids)
        if (!k || k->root() != root) fail(Errc::RootMismatch, "disjunction child root differs");
    auto c = std::shared_ptr<Condition>(new Condition());
    c->root_ = std::move(root);
    c->op_ = CondOp::Or;
    c->kids_ = std::move(kids);
    return c;
}

std::size_t Condition::node_count() const {
    std::size_t n = 1;
    for (const auto& k : kids_) n += k->node_count();
    return n;
}

bool satisfies(const Morphism& p, const ConditionPtr& c) {
    if (!c) fail(Errc::InvariantViolation, "null condition");
    if (p.dom() != c->root()) fail(Errc::RootMismatch, "morphism domain is not the root");
    if (!p.is_mono()) fail(Errc::InvariantViolation, "satisfaction is defined on monos");

    switch (c->op()) {
        case CondOp::True: return true;
        case CondOp::False: return false;
        case CondOp::Not: return !satisfies(p, c->children()[0]);
        case CondOp::And:
            for (const auto& k : c->children())
                if (!satisfies(p, k)) return false;
            return true;
        case CondOp::Or:
            for (const auto& k : c->children())
                if (satisfies(p, k)) return true;
            return false;
        case CondOp::Exists: {
            const Morphism& a = c->morphism();
            // factorizations q with q∘a = p, searched as mono extensions of
            // the forced assignment on the image of a
            PartialMap pin;
            for (Id v : a.dom().vertices()) pin.v.emplace_back(a.v(v), p.v(v));
            for (const Edge& e : a.dom().edges()) pin.e.emplace_back(a.e(e.id), p.e(e.id));
            for (const Morphism& q : enumerate_monos_extending(a.cod(), p.cod(), pin))
                if (satisfies(q, c->children()[0])) return true;
            return false;
        }
    }
    return false;
}

bool satisfies(const Graph& X, const ConditionPtr& c) {
    if (!c) fail(Errc::InvariantViolation, "null condition");
    if (!c->root().is_empty())
        fail(Errc::NonInitialObjectCondition, "object satisfaction needs an empty root");
    Morphism initial = Morphism::make(c->root(), X, {}, {});
    return satisfies(initial, c);
}

int structural_compare(const ConditionPtr& a, const ConditionPtr& b) {
    if (a->op() != b->op()) return a->op() < b->op() ? -1 : 1;
    if (a->op() == CondOp::Exists) {
        const Graph& ca = a->morphism().cod();
        const Graph& cb = b->morphism().cod();
        if (ca.vertex_count() != cb.vertex_count())
            return ca.vertex_count() < cb.vertex_count() ? -1 : 1;
        if (ca.edge_count() != cb.edge_count()) return ca.edge_count() < cb.edge_count() ? -1 : 1;
        auto ea = a->morphism().encode();
        auto eb = b->morphism().encode();
        if (ea != eb) return ea < eb ? -1 : 1;
        if (ca.vertices() != cb.vertices()) return ca.vertices() < cb.vertices() ? -1 : 1;
        auto edge_key = [](const Graph& g) {
            std::vector<std::uint64_t> k;
            for (const Edge& e : g.edges())
                k.push_back((std::uint64_t{e.id} << 42) | (std::uint64_t{e.a} << 21) | e.b);
            return k;
        };
        auto ka = edge_key(ca);
        auto kb = edge_key(cb);
        if (ka != kb) return ka < kb ? -1 : 1;
    }
    if (a->children().size() != b->children().size())
        return a->children().size() < b->children().size() ? -1 : 1;
    for (std::size_t i = 0; i < a->children().size(); ++i) {
        int c = structural_compare(a->children()[i], b->children()[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool structurally_equal(const ConditionPtr& a, const ConditionPtr& b) {
    if (a->root() != b->root()) return false;
    return structural_compare(a, b) == 0;
}

bool is_false(const ConditionPtr& c) { return c->op() == CondOp::False; }
bool is_true(const ConditionPtr& c) { return c->op() == CondOp::True; }

ConditionPtr simplify(const ConditionPtr& c) {
    switch (c->op()) {
        case CondOp::True:
        case CondOp::False: return c;
        case CondOp::Exists: {
            ConditionPtr sub = simplify(c->children()[0]);
            if (is_false(sub)) return Condition::falsity(c->root());
            // an iso admits exactly one factorization, so the quantifier is
            // trivial and the subtree transports to the root
            if (c->morphism().is_iso()) return simplify(precompose(sub, c->morphism()));
            if (sub == c->children()[0]) return c;
            return Condition::exists(c->morphism(), sub);
        }
        case CondOp::Not: {
            ConditionPtr sub = simplify(c->children()[0]);
            if (is_true(sub)) return Condition::falsity(c->root());
            if (is_false(sub)) return Condition::truth(c->root());
            if (sub->op() == CondOp::Not) return sub->children()[0];
            return Condition::negation(sub);
        }
        case CondOp::And: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) {
                ConditionPtr s = simplify(k);
                if (is_false(s)) return Condition::falsity(c->root());
                if (is_true(s)) continue;
                if (s->op() == CondOp::And) {
                    for (const auto& g : s->children()) kids.push_back(g);
                } else {
                    kids.push_back(s);
                }
            }
            if (kids.empty()) return Condition::truth(c->root());
            if (kids.size() == 1) return kids[0];
            std::sort(kids.begin(), kids.end(), [](const ConditionPtr& x, const ConditionPtr& y) {
                return structural_compare(x, y) < 0;
            });
            return Condition::conjunction(c->root(), std::move(kids));
        }
        case CondOp::Or: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) {
                ConditionPtr s = simplify(k);
                if (is_true(s)) return Condition::truth(c->root());
                if (is_false(s)) continue;
                if (s->op() == CondOp::Or) {
                    for (const auto& g : s->children()) kids.push_back(g);
                } else {
                    kids.push_back(s);
                }
            }
            if (kids.empty()) return Condition::falsity(c->root());
            if (kids.size() == 1) return kids[0];
            std::sort(kids.begin(), kids.end(), [](const ConditionPtr& x, const ConditionPtr& y) {
                return structural_compare(x, y) < 0;
            });
            return Condition::disjunction(c->root(), std::move(kids));
        }
    }
    return c;
}

std::vector<OverlapSpan> enumerate_overlap_spans(const Morphism& p, const Morphism& a) {
    if (p.dom() != a.dom()) fail(Errc::DomainMismatch, "overlap spans need a common domain");
    if (!p.is_mono() || !a.is_mono())
        fail(Errc::InvariantViolation, "overlap spans are between monos");

    const Graph& Q = p.cod();
    const Graph& A = a.cod();

    // representatives with the Q-leg a literal subgraph inclusion: subgraphs
    // of Q containing image(p) paired with each mono into A agreeing with a on
    // that image; distinct pairs are distinct span classes
    std::vector<Id> base_v;
    std::vector<Id> base_e;
    for (const auto& [k, v] : p.vmap()) base_v.push_back(v);
    for (const auto& [k, v] : p.emap()) base_e.push_back(v);

    std::vector<OverlapSpan> out;
    for (const SubgraphParts& part : subgraphs_containing(Q, base_v, base_e)) {
        Graph X = Q.subgraph(part.vertices, part.edges);
        Morphism x = corestrict(p, X);
        Morphism into_left = Morphism::inclusion(X, Q);
        PartialMap pin;
        for (Id v : p.dom().vertices()) pin.v.emplace_back(p.v(v), a.v(v));
        for (const Edge& e : p.dom().edges()) pin.e.emplace_back(p.e(e.id), a.e(e.id));
        for (Morphism& h : enumerate_monos_extending(X, A, pin))
            out.push_back(OverlapSpan{x, into_left, std::move(h)});
    }
    return out;
}

ConditionPtr shift(const Morphism& p, const ConditionPtr& c) {
    if (!c) fail(Errc::InvariantViolation, "null condition");
    if (p.dom() != c->root()) fail(Errc::RootMismatch, "shift morphism domain is not the root");
    if (!p.is_mono()) fail(Errc::InvariantViolation, "shift is along monos");

    switch (c->op()) {
        case CondOp::True: return Condition::truth(p.cod());
        case CondOp::False: return Condition::falsity(p.cod());
        case CondOp::Not: return Condition::negation(shift(p, c->children()[0]));
        case CondOp::And: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) kids.push_back(shift(p, k));
            return Condition::conjunction(p.cod(), std::move(kids));
        }
        case CondOp::Or: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) kids.push_back(shift(p, k));
            return Condition::disjunction(p.cod(), std::move(kids));
        }
        case CondOp::Exists: {
            const Morphism& a = c->morphism();
            std::vector<ConditionPtr> disjuncts;
            for (const OverlapSpan& os : enumerate_overlap_spans(p, a)) {
                PushoutResult po = pushout(Span::make(os.into_left, os.into_right));
                // po.from_left: Q -> E, po.from_right: A -> E, both mono
                disjuncts.push_back(
                    Condition::exists(po.from_left, shift(po.from_right, c->children()[0])));
            }
            return Condition::disjunction(p.cod(), std::move(disjuncts));
        }
    }
    fail(Errc::InvariantViolation, "unreachable");
}

ConditionPtr precompose(const ConditionPtr& c, const Morphism& phi) {
    if (!c) fail(Errc::InvariantViolation, "null condition");
    if (phi.cod() != c->root()) fail(Errc::RootMismatch, "transport iso does not hit the root");
    if (!phi.is_iso()) fail(Errc::InvariantViolation, "transport needs an isomorphism");

    switch (c->op()) {
        case CondOp::True: return Condition::truth(phi.dom());
        case CondOp::False: return Condition::falsity(phi.dom());
        case CondOp::Not: return Condition::negation(precompose(c->children()[0], phi));
        case CondOp::And: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) kids.push_back(precompose(k, phi));
            return Condition::conjunction(phi.dom(), std::move(kids));
        }
        case CondOp::Or: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c->children()) kids.push_back(precompose(k, phi));
            return Condition::disjunction(phi.dom(), std::move(kids));
        }
        case CondOp::Exists:
            return Condition::exists(compose(phi, c->morphism()), c->children()[0]);
    }
    fail(Errc::InvariantViolation, "unreachable");
}

} // namespace grw
