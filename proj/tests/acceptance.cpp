// End-to-end acceptance runs: worked examples exactly, algebraic laws at
// full instance counts. Prints one line per criterion; exit code is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "grw/io.hpp"
#include "grw/laws.hpp"

using namespace grw;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void absorb(const LawReport& rep) {
        require(rep.passed(), rep.law + " had " + std::to_string(rep.failures.size()) +
                                  " failures in " + std::to_string(rep.instances) +
                                  " instances");
    }
};

Graph ug_graph(std::initializer_list<Id> verts,
               std::initializer_list<Edge> edges = {}) {
    return Graph::make(Flavor::Undirected, verts, edges);
}

RuleWC guarded_edge_add() {
    Graph K = ug_graph({1, 2});
    Graph O = ug_graph({1, 2}, {Edge{0, 1, 2}});
    Graph Iedge = ug_graph({1, 2}, {Edge{9, 1, 2}});
    Rule add = Rule::make(Morphism::inclusion(K, O), Morphism::identity(K));
    return RuleWC::make(add, Condition::negation(
                                 Condition::exists(Morphism::inclusion(K, Iedge))));
}

RuleWC edge_delete() {
    Graph K = ug_graph({1, 2});
    Graph I = ug_graph({1, 2}, {Edge{0, 1, 2}});
    return RuleWC::plain(Rule::make(Morphism::identity(K), Morphism::inclusion(K, I)));
}

RuleWC vertex_delete() {
    Graph empty = Graph::empty(Flavor::Undirected);
    return RuleWC::plain(Rule::make(Morphism::identity(empty),
                                    Morphism::make(empty, ug_graph({1}), {}, {})));
}

// 1. composing guarded edge creation with edge deletion over the full edge
// gives the identity span on two vertices guarded by the no-edge condition
Outcome criterion_1() {
    Outcome out;
    RuleWC add = guarded_edge_add();
    RuleWC del = edge_delete();
    Graph M = ug_graph({1, 2}, {Edge{0, 1, 2}});
    Span full =
        Span::make(Morphism::make(M, del.rule.input, {{1, 1}, {2, 2}}, {{0, 0}}),
                   Morphism::make(M, add.rule.output, {{1, 1}, {2, 2}}, {{0, 0}}));
    auto comp = compose(del, full, add, Semantics::DPO);
    out.require(comp.has_value(), "composite over the full edge missing");
    if (!comp) return out;

    Graph two = ug_graph({1, 2});
    out.require(rules_isomorphic(comp->composite_rule(), Rule::identity(two)),
                "composite span is not the identity on two vertices");

    Graph Iedge = ug_graph({1, 2}, {Edge{9, 1, 2}});
    bool cond_ok = false;
    for (const RuleIso& iso : find_rule_isos(comp->composite_rule(), Rule::identity(two))) {
        ConditionPtr guard = precompose(
            Condition::negation(Condition::exists(Morphism::inclusion(two, Iedge))),
            iso.on_input);
        if (check_equivalence(comp->cond, guard, CorpusSpec{4, 4, {}},
                              EquivalenceMode::dot(comp->composite_rule(), Semantics::DPO))) {
            cond_ok = true;
            break;
        }
    }
    out.require(cond_ok, "composite condition is not the no-edge guard on the 4/4 corpus");
    return out;
}

// 2. vertex deletion on the two-vertex/one-edge host separates the semantics
Outcome criterion_2() {
    Outcome out;
    RuleWC del = vertex_delete();
    Graph host = ug_graph({4, 5}, {Edge{0, 4, 5}});
    out.require(enumerate_matches(del, host, Semantics::DPO).empty(),
                "DPO unexpectedly admits a match");
    auto sq = enumerate_matches(del, host, Semantics::SqPO);
    out.require(sq.size() == 2,
                "SqPO match count is " + std::to_string(sq.size()) + ", wanted 2");
    Graph single = ug_graph({0});
    for (const Morphism& m : sq) {
        RewriteStep step = apply(del, host, m, Semantics::SqPO);
        out.require(are_isomorphic(step.result, single).has_value(),
                    "SqPO result is not the single-vertex graph");
    }
    return out;
}

// 3. shifting the extra-vertex pattern along the injection into
// pattern + square: a disjoint placement and a placement sharing one vertex
Outcome criterion_3() {
    Outcome out;
    Graph pattern = ug_graph({1, 2}, {Edge{0, 1, 2}});
    Graph square = ug_graph({1, 2, 3, 4, 5, 6},
                            {Edge{0, 1, 2}, Edge{1, 3, 4}, Edge{2, 4, 5}, Edge{3, 5, 6},
                             Edge{4, 3, 6}});
    Morphism inj = Morphism::inclusion(pattern, square);
    Graph extra = ug_graph({1, 2, 7}, {Edge{0, 1, 2}});
    ConditionPtr c = Condition::exists(Morphism::inclusion(pattern, extra));

    ConditionPtr shifted = shift(inj, c);
    out.require(shifted->op() == CondOp::Or, "shift did not produce a disjunction");
    // one disjoint placement plus one gluing per square corner
    out.require(shifted->children().size() == 5,
                "expected 5 raw disjuncts, got " +
                    std::to_string(shifted->children().size()));

    // group disjuncts by isomorphism type of the target
    std::vector<Graph> reps;
    std::vector<std::size_t> sizes;
    for (const ConditionPtr& d : shifted->children()) {
        out.require(d->op() == CondOp::Exists, "disjunct is not an embedding test");
        const Graph& target = d->morphism().cod();
        bool found = false;
        for (std::size_t k = 0; k < reps.size(); ++k)
            if (are_isomorphic(reps[k], target)) {
                ++sizes[k];
                found = true;
                break;
            }
        if (!found) {
            reps.push_back(target);
            sizes.push_back(1);
        }
    }
    out.require(reps.size() == 2, "expected exactly 2 target classes, got " +
                                      std::to_string(reps.size()));
    if (reps.size() == 2) {
        Graph disjoint = ug_graph({1, 2, 3, 4, 5, 6, 7},
                                  {Edge{0, 1, 2}, Edge{1, 3, 4}, Edge{2, 4, 5}, Edge{3, 5, 6},
                                   Edge{4, 3, 6}});
        bool first_is_disjoint = are_isomorphic(reps[0], disjoint).has_value();
        const Graph& d = first_is_disjoint ? reps[0] : reps[1];
        const Graph& g = first_is_disjoint ? reps[1] : reps[0];
        out.require(are_isomorphic(d, disjoint).has_value(),
                    "no disjoint-placement target");
        out.require(are_isomorphic(g, square).has_value(),
                    "no target sharing a single vertex with the square");
    }
    return out;
}

// 4. shift unit, compositionality, and the semantic biconditional
Outcome criterion_4() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    out.absorb(law_shift_unit(cfg));
    out.absorb(law_shift_compositionality(cfg));
    out.absorb(law_shift_semantic(cfg));
    return out;
}

// 5. transport laws: both contracts, unit, compositionality, compatibility
Outcome criterion_5() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    out.absorb(law_trans_contract(cfg, Semantics::DPO));
    out.absorb(law_trans_contract(cfg, Semantics::SqPO));
    out.absorb(law_trans_unit(cfg));
    out.absorb(law_trans_compositionality(cfg));
    out.absorb(law_shift_trans_compat(cfg, Semantics::DPO));
    out.absorb(law_shift_trans_compat(cfg, Semantics::SqPO));
    return out;
}

// 6. refined shift against the jointly-epic cospan oracle
Outcome criterion_6() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    out.absorb(law_classic_shift(cfg));
    return out;
}

// 7. concurrency round trips in both semantics
Outcome criterion_7() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    out.absorb(law_concurrency(cfg, Semantics::DPO));
    out.absorb(law_concurrency(cfg, Semantics::SqPO));
    return out;
}

// 8. associativity bijections in both semantics
Outcome criterion_8() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    out.absorb(law_associativity(cfg, Semantics::DPO));
    out.absorb(law_associativity(cfg, Semantics::SqPO));
    return out;
}

// 9. the trivial rule is neutral; a clashing condition kills the empty overlap
Outcome criterion_9() {
    Outcome out;
    RuleWC add = guarded_edge_add();
    Graph empty = Graph::empty(Flavor::Undirected);
    RuleWC trivial = RuleWC::plain(Rule::identity(empty));

    for (int side = 0; side < 2; ++side) {
        Span mu = side == 0
                      ? Span::make(Morphism::identity(empty),
                                   Morphism::make(empty, add.rule.output, {}, {}))
                      : Span::make(Morphism::make(empty, add.rule.input, {}, {}),
                                   Morphism::identity(empty));
        auto comp = side == 0 ? compose(trivial, mu, add, Semantics::DPO)
                              : compose(add, mu, trivial, Semantics::DPO);
        out.require(comp.has_value(), "composite with the trivial rule missing");
        if (!comp) continue;
        out.require(rules_isomorphic(comp->composite_rule(), add.rule),
                    "trivial composite is not the rule itself");
        bool cond_ok = false;
        for (const RuleIso& iso : find_rule_isos(comp->composite_rule(), add.rule)) {
            if (check_equivalence(comp->cond, precompose(add.cond, iso.on_input),
                                  CorpusSpec{3, 3, {}},
                                  EquivalenceMode::dot(comp->composite_rule(),
                                                       Semantics::DPO))) {
                cond_ok = true;
                break;
            }
        }
        out.require(cond_ok, "trivial composite condition drifted");
    }

    // second rule forbidding a disjoint copy of the first rule's output
    Graph K = ug_graph({1});
    Graph O1 = ug_graph({1, 2}, {Edge{0, 1, 2}});
    Graph K1 = ug_graph({1, 2});
    Rule r1 = Rule::make(Morphism::inclusion(K1, O1), Morphism::identity(K1));
    CoproductResult blocked = coproduct(K, O1);
    RuleWC veto = RuleWC::make(Rule::identity(K),
                               Condition::negation(Condition::exists(blocked.inj_left)));
    Span mu = Span::make(Morphism::make(empty, veto.rule.input, {}, {}),
                         Morphism::make(empty, r1.output, {}, {}));
    out.require(!compose(veto, mu, RuleWC::plain(r1), Semantics::DPO).has_value(),
                "clashing condition did not collapse the empty-overlap composite");
    return out;
}

// 10. categorical substrate: universal properties at the default probe bound
Outcome criterion_10() {
    Outcome out;
    SuiteConfig cfg;
    cfg.seed = 7;
    cfg.probes = ProbeConfig{}; // documented default: probes up to 3 vertices / 3 edges
    out.absorb(law_squares(cfg));
    out.absorb(law_double_squares(cfg));
    out.absorb(law_minto_cop(cfg));
    out.absorb(law_coproduct_square(cfg));
    return out;
}

} // namespace

int main() {
    struct Entry {
        const char* title;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"edge creation + deletion compose to the guarded identity", criterion_1},
        {"vertex deletion separates DPO from SqPO", criterion_2},
        {"shift along a coproduct injection yields the two placements", criterion_3},
        {"shift laws (unit, compositionality, semantic biconditional)", criterion_4},
        {"transport laws (contracts, unit, compositionality, compatibility)", criterion_5},
        {"refined shift matches the classic cospan oracle", criterion_6},
        {"concurrency round trips (both semantics)", criterion_7},
        {"associativity bijections (both semantics)", criterion_8},
        {"neutral element and clashing-condition collapse", criterion_9},
        {"universal properties of constructed squares", criterion_10},
    };

    int failures = 0;
    int idx = 0;
    for (const Entry& e : entries) {
        ++idx;
        auto start = Clock::now();
        Outcome out;
        try {
            out = e.run();
        } catch (const std::exception& ex) {
            out.pass = false;
            out.detail = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", idx, out.pass ? "PASS" : "FAIL",
                    secs, e.title, out.detail.empty() ? "" : " — ", out.detail.c_str());
        if (!out.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
