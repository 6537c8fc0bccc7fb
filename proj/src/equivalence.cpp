#include "grw/equivalence.hpp"

namespace grw {

EquivalenceVerdict check_equivalence(const ConditionPtr& c1, const ConditionPtr& c2,
                                     const CorpusSpec& corpus, const EquivalenceMode& mode) {
    if (!c1 || !c2) fail(Errc::InvariantViolation, "null condition");
    if (c1->root() != c2->root()) fail(Errc::RootMismatch, "equivalence roots differ");
    if (mode.kind == EquivalenceMode::Kind::DotAdmissible) {
        if (!mode.rule) fail(Errc::ConfigInvalid, "dot mode needs a rule");
        if (mode.rule->input != c1->root())
            fail(Errc::RootMismatch, "dot mode rule input is not the root");
    }

    EquivalenceVerdict verdict;

    // fast path: canonical structural identity
    ConditionPtr s1 = simplify(c1);
    ConditionPtr s2 = simplify(c2);
    if (structurally_equal(s1, s2)) return verdict;

    const Graph& root = c1->root();
    auto sweep_host = [&](const Graph& host) -> bool {
        if (host.flavor() != root.flavor()) return true;
        ++verdict.hosts_checked;
        for (const Morphism& p : enumerate_monos(root, host)) {
            if (mode.kind == EquivalenceMode::Kind::DotAdmissible) {
                if (mode.semantics == Semantics::DPO &&
                    !pushout_complement(mode.rule->to_input, p))
                    continue;
            }
            ++verdict.morphisms_checked;
            if (satisfies(p, s1) != satisfies(p, s2)) {
                verdict.equivalent = false;
                verdict.counterexample = p;
                return false;
            }
        }
        return true;
    };

    for (const Graph& host : all_graphs_up_to(root.flavor(), corpus.max_vertices,
                                              corpus.max_edges))
        if (!sweep_host(host)) return verdict;
    for (const Graph& host : corpus.extra_hosts)
        if (!sweep_host(host)) return verdict;
    return verdict;
}

} // namespace grw
