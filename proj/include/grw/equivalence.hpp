#pragma once

#include <optional>

#include "grw/rule.hpp"

namespace grw {

// Deterministic host-graph generator bound plus extra hosts to sweep.
struct CorpusSpec {
    std::size_t max_vertices = 4;
    std::size_t max_edges = 4;
    std::vector<Graph> extra_hosts;
};

struct EquivalenceMode {
    enum class Kind { Plain, DotAdmissible } kind = Kind::Plain;
    std::optional<Rule> rule; // DotAdmissible only
    Semantics semantics = Semantics::DPO;

    static EquivalenceMode plain() { return {}; }
    static EquivalenceMode dot(Rule r, Semantics s) {
        EquivalenceMode m;
        m.kind = Kind::DotAdmissible;
        m.rule = std::move(r);
        m.semantics = s;
        return m;
    }
};

struct EquivalenceVerdict {
    bool equivalent = true;
    std::optional<Morphism> counterexample;
    std::size_t hosts_checked = 0;
    std::size_t morphisms_checked = 0;

    explicit operator bool() const { return equivalent; }
};

// Tests pointwise agreement of the two conditions over every mono from the
// shared root into every corpus host (restricted to admissible matches of the
// given rule in DotAdmissible mode). A bounded oracle, not a decision
// procedure.
EquivalenceVerdict check_equivalence(const ConditionPtr& c1, const ConditionPtr& c2,
                                     const CorpusSpec& corpus = {},
                                     const EquivalenceMode& mode = {});

} // namespace grw
