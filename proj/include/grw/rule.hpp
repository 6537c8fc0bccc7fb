#pragma once

#include "grw/cat_ops.hpp"
#include "grw/condition.hpp"

namespace grw {

// Linear rule: a span of monos output <-o- context -i-> input.
struct Rule {
    Graph output;
    Graph context;
    Graph input;
    Morphism to_output; // o: K -> O, mono
    Morphism to_input;  // i: K -> I, mono

    static Rule make(Morphism to_output, Morphism to_input);
    static Rule identity(const Graph& g);
    Rule inverted() const; // input <- context -> output
};

// s after r, glued over the shared middle object via pullback.
Rule span_compose(const Rule& s, const Rule& r);

bool rules_isomorphic(const Rule& a, const Rule& b);

struct RuleIso {
    Morphism on_output;  // O_a -> O_b
    Morphism on_context; // K_a -> K_b
    Morphism on_input;   // I_a -> I_b
};

// All triples of isos making both rule squares commute.
std::vector<RuleIso> find_rule_isos(const Rule& a, const Rule& b);

// Rule with its application condition in standard form (rooted at the input).
struct RuleWC {
    Rule rule;
    ConditionPtr cond;

    static RuleWC make(Rule r, ConditionPtr cond);
    static RuleWC plain(Rule r); // condition true
};

enum class Semantics { DPO, SqPO };

const char* semantics_name(Semantics s);

// Transport of a condition over the rule's output back to its input. Branches
// whose pushout complement does not exist collapse to false.
ConditionPtr trans(const Rule& r, const ConditionPtr& c_out);

// trans along (I <-i- K -i-> I); prunes non-transportable subconditions.
ConditionPtr compress_condition(const RuleWC& R);

// Admissible matches of R into X. DPO additionally requires the pushout
// complement to exist.
std::vector<Morphism> enumerate_matches(const RuleWC& R, const Graph& X, Semantics sem);

struct RewriteStep {
    RuleWC rule;
    Graph host;
    Morphism match;   // I -> host
    Morphism comatch; // O -> result
    Graph result;
    SquareWitness left_square;  // pushout adding the output
    SquareWitness right_square; // complement square (POC for DPO, FPC for SqPO)
    Semantics semantics;

    const Graph& complement() const { return right_square.bottom.dom(); }
    const Morphism& complement_in_host() const { return right_square.bottom; }
    const Morphism& complement_in_result() const { return left_square.bottom; }
    const Morphism& context_to_complement() const { return right_square.left; }
};

// Requires m to be admissible; throws InadmissibleMatch otherwise.
RewriteStep apply(const RuleWC& R, const Graph& X, const Morphism& m, Semantics sem);

} // namespace grw
