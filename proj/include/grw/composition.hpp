#pragma once

#include <optional>

#include "grw/equivalence.hpp"
#include "grw/rule.hpp"

namespace grw {

// Full witness of a sequential rule composition along an overlap span
// mu = (I2 <- M21 -> O1). Second rule on the left, first on the right.
struct CompositeDiagram {
    RuleWC second; // R2
    RuleWC first;  // R1
    Span overlap;  // left: M21 -> I2, right: M21 -> O1

    Graph glue;            // N21
    Morphism in2_to_glue;  // m2': I2 -> N21
    Morphism out1_to_glue; // m1': O1 -> N21

    // second-rule side (FPC under SqPO semantics)
    Graph ctx2;                 // K2'
    Morphism k2_to_ctx2;        // K2 -> K2'
    Morphism ctx2_to_glue;      // K2' -> N21
    Graph output;               // O21
    Morphism out2_to_output;    // O2 -> O21
    Morphism ctx2_to_output;    // K2' -> O21

    // first-rule side (always a pushout complement)
    Graph ctx1;                 // K1'
    Morphism k1_to_ctx1;        // K1 -> K1'
    Morphism ctx1_to_glue;      // K1' -> N21
    Graph input;                // I21
    Morphism in1_to_input;      // p1: I1 -> I21
    Morphism ctx1_to_input;     // K1' -> I21

    Graph context;              // K21, pullback of K2' -> N21 <- K1'
    Morphism context_to_ctx2;   // K21 -> K2'
    Morphism context_to_ctx1;   // K21 -> K1'
    Morphism to_output;         // o21: K21 -> O21
    Morphism to_input;          // i21: K21 -> I21

    ConditionPtr cond; // over I21, already simplified, never literal false
    Semantics semantics = Semantics::DPO;

    std::vector<SquareWitness> witnesses;

    Rule composite_rule() const { return Rule::make(to_output, to_input); }
    RuleWC composite() const { return RuleWC::make(composite_rule(), cond); }
};

// All iso-classes of mono spans I2 <- M -> O1, the empty span first.
std::vector<Span> enumerate_rule_overlaps(const RuleWC& R2, const RuleWC& R1);

// Empty when a required pushout complement is missing or the composite
// condition simplifies to false.
std::optional<CompositeDiagram> compose(const RuleWC& R2, const Span& mu, const RuleWC& R1,
                                        Semantics sem);

// Bounded satisfiability probe: does some admissible match of the rule into
// some corpus host satisfy the condition? Strict-mode diagnostics only;
// admissibility itself rejects nothing beyond a literal false.
bool condition_satisfiable_on_corpus(const ConditionPtr& c, const Rule& rule, Semantics sem,
                                     const CorpusSpec& corpus);

} // namespace grw
