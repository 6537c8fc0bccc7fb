#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "grw/composition.hpp"
#include "grw/generators.hpp"

namespace grw {

struct LawReport {
    std::string law;
    std::size_t instances = 0;
    std::vector<std::string> failures; // serialized counterexample bundles
    double elapsed_ms = 0.0;
    std::string note;

    bool passed() const { return failures.empty(); }
    std::string to_json_line() const;
};

// Everything the deterministic suite needs: seed, instance counts, corpus and
// probe bounds, generator bounds.
struct SuiteConfig {
    std::uint64_t seed = 7;
    CorpusSpec corpus{4, 4, {}};
    CorpusSpec dot_corpus{3, 3, {}}; // bounded corpus for composite conditions
    ProbeConfig probes{3, 3, 20000};
    GenBounds bounds{};

    std::size_t shift_unit = 100;
    std::size_t shift_compositionality = 100;
    std::size_t shift_semantic = 500;
    std::size_t simplify_preserves = 100;
    std::size_t trans_contract = 300;
    std::size_t trans_unit = 100;
    std::size_t trans_compositionality = 100;
    std::size_t shift_trans_compat = 100;
    std::size_t classic_shift = 100;
    std::size_t concurrency = 200;
    std::size_t associativity = 50;
    std::size_t squares = 500;
    std::size_t double_squares = 50;
    std::size_t minto_cop = 100;
    std::size_t coproduct_square = 50;
    std::size_t step_invariants = 50;
    std::size_t exhaustive_sweeps = 25;

    void validate() const;
    static SuiteConfig quick(); // small counts for unit tests
};

// Seam for fault injection in tests.
struct SuiteOps {
    std::function<PushoutResult(const Span&)> pushout = [](const Span& s) {
        return grw::pushout(s);
    };
};

// --- concurrency theorem ---

struct SynthesisResult {
    Span overlap;
    Morphism match; // I21 -> X0
    CompositeDiagram composite;
    RewriteStep composite_step;
};

// Builds the composite rule and match realizing the two-step derivation in
// one step; step2 must start at step1's result.
SynthesisResult synthesis(const RewriteStep& step1, const RewriteStep& step2);

// Splits an application of a composite back into the two-step derivation.
std::pair<RewriteStep, RewriteStep> analysis(const CompositeDiagram& comp, const Morphism& m21,
                                             const Graph& X0);

// --- classic shift cross-check ---

// Checks the two bracketings of the triple composition against each other:
// equal match-pair counts and a bijection matching composites up to rule
// isomorphism and corpus dot-equivalence of the composite conditions. The
// corpus bound is recorded in the report note.
LawReport associativity_check(const RuleWC& R1, const RuleWC& R2, const RuleWC& R3,
                              Semantics sem, const CorpusSpec& dot_corpus = {3, 3, {}});

// All iso-classes of jointly-epic mono cospans (r: Q -> E, s: A -> E) with
// r∘p = s∘a, built by quotient search over partial matchings; test oracle.
std::vector<Cospan> classic_shift_oracle(const Morphism& p, const Morphism& a);

bool cospans_isomorphic(const Cospan& a, const Cospan& b);

// --- law runners ---

LawReport law_graph_basics(const SuiteConfig& cfg);
LawReport law_shift_unit(const SuiteConfig& cfg);
LawReport law_shift_compositionality(const SuiteConfig& cfg);
LawReport law_shift_semantic(const SuiteConfig& cfg);
// biconditionals swept over every mono into every small corpus host
LawReport law_shift_exhaustive(const SuiteConfig& cfg);
LawReport law_trans_exhaustive(const SuiteConfig& cfg, Semantics sem);
LawReport law_simplify_preserves(const SuiteConfig& cfg);
LawReport law_trans_contract(const SuiteConfig& cfg, Semantics sem);
LawReport law_trans_unit(const SuiteConfig& cfg);
LawReport law_trans_compositionality(const SuiteConfig& cfg);
LawReport law_shift_trans_compat(const SuiteConfig& cfg, Semantics sem);
LawReport law_classic_shift(const SuiteConfig& cfg);
LawReport law_concurrency(const SuiteConfig& cfg, Semantics sem);
LawReport law_associativity(const SuiteConfig& cfg, Semantics sem);
LawReport law_squares(const SuiteConfig& cfg, const SuiteOps& ops = {});
LawReport law_double_squares(const SuiteConfig& cfg);
LawReport law_minto_cop(const SuiteConfig& cfg);
LawReport law_coproduct_square(const SuiteConfig& cfg);
LawReport law_step_invariants(const SuiteConfig& cfg, Semantics sem);
LawReport law_neutral_element(const SuiteConfig& cfg);
LawReport law_empty_overlap_coproduct(const SuiteConfig& cfg);

// Runs every law deterministically; one report per law, progress optional.
std::vector<LawReport> run_suite(const SuiteConfig& cfg, std::ostream* progress = nullptr);

} // namespace grw
