#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "grw/match.hpp"
#include "grw/morphism.hpp"

namespace grw {

enum class CondOp { True, False, Exists, Not, And, Or };

const char* cond_op_name(CondOp op);

class Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

// Nested application condition over a root graph. Exists carries a mono out of
// the root; Not/And/Or children share the parent's root. Or and False are
// first-class.
class Condition {
public:
    static ConditionPtr truth(Graph root);
    static ConditionPtr falsity(Graph root);
    static ConditionPtr exists(Morphism a, ConditionPtr sub); // root(sub) == cod(a)
    static ConditionPtr exists(Morphism a);                   // sub = true
    static ConditionPtr negation(ConditionPtr c);
    static ConditionPtr conjunction(Graph root, std::vector<ConditionPtr> kids);
    static ConditionPtr disjunction(Graph root, std::vector<ConditionPtr> kids);

    const Graph& root() const { return root_; }
    CondOp op() const { return op_; }
    const Morphism& morphism() const { return *mor_; } // Exists only
    const std::vector<ConditionPtr>& children() const { return kids_; }

    std::size_t node_count() const;

private:
    Graph root_;
    CondOp op_ = CondOp::True;
    std::optional<Morphism> mor_;
    std::vector<ConditionPtr> kids_;
};

// p must be mono with dom(p) == root(c).
bool satisfies(const Morphism& p, const ConditionPtr& c);

// Object satisfaction; root(c) must be the empty graph.
bool satisfies(const Graph& X, const ConditionPtr& c);

// Fixpoint of the boolean rewrite rules; satisfaction-equivalent to the input.
// And/Or children are put into a canonical structural order.
ConditionPtr simplify(const ConditionPtr& c);

bool structurally_equal(const ConditionPtr& a, const ConditionPtr& b);

// Total order usable for sorting; 0 = equal.
int structural_compare(const ConditionPtr& a, const ConditionPtr& b);

bool is_false(const ConditionPtr& c);
bool is_true(const ConditionPtr& c);

// A mono span apex between p: P >-> Q and a: P >-> A: x with both
// factorizations commuting.
struct OverlapSpan {
    Morphism apex_from_root; // x: P -> X
    Morphism into_left;      // X -> Q, mono
    Morphism into_right;     // X -> A, mono
};

// All isomorphism classes of overlap spans, deterministic order; the minimal
// span (X = image of p) comes first.
std::vector<OverlapSpan> enumerate_overlap_spans(const Morphism& p, const Morphism& a);

// Shift of c along the mono p; satisfaction is preserved under precomposition:
// n∘p |= c  iff  n |= shift(p, c).
ConditionPtr shift(const Morphism& p, const ConditionPtr& c);

// Re-roots c along an isomorphism phi: R' -> root(c) by precomposing the
// top-level Exists morphisms; satisfaction-equivalent transport of the tree.
ConditionPtr precompose(const ConditionPtr& c, const Morphism& phi);

} // namespace grw
