#include "grw/rule.hpp"

namespace grw {

Rule Rule::make(Morphism to_output, Morphism to_input) {
    if (to_output.dom() != to_input.dom())
        fail(Errc::DomainMismatch, "rule legs disagree on the context");
    if (!to_output.is_mono() || !to_input.is_mono())
        fail(Errc::InvariantViolation, "rule legs must be monos");
    Rule r;
    r.output = to_output.cod();
    r.context = to_output.dom();
    r.input = to_input.cod();
    r.to_output = std::move(to_output);
    r.to_input = std::move(to_input);
    return r;
}

Rule Rule::identity(const Graph& g) {
    return make(Morphism::identity(g), Morphism::identity(g));
}

Rule Rule::inverted() const { return make(to_input, to_output); }

Rule span_compose(const Rule& s, const Rule& r) {
    // r = (C <-b- B -a-> A), s = (E <-d- D -c-> C); pull back over C
    if (r.output != s.input) fail(Errc::DomainMismatch, "span composition middles differ");
    PullbackResult pb = pullback(Cospan::make(s.to_input, r.to_output));
    // pb.to_left: F -> D, pb.to_right: F -> B
    Morphism to_out = compose(pb.to_left, s.to_output);
    Morphism to_in = compose(pb.to_right, r.to_input);
    return Rule::make(std::move(to_out), std::move(to_in));
}

std::vector<RuleIso> find_rule_isos(const Rule& a, const Rule& b) {
    std::vector<RuleIso> out;
    if (a.context.vertex_count() != b.context.vertex_count() ||
        a.context.edge_count() != b.context.edge_count() ||
        a.input.vertex_count() != b.input.vertex_count() ||
        a.input.edge_count() != b.input.edge_count() ||
        a.output.vertex_count() != b.output.vertex_count() ||
        a.output.edge_count() != b.output.edge_count())
        return out;
    for (const Morphism& kappa : enumerate_monos(a.context, b.context)) {
        if (!kappa.is_iso()) continue;
        PartialMap pin_o, pin_i;
        for (Id v : a.context.vertices()) {
            pin_o.v.emplace_back(a.to_output.v(v), b.to_output.v(kappa.v(v)));
            pin_i.v.emplace_back(a.to_input.v(v), b.to_input.v(kappa.v(v)));
        }
        for (const Edge& e : a.context.edges()) {
            pin_o.e.emplace_back(a.to_output.e(e.id), b.to_output.e(kappa.e(e.id)));
            pin_i.e.emplace_back(a.to_input.e(e.id), b.to_input.e(kappa.e(e.id)));
        }
        std::vector<Morphism> omegas, iotas;
        for (Morphism& m : enumerate_monos_extending(a.output, b.output, pin_o))
            if (m.is_iso()) omegas.push_back(std::move(m));
        for (Morphism& m : enumerate_monos_extending(a.input, b.input, pin_i))
            if (m.is_iso()) iotas.push_back(std::move(m));
        for (const Morphism& omega : omegas)
            for (const Morphism& iota : iotas)
                out.push_back(RuleIso{omega, kappa, iota});
    }
    return out;
}

bool rules_isomorphic(const Rule& a, const Rule& b) { return !find_rule_isos(a, b).empty(); }

RuleWC RuleWC::make(Rule r, ConditionPtr cond) {
    if (!cond || cond->root() != r.input)
        fail(Errc::RootMismatch, "rule condition must be rooted at the input");
    return RuleWC{std::move(r), std::move(cond)};
}

RuleWC RuleWC::plain(Rule r) {
    ConditionPtr t = Condition::truth(r.input);
    return RuleWC{std::move(r), std::move(t)};
}

const char* semantics_name(Semantics s) { return s == Semantics::DPO ? "dpo" : "sqpo"; }

ConditionPtr trans(const Rule& r, const ConditionPtr& c_out) {
    if (!c_out) fail(Errc::InvariantViolation, "null condition");
    if (c_out->root() != r.output) fail(Errc::RootMismatch, "condition not over the rule output");

    switch (c_out->op()) {
        case CondOp::True: return Condition::truth(r.input);
        case CondOp::False: return Condition::falsity(r.input);
        case CondOp::Not: return Condition::negation(trans(r, c_out->children()[0]));
        case CondOp::And: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c_out->children()) kids.push_back(trans(r, k));
            return Condition::conjunction(r.input, std::move(kids));
        }
        case CondOp::Or: {
            std::vector<ConditionPtr> kids;
            for (const auto& k : c_out->children()) kids.push_back(trans(r, k));
            return Condition::disjunction(r.input, std::move(kids));
        }
        case CondOp::Exists: {
            const Morphism& a = c_out->morphism(); // O -> O'
            auto poc = pushout_complement(r.to_output, a);
            if (!poc) return Condition::falsity(r.input);
            // K' = complement; extend the input side by pushout
            PushoutResult po = pushout(Span::make(poc->to_complement, r.to_input));
            // po.from_left: K' -> I', po.from_right: I -> I'
            Rule derived = Rule::make(poc->embed, po.from_left);
            return Condition::exists(po.from_right, trans(derived, c_out->children()[0]));
        }
    }
    fail(Errc::InvariantViolation, "unreachable");
}

ConditionPtr compress_condition(const RuleWC& R) {
    Rule along = Rule::make(R.rule.to_input, R.rule.to_input);
    return trans(along, R.cond);
}

std::vector<Morphism> enumerate_matches(const RuleWC& R, const Graph& X, Semantics sem) {
    if (R.rule.input.flavor() != X.flavor()) fail(Errc::FlavorMismatch, "match across flavors");
    std::vector<Morphism> out;
    for (Morphism& m : enumerate_monos(R.rule.input, X)) {
        if (sem == Semantics::DPO && !pushout_complement(R.rule.to_input, m)) continue;
        if (!satisfies(m, R.cond)) continue;
        out.push_back(std::move(m));
    }
    return out;
}

RewriteStep apply(const RuleWC& R, const Graph& X, const Morphism& m, Semantics sem) {
    if (m.dom() != R.rule.input || m.cod() != X)
        fail(Errc::DomainMismatch, "match does not connect rule input and host");
    if (!m.is_mono()) fail(Errc::InadmissibleMatch, "matches must be monos");
    if (!satisfies(m, R.cond)) fail(Errc::InadmissibleMatch, "application condition unsatisfied");

    ComplementResult comp = [&] {
        if (sem == Semantics::DPO) {
            auto poc = pushout_complement(R.rule.to_input, m);
            if (!poc) fail(Errc::InadmissibleMatch, "pushout complement does not exist");
            return *std::move(poc);
        }
        return final_pullback_complement(R.rule.to_input, m);
    }();

    PushoutResult po = pushout(Span::make(R.rule.to_output, comp.to_complement));
    // po.from_left: O -> X', po.from_right: complement -> X'
    SquareWitness left{R.rule.to_output, comp.to_complement, po.from_left, po.from_right,
                       SquareKind::Pushout};
    return RewriteStep{R,
                       X,
                       m,
                       po.from_left,
                       po.object,
                       std::move(left),
                       comp.square,
                       sem};
}

} // namespace grw
