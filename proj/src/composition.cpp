#include "grw/composition.hpp"

namespace grw {

std::vector<Span> enumerate_rule_overlaps(const RuleWC& R2, const RuleWC& R1) {
    const Graph& I2 = R2.rule.input;
    const Graph& O1 = R1.rule.output;
    if (I2.flavor() != O1.flavor()) fail(Errc::FlavorMismatch, "overlaps across flavors");

    // representatives with the I2-leg a subgraph inclusion; distinct
    // (subgraph, mono) pairs are distinct span classes
    std::vector<Span> out;
    for (const SubgraphParts& part : subgraphs_containing(I2, {}, {})) {
        Graph M = I2.subgraph(part.vertices, part.edges);
        Morphism into_in2 = Morphism::inclusion(M, I2);
        for (Morphism& h : enumerate_monos(M, O1))
            out.push_back(Span{into_in2, std::move(h)});
    }
    return out;
}

bool condition_satisfiable_on_corpus(const ConditionPtr& c, const Rule& rule, Semantics sem,
                                     const CorpusSpec& corpus) {
    if (!c || c->root() != rule.input) fail(Errc::RootMismatch, "probe root is not the input");
    auto probe_host = [&](const Graph& host) {
        if (host.flavor() != rule.input.flavor()) return false;
        for (const Morphism& m : enumerate_monos(rule.input, host)) {
            if (sem == Semantics::DPO && !pushout_complement(rule.to_input, m)) continue;
            if (satisfies(m, c)) return true;
        }
        return false;
    };
    for (const Graph& host :
         all_graphs_up_to(rule.input.flavor(), corpus.max_vertices, corpus.max_edges))
        if (probe_host(host)) return true;
    for (const Graph& host : corpus.extra_hosts)
        if (probe_host(host)) return true;
    return false;
}

std::optional<CompositeDiagram> compose(const RuleWC& R2, const Span& mu, const RuleWC& R1,
                                        Semantics sem) {
    if (mu.left.cod() != R2.rule.input || mu.right.cod() != R1.rule.output)
        fail(Errc::DomainMismatch, "overlap span does not connect I2 and O1");
    if (!mu.left.is_mono() || !mu.right.is_mono())
        fail(Errc::InvariantViolation, "overlap legs must be monos");

    CompositeDiagram d;
    d.second = R2;
    d.first = R1;
    d.overlap = mu;
    d.semantics = sem;

    // glue object N21
    PushoutResult glue = pushout(mu);
    d.glue = glue.object;
    d.in2_to_glue = glue.from_left;
    d.out1_to_glue = glue.from_right;
    d.witnesses.push_back(glue.square);

    // first rule runs backwards from the glue: complement of o1 under m1'
    auto poc1 = pushout_complement(R1.rule.to_output, d.out1_to_glue);
    if (!poc1) return std::nullopt;
    d.ctx1 = poc1->complement;
    d.k1_to_ctx1 = poc1->to_complement;
    d.ctx1_to_glue = poc1->embed;
    d.witnesses.push_back(poc1->square);

    PushoutResult in = pushout(Span::make(d.k1_to_ctx1, R1.rule.to_input));
    d.input = in.object;
    d.ctx1_to_input = in.from_left;
    d.in1_to_input = in.from_right;
    d.witnesses.push_back(in.square);

    // second rule side: DPO needs the complement of i2 under m2', SqPO always
    // has the final pullback complement
    if (sem == Semantics::DPO) {
        auto poc2 = pushout_complement(R2.rule.to_input, d.in2_to_glue);
        if (!poc2) return std::nullopt;
        d.ctx2 = poc2->complement;
        d.k2_to_ctx2 = poc2->to_complement;
        d.ctx2_to_glue = poc2->embed;
        d.witnesses.push_back(poc2->square);
    } else {
        ComplementResult fpc2 = final_pullback_complement(R2.rule.to_input, d.in2_to_glue);
        d.ctx2 = fpc2.complement;
        d.k2_to_ctx2 = fpc2.to_complement;
        d.ctx2_to_glue = fpc2.embed;
        d.witnesses.push_back(fpc2.square);
    }

    PushoutResult outp = pushout(Span::make(d.k2_to_ctx2, R2.rule.to_output));
    d.output = outp.object;
    d.ctx2_to_output = outp.from_left;
    d.out2_to_output = outp.from_right;
    d.witnesses.push_back(outp.square);

    PullbackResult mid = pullback(Cospan::make(d.ctx2_to_glue, d.ctx1_to_glue));
    d.context = mid.apex;
    d.context_to_ctx2 = mid.to_left;
    d.context_to_ctx1 = mid.to_right;
    d.witnesses.push_back(mid.square);

    d.to_output = compose(d.context_to_ctx2, d.ctx2_to_output);
    d.to_input = compose(d.context_to_ctx1, d.ctx1_to_input);
    if (!d.to_output.is_mono() || !d.to_input.is_mono())
        fail(Errc::InvariantViolation, "composite legs must come out mono");

    // composite condition: shift the first condition into the composite
    // input, shift the second into the glue and transport it back
    Rule back = Rule::make(d.ctx1_to_glue, d.ctx1_to_input); // N21 <- K1' -> I21
    ConditionPtr lifted1 = shift(d.in1_to_input, R1.cond);
    ConditionPtr lifted2 = trans(back, shift(d.in2_to_glue, R2.cond));
    d.cond = simplify(Condition::conjunction(d.input, {lifted1, lifted2}));
    if (is_false(d.cond)) return std::nullopt;

    return d;
}

} // namespace grw
