#include "grw/generators.hpp"

#include <algorithm>

namespace grw {

std::size_t Rng::below(std::size_t bound) {
    if (bound == 0) fail(Errc::ConfigInvalid, "empty choice");
    return static_cast<std::size_t>(eng_() % bound);
}

bool Rng::coin(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p;
}

Graph random_graph(Rng& rng, Flavor flavor, std::size_t max_vertices, std::size_t max_edges) {
    std::size_t nv = rng.below(max_vertices + 1);
    std::vector<Id> verts(nv);
    for (std::size_t i = 0; i < nv; ++i) verts[i] = static_cast<Id>(i);
    std::vector<Edge> edges;
    if (nv > 0) {
        std::size_t ne = rng.below(max_edges + 1);
        for (std::size_t i = 0; i < ne; ++i) {
            Id a = static_cast<Id>(rng.below(nv));
            Id b = static_cast<Id>(rng.below(nv));
            edges.push_back(Edge{static_cast<Id>(i), a, b});
        }
    }
    return Graph::make(flavor, std::move(verts), std::move(edges));
}

Morphism random_mono_extension(Rng& rng, const Graph& g, std::size_t extra_vertices,
                               std::size_t extra_edges) {
    std::vector<Id> verts = g.vertices();
    std::vector<Edge> edges = g.edges();
    Id next_v = verts.empty() ? 0 : verts.back() + 1;
    Id next_e = 0;
    for (const Edge& e : edges) next_e = std::max(next_e, e.id + 1);

    std::size_t nv = rng.below(extra_vertices + 1);
    for (std::size_t i = 0; i < nv; ++i) verts.push_back(next_v++);
    if (!verts.empty()) {
        std::size_t ne = rng.below(extra_edges + 1);
        for (std::size_t i = 0; i < ne; ++i) {
            Id a = verts[rng.below(verts.size())];
            Id b = verts[rng.below(verts.size())];
            edges.push_back(Edge{next_e++, a, b});
        }
    }
    Graph ext = Graph::make(g.flavor(), std::move(verts), std::move(edges));
    return Morphism::inclusion(g, ext);
}

Morphism random_subgraph_inclusion(Rng& rng, const Graph& g) {
    std::vector<Id> vs;
    for (Id v : g.vertices())
        if (rng.coin()) vs.push_back(v);
    std::vector<Id> es;
    for (const Edge& e : g.edges()) {
        bool closed = std::binary_search(vs.begin(), vs.end(), e.a) &&
                      std::binary_search(vs.begin(), vs.end(), e.b);
        if (closed && rng.coin()) es.push_back(e.id);
    }
    Graph sub = g.subgraph(vs, es);
    return Morphism::inclusion(sub, g);
}

Rule random_rule(Rng& rng, Flavor flavor, const GenBounds& bounds) {
    // interfaces stay within the configured bounds; the context is a random
    // common subgraph
    Graph input = random_graph(rng, flavor, bounds.max_vertices, bounds.max_edges);
    Morphism to_in = random_subgraph_inclusion(rng, input);
    const Graph& ctx = to_in.dom();
    std::size_t head_v = bounds.max_vertices - std::min(ctx.vertex_count(), bounds.max_vertices);
    std::size_t head_e = bounds.max_edges - std::min(ctx.edge_count(), bounds.max_edges);
    Morphism to_out =
        random_mono_extension(rng, ctx, std::min(head_v, bounds.max_extension_vertices),
                              std::min(head_e, bounds.max_extension_edges));
    return Rule::make(std::move(to_out), std::move(to_in));
}

ConditionPtr random_condition(Rng& rng, const Graph& root, int depth, const GenBounds& bounds) {
    std::size_t choices = depth <= 0 ? 2 : 6;
    switch (rng.below(choices)) {
        case 0: return Condition::truth(root);
        case 1:
            // bias towards satisfiable leaves
            if (rng.coin(0.25)) return Condition::falsity(root);
            return Condition::truth(root);
        case 2: {
            Morphism a = random_mono_extension(rng, root, bounds.max_extension_vertices,
                                               bounds.max_extension_edges);
            Graph target = a.cod();
            return Condition::exists(std::move(a),
                                     random_condition(rng, target, depth - 1, bounds));
        }
        case 3: return Condition::negation(random_condition(rng, root, depth - 1, bounds));
        case 4: {
            std::vector<ConditionPtr> kids;
            std::size_t n = 1 + rng.below(2);
            for (std::size_t i = 0; i < n; ++i)
                kids.push_back(random_condition(rng, root, depth - 1, bounds));
            return Condition::conjunction(root, std::move(kids));
        }
        default: {
            std::vector<ConditionPtr> kids;
            std::size_t n = 1 + rng.below(2);
            for (std::size_t i = 0; i < n; ++i)
                kids.push_back(random_condition(rng, root, depth - 1, bounds));
            return Condition::disjunction(root, std::move(kids));
        }
    }
}

RuleWC random_rule_with_condition(Rng& rng, Flavor flavor, const GenBounds& bounds) {
    Rule r = random_rule(rng, flavor, bounds);
    ConditionPtr c = random_condition(rng, r.input, bounds.condition_depth, bounds);
    // a rule whose condition is literally false never applies anywhere
    if (is_false(simplify(c))) c = Condition::truth(r.input);
    return RuleWC::make(std::move(r), std::move(c));
}

std::optional<Morphism> random_mono(Rng& rng, const Graph& A, const Graph& B) {
    auto monos = enumerate_monos(A, B);
    if (monos.empty()) return std::nullopt;
    return monos[rng.below(monos.size())];
}

} // namespace grw
