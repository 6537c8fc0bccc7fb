#pragma once

#include <cstdint>
#include <random>

#include "grw/composition.hpp"

namespace grw {

// Seeded deterministic source for all randomized suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::size_t below(std::size_t bound); // uniform in [0, bound)
    bool coin(double p = 0.5);

    template <typename T>
    const T& pick(const std::vector<T>& xs) {
        return xs[below(xs.size())];
    }

private:
    std::mt19937_64 eng_;
};

struct GenBounds {
    std::size_t max_vertices = 3;
    std::size_t max_edges = 3;
    std::size_t max_extension_vertices = 2;
    std::size_t max_extension_edges = 2;
    int condition_depth = 2;
};

Graph random_graph(Rng& rng, Flavor flavor, std::size_t max_vertices, std::size_t max_edges);

// Mono G -> G+ obtained by freshly extending G with vertices and edges.
Morphism random_mono_extension(Rng& rng, const Graph& g, std::size_t extra_vertices,
                               std::size_t extra_edges);

// Random subgraph inclusion S -> G.
Morphism random_subgraph_inclusion(Rng& rng, const Graph& g);

Rule random_rule(Rng& rng, Flavor flavor, const GenBounds& bounds);

ConditionPtr random_condition(Rng& rng, const Graph& root, int depth, const GenBounds& bounds);

RuleWC random_rule_with_condition(Rng& rng, Flavor flavor, const GenBounds& bounds);

std::optional<Morphism> random_mono(Rng& rng, const Graph& A, const Graph& B);

} // namespace grw
