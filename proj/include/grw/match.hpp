#pragma once

#include <optional>
#include <vector>

#include "grw/morphism.hpp"

namespace grw {

// Pre-assigned vertex/edge pairs a search must respect.
struct PartialMap {
    std::vector<std::pair<Id, Id>> v;
    std::vector<std::pair<Id, Id>> e;
};

// All monomorphisms A -> B in lexicographic (vmap, emap) order. Parallel edges
// are matched by explicit edge assignment.
std::vector<Morphism> enumerate_monos(const Graph& A, const Graph& B);
std::vector<Morphism> enumerate_monos_extending(const Graph& A, const Graph& B,
                                                const PartialMap& pin);

// All morphisms (not necessarily injective), same ordering contract.
std::vector<Morphism> enumerate_morphisms(const Graph& A, const Graph& B);
std::vector<Morphism> enumerate_morphisms_extending(const Graph& A, const Graph& B,
                                                    const PartialMap& pin);

bool exists_mono_extending(const Graph& A, const Graph& B, const PartialMap& pin);

// First isomorphism in enumeration order, if any.
std::optional<Morphism> are_isomorphic(const Graph& A, const Graph& B);
std::optional<Morphism> find_iso_extending(const Graph& A, const Graph& B, const PartialMap& pin);

struct SubgraphParts {
    std::vector<Id> vertices;
    std::vector<Id> edges;
};

// All subgraphs of G containing the given base part, deterministic order.
std::vector<SubgraphParts> subgraphs_containing(const Graph& G, const std::vector<Id>& base_vs,
                                                const std::vector<Id>& base_es);

} // namespace grw
