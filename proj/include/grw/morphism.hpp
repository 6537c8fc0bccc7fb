#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "grw/graph.hpp"

namespace grw {

// A structure-preserving total map between two graphs of the same flavor.
class Morphism {
public:
    // Validates totality, incidence preservation and flavor agreement.
    static Morphism make(Graph dom, Graph cod, std::vector<std::pair<Id, Id>> vmap,
                         std::vector<std::pair<Id, Id>> emap);
    static Morphism identity(const Graph& g);
    // sub must be a literal subgraph of super (same identifiers).
    static Morphism inclusion(const Graph& sub, const Graph& super);

    const Graph& dom() const { return dom_; }
    const Graph& cod() const { return cod_; }
    const std::vector<std::pair<Id, Id>>& vmap() const { return vmap_; }
    const std::vector<std::pair<Id, Id>>& emap() const { return emap_; }

    Id v(Id x) const;
    Id e(Id x) const;
    std::optional<Id> v_preimage(Id y) const; // first preimage in id order
    std::optional<Id> e_preimage(Id y) const;

    bool is_mono() const { return mono_; }
    bool is_epi() const { return epi_; }
    bool is_iso() const { return mono_ && epi_; }

    // Deterministic ordering key over morphisms sharing dom and cod.
    std::vector<std::uint64_t> encode() const;

    bool operator==(const Morphism& other) const;
    bool operator!=(const Morphism& other) const { return !(*this == other); }

private:
    Graph dom_, cod_;
    std::vector<std::pair<Id, Id>> vmap_, emap_; // sorted by key
    bool mono_ = false, epi_ = false;
};

struct MorphismClass {
    bool is_mono;
    bool is_epi;
    bool is_iso;
};

MorphismClass classify(const Morphism& f);

// g after f; requires cod(f) == dom(g).
Morphism compose(const Morphism& f, const Morphism& g);

// The image of f as a literal subgraph of cod(f).
Graph image_subgraph(const Morphism& f);

// f with its codomain restricted to a subgraph of cod(f) containing image(f).
Morphism corestrict(const Morphism& f, const Graph& sub);

// The h with t∘h = f for a mono t sharing f's codomain; empty when f does not
// land inside the image of t.
std::optional<Morphism> factor_through_mono(const Morphism& f, const Morphism& t);

} // namespace grw
