#pragma once

#include "grw/morphism.hpp"

namespace grw {

// Two morphisms out of a shared apex.
struct Span {
    Morphism left;
    Morphism right;

    static Span make(Morphism left, Morphism right) {
        if (left.dom() != right.dom()) fail(Errc::DomainMismatch, "span legs disagree on apex");
        return Span{std::move(left), std::move(right)};
    }
    const Graph& apex() const { return left.dom(); }
};

// Two morphisms into a shared target.
struct Cospan {
    Morphism left;
    Morphism right;

    static Cospan make(Morphism left, Morphism right) {
        if (left.cod() != right.cod())
            fail(Errc::DomainMismatch, "cospan legs disagree on target");
        return Cospan{std::move(left), std::move(right)};
    }
    const Graph& target() const { return left.cod(); }
};

} // namespace grw
