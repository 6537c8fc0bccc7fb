#pragma once

#include <optional>

#include "grw/span.hpp"

namespace grw {

enum class SquareKind { Pushout, Pullback, PushoutComplement, FinalPullbackComplement };

const char* square_kind_name(SquareKind k);

// Commuting square
//
//        top
//     A -----> B
//     |        |
// left|        | right
//     v        v
//     C -----> D
//       bottom
//
// Pushout: D with (right, bottom) is the pushout of (top, left).
// Pullback: A with (top, left) is the pullback of (right, bottom).
// PushoutComplement: (C, left, bottom) completes (top, right) so that D is the
//   pushout of (top, left).
// FinalPullbackComplement: (bottom, left) is the final pullback complement of
//   (right, top).
struct SquareWitness {
    Morphism top;
    Morphism left;
    Morphism right;
    Morphism bottom;
    SquareKind kind;

    bool commutes() const;
};

struct CoproductResult {
    Graph object;
    Morphism inj_left;
    Morphism inj_right;
};

CoproductResult coproduct(const Graph& A, const Graph& B);

struct PushoutResult {
    Graph object;
    Morphism from_left;  // cod(span.left) -> object
    Morphism from_right; // cod(span.right) -> object
    SquareWitness square;
};

// Requires at least one mono leg.
PushoutResult pushout(const Span& s);

struct PullbackResult {
    Graph apex;
    Morphism to_left;  // apex -> dom(cospan.left)
    Morphism to_right; // apex -> dom(cospan.right)
    SquareWitness square;
};

PullbackResult pullback(const Cospan& c);

struct ComplementResult {
    Graph complement;
    Morphism to_complement; // K -> complement
    Morphism embed;         // complement -> X, mono
    SquareWitness square;
};

// i: K >-> I, m: I >-> X, both mono. Empty when the dangling condition fails;
// the complement is unique up to isomorphism when it exists.
std::optional<ComplementResult> pushout_complement(const Morphism& i, const Morphism& m);

// Same input shape; always constructible. Deletes edges left dangling by
// removed vertices ("deletion in unknown context").
ComplementResult final_pullback_complement(const Morphism& i, const Morphism& m);

// f = mono ∘ epi with the image as a literal subgraph of cod(f).
std::pair<Morphism, Morphism> epi_mono_factorize(const Morphism& f);

// Mediating morphism D -> T for a cocone (u: B -> T, v: C -> T) over a
// pushout-shaped square; empty if none exists.
std::optional<Morphism> cocone_mediator(const SquareWitness& sq, const Morphism& u,
                                        const Morphism& v);

// Mediating morphism T -> A for a cone (u: T -> B, v: T -> C) over a
// pullback-shaped square.
std::optional<Morphism> cone_mediator(const SquareWitness& sq, const Morphism& u,
                                      const Morphism& v);

struct ProbeConfig {
    std::size_t max_vertices = 3;
    std::size_t max_edges = 3;
    std::size_t max_probes = 20000;
    // the square's own objects join the probe set unless they exceed this
    std::size_t max_object_probe_elements = 8;
};

// Exhaustive universal-property check of the square against all probe objects
// up to the configured bound plus the square's own objects. A test oracle, not
// a production path.
bool verify_universal(const SquareWitness& sq, const ProbeConfig& cfg = {});

} // namespace grw
