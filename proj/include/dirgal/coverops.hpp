/// coverops.hpp -- constructions of direct Galois covers: the Galois
/// closure of a directly finite etale morphism (splitting-tower components
/// with computed permutation groups), the pushforward of a cover along a
/// fibration (normalization of the target in the relative algebraic
/// closure), and the almost-to-direct refinement by component selection.
#ifndef DIRGAL_COVEROPS_HPP
#define DIRGAL_COVEROPS_HPP

#include "dirgal/cover.hpp"
#include "dirgal/funcfield.hpp"

namespace dirgal {

struct ClosureResult {
    GaloisCover outer;              // Z~ as a cover of Y
    GaloisCover inner;              // the same Z~ viewed as a cover of X
    std::vector<int> sub0;          // Gal(Z~0/X0) as indices into outer.G0
    std::vector<int> sub1;          // Gal(Z~1/X1) as indices into outer.G1
};

/// Galois closure of a directly finite etale f: X -> Y presented (after
/// graph normalization) by a single monic fibre polynomial with invertible
/// discriminant on the piece.
ClosureResult galois_closure(const PresentationMorphism& f);

struct PushforwardResult {
    GaloisCover pushed;             // f_* Z over Y
    std::vector<int> surj0;         // G0(Z/X) -> pushed.G0 (surjection)
    std::vector<int> surj1;         // G1(Z/X) -> pushed.G1
    std::vector<int> kernel0;       // elements of G0(Z/X) acting trivially on L
};

/// Pushforward of D along a fibration f (directly universally submersive
/// with geometrically integral fibres), via the relative algebraic closure
/// of the function fields.  Supported class: coordinate-projection shaped f
/// and covers whose accepted closure generators carry binomial minimal
/// polynomials with scalar monomial group actions.
PushforwardResult pushforward_cover(const PresentationMorphism& f, const GaloisCover& D);

/// Replace the level-1 object of an almost direct cover by the direct
/// component determined by the distinguished lift; validates as direct.
GaloisCover to_direct_cover(const GaloisCover& D);

} // namespace dirgal

#endif
