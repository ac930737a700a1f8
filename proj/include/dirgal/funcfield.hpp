/// funcfield.hpp -- function-field towers k(Y) <= k(Z) presented by tagged
/// generators, and the relative algebraic closure of k(Y) in k(Z) computed
/// by factoring the supplied minimal polynomials over successive subfields.
#ifndef DIRGAL_FUNCFIELD_HPP
#define DIRGAL_FUNCFIELD_HPP

#include <map>
#include <string>
#include <vector>

#include "dirgal/mpoly.hpp"

namespace dirgal {

/// One generator of k(Z) over the part of the tower below it.
struct TowerGen {
    int var;              // index into the ambient variable list
    bool algebraic;       // tagged algebraic (minpoly supplied) or transcendental
    MPoly minpoly;        // univariate in `var` over base + earlier generators
};

/// k(Y) = fraction field of base polynomial ring (variables [0, n_base));
/// k(Z) = k(Y) extended by gens in order.  All polynomials share one ambient.
struct TowerPresentation {
    FieldPtr k;
    VarsPtr vars;
    int n_base = 0;
    std::vector<TowerGen> gens;
};

/// The relative algebraic closure L of k(Y) in k(Z).
struct RelativeClosure {
    struct Gen {
        int var;               // source generator
        MPoly minpoly;         // over k(Y) + earlier accepted gens
        MPoly rescale;         // monomial m: the accepted element is var/m (1 if none)
        int degree;
    };
    std::vector<Gen> gens;     // the accepted (certified algebraic) generators
    std::map<int, MPoly> substitutions;   // degree-1 generators, substituted away
    int degree = 1;            // [L : k(Y)]
    bool trivial() const { return gens.empty(); }
};

/// Computes L.  Throws Error("funcfield", "presentation insufficient ...")
/// when a generator's status cannot be certified from the supplied data.
/// An algebraic generator whose minimal polynomial mixes in transcendental
/// generators is first attacked by monomial rescaling (T -> m*T); if that
/// fails it contributes nothing to L (the supported presentation class).
RelativeClosure relative_algebraic_closure(const TowerPresentation& T);

} // namespace dirgal

#endif
