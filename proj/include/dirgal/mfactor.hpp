/// mfactor.hpp -- multivariate factorization on the supported class:
/// monomial/content splits, univariate, homogeneous bivariate (via
/// dehomogenization), polynomials linear in a variable, and quadratics via
/// the discriminant.  Anything outside the class reports an incomplete
/// factorization instead of guessing.
#ifndef DIRGAL_MFACTOR_HPP
#define DIRGAL_MFACTOR_HPP

#include "dirgal/mpoly.hpp"

namespace dirgal {

enum class Cert { yes, no, unknown };

struct MFactorResult {
    bool complete = false;                        // every factor certified irreducible
    FieldElem unit;
    std::vector<std::pair<MPoly, int>> factors;   // monic-normalized, multiplicity
};

/// Factor f as far as the strategy list can certify.  complete=false means
/// some listed factor may still be reducible.
MFactorResult mfactor(const MPoly& f);

/// Certified irreducibility (over the coefficient field).
Cert irreducible_cert(const MPoly& f);

/// Certified absolute irreducibility (over the algebraic closure), for the
/// same supported class; extension_bound limits the base-change scan used as
/// a fallback over finite fields.
Cert absolutely_irreducible_cert(const MPoly& f, int extension_bound = 0);

} // namespace dirgal

#endif
