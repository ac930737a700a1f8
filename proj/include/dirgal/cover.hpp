/// cover.hpp -- direct Galois covers of presentations: validation of the
/// action/intertwining identities, fibre solving over splitting extensions,
/// local Frobenius substitutions and twisted conjugacy domains.
#ifndef DIRGAL_COVER_HPP
#define DIRGAL_COVER_HPP

#include "dirgal/group.hpp"
#include "dirgal/points.hpp"
#include "dirgal/presentation.hpp"

namespace dirgal {

/// A direct Galois cover (Z, Sigma) -> (X, sigma).  Z's level-0 coordinates
/// are cov.vars0 ("z..."), the sigma-side copies are the partner block
/// ("w..."); pi_1 is the z-projection and the distinguished lift
/// sigma-tilde is the w-projection.  Sigma = G0 * sigma-tilde is never
/// stored extensionally.  G0 acts on Z0 through act0, G1 on Z1 through
/// act1; hom_pi1 and hom_sigma are the maps ()^{pi_1} and ()^{sigma-tilde}.
struct GaloisCover {
    DirectPresentation base;
    DirectPresentation cov;
    std::vector<MPoly> p0;                   // base coords as polys in cov.vars0
    FiniteGroup G0, G1;
    std::vector<std::vector<MPoly>> act0;    // per G0 element, tuple over cov.vars0
    std::vector<std::vector<MPoly>> act1;    // per G1 element, tuple over cov.vars1
    GroupHom hom_pi1, hom_sigma;             // G1 -> G0
    bool trivial = false;                    // Z = X identity cover

    /// level-1 covering map (p0 on the z-block, p0 on the w-block)
    std::vector<MPoly> p1() const;
    void rebind_homs();                      // fix hom src/dst pointers after copies

    static GaloisCover trivial_cover(const DirectPresentation& X);
};

ValidationReport validate_cover(const GaloisCover& D);

/// Solutions over K of a zero-dimensional system (all coordinates in K).
std::vector<Point> solve_zero_dim(const Ideal& I, std::uint64_t budget = 100000);

/// The unique g in G0 with act0[g](w) = target (points over any extension
/// containing the action coefficients).
int find_group_element(const GaloisCover& D, const Point& w, const Point& target,
                       const FieldPtr& K);

struct TwistedClass {
    std::set<int> elems;     // twisted-conjugacy-closed subset of G0
};

/// The local phi-substitution class at a base realisation x: lift x1 to the
/// Z1-fibre over a splitting extension, solve g0(sigma-tilde(z1)) =
/// phi(pi_1(z1)), and return the twisted class of g0.
TwistedClass local_frobenius(const GaloisCover& D, const Point& x, const DiffField& K);

/// All per-lift substitution elements over the full fibre (for the lift
/// independence property); the twisted classes of all entries coincide for
/// a valid cover.
std::vector<int> local_frobenius_all_lifts(const GaloisCover& D, const Point& x,
                                           const DiffField& K);

std::set<int> twisted_closure(const GaloisCover& D, const std::set<int>& S);

/// Base change of a catalog cover to a finite field.
GaloisCover reduce_mod_cover(const GaloisCover& D, const FieldPtr& k2);

} // namespace dirgal

#endif
