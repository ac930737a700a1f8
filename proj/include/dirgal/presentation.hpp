/// presentation.hpp -- direct presentations of difference schemes as
/// correspondences X1 <= X0 x X0 in v-form: validation, H-directness,
/// decomposition into H-direct components, localization, stratification of
/// morphisms by local properties, and fibre products.
#ifndef DIRGAL_PRESENTATION_HPP
#define DIRGAL_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dirgal/decompose.hpp"
#include "dirgal/ideal.hpp"

namespace dirgal {

/// A direct presentation over a base difference field (k, id) or
/// (F_{p^m}, phi_p).  Level-0 ambient: vars0 (n coordinates); level-1
/// ambient: vars0 followed by their partner copies (the sigma-side block).
/// Locally closed pieces carry open complements: the excluded locus is
/// V(U0) resp. V(U1); U = (1) excludes nothing.
struct DirectPresentation {
    FieldPtr k;
    int n = 0;
    VarsPtr vars0;
    VarsPtr vars1;
    Ideal I0, I1;
    Ideal U0, U1;

    static DirectPresentation make(FieldPtr k, int n,
                                   const std::vector<std::string>& gens0,
                                   const std::vector<std::string>& gens1,
                                   const std::string& prefix0 = "x",
                                   const std::string& prefix1 = "y");
    static DirectPresentation make_ideals(FieldPtr k, int n, Ideal I0, Ideal I1,
                                          const std::string& prefix0 = "x",
                                          const std::string& prefix1 = "y");

    /// The difference affine n-space: I0 = I1 = (0) (full correspondence).
    static DirectPresentation affine_space(FieldPtr k, int n);

    int x_index(int i) const { return i; }        // in vars1
    int y_index(int i) const { return n + i; }    // in vars1
    /// embed a level-0 ideal into vars1 on the x-block / y-block
    Ideal lift0_x(const Ideal& J) const;
    Ideal lift0_y(const Ideal& J) const;
    /// restrict open data: exclude V(gens) at the given level
    DirectPresentation with_open0(const Ideal& more) const;
    DirectPresentation with_open1(const Ideal& more) const;

    bool no_opens() const;
    std::string str() const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

ValidationReport validate(const DirectPresentation& P);

/// Both I0 and I1 certified prime and both projections dominant
/// (elimination ideals agree with I0).  Throws on undecided primality.
bool is_h_direct(const DirectPresentation& P);

/// Decomposition into H-direct directly closed sub-presentations whose
/// realisations union to P's, by component splitting and the
/// shrink-to-common-image recursion.
std::vector<DirectPresentation> direct_decompose(const DirectPresentation& P);

/// Localize: V0/V1 are open complements (excluded loci) on X0 / X1; the
/// level-1 exclusion is pulled through both projections.
DirectPresentation direct_localize(const DirectPresentation& P,
                                   const std::optional<Ideal>& V0,
                                   const std::optional<Ideal>& V1);

/// Base change of the catalog objects (integer/rational coefficients) to a
/// finite field.
DirectPresentation reduce_mod(const DirectPresentation& P, const FieldPtr& k2);

struct PresentationMorphism {
    DirectPresentation src, dst;
    std::vector<MPoly> f0;    // dst coordinates as polynomials in src vars0

    /// level-1 component maps: (f0 on the x-block, f0 on the y-block)
    std::vector<MPoly> f1() const;
};

PresentationMorphism make_morphism(DirectPresentation src, DirectPresentation dst,
                                   const std::vector<std::string>& f0_texts);

ValidationReport validate_morphism(const PresentationMorphism& f);

enum class MorphProperty { etale, smooth, geom_integral_fibres };

struct PropertyStratum {
    DirectPresentation src_piece;
    DirectPresentation dst_piece;
    bool holds = false;
    std::string note;
};

/// Stratify source/target so that the restriction to each stratum has a
/// property certificate (Jacobian/discriminant for etale-smooth, geometric
/// integrality of the generic fibre for the third).
std::vector<PropertyStratum> stratify_by_property(const PresentationMorphism& f,
                                                  MorphProperty prop);

/// Fibre product P x_R Q along validated morphisms.
DirectPresentation fibre_product(const PresentationMorphism& f,
                                 const PresentationMorphism& g);

} // namespace dirgal

#endif
