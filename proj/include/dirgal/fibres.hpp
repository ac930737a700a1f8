/// fibres.hpp -- shared analysis of finite-type maps through their graph
/// ideals: triangular fibre relations, discriminant certificates, image
/// closures.  Used by property stratification, cover validation and the
/// direct image pipeline.
#ifndef DIRGAL_FIBRES_HPP
#define DIRGAL_FIBRES_HPP

#include "dirgal/ideal.hpp"

namespace dirgal {

/// Graph ideal of a polynomial map V(I_src) -> target coords, in the joint
/// ambient [target block | source block].
struct GraphIdeal {
    VarsPtr joint;
    Ideal J;
    std::vector<int> dst_idx;   // target block positions in the joint ambient
    std::vector<int> src_idx;   // source block positions
};

GraphIdeal graph_ideal(const Ideal& src, const std::vector<MPoly>& map,
                       const VarsPtr& dst_vars, const std::string& dst_prefix = "im.");

/// Triangular fibre relations of J over the target block (elim order with
/// the source block first): each covered source coordinate has a relation
/// monic in it; `disc` is a product proportional to the discriminants of
/// the non-linear relations (an invertibility certificate, possibly with
/// extra factors that only shrink the certified locus).
struct FibreShape {
    bool triangular = false;
    std::vector<int> finite_coords;
    std::vector<MPoly> finite_rels;
    std::vector<int> free_coords;
    MPoly disc;
};

FibreShape analyze_fibre(const Ideal& J, const std::vector<int>& src_coords);

/// Closure of the image: eliminate the source block, renamed onto dst_vars.
Ideal image_closure(const GraphIdeal& g, const VarsPtr& dst_vars);

/// var-free end of the pseudo-remainder chain of (f, g) in `var`: a multiple
/// of the resultant, suitable as a non-vanishing certificate (zero iff the
/// chain degenerates).
MPoly resultant_certificate(const MPoly& f, const MPoly& g, int var);

} // namespace dirgal

#endif
