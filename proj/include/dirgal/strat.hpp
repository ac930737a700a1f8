/// strat.hpp -- direct Galois stratifications: partition of a presentation
/// into locally closed pieces with covers and twisted conjugacy domains,
/// their evaluation over Frobenius difference fields, inflation, refinement
/// and the Boolean algebra.
#ifndef DIRGAL_STRAT_HPP
#define DIRGAL_STRAT_HPP

#include "dirgal/cover.hpp"
#include "dirgal/coverops.hpp"

namespace dirgal {

struct Stratum {
    DirectPresentation piece;    // locally closed sub-presentation of the ambient
    GaloisCover cover;           // base = piece
    std::set<int> domain;        // twisted-closed subset of cover.G0

    bool domain_full() const { return static_cast<int>(domain.size()) == cover.G0.size(); }
};

struct GaloisStratification {
    DirectPresentation ambient;
    std::vector<Stratum> strata;

    std::string str() const;
};

GaloisStratification strat_top(const DirectPresentation& X);
GaloisStratification strat_bottom(const DirectPresentation& X);
/// single stratum covering X
GaloisStratification single_stratum(const DirectPresentation& X, GaloisCover D,
                                    std::set<int> domain);

ValidationReport validate_strat(const GaloisStratification& A);

struct EvaluationResult {
    DiffField K;
    PointSet points;
    std::vector<PointSet> per_stratum;
};

EvaluationResult evaluate(const GaloisStratification& A, const DiffField& K,
                          std::uint64_t budget = kDefaultBudget);

GaloisStratification reduce_mod_strat(const GaloisStratification& A, const FieldPtr& k2);

/// Restrict a stratum to a locally closed sub-piece of its piece: pull the
/// cuts through the covering maps, choose a direct component, restrict the
/// groups to the decomposition subgroups, pick the least coherent lift and
/// transform the domain accordingly.
std::optional<Stratum> restrict_stratum(const Stratum& s, const DirectPresentation& subpiece);

/// Refinement along a finer partition of each stratum's piece (pieces listed
/// per stratum; they must partition it, which evaluation tests check).
GaloisStratification refine(const GaloisStratification& A,
                            const std::vector<std::vector<DirectPresentation>>& pieces);

/// Inflation along dominating covers: per stratum, a cover of the same piece
/// together with the surjection of its G0 onto the stratum's G0.
struct Domination {
    GaloisCover finer;
    std::vector<int> onto0;     // finer.G0 index -> coarse G0 index (surjective)
};
GaloisStratification inflate(const GaloisStratification& A,
                             const std::vector<Domination>& doms);

enum class BoolOp { conj, disj };
GaloisStratification boolean_combine(const GaloisStratification& A,
                                     const GaloisStratification& B, BoolOp op);
GaloisStratification negate(const GaloisStratification& A);

/// Intersection of two locally closed presentation pieces (same ambient).
DirectPresentation meet_pieces(const DirectPresentation& P, const DirectPresentation& Q);
/// True when the piece provably has no realisations at all (symbolic check).
bool piece_trivially_empty(const DirectPresentation& P);

} // namespace dirgal

#endif
