/// points.hpp -- brute-force enumeration of points and realisations of a
/// presentation over Frobenius difference fields (F_{q^m}, phi_q): the
/// ground-truth semantics every equivalence test is checked against.
#ifndef DIRGAL_POINTS_HPP
#define DIRGAL_POINTS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dirgal/presentation.hpp"

namespace dirgal {

/// (F_{q^m}, phi_q) with q = p^e; coordinates range over F_{q^m} = F_{p^(e m)}.
struct DiffField {
    std::uint64_t p = 0;
    int e = 1;          // q = p^e
    int m = 1;
    FieldPtr Fqm;       // the coordinate field F_{p^(e m)}

    mpz_class q() const {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(e));
        return r;
    }
    /// phi_q(x) = x^q
    FieldElem frob(const FieldElem& a) const { return Fqm->frobenius(a, static_cast<unsigned>(e)); }
    std::string str() const;
};

DiffField make_difffield(std::uint64_t p, int e, int m);

/// A realisation tuple; canonical order is coordinatewise field order.
using Point = std::vector<FieldElem>;
struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};
using PointSet = std::set<Point, PointLess>;

inline constexpr std::uint64_t kDefaultBudget = 10000000;   // evaluation budget

/// All x in F_{q^m}^n with x in V(I0) \ V(U0) and (x, phi(x)) in V(I1) \ V(U1).
PointSet enumerate_realisations(const DirectPresentation& P, const DiffField& K,
                                std::uint64_t budget = kDefaultBudget);

bool is_point(const DirectPresentation& P, const Point& x, const DiffField& K);

/// Least m <= m_max with a realisation over (F_{q^m}, phi_q), plus a witness.
struct Witness {
    int m;
    Point x;
};
std::optional<Witness> nonempty_witness(const DirectPresentation& P, std::uint64_t p,
                                        int e, int m_max,
                                        std::uint64_t budget = kDefaultBudget);

/// Image of a realisation set under a coordinate map (for f_exists checks).
PointSet map_points(const std::vector<MPoly>& f0, const PointSet& pts,
                    const DiffField& K);

std::string point_str(const Point& x, const FieldPtr& k);

} // namespace dirgal

#endif
