/// ufactor.hpp -- dense univariate polynomials, factorization over F_{p^m}
/// (squarefree / distinct-degree / Cantor-Zassenhaus with a deterministic
/// seed) and over Q (Zassenhaus: factor mod p + Hensel lifting + subset
/// recombination), roots, splitting fields and subfield embeddings.
#ifndef DIRGAL_UFACTOR_HPP
#define DIRGAL_UFACTOR_HPP

#include <utility>
#include <vector>

#include "dirgal/mpoly.hpp"

namespace dirgal {

/// Dense univariate polynomial, little-endian coefficients.
struct UPoly {
    FieldPtr k;
    std::vector<FieldElem> c;

    UPoly() = default;
    explicit UPoly(FieldPtr kk) : k(std::move(kk)) {}
    UPoly(FieldPtr kk, std::vector<FieldElem> cc) : k(std::move(kk)), c(std::move(cc)) { trim(); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();
    FieldElem lc() const { return c.back(); }
    UPoly monic() const;
    FieldElem eval(const FieldElem& x) const;
    bool operator==(const UPoly& o) const;
    std::string str(const std::string& var = "T") const;
};

UPoly up_add(const UPoly& a, const UPoly& b);
UPoly up_sub(const UPoly& a, const UPoly& b);
UPoly up_mul(const UPoly& a, const UPoly& b);
UPoly up_scale(const UPoly& a, const FieldElem& s);
/// (quotient, remainder); b nonzero.
std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b);
UPoly up_gcd(const UPoly& a, const UPoly& b);      // monic
UPoly up_derivative(const UPoly& a);
UPoly up_powmod(const UPoly& base, const mpz_class& e, const UPoly& mod);

/// Bridge to MPoly: f must use only `var`.
UPoly upoly_from_mpoly(const MPoly& f, int var);
MPoly upoly_to_mpoly(const UPoly& f, const VarsPtr& vars, int var);

struct UFactors {
    FieldElem unit;                                 // leading unit
    std::vector<std::pair<UPoly, int>> factors;     // monic irreducible, multiplicity
};

/// Factor a nonzero univariate polynomial over Q or F_{p^m} into monic
/// irreducibles times a unit.  Deterministic output order.
UFactors factor_upoly(const UPoly& f);

/// Roots of f lying in its own coefficient field.
std::vector<FieldElem> up_roots(const UPoly& f);

bool up_irreducible(const UPoly& f);

/// Embedding of F_{p^a} into F_{p^b} (a | b), generator mapped to the
/// canonically least root of the source modulus.
struct FieldEmbedding {
    FieldPtr src, dst;
    FieldElem gen_image;            // image of src generator in dst
    FieldElem map(const FieldElem& a) const;
};
FieldEmbedding embed_field(const FieldPtr& src, const FieldPtr& dst);
FieldEmbedding identity_embedding(const FieldPtr& k);

/// Splitting field of f over its finite coefficient field: the least
/// extension containing all roots, the embedding, and all roots of f there
/// (sorted canonically, with multiplicity collapsed).
struct SplittingFieldDesc {
    FieldPtr field;
    FieldEmbedding emb;              // coefficient field -> field
    std::vector<FieldElem> roots;
    unsigned relative_degree = 1;    // [field : coefficient field]
};
SplittingFieldDesc splitting_field(const UPoly& f);

} // namespace dirgal

#endif
