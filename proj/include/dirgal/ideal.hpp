/// ideal.hpp -- polynomial ideals with Buchberger-computed reduced Groebner
/// bases (cached per monomial order, write-once), membership, elimination,
/// intersection/quotient/saturation and Krull dimension.
#ifndef DIRGAL_IDEAL_HPP
#define DIRGAL_IDEAL_HPP

#include <map>
#include <mutex>
#include <vector>

#include "dirgal/mpoly.hpp"

namespace dirgal {

struct GroebnerBasis {
    MonoOrder order;
    std::vector<MPoly> polys;   // reduced, monic, sorted descending by lt
};

class Ideal {
public:
    Ideal() = default;
    Ideal(FieldPtr k, VarsPtr vars, std::vector<MPoly> gens);
    static Ideal zero(FieldPtr k, VarsPtr vars) { return Ideal(std::move(k), std::move(vars), {}); }
    static Ideal unit(FieldPtr k, VarsPtr vars);
    /// Parse generator strings.
    static Ideal parse(const std::vector<std::string>& texts, FieldPtr k, VarsPtr vars);

    const FieldPtr& field() const { return k_; }
    const VarsPtr& vars() const { return vars_; }
    const std::vector<MPoly>& gens() const { return gens_; }
    bool trivially_zero() const;     // all generators zero

    /// Reduced Groebner basis (cached; thread-safe, write-once per order).
    const GroebnerBasis& groebner(const MonoOrder& ord = MonoOrder::grevlex()) const;

    bool contains(const MPoly& f) const;
    bool is_unit() const;            // 1 in I
    bool same_ideal(const Ideal& o) const;
    bool contains_ideal(const Ideal& o) const;   // o subseteq this

    Ideal with_extra(const MPoly& f) const;
    Ideal plus(const Ideal& o) const;            // ideal sum

    std::string str() const;         // canonical generator list text

private:
    FieldPtr k_;
    VarsPtr vars_;
    std::vector<MPoly> gens_;
    mutable std::mutex mu_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;

public:
    Ideal(const Ideal& o) : k_(o.k_), vars_(o.vars_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            k_ = o.k_;
            vars_ = o.vars_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(o.mu_);
            cache_ = o.cache_;
        }
        return *this;
    }
};

/// Remainder of f on division by the basis (zero iff f in the ideal).
MPoly normal_form(const MPoly& f, const GroebnerBasis& gb);

/// I cap k[keep]; result lives in the restricted ambient (keep variables, in
/// their original order).
Ideal eliminate(const Ideal& I, const std::vector<int>& keep);
/// Same, but the result stays in the full ambient ring.
Ideal eliminate_in_place(const Ideal& I, const std::vector<int>& keep);

Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const MPoly& f);
Ideal quotient(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const MPoly& f);
Ideal saturate(const Ideal& I, const Ideal& J);

/// Krull dimension of V(I); -1 for the empty variety.
int dimension(const Ideal& I);

/// Radical membership (Rabinowitsch trick): f in sqrt(I)?
bool radical_contains(const Ideal& I, const MPoly& f);

/// Ideal cutting out V(A) union V(B) (pairwise generator products); the
/// unit ideal acts as the empty locus.
Ideal locus_union(const Ideal& A, const Ideal& B);

/// Map an ideal into a bigger ambient ring (variables by name).
Ideal embed(const Ideal& I, const VarsPtr& big);
/// Rename variables via index map into a new ambient.
Ideal remap(const Ideal& I, const VarsPtr& new_vars, const std::vector<int>& idx_map);
/// Pullback along a polynomial map: generators composed with the map
/// components (substitute var i by map[i]).
Ideal pullback(const Ideal& I, const std::vector<MPoly>& map);
/// Coefficient change.
Ideal map_coeffs(const Ideal& I, const FieldPtr& k2,
                 const std::function<FieldElem(const FieldElem&)>& fn);

} // namespace dirgal

#endif
