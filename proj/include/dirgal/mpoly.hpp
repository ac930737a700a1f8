/// mpoly.hpp -- sparse exact multivariate polynomials over a Field, with the
/// text syntax used by the JSON artifacts (identifiers, ^, *, +, -, integer
/// literals, parentheses).
#ifndef DIRGAL_MPOLY_HPP
#define DIRGAL_MPOLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dirgal/field.hpp"

namespace dirgal {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;
using Exps = std::vector<std::uint32_t>;

VarsPtr make_vars(Vars names);
/// "x0".."x{n-1}" (or any prefix).
VarsPtr numbered_vars(const std::string& prefix, int n);
VarsPtr concat_vars(const VarsPtr& a, const VarsPtr& b);
int var_index(const Vars& vars, const std::string& name); // -1 if absent

/// Monomial order used by the Groebner machinery.
struct MonoOrder {
    enum class Kind { lex, grevlex, elim };
    Kind kind = Kind::grevlex;
    std::vector<char> elim_mask;    // kind==elim: 1 = variable to eliminate

    static MonoOrder lex() { return {Kind::lex, {}}; }
    static MonoOrder grevlex() { return {Kind::grevlex, {}}; }
    static MonoOrder elim(std::vector<char> mask) { return {Kind::elim, std::move(mask)}; }

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Exps& a, const Exps& b) const;
    std::string key() const;        // cache key
};

class MPoly {
public:
    MPoly() = default;
    MPoly(FieldPtr k, VarsPtr vars);
    static MPoly zero(FieldPtr k, VarsPtr vars) { return MPoly(std::move(k), std::move(vars)); }
    static MPoly constant(FieldPtr k, VarsPtr vars, const FieldElem& c);
    static MPoly from_int(FieldPtr k, VarsPtr vars, long v);
    static MPoly variable(FieldPtr k, VarsPtr vars, int idx);
    static MPoly monomial(FieldPtr k, VarsPtr vars, Exps e, const FieldElem& c);
    static MPoly parse(const std::string& text, FieldPtr k, VarsPtr vars);

    const FieldPtr& field() const { return k_; }
    const VarsPtr& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    const std::map<Exps, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const;   // the coefficient of 1 (0 if absent)

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    MPoly scaled(const FieldElem& c) const;
    MPoly pow_u(unsigned e) const;

    int total_degree() const;           // -1 for zero
    int degree_in(int var) const;       // -1 for zero
    bool uses_var(int var) const;
    std::vector<int> used_vars() const;

    MPoly derivative(int var) const;
    /// Full substitution: result over the common vars of args (all args must
    /// share field and vars); args.size() == nvars().
    MPoly compose(const std::vector<MPoly>& args) const;
    /// Partial evaluation var -> value, ambient unchanged.
    MPoly substitute(int var, const FieldElem& v) const;
    /// Move to a new ambient: old var i becomes new var idx_map[i] (>=0).
    MPoly remap(const VarsPtr& new_vars, const std::vector<int>& idx_map) const;
    /// Change coefficient field through an element map.
    MPoly map_coeffs(const FieldPtr& k2,
                     const std::function<FieldElem(const FieldElem&)>& fn) const;
    /// Collect as univariate in `var` with MPoly coefficients (dense,
    /// little-endian).
    std::vector<MPoly> coeffs_in(int var) const;
    /// Evaluate all variables.
    FieldElem eval(const std::vector<FieldElem>& point) const;

    /// Leading term data w.r.t. an order.
    const Exps* leading_exps(const MonoOrder& ord) const;  // nullptr when zero
    MPoly monic(const MonoOrder& ord) const;

    std::string str() const;            // canonical text (graded, then lex, desc)

private:
    FieldPtr k_;
    VarsPtr vars_;
    std::map<Exps, FieldElem> terms_;   // no zero coefficients stored
    void add_term(const Exps& e, const FieldElem& c);
    friend MPoly mpoly_mul_term(const MPoly&, const Exps&, const FieldElem&);
};

MPoly mpoly_mul_term(const MPoly& f, const Exps& e, const FieldElem& c);

/// Exact division f / g when g divides f (nullopt otherwise).
std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g);
/// Multivariate gcd (primitive PRS; monic-normalized over the field).
MPoly mpoly_gcd(const MPoly& f, const MPoly& g);
/// Squarefree part via gcd with derivatives (handles p-th power collapse).
MPoly squarefree_part(const MPoly& f);
/// Exact polynomial square root, if it exists.
std::optional<MPoly> mpoly_sqrt(const MPoly& f);

} // namespace dirgal

#endif
