/// field.hpp -- exact coefficient fields: Q and F_{p^m} with a stored
/// irreducible modulus.  Elements are immutable values; all operations are
/// pure and safe to call concurrently.
#ifndef DIRGAL_FIELD_HPP
#define DIRGAL_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dirgal {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A value in Q or in F_{p^m}.  Finite-field elements are coefficient
/// vectors over F_p in the power basis of the field generator, length m,
/// little-endian (c[0] is the constant term).
class FieldElem {
public:
    FieldElem() = default;

    const FieldPtr& field() const { return k_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rat() const { return q_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Canonical total order (for deterministic container keys / printing).
    bool operator<(const FieldElem& o) const;

private:
    friend class Field;
    FieldPtr k_;
    mpq_class q_;                      // used when field is Q
    std::vector<std::uint64_t> c_;     // used when field is finite
};

/// Field descriptor + arithmetic.  Construct through the static factories;
/// instances are shared immutable.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { rationals, finite };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    /// F_{p^m} with the canonical modulus (deterministic search, smallest
    /// coefficient vector); gen defaults to "t".
    static FieldPtr extension(std::uint64_t p, unsigned m,
                              const std::string& gen = "t");
    /// F_{p^m} with an explicitly given monic modulus (length m+1,
    /// little-endian); verified irreducible.
    static FieldPtr extension_with_modulus(std::uint64_t p,
                                           std::vector<std::uint64_t> modulus,
                                           const std::string& gen = "t");
    /// Parse "Q", "F5", "F9:t^2+1".
    static FieldPtr parse(const std::string& descriptor);
    std::string descriptor() const;

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_finite() const { return kind_ == Kind::finite; }
    std::uint64_t characteristic() const { return kind_ == Kind::rationals ? 0 : p_; }
    std::uint64_t p() const { return p_; }
    unsigned degree() const { return deg_; }                 // m
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    const std::string& generator_name() const { return gen_; }
    /// p^m as mpz (may not fit 64 bits).
    mpz_class order() const;
    /// p^m when it fits uint64, else nullopt.
    std::optional<std::uint64_t> order_u64() const;

    bool same(const Field& o) const;

    // --- element construction ---
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long v) const;
    FieldElem from_mpz(const mpz_class& v) const;
    FieldElem from_mpq(const mpq_class& v) const;            // rationals only
    FieldElem generator() const;                              // finite, m>1
    FieldElem from_coeffs(std::vector<std::uint64_t> c) const; // finite
    /// Element with enumeration index i in [0, p^m): base-p digits.
    FieldElem elem_at(std::uint64_t i) const;
    std::uint64_t index_of(const FieldElem& a) const;

    // --- arithmetic ---
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const;                  // a != 0
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(const FieldElem& a, const mpz_class& n) const;
    FieldElem pow_u(const FieldElem& a, std::uint64_t n) const;
    /// x -> x^(p^e): e-fold Frobenius (finite fields).
    FieldElem frobenius(const FieldElem& a, unsigned e = 1) const;
    /// Square root if one exists.
    std::optional<FieldElem> sqrt(const FieldElem& a) const;

    std::string to_string(const FieldElem& a) const;
    /// Parse an element: integer literal, or polynomial in the generator
    /// ("t+1", "2*t^2+1"); rationals also accept "a/b".
    FieldElem parse_elem(const std::string& text) const;

    ~Field() = default;

private:
    Field() = default;
    Kind kind_ = Kind::rationals;
    std::uint64_t p_ = 0;
    unsigned deg_ = 1;
    std::vector<std::uint64_t> mod_;   // monic, length deg_+1 when deg_>1
    std::string gen_ = "t";

    std::uint64_t addp(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t subp(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mulp(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t invp(std::uint64_t a) const;
    std::vector<std::uint64_t> poly_mulmod(const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) const;
};

/// Monic irreducible polynomial of degree m over F_p found by deterministic
/// search (coefficient vectors enumerated in increasing base-p value).
std::vector<std::uint64_t> canonical_modulus(std::uint64_t p, unsigned m);
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& f);

/// Error type used across the toolkit; carries the failing stage for the
/// CLI's error serialization.
class Error : public std::exception {
public:
    Error(std::string stage, std::string detail)
        : stage_(std::move(stage)), detail_(std::move(detail)),
          what_(stage_ + ": " + detail_) {}
    const char* what() const noexcept override { return what_.c_str(); }
    const std::string& stage() const { return stage_; }
    const std::string& detail() const { return detail_; }

private:
    std::string stage_, detail_, what_;
};

} // namespace dirgal

#endif
