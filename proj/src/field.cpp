#include "dirgal/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dirgal {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw Error("field", "not invertible mod p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

using Vec = std::vector<std::uint64_t>;

void trim(Vec& v) { while (!v.empty() && v.back() == 0) v.pop_back(); }

// dense arithmetic over F_p for modulus work
Vec poly_mul_p(const Vec& a, const Vec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

Vec poly_mod_p(Vec a, const Vec& f, std::uint64_t p) {
    // f monic
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (c) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::uint64_t sub = mulmod_u64(c, f[i], p);
                std::uint64_t& t = a[shift + i];
                t = (t + p - sub) % p;
            }
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

Vec poly_powmod_p(Vec base, mpz_class e, const Vec& f, std::uint64_t p) {
    Vec r{1};
    base = poly_mod_p(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod_p(poly_mul_p(r, base, p), f, p);
        base = poly_mod_p(poly_mul_p(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

Vec poly_gcd_p(Vec a, Vec b, std::uint64_t p) {
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::uint64_t lcinv = invmod_u64(b.back(), p);
        Vec bm = b;
        for (auto& c : bm) c = mulmod_u64(c, lcinv, p);
        a = poly_mod_p(std::move(a), bm, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        std::uint64_t lcinv = invmod_u64(a.back(), p);
        for (auto& c : a) c = mulmod_u64(c, lcinv, p);
    }
    return a;
}

} // namespace

bool is_irreducible_mod_p(std::uint64_t p, const Vec& f) {
    // Rabin: x^(p^m) = x mod f, and gcd(x^(p^(m/l)) - x, f) = 1 for prime l | m.
    Vec g = f;
    trim(g);
    if (g.size() < 2) return false;
    unsigned m = static_cast<unsigned>(g.size() - 1);
    if (g.back() != 1) return false;  // expect monic
    mpz_class pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
    Vec x{0, 1};
    Vec xq = poly_powmod_p(x, pm, g, p);
    // xq - x must be 0 mod f
    Vec diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (unsigned l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool lprime = true;
        for (unsigned d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        mpz_class pml;
        mpz_ui_pow_ui(pml.get_mpz_t(), p, m / l);
        Vec xe = poly_powmod_p(x, pml, g, p);
        Vec d2 = xe;
        if (d2.size() < 2) d2.resize(2, 0);
        d2[1] = (d2[1] + p - 1) % p;
        trim(d2);
        if (d2.empty()) return false;      // x^(p^(m/l)) = x: proper subfield full of roots
        if (!poly_gcd_p(d2, g, p).empty() && poly_gcd_p(d2, g, p).size() > 1) return false;
        Vec gg = poly_gcd_p(d2, g, p);
        if (gg.size() != 1) return false;
    }
    return true;
}

Vec canonical_modulus(std::uint64_t p, unsigned m) {
    // enumerate lower-coefficient vectors by increasing base-p value
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, m);
    for (mpz_class n = 0; n < bound; ++n) {
        Vec f(m + 1, 0);
        mpz_class v = n;
        for (unsigned i = 0; i < m; ++i) {
            mpz_class digit = v % static_cast<unsigned long>(p);
            f[i] = digit.get_ui();
            v /= static_cast<unsigned long>(p);
        }
        f[m] = 1;
        if (is_irreducible_mod_p(p, f)) return f;
    }
    throw Error("field", "no irreducible modulus found (unreachable)");
}

// --- FieldElem ---

bool FieldElem::is_zero() const {
    if (!k_) return true;
    if (k_->is_rationals()) return q_ == 0;
    for (auto c : c_) if (c) return false;
    return true;
}

bool FieldElem::is_one() const {
    if (!k_) return false;
    if (k_->is_rationals()) return q_ == 1;
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) if (c_[i]) return false;
    return true;
}

bool FieldElem::operator==(const FieldElem& o) const {
    if (!k_ || !o.k_) return is_zero() && o.is_zero();
    if (k_->is_rationals() != o.k_->is_rationals()) return false;
    if (k_->is_rationals()) return q_ == o.q_;
    return c_ == o.c_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    if (k_ && k_->is_rationals()) return q_ < o.q_;
    // compare as base-p value, high digits first
    const auto& a = c_;
    const auto& b = o.c_;
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

// --- Field ---

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = Kind::rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("field", "characteristic must be prime: " + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::finite;
    f->p_ = p;
    f->deg_ = 1;
    return f;
}

FieldPtr Field::extension(std::uint64_t p, unsigned m, const std::string& gen) {
    if (m == 1) return prime(p);
    return extension_with_modulus(p, canonical_modulus(p, m), gen);
}

FieldPtr Field::extension_with_modulus(std::uint64_t p, Vec modulus, const std::string& gen) {
    if (!is_prime_u64(p)) throw Error("field", "characteristic must be prime: " + std::to_string(p));
    trim(modulus);
    if (modulus.size() < 2) throw Error("field", "modulus must be non-constant");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw Error("field", "modulus must be monic");
    if (!is_irreducible_mod_p(p, modulus))
        throw Error("field", "modulus is reducible over F_" + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::finite;
    f->p_ = p;
    f->deg_ = static_cast<unsigned>(modulus.size() - 1);
    f->mod_ = std::move(modulus);
    f->gen_ = gen;
    return f;
}

mpz_class Field::order() const {
    if (kind_ == Kind::rationals) throw Error("field", "infinite field has no order");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p_, deg_);
    return r;
}

std::optional<std::uint64_t> Field::order_u64() const {
    mpz_class r = order();
    if (!r.fits_ulong_p()) return std::nullopt;
    return static_cast<std::uint64_t>(r.get_ui());
}

bool Field::same(const Field& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::rationals) return true;
    return p_ == o.p_ && deg_ == o.deg_ && mod_ == o.mod_;
}

FieldElem Field::zero() const {
    FieldElem e;
    e.k_ = shared_from_this();
    if (kind_ == Kind::finite) e.c_.assign(deg_, 0);
    return e;
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long v) const {
    FieldElem e = zero();
    if (kind_ == Kind::rationals) {
        e.q_ = v;
    } else {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        e.c_[0] = static_cast<std::uint64_t>(r);
    }
    return e;
}

FieldElem Field::from_mpz(const mpz_class& v) const {
    FieldElem e = zero();
    if (kind_ == Kind::rationals) {
        e.q_ = v;
    } else {
        mpz_class r = v % static_cast<unsigned long>(p_);
        if (r < 0) r += static_cast<unsigned long>(p_);
        e.c_[0] = r.get_ui();
    }
    return e;
}

FieldElem Field::from_mpq(const mpq_class& v) const {
    if (kind_ != Kind::rationals) {
        // lift a rational with denominator invertible mod p
        mpz_class num = v.get_num(), den = v.get_den();
        FieldElem n = from_mpz(num), d = from_mpz(den);
        if (d.is_zero()) throw Error("field", "denominator divisible by p");
        return mul(n, inv(d));
    }
    FieldElem e = zero();
    e.q_ = v;
    return e;
}

FieldElem Field::generator() const {
    if (kind_ != Kind::finite || deg_ < 2) throw Error("field", "no generator in this field");
    FieldElem e = zero();
    e.c_[1] = 1;
    return e;
}

FieldElem Field::from_coeffs(Vec c) const {
    if (kind_ != Kind::finite) throw Error("field", "coefficient vectors are for finite fields");
    c.resize(deg_, 0);
    for (auto& x : c) x %= p_;
    FieldElem e = zero();
    e.c_ = std::move(c);
    return e;
}

FieldElem Field::elem_at(std::uint64_t i) const {
    if (kind_ != Kind::finite) throw Error("field", "enumeration needs a finite field");
    FieldElem e = zero();
    for (unsigned d = 0; d < deg_ && i; ++d) {
        e.c_[d] = i % p_;
        i /= p_;
    }
    if (i) throw Error("field", "element index out of range");
    return e;
}

std::uint64_t Field::index_of(const FieldElem& a) const {
    std::uint64_t idx = 0;
    for (unsigned d = deg_; d-- > 0;) idx = idx * p_ + (d < a.c_.size() ? a.c_[d] : 0);
    return idx;
}

std::uint64_t Field::addp(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
std::uint64_t Field::subp(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
std::uint64_t Field::mulp(std::uint64_t a, std::uint64_t b) const { return mulmod_u64(a, b, p_); }
std::uint64_t Field::invp(std::uint64_t a) const { return invmod_u64(a, p_); }

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem e = zero();
    if (kind_ == Kind::rationals) { e.q_ = a.q_ + b.q_; return e; }
    for (unsigned i = 0; i < deg_; ++i) e.c_[i] = addp(a.c_[i], b.c_[i]);
    return e;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem e = zero();
    if (kind_ == Kind::rationals) { e.q_ = a.q_ - b.q_; return e; }
    for (unsigned i = 0; i < deg_; ++i) e.c_[i] = subp(a.c_[i], b.c_[i]);
    return e;
}

FieldElem Field::neg(const FieldElem& a) const { return sub(zero(), a); }

Vec Field::poly_mulmod(const Vec& a, const Vec& b) const {
    Vec r = poly_mul_p(a, b, p_);
    if (deg_ > 1) r = poly_mod_p(std::move(r), mod_, p_);
    else if (!r.empty()) r.resize(1);
    r.resize(deg_, 0);
    return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    FieldElem e = zero();
    if (kind_ == Kind::rationals) { e.q_ = a.q_ * b.q_; return e; }
    if (deg_ == 1) { e.c_[0] = mulp(a.c_[0], b.c_[0]); return e; }
    e.c_ = poly_mulmod(a.c_, b.c_);
    return e;
}

FieldElem Field::inv(const FieldElem& a) const {
    if (a.is_zero()) throw Error("field", "division by zero");
    FieldElem e = zero();
    if (kind_ == Kind::rationals) { e.q_ = 1 / a.q_; return e; }
    if (deg_ == 1) { e.c_[0] = invp(a.c_[0]); return e; }
    // inverse by a^(p^m - 2)
    mpz_class n = order() - 2;
    return pow(a, n);
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem Field::pow(const FieldElem& a, const mpz_class& n) const {
    if (n < 0) return pow(inv(a), -n);
    FieldElem r = one(), base = a;
    mpz_class e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem Field::pow_u(const FieldElem& a, std::uint64_t n) const {
    return pow(a, mpz_class(static_cast<unsigned long>(n)));
}

FieldElem Field::frobenius(const FieldElem& a, unsigned e) const {
    if (kind_ != Kind::finite) throw Error("field", "Frobenius needs a finite field");
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), p_, e);
    return pow(a, n);
}

std::optional<FieldElem> Field::sqrt(const FieldElem& a) const {
    if (a.is_zero()) return zero();
    if (kind_ == Kind::rationals) {
        mpz_class num = a.q_.get_num(), den = a.q_.get_den();
        if (num < 0) return std::nullopt;
        mpz_class rn, rd;
        if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2)) return std::nullopt;
        if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2)) return std::nullopt;
        FieldElem e = zero();
        e.q_ = mpq_class(rn) / mpq_class(rd);
        return e;
    }
    if (p_ == 2) {
        // squaring is bijective: sqrt = a^(p^m / 2) = a^(2^(m-1)) iterated Frobenius inverse
        mpz_class n = order() / 2;
        return pow(a, n);
    }
    mpz_class q = order();
    FieldElem t = pow(a, (q - 1) / 2);
    if (!t.is_one()) return std::nullopt;
    if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
        FieldElem r = pow(a, (q + 1) / 4);
        return r;
    }
    // Tonelli-Shanks with deterministic non-residue search
    mpz_class s = q - 1;
    unsigned e2 = 0;
    while (mpz_even_p(s.get_mpz_t())) { s /= 2; ++e2; }
    FieldElem z = zero();
    std::uint64_t lim = order_u64().value_or(1u << 20);
    bool found = false;
    for (std::uint64_t i = 1; i < lim; ++i) {
        z = elem_at(i);
        if (!pow(z, (q - 1) / 2).is_one()) { found = true; break; }
    }
    if (!found) return std::nullopt;
    FieldElem c = pow(z, s);
    FieldElem x = pow(a, (s + 1) / 2);
    FieldElem b = pow(a, s);
    unsigned m = e2;
    while (!b.is_one()) {
        FieldElem t2 = b;
        unsigned i = 0;
        while (!t2.is_one()) { t2 = mul(t2, t2); ++i; }
        FieldElem cexp = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) cexp = mul(cexp, cexp);
        x = mul(x, cexp);
        c = mul(cexp, cexp);
        b = mul(b, c);
        m = i;
    }
    return x;
}

std::string Field::to_string(const FieldElem& a) const {
    if (kind_ == Kind::rationals) return a.q_.get_str();
    if (deg_ == 1) return std::to_string(a.c_.empty() ? 0 : a.c_[0]);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = deg_; i-- > 0;) {
        std::uint64_t c = i < a.c_.size() ? a.c_[i] : 0;
        if (!c) continue;
        if (!first) os << "+";
        if (i == 0) { os << c; }
        else {
            if (c != 1) os << c << "*";
            os << gen_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FieldElem Field::parse_elem(const std::string& text) const {
    // tiny parser: sum of terms c, c*t^k, t^k, with optional leading '-'
    std::size_t i = 0;
    auto skipws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_term = [&]() -> FieldElem {
        skipws();
        bool neg = false;
        while (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') neg = !neg;
            ++i;
            skipws();
        }
        mpz_class coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            coeff = mpz_class(text.substr(i, j - i));
            i = j;
            have_coeff = true;
            skipws();
            if (i < text.size() && text[i] == '/') {
                ++i;
                skipws();
                std::size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                mpz_class den(text.substr(i, k - i));
                i = k;
                FieldElem e = from_mpq(mpq_class(coeff) / mpq_class(den));
                return neg ? this->neg(e) : e;
            }
            if (i < text.size() && text[i] == '*') { ++i; skipws(); }
        }
        unsigned expo = 0;
        if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            std::string name = text.substr(i, j - i);
            if (name != gen_) throw Error("field", "unknown symbol in element: " + name);
            i = j;
            expo = 1;
            skipws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skipws();
                std::size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                expo = static_cast<unsigned>(std::stoul(text.substr(i, k - i)));
                i = k;
            }
        } else if (!have_coeff) {
            throw Error("field", "cannot parse element: " + text);
        }
        FieldElem e = from_mpz(coeff);
        if (expo) {
            if (kind_ != Kind::finite || deg_ < 2)
                throw Error("field", "generator symbol in a prime/rational field");
            e = mul(e, pow_u(generator(), expo));
        }
        return neg ? this->neg(e) : e;
    };
    FieldElem acc = zero();
    skipws();
    while (i < text.size()) {
        acc = add(acc, parse_term());
        skipws();
    }
    return acc;
}

FieldPtr Field::parse(const std::string& d) {
    if (d == "Q") return rationals();
    if (d.size() >= 2 && d[0] == 'F') {
        std::size_t colon = d.find(':');
        std::string num = colon == std::string::npos ? d.substr(1) : d.substr(1, colon - 1);
        mpz_class n(num);
        // n = p^m: find p as the smallest prime factor
        std::uint64_t nv = n.get_ui();
        std::uint64_t p = 0;
        for (std::uint64_t c = 2; c * c <= nv; ++c)
            if (nv % c == 0) { p = c; break; }
        if (p == 0) p = nv;
        unsigned m = 0;
        std::uint64_t t = nv;
        while (t > 1) {
            if (t % p) throw Error("field", "field size not a prime power: " + d);
            t /= p;
            ++m;
        }
        if (m == 0) throw Error("field", "bad field descriptor: " + d);
        if (colon == std::string::npos) {
            return m == 1 ? prime(p) : extension(p, m);
        }
        // explicit modulus text like t^2+1: parse over F_p[t]
        std::string modtxt = d.substr(colon + 1);
        // parse as dense vector: reuse element parser of a scratch big-enough field is
        // circular; parse manually: terms c*t^k
        Vec mod(m + 1, 0);
        std::size_t i = 0;
        auto skipws = [&] { while (i < modtxt.size() && std::isspace(static_cast<unsigned char>(modtxt[i]))) ++i; };
        while (i < modtxt.size()) {
            skipws();
            long sign = 1;
            while (i < modtxt.size() && (modtxt[i] == '+' || modtxt[i] == '-')) {
                if (modtxt[i] == '-') sign = -sign;
                ++i;
                skipws();
            }
            long coeff = 1;
            bool have_c = false;
            if (i < modtxt.size() && std::isdigit(static_cast<unsigned char>(modtxt[i]))) {
                std::size_t j = i;
                while (j < modtxt.size() && std::isdigit(static_cast<unsigned char>(modtxt[j]))) ++j;
                coeff = std::stol(modtxt.substr(i, j - i));
                i = j;
                have_c = true;
                skipws();
                if (i < modtxt.size() && modtxt[i] == '*') { ++i; skipws(); }
            }
            unsigned expo = 0;
            if (i < modtxt.size() && std::isalpha(static_cast<unsigned char>(modtxt[i]))) {
                std::size_t j = i;
                while (j < modtxt.size() && std::isalnum(static_cast<unsigned char>(modtxt[j]))) ++j;
                i = j;
                expo = 1;
                skipws();
                if (i < modtxt.size() && modtxt[i] == '^') {
                    ++i;
                    skipws();
                    std::size_t k = i;
                    while (k < modtxt.size() && std::isdigit(static_cast<unsigned char>(modtxt[k]))) ++k;
                    expo = static_cast<unsigned>(std::stoul(modtxt.substr(i, k - i)));
                    i = k;
                }
            } else if (!have_c) {
                throw Error("field", "bad modulus text: " + modtxt);
            }
            if (expo > m) throw Error("field", "modulus degree exceeds extension degree");
            long v = ((sign * coeff) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p);
            mod[expo] = (mod[expo] + static_cast<std::uint64_t>(v)) % p;
            skipws();
        }
        return extension_with_modulus(p, mod);
    }
    throw Error("field", "bad field descriptor: " + d);
}

std::string Field::descriptor() const {
    if (kind_ == Kind::rationals) return "Q";
    if (deg_ == 1) return "F" + std::to_string(p_);
    std::ostringstream os;
    os << "F" << order().get_str() << ":";
    bool first = true;
    for (unsigned i = deg_ + 1; i-- > 0;) {
        std::uint64_t c = i < mod_.size() ? mod_[i] : 0;
        if (!c) continue;
        if (!first) os << "+";
        if (i == 0) os << c;
        else {
            if (c != 1) os << c << "*";
            os << gen_;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace dirgal
