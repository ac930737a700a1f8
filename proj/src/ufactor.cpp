#include "dirgal/ufactor.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace dirgal {

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    FieldElem inv = k->inv(lc());
    for (auto& x : r.c) x = k->mul(x, inv);
    return r;
}

FieldElem UPoly::eval(const FieldElem& x) const {
    FieldElem acc = k->zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = k->add(k->mul(acc, x), c[i]);
    return acc;
}

bool UPoly::operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!(c[i] == o.c[i])) return false;
    return true;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = k->to_string(c[i]);
        if (i == 0) { os << cs; continue; }
        if (cs != "1") os << "(" << cs << ")*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

UPoly up_add(const UPoly& a, const UPoly& b) {
    UPoly r(a.k);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.k->zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        FieldElem x = i < a.c.size() ? a.c[i] : a.k->zero();
        FieldElem y = i < b.c.size() ? b.c[i] : a.k->zero();
        r.c[i] = a.k->add(x, y);
    }
    r.trim();
    return r;
}

UPoly up_sub(const UPoly& a, const UPoly& b) {
    UPoly r(a.k);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.k->zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        FieldElem x = i < a.c.size() ? a.c[i] : a.k->zero();
        FieldElem y = i < b.c.size() ? b.c[i] : a.k->zero();
        r.c[i] = a.k->sub(x, y);
    }
    r.trim();
    return r;
}

UPoly up_mul(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.k);
    UPoly r(a.k);
    r.c.assign(a.c.size() + b.c.size() - 1, a.k->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = a.k->add(r.c[i + j], a.k->mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

UPoly up_scale(const UPoly& a, const FieldElem& s) {
    UPoly r(a.k);
    if (s.is_zero()) return r;
    for (const auto& x : a.c) r.c.push_back(a.k->mul(x, s));
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> up_divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error("ufactor", "division by zero polynomial");
    UPoly q(a.k), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, a.k->zero());
    FieldElem binv = a.k->inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        FieldElem coef = a.k->mul(r.lc(), binv);
        q.c[shift] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            r.c[shift + i] = a.k->sub(r.c[shift + i], a.k->mul(coef, b.c[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

UPoly up_gcd(const UPoly& a0, const UPoly& b0) {
    UPoly a = a0, b = b0;
    while (!b.is_zero()) {
        a = up_divmod(a, b).second;
        std::swap(a, b);
    }
    return a.monic();
}

UPoly up_derivative(const UPoly& a) {
    UPoly r(a.k);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c.push_back(a.k->mul(a.c[i], a.k->from_int(static_cast<long>(i))));
    r.trim();
    return r;
}

UPoly up_powmod(const UPoly& base, const mpz_class& e, const UPoly& mod) {
    UPoly r(base.k);
    r.c = {base.k->one()};
    UPoly b = up_divmod(base, mod).second;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = up_divmod(up_mul(r, b), mod).second;
        b = up_divmod(up_mul(b, b), mod).second;
        n >>= 1;
    }
    return r;
}

UPoly upoly_from_mpoly(const MPoly& f, int var) {
    UPoly r(f.field());
    r.c.assign(static_cast<std::size_t>(std::max(0, f.degree_in(var))) + 1, f.field()->zero());
    for (const auto& [e, coef] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && static_cast<int>(i) != var)
                throw Error("ufactor", "polynomial is not univariate in the chosen variable");
        r.c[e[var]] = coef;
    }
    r.trim();
    return r;
}

MPoly upoly_to_mpoly(const UPoly& f, const VarsPtr& vars, int var) {
    MPoly r(f.k, vars);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        Exps e(vars->size(), 0);
        e[var] = static_cast<std::uint32_t>(i);
        r = r + MPoly::monomial(f.k, vars, e, f.c[i]);
    }
    return r;
}

namespace {

std::uint64_t upoly_hash(const UPoly& f) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.deg()));
    for (const auto& x : f.c) {
        if (f.k->is_finite()) mix(f.k->index_of(x));
        else mix(std::hash<std::string>{}(x.rat().get_str()));
    }
    return h;
}

// squarefree decomposition over a finite field (handles p-th powers)
void sfd_finite(const UPoly& f, int mult, std::vector<std::pair<UPoly, int>>& out) {
    const FieldPtr& k = f.k;
    UPoly d = up_derivative(f);
    if (d.is_zero()) {
        // f = g(x^p)
        unsigned p = static_cast<unsigned>(k->p());
        UPoly g(k);
        g.c.assign(f.c.size() / p + 1, k->zero());
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            if (f.c[i].is_zero()) continue;
            if (i % p) throw Error("ufactor", "inconsistent p-power structure");
            FieldElem root = k->degree() > 1 ? k->frobenius(f.c[i], k->degree() - 1) : f.c[i];
            g.c[i / p] = root;
        }
        g.trim();
        sfd_finite(g, mult * static_cast<int>(p), out);
        return;
    }
    UPoly c = up_gcd(f, d);
    UPoly w = up_divmod(f, c).first;
    int i = 1;
    while (w.deg() > 0) {
        UPoly y = up_gcd(w, c);
        UPoly fac = up_divmod(w, y).first;
        if (fac.deg() > 0) out.emplace_back(fac.monic(), mult * i);
        w = y;
        c = up_divmod(c, y).first;
        ++i;
    }
    if (c.deg() > 0) sfd_finite(c, mult, out);
}

// distinct-degree on monic squarefree input
std::vector<std::pair<UPoly, int>> ddf(const UPoly& f) {
    const FieldPtr& k = f.k;
    std::vector<std::pair<UPoly, int>> out;
    mpz_class q = k->order();
    UPoly x(k);
    x.c = {k->zero(), k->one()};
    UPoly h = up_divmod(x, f).second;
    UPoly rest = f;
    int d = 0;
    while (rest.deg() > 0) {
        ++d;
        if (2 * d > rest.deg()) {
            out.emplace_back(rest.monic(), rest.deg());
            break;
        }
        h = up_powmod(h, q, rest);
        UPoly g = up_gcd(up_sub(h, up_divmod(x, rest).second), rest);
        if (g.deg() > 0) {
            out.emplace_back(g.monic(), d);
            rest = up_divmod(rest, g).first;
            h = up_divmod(h, rest).second;
        }
    }
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus), deterministic RNG
void edf(const UPoly& f, int d, std::mt19937_64& rng, std::vector<UPoly>& out) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    const FieldPtr& k = f.k;
    mpz_class q = k->order();
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    std::uint64_t nk = k->order_u64().value_or(0);
    for (int tries = 0; tries < 512; ++tries) {
        UPoly r(k);
        for (int i = 0; i < f.deg(); ++i) {
            std::uint64_t idx = nk ? rng() % nk : rng() % 997;
            r.c.push_back(k->elem_at(idx));
        }
        r.trim();
        if (r.is_zero()) continue;
        UPoly g = up_gcd(r, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(up_divmod(f, g).first, d, rng, out);
            return;
        }
        UPoly h(k);
        if (k->p() == 2) {
            // trace map r + r^2 + ... + r^(2^(dm-1)) over F_(2^m)
            unsigned em = k->degree() * static_cast<unsigned>(d);
            UPoly acc = up_divmod(r, f).second;
            UPoly term = acc;
            for (unsigned i = 1; i < em; ++i) {
                term = up_divmod(up_mul(term, term), f).second;
                acc = up_add(acc, term);
            }
            h = acc;
        } else {
            h = up_powmod(r, (qd - 1) / 2, f);
            h = up_sub(h, UPoly(k, {k->one()}));
        }
        UPoly g2 = up_gcd(h, f);
        if (g2.deg() > 0 && g2.deg() < f.deg()) {
            edf(g2, d, rng, out);
            edf(up_divmod(f, g2).first, d, rng, out);
            return;
        }
    }
    throw Error("ufactor", "equal-degree splitting failed to converge");
}

void sort_factors(std::vector<std::pair<UPoly, int>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (int i = a.first.deg(); i >= 0; --i) {
            if (!(a.first.c[i] == b.first.c[i])) return a.first.c[i] < b.first.c[i];
        }
        return a.second < b.second;
    });
}

UFactors factor_finite(const UPoly& f) {
    UFactors out;
    out.unit = f.lc();
    std::vector<std::pair<UPoly, int>> sf;
    sfd_finite(f.monic(), 1, sf);
    std::mt19937_64 rng(upoly_hash(f));
    for (const auto& [g, mult] : sf) {
        for (const auto& [h, d] : ddf(g)) {
            std::vector<UPoly> irr;
            edf(h, d, rng, irr);
            for (const auto& p : irr) out.factors.emplace_back(p, mult);
        }
    }
    sort_factors(out.factors);
    return out;
}

// ---------- rationals: Zassenhaus ----------

using ZV = std::vector<mpz_class>;

void ztrim(ZV& v) { while (!v.empty() && v.back() == 0) v.pop_back(); }

ZV zmul(const ZV& a, const ZV& b) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::optional<ZV> zdiv_exact(const ZV& a0, const ZV& b) {
    if (b.empty()) return std::nullopt;
    ZV a = a0;
    ztrim(a);
    if (a.empty()) return a;
    if (a.size() < b.size()) return std::nullopt;
    ZV q(a.size() - b.size() + 1, mpz_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class c = a.back() / b.back();
        if (c * b.back() != a.back()) return std::nullopt;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        if (!a.empty() && a.back() != 0) return std::nullopt;
        ztrim(a);
    }
    if (!a.empty()) return std::nullopt;
    ztrim(q);
    return q;
}

mpz_class zcontent(const ZV& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZV mod_centered(const ZV& a, const mpz_class& m) {
    ZV r = a;
    for (auto& c : r) {
        c %= m;
        if (c < 0) c += m;
        if (c * 2 > m) c -= m;
    }
    ztrim(r);
    return r;
}

UPoly upoly_from_z(const ZV& a, const FieldPtr& k) {
    UPoly r(k);
    for (const auto& c : a) r.c.push_back(k->from_mpz(c));
    r.trim();
    return r;
}

ZV z_from_upoly_modp(const UPoly& f) {
    ZV r;
    for (const auto& c : f.c)
        r.emplace_back(static_cast<unsigned long>(c.coeffs().empty() ? 0 : c.coeffs()[0]));
    ztrim(r);
    return r;
}

struct ZModPoly {
    static ZV norm(ZV r, const mpz_class& m) {
        for (auto& c : r) {
            c %= m;
            if (c < 0) c += m;
        }
        ztrim(r);
        return r;
    }
    static ZV mul(const ZV& a, const ZV& b, const mpz_class& m) { return norm(zmul(a, b), m); }
    static ZV add(const ZV& a, const ZV& b, const mpz_class& m) {
        ZV r = a;
        r.resize(std::max(a.size(), b.size()), mpz_class(0));
        for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return norm(std::move(r), m);
    }
    static ZV sub(const ZV& a, const ZV& b, const mpz_class& m) {
        ZV r = a;
        r.resize(std::max(a.size(), b.size()), mpz_class(0));
        for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
        return norm(std::move(r), m);
    }
    static std::pair<ZV, ZV> divmod_monic(const ZV& a0, const ZV& b, const mpz_class& m) {
        ZV a = norm(a0, m);
        ZV q;
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpz_class(0));
        while (!a.empty() && a.size() >= b.size()) {
            mpz_class c = a.back() % m;
            std::size_t shift = a.size() - b.size();
            q[shift] = c;
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[shift + i] -= c * b[i];
                a[shift + i] %= m;
                if (a[shift + i] < 0) a[shift + i] += m;
            }
            a.pop_back();
            ztrim(a);
        }
        ztrim(q);
        return {q, a};
    }
};

void bezout_mod_p(const ZV& g, const ZV& h, std::uint64_t p, ZV& s, ZV& t) {
    auto kp = Field::prime(p);
    UPoly a = upoly_from_z(g, kp), b = upoly_from_z(h, kp);
    UPoly sa(kp), sb(kp), ta(kp), tb(kp);
    sa.c = {kp->one()};
    tb.c = {kp->one()};
    while (!b.is_zero()) {
        auto [q, r] = up_divmod(a, b);
        UPoly ns = up_sub(sa, up_mul(q, sb));
        UPoly nt = up_sub(ta, up_mul(q, tb));
        a = b;
        b = r;
        sa = sb; sb = ns;
        ta = tb; tb = nt;
    }
    if (a.deg() != 0) throw Error("ufactor", "Hensel: factors not coprime mod p");
    FieldElem inv = kp->inv(a.c[0]);
    s = z_from_upoly_modp(up_scale(sa, inv));
    t = z_from_upoly_modp(up_scale(ta, inv));
}

// Quadratic Hensel lifting of f = g*h (g monic) from mod p to mod >= target.
// Invariant: s*g + t*h = 1 (mod m).  The update solves
// dg*h + dh*g = e with deg(dg) < deg(g) via t*e = q*g + r.
std::pair<ZV, ZV> hensel_lift(const ZV& f, ZV g, ZV h, std::uint64_t p,
                              const mpz_class& target) {
    ZV s, t;
    bezout_mod_p(g, h, p, s, t);
    mpz_class m = p;
    while (m < target) {
        mpz_class m2 = m * m;
        ZV e = ZModPoly::sub(f, zmul(g, h), m2);
        ZV te = ZModPoly::mul(t, e, m2);
        auto [q, r] = ZModPoly::divmod_monic(te, g, m2);
        ZV gn = ZModPoly::add(g, r, m2);
        ZV hn = ZModPoly::add(h, ZModPoly::add(ZModPoly::mul(s, e, m2),
                                               ZModPoly::mul(q, h, m2), m2), m2);
        // refresh Bezout: b = s*gn + t*hn - 1; t' = t - rem(t*b, gn);
        // s' = s - s*b - quo(t*b, gn)*hn
        ZV one{mpz_class(1)};
        ZV b = ZModPoly::sub(ZModPoly::add(ZModPoly::mul(s, gn, m2),
                                           ZModPoly::mul(t, hn, m2), m2), one, m2);
        ZV tb = ZModPoly::mul(t, b, m2);
        auto [q2, r2] = ZModPoly::divmod_monic(tb, gn, m2);
        ZV tn = ZModPoly::sub(t, r2, m2);
        ZV sn = ZModPoly::sub(ZModPoly::sub(s, ZModPoly::mul(s, b, m2), m2),
                              ZModPoly::mul(q2, hn, m2), m2);
        g = gn; h = hn; s = sn; t = tn;
        m = m2;
    }
    return {g, h};
}

std::vector<ZV> factor_z_squarefree(const ZV& f) {
    if (f.size() <= 2) return {f};
    static const std::uint64_t primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                           43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
                                           101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    std::uint64_t p = 0;
    for (std::uint64_t cand : primes) {
        if (mpz_fdiv_ui(f.back().get_mpz_t(), cand) == 0) continue;
        auto kp = Field::prime(cand);
        UPoly fp = upoly_from_z(f, kp);
        if (fp.deg() != static_cast<int>(f.size()) - 1) continue;
        if (up_gcd(fp, up_derivative(fp)).deg() == 0) { p = cand; break; }
    }
    if (!p) throw Error("ufactor", "no good prime found for Zassenhaus");
    auto kp = Field::prime(p);
    UFactors fpf = factor_finite(upoly_from_z(f, kp).monic());
    if (fpf.factors.size() == 1) return {f};

    mpz_class norm = 0;
    for (const auto& c : f) {
        mpz_class a = abs(c);
        if (a > norm) norm = a;
    }
    mpz_class bound = norm * abs(f.back());
    bound <<= static_cast<unsigned>(f.size() + 1);
    mpz_class target = p;
    while (target <= 2 * bound) target *= target;

    // lift the modular factors one against the running cofactor
    std::vector<ZV> lifted;
    {
        ZV work = f;
        std::vector<ZV> mods;
        for (const auto& [g, mult] : fpf.factors) mods.push_back(z_from_upoly_modp(g));
        for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
            UPoly W = upoly_from_z(work, kp);
            UPoly G = upoly_from_z(mods[i], kp);
            UPoly H = up_divmod(W, G).first;
            auto [Gl, Hl] = hensel_lift(work, mods[i], z_from_upoly_modp(H), p, target);
            lifted.push_back(Gl);
            work = mod_centered(Hl, target);
        }
        lifted.push_back(work);
    }

    std::vector<char> used(lifted.size(), 0);
    std::vector<ZV> out;
    ZV rem = f;
    auto attempt = [&](const std::vector<std::size_t>& pick) -> bool {
        ZV cand{rem.back()};
        for (std::size_t idx : pick) cand = ZModPoly::mul(cand, lifted[idx], target);
        cand = mod_centered(cand, target);
        mpz_class cont = zcontent(cand);
        ZV prim = cand;
        if (cont > 1)
            for (auto& c : prim) c /= cont;
        if (prim.size() <= 1) return false;
        auto q = zdiv_exact(rem, prim);
        if (!q) return false;
        out.push_back(prim);
        for (std::size_t idx : pick) used[idx] = 1;
        rem = *q;
        return true;
    };

    for (int card = 1;; ++card) {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) avail.push_back(i);
        if (avail.empty()) break;
        if (2 * card > static_cast<int>(avail.size())) {
            // remainder is irreducible
            mpz_class cont = zcontent(rem);
            ZV prim = rem;
            if (cont > 1)
                for (auto& c : prim) c /= cont;
            if (prim.back() < 0)
                for (auto& c : prim) c = -c;
            if (prim.size() > 1) out.push_back(prim);
            break;
        }
        // iterate card-subsets of avail
        std::vector<int> pos(card);
        std::iota(pos.begin(), pos.end(), 0);
        bool found = false;
        for (;;) {
            std::vector<std::size_t> pick;
            for (int i : pos) pick.push_back(avail[i]);
            if (attempt(pick)) { found = true; break; }
            int i = card - 1;
            while (i >= 0 && pos[i] == static_cast<int>(avail.size()) - card + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < card; ++j) pos[j] = pos[j - 1] + 1;
        }
        if (found) card = 0;   // restart at singletons
    }
    return out;
}

UFactors factor_rationals(const UPoly& f) {
    const FieldPtr& Q = f.k;
    UFactors out;
    out.unit = f.lc();
    mpz_class den = 1;
    for (const auto& c : f.c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rat().get_den().get_mpz_t());
    ZV z;
    for (const auto& c : f.c) z.push_back(mpq_class(c.rat() * den).get_num());
    ztrim(z);
    mpz_class cont = zcontent(z);
    if (cont > 1)
        for (auto& c : z) c /= cont;
    if (z.back() < 0)
        for (auto& c : z) c = -c;

    int xpow = 0;
    while (!z.empty() && z.front() == 0) {
        z.erase(z.begin());
        ++xpow;
    }
    if (xpow) {
        UPoly x(Q, {Q->zero(), Q->one()});
        out.factors.emplace_back(x, xpow);
    }
    if (z.size() <= 1) {
        sort_factors(out.factors);
        return out;
    }

    // Yun squarefree decomposition
    UPoly fz = upoly_from_z(z, Q);
    UPoly d = up_derivative(fz);
    UPoly a = up_gcd(fz, d);
    UPoly b = up_divmod(fz, a).first;
    UPoly c = up_divmod(d, a).first;
    UPoly dd = up_sub(c, up_derivative(b));
    int mult = 1;
    while (b.deg() > 0) {
        UPoly g = up_gcd(b, dd);
        if (g.deg() > 0) {
            ZV gz;
            mpz_class dn = 1;
            for (const auto& cc : g.c)
                mpz_lcm(dn.get_mpz_t(), dn.get_mpz_t(), cc.rat().get_den().get_mpz_t());
            for (const auto& cc : g.c) gz.push_back(mpq_class(cc.rat() * dn).get_num());
            ztrim(gz);
            mpz_class gc = zcontent(gz);
            if (gc > 1)
                for (auto& cc : gz) cc /= gc;
            if (gz.back() < 0)
                for (auto& cc : gz) cc = -cc;
            for (const auto& irr : factor_z_squarefree(gz))
                out.factors.emplace_back(upoly_from_z(irr, Q).monic(), mult);
        }
        b = up_divmod(b, g).first;
        dd = up_sub(up_divmod(dd, g).first, up_derivative(b));
        ++mult;
    }
    sort_factors(out.factors);
    return out;
}

} // namespace

UFactors factor_upoly(const UPoly& f) {
    if (f.is_zero()) throw Error("ufactor", "cannot factor the zero polynomial");
    if (f.deg() == 0) {
        UFactors out;
        out.unit = f.c[0];
        return out;
    }
    return f.k->is_finite() ? factor_finite(f) : factor_rationals(f);
}

std::vector<FieldElem> up_roots(const UPoly& f) {
    if (f.is_zero()) throw Error("ufactor", "zero polynomial has every root");
    std::vector<FieldElem> roots;
    for (const auto& [g, mult] : factor_upoly(f).factors) {
        if (g.deg() == 1) roots.push_back(f.k->neg(g.c[0]));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool up_irreducible(const UPoly& f) {
    if (f.deg() <= 0) return false;
    auto fac = factor_upoly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

FieldElem FieldEmbedding::map(const FieldElem& a) const {
    if (src->is_rationals()) return dst->from_mpq(a.rat());
    FieldElem acc = dst->zero();
    const auto& cs = a.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        acc = dst->mul(acc, gen_image);
        acc = dst->add(acc, dst->from_int(static_cast<long>(cs[i])));
    }
    return acc;
}

FieldEmbedding identity_embedding(const FieldPtr& k) {
    FieldEmbedding e;
    e.src = k;
    e.dst = k;
    e.gen_image = (k->is_finite() && k->degree() > 1) ? k->generator() : k->zero();
    return e;
}

FieldEmbedding embed_field(const FieldPtr& src, const FieldPtr& dst) {
    if (src->is_rationals() != dst->is_rationals())
        throw Error("ufactor", "cannot embed across characteristics");
    if (src->is_rationals()) return identity_embedding(src);
    if (src->p() != dst->p() || dst->degree() % src->degree() != 0)
        throw Error("ufactor",
                    "no embedding: " + src->descriptor() + " into " + dst->descriptor());
    FieldEmbedding e;
    e.src = src;
    e.dst = dst;
    if (src->degree() == 1) {
        e.gen_image = dst->zero();
        return e;
    }
    if (src->same(*dst)) return identity_embedding(src);
    UPoly mod(dst);
    for (auto c : src->modulus()) mod.c.push_back(dst->from_int(static_cast<long>(c)));
    mod.trim();
    auto roots = up_roots(mod);
    if (roots.empty()) throw Error("ufactor", "modulus has no root in target field (internal)");
    e.gen_image = roots.front();
    return e;
}

SplittingFieldDesc splitting_field(const UPoly& f) {
    const FieldPtr& k = f.k;
    if (!k->is_finite())
        throw Error("ufactor", "splitting fields are constructed over finite fields only");
    auto fac = factor_upoly(f);
    unsigned L = 1;
    for (const auto& [g, mult] : fac.factors) L = std::lcm(L, static_cast<unsigned>(g.deg()));
    SplittingFieldDesc out;
    out.relative_degree = L;
    if (L == 1) {
        out.field = k;
        out.emb = identity_embedding(k);
        for (const auto& [g, mult] : fac.factors) out.roots.push_back(k->neg(g.c[0]));
        std::sort(out.roots.begin(), out.roots.end());
        return out;
    }
    out.field = Field::extension(k->p(), k->degree() * L);
    out.emb = embed_field(k, out.field);
    UPoly big(out.field);
    for (const auto& c : f.c) big.c.push_back(out.emb.map(c));
    big.trim();
    out.roots = up_roots(big);
    return out;
}

} // namespace dirgal
