#include "dirgal/mfactor.hpp"

#include <algorithm>

#include "dirgal/ufactor.hpp"

namespace dirgal {

namespace {

void push_factor(MFactorResult& out, const MPoly& f, int mult) {
    MPoly g = f.monic(MonoOrder::grevlex());
    for (auto& [h, m] : out.factors) {
        if (h == g) {
            m += mult;
            return;
        }
    }
    out.factors.emplace_back(g, mult);
}

// f nonconstant, squarefree, primitive in every variable it uses.
// Returns factors (complete flag set if all certified irreducible).
void factor_squarefree(const MPoly& f, int mult, MFactorResult& out, bool& complete);

bool is_homogeneous(const MPoly& f) {
    int d = -1;
    for (const auto& [e, c] : f.terms()) {
        int t = 0;
        for (auto x : e) t += static_cast<int>(x);
        if (d < 0) d = t;
        else if (t != d) return false;
    }
    return true;
}

// homogeneous in exactly two variables u, v: factor via g(t) = f(t,1)
void factor_homog_bivariate(const MPoly& f, int u, int v, int mult,
                            MFactorResult& out, bool& complete) {
    const FieldPtr& k = f.field();
    int d = f.total_degree();
    // f = sum c_i u^i v^(d-i) -> univariate sum c_i T^i
    UPoly g(k);
    g.c.assign(d + 1, k->zero());
    int vpow_total = 0;
    for (const auto& [e, c] : f.terms()) g.c[e[u]] = c;
    g.trim();
    // powers of v factored out already by monomial stripping; g may still
    // have valuation in T if u divides f (also stripped); proceed
    auto fac = factor_upoly(g);
    MPoly vv = MPoly::variable(k, f.vars(), v);
    MPoly uu = MPoly::variable(k, f.vars(), u);
    (void)vpow_total;
    for (const auto& [h, m] : fac.factors) {
        // rehomogenize h(T) -> sum h_i u^i v^(deg h - i)
        MPoly part(k, f.vars());
        for (int i = 0; i <= h.deg(); ++i) {
            if (h.c[i].is_zero()) continue;
            part = part + MPoly::monomial(k, f.vars(), Exps(f.nvars(), 0), h.c[i]) *
                              uu.pow_u(i) * vv.pow_u(h.deg() - i);
        }
        push_factor(out, part, mult * m);
    }
    // degree balance: v^(d - deg g) factor when lc of f in u is missing
    int missing = d - g.deg();
    if (missing > 0) push_factor(out, vv, mult * missing);
}

// quadratic in variable v: split via discriminant square root, or certify
// irreducible; returns true when resolved either way.
bool factor_quadratic_in(const MPoly& f, int v, int mult, MFactorResult& out,
                         bool& complete) {
    const FieldPtr& k = f.field();
    auto cs = f.coeffs_in(v);
    MPoly A = cs[2], B = cs.size() > 1 ? cs[1] : MPoly(k, f.vars()),
          C = cs.size() > 0 ? cs[0] : MPoly(k, f.vars());
    if (k->characteristic() == 2) {
        if (!B.is_zero() || !A.is_constant()) return false;   // out of class
        // f = A*(v^2 + C/A) = A*(v + sqrt(C/A))^2 when the sqrt exists
        auto s = mpoly_sqrt(C.scaled(k->inv(A.constant_value())));
        if (s) {
            push_factor(out, MPoly::variable(k, f.vars(), v) + *s, 2 * mult);
            return true;
        }
        push_factor(out, f, mult);   // v^2 + C/A with no polynomial sqrt: irreducible
        return true;
    }
    MPoly disc = B * B - MPoly::from_int(k, f.vars(), 4) * A * C;
    auto s = mpoly_sqrt(disc);
    if (!s) {
        // disc not a square in the polynomial ring => (content-primitive,
        // squarefree) quadratic is irreducible by Gauss
        push_factor(out, f, mult);
        return true;
    }
    // 4A*f = (2Av + B - s)(2Av + B + s)
    MPoly two_av_b = MPoly::from_int(k, f.vars(), 2) * A * MPoly::variable(k, f.vars(), v) + B;
    MPoly g1 = two_av_b - *s;
    MPoly g2 = two_av_b + *s;
    // strip content of each and recurse (each is linear in v unless degenerate)
    bool c1 = true, c2 = true;
    MFactorResult sub;
    factor_squarefree(g1, mult, sub, c1);
    factor_squarefree(g2, mult, sub, c2);
    // verify product to guard against content slip: product of sub times unit == f up to unit
    MPoly prod = MPoly::from_int(k, f.vars(), 1);
    for (const auto& [h, m] : sub.factors)
        for (int i = 0; i < m; ++i) prod = prod * h;
    auto q = divide_exact(f, prod);
    if (!q || !(*q).is_constant()) return false;
    for (const auto& [h, m] : sub.factors) push_factor(out, h, m);
    complete = complete && c1 && c2;
    return true;
}

void factor_squarefree(const MPoly& f, int mult, MFactorResult& out, bool& complete) {
    const FieldPtr& k = f.field();
    if (f.is_constant()) return;
    auto used = f.used_vars();

    // content/primitive split in each variable
    for (int v : used) {
        MPoly cont(k, f.vars());
        for (const auto& c : f.coeffs_in(v)) {
            if (c.is_zero()) continue;
            cont = cont.is_zero() ? c : mpoly_gcd(cont, c);
            if (cont.is_constant()) break;
        }
        if (!cont.is_constant()) {
            auto pp = divide_exact(f, cont);
            factor_squarefree(cont, mult, out, complete);
            factor_squarefree(*pp, mult, out, complete);
            return;
        }
    }

    // univariate
    if (used.size() == 1) {
        int v = used[0];
        auto fac = factor_upoly(upoly_from_mpoly(f, v));
        for (const auto& [h, m] : fac.factors)
            push_factor(out, upoly_to_mpoly(h, f.vars(), v), mult * m);
        return;
    }

    // linear in some variable, content already trivial: irreducible
    for (int v : used) {
        if (f.degree_in(v) == 1) {
            push_factor(out, f, mult);
            return;
        }
    }

    // homogeneous bivariate
    if (used.size() == 2 && is_homogeneous(f)) {
        factor_homog_bivariate(f, used[0], used[1], mult, out, complete);
        return;
    }

    // quadratic in some variable
    for (int v : used) {
        if (f.degree_in(v) == 2) {
            if (factor_quadratic_in(f, v, mult, out, complete)) return;
        }
    }

    // out of the supported class
    push_factor(out, f, mult);
    complete = false;
}

} // namespace

MFactorResult mfactor(const MPoly& f) {
    MFactorResult out;
    const FieldPtr& k = f.field();
    out.unit = k->one();
    if (f.is_zero()) throw Error("mfactor", "cannot factor the zero polynomial");
    out.complete = true;
    if (f.is_constant()) {
        out.unit = f.constant_value();
        return out;
    }
    // strip monomial content
    MPoly work = f;
    Exps minexp(f.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) { minexp = e; first = false; continue; }
        for (std::size_t i = 0; i < e.size(); ++i) minexp[i] = std::min(minexp[i], e[i]);
    }
    bool any = false;
    for (auto x : minexp) any = any || x;
    if (any) {
        MPoly mono = MPoly::monomial(k, f.vars(), minexp, k->one());
        work = *divide_exact(work, mono);
        for (std::size_t i = 0; i < minexp.size(); ++i)
            if (minexp[i]) push_factor(out, MPoly::variable(k, f.vars(), static_cast<int>(i)),
                                       static_cast<int>(minexp[i]));
    }
    if (work.is_constant()) {
        out.unit = work.constant_value();
        return out;
    }

    // multiplicity structure via repeated division by the squarefree part
    MPoly sqf = squarefree_part(work);
    MFactorResult sub;
    sub.unit = k->one();
    bool complete = true;
    factor_squarefree(sqf, 1, sub, complete);
    out.complete = complete;
    // recover true multiplicities
    for (auto& [h, m] : sub.factors) {
        int mm = 0;
        MPoly rem = work;
        for (;;) {
            auto q = divide_exact(rem, h);
            if (!q) break;
            rem = *q;
            ++mm;
        }
        push_factor(out, h, mm);
    }
    // unit: f / product
    MPoly prod = MPoly::from_int(k, f.vars(), 1);
    for (const auto& [h, m] : out.factors)
        for (int i = 0; i < m; ++i) prod = prod * h;
    auto q = divide_exact(f, prod);
    if (!q || !(*q).is_constant())
        throw Error("mfactor", "factor product check failed (internal)");
    out.unit = (*q).constant_value();
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.total_degree() != b.first.total_degree())
            return a.first.total_degree() < b.first.total_degree();
        return a.first.str() < b.first.str();
    });
    return out;
}

Cert irreducible_cert(const MPoly& f) {
    if (f.is_zero() || f.is_constant()) return Cert::no;
    MFactorResult r = mfactor(f);
    if (r.factors.size() > 1 || (r.factors.size() == 1 && r.factors[0].second > 1)) return Cert::no;
    return r.complete ? Cert::yes : Cert::unknown;
}

Cert absolutely_irreducible_cert(const MPoly& f, int extension_bound) {
    Cert base = irreducible_cert(f);
    if (base != Cert::yes) return base;
    const FieldPtr& k = f.field();
    auto used = f.used_vars();
    // linear in some variable with trivial content: a graph, absolutely irreducible
    for (int v : used) {
        if (f.degree_in(v) == 1) {
            MPoly cont(k, f.vars());
            for (const auto& c : f.coeffs_in(v)) {
                if (c.is_zero()) continue;
                cont = cont.is_zero() ? c : mpoly_gcd(cont, c);
            }
            if (cont.is_constant()) return Cert::yes;
        }
    }
    if (used.size() == 1) {
        // univariate irreducible of degree >= 2 splits over the closure
        return f.degree_in(used[0]) <= 1 ? Cert::yes : Cert::no;
    }
    if (used.size() == 2 && is_homogeneous(f)) {
        // splits into linear forms over the closure
        return f.total_degree() <= 1 ? Cert::yes : Cert::no;
    }
    for (int v : used) {
        if (f.degree_in(v) == 2 && k->characteristic() != 2) {
            auto cs = f.coeffs_in(v);
            MPoly A = cs[2], B = cs.size() > 1 ? cs[1] : MPoly(k, f.vars()),
                  C = cs[0];
            MPoly disc = B * B - MPoly::from_int(k, f.vars(), 4) * A * C;
            if (disc.is_zero()) return Cert::no;
            // disc = unit * square over the closure iff its squarefree part is constant
            MPoly sqf = squarefree_part(disc);
            return sqf.is_constant() ? Cert::no : Cert::yes;
        }
    }
    // fallback over finite fields: scan base changes F_{p^(m j)}, j <= bound
    if (k->is_finite() && extension_bound > 0) {
        for (int j = 2; j <= extension_bound; ++j) {
            auto big = Field::extension(k->p(), k->degree() * j);
            auto emb = embed_field(k, big);
            MPoly fj = f.map_coeffs(big, [&](const FieldElem& c) { return emb.map(c); });
            Cert cj = irreducible_cert(fj);
            if (cj == Cert::no) return Cert::no;
            if (cj == Cert::unknown) return Cert::unknown;
        }
        // stayed irreducible through the scan; for hypersurfaces the factors
        // of f over the closure are defined over a degree <= deg f extension
        if (extension_bound >= f.total_degree()) return Cert::yes;
        return Cert::unknown;
    }
    return Cert::unknown;
}

} // namespace dirgal
