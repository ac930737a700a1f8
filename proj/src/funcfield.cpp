#include "dirgal/funcfield.hpp"

#include <algorithm>

#include "dirgal/mfactor.hpp"

namespace dirgal {

namespace {

bool uses_any(const MPoly& f, const std::vector<int>& vars) {
    for (int v : vars)
        if (f.uses_var(v)) return true;
    return false;
}

// try T -> m*T with m a monomial in the transcendental vars so that the
// minimal polynomial becomes m^deg * (coefficients free of them)
std::optional<std::pair<MPoly, MPoly>> try_rescale(const MPoly& mp, int var,
                                                   const std::vector<int>& trans) {
    const FieldPtr& k = mp.field();
    auto cs = mp.coeffs_in(var);
    int d = static_cast<int>(cs.size()) - 1;
    if (!cs[d].is_constant()) return std::nullopt;   // want monic-ish top
    // exponents a_u: from the lowest nonzero coefficient c_i with i < d:
    // every term of c_i must carry u^(a_u*(d-i)); try a_u from c_i's minimal
    // u-degree
    Exps a(mp.nvars(), 0);
    for (int u : trans) {
        int cand = -1;
        for (int i = 0; i < d; ++i) {
            if (cs[i].is_zero()) continue;
            int mindeg = INT32_MAX;
            for (const auto& [e, c] : cs[i].terms()) mindeg = std::min(mindeg, static_cast<int>(e[u]));
            if (mindeg % (d - i)) return std::nullopt;
            int au = mindeg / (d - i);
            if (cand < 0) cand = au;
            else cand = std::min(cand, au);
        }
        if (cand > 0) a[u] = static_cast<std::uint32_t>(cand);
    }
    bool any = false;
    for (auto x : a) any = any || x;
    if (!any) return std::nullopt;
    MPoly m = MPoly::monomial(k, mp.vars(), a, k->one());
    // rescaled minpoly: sum cs[i] / m^(d-i) * T^i
    MPoly out(k, mp.vars());
    MPoly tvar = MPoly::variable(k, mp.vars(), var);
    for (int i = 0; i <= d; ++i) {
        if (cs[i].is_zero()) continue;
        MPoly denom = m.pow_u(d - i);
        auto q = divide_exact(cs[i], denom);
        if (!q) return std::nullopt;
        if (uses_any(*q, trans)) return std::nullopt;
        out = out + *q * tvar.pow_u(i);
    }
    return std::make_pair(out, m);
}

} // namespace

RelativeClosure relative_algebraic_closure(const TowerPresentation& T) {
    const FieldPtr& k = T.k;
    RelativeClosure out;
    std::vector<int> trans;       // transcendental generator vars seen so far
    std::vector<int> accepted;    // accepted generator vars
    // degree-1 generators are substituted away; subs[var] is the expression
    std::map<int, MPoly> subs;
    auto apply_subs = [&](MPoly f) {
        for (int rounds = 0; rounds < static_cast<int>(T.vars->size()) + 2; ++rounds) {
            bool touched = false;
            for (const auto& [v, e] : subs) {
                if (!f.uses_var(v)) continue;
                std::vector<MPoly> sub;
                for (int i = 0; i < f.nvars(); ++i)
                    sub.push_back(i == v ? e : MPoly::variable(k, f.vars(), i));
                f = f.compose(sub);
                touched = true;
            }
            if (!touched) break;
        }
        return f;
    };

    for (const auto& g : T.gens) {
        if (!g.algebraic) {
            trans.push_back(g.var);
            continue;
        }
        if (g.minpoly.is_zero() || g.minpoly.degree_in(g.var) < 1)
            throw Error("funcfield", "presentation insufficient: generator " +
                                         (*T.vars)[g.var] + " lacks a minimal polynomial");
        MPoly mp = apply_subs(g.minpoly);
        MPoly expr = MPoly::from_int(k, T.vars, 1);
        if (mp.degree_in(g.var) == 1) {
            auto cs = mp.coeffs_in(g.var);
            if (!cs[1].is_constant())
                throw Error("funcfield", "presentation insufficient: non-constant linear lead");
            subs.emplace(g.var, cs[0].scaled(k->neg(k->inv(cs[1].constant_value()))));
            continue;
        }
        if (uses_any(mp, trans)) {
            auto rs = try_rescale(mp, g.var, trans);
            if (!rs) continue;    // contributes nothing to L on the supported class
            mp = rs->first;
            // accepted element is g.var / m; keep the monomial for reporting
            expr = rs->second;    // expression: g.var = expr * T means element = var/expr
        }
        // factor over the closure built so far
        int deg = mp.degree_in(g.var);
        if (deg == 1) continue;   // already in k(Y)(accepted): no new degree
        bool resolved = false;
        if (deg == 2 && k->characteristic() != 2) {
            auto cs = mp.coeffs_in(g.var);
            MPoly A = cs[2], B = cs.size() > 1 ? cs[1] : MPoly(k, T.vars),
                  C = cs[0];
            MPoly disc = B * B - MPoly::from_int(k, T.vars, 4) * A * C;
            auto s = mpoly_sqrt(disc);
            bool splits = s.has_value();
            if (!splits) {
                // sqrt may exist via an accepted quadratic u with u^2 = d_u
                for (const auto& ag : out.gens) {
                    if (ag.minpoly.degree_in(ag.var) != 2) continue;
                    auto acs = ag.minpoly.coeffs_in(ag.var);
                    if (!acs[1].is_zero()) continue;
                    // u^2 = -C_a/A_a
                    MPoly du = -acs[0];
                    auto q = divide_exact(du, acs[2]);
                    if (!q) continue;
                    if (mpoly_sqrt(disc * *q).has_value()) { splits = true; break; }
                }
            }
            if (splits) {
                resolved = true;   // degree-1 contribution over L
            } else {
                out.gens.push_back({g.var, mp, expr, 2});
                out.degree *= 2;
                accepted.push_back(g.var);
                resolved = true;
            }
        }
        if (!resolved) {
            Cert c = irreducible_cert(mp);
            if (c == Cert::yes) {
                out.gens.push_back({g.var, mp, expr, deg});
                out.degree *= deg;
                accepted.push_back(g.var);
            } else if (c == Cert::no) {
                MFactorResult mf = mfactor(mp);
                // pick a least-degree factor still involving the generator
                const MPoly* best = nullptr;
                for (const auto& [h, m] : mf.factors) {
                    if (!h.uses_var(g.var)) continue;
                    if (!best || h.degree_in(g.var) < best->degree_in(g.var)) best = &h;
                }
                if (!best) throw Error("funcfield", "presentation insufficient: degenerate minimal polynomial");
                int bd = best->degree_in(g.var);
                if (bd > 1) {
                    out.gens.push_back({g.var, *best, expr, bd});
                    out.degree *= bd;
                    accepted.push_back(g.var);
                }
            } else {
                throw Error("funcfield",
                            "presentation insufficient: cannot factor the minimal polynomial of " +
                                (*T.vars)[g.var] + " over the closure");
            }
        }
    }
    out.substitutions = std::move(subs);
    return out;
}

} // namespace dirgal
