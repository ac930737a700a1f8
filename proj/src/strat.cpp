#include "dirgal/strat.hpp"

#include <algorithm>
#include <sstream>

namespace dirgal {

namespace {

Ideal saturate_by_opens(Ideal I, const Ideal& U) {
    if (U.is_unit()) return I;
    for (const auto& u : U.gens()) I = saturate(I, u);
    return I;
}

} // namespace

std::string GaloisStratification::str() const {
    std::ostringstream os;
    os << "stratification on " << ambient.str() << " with " << strata.size() << " strata";
    return os.str();
}

GaloisStratification strat_top(const DirectPresentation& X) {
    GaloisStratification A;
    A.ambient = X;
    Stratum s;
    s.piece = X;
    s.cover = GaloisCover::trivial_cover(X);
    s.domain = {s.cover.G0.id};
    A.strata.push_back(std::move(s));
    return A;
}

GaloisStratification strat_bottom(const DirectPresentation& X) {
    GaloisStratification A = strat_top(X);
    A.strata[0].domain.clear();
    return A;
}

GaloisStratification single_stratum(const DirectPresentation& X, GaloisCover D,
                                    std::set<int> domain) {
    GaloisStratification A;
    A.ambient = X;
    Stratum s;
    s.piece = D.base;
    s.cover = std::move(D);
    s.domain = std::move(domain);
    A.strata.push_back(std::move(s));
    return A;
}

ValidationReport validate_strat(const GaloisStratification& A) {
    ValidationReport rep;
    for (std::size_t i = 0; i < A.strata.size(); ++i) {
        const Stratum& s = A.strata[i];
        auto c = validate_cover(s.cover);
        for (const auto& v : c.violations)
            rep.violations.push_back("stratum " + std::to_string(i) + ": " + v);
        rep.ok = rep.ok && c.ok;
        // domain twisted-closed
        auto closed = twisted_closure(s.cover, s.domain);
        if (closed != s.domain) {
            rep.ok = false;
            rep.violations.push_back("stratum " + std::to_string(i) +
                                     ": domain is not twisted-conjugacy closed");
        }
    }
    return rep;
}

EvaluationResult evaluate(const GaloisStratification& A, const DiffField& K,
                          std::uint64_t budget) {
    EvaluationResult out;
    out.K = K;
    for (const auto& s : A.strata) {
        PointSet pts;
        if (!s.domain.empty()) {
            PointSet realz = enumerate_realisations(s.piece, K, budget);
            if (s.cover.trivial) {
                if (s.domain.count(s.cover.G0.id)) pts = realz;
            } else {
                for (const auto& x : realz) {
                    TwistedClass cls = local_frobenius(s.cover, x, K);
                    // class subset of domain iff any representative lies in it
                    if (s.domain.count(*cls.elems.begin())) pts.insert(x);
                }
            }
        }
        for (const auto& x : pts) out.points.insert(x);
        out.per_stratum.push_back(std::move(pts));
    }
    return out;
}

GaloisStratification reduce_mod_strat(const GaloisStratification& A, const FieldPtr& k2) {
    GaloisStratification B;
    B.ambient = reduce_mod(A.ambient, k2);
    for (const auto& s : A.strata) {
        Stratum t;
        t.piece = reduce_mod(s.piece, k2);
        t.cover = reduce_mod_cover(s.cover, k2);
        t.domain = s.domain;
        B.strata.push_back(std::move(t));
    }
    return B;
}

DirectPresentation meet_pieces(const DirectPresentation& P, const DirectPresentation& Q) {
    DirectPresentation R = P;
    R.I0 = R.I0.plus(Q.I0);
    R.I1 = R.I1.plus(Q.I1);
    R.U0 = locus_union(R.U0, Q.U0);
    R.U1 = locus_union(R.U1, Q.U1);
    return R;
}

bool piece_trivially_empty(const DirectPresentation& P) {
    if (P.I0.is_unit() || P.I1.is_unit()) return true;
    // excluded everywhere?
    auto swallowed = [&](const Ideal& I, const Ideal& U) {
        if (U.is_unit()) return false;
        if (U.gens().empty()) return true;       // zero ideal: everything excluded
        for (const auto& u : U.gens())
            if (!radical_contains(I, u)) return false;
        return true;
    };
    return swallowed(P.I0, P.U0) || swallowed(P.I1, P.U1);
}

namespace {

// Coherent direct normalization of a possibly-reducible cover: choose
// components at both levels, restrict to decomposition subgroups, and
// reparametrize the sigma side by the least correcting element.
struct NormalizedCover {
    GaloisCover D;
    std::vector<int> keep0;     // new G0 indices -> old G0 indices
    int gdot = 0;               // correction element in the OLD G0 indexing
};

std::vector<MPoly> z_proj(const GaloisCover& D) {
    std::vector<MPoly> t;
    for (int i = 0; i < D.cov.n; ++i)
        t.push_back(MPoly::variable(D.base.k, D.cov.vars1, D.cov.x_index(i)));
    return t;
}
std::vector<MPoly> w_proj(const GaloisCover& D) {
    std::vector<MPoly> t;
    for (int i = 0; i < D.cov.n; ++i)
        t.push_back(MPoly::variable(D.base.k, D.cov.vars1, D.cov.y_index(i)));
    return t;
}

std::vector<MPoly> compose_tuple(const std::vector<MPoly>& f, const std::vector<MPoly>& g) {
    std::vector<MPoly> out;
    out.reserve(f.size());
    for (const auto& fi : f) out.push_back(fi.compose(g));
    return out;
}

std::optional<NormalizedCover> normalize_cover(const GaloisCover& raw) {
    const FieldPtr& k = raw.base.k;
    Ideal I0 = saturate_by_opens(raw.cov.I0, raw.cov.U0);
    Ideal I1 = saturate_by_opens(raw.cov.I1, raw.cov.U1);
    if (I0.is_unit() || I1.is_unit()) return std::nullopt;
    auto comps0 = decompose_variety(I0);
    auto comps1 = decompose_variety(I1);
    if (comps0.empty() || comps1.empty()) return std::nullopt;
    for (const auto& C1 : comps1) {
        for (const auto& C0 : comps0) {
            // pi_1 lands on C0: C0 seen on the z-block is contained in C1
            Ideal C0z = embed(C0, raw.cov.vars1);
            if (!C1.contains_ideal(C0z)) continue;
            // least g with (act0[g] o w-proj) mapping C1 into C0
            int gdot = -1;
            for (int g = 0; g < raw.G0.size() && gdot < 0; ++g) {
                bool ok = true;
                std::vector<MPoly> m = compose_tuple(raw.act0[g], w_proj(raw));
                for (const auto& c0g : C0.gens()) {
                    if (!C1.contains(c0g.compose(m))) { ok = false; break; }
                }
                if (ok) gdot = g;
            }
            if (gdot < 0) continue;
            // subgroups preserving the components
            std::vector<int> keep0, keep1;
            for (int g = 0; g < raw.G0.size(); ++g) {
                bool ok = true;
                for (const auto& c : C0.gens())
                    if (!C0.contains(c.compose(raw.act0[g]))) { ok = false; break; }
                if (ok) keep0.push_back(g);
            }
            // reparametrized level-1 object when gdot != id
            GaloisCover D = raw;
            D.cov.I0 = C0;
            Ideal C1r = C1;
            GroupHom hs = raw.hom_sigma;
            hs.src = &raw.G1;
            hs.dst = &raw.G0;
            std::vector<std::vector<MPoly>> act1 = raw.act1;
            std::vector<int> hom_sigma_old(raw.G1.size());
            for (int g1 = 0; g1 < raw.G1.size(); ++g1) hom_sigma_old[g1] = hs(g1);
            if (gdot != raw.G0.id) {
                int ginv = raw.G0.inverse(gdot);
                // Phi(z, w) = (z, act0[gdot](w)); new object = Phi(C1):
                // ideal = pullback of C1 along Phi^{-1}
                std::vector<MPoly> phi_inv;
                for (int i = 0; i < raw.cov.n; ++i)
                    phi_inv.push_back(MPoly::variable(k, raw.cov.vars1, i));
                std::vector<MPoly> wvars = w_proj(raw);
                std::vector<MPoly> ginv_w = compose_tuple(raw.act0[ginv], wvars);
                for (int i = 0; i < raw.cov.n; ++i) phi_inv.push_back(ginv_w[i]);
                std::vector<MPoly> gens;
                for (const auto& c : C1.gens()) gens.push_back(c.compose(phi_inv));
                C1r = Ideal(k, raw.cov.vars1, gens);
                // conjugate level-1 actions: act' = Phi o act o Phi^{-1}
                std::vector<MPoly> phi;
                for (int i = 0; i < raw.cov.n; ++i)
                    phi.push_back(MPoly::variable(k, raw.cov.vars1, i));
                std::vector<MPoly> g_w = compose_tuple(raw.act0[gdot], wvars);
                for (int i = 0; i < raw.cov.n; ++i) phi.push_back(g_w[i]);
                for (auto& a : act1) a = compose_tuple(phi, compose_tuple(a, phi_inv));
                // hom_sigma conjugates
                for (int g1 = 0; g1 < raw.G1.size(); ++g1)
                    hom_sigma_old[g1] =
                        raw.G0.mul(gdot, raw.G0.mul(hom_sigma_old[g1], ginv));
            }
            for (int g1 = 0; g1 < raw.G1.size(); ++g1) {
                bool ok = true;
                for (const auto& c : C1r.gens())
                    if (!C1r.contains(c.compose(act1[g1]))) { ok = false; break; }
                if (ok) keep1.push_back(g1);
            }
            // homs must restrict into keep0
            GroupHom h1 = raw.hom_pi1;
            h1.src = &raw.G1;
            h1.dst = &raw.G0;
            std::vector<int> new_pi1, new_sigma;
            bool homs_ok = true;
            auto idx_in_keep0 = [&](int g) {
                auto it = std::find(keep0.begin(), keep0.end(), g);
                return it == keep0.end() ? -1 : static_cast<int>(it - keep0.begin());
            };
            for (int g1 : keep1) {
                int a = idx_in_keep0(h1(g1));
                int b = idx_in_keep0(hom_sigma_old[g1]);
                if (a < 0 || b < 0) { homs_ok = false; break; }
                new_pi1.push_back(a);
                new_sigma.push_back(b);
            }
            if (!homs_ok) continue;
            D.cov.I1 = C1r;
            D.G0 = subgroup(raw.G0, keep0);
            D.G1 = subgroup(raw.G1, keep1);
            std::vector<std::vector<MPoly>> a0, a1;
            for (int g : keep0) a0.push_back(raw.act0[g]);
            for (int g : keep1) a1.push_back(act1[g]);
            D.act0 = std::move(a0);
            D.act1 = std::move(a1);
            D.hom_pi1.map = new_pi1;
            D.hom_sigma.map = new_sigma;
            D.rebind_homs();
            D.trivial = raw.trivial && D.G0.size() == 1;
            NormalizedCover out;
            out.D = std::move(D);
            out.keep0 = keep0;
            out.gdot = gdot;
            return out;
        }
    }
    return std::nullopt;
}

std::set<int> transform_domain(const std::set<int>& domain, const FiniteGroup& oldG0,
                               const std::vector<int>& keep0, int gdot) {
    // new domain = { h in keep0 : h * gdot in old domain }, reindexed
    std::set<int> out;
    for (std::size_t i = 0; i < keep0.size(); ++i) {
        if (domain.count(oldG0.mul(keep0[i], gdot))) out.insert(static_cast<int>(i));
    }
    return out;
}

} // namespace

std::optional<Stratum> restrict_stratum(const Stratum& s, const DirectPresentation& subpiece) {
    if (piece_trivially_empty(subpiece)) return std::nullopt;
    if (s.cover.trivial) {
        Stratum t;
        t.piece = subpiece;
        t.cover = GaloisCover::trivial_cover(subpiece);
        t.domain = s.domain;
        return t;
    }
    GaloisCover raw = s.cover;
    raw.base = subpiece;
    // pull the extra cuts through the covering maps
    std::vector<MPoly> p1 = s.cover.p1();
    raw.cov.I0 = raw.cov.I0.plus(pullback(subpiece.I0, s.cover.p0));
    raw.cov.I1 = raw.cov.I1.plus(pullback(subpiece.I1, p1));
    raw.cov.U0 = locus_union(raw.cov.U0, pullback(subpiece.U0, s.cover.p0));
    raw.cov.U1 = locus_union(raw.cov.U1, pullback(subpiece.U1, p1));
    auto norm = normalize_cover(raw);
    if (!norm) return std::nullopt;
    Stratum t;
    t.piece = subpiece;
    t.cover = norm->D;
    t.domain = transform_domain(s.domain, s.cover.G0, norm->keep0, norm->gdot);
    return t;
}

GaloisStratification refine(const GaloisStratification& A,
                            const std::vector<std::vector<DirectPresentation>>& pieces) {
    if (pieces.size() != A.strata.size())
        throw Error("stratifications", "refinement shape mismatch");
    GaloisStratification B;
    B.ambient = A.ambient;
    for (std::size_t i = 0; i < A.strata.size(); ++i) {
        for (const auto& p : pieces[i]) {
            auto t = restrict_stratum(A.strata[i], p);
            if (t) B.strata.push_back(std::move(*t));
        }
    }
    return B;
}

GaloisStratification inflate(const GaloisStratification& A,
                             const std::vector<Domination>& doms) {
    if (doms.size() != A.strata.size())
        throw Error("stratifications", "inflation shape mismatch");
    GaloisStratification B;
    B.ambient = A.ambient;
    for (std::size_t i = 0; i < A.strata.size(); ++i) {
        const Stratum& s = A.strata[i];
        const Domination& d = doms[i];
        if (static_cast<int>(d.onto0.size()) != d.finer.G0.size())
            throw Error("stratifications", "inflation surjection arity mismatch");
        std::set<int> im(d.onto0.begin(), d.onto0.end());
        if (static_cast<int>(im.size()) != s.cover.G0.size())
            throw Error("stratifications", "inflation map is not surjective");
        Stratum t;
        t.piece = s.piece;
        t.cover = d.finer;
        for (int g = 0; g < d.finer.G0.size(); ++g)
            if (s.domain.count(d.onto0[g])) t.domain.insert(g);
        B.strata.push_back(std::move(t));
    }
    return B;
}

namespace {

bool covers_equal(const GaloisCover& A, const GaloisCover& B) {
    if (A.trivial && B.trivial) return true;
    if (A.cov.n != B.cov.n) return false;
    if (A.G0.size() != B.G0.size() || A.G1.size() != B.G1.size()) return false;
    if (!A.cov.I0.same_ideal(B.cov.I0) || !A.cov.I1.same_ideal(B.cov.I1)) return false;
    for (std::size_t i = 0; i < A.p0.size(); ++i)
        if (!A.cov.I0.contains(A.p0[i] - B.p0[i])) return false;
    for (int g = 0; g < A.G0.size(); ++g)
        for (int i = 0; i < A.cov.n; ++i)
            if (!A.cov.I0.contains(A.act0[g][i] - B.act0[g][i])) return false;
    if (A.G0.table != B.G0.table || A.G1.table != B.G1.table) return false;
    if (A.hom_pi1.map != B.hom_pi1.map || A.hom_sigma.map != B.hom_sigma.map) return false;
    for (int g = 0; g < A.G1.size(); ++g)
        for (int i = 0; i < 2 * A.cov.n; ++i)
            if (!A.cov.I1.contains(A.act1[g][i] - B.act1[g][i])) return false;
    return true;
}

// product cover of two covers of the same piece, groups juxtaposed
GaloisCover product_cover(const GaloisCover& A, const GaloisCover& B) {
    const FieldPtr& k = A.base.k;
    GaloisCover P;
    P.base = A.base;
    const int na = A.cov.n, nb = B.cov.n;
    P.cov.k = k;
    P.cov.n = na + nb;
    P.cov.vars0 = numbered_vars("z", P.cov.n);
    P.cov.vars1 = concat_vars(P.cov.vars0, numbered_vars("w", P.cov.n));
    std::vector<int> a0(na), b0(nb);
    for (int i = 0; i < na; ++i) a0[i] = i;
    for (int i = 0; i < nb; ++i) b0[i] = na + i;
    std::vector<int> a1(2 * na), b1(2 * nb);
    for (int i = 0; i < na; ++i) {
        a1[i] = i;
        a1[na + i] = P.cov.n + i;
    }
    for (int i = 0; i < nb; ++i) {
        b1[i] = na + i;
        b1[nb + i] = P.cov.n + na + i;
    }
    Ideal IA0 = remap(A.cov.I0, P.cov.vars0, a0);
    Ideal IB0 = remap(B.cov.I0, P.cov.vars0, b0);
    P.cov.I0 = IA0.plus(IB0);
    // glue: both covering maps agree on the base coordinates
    std::vector<MPoly> pa0, pb0;
    for (const auto& g : A.p0) pa0.push_back(g.remap(P.cov.vars0, a0));
    for (const auto& g : B.p0) pb0.push_back(g.remap(P.cov.vars0, b0));
    for (std::size_t i = 0; i < pa0.size(); ++i) P.cov.I0 = P.cov.I0.with_extra(pa0[i] - pb0[i]);
    P.p0 = pa0;
    Ideal IA1 = remap(A.cov.I1, P.cov.vars1, a1);
    Ideal IB1 = remap(B.cov.I1, P.cov.vars1, b1);
    P.cov.I1 = IA1.plus(IB1);
    std::vector<MPoly> pa1, pb1;
    {
        std::vector<MPoly> t = A.p1();
        for (const auto& g : t) pa1.push_back(g.remap(P.cov.vars1, a1));
        std::vector<MPoly> u = B.p1();
        for (const auto& g : u) pb1.push_back(g.remap(P.cov.vars1, b1));
    }
    for (std::size_t i = 0; i < pa1.size(); ++i) P.cov.I1 = P.cov.I1.with_extra(pa1[i] - pb1[i]);
    P.cov.U0 = locus_union(remap(A.cov.U0, P.cov.vars0, a0), remap(B.cov.U0, P.cov.vars0, b0));
    P.cov.U1 = locus_union(remap(A.cov.U1, P.cov.vars1, a1), remap(B.cov.U1, P.cov.vars1, b1));
    // product groups
    auto prod_group = [](const FiniteGroup& G, const FiniteGroup& H) {
        FiniteGroup P2;
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < H.size(); ++b)
                P2.labels.push_back(G.labels[a] + "|" + H.labels[b]);
        const int n = G.size() * H.size();
        P2.table.assign(n, std::vector<int>(n));
        auto idx = [&](int a, int b) { return a * H.size() + b; };
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < H.size(); ++b)
                for (int c = 0; c < G.size(); ++c)
                    for (int d = 0; d < H.size(); ++d)
                        P2.table[idx(a, b)][idx(c, d)] = idx(G.mul(a, c), H.mul(b, d));
        P2.id = idx(G.id, H.id);
        return P2;
    };
    P.G0 = prod_group(A.G0, B.G0);
    P.G1 = prod_group(A.G1, B.G1);
    for (int a = 0; a < A.G0.size(); ++a) {
        for (int b = 0; b < B.G0.size(); ++b) {
            std::vector<MPoly> act;
            for (int i = 0; i < na; ++i) act.push_back(A.act0[a][i].remap(P.cov.vars0, a0));
            for (int i = 0; i < nb; ++i) act.push_back(B.act0[b][i].remap(P.cov.vars0, b0));
            P.act0.push_back(std::move(act));
        }
    }
    for (int a = 0; a < A.G1.size(); ++a) {
        for (int b = 0; b < B.G1.size(); ++b) {
            std::vector<MPoly> act(2 * P.cov.n, MPoly(k, P.cov.vars1));
            for (int i = 0; i < na; ++i) {
                act[i] = A.act1[a][i].remap(P.cov.vars1, a1);
                act[P.cov.n + i] = A.act1[a][na + i].remap(P.cov.vars1, a1);
            }
            for (int i = 0; i < nb; ++i) {
                act[na + i] = B.act1[b][i].remap(P.cov.vars1, b1);
                act[P.cov.n + na + i] = B.act1[b][nb + i].remap(P.cov.vars1, b1);
            }
            P.act1.push_back(std::move(act));
        }
    }
    GroupHom ha = A.hom_pi1, hsa = A.hom_sigma, hb = B.hom_pi1, hsb = B.hom_sigma;
    for (int a = 0; a < A.G1.size(); ++a) {
        for (int b = 0; b < B.G1.size(); ++b) {
            P.hom_pi1.map.push_back(ha.map[a] * B.G0.size() + hb.map[b]);
            P.hom_sigma.map.push_back(hsa.map[a] * B.G0.size() + hsb.map[b]);
        }
    }
    P.rebind_homs();
    return P;
}

} // namespace

GaloisStratification boolean_combine(const GaloisStratification& A,
                                     const GaloisStratification& B, BoolOp op) {
    GaloisStratification out;
    out.ambient = A.ambient;
    for (const auto& sa : A.strata) {
        for (const auto& sb : B.strata) {
            DirectPresentation piece = meet_pieces(sa.piece, sb.piece);
            if (piece_trivially_empty(piece)) continue;
            auto ra = restrict_stratum(sa, piece);
            auto rb = restrict_stratum(sb, piece);
            if (!ra || !rb) continue;
            Stratum t;
            t.piece = piece;
            std::set<int> dA, dB;
            if (covers_equal(ra->cover, rb->cover)) {
                t.cover = ra->cover;
                dA = ra->domain;
                dB = rb->domain;
            } else if (ra->cover.trivial) {
                t.cover = rb->cover;
                dB = rb->domain;
                if (ra->domain.count(ra->cover.G0.id))
                    for (int g = 0; g < t.cover.G0.size(); ++g) dA.insert(g);
            } else if (rb->cover.trivial) {
                t.cover = ra->cover;
                dA = ra->domain;
                if (rb->domain.count(rb->cover.G0.id))
                    for (int g = 0; g < t.cover.G0.size(); ++g) dB.insert(g);
            } else {
                GaloisCover prod = product_cover(ra->cover, rb->cover);
                auto norm = normalize_cover(prod);
                if (!norm)
                    throw Error("stratifications",
                                "common-cover component certification failure");
                t.cover = norm->D;
                // domains pulled through the projections, then transformed
                std::set<int> pulledA, pulledB;
                const int nbg = rb->cover.G0.size();
                for (int a = 0; a < ra->cover.G0.size(); ++a)
                    for (int b = 0; b < nbg; ++b) {
                        if (ra->domain.count(a)) pulledA.insert(a * nbg + b);
                        if (rb->domain.count(b)) pulledB.insert(a * nbg + b);
                    }
                dA = transform_domain(pulledA, prod.G0, norm->keep0, norm->gdot);
                dB = transform_domain(pulledB, prod.G0, norm->keep0, norm->gdot);
            }
            if (op == BoolOp::conj) {
                std::set_intersection(dA.begin(), dA.end(), dB.begin(), dB.end(),
                                      std::inserter(t.domain, t.domain.begin()));
            } else {
                t.domain = dA;
                t.domain.insert(dB.begin(), dB.end());
            }
            out.strata.push_back(std::move(t));
        }
    }
    return out;
}

GaloisStratification negate(const GaloisStratification& A) {
    GaloisStratification out;
    out.ambient = A.ambient;
    for (const auto& s : A.strata) {
        Stratum t = s;
        t.domain.clear();
        for (int g = 0; g < s.cover.G0.size(); ++g)
            if (!s.domain.count(g)) t.domain.insert(g);
        out.strata.push_back(std::move(t));
    }
    return out;
}

} // namespace dirgal
