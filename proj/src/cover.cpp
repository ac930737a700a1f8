#include "dirgal/cover.hpp"

#include <algorithm>

#include "dirgal/fibres.hpp"
#include "dirgal/ufactor.hpp"

namespace dirgal {

std::vector<MPoly> GaloisCover::p1() const {
    std::vector<MPoly> out;
    std::vector<int> zmap(cov.n), wmap(cov.n);
    for (int i = 0; i < cov.n; ++i) {
        zmap[i] = cov.x_index(i);
        wmap[i] = cov.y_index(i);
    }
    for (const auto& g : p0) out.push_back(g.remap(cov.vars1, zmap));
    for (const auto& g : p0) out.push_back(g.remap(cov.vars1, wmap));
    return out;
}

void GaloisCover::rebind_homs() {
    hom_pi1.src = &G1;
    hom_pi1.dst = &G0;
    hom_sigma.src = &G1;
    hom_sigma.dst = &G0;
}

GaloisCover GaloisCover::trivial_cover(const DirectPresentation& X) {
    GaloisCover D;
    D.base = X;
    // Z = X with z/w coordinate names
    D.cov = X;
    D.cov.vars0 = numbered_vars("z", X.n);
    D.cov.vars1 = concat_vars(D.cov.vars0, numbered_vars("w", X.n));
    std::vector<int> id0(X.n), id1(2 * X.n);
    for (int i = 0; i < X.n; ++i) id0[i] = i;
    for (int i = 0; i < 2 * X.n; ++i) id1[i] = i;
    D.cov.I0 = remap(X.I0, D.cov.vars0, id0);
    D.cov.I1 = remap(X.I1, D.cov.vars1, id1);
    D.cov.U0 = remap(X.U0, D.cov.vars0, id0);
    D.cov.U1 = remap(X.U1, D.cov.vars1, id1);
    for (int i = 0; i < X.n; ++i) D.p0.push_back(MPoly::variable(X.k, D.cov.vars0, i));
    D.G0 = FiniteGroup::trivial();
    D.G1 = FiniteGroup::trivial();
    D.hom_pi1 = {nullptr, nullptr, {0}};
    D.hom_sigma = {nullptr, nullptr, {0}};
    D.trivial = true;
    std::vector<MPoly> a0, a1;
    for (int i = 0; i < X.n; ++i) a0.push_back(MPoly::variable(X.k, D.cov.vars0, i));
    for (int i = 0; i < 2 * X.n; ++i) a1.push_back(MPoly::variable(X.k, D.cov.vars1, i));
    D.act0 = {a0};
    D.act1 = {a1};
    D.rebind_homs();
    return D;
}

namespace {

bool reduces_to_zero(const MPoly& f, const Ideal& I) {
    return I.contains(f);
}

// check a tuple identity componentwise mod an ideal
void check_tuple(ValidationReport& rep, const std::vector<MPoly>& lhs,
                 const std::vector<MPoly>& rhs, const Ideal& mod, const std::string& what) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (!reduces_to_zero(lhs[i] - rhs[i], mod)) {
            rep.ok = false;
            rep.violations.push_back(what + " fails in component " + std::to_string(i) +
                                     ": " + (lhs[i] - rhs[i]).str());
        }
    }
}

std::vector<MPoly> compose_tuple(const std::vector<MPoly>& f, const std::vector<MPoly>& g) {
    // (f o g)(v) = f(g(v)); g components live in the target ambient of the result
    std::vector<MPoly> out;
    out.reserve(f.size());
    for (const auto& fi : f) out.push_back(fi.compose(g));
    return out;
}

std::vector<MPoly> vars_tuple(const FieldPtr& k, const VarsPtr& vars) {
    std::vector<MPoly> out;
    for (int i = 0; i < static_cast<int>(vars->size()); ++i)
        out.push_back(MPoly::variable(k, vars, i));
    return out;
}

} // namespace

ValidationReport validate_cover(const GaloisCover& D) {
    ValidationReport rep;
    const FieldPtr& k = D.base.k;
    try {
        D.G0.validate();
        D.G1.validate();
    } catch (const Error& e) {
        rep.ok = false;
        rep.violations.push_back(e.detail());
        return rep;
    }
    GroupHom h1 = D.hom_pi1, hs = D.hom_sigma;
    h1.src = &D.G1; h1.dst = &D.G0;
    hs.src = &D.G1; hs.dst = &D.G0;
    if (!h1.is_homomorphism()) {
        rep.ok = false;
        rep.violations.push_back("hom_pi1 is not a homomorphism");
    }
    if (!hs.is_homomorphism()) {
        rep.ok = false;
        rep.violations.push_back("hom_sigma is not a homomorphism");
    }

    // cover presentations are themselves valid
    auto vb = validate(D.base);
    auto vc = validate(D.cov);
    for (const auto& v : vb.violations) rep.violations.push_back("base: " + v);
    for (const auto& v : vc.violations) rep.violations.push_back("cover: " + v);
    rep.ok = rep.ok && vb.ok && vc.ok;

    // p pullbacks: I(X0) o p0 <= I(Z0), I(X1) o p1 <= I(Z1)
    std::vector<MPoly> p1 = D.p1();
    for (const auto& g : D.base.I0.gens())
        if (!reduces_to_zero(g.compose(D.p0), D.cov.I0)) {
            rep.ok = false;
            rep.violations.push_back("p0 does not map Z0 into X0: " + g.str());
        }
    for (const auto& g : D.base.I1.gens())
        if (!reduces_to_zero(g.compose(p1), D.cov.I1)) {
            rep.ok = false;
            rep.violations.push_back("p1 does not map Z1 into X1: " + g.str());
        }

    // group actions: ideal preservation, deck property, table consistency
    for (int g = 0; g < D.G0.size(); ++g) {
        for (const auto& f : D.cov.I0.gens())
            if (!reduces_to_zero(f.compose(D.act0[g]), D.cov.I0)) {
                rep.ok = false;
                rep.violations.push_back("G0 action of " + D.G0.labels[g] +
                                         " does not preserve I(Z0): " + f.str());
            }
        check_tuple(rep, compose_tuple(D.p0, D.act0[g]), D.p0, D.cov.I0,
                    "p0-equivariance of " + D.G0.labels[g]);
    }
    for (int a = 0; a < D.G0.size(); ++a)
        for (int b = 0; b < D.G0.size(); ++b)
            check_tuple(rep, compose_tuple(D.act0[a], D.act0[b]), D.act0[D.G0.mul(a, b)],
                        D.cov.I0, "G0 table consistency at " + D.G0.labels[a] + "*" + D.G0.labels[b]);
    check_tuple(rep, D.act0[D.G0.id], vars_tuple(k, D.cov.vars0), D.cov.I0, "G0 identity action");

    for (int g = 0; g < D.G1.size(); ++g) {
        for (const auto& f : D.cov.I1.gens())
            if (!reduces_to_zero(f.compose(D.act1[g]), D.cov.I1)) {
                rep.ok = false;
                rep.violations.push_back("G1 action of " + D.G1.labels[g] +
                                         " does not preserve I(Z1): " + f.str());
            }
        check_tuple(rep, compose_tuple(p1, D.act1[g]), p1, D.cov.I1,
                    "p1-equivariance of " + D.G1.labels[g]);
    }
    for (int a = 0; a < D.G1.size(); ++a)
        for (int b = 0; b < D.G1.size(); ++b)
            check_tuple(rep, compose_tuple(D.act1[a], D.act1[b]), D.act1[D.G1.mul(a, b)],
                        D.cov.I1, "G1 table consistency at " + D.G1.labels[a] + "*" + D.G1.labels[b]);
    check_tuple(rep, D.act1[D.G1.id], vars_tuple(k, D.cov.vars1), D.cov.I1, "G1 identity action");

    // intertwining pi_1 g1 = g1^{pi_1} pi_1 and sigma~ g1 = g1^{sigma~} sigma~
    {
        std::vector<MPoly> zproj, wproj;
        for (int i = 0; i < D.cov.n; ++i)
            zproj.push_back(MPoly::variable(k, D.cov.vars1, D.cov.x_index(i)));
        for (int i = 0; i < D.cov.n; ++i)
            wproj.push_back(MPoly::variable(k, D.cov.vars1, D.cov.y_index(i)));
        for (int g = 0; g < D.G1.size(); ++g) {
            // z-part of act1[g] vs act0[g^{pi1}] applied to z-projection
            std::vector<MPoly> lhs(D.act1[g].begin(), D.act1[g].begin() + D.cov.n);
            std::vector<MPoly> rhs = compose_tuple(D.act0[h1(g)], zproj);
            check_tuple(rep, lhs, rhs, D.cov.I1, "pi_1 intertwining of " + D.G1.labels[g]);
            std::vector<MPoly> lhs2(D.act1[g].begin() + D.cov.n, D.act1[g].end());
            std::vector<MPoly> rhs2 = compose_tuple(D.act0[hs(g)], wproj);
            check_tuple(rep, lhs2, rhs2, D.cov.I1, "sigma~ intertwining of " + D.G1.labels[g]);
        }
    }
    // etale certificates: triangular fibre relations with discriminant
    // invertible on the cover piece, at both levels
    auto etale_level = [&](const Ideal& src, const Ideal& opens,
                           const std::vector<MPoly>& pmap, const VarsPtr& dst_vars,
                           const std::string& what) {
        GraphIdeal g = graph_ideal(src, pmap, dst_vars);
        FibreShape sh = analyze_fibre(g.J, g.src_idx);
        if (!sh.triangular || !sh.free_coords.empty()) {
            rep.ok = false;
            rep.violations.push_back(what + ": fibre relations are not finite triangular");
            return;
        }
        if (sh.disc.is_zero()) {
            rep.ok = false;
            rep.violations.push_back(what + ": inseparable fibre relation");
            return;
        }
        if (sh.disc.is_constant()) return;
        Ideal opensJ = remap(opens, g.joint, g.src_idx);
        if (opensJ.gens().empty()) return;   // empty piece: vacuously etale
        Ideal Jd = g.J.with_extra(sh.disc);
        for (const auto& u : opensJ.gens()) {
            if (!radical_contains(Jd, u)) {
                rep.ok = false;
                rep.violations.push_back(what + ": discriminant vanishes on the piece");
                return;
            }
        }
    };
    if (rep.ok && !D.trivial) {
        // the cover's opens together with the base opens pulled through p
        Ideal op0 = locus_union(D.cov.U0, pullback(D.base.U0, D.p0));
        Ideal op1 = locus_union(D.cov.U1, pullback(D.base.U1, p1));
        etale_level(D.cov.I0, op0, D.p0, D.base.vars0, "Z0/X0");
        etale_level(D.cov.I1, op1, p1, D.base.vars1, "Z1/X1");
    }

    // fibre transitivity of G1 on sample finite-field fibres
    if (rep.ok && !D.trivial && k->is_finite()) {
        DiffField K = make_difffield(k->p(), static_cast<int>(k->degree()), 1);
        PointSet base_pts;
        try {
            base_pts = enumerate_realisations(D.base, K, 200000);
        } catch (const Error&) {
            rep.notes.push_back("orbit check skipped: base enumeration over budget");
        }
        int checked = 0;
        for (const auto& x : base_pts) {
            if (checked >= 3) break;
            std::vector<int> subs;
            try {
                subs = local_frobenius_all_lifts(D, x, K);
            } catch (const Error& e) {
                rep.notes.push_back(std::string("orbit check skipped at a point: ") + e.detail());
                continue;
            }
            // all lifts must give one twisted class
            std::set<int> cls = twisted_closure(D, {subs[0]});
            for (int g : subs) {
                if (!cls.count(g)) {
                    rep.ok = false;
                    rep.violations.push_back("fibre lifts give different twisted classes");
                    break;
                }
            }
            ++checked;
        }
        if (checked) rep.notes.push_back("orbit/lift sampling: " + std::to_string(checked) + " fibre(s)");
    }

    if (rep.ok) rep.notes.push_back("faithful: directly etale Galois covers act faithfully");
    return rep;
}

std::vector<Point> solve_zero_dim(const Ideal& I, std::uint64_t budget) {
    const FieldPtr& K = I.field();
    const int n = static_cast<int>(I.vars()->size());
    std::vector<Point> out;
    struct Frame {
        Ideal J;
        Point partial;           // values for solved vars (index-aligned, unset = anything)
        std::vector<char> solved;
    };
    std::vector<Frame> work;
    work.push_back({I, Point(n, K->zero()), std::vector<char>(n, 0)});
    std::uint64_t steps = 0;
    while (!work.empty()) {
        if (++steps > budget) throw Error("cover", "zero-dim solver budget exceeded");
        Frame fr = work.back();
        work.pop_back();
        const auto& gb = fr.J.groebner(MonoOrder::lex());
        if (fr.J.is_unit()) continue;
        // all solved?
        bool done = true;
        for (int v = 0; v < n; ++v)
            if (!fr.solved[v]) {
                // variable must not occur in any generator; otherwise not done
                for (const auto& p : gb.polys)
                    if (p.uses_var(v)) { done = false; break; }
            }
        if (done) {
            // unsolved vars do not occur: system is not zero-dimensional unless
            // none remain unconstrained; treat free vars as an error
            bool free_var = false;
            for (int v = 0; v < n; ++v)
                if (!fr.solved[v]) free_var = true;
            if (free_var) throw Error("cover", "fibre system is not zero-dimensional");
            out.push_back(fr.partial);
            continue;
        }
        // find a univariate generator
        const MPoly* uni = nullptr;
        int uvar = -1;
        for (const auto& p : gb.polys) {
            auto used = p.used_vars();
            if (used.size() == 1 && !fr.solved[used[0]]) {
                if (!uni || p.degree_in(used[0]) < uni->degree_in(uvar)) {
                    uni = &p;
                    uvar = used[0];
                }
            }
        }
        if (!uni) throw Error("cover", "no univariate element found (not zero-dimensional?)");
        UPoly u = upoly_from_mpoly(*uni, uvar);
        for (const auto& r : up_roots(u)) {
            std::vector<MPoly> gens;
            for (const auto& p : gb.polys) {
                MPoly s = p.substitute(uvar, r);
                if (!s.is_zero()) gens.push_back(s);
            }
            Frame nf;
            nf.J = Ideal(K, I.vars(), gens);
            nf.partial = fr.partial;
            nf.partial[uvar] = r;
            nf.solved = fr.solved;
            nf.solved[uvar] = 1;
            work.push_back(std::move(nf));
        }
    }
    std::sort(out.begin(), out.end(), PointLess{});
    return out;
}

namespace {

// embed the cover data over the enumeration field
struct CompiledCover {
    FieldPtr K;
    VarsPtr vars1;                    // cover level-1 vars
    std::vector<MPoly> I1gens;        // over K
    std::vector<MPoly> p0x, p0w;      // p0 on z-block / w-block, over K, in vars1
    std::vector<std::vector<MPoly>> act0K;   // over K, in cov.vars0
};

CompiledCover compile_cover(const GaloisCover& D, const FieldPtr& K) {
    CompiledCover C;
    C.K = K;
    C.vars1 = D.cov.vars1;
    std::optional<FieldEmbedding> emb;
    if (!D.base.k->is_rationals() && !D.base.k->same(*K)) emb = embed_field(D.base.k, K);
    auto conv = [&](const FieldElem& c) {
        if (D.base.k->is_rationals()) return K->from_mpq(c.rat());
        if (!emb) return c;
        return emb->map(c);
    };
    for (const auto& g : D.cov.I1.gens()) C.I1gens.push_back(g.map_coeffs(K, conv));
    std::vector<int> zmap(D.cov.n), wmap(D.cov.n);
    for (int i = 0; i < D.cov.n; ++i) {
        zmap[i] = D.cov.x_index(i);
        wmap[i] = D.cov.y_index(i);
    }
    for (const auto& g : D.p0) {
        MPoly gk = g.map_coeffs(K, conv);
        C.p0x.push_back(gk.remap(D.cov.vars1, zmap));
        C.p0w.push_back(gk.remap(D.cov.vars1, wmap));
    }
    for (const auto& act : D.act0) {
        std::vector<MPoly> a;
        for (const auto& g : act) a.push_back(g.map_coeffs(K, conv));
        C.act0K.push_back(std::move(a));
    }
    return C;
}

// fibre of Z1 over x1 = (x, phi x): all points over Ks
std::vector<Point> fibre_points(const GaloisCover& D, const Point& x, const DiffField& K,
                                const FieldPtr& Ks) {
    CompiledCover C = compile_cover(D, Ks);
    FieldEmbedding lift = embed_field(K.Fqm, Ks);
    std::vector<MPoly> gens = C.I1gens;
    for (int i = 0; i < D.base.n; ++i) {
        FieldElem xi = lift.map(x[i]);
        FieldElem fxi = lift.map(K.frob(x[i]));
        gens.push_back(C.p0x[i] - MPoly::constant(Ks, D.cov.vars1, xi));
        gens.push_back(C.p0w[i] - MPoly::constant(Ks, D.cov.vars1, fxi));
    }
    Ideal J(Ks, D.cov.vars1, gens);
    return solve_zero_dim(J);
}

int substitution_of_lift(const GaloisCover& D, const Point& z1, const DiffField& K,
                         const FieldPtr& Ks) {
    // solve g0(sigma~(z1)) = phi(pi_1(z1))
    const int nz = D.cov.n;
    Point zpart(z1.begin(), z1.begin() + nz);
    Point wpart(z1.begin() + nz, z1.end());
    Point phi_z;
    for (const auto& c : zpart) phi_z.push_back(Ks->frobenius(c, static_cast<unsigned>(K.e)));
    return find_group_element(D, wpart, phi_z, Ks);
}

} // namespace

int find_group_element(const GaloisCover& D, const Point& w, const Point& target,
                       const FieldPtr& K) {
    CompiledCover C = compile_cover(D, K);
    int found = -1;
    for (int g = 0; g < D.G0.size(); ++g) {
        bool match = true;
        for (int i = 0; i < D.cov.n && match; ++i)
            if (!(C.act0K[g][i].eval(w) == target[i])) match = false;
        if (match) {
            if (found >= 0)
                throw Error("cover", "non-unique transporter: faithfulness failure");
            found = g;
        }
    }
    if (found < 0) throw Error("cover", "no group element transports the fibre point");
    return found;
}

std::set<int> twisted_closure(const GaloisCover& D, const std::set<int>& S) {
    GroupHom h1 = D.hom_pi1, hs = D.hom_sigma;
    h1.src = &D.G1; h1.dst = &D.G0;
    hs.src = &D.G1; hs.dst = &D.G0;
    return twisted_closure(S, D.G0, D.G1, h1, hs);
}

TwistedClass local_frobenius(const GaloisCover& D, const Point& x, const DiffField& K) {
    if (D.trivial) return TwistedClass{{D.G0.id}};
    if (!is_point(D.base, x, K))
        throw Error("cover", "local substitution at a non-realisation");
    const int smax = std::max(D.G1.size(), 2);
    for (int s = 1; s <= smax; ++s) {
        FieldPtr Ks = s == 1 ? K.Fqm
                             : Field::extension(K.p, static_cast<unsigned>(K.e * K.m * s));
        std::vector<Point> fibre;
        try {
            fibre = fibre_points(D, x, K, Ks);
        } catch (const Error&) {
            continue;
        }
        if (fibre.empty()) continue;
        int g0 = substitution_of_lift(D, fibre.front(), K, Ks);
        return TwistedClass{twisted_closure(D, {g0})};
    }
    throw Error("cover", "no fibre lift found within the extension-degree bound");
}

std::vector<int> local_frobenius_all_lifts(const GaloisCover& D, const Point& x,
                                           const DiffField& K) {
    if (D.trivial) return {D.G0.id};
    const int expected = D.G1.size();
    const int smax = std::max(2 * D.G1.size(), 4);
    for (int s = 1; s <= smax; ++s) {
        FieldPtr Ks = s == 1 ? K.Fqm
                             : Field::extension(K.p, static_cast<unsigned>(K.e * K.m * s));
        std::vector<Point> fibre = fibre_points(D, x, K, Ks);
        if (static_cast<int>(fibre.size()) < expected) continue;
        std::vector<int> out;
        for (const auto& z1 : fibre) out.push_back(substitution_of_lift(D, z1, K, Ks));
        return out;
    }
    throw Error("cover", "full fibre not found within the extension-degree bound");
}

GaloisCover reduce_mod_cover(const GaloisCover& D, const FieldPtr& k2) {
    GaloisCover E = D;
    E.base = reduce_mod(D.base, k2);
    E.cov = reduce_mod(D.cov, k2);
    std::optional<FieldEmbedding> emb;
    if (!D.base.k->is_rationals()) emb = embed_field(D.base.k, k2);
    auto conv = [&](const FieldElem& c) {
        if (D.base.k->is_rationals()) return k2->from_mpq(c.rat());
        return emb->map(c);
    };
    E.p0.clear();
    for (const auto& g : D.p0) E.p0.push_back(g.map_coeffs(k2, conv));
    E.act0.clear();
    for (const auto& a : D.act0) {
        std::vector<MPoly> t;
        for (const auto& g : a) t.push_back(g.map_coeffs(k2, conv));
        E.act0.push_back(std::move(t));
    }
    E.act1.clear();
    for (const auto& a : D.act1) {
        std::vector<MPoly> t;
        for (const auto& g : a) t.push_back(g.map_coeffs(k2, conv));
        E.act1.push_back(std::move(t));
    }
    E.rebind_homs();
    return E;
}

} // namespace dirgal
