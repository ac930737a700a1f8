#include "dirgal/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "dirgal/fibres.hpp"
#include "dirgal/ufactor.hpp"

namespace dirgal {

namespace {

} // namespace

DirectPresentation DirectPresentation::make(FieldPtr k, int n,
                                            const std::vector<std::string>& gens0,
                                            const std::vector<std::string>& gens1,
                                            const std::string& prefix0,
                                            const std::string& prefix1) {
    DirectPresentation P;
    P.k = std::move(k);
    P.n = n;
    P.vars0 = numbered_vars(prefix0, n);
    P.vars1 = concat_vars(P.vars0, numbered_vars(prefix1, n));
    P.I0 = Ideal::parse(gens0, P.k, P.vars0);
    P.I1 = Ideal::parse(gens1, P.k, P.vars1);
    P.U0 = Ideal::unit(P.k, P.vars0);
    P.U1 = Ideal::unit(P.k, P.vars1);
    return P;
}

DirectPresentation DirectPresentation::make_ideals(FieldPtr k, int n, Ideal I0, Ideal I1,
                                                   const std::string& prefix0,
                                                   const std::string& prefix1) {
    DirectPresentation P;
    P.k = std::move(k);
    P.n = n;
    P.vars0 = numbered_vars(prefix0, n);
    P.vars1 = concat_vars(P.vars0, numbered_vars(prefix1, n));
    P.I0 = embed(I0, P.vars0);
    P.I1 = embed(I1, P.vars1);
    P.U0 = Ideal::unit(P.k, P.vars0);
    P.U1 = Ideal::unit(P.k, P.vars1);
    return P;
}

DirectPresentation DirectPresentation::affine_space(FieldPtr k, int n) {
    return make(std::move(k), n, {}, {});
}

Ideal DirectPresentation::lift0_x(const Ideal& J) const {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = x_index(i);
    return remap(J, vars1, idx);
}

Ideal DirectPresentation::lift0_y(const Ideal& J) const {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = y_index(i);
    return remap(J, vars1, idx);
}

DirectPresentation DirectPresentation::with_open0(const Ideal& more) const {
    DirectPresentation P = *this;
    P.U0 = locus_union(P.U0, more);
    // level-1 exclusion propagates through both projections
    P.U1 = locus_union(P.U1, locus_union(lift0_x(more), lift0_y(more)));
    return P;
}

DirectPresentation DirectPresentation::with_open1(const Ideal& more) const {
    DirectPresentation P = *this;
    P.U1 = locus_union(P.U1, more);
    return P;
}

bool DirectPresentation::no_opens() const { return U0.is_unit() && U1.is_unit(); }

std::string DirectPresentation::str() const {
    std::ostringstream os;
    os << "{n=" << n << ", I0=" << I0.str() << ", I1=" << I1.str();
    if (!U0.is_unit()) os << ", U0=" << U0.str();
    if (!U1.is_unit()) os << ", U1=" << U1.str();
    os << "}";
    return os.str();
}

ValidationReport validate(const DirectPresentation& P) {
    ValidationReport rep;
    // containments I0(x), I0(y) <= I1
    for (const auto& g : P.I0.gens()) {
        MPoly gx = embed(Ideal(P.k, P.vars0, {g}), P.vars1).gens()[0];
        if (!P.I1.contains(gx)) {
            rep.ok = false;
            rep.violations.push_back("pi_1 escapes X0: " + g.str() + " not in I1");
        }
    }
    {
        Ideal I0y = P.lift0_y(P.I0);
        for (const auto& g : I0y.gens()) {
            if (!P.I1.contains(g)) {
                rep.ok = false;
                rep.violations.push_back("pi_2 escapes X0: " + g.str() + " not in I1");
            }
        }
    }
    if (P.I0.is_unit()) rep.notes.push_back("empty presentation");
    // reducedness check on the supported class: generators squarefree
    auto sqfree = [](const Ideal& I) {
        for (const auto& g : I.gens()) {
            if (g.is_zero() || g.is_constant()) continue;
            MPoly s = squarefree_part(g);
            if (!divide_exact(g, s).has_value() || s.total_degree() != g.total_degree())
                return false;
        }
        return true;
    };
    if (sqfree(P.I0) && sqfree(P.I1)) rep.notes.push_back("radical: generators squarefree");
    else rep.notes.push_back("radical: unverified (non-squarefree generator)");
    return rep;
}

namespace {

std::vector<int> x_block(const DirectPresentation& P) {
    std::vector<int> v(P.n);
    for (int i = 0; i < P.n; ++i) v[i] = P.x_index(i);
    return v;
}
std::vector<int> y_block(const DirectPresentation& P) {
    std::vector<int> v(P.n);
    for (int i = 0; i < P.n; ++i) v[i] = P.y_index(i);
    return v;
}

// closure of pi_1(V(W)) as an ideal in vars0
Ideal project_x(const DirectPresentation& P, const Ideal& W) {
    Ideal e = eliminate(W, x_block(P));
    return embed(e, P.vars0);
}
// closure of pi_2(V(W)), renamed to vars0
Ideal project_y(const DirectPresentation& P, const Ideal& W) {
    Ideal e = eliminate(W, y_block(P));   // ambient: partner names
    std::vector<int> idx(P.n);
    for (int i = 0; i < P.n; ++i) idx[i] = i;
    return remap(e, P.vars0, idx);
}

} // namespace

bool is_h_direct(const DirectPresentation& P) {
    if (P.I0.is_unit() || P.I1.is_unit()) return false;
    if (!is_prime_certified(P.I0)) return false;
    if (!is_prime_certified(P.I1)) return false;
    Ideal px = project_x(P, P.I1);
    Ideal py = project_y(P, P.I1);
    return px.same_ideal(P.I0) && py.same_ideal(P.I0);
}

std::vector<DirectPresentation> direct_decompose(const DirectPresentation& P) {
    std::vector<DirectPresentation> out;
    if (P.I1.is_unit() || P.I0.is_unit()) return out;
    struct Item {
        Ideal W;
        int depth;
    };
    std::vector<Item> work;
    // start: components of X1 inside X0 x X0
    Ideal start = P.I1.plus(P.lift0_x(P.I0)).plus(P.lift0_y(P.I0));
    for (auto& C : decompose_variety(start)) work.push_back({C, 0});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.depth > P.n + 1)
            throw Error("presentations", "direct decomposition recursion exceeded dim bound");
        Ideal X1c = project_x(P, it.W);
        Ideal X2c = project_y(P, it.W);
        if (X1c.same_ideal(X2c)) {
            DirectPresentation Q = P;
            Q.I0 = X1c;
            Q.I1 = it.W;
            out.push_back(Q);
            continue;
        }
        Ideal X0p = X1c.plus(X2c);
        Ideal Wp = it.W.plus(P.lift0_x(X0p)).plus(P.lift0_y(X0p));
        if (Wp.is_unit()) continue;
        for (auto& C : decompose_variety(Wp)) work.push_back({C, it.depth + 1});
    }
    // deterministic order, drop duplicates
    std::sort(out.begin(), out.end(), [](const DirectPresentation& a, const DirectPresentation& b) {
        return a.I1.str() < b.I1.str();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const DirectPresentation& a, const DirectPresentation& b) {
                              return a.I1.same_ideal(b.I1) && a.I0.same_ideal(b.I0);
                          }),
              out.end());
    return out;
}

DirectPresentation direct_localize(const DirectPresentation& P,
                                   const std::optional<Ideal>& V0,
                                   const std::optional<Ideal>& V1) {
    if (!V0 && !V1) return P;
    DirectPresentation Q = P;
    if (V0) Q = Q.with_open0(*V0);
    if (V1) Q = Q.with_open1(*V1);
    return Q;
}

DirectPresentation reduce_mod(const DirectPresentation& P, const FieldPtr& k2) {
    DirectPresentation Q = P;
    std::optional<FieldEmbedding> emb;
    if (!P.k->is_rationals()) emb = embed_field(P.k, k2);
    auto conv = [&](const FieldElem& c) {
        if (P.k->is_rationals()) return k2->from_mpq(c.rat());
        return emb->map(c);
    };
    Q.k = k2;
    Q.I0 = map_coeffs(P.I0, k2, conv);
    Q.I1 = map_coeffs(P.I1, k2, conv);
    Q.U0 = map_coeffs(P.U0, k2, conv);
    Q.U1 = map_coeffs(P.U1, k2, conv);
    return Q;
}

std::vector<MPoly> PresentationMorphism::f1() const {
    // src.vars1 -> dst.vars1: x-block via f0, y-block via f0 renamed
    std::vector<MPoly> out;
    std::vector<int> xmap(src.n), ymap(src.n);
    for (int i = 0; i < src.n; ++i) {
        xmap[i] = src.x_index(i);
        ymap[i] = src.y_index(i);
    }
    for (const auto& g : f0) out.push_back(g.remap(src.vars1, xmap));
    for (const auto& g : f0) out.push_back(g.remap(src.vars1, ymap));
    return out;
}

PresentationMorphism make_morphism(DirectPresentation src, DirectPresentation dst,
                                   const std::vector<std::string>& f0_texts) {
    PresentationMorphism f;
    f.src = std::move(src);
    f.dst = std::move(dst);
    if (static_cast<int>(f0_texts.size()) != f.dst.n)
        throw Error("presentations", "morphism arity mismatch");
    for (const auto& t : f0_texts) f.f0.push_back(MPoly::parse(t, f.src.k, f.src.vars0));
    return f;
}

ValidationReport validate_morphism(const PresentationMorphism& f) {
    ValidationReport rep;
    // f0 maps V(I0 src) into V(I0 dst)
    std::vector<MPoly> m0 = f.f0;
    for (const auto& g : f.dst.I0.gens()) {
        MPoly back = g.compose(m0);
        if (!f.src.I0.contains(back)) {
            rep.ok = false;
            rep.violations.push_back("f0 pullback not in source I0: " + g.str());
        }
    }
    std::vector<MPoly> m1 = f.f1();
    for (const auto& g : f.dst.I1.gens()) {
        MPoly back = g.compose(m1);
        if (!f.src.I1.contains(back)) {
            rep.ok = false;
            rep.violations.push_back("f1 pullback not in source I1: " + g.str());
        }
    }
    return rep;
}

namespace {

// Joint graph ideal of f at level 0 (shared machinery in fibres.hpp).
GraphIdeal graph_level0(const PresentationMorphism& f) {
    return graph_ideal(f.src.I0, f.f0, f.dst.vars0);
}

} // namespace

std::vector<PropertyStratum> stratify_by_property(const PresentationMorphism& f,
                                                  MorphProperty prop) {
    std::vector<PropertyStratum> out;
    const FieldPtr& k = f.src.k;

    if (prop == MorphProperty::geom_integral_fibres) {
        // certificate on the generic fibre: relations free of a source
        // coordinate make it an affine factor; otherwise test the source
        // ideal with target coordinates as parameters
        GraphIdeal g = graph_level0(f);
        FibreShape sh = analyze_fibre(g.J, g.src_idx);
        PropertyStratum s;
        s.src_piece = f.src;
        s.dst_piece = f.dst;
        bool graph_relations_only =
            sh.triangular && std::all_of(sh.finite_rels.begin(), sh.finite_rels.end(),
                                         [&](const MPoly& r) {
                                             for (std::size_t i = 0; i < sh.finite_rels.size(); ++i)
                                                 if (&sh.finite_rels[i] == &r)
                                                     return r.degree_in(sh.finite_coords[i]) == 1;
                                             return false;
                                         });
        if (graph_relations_only) {
            // every finite coordinate is a graph over the target: the fibres
            // are affine spaces in the free coordinates
            s.holds = true;
            s.note = sh.finite_coords.empty() ? "fibres are affine spaces"
                                              : "graph relations over the target";
        } else if (sh.triangular && !sh.finite_coords.empty() &&
                   !(f.dst.n == 0 || std::all_of(f.f0.begin(), f.f0.end(),
                                                 [](const MPoly& p) { return p.is_constant(); }))) {
            s.holds = false;
            s.note = "finite fibre of degree >= 2: not geometrically connected";
        } else if (f.dst.n == 0 || std::all_of(f.f0.begin(), f.f0.end(),
                                               [](const MPoly& p) { return p.is_constant(); })) {
            Cert c = geometrically_integral(f.src.I0);
            s.holds = c == Cert::yes;
            s.note = c == Cert::unknown ? "undecided certificate" : "generic fibre = source";
            if (c == Cert::unknown)
                throw Error("presentations", "geometric integrality certificate undecided");
        } else {
            throw Error("presentations",
                        "geom_integral_fibres: unsupported fibre shape for this morphism");
        }
        out.push_back(std::move(s));
        return out;
    }

    // etale / smooth via the triangular-fibre discriminant certificate, with
    // devissage into the discriminant locus
    struct WorkItem {
        DirectPresentation src;
        DirectPresentation dst;
        int depth;
    };
    std::vector<WorkItem> work{{f.src, f.dst, 0}};
    while (!work.empty()) {
        WorkItem it = work.back();
        work.pop_back();
        if (it.depth > f.src.n + 1)
            throw Error("presentations", "property devissage exceeded dimension bound");
        PresentationMorphism fr{it.src, it.dst, f.f0};
        GraphIdeal g = graph_level0(fr);
        FibreShape sh = analyze_fibre(g.J, g.src_idx);
        bool shape_ok = sh.triangular &&
                        (prop == MorphProperty::smooth || sh.free_coords.empty());
        if (!shape_ok)
            throw Error("presentations", "property certificate unavailable: fibre not triangular");
        // disc lives in the joint ambient; express over src vars when possible
        MPoly disc = sh.disc;
        // substitute im.* coordinates by their defining polynomials to land in src vars
        std::vector<MPoly> sub;
        for (int i = 0; i < it.dst.n; ++i) sub.push_back(f.f0[i]);
        for (int i = 0; i < it.src.n; ++i)
            sub.push_back(MPoly::variable(k, it.src.vars0, i));
        MPoly disc_src = disc.compose(sub);
        if (disc_src.is_zero()) {
            throw Error("presentations", "inseparable fibre: property fails identically");
        }
        if (!disc_src.is_constant()) disc_src = squarefree_part(disc_src);
        if (disc_src.is_constant()) {
            PropertyStratum s;
            s.src_piece = it.src;
            s.dst_piece = it.dst;
            s.holds = true;
            s.note = "discriminant invertible";
            out.push_back(std::move(s));
            continue;
        }
        // stratum 1: disc != 0
        Ideal dideal(k, it.src.vars0, {disc_src});
        PropertyStratum s;
        s.src_piece = it.src.with_open0(dideal);
        s.dst_piece = it.dst;
        s.holds = true;
        s.note = "discriminant inverted on the piece";
        out.push_back(std::move(s));
        // stratum 2: disc = 0: restrict and recurse (dimension drops)
        DirectPresentation bad = it.src;
        bad.I0 = bad.I0.with_extra(disc_src);
        bad.I1 = bad.I1.plus(bad.lift0_x(Ideal(k, it.src.vars0, {disc_src})))
                     .plus(bad.lift0_y(Ideal(k, it.src.vars0, {disc_src})));
        if (bad.I0.is_unit()) continue;
        // image piece of the bad locus
        PresentationMorphism fbad{bad, it.dst, f.f0};
        GraphIdeal gb = graph_level0(fbad);
        Ideal img_dst = [&] {
            Ideal e = eliminate(gb.J, gb.dst_idx);
            std::vector<int> idx(it.dst.n);
            for (int i = 0; i < it.dst.n; ++i) idx[i] = i;
            return remap(e, it.dst.vars0, idx);
        }();
        DirectPresentation dbad = it.dst;
        dbad.I0 = dbad.I0.plus(img_dst);
        dbad.I1 = dbad.I1.plus(dbad.lift0_x(img_dst)).plus(dbad.lift0_y(img_dst));
        work.push_back({bad, dbad, it.depth + 1});
    }
    return out;
}

DirectPresentation fibre_product(const PresentationMorphism& f,
                                 const PresentationMorphism& g) {
    if (!(f.dst.I0.same_ideal(g.dst.I0) && f.dst.I1.same_ideal(g.dst.I1)))
        throw Error("presentations", "fibre product: targets differ");
    const FieldPtr& k = f.src.k;
    int n = f.src.n + g.src.n;
    DirectPresentation R;
    R.k = k;
    R.n = n;
    Vars names0;
    for (const auto& s : *f.src.vars0) names0.push_back("a." + s);
    for (const auto& s : *g.src.vars0) names0.push_back("b." + s);
    R.vars0 = make_vars(names0);
    Vars names1 = names0;
    for (const auto& s : *f.src.vars0) names1.push_back("ya." + s);
    for (const auto& s : *g.src.vars0) names1.push_back("yb." + s);
    R.vars1 = make_vars(names1);

    std::vector<int> aidx0(f.src.n), bidx0(g.src.n);
    for (int i = 0; i < f.src.n; ++i) aidx0[i] = i;
    for (int i = 0; i < g.src.n; ++i) bidx0[i] = f.src.n + i;
    std::vector<MPoly> gens0;
    Ideal fI0 = remap(f.src.I0, R.vars0, aidx0);
    Ideal gI0 = remap(g.src.I0, R.vars0, bidx0);
    for (const auto& p : fI0.gens()) gens0.push_back(p);
    for (const auto& p : gI0.gens()) gens0.push_back(p);
    // equalize images
    for (int j = 0; j < f.dst.n; ++j) {
        MPoly fa = f.f0[j].remap(R.vars0, aidx0);
        MPoly gb = g.f0[j].remap(R.vars0, bidx0);
        gens0.push_back(fa - gb);
    }
    R.I0 = Ideal(k, R.vars0, gens0);

    std::vector<int> aidx1(2 * f.src.n), bidx1(2 * g.src.n);
    for (int i = 0; i < f.src.n; ++i) {
        aidx1[i] = i;
        aidx1[f.src.n + i] = n + i;
    }
    for (int i = 0; i < g.src.n; ++i) {
        bidx1[i] = f.src.n + i;
        bidx1[g.src.n + i] = n + f.src.n + i;
    }
    std::vector<MPoly> gens1;
    Ideal fI1 = remap(f.src.I1, R.vars1, aidx1);
    Ideal gI1 = remap(g.src.I1, R.vars1, bidx1);
    for (const auto& p : fI1.gens()) gens1.push_back(p);
    for (const auto& p : gI1.gens()) gens1.push_back(p);
    std::vector<MPoly> f1 = f.f1(), g1 = g.f1();
    for (int j = 0; j < 2 * f.dst.n; ++j) {
        MPoly fa = f1[j].remap(R.vars1, aidx1);
        MPoly gb = g1[j].remap(R.vars1, bidx1);
        gens1.push_back(fa - gb);
    }
    R.I1 = Ideal(k, R.vars1, gens1);
    R.U0 = Ideal::unit(k, R.vars0);
    R.U1 = Ideal::unit(k, R.vars1);
    return R;
}

} // namespace dirgal
