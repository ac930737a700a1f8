#include "dirgal/decompose.hpp"

#include <algorithm>
#include <deque>

#include "dirgal/ufactor.hpp"

namespace dirgal {

namespace {

// Replace generators by the Groebner basis with each element's squarefree
// part (radical-preserving, which is all minimal primes care about).
Ideal sqf_normalize(const Ideal& I) {
    const auto& gb = I.groebner();
    std::vector<MPoly> gens;
    for (const auto& g : gb.polys) gens.push_back(squarefree_part(g));
    return Ideal(I.field(), I.vars(), std::move(gens));
}

// Find a generator of the form c*v + h (c a nonzero constant, h free of v).
// Returns (gen index, var, value -h/c) or nullopt.
struct GraphVar {
    int gen;
    int var;
    MPoly value;
};
std::optional<GraphVar> find_graph_var(const Ideal& I) {
    for (std::size_t gi = 0; gi < I.gens().size(); ++gi) {
        const MPoly& g = I.gens()[gi];
        for (int v : g.used_vars()) {
            if (g.degree_in(v) != 1) continue;
            auto cs = g.coeffs_in(v);
            if (!cs[1].is_constant()) continue;
            FieldElem c = cs[1].constant_value();
            MPoly value = cs[0].scaled(I.field()->neg(I.field()->inv(c)));
            if (value.uses_var(v)) continue;
            return GraphVar{static_cast<int>(gi), v, value};
        }
    }
    return std::nullopt;
}

Ideal substitute_graph(const Ideal& I, const GraphVar& gv) {
    std::vector<MPoly> args;
    for (int i = 0; i < static_cast<int>(I.vars()->size()); ++i)
        args.push_back(i == gv.var ? gv.value
                                   : MPoly::variable(I.field(), I.vars(), i));
    std::vector<MPoly> gens;
    for (std::size_t gi = 0; gi < I.gens().size(); ++gi) {
        if (static_cast<int>(gi) == gv.gen) continue;
        MPoly s = I.gens()[gi].compose(args);
        if (!s.is_zero()) gens.push_back(s);
    }
    return Ideal(I.field(), I.vars(), std::move(gens));
}

// Quadratic-pair splitting: generators u, w quadratic in distinct variables
// a, b with constant leading coefficients.  The identity
//   (L - s*t)(L + s*t) = 4 du (A_w du w - A_u dw u)   in (u, w)
// with L = du(2 A_w b + B_w), t = 2 A_u a + B_u, s^2 = du*dw holds for any
// coefficients, so V(I) splits along the two factors whenever du*dw has a
// polynomial square root.
struct PairSplit {
    MPoly branch1, branch2;
};
std::vector<PairSplit> quadratic_pair_splits(const Ideal& I) {
    std::vector<PairSplit> out;
    const FieldPtr& k = I.field();
    if (k->characteristic() == 2) return out;
    const auto& gens = I.gens();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (i == j) continue;
            const MPoly& u = gens[i];
            const MPoly& w = gens[j];
            for (int a : u.used_vars()) {
                if (u.degree_in(a) != 2) continue;
                for (int b : w.used_vars()) {
                    if (b == a || w.degree_in(b) != 2) continue;
                    auto uc = u.coeffs_in(a);
                    auto wc = w.coeffs_in(b);
                    if (!uc[2].is_constant() || !wc[2].is_constant()) continue;
                    if (uc[2].uses_var(b) || uc[1].uses_var(b) || uc[0].uses_var(b)) continue;
                    MPoly du = uc[1] * uc[1] -
                               MPoly::from_int(k, I.vars(), 4) * uc[2] * uc[0];
                    MPoly dw = wc[1] * wc[1] -
                               MPoly::from_int(k, I.vars(), 4) * wc[2] * wc[0];
                    if (du.is_zero() || dw.is_zero()) continue;
                    auto s = mpoly_sqrt(du * dw);
                    if (!s) continue;
                    MPoly tu = MPoly::from_int(k, I.vars(), 2) * uc[2] *
                                   MPoly::variable(k, I.vars(), a) +
                               uc[1];
                    MPoly lin = du * (MPoly::from_int(k, I.vars(), 2) * wc[2] *
                                          MPoly::variable(k, I.vars(), b) +
                                      wc[1]);
                    out.push_back(PairSplit{lin - *s * tu, lin + *s * tu});
                }
            }
        }
    }
    return out;
}

bool certify_prime(const Ideal& I);

// after graph peeling: decide primality of the reduced ideal
bool certify_prime_core(const Ideal& I) {
    const auto& gens = I.gens();
    if (gens.empty()) return true;                    // zero ideal in a domain
    if (I.is_unit()) return false;
    if (gens.size() == 1) return irreducible_cert(gens[0]) == Cert::yes;
    return false;
}

bool certify_prime(const Ideal& I) {
    Ideal J = Ideal(I.field(), I.vars(), I.groebner().polys);
    for (;;) {
        if (certify_prime_core(J)) return true;
        auto gv = find_graph_var(J);
        if (!gv) return false;
        J = substitute_graph(J, *gv);
        J = Ideal(J.field(), J.vars(), J.groebner().polys);
    }
}

} // namespace

std::vector<Ideal> decompose_variety(const Ideal& I) {
    std::vector<Ideal> primes;
    if (I.is_unit()) return primes;
    std::deque<Ideal> work;
    work.push_back(I);
    int steps = 0;
    while (!work.empty()) {
        if (++steps > 4096) throw Error("decompose", "decomposition did not terminate");
        Ideal J = sqf_normalize(work.front());
        work.pop_front();
        if (J.is_unit()) continue;

        // 1. split along a factoring generator
        bool split = false;
        for (const auto& g : J.gens()) {
            MFactorResult mf = mfactor(g);
            std::vector<MPoly> parts;
            for (const auto& [h, m] : mf.factors) parts.push_back(h);
            if (parts.size() > 1) {
                for (const auto& h : parts) work.push_back(J.with_extra(h));
                split = true;
                break;
            }
        }
        if (split) continue;

        // 2. certified prime?
        if (certify_prime(J)) {
            primes.push_back(J);
            continue;
        }

        // 3. splitting after peeling graph variables: substituted generators
        // may factor, and quadratic pairs may separate; peeled generators
        // lie in J, so branches J + factor are sound.  Only splits adding
        // fresh generators count as progress.
        {
            Ideal P = J;
            bool resolved = false;
            for (;;) {
                for (const auto& g : P.gens()) {
                    MFactorResult mf = mfactor(squarefree_part(g));
                    if (mf.factors.size() < 2) continue;
                    bool fresh = true;
                    for (const auto& [h, m2] : mf.factors)
                        if (J.contains(h)) fresh = false;
                    if (!fresh) continue;
                    for (const auto& [h, m2] : mf.factors) work.push_back(J.with_extra(h));
                    resolved = true;
                    break;
                }
                if (resolved) break;
                for (const auto& ps : quadratic_pair_splits(P)) {
                    // a branch already inside J carries no information
                    if (J.contains(ps.branch1) || J.contains(ps.branch2)) continue;
                    work.push_back(J.with_extra(ps.branch1));
                    work.push_back(J.with_extra(ps.branch2));
                    resolved = true;
                    break;
                }
                if (resolved) break;
                auto gv = find_graph_var(P);
                if (!gv) break;
                P = Ideal(P.field(), P.vars(), substitute_graph(P, *gv).groebner().polys);
            }
            if (resolved) continue;
        }

        // 4. elimination-driven splitting: find a univariate element in some
        // variable and split along its factors
        {
            bool resolved = false;
            const int n = static_cast<int>(J.vars()->size());
            for (int v = 0; v < n && !resolved; ++v) {
                std::vector<int> keep{v};
                Ideal ev = eliminate_in_place(J, keep);
                for (const auto& u : ev.gens()) {
                    if (u.is_zero() || u.is_constant()) continue;
                    MFactorResult mf = mfactor(u);
                    std::vector<MPoly> parts;
                    for (const auto& [h, m] : mf.factors) parts.push_back(h);
                    if (parts.size() > 1) {
                        for (const auto& h : parts) work.push_back(J.with_extra(h));
                        resolved = true;
                        break;
                    }
                }
            }
            if (resolved) continue;
        }

        throw Error("decompose",
                    "decomposition incomplete: cannot certify primality of " + J.str());
    }

    // minimalize: drop components containing another component, dedupe
    std::vector<Ideal> out;
    for (const auto& P : primes) {
        bool dominated = false;
        for (const auto& Q : primes) {
            if (&P == &Q) continue;
            if (P.contains_ideal(Q)) {
                // V(P) subset of V(Q): P is not minimal unless equal (dedupe below)
                if (!Q.contains_ideal(P)) { dominated = true; break; }
            }
        }
        if (dominated) continue;
        bool dup = false;
        for (const auto& R : out)
            if (R.same_ideal(P)) { dup = true; break; }
        if (!dup) out.push_back(P);
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& a, const Ideal& b) { return a.str() < b.str(); });
    return out;
}

bool is_prime_certified(const Ideal& I) {
    if (I.is_unit()) return false;
    auto comps = decompose_variety(I);
    return comps.size() == 1 && comps[0].same_ideal(I);
}

Cert geometrically_integral(const Ideal& I, int extension_bound) {
    if (I.is_unit()) return Cert::no;
    std::vector<Ideal> comps;
    try {
        comps = decompose_variety(I);
    } catch (const Error&) {
        return Cert::unknown;
    }
    if (comps.size() != 1) return Cert::no;
    if (!comps[0].same_ideal(I)) return Cert::no;   // embedded structure: not integral as given

    // peel graph variables; the quotient is unchanged up to isomorphism
    Ideal J = Ideal(I.field(), I.vars(), I.groebner().polys);
    for (;;) {
        auto gv = find_graph_var(J);
        if (!gv) break;
        J = Ideal(J.field(), J.vars(), substitute_graph(J, *gv).groebner().polys);
    }
    if (J.gens().empty()) return Cert::yes;   // affine space
    if (J.is_unit()) return Cert::no;
    if (J.gens().size() == 1) {
        const MPoly& f = J.gens()[0];
        int bound = extension_bound > 0 ? extension_bound : std::max(2, f.total_degree());
        return absolutely_irreducible_cert(f, bound);
    }
    // non-principal after peeling: try the finite-field base-change scan on
    // the whole ideal
    const FieldPtr& k = I.field();
    if (k->is_finite()) {
        int degsum = 0;
        for (const auto& g : J.gens()) degsum += std::max(1, g.total_degree());
        int bound = extension_bound > 0 ? extension_bound : std::max(2, degsum);
        for (int j = 2; j <= bound; ++j) {
            auto big = Field::extension(k->p(), k->degree() * j);
            auto emb = embed_field(k, big);
            Ideal Jj = map_coeffs(J, big, [&](const FieldElem& c) { return emb.map(c); });
            try {
                auto cj = decompose_variety(Jj);
                if (cj.size() != 1) return Cert::no;
            } catch (const Error&) {
                return Cert::unknown;
            }
        }
        return Cert::unknown;   // scan is evidence, not a certificate, for this shape
    }
    return Cert::unknown;
}

} // namespace dirgal
