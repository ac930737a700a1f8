#include "dirgal/points.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dirgal/ufactor.hpp"

namespace dirgal {

std::string DiffField::str() const {
    std::ostringstream os;
    os << "(q=" << q().get_str() << ", m=" << m << ")";
    return os.str();
}

DiffField make_difffield(std::uint64_t p, int e, int m) {
    DiffField K;
    K.p = p;
    K.e = e;
    K.m = m;
    K.Fqm = Field::extension(p, static_cast<unsigned>(e * m));
    return K;
}

namespace {

struct CompiledPresentation {
    FieldPtr F;
    int n;
    std::vector<MPoly> g0, u0;   // over F, vars0
    std::vector<MPoly> g1, u1;   // over F, vars1
    // per prefix length L: generators of I0 whose support is within [0, L)
    std::vector<std::vector<const MPoly*>> by_prefix;
};

CompiledPresentation compile(const DirectPresentation& P, const DiffField& K) {
    if (P.k->is_finite()) {
        if (P.k->p() != K.p)
            throw Error("points", "presentation characteristic differs from the field");
        // base field must land inside F_q so that phi_q restricts to the base
        // identity (the fixed base-difference-structure convention)
        if (static_cast<unsigned>(K.e * K.m) % P.k->degree() != 0)
            throw Error("points", "base field does not embed into F_{q^m}");
        if (static_cast<unsigned>(K.e) % P.k->degree() != 0)
            throw Error("points",
                        "base field not fixed by phi_q (only bases inside F_q are supported)");
    }
    CompiledPresentation C;
    C.F = K.Fqm;
    C.n = P.n;
    DirectPresentation Q = P.k->is_rationals() || !P.k->same(*K.Fqm) ? reduce_mod(P, K.Fqm) : P;
    C.g0 = Q.I0.gens();
    C.g1 = Q.I1.gens();
    C.u0 = Q.U0.gens();
    C.u1 = Q.U1.gens();
    C.by_prefix.assign(P.n + 1, {});
    for (const auto& g : C.g0) {
        int maxv = -1;
        for (int v : g.used_vars()) maxv = std::max(maxv, v);
        C.by_prefix[maxv + 1].push_back(&g);
    }
    return C;
}

// depth-first scan over F_{q^m}^n with prefix pruning; visit() returning
// false stops the scan early.
void scan(const CompiledPresentation& C, const DiffField& K, std::uint64_t budget,
          const std::function<bool(const Point&)>& visit) {
    const FieldPtr& F = C.F;
    std::uint64_t size = F->order_u64().value_or(0);
    if (!size) throw Error("points", "field too large to enumerate");
    // budget: n coordinates per tuple evaluation step
    double total = 1;
    for (int i = 0; i < C.n; ++i) total *= static_cast<double>(size);
    if (total > static_cast<double>(budget))
        throw Error("points", "enumeration budget exceeded: |F|^n = " +
                                  std::to_string(total) + " > " + std::to_string(budget));
    Point x(C.n, F->zero());
    bool stop = false;
    std::function<void(int)> rec = [&](int depth) {
        if (stop) return;
        // generators fully determined by the prefix
        for (const MPoly* g : C.by_prefix[depth]) {
            if (!g->eval(x).is_zero()) return;
        }
        if (depth == C.n) {
            // opens at level 0: excluded iff every generator vanishes (the
            // zero ideal excludes everything, the unit ideal nothing)
            bool excluded0 = true;
            for (const auto& u : C.u0)
                if (!u.eval(x).is_zero()) { excluded0 = false; break; }
            if (excluded0) return;
            // level 1: (x, phi(x))
            Point x1(2 * C.n, F->zero());
            for (int i = 0; i < C.n; ++i) {
                x1[i] = x[i];
                x1[C.n + i] = K.frob(x[i]);
            }
            for (const auto& g : C.g1)
                if (!g.eval(x1).is_zero()) return;
            bool excluded1 = true;
            for (const auto& u : C.u1)
                if (!u.eval(x1).is_zero()) { excluded1 = false; break; }
            if (excluded1) return;
            if (!visit(x)) stop = true;
            return;
        }
        for (std::uint64_t i = 0; i < size && !stop; ++i) {
            x[depth] = F->elem_at(i);
            rec(depth + 1);
        }
        x[depth] = F->zero();
    };
    rec(0);
}

} // namespace

PointSet enumerate_realisations(const DirectPresentation& P, const DiffField& K,
                                std::uint64_t budget) {
    CompiledPresentation C = compile(P, K);
    PointSet out;
    scan(C, K, budget, [&](const Point& x) {
        out.insert(x);
        return true;
    });
    return out;
}

bool is_point(const DirectPresentation& P, const Point& x, const DiffField& K) {
    CompiledPresentation C = compile(P, K);
    if (static_cast<int>(x.size()) != P.n) throw Error("points", "tuple arity mismatch");
    for (const auto& g : C.g0)
        if (!g.eval(x).is_zero()) return false;
    bool excluded0 = true;
    for (const auto& u : C.u0)
        if (!u.eval(x).is_zero()) { excluded0 = false; break; }
    if (excluded0) return false;
    Point x1(2 * P.n, C.F->zero());
    for (int i = 0; i < P.n; ++i) {
        x1[i] = x[i];
        x1[P.n + i] = K.frob(x[i]);
    }
    for (const auto& g : C.g1)
        if (!g.eval(x1).is_zero()) return false;
    bool excluded1 = true;
    for (const auto& u : C.u1)
        if (!u.eval(x1).is_zero()) { excluded1 = false; break; }
    return !excluded1;
}

std::optional<Witness> nonempty_witness(const DirectPresentation& P, std::uint64_t p,
                                        int e, int m_max, std::uint64_t budget) {
    for (int m = 1; m <= m_max; ++m) {
        DiffField K = make_difffield(p, e, m);
        CompiledPresentation C = compile(P, K);
        std::optional<Witness> found;
        scan(C, K, budget, [&](const Point& x) {
            found = Witness{m, x};
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

PointSet map_points(const std::vector<MPoly>& f0, const PointSet& pts,
                    const DiffField& K) {
    std::vector<MPoly> maps;
    for (const auto& g : f0) {
        if (g.field()->same(*K.Fqm)) {
            maps.push_back(g);
        } else if (g.field()->is_rationals()) {
            maps.push_back(g.map_coeffs(K.Fqm, [&](const FieldElem& c) {
                return K.Fqm->from_mpq(c.rat());
            }));
        } else {
            FieldEmbedding emb = embed_field(g.field(), K.Fqm);
            maps.push_back(g.map_coeffs(K.Fqm, [&](const FieldElem& c) { return emb.map(c); }));
        }
    }
    PointSet out;
    for (const auto& x : pts) {
        Point y;
        for (const auto& g : maps) y.push_back(g.eval(x));
        out.insert(y);
    }
    return out;
}

std::string point_str(const Point& x, const FieldPtr& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) os << ", ";
        os << k->to_string(x[i]);
    }
    os << ")";
    return os.str();
}

} // namespace dirgal
