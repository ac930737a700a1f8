#include "dirgal/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dirgal {

namespace {

bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exp_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exps exp_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool coprime(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

MPoly reduce_full(const MPoly& f, const std::vector<MPoly>& basis,
                  const std::vector<Exps>& lts, const MonoOrder& ord) {
    const FieldPtr& k = f.field();
    MPoly rem(k, f.vars());
    MPoly work = f;
    while (!work.is_zero()) {
        const Exps* le = work.leading_exps(ord);
        FieldElem lc = work.terms().at(*le);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (divides(lts[i], *le)) {
                // basis polys are monic
                MPoly t = mpoly_mul_term(basis[i], exp_sub(*le, lts[i]), lc);
                work = work - t;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            MPoly t = MPoly::monomial(k, f.vars(), *le, lc);
            rem = rem + t;
            work = work - t;
        }
    }
    return rem;
}

} // namespace

Ideal::Ideal(FieldPtr k, VarsPtr vars, std::vector<MPoly> gens)
    : k_(std::move(k)), vars_(std::move(vars)) {
    for (auto& g : gens)
        if (!g.is_zero()) gens_.push_back(std::move(g));
}

Ideal Ideal::unit(FieldPtr k, VarsPtr vars) {
    MPoly one = MPoly::from_int(k, vars, 1);
    return Ideal(std::move(k), std::move(vars), {one});
}

Ideal Ideal::parse(const std::vector<std::string>& texts, FieldPtr k, VarsPtr vars) {
    std::vector<MPoly> gens;
    for (const auto& t : texts) gens.push_back(MPoly::parse(t, k, vars));
    return Ideal(std::move(k), std::move(vars), std::move(gens));
}

bool Ideal::trivially_zero() const { return gens_.empty(); }

const GroebnerBasis& Ideal::groebner(const MonoOrder& ord) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(ord.key());
        if (it != cache_.end()) return *it->second;
    }
    // Buchberger
    std::vector<MPoly> basis;
    for (const auto& g : gens_)
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    std::vector<Exps> lts;
    for (const auto& b : basis) lts.push_back(*b.leading_exps(ord));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    auto lcm_deg = [&](const std::pair<std::size_t, std::size_t>& pr) {
        Exps l = exp_lcm(lts[pr.first], lts[pr.second]);
        long d = 0;
        for (auto x : l) d += x;
        return d;
    };

    while (!pairs.empty()) {
        // normal selection: smallest lcm degree first
        std::size_t best = 0;
        long bestd = lcm_deg(pairs[0]);
        for (std::size_t t = 1; t < pairs.size(); ++t) {
            long d = lcm_deg(pairs[t]);
            if (d < bestd) { bestd = d; best = t; }
        }
        auto [i, j] = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();
        if (coprime(lts[i], lts[j])) continue;   // Buchberger's first criterion
        Exps l = exp_lcm(lts[i], lts[j]);
        // chain criterion: some k with lt_k | l and both (i,k),(j,k) handled
        bool skip = false;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (t == i || t == j) continue;
            if (!divides(lts[t], l)) continue;
            auto handled = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) == pairs.end();
            };
            if (handled(i, t) && handled(j, t)) { skip = true; break; }
        }
        if (skip) continue;
        MPoly s = mpoly_mul_term(basis[i], exp_sub(l, lts[i]), k_->one()) -
                  mpoly_mul_term(basis[j], exp_sub(l, lts[j]), k_->one());
        MPoly r = reduce_full(s, basis, lts, ord);
        if (r.is_zero()) continue;
        r = r.monic(ord);
        basis.push_back(r);
        lts.push_back(*r.leading_exps(ord));
        for (std::size_t t = 0; t + 1 < basis.size(); ++t)
            pairs.emplace_back(t, basis.size() - 1);
    }

    // minimalize: drop polys whose lt is divisible by another kept lt
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[j]) continue;
            if (divides(lts[j], lts[i]) && (lts[j] != lts[i] || j < i)) {
                keep[i] = 0;
                break;
            }
        }
    }
    std::vector<MPoly> minimal;
    std::vector<Exps> minlts;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (keep[i]) {
            minimal.push_back(basis[i]);
            minlts.push_back(lts[i]);
        }
    }
    // reduce tails
    std::vector<MPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MPoly> others;
        std::vector<Exps> olts;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j == i) continue;
            others.push_back(minimal[j]);
            olts.push_back(minlts[j]);
        }
        MPoly r = reduce_full(minimal[i], others, olts, ord);
        if (!r.is_zero()) reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
        return ord.compare(*a.leading_exps(ord), *b.leading_exps(ord)) > 0;
    });

    auto gb = std::make_shared<GroebnerBasis>();
    gb->order = ord;
    gb->polys = std::move(reduced);
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(ord.key(), gb);
    return *it->second;
}

MPoly normal_form(const MPoly& f, const GroebnerBasis& gb) {
    std::vector<Exps> lts;
    for (const auto& b : gb.polys) lts.push_back(*b.leading_exps(gb.order));
    return reduce_full(f, gb.polys, lts, gb.order);
}

bool Ideal::contains(const MPoly& f) const {
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_unit() const {
    const auto& gb = groebner();
    return gb.polys.size() == 1 && gb.polys[0].is_constant() && !gb.polys[0].is_zero();
}

bool Ideal::contains_ideal(const Ideal& o) const {
    for (const auto& g : o.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Ideal::same_ideal(const Ideal& o) const {
    return contains_ideal(o) && o.contains_ideal(*this);
}

Ideal Ideal::with_extra(const MPoly& f) const {
    std::vector<MPoly> g = gens_;
    g.push_back(f);
    return Ideal(k_, vars_, std::move(g));
}

Ideal Ideal::plus(const Ideal& o) const {
    std::vector<MPoly> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(k_, vars_, std::move(g));
}

std::string Ideal::str() const {
    std::vector<std::string> parts;
    for (const auto& g : gens_) parts.push_back(g.str());
    std::sort(parts.begin(), parts.end());
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ", ";
        os << parts[i];
    }
    if (parts.empty()) os << "0";
    os << ")";
    return os.str();
}

Ideal eliminate(const Ideal& I, const std::vector<int>& keep) {
    const int n = static_cast<int>(I.vars()->size());
    std::vector<char> mask(n, 1);
    for (int v : keep) mask[v] = 0;
    const auto& gb = I.groebner(MonoOrder::elim(mask));
    // restricted ambient
    Vars names;
    std::vector<int> idx_map(n, -1);
    for (int v : keep) {
        idx_map[v] = static_cast<int>(names.size());
        names.push_back((*I.vars())[v]);
    }
    VarsPtr small = make_vars(std::move(names));
    std::vector<MPoly> gens;
    for (const auto& p : gb.polys) {
        bool pure = true;
        for (int i = 0; i < n && pure; ++i)
            if (mask[i] && p.uses_var(i)) pure = false;
        if (pure) gens.push_back(p.remap(small, idx_map));
    }
    return Ideal(I.field(), small, std::move(gens));
}

Ideal eliminate_in_place(const Ideal& I, const std::vector<int>& keep) {
    const int n = static_cast<int>(I.vars()->size());
    std::vector<char> mask(n, 1);
    for (int v : keep) mask[v] = 0;
    const auto& gb = I.groebner(MonoOrder::elim(mask));
    std::vector<MPoly> gens;
    for (const auto& p : gb.polys) {
        bool pure = true;
        for (int i = 0; i < n && pure; ++i)
            if (mask[i] && p.uses_var(i)) pure = false;
        if (pure) gens.push_back(p);
    }
    return Ideal(I.field(), I.vars(), std::move(gens));
}

namespace {

// extend ambient with one auxiliary variable at the end
std::pair<VarsPtr, std::vector<int>> aux_ambient(const VarsPtr& vars, const std::string& aux) {
    Vars names = *vars;
    std::string name = aux;
    while (var_index(names, name) >= 0) name += "_";
    names.push_back(name);
    std::vector<int> idx(vars->size());
    std::iota(idx.begin(), idx.end(), 0);
    return {make_vars(std::move(names)), idx};
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    // t*I + (1-t)*J, eliminate t
    auto [big, idx] = aux_ambient(I.vars(), "_t");
    const int tpos = static_cast<int>(big->size()) - 1;
    MPoly t = MPoly::variable(I.field(), big, tpos);
    MPoly one = MPoly::from_int(I.field(), big, 1);
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.remap(big, idx) * t);
    for (const auto& g : J.gens()) gens.push_back(g.remap(big, idx) * (one - t));
    Ideal K(I.field(), big, std::move(gens));
    std::vector<int> keep;
    for (int i = 0; i < tpos; ++i) keep.push_back(i);
    return embed(eliminate(K, keep), I.vars());
}

Ideal quotient(const Ideal& I, const MPoly& f) {
    if (f.is_zero()) return Ideal::unit(I.field(), I.vars());
    Ideal fI(I.field(), I.vars(), {f});
    Ideal isect = intersect(I, fI);
    std::vector<MPoly> gens;
    for (const auto& g : isect.gens()) {
        auto q = divide_exact(g, f);
        if (!q) throw Error("ideal", "quotient: inexact division (internal)");
        gens.push_back(*q);
    }
    return Ideal(I.field(), I.vars(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    Ideal acc = Ideal::unit(I.field(), I.vars());
    bool first = true;
    for (const auto& f : J.gens()) {
        Ideal qi = quotient(I, f);
        acc = first ? qi : intersect(acc, qi);
        first = false;
    }
    if (first) return Ideal::unit(I.field(), I.vars());   // J = 0: I : 0 = (1)
    return acc;
}

Ideal saturate(const Ideal& I, const MPoly& f) {
    Ideal cur = I;
    for (int iter = 0; iter < 64; ++iter) {
        Ideal next = quotient(cur, f);
        if (cur.contains_ideal(next)) return cur;
        cur = next;
    }
    throw Error("ideal", "saturation did not stabilize");
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int iter = 0; iter < 64; ++iter) {
        Ideal next = quotient(cur, J);
        if (cur.contains_ideal(next)) return cur;
        cur = next;
    }
    throw Error("ideal", "saturation did not stabilize");
}

int dimension(const Ideal& I) {
    const auto& gb = I.groebner();
    if (I.is_unit()) return -1;
    const int n = static_cast<int>(I.vars()->size());
    std::vector<Exps> lts;
    for (const auto& p : gb.polys) lts.push_back(*p.leading_exps(gb.order));
    // max |S| with no leading monomial supported inside S
    int best = 0;
    for (std::uint32_t sub = 0; sub < (1u << n); ++sub) {
        int size = __builtin_popcount(sub);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lt : lts) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (lt[i] && !(sub & (1u << i))) inside = false;
            if (inside) { independent = false; break; }
        }
        if (independent) best = size;
    }
    return best;
}

bool radical_contains(const Ideal& I, const MPoly& f) {
    if (f.is_zero()) return true;
    auto [big, idx] = aux_ambient(I.vars(), "_s");
    const int spos = static_cast<int>(big->size()) - 1;
    MPoly s = MPoly::variable(I.field(), big, spos);
    MPoly one = MPoly::from_int(I.field(), big, 1);
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.remap(big, idx));
    gens.push_back(f.remap(big, idx) * s - one);
    Ideal K(I.field(), big, std::move(gens));
    return K.is_unit();
}

Ideal locus_union(const Ideal& A, const Ideal& B) {
    if (A.is_unit()) return B;
    if (B.is_unit()) return A;
    std::vector<MPoly> gens;
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) gens.push_back(a * b);
    return Ideal(A.field(), A.vars(), std::move(gens));
}

Ideal embed(const Ideal& I, const VarsPtr& big) {
    std::vector<int> idx;
    for (const auto& name : *I.vars()) {
        int j = var_index(*big, name);
        if (j < 0) throw Error("ideal", "embed: missing variable " + name);
        idx.push_back(j);
    }
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.remap(big, idx));
    return Ideal(I.field(), big, std::move(gens));
}

Ideal remap(const Ideal& I, const VarsPtr& new_vars, const std::vector<int>& idx_map) {
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.remap(new_vars, idx_map));
    return Ideal(I.field(), new_vars, std::move(gens));
}

Ideal pullback(const Ideal& I, const std::vector<MPoly>& map) {
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.compose(map));
    if (gens.empty()) {
        VarsPtr v = map.empty() ? I.vars() : map[0].vars();
        return Ideal::zero(I.field(), v);
    }
    VarsPtr vars = gens[0].vars();
    return Ideal(I.field(), vars, std::move(gens));
}

Ideal map_coeffs(const Ideal& I, const FieldPtr& k2,
                 const std::function<FieldElem(const FieldElem&)>& fn) {
    std::vector<MPoly> gens;
    for (const auto& g : I.gens()) gens.push_back(g.map_coeffs(k2, fn));
    return Ideal(k2, I.vars(), std::move(gens));
}

} // namespace dirgal
