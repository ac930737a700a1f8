#include "dirgal/fibres.hpp"

#include <algorithm>

namespace dirgal {

GraphIdeal graph_ideal(const Ideal& src, const std::vector<MPoly>& map,
                       const VarsPtr& dst_vars, const std::string& dst_prefix) {
    GraphIdeal g;
    Vars names;
    for (const auto& s : *dst_vars) names.push_back(dst_prefix + s);
    for (const auto& s : *src.vars()) names.push_back(s);
    g.joint = make_vars(names);
    const FieldPtr& k = src.field();
    const int nd = static_cast<int>(dst_vars->size());
    const int ns = static_cast<int>(src.vars()->size());
    for (int i = 0; i < nd; ++i) g.dst_idx.push_back(i);
    for (int i = 0; i < ns; ++i) g.src_idx.push_back(nd + i);
    std::vector<MPoly> gens;
    Ideal srcJ = remap(src, g.joint, g.src_idx);
    for (const auto& p : srcJ.gens()) gens.push_back(p);
    for (int i = 0; i < nd; ++i) {
        MPoly fi = map[i].remap(g.joint, g.src_idx);
        gens.push_back(MPoly::variable(k, g.joint, i) - fi);
    }
    g.J = Ideal(k, g.joint, std::move(gens));
    return g;
}

FibreShape analyze_fibre(const Ideal& J, const std::vector<int>& src_coords) {
    FibreShape out;
    const FieldPtr& k = J.field();
    const int nv = static_cast<int>(J.vars()->size());
    std::vector<char> mask(nv, 0);
    for (int v : src_coords) mask[v] = 1;
    const auto& gb = J.groebner(MonoOrder::elim(mask));
    out.disc = MPoly::from_int(k, J.vars(), 1);
    std::vector<char> covered(nv, 0);
    std::vector<const MPoly*> rels;
    for (const auto& p : gb.polys) rels.push_back(&p);
    std::vector<char> used_rel(rels.size(), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t ri = 0; ri < rels.size(); ++ri) {
            if (used_rel[ri]) continue;
            const MPoly& p = *rels[ri];
            int cand = -1;
            bool ok = true;
            for (int v : src_coords) {
                if (!p.uses_var(v) || covered[v]) continue;
                if (cand >= 0) { ok = false; break; }
                cand = v;
            }
            if (!ok || cand < 0) continue;
            auto cs = p.coeffs_in(cand);
            if (!cs.back().is_constant()) continue;
            used_rel[ri] = 1;
            covered[cand] = 1;
            out.finite_coords.push_back(cand);
            out.finite_rels.push_back(p);
            if (p.degree_in(cand) >= 2) {
                MPoly b = resultant_certificate(p, p.derivative(cand), cand);
                if (b.is_zero()) out.disc = MPoly(k, J.vars());
                else out.disc = out.disc * b;
            }
            progress = true;
        }
    }
    for (int v : src_coords) {
        if (covered[v]) continue;
        bool occurs = false;
        for (const auto& p : gb.polys)
            if (p.uses_var(v)) occurs = true;
        if (!occurs) {
            out.free_coords.push_back(v);
            covered[v] = 1;
        }
    }
    out.triangular = true;
    for (int v : src_coords)
        if (!covered[v]) out.triangular = false;
    return out;
}

MPoly resultant_certificate(const MPoly& f, const MPoly& g, int var) {
    const FieldPtr& k = f.field();
    MPoly a = f, b = g;
    while (!b.is_zero() && b.degree_in(var) > 0) {
        int da = a.degree_in(var), db = b.degree_in(var);
        if (da < db) { std::swap(a, b); continue; }
        auto bc = b.coeffs_in(var);
        MPoly blc = bc.back();
        MPoly r = a;
        int steps = da - db + 1;
        for (int s = 0; s < steps && !r.is_zero() && r.degree_in(var) >= db; ++s) {
            auto rc = r.coeffs_in(var);
            int dr = static_cast<int>(rc.size()) - 1;
            MPoly shift = MPoly::variable(k, f.vars(), var).pow_u(dr - db);
            r = r * blc - b * shift * rc.back();
        }
        a = b;
        b = r;
    }
    return b;
}

Ideal image_closure(const GraphIdeal& g, const VarsPtr& dst_vars) {
    Ideal e = eliminate(g.J, g.dst_idx);
    std::vector<int> idx(dst_vars->size());
    for (std::size_t i = 0; i < dst_vars->size(); ++i) idx[i] = static_cast<int>(i);
    return remap(e, dst_vars, idx);
}

} // namespace dirgal
