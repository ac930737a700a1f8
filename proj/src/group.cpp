#include "dirgal/group.hpp"

#include <algorithm>
#include <numeric>

namespace dirgal {

int FiniteGroup::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw Error("group", "unknown group element label: " + label);
}

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < size(); ++b)
        if (table[a][b] == id) return b;
    throw Error("group", "element without inverse: " + labels[a]);
}

void FiniteGroup::validate() const {
    const int n = size();
    if (static_cast<int>(table.size()) != n)
        throw Error("group", "multiplication table size mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw Error("group", "multiplication table row size mismatch");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("group", "table entry out of range");
    }
    for (int a = 0; a < n; ++a) {
        if (table[id][a] != a || table[a][id] != a)
            throw Error("group", "identity law fails at " + labels[a]);
    }
    for (int a = 0; a < n; ++a) inverse(a);   // throws when missing
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("group", "associativity fails");
}

FiniteGroup FiniteGroup::trivial() {
    FiniteGroup g;
    g.labels = {"e"};
    g.table = {{0}};
    g.id = 0;
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    FiniteGroup g;
    for (int i = 0; i < n; ++i) g.labels.push_back("g" + std::to_string(i));
    g.labels[0] = "e";
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    g.id = 0;
    return g;
}

namespace {
void gen_perms(int d, std::vector<std::vector<int>>& out) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
}
std::string perm_label(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('1' + v);
    return s;
}
} // namespace

FiniteGroup FiniteGroup::symmetric(int d) {
    std::vector<std::vector<int>> perms;
    gen_perms(d, perms);
    FiniteGroup g;
    for (const auto& p : perms) g.labels.push_back(perm_label(p));
    const int n = static_cast<int>(perms.size());
    g.table.assign(n, std::vector<int>(n));
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[g.labels[i]] = i;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // (a*b)(i) = a(b(i))
            std::vector<int> c(d);
            for (int i = 0; i < d; ++i) c[i] = perms[a][perms[b][i]];
            g.table[a][b] = idx[perm_label(c)];
        }
    }
    std::vector<int> e(d);
    std::iota(e.begin(), e.end(), 0);
    g.id = idx[perm_label(e)];
    return g;
}

bool GroupHom::is_homomorphism() const {
    if (!src || !dst || static_cast<int>(map.size()) != src->size()) return false;
    for (int a = 0; a < src->size(); ++a)
        for (int b = 0; b < src->size(); ++b)
            if (map[src->mul(a, b)] != dst->mul(map[a], map[b])) return false;
    return map[src->id] == dst->id;
}

bool GroupHom::is_surjective() const {
    std::set<int> im(map.begin(), map.end());
    return static_cast<int>(im.size()) == dst->size();
}

GroupHom identity_hom(const FiniteGroup& g) {
    GroupHom h;
    h.src = &g;
    h.dst = &g;
    h.map.resize(g.size());
    std::iota(h.map.begin(), h.map.end(), 0);
    return h;
}

FiniteGroup subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    FiniteGroup H;
    for (int s : elems) H.labels.push_back(G.labels[s]);
    H.table.assign(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            int prod = G.mul(elems[i], elems[j]);
            auto it = std::find(elems.begin(), elems.end(), prod);
            if (it == elems.end()) throw Error("group", "subset is not closed under the product");
            H.table[i][j] = static_cast<int>(it - elems.begin());
        }
    }
    auto idit = std::find(elems.begin(), elems.end(), G.id);
    if (idit == elems.end()) throw Error("group", "subset misses the identity");
    H.id = static_cast<int>(idit - elems.begin());
    return H;
}

std::set<int> twisted_closure(const std::set<int>& S, const FiniteGroup& G0,
                              const FiniteGroup& G1, const GroupHom& hom_pi1,
                              const GroupHom& hom_sigma) {
    std::set<int> out = S;
    std::vector<int> work(S.begin(), S.end());
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int g1 = 0; g1 < G1.size(); ++g1) {
            int y = G0.mul(hom_pi1(g1), G0.mul(x, hom_sigma(G1.inverse(g1))));
            if (out.insert(y).second) work.push_back(y);
        }
    }
    return out;
}

} // namespace dirgal
