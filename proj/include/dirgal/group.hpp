/// group.hpp -- finite groups given by labelled multiplication tables.
#ifndef DIRGAL_GROUP_HPP
#define DIRGAL_GROUP_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dirgal/field.hpp"

namespace dirgal {

struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;   // table[a][b] = index of a*b
    int id = 0;

    int size() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const;
    /// group axioms: identity, inverses, associativity
    void validate() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);                  // labels "g0".."g{n-1}"
    /// symmetric group on d letters; labels are one-line permutation words
    static FiniteGroup symmetric(int d);
};

struct GroupHom {
    const FiniteGroup* src = nullptr;
    const FiniteGroup* dst = nullptr;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
    bool is_homomorphism() const;
    bool is_surjective() const;
};

GroupHom identity_hom(const FiniteGroup& g);

/// The subgroup on the given element indices (must be closed and contain
/// the identity); labels are inherited.
FiniteGroup subgroup(const FiniteGroup& G, const std::vector<int>& elems);

/// Orbit closure of S under x -> pi1(g) * x * sigma(g^{-1}): the twisted
/// conjugacy closure used for local substitution classes.
std::set<int> twisted_closure(const std::set<int>& S, const FiniteGroup& G0,
                              const FiniteGroup& G1, const GroupHom& hom_pi1,
                              const GroupHom& hom_sigma);

} // namespace dirgal

#endif
