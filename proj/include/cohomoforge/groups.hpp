#pragma once

#include "cohomoforge/core.hpp"

#include <memory>
#include <optional>

namespace cf {

// Cayley-table group; element 0 is the identity. Immutable after validation,
// so values are shared through a pointer and safe to read concurrently.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;  // row-major, table[g*order + h] = g*h
    std::vector<int> inv;

    int mul(int g, int h) const { return table[static_cast<size_t>(g) * order + h]; }
    int inverse(int g) const { return inv[g]; }
    // conjugation convention s^g = g^-1 s g throughout
    int conj(int s, int g) const { return mul(mul(inverse(g), s), g); }
    int power(int g, long long e) const;
    int element_order(int g) const;
    bool is_abelian() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr validate_group(const std::vector<std::vector<int>>& table);
GroupPtr trivial_group();
GroupPtr cyclic_group(int n);

struct PermGroup {
    GroupPtr group;
    std::vector<std::vector<int>> element_perms;  // labeling, index -> permutation
};

// Cayley table of the permutation group generated by `generators`, elements
// ordered breadth-first by word length and lexicographically within a layer.
PermGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators,
                            int order_cap = 5040);

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // strictly increasing, contains 0

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;
    bool is_whole() const { return order() == parent->order; }
    friend bool operator==(const Subgroup& x, const Subgroup& y) {
        return x.parent.get() == y.parent.get() && x.elements == y.elements;
    }
};

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_subgroup(const GroupPtr& g);
Subgroup subgroup_closure(const GroupPtr& g, std::vector<int> gens);
bool is_subgroup_closed(const Subgroup& s);
bool is_normal(const Subgroup& s);
Subgroup conjugate_subgroup(const Subgroup& s, int g);

Subgroup center(const GroupPtr& g);
Subgroup derived_subgroup(const GroupPtr& g, const Subgroup& h);  // [G, H]

struct LowerCentralSeries {
    std::vector<Subgroup> terms;            // gamma_1 = G, gamma_2, ...
    std::optional<int> nilpotency_class;    // nullopt = NotNilpotent (a value, not an error)
};

LowerCentralSeries lower_central_series(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);
bool is_solvable(const GroupPtr& g);

struct GroupHom {
    GroupPtr source, target;
    std::vector<int> map;
};

GroupHom validate_group_hom(const GroupPtr& source, const GroupPtr& target, std::vector<int> map);
bool hom_is_surjective(const GroupHom& h);
Subgroup hom_kernel(const GroupHom& h);

struct QuotientGroup {
    GroupPtr group;                       // identity coset at index 0
    GroupHom projection;                  // G -> G/N
    std::vector<std::vector<int>> cosets; // ordered by least member
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

Subgroup normalizer(const GroupPtr& g, const Subgroup& s);
Subgroup centralizer_of_subgroup(const GroupPtr& g, const Subgroup& s);

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, int order_cap = 128);

// Reindexed Cayley table of a subgroup; elements[i] of the parent becomes i.
GroupPtr subgroup_as_group(const Subgroup& s);

// direct product with lexicographic element order (a, b) -> a*|B| + b
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);
// semidirect product N x| H, action[h] an automorphism permutation of N;
// pairs ordered (h, n) -> h*|N| + n with multiplication (h1,n1)(h2,n2) =
// (h1 h2, action[h2](n1) * n2).
GroupPtr semidirect_product(const GroupPtr& n, const GroupPtr& h,
                            const std::vector<std::vector<int>>& action);
// dicyclic group of order 4n (n >= 1), generalized quaternion for n a 2-power
GroupPtr dicyclic_group(int n);

// All automorphisms of g, as permutations; backtracking over generator images.
std::vector<std::vector<int>> automorphisms(const GroupPtr& g, size_t cap = 1 << 20);

bool are_isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace cf
