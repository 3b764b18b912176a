#pragma once

#include "cohomoforge/gmodule.hpp"

#include <functional>

namespace cf {

struct CatalogGroup {
    std::string name;
    GroupPtr group;
    bool nilpotent = false;
    bool solvable = false;
};

// Every group of order <= 16 (42 in total, built generatively and
// deduplicated up to isomorphism), plus selected direct products and
// symmetric groups up to order 48 for the Frattini battery.
const std::vector<CatalogGroup>& catalog_groups();
std::vector<CatalogGroup> catalog_groups_up_to(int max_order);

// invariant-factor chains with order in [1, max_order]
std::vector<FiniteAbelianGroup> abelian_groups_up_to(long long max_order);

// Automorphisms of A as matrices. Full enumeration when the endomorphism
// count fits under `enum_cap`; otherwise a deterministic generated pool.
std::vector<Mat> automorphism_pool(const FiniteAbelianGroup& a, long long enum_cap = 1 << 16,
                                   size_t pool_cap = 1024);

Int matrix_order(const FiniteAbelianGroup& a, const Mat& m, Int cap = 1 << 12);

// The group generated by the given automorphisms, acting tautologically.
GModule module_from_autos(const FiniteAbelianGroup& a, const std::vector<Mat>& gens,
                          int order_cap = 128);

struct CatalogModule {
    std::string name;
    GModule module;
};

struct ModuleFamilyOptions {
    int max_group_order = 16;
    long long max_coeff_order = 49;
    bool nilpotent_groups_only = false;
    int quotients_per_group = 4;   // deterministic cap on cyclic quotients used
    int actions_per_quotient = 2;  // deterministic cap per (G, A, cyclic quotient)
    bool include_trivial_actions = true;
    bool include_matrix_groups = true;
};

// The generated family of G-modules: trivial actions, actions through cyclic
// quotients of each catalog group with automorphisms drawn from a
// deterministic pool, and faithful matrix-group actions. The visitor form
// streams modules without holding the family in memory; return false to stop.
void for_each_family_module(const ModuleFamilyOptions& opts,
                            const std::function<bool(const CatalogModule&)>& visit);
std::vector<CatalogModule> module_family(const ModuleFamilyOptions& opts = {});

}  // namespace cf
