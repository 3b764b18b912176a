#pragma once

#include "cohomoforge/abelian.hpp"
#include "cohomoforge/groups.hpp"

#include <variant>

namespace cf {

// A finite group acting by automorphisms on a finite abelian group.
struct GModule {
    GroupPtr group;
    FiniteAbelianGroup coeffs;
    std::vector<AbelianHom> action;  // indexed by group element

    const AbelianHom& rho(int g) const { return action[g]; }
    AbelianElement act(int g, const AbelianElement& a) const { return apply(action[g], a); }
};

GModule validate_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs,
                        std::vector<AbelianHom> action);
GModule validate_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs,
                        const std::vector<Mat>& action_matrices);
GModule trivial_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs);
bool modules_equal(const GModule& a, const GModule& b);

struct Submodule {
    GModule parent;
    std::vector<AbelianElement> generators;
    FiniteAbelianGroup presentation;
    AbelianHom embedding;  // presentation -> parent.coeffs

    Int order() const { return presentation.order(); }
    bool is_trivial() const { return presentation.is_trivial(); }
    bool is_whole() const { return presentation.order() == parent.coeffs.order(); }
};

Submodule trivial_submodule(const GModule& m);
Submodule whole_submodule(const GModule& m);
bool submodule_contains(const Submodule& s, const AbelianElement& x);
bool submodules_equal(const Submodule& a, const Submodule& b);
std::vector<AbelianElement> submodule_elements(const Submodule& s, Int cap = 1 << 20);

// A^G = H^0, as a submodule with trivial induced action.
Submodule invariants(const GModule& m);

// Smallest G-invariant subgroup containing the seeds (orbit-sum closure).
Submodule spin_submodule(const GModule& m, const std::vector<AbelianElement>& seeds);

struct CompositionSeries {
    std::vector<Submodule> chain;  // 0 = M_0 < M_1 < ... < M_r = A
    int length() const { return static_cast<int>(chain.size()) - 1; }
};

// Maximal chain by repeatedly spinning minimal cyclic submodules of the
// successive quotients; least seed in canonical coordinate order. Each factor
// is certified irreducible by spinning every nonzero element.
CompositionSeries composition_series(const GModule& m);
// seed_order = +1 canonical, -1 reversed; for the Jordan-Hoelder length check
CompositionSeries composition_series(const GModule& m, int seed_order);
bool is_irreducible(const GModule& m);
Submodule minimal_nonzero_submodule(const GModule& m);

// --- derived modules -------------------------------------------------------

struct RestrictedModule {
    GModule module;                 // (H, A, rho|_H)
    Subgroup subgroup;              // H inside the parent group
    std::vector<int> element_of_parent;
};
RestrictedModule restrict_module(const GModule& m, const Subgroup& h);

struct InflatedModule {
    GModule module;                 // (G/H, A^H, induced action)
    QuotientGroup quotient;         // G -> G/H
    Submodule fixed_points;         // A^H inside A
};
InflatedModule inflate_module(const GModule& m, const Subgroup& h);

struct QuotientModule {
    GModule module;                 // (G, A/N, induced action)
    QuotientPresentation quotient;  // projection and sections
};
QuotientModule quotient_module(const GModule& m, const Submodule& n);

struct SubquotientModule {
    GModule module;                 // (G, N, restricted action)
    AbelianHom embedding;           // N -> A
};
SubquotientModule sub_module_on(const GModule& m, const Submodule& n);

struct Restrict { Subgroup h; };
struct Inflate { Subgroup h; };
struct QuotientBy { Submodule n; };
struct SubOn { Submodule n; };
using DeriveKind = std::variant<Restrict, Inflate, QuotientBy, SubOn>;

struct DerivedModule {
    GModule module;
    std::optional<GroupHom> group_map;   // Restrict: H -> G; Inflate: G -> G/H
    std::optional<AbelianHom> coeff_map; // Inflate/SubOn: embedding; QuotientBy: projection
};
DerivedModule derive_module(const GModule& m, const DeriveKind& kind);

// All G-invariant subgroups of A, as element-set-deduplicated submodules,
// sorted by order then generator coordinates. Desk scale only.
std::vector<Submodule> submodule_lattice(const GModule& m, size_t cap = 512);

// --- action ring and Schur machinery ---------------------------------------

struct ActionRingReport {
    std::vector<AbelianHom> ring_elements;  // closure of rho(G) under + and composition
    std::vector<AbelianHom> centralizer;    // C_End(A)(R)
    bool centralizer_is_field = false;
    Int centralizer_order = 0;
};

struct ActionRingOptions {
    Int coeff_cap = 81;        // |A| cap, End(A) enumeration is |A|-bounded
    size_t element_cap = 8192; // ring / centralizer element list cap
};

ActionRingReport action_ring_centralizer(const GModule& m, const ActionRingOptions& opts = {});

}  // namespace cf
