#pragma once

#include "cohomoforge/cohomology.hpp"

namespace cf {

struct HypothesisCheck {
    std::string name;
    bool holds = false;
    std::string witness;
};

// Hypothesis failures are reported, never thrown; the conclusion is only
// asserted when it was actually checked.
struct TheoremReport {
    std::string theorem;
    std::vector<HypothesisCheck> hypotheses;
    bool conclusion_checked = false;
    bool conclusion_holds = false;
    std::vector<std::pair<std::string, std::string>> data;

    bool hypotheses_hold() const;
    bool passed() const { return conclusion_checked && conclusion_holds; }
};

// G nilpotent and A^G = 0 imply H^1(G, A) = 0; the abelian specialization and
// the irreducible corollary are flagged when they apply.
TheoremReport verify_nilpotent_vanishing(const GModule& m);

// (U/V)^G = 0 across the full submodule lattice.
TheoremReport verify_composition_factors(const GModule& m, size_t lattice_cap = 512);

// Schur: the centralizer of the action ring on an irreducible module is a
// field, commutative by finiteness; for faithful nontrivial abelian actions
// the explicit coboundary element a = (rho(y) - 1)^{-1} f(y) trivializes
// every derivation.
TheoremReport schur_check(const GModule& m, const ActionRingOptions& opts = {});

// nilpotent self-normalizing subgroups
std::vector<Subgroup> find_carter_subgroups(const GroupPtr& h, int order_cap = 128);
bool is_carter_in(const Subgroup& h, const Subgroup& c);

// G = H N_G(C) for C a Carter subgroup of a normal H; the abelian-quotient
// hypothesis is evaluated and reported, the conclusion is checked
// set-theoretically either way.
TheoremReport verify_frattini(const GroupPtr& g, const Subgroup& h, const Subgroup& c);

struct MaschkeDecomposition {
    std::vector<Submodule> summands;
    bool certified = false;
};

// Averaged projector over the group; requires abelian G coprime to p acting
// on a p-elementary A with A^G = 0. Throws HypothesisFailed otherwise.
Submodule maschke_complement(const GModule& m, const Submodule& w);
MaschkeDecomposition maschke_decompose(const GModule& m);

}  // namespace cf
