#pragma once

#include "cohomoforge/gmodule.hpp"

#include <memory>

namespace cf {

// Inhomogeneous cochain: one coefficient value per G^n tuple, tuples indexed
// lexicographically with the first coordinate most significant.
struct Cochain {
    GModule module;
    int degree = 0;
    std::vector<AbelianElement> values;
};

constexpr int kDegreeHardCap = 3;

struct CohomologyOptions {
    int degree_cap = 2;        // hard cap 3
    long long size_budget = 6000;  // max coordinate count of any cochain space touched
};

long long tuple_count(const GModule& m, int degree);
std::vector<Int> cochain_factors(const GModule& m, int degree);
FiniteAbelianGroup cochain_group(const GModule& m, int degree);

long long tuple_index(const GModule& m, const std::vector<int>& tuple);
std::vector<int> tuple_at(const GModule& m, int degree, long long index);

Cochain cochain_from_flat(const GModule& m, int degree, const std::vector<Int>& flat);
std::vector<Int> flat_of(const Cochain& c);
Cochain zero_cochain(const GModule& m, int degree);
Cochain cochain_add(const Cochain& x, const Cochain& y);
Cochain cochain_sub(const Cochain& x, const Cochain& y);
Cochain cochain_scale(const Int& k, const Cochain& x);
bool cochain_is_zero(const Cochain& c);

// d_n f(g_1,...,g_{n+1}) = g_1 f(g_2,...,g_{n+1})
//                        + sum_{s=1}^{n} (-1)^s f(g_1,...,g_s g_{s+1},...,g_{n+1})
//                        + (-1)^{n+1} f(g_1,...,g_n)
AbelianHom differential(const GModule& m, int degree, const CohomologyOptions& opts = {});
Cochain apply_differential(const GModule& m, const Cochain& f);

// Solves "which class is this cocycle" against a fixed cycle-lattice basis.
struct CocycleClassifier {
    KernelLattice cycles;             // generators of ker(d_n) as a lattice
    Mat old_in_new;                   // class coords of each cycle generator
    std::vector<Int> ambient_factors; // tiled factors of C^n
    FiniteAbelianGroup group;

    std::vector<Int> class_of_flat(const std::vector<Int>& cocycle) const;
};

struct CohomologyGroup {
    int degree = 0;
    FiniteAbelianGroup group;             // invariant factors of H^n
    std::vector<Cochain> representatives; // one cocycle per generator
    CocycleClassifier classifier;
};

AbelianElement class_of(const CohomologyGroup& h, const Cochain& z);
Cochain representative_of(const CohomologyGroup& h, const AbelianElement& cls);

// ker(d_n) / im(d_{n-1}) by Smith-normal-form subquotient.
CohomologyGroup cohomology_group(const GModule& m, int degree, const CohomologyOptions& opts = {});

// H^1 = Der/IDer; solves only the |G| * rank(A) linear system, so it runs far
// past the cochain budget.
struct H1Result {
    CohomologyGroup h1;
    Presented der;   // subgroup of C^1
    Presented ider;
    Mat ider_matrix; // A -> C^1, a |-> (g . a - a)
    std::shared_ptr<DiagSolver> inner_solver;

    bool is_inner(const Cochain& f) const;
};

H1Result h1_der(const GModule& m);

// the conjugation action (x . f)(h) = x . f(h^x) on C^1(H, A)
Cochain conj_cochain(const GModule& m, const Subgroup& h, const RestrictedModule& rm,
                     const Cochain& f, int x);

struct InfResData {
    InflatedModule inflated;     // (G/H, A^H)
    RestrictedModule restricted; // (H, A)
    H1Result h1_quotient, h1_g, h1_h;
    AbelianHom inflation;        // H^1(G/H, A^H) -> H^1(G, A)
    AbelianHom restriction;      // H^1(G, A) -> H^1(H, A)
};

InfResData h1_maps(const GModule& m, const Subgroup& h);

struct FixedClasses {
    H1Result h1_h;
    FiniteAbelianGroup group;  // H^1(H,A)^{G/H}
    AbelianHom embedding;      // group -> H^1(H,A)
    std::vector<Cochain> representatives;
};

FixedClasses conj_action_fixed(const GModule& m, const Subgroup& h);

struct ExactnessNode {
    std::string label;
    Int ker_order = 1;
    Int im_order = 1;
    bool exact = false;
    std::string witness;
};

struct ExactnessReport {
    std::vector<ExactnessNode> nodes;
    bool all_exact() const;
};

// 0 -> H^1(G/H, A^H) -> H^1(G, A) -> H^1(H, A), plus the containment of
// im(res) in the G/H-fixed classes.
ExactnessReport check_inf_res_exact(const GModule& m, const Subgroup& h);

bool lemma_faithful_reduction_applies(const GModule& m, const Subgroup& h);

struct ShortExactSequence {
    GModule left, middle, right;
    AbelianHom inj;   // A -> B
    AbelianHom surj;  // B -> C
};

ShortExactSequence make_ses(GModule left, GModule middle, GModule right, AbelianHom inj,
                            AbelianHom surj);
ShortExactSequence ses_from_submodule(const GModule& m, const Submodule& w);

// set-theoretic section of surj, one preimage per element of the target
struct SectionTable {
    std::vector<std::vector<Int>> preimage;  // indexed by element index
};

SectionTable least_section(const AbelianHom& surj);
SectionTable randomized_section(const AbelianHom& surj, unsigned long long seed);

struct ConnectingMap {
    Submodule domain;  // C^G
    CohomologyGroup h1_left;
    AbelianHom map;    // domain presentation -> H^1(G, A)
};

ConnectingMap connecting_map(const ShortExactSequence& s);
ConnectingMap connecting_map(const ShortExactSequence& s, const SectionTable& section);

// 0 -> A^G -> B^G -> C^G -> H^1(G,A) -> ... up to max_degree (the last node is
// closed with the connecting map into degree max_degree + 1 when it fits the caps).
ExactnessReport check_long_exact(const ShortExactSequence& s, int max_degree,
                                 const CohomologyOptions& opts = {});

// Remark-style exhaustive check: (x . f) - f is inner for every derivation f
// and every x. Enumerates the full derivation group when its order is at most
// `der_cap`, otherwise the generators (the condition is linear in f).
bool conj_acts_trivially_on_h1(const GModule& m, Int der_cap = 4096);

}  // namespace cf
