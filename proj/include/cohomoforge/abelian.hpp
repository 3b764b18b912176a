#pragma once

#include "cohomoforge/core.hpp"

#include <optional>

namespace cf {

// U * M * V = D with U, V unimodular and D diagonal under a divisibility
// chain. Inverses are carried along so lattice solves downstream never have
// to invert a unimodular matrix after the fact.
struct SNFResult {
    Mat U, Uinv, D, V, Vinv;
    int rank = 0;
    std::vector<Int> diag() const;
};

SNFResult smith_normal_form(const Mat& m);

// Finite abelian group presented by cyclic factors, each >= 2 (empty list is
// the trivial group). Canonical groups carry an invariant-factor chain
// d1 | d2 | ... ; cochain spaces reuse the same struct with tiled factors and
// are not canonical.
struct FiniteAbelianGroup {
    std::vector<Int> factors;

    int rank() const { return static_cast<int>(factors.size()); }
    Int order() const;
    Int exponent() const;  // lcm of the factors (1 for the trivial group)
    bool is_trivial() const { return factors.empty(); }
    bool is_canonical() const;

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup{}; }
    // validates the divisibility chain
    static FiniteAbelianGroup invariant_factors(std::vector<Int> fs);
    // any list of cyclic orders >= 2; used for cochain products
    static FiniteAbelianGroup cyclic_product(std::vector<Int> fs);

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

struct AbelianElement {
    FiniteAbelianGroup parent;
    std::vector<Int> coords;  // reduced modulo the factors

    bool is_zero() const;
    friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
};

std::vector<Int> reduce_coords(std::vector<Int> coords, const std::vector<Int>& factors);
AbelianElement make_element(const FiniteAbelianGroup& g, std::vector<Int> coords);
AbelianElement zero_element(const FiniteAbelianGroup& g);
AbelianElement add(const AbelianElement& x, const AbelianElement& y);
AbelianElement sub(const AbelianElement& x, const AbelianElement& y);
AbelianElement neg(const AbelianElement& x);
AbelianElement scale(const Int& k, const AbelianElement& x);

// Mixed-radix enumeration in canonical coordinate order: the first
// coordinate is the most significant digit, so indices sort elements
// lexicographically by coords.
Int element_count(const FiniteAbelianGroup& g);
AbelianElement element_at(const FiniteAbelianGroup& g, Int index);
Int index_of(const AbelianElement& x);
std::vector<AbelianElement> all_elements(const FiniteAbelianGroup& g, Int cap = 1 << 20);

// Homomorphism between presented groups, as an integer matrix acting on
// generator coordinates, entries reduced modulo the target factors.
struct AbelianHom {
    FiniteAbelianGroup source, target;
    Mat matrix;  // target.rank() x source.rank()

    friend bool operator==(const AbelianHom&, const AbelianHom&) = default;
};

// checks d_j * (column j) = 0 in the target for every source generator j
AbelianHom validate_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, Mat matrix);
// same reduction, no well-definedness check; for matrices correct by construction
AbelianHom hom_unchecked(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, Mat matrix);
AbelianHom identity_hom(const FiniteAbelianGroup& g);
AbelianHom zero_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);
AbelianHom compose(const AbelianHom& f, const AbelianHom& g);  // f after g
AbelianHom hom_add(const AbelianHom& f, const AbelianHom& g);
AbelianHom hom_sub(const AbelianHom& f, const AbelianHom& g);
AbelianElement apply(const AbelianHom& h, const AbelianElement& x);
bool is_well_defined(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, const Mat& matrix);

// Lattice kernel { x : M x = 0 modulo diag(moduli) }, moduli all >= 1.
// Returns a square generating matrix gens = V * diag(scales) plus the data
// needed to solve gens * w = z exactly.
struct KernelLattice {
    Mat gens;   // cols generate the kernel lattice, full rank
    Mat vinv;   // inverse of the unimodular part
    std::vector<Int> scales;

    // coordinates w with gens * w = z; fails if z is not in the lattice
    std::vector<Int> solve(const std::vector<Int>& z) const;
    std::optional<std::vector<Int>> try_solve(const std::vector<Int>& z) const;
};

KernelLattice kernel_mod_diag(const Mat& m, const std::vector<Int>& moduli);

// One solution x of  M x = b (mod diag(moduli)), if any.
std::optional<std::vector<Int>> solve_mod_diag(const Mat& m, const std::vector<Int>& moduli,
                                               const std::vector<Int>& b);

// Batch solver reusing one SNF across many right-hand sides.
struct DiagSolver {
    explicit DiagSolver(const Mat& m, std::vector<Int> moduli);
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

private:
    SNFResult snf_;
    std::vector<Int> moduli_;
    Int big_;  // lcm of the positive moduli
    int rows_, cols_;
};

// Presentation of the subgroup generated by the columns of `gens` inside the
// ambient group Z^k / diag(ambient_factors), where the denominator lattice is
// spanned by the columns of `dens` (which must contain diag(ambient_factors)).
//
//   group            invariant factors of (L(gens) + L(dens)) / L(dens)
//   gens_in_ambient  k x m, column i = ambient coordinates of new generator i
//   old_in_new       m x g, column j = class of old generator j in new coords
struct SubquotientPresentation {
    FiniteAbelianGroup group;
    Mat gens_in_ambient;
    Mat old_in_new;
};

SubquotientPresentation subquotient(const Mat& gens, const Mat& dens,
                                    const std::vector<Int>& ambient_factors);

// Subgroup with its canonical presentation and the embedding into the ambient.
struct Presented {
    FiniteAbelianGroup group;
    AbelianHom embedding;  // group -> ambient
};

struct KernelImage {
    Presented kernel;
    Presented image;
};

KernelImage kernel_image(const AbelianHom& h);
bool is_injective(const AbelianHom& h);
bool is_surjective(const AbelianHom& h);

struct QuotientPresentation {
    FiniteAbelianGroup source;
    FiniteAbelianGroup quotient;
    AbelianHom projection;   // source -> quotient
    Mat section_matrix;      // quotient coords -> a representative in source
    std::vector<AbelianElement> subgroup_generators;

    // the linear choice of representative (not a homomorphism in general)
    AbelianElement section(const AbelianElement& q) const;
    // canonical section: lexicographically least preimage in coordinate order
    AbelianElement least_preimage(const AbelianElement& q, Int cap = 1 << 20) const;
};

QuotientPresentation quotient_by(const FiniteAbelianGroup& a, const std::vector<AbelianElement>& gens);

struct DirectSum {
    FiniteAbelianGroup sum;
    AbelianHom inj_left, inj_right;   // A -> S, B -> S
    AbelianHom proj_left, proj_right; // S -> A, S -> B
};

DirectSum direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);

// Coordinates of x in a subgroup presentation: solve emb * v = x mod ambient.
std::vector<Int> coords_in_subgroup(const AbelianHom& embedding, const AbelianElement& x);
bool subgroup_contains(const AbelianHom& embedding, const AbelianElement& x);

// Enumerate the subgroup generated by `gens` as an element set (desk scale).
std::vector<AbelianElement> subgroup_closure_elements(const FiniteAbelianGroup& a,
                                                      const std::vector<AbelianElement>& gens,
                                                      Int cap = 1 << 20);

}  // namespace cf
