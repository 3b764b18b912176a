#pragma once

#include "cohomoforge/theorems.hpp"

namespace cf {

// Dense matrix over the prime field F_p; everything on the Lie side is small
// enough for machine ints.
struct FpMat {
    int p = 2;
    int rows = 0, cols = 0;
    std::vector<int> a;

    FpMat() = default;
    FpMat(int p, int r, int c) : p(p), rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    static FpMat identity(int p, int n);
    bool is_zero() const;
    friend bool operator==(const FpMat&, const FpMat&) = default;
};

FpMat fp_mul(const FpMat& x, const FpMat& y);
FpMat fp_add(const FpMat& x, const FpMat& y);
FpMat fp_sub(const FpMat& x, const FpMat& y);
FpMat fp_pow(const FpMat& x, long long e);
FpMat fp_transpose(const FpMat& x);
std::vector<int> fp_apply(const FpMat& m, const std::vector<int>& v);
int fp_inv(int a, int p);

// reduced row echelon form; returns rank, records pivot columns
int fp_rref(FpMat& m, std::vector<int>* pivots = nullptr);
int fp_rank(FpMat m);
// rows form a basis of { x : m x = 0 }
FpMat fp_kernel_basis(const FpMat& m);
std::optional<std::vector<int>> fp_solve(const FpMat& m, const std::vector<int>& b);
FpMat fp_inverse(const FpMat& m);

// Subspace of F_p^ambient as an rref row basis; canonical per subspace.
struct SubSpace {
    int p = 2;
    int ambient = 0;
    FpMat basis;  // rref rows

    int dim() const { return basis.rows; }
};

SubSpace row_space(int p, int ambient, const FpMat& vectors);
bool subspace_contains(const SubSpace& s, const std::vector<int>& v);
bool subspace_leq(const SubSpace& inner, const SubSpace& outer);
SubSpace subspace_sum(const SubSpace& x, const SubSpace& y);
// every subspace of F_p^ambient, enumerated via echelon forms
std::vector<SubSpace> all_subspaces(int p, int ambient, size_t cap = 1 << 16);

// Lie ring over F_p by structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieRing {
    int p = 2;
    int dim = 0;
    std::vector<int> c;

    int sc(int i, int j, int k) const { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
    std::vector<int> bracket_basis(int i, int j) const;
    std::vector<int> bracket(const std::vector<int>& x, const std::vector<int>& y) const;
    FpMat ad_basis(int i) const;
    FpMat ad(const std::vector<int>& x) const;
};

LieRing validate_lie(int p, int dim, const std::vector<std::vector<std::vector<int>>>& bracket);
LieRing lie_from_flat(int p, int dim, std::vector<int> flat);  // validated
LieRing abelian_lie(int p, int dim);
LieRing heisenberg_lie(int p);          // [e1,e2] = e3
LieRing solvable2_lie(int p);           // [e1,e2] = e2
LieRing sl2_lie(int p);                 // e, f, h
LieRing gl2_lie(int p);                 // E11, E12, E21, E22 under the commutator

bool lie_is_nilpotent(const LieRing& g);
std::vector<SubSpace> lie_lower_central_series(const LieRing& g);

struct LieModule {
    LieRing ring;
    int mdim = 0;
    std::vector<FpMat> action;  // one matrix per basis element

    std::vector<int> act(const std::vector<int>& x, const std::vector<int>& v) const;
};

LieModule validate_lie_module(const LieRing& g, int mdim, std::vector<FpMat> action);
LieModule trivial_lie_module(const LieRing& g, int mdim);
SubSpace lie_invariants(const LieModule& m);  // A^g

// --- Chevalley-Eilenberg cochains -------------------------------------------

std::vector<std::vector<int>> increasing_tuples(int dim, int n);

struct LieCochain {
    int degree = 0;
    std::vector<int> values;  // tuple-major, coefficient-minor
};

FpMat ce_differential(const LieModule& m, int degree);

struct LieCohomology {
    int degree = 0;
    int p = 2;
    int dim = 0;  // dim_{F_p} H^n
    std::vector<LieCochain> reps;
    FpMat kernel_basis;  // rows
    FpMat image_basis;   // rows

    std::vector<int> class_of(const LieCochain& z) const;
};

LieCohomology ce_cohomology(const LieModule& m, int degree);

struct LieH1 {
    LieCohomology h1;
    int der_dim = 0, ider_dim = 0;
    FpMat der_basis;   // rows, inside C^1
    FpMat ider_basis;  // rows
};

LieH1 lie_h1_der(const LieModule& m);

// --- ideals, quotients, inflation-restriction --------------------------------

bool is_subalgebra(const LieRing& g, const SubSpace& s);
bool is_ideal(const LieRing& g, const SubSpace& s);
LieRing sub_ring(const LieRing& g, const SubSpace& s);

struct LieQuotient {
    LieRing ring;
    FpMat proj;  // dim(g) -> dim(g/h)
    FpMat sect;  // dim(g/h) -> dim(g)
};

LieQuotient quotient_ring(const LieRing& g, const SubSpace& ideal);

struct LieInfRes {
    LieModule quotient_module;  // (g/h, A^h)
    LieModule sub_module;       // (h, A)
    LieH1 h1_quotient, h1_g, h1_h;
    FpMat inflation, restriction;
    SubSpace fixed_classes;  // H^1(h, A)^{g/h} in class coordinates
};

LieInfRes lie_h1_maps(const LieModule& m, const SubSpace& ideal);
ExactnessReport check_lie_inf_res(const LieModule& m, const SubSpace& ideal);
bool lie_faithful_reduction_applies(const LieModule& m, const SubSpace& ideal);

struct LieSES {
    LieModule left, middle, right;
    FpMat inj, surj;
};

LieSES make_lie_ses(LieModule left, LieModule middle, LieModule right, FpMat inj, FpMat surj);
LieSES lie_ses_from_submodule(const LieModule& m, const SubSpace& w);
ExactnessReport check_six_term(const LieSES& s);

// --- restricted structures ----------------------------------------------------

// Jacobson terms: ad_{x (x) X + y (x) 1}^{p-1}(x (x) 1) = sum_i i s_i(x,y) (x) X^{i-1}
std::vector<std::vector<int>> jacobson_s_terms(const LieRing& g, const std::vector<int>& x,
                                               const std::vector<int>& y);

struct RestrictedStructure {
    LieRing ring;
    FpMat basis_images;  // column i = e_i^{[p]}

    // extension by p-semilinearity and the Jacobson sum formula
    std::vector<int> pmap(const std::vector<int>& x) const;
};

RestrictedStructure validate_restricted(const LieRing& g, const FpMat& basis_images);

struct SemisimpleCertificate {
    bool semisimple = false;
    std::vector<std::vector<int>> iterates;  // x^{[p]}, x^{[p]^2}, ...
    std::vector<int> combination;            // x = sum_i combination[i] * iterate[i]
};

SemisimpleCertificate is_semisimple_element(const RestrictedStructure& r, const std::vector<int>& x);

bool is_torus(const RestrictedStructure& r, const SubSpace& t);  // throws NotClosed

// --- Lie theorem verifiers ----------------------------------------------------

// nilpotent vanishing, composition-factor triviality, and the Lie Frattini
// sum decomposition; with a [p]-map also the torus-complement analogue.
TheoremReport verify_lie_theorems(const LieModule& m,
                                  const std::optional<FpMat>& pmap_basis = std::nullopt);

// every irreducible submodule of A admits an invariant complement, built from
// the joint primary decomposition of the commuting semisimple action
TheoremReport verify_torus_complements(const RestrictedStructure& t, const LieModule& m);

std::vector<SubSpace> invariant_subspaces(const LieModule& m);

// minimal polynomial and factorization over F_p (degrees at desk scale)
std::vector<int> min_poly(const FpMat& op);
std::vector<std::vector<int>> irreducible_factors(std::vector<int> f, int p);
bool poly_squarefree(const std::vector<int>& f, int p);

}  // namespace cf
