#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

// Exact unbounded integers everywhere; no modular shortcuts in the linear
// algebra (overflow would silently corrupt every cohomology group downstream).
using Int = boost::multiprecision::cpp_int;

enum class errc {
    // group axioms
    not_closed,
    no_identity_at_zero,
    not_associative,
    missing_inverse,
    not_normal,
    // caps and budgets
    order_cap_exceeded,
    degree_cap_exceeded,
    size_budget_exceeded,
    cap_exceeded,
    lattice_cap_exceeded,
    enumeration_cap_exceeded,
    // abelian / module validation
    not_well_defined,
    not_identity_at_e,
    not_homomorphic,
    not_automorphism,
    not_submodule,
    // Lie side
    not_alternating,
    jacobi_fails,
    axiom1_fails,
    axiom3_fails,
    not_ideal,
    subalgebra_not_closed,
    // theorem verifiers
    hypothesis_failed,
    // cli / io
    schema_error,
    unknown_command,
    // internal contract violations surfaced to callers
    no_solution,
    bad_argument,
};

const char* errc_name(errc c);

// Structured rejection: which axiom failed plus the witness tuple.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg, std::vector<long long> witness = {})
        : std::runtime_error(std::move(msg)), code(code), witness(std::move(witness)) {}

    errc code;
    std::vector<long long> witness;
};

[[noreturn]] inline void fail(errc code, std::string msg, std::vector<long long> witness = {}) {
    throw Error(code, std::move(msg), std::move(witness));
}

// Dense integer matrix, row-major. Desk-scale sizes only.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_neg(const Mat& x);
Mat transpose(const Mat& x);
// columns of x followed by columns of y
Mat hconcat(const Mat& x, const Mat& y);
Mat vconcat(const Mat& x, const Mat& y);
Mat diagonal(const std::vector<Int>& d);
std::vector<Int> mat_apply(const Mat& m, const std::vector<Int>& v);
Mat col_matrix(const std::vector<Int>& v);
std::vector<Int> column_of(const Mat& m, int j);

// Fraction-free Gaussian elimination; exact determinant of a square matrix.
Int det_bareiss(Mat m);

inline Int mod_floor(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);
// g = gcd(a,b) = x*a + y*b
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);
// inverse of a modulo m, gcd(a,m) = 1 required
Int inv_mod(const Int& a, const Int& m);

}  // namespace cf
