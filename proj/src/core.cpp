#include "cohomoforge/core.hpp"

namespace cf {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_closed: return "NotClosed";
        case errc::no_identity_at_zero: return "NoIdentityAtZero";
        case errc::not_associative: return "NotAssociative";
        case errc::missing_inverse: return "MissingInverse";
        case errc::not_normal: return "NotNormal";
        case errc::order_cap_exceeded: return "OrderCapExceeded";
        case errc::degree_cap_exceeded: return "DegreeCapExceeded";
        case errc::size_budget_exceeded: return "SizeBudgetExceeded";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::lattice_cap_exceeded: return "LatticeCapExceeded";
        case errc::enumeration_cap_exceeded: return "EnumerationCapExceeded";
        case errc::not_well_defined: return "NotWellDefined";
        case errc::not_identity_at_e: return "NotIdentityAtE";
        case errc::not_homomorphic: return "NotHomomorphic";
        case errc::not_automorphism: return "NotAutomorphism";
        case errc::not_submodule: return "NotSubmodule";
        case errc::not_alternating: return "NotAlternating";
        case errc::jacobi_fails: return "JacobiFails";
        case errc::axiom1_fails: return "Axiom1Fails";
        case errc::axiom3_fails: return "Axiom3Fails";
        case errc::not_ideal: return "NotIdeal";
        case errc::subalgebra_not_closed: return "NotClosed";
        case errc::hypothesis_failed: return "HypothesisFailed";
        case errc::schema_error: return "SchemaError";
        case errc::unknown_command: return "UnknownCommand";
        case errc::no_solution: return "NoSolution";
        case errc::bad_argument: return "BadArgument";
    }
    return "Unknown";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) fail(errc::bad_argument, "mat_mul: shape mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const Int& xv = x(i, k);
            if (xv == 0) continue;  // differential matrices are sparse
            for (int j = 0; j < y.cols; ++j) {
                const Int& yv = y(k, j);
                if (yv != 0) r(i, j) += xv * yv;
            }
        }
    }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_argument, "mat_add: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(errc::bad_argument, "mat_sub: shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

Mat mat_neg(const Mat& x) {
    Mat r = x;
    for (Int& v : r.a) v = -v;
    return r;
}

Mat transpose(const Mat& x) {
    Mat r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

Mat hconcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) fail(errc::bad_argument, "hconcat: row mismatch");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
}

Mat vconcat(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) fail(errc::bad_argument, "vconcat: col mismatch");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r(x.rows + i, j) = y(i, j);
    return r;
}

Mat diagonal(const std::vector<Int>& d) {
    Mat r(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) r(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return r;
}

std::vector<Int> mat_apply(const Mat& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.cols) fail(errc::bad_argument, "mat_apply: shape mismatch");
    std::vector<Int> r(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        Int s = 0;
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0 && v[j] != 0) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat col_matrix(const std::vector<Int>& v) {
    Mat r(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) r(static_cast<int>(i), 0) = v[i];
    return r;
}

std::vector<Int> column_of(const Mat& m, int j) {
    std::vector<Int> r(m.rows);
    for (int i = 0; i < m.rows; ++i) r[i] = m(i, j);
    return r;
}

Int det_bareiss(Mat m) {
    if (m.rows != m.cols) fail(errc::bad_argument, "det: not square");
    const int n = m.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = t / prev;  // exact by Bareiss
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    Int g = gcd_int(a, b);
    Int r = (a / g) * b;
    return r < 0 ? -r : r;
}

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Int inv_mod(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_floor(a, m), m, x, y);
    if (g != 1) fail(errc::no_solution, "inv_mod: not invertible");
    return mod_floor(x, m);
}

}  // namespace cf
