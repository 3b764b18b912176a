#include "cohomoforge/abelian.hpp"

#include <algorithm>
#include <set>

namespace cf {

std::vector<Int> SNFResult::diag() const {
    int n = std::min(D.rows, D.cols);
    std::vector<Int> d(n);
    for (int i = 0; i < n; ++i) d[i] = D(i, i);
    return d;
}

SNFResult smith_normal_form(const Mat& m) {
    SNFResult r;
    const int R = m.rows, C = m.cols;
    r.D = m;
    r.U = Mat::identity(R);
    r.Uinv = Mat::identity(R);
    r.V = Mat::identity(C);
    r.Vinv = Mat::identity(C);
    Mat& D = r.D;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < C; ++c) std::swap(D(i, c), D(j, c));
        for (int c = 0; c < R; ++c) std::swap(r.U(i, c), r.U(j, c));
        for (int rr = 0; rr < R; ++rr) std::swap(r.Uinv(rr, i), r.Uinv(rr, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int rr = 0; rr < R; ++rr) std::swap(D(rr, i), D(rr, j));
        for (int rr = 0; rr < C; ++rr) std::swap(r.V(rr, i), r.V(rr, j));
        for (int c = 0; c < C; ++c) std::swap(r.Vinv(i, c), r.Vinv(j, c));
    };
    // row_i -= q * row_t
    auto row_axpy = [&](int i, int t, const Int& q) {
        for (int c = 0; c < C; ++c)
            if (D(t, c) != 0) D(i, c) -= q * D(t, c);
        for (int c = 0; c < R; ++c)
            if (r.U(t, c) != 0) r.U(i, c) -= q * r.U(t, c);
        for (int rr = 0; rr < R; ++rr)
            if (r.Uinv(rr, i) != 0) r.Uinv(rr, t) += q * r.Uinv(rr, i);
    };
    // col_j -= q * col_t
    auto col_axpy = [&](int j, int t, const Int& q) {
        for (int rr = 0; rr < R; ++rr)
            if (D(rr, t) != 0) D(rr, j) -= q * D(rr, t);
        for (int rr = 0; rr < C; ++rr)
            if (r.V(rr, t) != 0) r.V(rr, j) -= q * r.V(rr, t);
        for (int c = 0; c < C; ++c)
            if (r.Vinv(j, c) != 0) r.Vinv(t, c) += q * r.Vinv(j, c);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < C; ++c) D(i, c) = -D(i, c);
        for (int c = 0; c < R; ++c) r.U(i, c) = -r.U(i, c);
        for (int rr = 0; rr < R; ++rr) r.Uinv(rr, i) = -r.Uinv(rr, i);
    };

    const int n = std::min(R, C);
    for (int t = 0; t < n; ++t) {
        // min-abs pivot keeps intermediate entries small
        auto locate = [&]() -> std::pair<int, int> {
            int bi = -1, bj = -1;
            Int best = 0;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j) {
                    if (D(i, j) == 0) continue;
                    Int v = D(i, j) < 0 ? Int(-D(i, j)) : D(i, j);
                    if (bi < 0 || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            return {bi, bj};
        };
        auto [bi, bj] = locate();
        if (bi < 0) break;  // all remaining entries zero
        for (;;) {
            swap_rows(t, bi);
            swap_cols(t, bj);
            bool dirty = false;
            for (int i = t + 1; i < R; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                if (q != 0) row_axpy(i, t, q);
                if (D(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < C; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                if (q != 0) col_axpy(j, t, q);
                if (D(t, j) != 0) dirty = true;
            }
            if (dirty) {
                std::tie(bi, bj) = locate();
                continue;
            }
            // lone pivot; enforce the divisibility chain
            int di = -1;
            for (int i = t + 1; i < R && di < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        di = i;
                        break;
                    }
            if (di >= 0) {
                row_axpy(t, di, Int(-1));  // pulls the offending row up
                std::tie(bi, bj) = locate();
                continue;
            }
            break;
        }
        if (D(t, t) < 0) negate_row(t);
        r.rank = t + 1;
    }
    return r;
}

Int FiniteAbelianGroup::order() const {
    Int o = 1;
    for (const Int& d : factors) o *= d;
    return o;
}

Int FiniteAbelianGroup::exponent() const {
    Int e = 1;
    for (const Int& d : factors) e = lcm_int(e, d);
    return e;
}

bool FiniteAbelianGroup::is_canonical() const {
    for (size_t i = 0; i + 1 < factors.size(); ++i)
        if (factors[i + 1] % factors[i] != 0) return false;
    return true;
}

FiniteAbelianGroup FiniteAbelianGroup::invariant_factors(std::vector<Int> fs) {
    for (const Int& d : fs)
        if (d < 2) fail(errc::bad_argument, "invariant factor < 2");
    FiniteAbelianGroup g{std::move(fs)};
    if (!g.is_canonical()) fail(errc::bad_argument, "divisibility chain violated");
    return g;
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic_product(std::vector<Int> fs) {
    for (const Int& d : fs)
        if (d < 2) fail(errc::bad_argument, "cyclic factor < 2");
    return FiniteAbelianGroup{std::move(fs)};
}

std::vector<Int> reduce_coords(std::vector<Int> coords, const std::vector<Int>& factors) {
    if (coords.size() != factors.size()) fail(errc::bad_argument, "coordinate rank mismatch");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] = mod_floor(coords[i], factors[i]);
    return coords;
}

bool AbelianElement::is_zero() const {
    for (const Int& c : coords)
        if (c != 0) return false;
    return true;
}

AbelianElement make_element(const FiniteAbelianGroup& g, std::vector<Int> coords) {
    return AbelianElement{g, reduce_coords(std::move(coords), g.factors)};
}

AbelianElement zero_element(const FiniteAbelianGroup& g) {
    return AbelianElement{g, std::vector<Int>(g.rank())};
}

static void check_same_parent(const AbelianElement& x, const AbelianElement& y) {
    if (x.parent != y.parent) fail(errc::bad_argument, "elements of different groups");
}

AbelianElement add(const AbelianElement& x, const AbelianElement& y) {
    check_same_parent(x, y);
    std::vector<Int> c(x.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + y.coords[i];
    return make_element(x.parent, std::move(c));
}

AbelianElement sub(const AbelianElement& x, const AbelianElement& y) {
    check_same_parent(x, y);
    std::vector<Int> c(x.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] - y.coords[i];
    return make_element(x.parent, std::move(c));
}

AbelianElement neg(const AbelianElement& x) {
    std::vector<Int> c(x.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -x.coords[i];
    return make_element(x.parent, std::move(c));
}

AbelianElement scale(const Int& k, const AbelianElement& x) {
    std::vector<Int> c(x.coords.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = k * x.coords[i];
    return make_element(x.parent, std::move(c));
}

Int element_count(const FiniteAbelianGroup& g) { return g.order(); }

AbelianElement element_at(const FiniteAbelianGroup& g, Int index) {
    std::vector<Int> c(g.rank());
    for (int i = g.rank() - 1; i >= 0; --i) {
        c[i] = index % g.factors[i];
        index /= g.factors[i];
    }
    return AbelianElement{g, std::move(c)};
}

Int index_of(const AbelianElement& x) {
    Int idx = 0;
    for (int i = 0; i < x.parent.rank(); ++i) idx = idx * x.parent.factors[i] + x.coords[i];
    return idx;
}

std::vector<AbelianElement> all_elements(const FiniteAbelianGroup& g, Int cap) {
    Int n = g.order();
    if (n > cap) fail(errc::cap_exceeded, "element enumeration over cap");
    std::vector<AbelianElement> out;
    for (Int i = 0; i < n; ++i) out.push_back(element_at(g, i));
    return out;
}

bool is_well_defined(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, const Mat& matrix) {
    for (int j = 0; j < source.rank(); ++j)
        for (int i = 0; i < target.rank(); ++i)
            if ((source.factors[j] * matrix(i, j)) % target.factors[i] != 0) return false;
    return true;
}

static Mat reduce_matrix_rows(Mat m, const std::vector<Int>& factors) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m(i, j) = mod_floor(m(i, j), factors[i]);
    return m;
}

AbelianHom hom_unchecked(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, Mat matrix) {
    if (matrix.rows != target.rank() || matrix.cols != source.rank())
        fail(errc::bad_argument, "hom matrix shape mismatch");
    return AbelianHom{source, target, reduce_matrix_rows(std::move(matrix), target.factors)};
}

AbelianHom validate_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, Mat matrix) {
    if (matrix.rows != target.rank() || matrix.cols != source.rank())
        fail(errc::bad_argument, "hom matrix shape mismatch");
    matrix = reduce_matrix_rows(std::move(matrix), target.factors);
    for (int j = 0; j < source.rank(); ++j)
        for (int i = 0; i < target.rank(); ++i)
            if ((source.factors[j] * matrix(i, j)) % target.factors[i] != 0)
                fail(errc::not_well_defined, "generator order not annihilated", {j});
    return AbelianHom{source, target, std::move(matrix)};
}

AbelianHom identity_hom(const FiniteAbelianGroup& g) {
    return AbelianHom{g, g, Mat::identity(g.rank())};
}

AbelianHom zero_hom(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
    return AbelianHom{source, target, Mat::zero(target.rank(), source.rank())};
}

AbelianHom compose(const AbelianHom& f, const AbelianHom& g) {
    if (f.source != g.target) fail(errc::bad_argument, "compose: domain mismatch");
    return hom_unchecked(g.source, f.target, mat_mul(f.matrix, g.matrix));
}

AbelianHom hom_add(const AbelianHom& f, const AbelianHom& g) {
    if (f.source != g.source || f.target != g.target) fail(errc::bad_argument, "hom_add: shape mismatch");
    return hom_unchecked(f.source, f.target, mat_add(f.matrix, g.matrix));
}

AbelianHom hom_sub(const AbelianHom& f, const AbelianHom& g) {
    if (f.source != g.source || f.target != g.target) fail(errc::bad_argument, "hom_sub: shape mismatch");
    return hom_unchecked(f.source, f.target, mat_sub(f.matrix, g.matrix));
}

AbelianElement apply(const AbelianHom& h, const AbelianElement& x) {
    if (x.parent != h.source) fail(errc::bad_argument, "apply: element not in source");
    return make_element(h.target, mat_apply(h.matrix, x.coords));
}

std::vector<Int> KernelLattice::solve(const std::vector<Int>& z) const {
    auto w = try_solve(z);
    if (!w) fail(errc::no_solution, "vector not in kernel lattice");
    return *w;
}

std::optional<std::vector<Int>> KernelLattice::try_solve(const std::vector<Int>& z) const {
    std::vector<Int> w = mat_apply(vinv, z);
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] % scales[i] != 0) return std::nullopt;
        w[i] /= scales[i];
    }
    return w;
}

KernelLattice kernel_mod_diag(const Mat& m, const std::vector<Int>& moduli) {
    if (static_cast<int>(moduli.size()) != m.rows) fail(errc::bad_argument, "kernel: moduli mismatch");
    const int a = m.cols;
    KernelLattice out;
    if (a == 0) {
        out.gens = Mat(0, 0);
        out.vinv = Mat(0, 0);
        return out;
    }
    Int big = 1;
    for (const Int& e : moduli) {
        if (e < 1) fail(errc::bad_argument, "kernel: modulus < 1");
        big = lcm_int(big, e);
    }
    if (m.rows == 0) {
        out.gens = Mat::identity(a);
        out.vinv = Mat::identity(a);
        out.scales.assign(a, 1);
        return out;
    }
    // Uniform-modulus trick: M x = 0 (mod diag(e))  <=>  (S M) x = 0 (mod lcm),
    // with S = diag(lcm / e_i). Then one SNF of S M solves it.
    Mat scaled = m;
    for (int i = 0; i < m.rows; ++i) {
        Int s = big / moduli[i];
        if (s != 1)
            for (int j = 0; j < m.cols; ++j) scaled(i, j) *= s;
    }
    SNFResult snf = smith_normal_form(scaled);
    out.scales.assign(a, 1);
    for (int i = 0; i < snf.rank; ++i) {
        Int g = gcd_int(snf.D(i, i), big);
        out.scales[i] = big / g;
    }
    out.gens = snf.V;
    for (int j = 0; j < a; ++j)
        if (out.scales[j] != 1)
            for (int i = 0; i < a; ++i) out.gens(i, j) *= out.scales[j];
    out.vinv = std::move(snf.Vinv);
    return out;
}

DiagSolver::DiagSolver(const Mat& m, std::vector<Int> moduli) : moduli_(std::move(moduli)) {
    if (static_cast<int>(moduli_.size()) != m.rows) fail(errc::bad_argument, "solver: moduli mismatch");
    rows_ = m.rows;
    cols_ = m.cols;
    big_ = 1;
    for (const Int& e : moduli_) {
        if (e < 1) fail(errc::bad_argument, "solver: modulus < 1");
        big_ = lcm_int(big_, e);
    }
    Mat scaled = m;
    for (int i = 0; i < m.rows; ++i) {
        Int s = big_ / moduli_[i];
        if (s != 1)
            for (int j = 0; j < m.cols; ++j) scaled(i, j) *= s;
    }
    snf_ = smith_normal_form(scaled);
}

std::optional<std::vector<Int>> DiagSolver::solve(const std::vector<Int>& b) const {
    if (static_cast<int>(b.size()) != rows_) fail(errc::bad_argument, "solver: rhs size");
    std::vector<Int> scaled(b);
    for (int i = 0; i < rows_; ++i) scaled[i] *= big_ / moduli_[i];
    std::vector<Int> c = mat_apply(snf_.U, scaled);
    std::vector<Int> w(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
        if (i < snf_.rank) {
            Int d = snf_.D(i, i);
            Int g = gcd_int(d, big_);
            Int ci = mod_floor(c[i], big_);
            if (ci % g != 0) return std::nullopt;
            Int mm = big_ / g;
            if (mm == 1) {
                w[i] = 0;
            } else {
                w[i] = mod_floor((ci / g) * inv_mod(d / g, mm), mm);
            }
        } else {
            if (mod_floor(c[i], big_) != 0) return std::nullopt;
        }
    }
    return mat_apply(snf_.V, w);
}

std::optional<std::vector<Int>> solve_mod_diag(const Mat& m, const std::vector<Int>& moduli,
                                               const std::vector<Int>& b) {
    return DiagSolver(m, moduli).solve(b);
}

SubquotientPresentation subquotient(const Mat& gens, const Mat& dens,
                                    const std::vector<Int>& ambient_factors) {
    const int k = static_cast<int>(ambient_factors.size());
    if (gens.rows != k || dens.rows != k) fail(errc::bad_argument, "subquotient: row mismatch");
    const int g = gens.cols;
    SubquotientPresentation out;
    if (g == 0) {
        out.group = FiniteAbelianGroup::trivial();
        out.gens_in_ambient = Mat(k, 0);
        out.old_in_new = Mat(0, 0);
        return out;
    }
    SNFResult dsnf = smith_normal_form(dens);
    if (dsnf.rank != k) fail(errc::no_solution, "denominator lattice not of full rank");
    std::vector<Int> delta(k);
    for (int i = 0; i < k; ++i) delta[i] = dsnf.D(i, i);
    Mat gens_t = mat_mul(dsnf.U, gens);
    KernelLattice rel = kernel_mod_diag(gens_t, delta);
    SNFResult rsnf = smith_normal_form(rel.gens);
    if (rsnf.rank != g) fail(errc::no_solution, "relation lattice not of full rank");

    std::vector<int> kept;
    std::vector<Int> factors;
    for (int i = 0; i < g; ++i)
        if (rsnf.D(i, i) >= 2) {
            kept.push_back(i);
            factors.push_back(rsnf.D(i, i));
        }
    out.group = FiniteAbelianGroup::invariant_factors(factors);
    const int mdim = static_cast<int>(kept.size());

    out.gens_in_ambient = Mat(k, mdim);
    for (int c = 0; c < mdim; ++c) {
        for (int row = 0; row < k; ++row) {
            Int s = 0;
            for (int j = 0; j < g; ++j)
                if (gens(row, j) != 0 && rsnf.Uinv(j, kept[c]) != 0)
                    s += gens(row, j) * rsnf.Uinv(j, kept[c]);
            out.gens_in_ambient(row, c) = mod_floor(s, ambient_factors[row]);
        }
    }
    out.old_in_new = Mat(mdim, g);
    for (int r2 = 0; r2 < mdim; ++r2)
        for (int j = 0; j < g; ++j)
            out.old_in_new(r2, j) = mod_floor(rsnf.U(kept[r2], j), factors[r2]);
    return out;
}

KernelImage kernel_image(const AbelianHom& h) {
    KernelLattice k = kernel_mod_diag(h.matrix, h.target.factors);
    SubquotientPresentation ker = subquotient(k.gens, diagonal(h.source.factors), h.source.factors);
    SubquotientPresentation img = subquotient(h.matrix, diagonal(h.target.factors), h.target.factors);
    KernelImage out{
        Presented{ker.group, hom_unchecked(ker.group, h.source, ker.gens_in_ambient)},
        Presented{img.group, hom_unchecked(img.group, h.target, img.gens_in_ambient)},
    };
    if (out.kernel.group.order() * out.image.group.order() != h.source.order())
        fail(errc::no_solution, "kernel/image order equation violated");
    return out;
}

bool is_injective(const AbelianHom& h) { return kernel_image(h).kernel.group.is_trivial(); }

bool is_surjective(const AbelianHom& h) { return kernel_image(h).image.group.order() == h.target.order(); }

AbelianElement QuotientPresentation::section(const AbelianElement& q) const {
    if (q.parent != quotient) fail(errc::bad_argument, "section: not a quotient element");
    return make_element(source, mat_apply(section_matrix, q.coords));
}

AbelianElement QuotientPresentation::least_preimage(const AbelianElement& q, Int cap) const {
    AbelianElement base = section(q);
    std::vector<AbelianElement> ker = subgroup_closure_elements(source, subgroup_generators, cap);
    std::vector<Int> best = base.coords;
    for (const AbelianElement& s : ker) {
        AbelianElement cand = add(base, s);
        if (cand.coords < best) best = cand.coords;
    }
    return AbelianElement{source, best};
}

QuotientPresentation quotient_by(const FiniteAbelianGroup& a, const std::vector<AbelianElement>& gens) {
    const int k = a.rank();
    Mat gmat(k, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) {
        if (gens[j].parent != a) fail(errc::bad_argument, "quotient_by: generator not in group");
        for (int i = 0; i < k; ++i) gmat(i, static_cast<int>(j)) = gens[j].coords[i];
    }
    SubquotientPresentation sq = subquotient(Mat::identity(k), hconcat(diagonal(a.factors), gmat), a.factors);
    QuotientPresentation out;
    out.source = a;
    out.quotient = sq.group;
    out.projection = hom_unchecked(a, sq.group, sq.old_in_new);
    out.section_matrix = sq.gens_in_ambient;
    out.subgroup_generators = gens;
    return out;
}

DirectSum direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<Int> concat = a.factors;
    concat.insert(concat.end(), b.factors.begin(), b.factors.end());
    const int k = static_cast<int>(concat.size());
    SubquotientPresentation sq = subquotient(Mat::identity(k), diagonal(concat), concat);
    const int m = sq.group.rank();

    auto col_slice = [&](const Mat& src, int from, int count) {
        Mat r(src.rows, count);
        for (int i = 0; i < src.rows; ++i)
            for (int j = 0; j < count; ++j) r(i, j) = src(i, from + j);
        return r;
    };
    auto row_slice = [&](const Mat& src, int from, int count) {
        Mat r(count, src.cols);
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < src.cols; ++j) r(i, j) = src(from + i, j);
        return r;
    };

    DirectSum out;
    out.sum = sq.group;
    out.inj_left = hom_unchecked(a, sq.group, col_slice(sq.old_in_new, 0, a.rank()));
    out.inj_right = hom_unchecked(b, sq.group, col_slice(sq.old_in_new, a.rank(), b.rank()));
    Mat sect = sq.gens_in_ambient;  // k x m
    (void)m;
    out.proj_left = hom_unchecked(sq.group, a, row_slice(sect, 0, a.rank()));
    out.proj_right = hom_unchecked(sq.group, b, row_slice(sect, a.rank(), b.rank()));
    return out;
}

std::vector<Int> coords_in_subgroup(const AbelianHom& embedding, const AbelianElement& x) {
    if (x.parent != embedding.target) fail(errc::bad_argument, "coords_in_subgroup: ambient mismatch");
    auto sol = solve_mod_diag(embedding.matrix, embedding.target.factors, x.coords);
    if (!sol) fail(errc::no_solution, "element not in subgroup");
    return reduce_coords(std::move(*sol), embedding.source.factors);
}

bool subgroup_contains(const AbelianHom& embedding, const AbelianElement& x) {
    return solve_mod_diag(embedding.matrix, embedding.target.factors, x.coords).has_value();
}

std::vector<AbelianElement> subgroup_closure_elements(const FiniteAbelianGroup& a,
                                                      const std::vector<AbelianElement>& gens,
                                                      Int cap) {
    std::set<std::vector<Int>> seen;
    std::vector<AbelianElement> out;
    std::vector<AbelianElement> queue;
    AbelianElement z = zero_element(a);
    seen.insert(z.coords);
    out.push_back(z);
    queue.push_back(z);
    while (!queue.empty()) {
        AbelianElement x = queue.back();
        queue.pop_back();
        for (const AbelianElement& g : gens) {
            AbelianElement y = add(x, g);
            if (seen.insert(y.coords).second) {
                if (Int(static_cast<long long>(seen.size())) > cap)
                    fail(errc::cap_exceeded, "subgroup closure over cap");
                out.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AbelianElement& x, const AbelianElement& y) { return x.coords < y.coords; });
    return out;
}

}  // namespace cf
