#include "cohomoforge/cohomology.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cf {

long long tuple_count(const GModule& m, int degree) {
    long long t = 1;
    for (int i = 0; i < degree; ++i) t *= m.group->order;
    return t;
}

std::vector<Int> cochain_factors(const GModule& m, int degree) {
    long long tc = tuple_count(m, degree);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(tc) * m.coeffs.rank());
    for (long long t = 0; t < tc; ++t)
        out.insert(out.end(), m.coeffs.factors.begin(), m.coeffs.factors.end());
    return out;
}

FiniteAbelianGroup cochain_group(const GModule& m, int degree) {
    return FiniteAbelianGroup::cyclic_product(cochain_factors(m, degree));
}

long long tuple_index(const GModule& m, const std::vector<int>& tuple) {
    long long idx = 0;
    for (int g : tuple) idx = idx * m.group->order + g;
    return idx;
}

std::vector<int> tuple_at(const GModule& m, int degree, long long index) {
    std::vector<int> t(degree);
    for (int i = degree - 1; i >= 0; --i) {
        t[i] = static_cast<int>(index % m.group->order);
        index /= m.group->order;
    }
    return t;
}

Cochain cochain_from_flat(const GModule& m, int degree, const std::vector<Int>& flat) {
    long long tc = tuple_count(m, degree);
    const int k = m.coeffs.rank();
    if (static_cast<long long>(flat.size()) != tc * k) fail(errc::bad_argument, "cochain size mismatch");
    Cochain c{m, degree, {}};
    c.values.reserve(static_cast<size_t>(tc));
    for (long long t = 0; t < tc; ++t) {
        std::vector<Int> coords(flat.begin() + t * k, flat.begin() + (t + 1) * k);
        c.values.push_back(make_element(m.coeffs, std::move(coords)));
    }
    return c;
}

std::vector<Int> flat_of(const Cochain& c) {
    std::vector<Int> flat;
    flat.reserve(c.values.size() * c.module.coeffs.rank());
    for (const AbelianElement& v : c.values) flat.insert(flat.end(), v.coords.begin(), v.coords.end());
    return flat;
}

Cochain zero_cochain(const GModule& m, int degree) {
    Cochain c{m, degree, {}};
    c.values.assign(static_cast<size_t>(tuple_count(m, degree)), zero_element(m.coeffs));
    return c;
}

Cochain cochain_add(const Cochain& x, const Cochain& y) {
    Cochain r = x;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = add(r.values[i], y.values[i]);
    return r;
}

Cochain cochain_sub(const Cochain& x, const Cochain& y) {
    Cochain r = x;
    for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = sub(r.values[i], y.values[i]);
    return r;
}

Cochain cochain_scale(const Int& k, const Cochain& x) {
    Cochain r = x;
    for (auto& v : r.values) v = scale(k, v);
    return r;
}

bool cochain_is_zero(const Cochain& c) {
    for (const auto& v : c.values)
        if (!v.is_zero()) return false;
    return true;
}

static void check_degree_and_budget(const GModule& m, int degree, const CohomologyOptions& opts) {
    if (degree < 0) fail(errc::bad_argument, "negative degree");
    int cap = std::min(opts.degree_cap, kDegreeHardCap);
    if (degree > cap) fail(errc::degree_cap_exceeded, "degree over cap", {degree, cap});
    long long coords = tuple_count(m, degree + 1) * m.coeffs.rank();
    if (coords > opts.size_budget)
        fail(errc::size_budget_exceeded, "cochain space over size budget", {coords, opts.size_budget});
}

AbelianHom differential(const GModule& m, int degree, const CohomologyOptions& opts) {
    check_degree_and_budget(m, degree, opts);
    const int k = m.coeffs.rank();
    const long long tc_out = tuple_count(m, degree + 1);
    const long long tc_in = tuple_count(m, degree);
    Mat d(static_cast<int>(tc_out * k), static_cast<int>(tc_in * k));

    auto add_identity_block = [&](long long row_t, long long col_t, int sign) {
        for (int i = 0; i < k; ++i) d(static_cast<int>(row_t * k + i), static_cast<int>(col_t * k + i)) += sign;
    };
    for (long long rt = 0; rt < tc_out; ++rt) {
        std::vector<int> tup = tuple_at(m, degree + 1, rt);
        // g_1 . f(g_2,...,g_{n+1})
        std::vector<int> rest(tup.begin() + 1, tup.end());
        long long c1 = tuple_index(m, rest);
        const Mat& rho = m.action[tup[0]].matrix;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (rho(i, j) != 0) d(static_cast<int>(rt * k + i), static_cast<int>(c1 * k + j)) += rho(i, j);
        // (-1)^s f(g_1,...,g_s g_{s+1},...,g_{n+1})
        for (int s = 1; s <= degree; ++s) {
            std::vector<int> merged;
            merged.reserve(degree);
            for (int i = 0; i < s - 1; ++i) merged.push_back(tup[i]);
            merged.push_back(m.group->mul(tup[s - 1], tup[s]));
            for (int i = s + 1; i <= degree; ++i) merged.push_back(tup[i]);
            add_identity_block(rt, tuple_index(m, merged), s % 2 == 0 ? 1 : -1);
        }
        // (-1)^{n+1} f(g_1,...,g_n)
        std::vector<int> head(tup.begin(), tup.end() - 1);
        add_identity_block(rt, tuple_index(m, head), (degree + 1) % 2 == 0 ? 1 : -1);
    }
    return hom_unchecked(cochain_group(m, degree), cochain_group(m, degree + 1), std::move(d));
}

Cochain apply_differential(const GModule& m, const Cochain& f) {
    const int n = f.degree;
    Cochain out = zero_cochain(m, n + 1);
    const long long tc_out = tuple_count(m, n + 1);
    for (long long rt = 0; rt < tc_out; ++rt) {
        std::vector<int> tup = tuple_at(m, n + 1, rt);
        std::vector<int> rest(tup.begin() + 1, tup.end());
        AbelianElement v = m.act(tup[0], f.values[static_cast<size_t>(tuple_index(m, rest))]);
        for (int s = 1; s <= n; ++s) {
            std::vector<int> merged;
            for (int i = 0; i < s - 1; ++i) merged.push_back(tup[i]);
            merged.push_back(m.group->mul(tup[s - 1], tup[s]));
            for (int i = s + 1; i <= n; ++i) merged.push_back(tup[i]);
            const AbelianElement& w = f.values[static_cast<size_t>(tuple_index(m, merged))];
            v = (s % 2 == 0) ? add(v, w) : sub(v, w);
        }
        std::vector<int> head(tup.begin(), tup.end() - 1);
        const AbelianElement& w = f.values[static_cast<size_t>(tuple_index(m, head))];
        v = ((n + 1) % 2 == 0) ? add(v, w) : sub(v, w);
        out.values[static_cast<size_t>(rt)] = v;
    }
    return out;
}

std::vector<Int> CocycleClassifier::class_of_flat(const std::vector<Int>& cocycle) const {
    std::vector<Int> w = cycles.solve(cocycle);
    return reduce_coords(mat_apply(old_in_new, w), group.factors);
}

AbelianElement class_of(const CohomologyGroup& h, const Cochain& z) {
    return AbelianElement{h.group, h.classifier.class_of_flat(flat_of(z))};
}

Cochain representative_of(const CohomologyGroup& h, const AbelianElement& cls) {
    if (cls.parent != h.group) fail(errc::bad_argument, "class not in this cohomology group");
    if (h.representatives.empty()) {
        fail(errc::bad_argument, "trivial group has no nonzero representatives");
    }
    Cochain out = zero_cochain(h.representatives[0].module, h.degree);
    for (size_t i = 0; i < h.representatives.size(); ++i)
        out = cochain_add(out, cochain_scale(cls.coords[i], h.representatives[i]));
    return out;
}

CohomologyGroup cohomology_group(const GModule& m, int degree, const CohomologyOptions& opts) {
    check_degree_and_budget(m, degree, opts);
    std::vector<Int> fac_n = cochain_factors(m, degree);
    AbelianHom dn = differential(m, degree, opts);
    KernelLattice cycles = kernel_mod_diag(dn.matrix, cochain_factors(m, degree + 1));
    Mat dens = degree >= 1 ? hconcat(differential(m, degree - 1, opts).matrix, diagonal(fac_n))
                           : diagonal(fac_n);
    SubquotientPresentation sq = subquotient(cycles.gens, dens, fac_n);
    CohomologyGroup out;
    out.degree = degree;
    out.group = sq.group;
    for (int j = 0; j < sq.gens_in_ambient.cols; ++j)
        out.representatives.push_back(cochain_from_flat(m, degree, column_of(sq.gens_in_ambient, j)));
    out.classifier = CocycleClassifier{std::move(cycles), sq.old_in_new, std::move(fac_n), sq.group};
    return out;
}

bool H1Result::is_inner(const Cochain& f) const { return inner_solver->solve(flat_of(f)).has_value(); }

H1Result h1_der(const GModule& m) {
    const int k = m.coeffs.rank();
    const int n = m.group->order;
    std::vector<Int> fac1 = cochain_factors(m, 1);

    // f(xy) - x.f(y) - f(x) = 0 stacked over all pairs
    Mat cond(n * n * k, n * k);
    std::vector<Int> pair_moduli;
    pair_moduli.reserve(static_cast<size_t>(n) * n * k);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int p = x * n + y;
            int xy = m.group->mul(x, y);
            for (int i = 0; i < k; ++i) {
                cond(p * k + i, xy * k + i) += 1;
                cond(p * k + i, x * k + i) -= 1;
                pair_moduli.push_back(m.coeffs.factors[i]);
            }
            const Mat& rho = m.action[x].matrix;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (rho(i, j) != 0) cond(p * k + i, y * k + j) -= rho(i, j);
        }
    KernelLattice der_lattice = kernel_mod_diag(cond, pair_moduli);

    Mat ider(n * k, k);
    for (int g = 0; g < n; ++g) {
        const Mat& rho = m.action[g].matrix;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) ider(g * k + i, j) = rho(i, j) - (i == j ? 1 : 0);
    }

    SubquotientPresentation sq =
        subquotient(der_lattice.gens, hconcat(ider, diagonal(fac1)), fac1);
    H1Result out;
    out.h1.degree = 1;
    out.h1.group = sq.group;
    for (int j = 0; j < sq.gens_in_ambient.cols; ++j)
        out.h1.representatives.push_back(cochain_from_flat(m, 1, column_of(sq.gens_in_ambient, j)));
    out.h1.classifier = CocycleClassifier{der_lattice, sq.old_in_new, fac1, sq.group};

    FiniteAbelianGroup c1 = cochain_group(m, 1);
    SubquotientPresentation der_p = subquotient(der_lattice.gens, diagonal(fac1), fac1);
    out.der = Presented{der_p.group, hom_unchecked(der_p.group, c1, der_p.gens_in_ambient)};
    SubquotientPresentation ider_p = subquotient(ider, diagonal(fac1), fac1);
    out.ider = Presented{ider_p.group, hom_unchecked(ider_p.group, c1, ider_p.gens_in_ambient)};
    out.ider_matrix = ider;
    out.inner_solver = std::make_shared<DiagSolver>(out.ider_matrix, fac1);
    return out;
}

Cochain conj_cochain(const GModule& m, const Subgroup& h, const RestrictedModule& rm,
                     const Cochain& f, int x) {
    Cochain out = f;
    for (int i = 0; i < h.order(); ++i) {
        int hx = m.group->conj(h.elements[i], x);
        auto it = std::lower_bound(h.elements.begin(), h.elements.end(), hx);
        if (it == h.elements.end() || *it != hx) fail(errc::not_normal, "conjugate leaves subgroup", {h.elements[i], x});
        size_t pos = static_cast<size_t>(it - h.elements.begin());
        out.values[i] = apply(m.action[x], f.values[pos]);
    }
    (void)rm;
    return out;
}

InfResData h1_maps(const GModule& m, const Subgroup& h) {
    InfResData out{inflate_module(m, h), restrict_module(m, h), {}, {}, {}, {}, {}};
    out.h1_quotient = h1_der(out.inflated.module);
    out.h1_g = h1_der(m);
    out.h1_h = h1_der(out.restricted.module);

    const auto& emb = out.inflated.fixed_points.embedding;  // A^H -> A
    const std::vector<int>& pi = out.inflated.quotient.projection.map;
    const int k = m.coeffs.rank();

    auto inflate_flat = [&](const Cochain& fbar) {
        std::vector<Int> flat(static_cast<size_t>(m.group->order) * k);
        for (int g = 0; g < m.group->order; ++g) {
            AbelianElement v = apply(emb, fbar.values[static_cast<size_t>(pi[g])]);
            for (int i = 0; i < k; ++i) flat[static_cast<size_t>(g) * k + i] = v.coords[i];
        }
        return flat;
    };

    Mat inf_mat(out.h1_g.h1.group.rank(), out.h1_quotient.h1.group.rank());
    for (int j = 0; j < out.h1_quotient.h1.group.rank(); ++j) {
        std::vector<Int> cls = out.h1_g.h1.classifier.class_of_flat(
            inflate_flat(out.h1_quotient.h1.representatives[static_cast<size_t>(j)]));
        for (int i = 0; i < inf_mat.rows; ++i) inf_mat(i, j) = cls[static_cast<size_t>(i)];
    }
    out.inflation = hom_unchecked(out.h1_quotient.h1.group, out.h1_g.h1.group, std::move(inf_mat));

    // coboundaries upstairs must inflate to coboundaries downstairs
    const GModule& qmod = out.inflated.module;
    for (int j = 0; j < qmod.coeffs.rank(); ++j) {
        AbelianElement a = element_at(qmod.coeffs, 0);
        a.coords.assign(qmod.coeffs.rank(), 0);
        a.coords[j] = 1;
        Cochain cb = zero_cochain(qmod, 1);
        for (int q = 0; q < qmod.group->order; ++q) cb.values[q] = sub(qmod.act(q, a), a);
        if (!out.h1_g.is_inner(cochain_from_flat(m, 1, inflate_flat(cb))))
            fail(errc::no_solution, "inflation is not well defined on classes");
    }

    Mat res_mat(out.h1_h.h1.group.rank(), out.h1_g.h1.group.rank());
    for (int j = 0; j < out.h1_g.h1.group.rank(); ++j) {
        const Cochain& f = out.h1_g.h1.representatives[static_cast<size_t>(j)];
        std::vector<Int> flat(static_cast<size_t>(h.order()) * k);
        for (int i = 0; i < h.order(); ++i) {
            const AbelianElement& v = f.values[static_cast<size_t>(h.elements[i])];
            for (int c = 0; c < k; ++c) flat[static_cast<size_t>(i) * k + c] = v.coords[c];
        }
        std::vector<Int> cls = out.h1_h.h1.classifier.class_of_flat(flat);
        for (int i = 0; i < res_mat.rows; ++i) res_mat(i, j) = cls[static_cast<size_t>(i)];
    }
    out.restriction = hom_unchecked(out.h1_g.h1.group, out.h1_h.h1.group, std::move(res_mat));
    return out;
}

FixedClasses conj_action_fixed(const GModule& m, const Subgroup& h) {
    if (!is_normal(h)) fail(errc::not_normal, "subgroup is not normal");
    RestrictedModule rm = restrict_module(m, h);
    FixedClasses out{h1_der(rm.module), {}, {}, {}};
    const int r = out.h1_h.h1.group.rank();
    const int n = m.group->order;
    Mat stacked(n * r, r);
    std::vector<Int> moduli;
    moduli.reserve(static_cast<size_t>(n) * r);
    for (int x = 0; x < n; ++x) {
        for (int j = 0; j < r; ++j) {
            Cochain moved = conj_cochain(m, h, rm, out.h1_h.h1.representatives[static_cast<size_t>(j)], x);
            std::vector<Int> cls = out.h1_h.h1.classifier.class_of_flat(flat_of(moved));
            for (int i = 0; i < r; ++i) stacked(x * r + i, j) = cls[static_cast<size_t>(i)] - (i == j ? 1 : 0);
        }
        for (int i = 0; i < r; ++i) moduli.push_back(out.h1_h.h1.group.factors[static_cast<size_t>(i)]);
    }
    KernelLattice ker = kernel_mod_diag(stacked, moduli);
    SubquotientPresentation sq =
        subquotient(ker.gens, diagonal(out.h1_h.h1.group.factors), out.h1_h.h1.group.factors);
    out.group = sq.group;
    out.embedding = hom_unchecked(sq.group, out.h1_h.h1.group, sq.gens_in_ambient);
    for (int j = 0; j < sq.gens_in_ambient.cols; ++j) {
        Cochain rep = zero_cochain(rm.module, 1);
        for (int i = 0; i < r; ++i)
            rep = cochain_add(rep, cochain_scale(sq.gens_in_ambient(i, j),
                                                 out.h1_h.h1.representatives[static_cast<size_t>(i)]));
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

bool ExactnessReport::all_exact() const {
    for (const auto& n : nodes)
        if (!n.exact) return false;
    return true;
}

static std::string coords_string(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

ExactnessReport check_inf_res_exact(const GModule& m, const Subgroup& h) {
    InfResData data = h1_maps(m, h);
    FixedClasses fixed = conj_action_fixed(m, h);
    ExactnessReport rep;

    KernelImage ki_inf = kernel_image(data.inflation);
    ExactnessNode n1{"inflation injective", ki_inf.kernel.group.order(), 1,
                     ki_inf.kernel.group.is_trivial(), ""};
    if (!n1.exact)
        n1.witness = "kernel generator " + coords_string(column_of(ki_inf.kernel.embedding.matrix, 0));
    rep.nodes.push_back(std::move(n1));

    KernelImage ki_res = kernel_image(data.restriction);
    bool zero_comp = compose(data.restriction, data.inflation).matrix.is_zero();
    bool orders_match = ki_inf.image.group.order() == ki_res.kernel.group.order();
    ExactnessNode n2{"image(inf) = kernel(res)", ki_res.kernel.group.order(),
                     ki_inf.image.group.order(), zero_comp && orders_match, ""};
    if (!n2.exact) n2.witness = zero_comp ? "order mismatch" : "res after inf is nonzero";
    rep.nodes.push_back(std::move(n2));

    bool contained = true;
    std::string witness;
    for (int j = 0; j < ki_res.image.group.rank() && contained; ++j) {
        AbelianElement gen = make_element(data.h1_h.h1.group, column_of(ki_res.image.embedding.matrix, j));
        if (!subgroup_contains(fixed.embedding, gen)) {
            contained = false;
            witness = "restricted class " + coords_string(gen.coords) + " is not fixed";
        }
    }
    rep.nodes.push_back(ExactnessNode{"image(res) within fixed classes", fixed.group.order(),
                                      ki_res.image.group.order(), contained, witness});
    return rep;
}

bool lemma_faithful_reduction_applies(const GModule& m, const Subgroup& h) {
    Subgroup z = center(m.group);
    for (int x : h.elements) {
        if (!z.contains(x)) return false;
        if (!m.action[x].matrix.is_identity()) return false;
    }
    return invariants(m).is_trivial();
}

ShortExactSequence make_ses(GModule left, GModule middle, GModule right, AbelianHom inj,
                            AbelianHom surj) {
    if (left.group.get() != middle.group.get() || middle.group.get() != right.group.get())
        fail(errc::bad_argument, "modules over different groups");
    if (inj.source != left.coeffs || inj.target != middle.coeffs ||
        surj.source != middle.coeffs || surj.target != right.coeffs)
        fail(errc::bad_argument, "maps do not match the modules");
    if (!is_injective(inj)) fail(errc::bad_argument, "inj is not injective");
    if (!is_surjective(surj)) fail(errc::bad_argument, "surj is not surjective");
    if (!compose(surj, inj).matrix.is_zero()) fail(errc::bad_argument, "surj after inj is nonzero");
    if (left.coeffs.order() * right.coeffs.order() != middle.coeffs.order())
        fail(errc::bad_argument, "image/kernel orders do not match");
    for (int g = 0; g < left.group->order; ++g) {
        if (compose(inj, left.action[g]).matrix != compose(middle.action[g], inj).matrix)
            fail(errc::bad_argument, "inj is not equivariant", {g});
        if (compose(surj, middle.action[g]).matrix != compose(right.action[g], surj).matrix)
            fail(errc::bad_argument, "surj is not equivariant", {g});
    }
    return ShortExactSequence{std::move(left), std::move(middle), std::move(right), std::move(inj),
                              std::move(surj)};
}

ShortExactSequence ses_from_submodule(const GModule& m, const Submodule& w) {
    SubquotientModule sub = sub_module_on(m, w);
    QuotientModule quot = quotient_module(m, w);
    return make_ses(sub.module, m, quot.module, sub.embedding, quot.quotient.projection);
}

SectionTable least_section(const AbelianHom& surj) {
    KernelImage ki = kernel_image(surj);
    std::vector<AbelianElement> ker;
    for (Int i = 0; i < ki.kernel.group.order(); ++i)
        ker.push_back(apply(ki.kernel.embedding, element_at(ki.kernel.group, i)));
    DiagSolver solver(surj.matrix, surj.target.factors);
    SectionTable out;
    Int n = surj.target.order();
    for (Int c = 0; c < n; ++c) {
        AbelianElement target = element_at(surj.target, c);
        auto sol = solver.solve(target.coords);
        if (!sol) fail(errc::no_solution, "section: map is not surjective");
        AbelianElement base = make_element(surj.source, *sol);
        std::vector<Int> best = base.coords;
        for (const AbelianElement& x : ker) {
            AbelianElement cand = add(base, x);
            if (cand.coords < best) best = cand.coords;
        }
        out.preimage.push_back(std::move(best));
    }
    return out;
}

SectionTable randomized_section(const AbelianHom& surj, unsigned long long seed) {
    KernelImage ki = kernel_image(surj);
    std::vector<AbelianElement> ker;
    for (Int i = 0; i < ki.kernel.group.order(); ++i)
        ker.push_back(apply(ki.kernel.embedding, element_at(ki.kernel.group, i)));
    DiagSolver solver(surj.matrix, surj.target.factors);
    std::mt19937_64 rng(seed);
    SectionTable out;
    Int n = surj.target.order();
    for (Int c = 0; c < n; ++c) {
        AbelianElement target = element_at(surj.target, c);
        auto sol = solver.solve(target.coords);
        if (!sol) fail(errc::no_solution, "section: map is not surjective");
        AbelianElement base = make_element(surj.source, *sol);
        size_t pick = static_cast<size_t>(rng() % ker.size());
        out.preimage.push_back(add(base, ker[pick]).coords);
    }
    return out;
}

ConnectingMap connecting_map(const ShortExactSequence& s) {
    return connecting_map(s, least_section(s.surj));
}

ConnectingMap connecting_map(const ShortExactSequence& s, const SectionTable& section) {
    ConnectingMap out{invariants(s.right), h1_der(s.left).h1, {}};
    DiagSolver inj_solver(s.inj.matrix, s.middle.coeffs.factors);
    const int k = s.left.coeffs.rank();
    Mat cols(out.h1_left.group.rank(), out.domain.presentation.rank());
    for (int j = 0; j < out.domain.presentation.rank(); ++j) {
        AbelianElement c = make_element(s.right.coeffs, column_of(out.domain.embedding.matrix, j));
        AbelianElement b = make_element(s.middle.coeffs, section.preimage[static_cast<size_t>(index_of(c))]);
        std::vector<Int> flat(static_cast<size_t>(s.left.group->order) * k);
        for (int g = 0; g < s.left.group->order; ++g) {
            AbelianElement v = sub(apply(s.middle.action[g], b), b);
            auto a = inj_solver.solve(v.coords);
            if (!a) fail(errc::no_solution, "connecting map: value not in image of inj");
            std::vector<Int> red = reduce_coords(std::move(*a), s.left.coeffs.factors);
            for (int i = 0; i < k; ++i) flat[static_cast<size_t>(g) * k + i] = red[i];
        }
        std::vector<Int> cls = out.h1_left.classifier.class_of_flat(flat);
        for (int i = 0; i < cols.rows; ++i) cols(i, j) = cls[static_cast<size_t>(i)];
    }
    out.map = hom_unchecked(out.domain.presentation, out.h1_left.group, std::move(cols));
    return out;
}

// post-compose representative cochains with a coefficient map and classify
static AbelianHom induced_on_h(const CohomologyGroup& from, const CohomologyGroup& to,
                               const AbelianHom& value_map, const GModule& to_module) {
    Mat cols(to.group.rank(), from.group.rank());
    for (int j = 0; j < from.group.rank(); ++j) {
        const Cochain& f = from.representatives[static_cast<size_t>(j)];
        std::vector<Int> flat;
        flat.reserve(f.values.size() * to_module.coeffs.rank());
        for (const AbelianElement& v : f.values) {
            AbelianElement w = apply(value_map, v);
            flat.insert(flat.end(), w.coords.begin(), w.coords.end());
        }
        std::vector<Int> cls = to.classifier.class_of_flat(flat);
        for (int i = 0; i < cols.rows; ++i) cols(i, j) = cls[static_cast<size_t>(i)];
    }
    return hom_unchecked(from.group, to.group, std::move(cols));
}

static AbelianHom connecting_on_h(const ShortExactSequence& s, const CohomologyGroup& from,
                                  const CohomologyGroup& to, const SectionTable& section,
                                  const DiagSolver& inj_solver) {
    const int k = s.left.coeffs.rank();
    Mat cols(to.group.rank(), from.group.rank());
    for (int j = 0; j < from.group.rank(); ++j) {
        const Cochain& z = from.representatives[static_cast<size_t>(j)];
        Cochain lifted = zero_cochain(s.middle, z.degree);
        for (size_t t = 0; t < z.values.size(); ++t)
            lifted.values[t] =
                make_element(s.middle.coeffs, section.preimage[static_cast<size_t>(index_of(z.values[t]))]);
        Cochain db = apply_differential(s.middle, lifted);
        std::vector<Int> flat;
        flat.reserve(db.values.size() * k);
        for (const AbelianElement& v : db.values) {
            auto a = inj_solver.solve(v.coords);
            if (!a) fail(errc::no_solution, "connecting map: value not in image of inj");
            std::vector<Int> red = reduce_coords(std::move(*a), s.left.coeffs.factors);
            flat.insert(flat.end(), red.begin(), red.end());
        }
        std::vector<Int> cls = to.classifier.class_of_flat(flat);
        for (int i = 0; i < cols.rows; ++i) cols(i, j) = cls[static_cast<size_t>(i)];
    }
    return hom_unchecked(from.group, to.group, std::move(cols));
}

ExactnessReport check_long_exact(const ShortExactSequence& s, int max_degree,
                                 const CohomologyOptions& opts) {
    std::vector<CohomologyGroup> ha, hb, hc;
    for (int d = 0; d <= max_degree; ++d) {
        ha.push_back(cohomology_group(s.left, d, opts));
        hb.push_back(cohomology_group(s.middle, d, opts));
        hc.push_back(cohomology_group(s.right, d, opts));
    }
    bool closing = max_degree + 1 <= std::min(opts.degree_cap, kDegreeHardCap) &&
                   tuple_count(s.left, max_degree + 2) * s.left.coeffs.rank() <= opts.size_budget;
    std::optional<CohomologyGroup> ha_top;
    if (closing) ha_top = cohomology_group(s.left, max_degree + 1, opts);

    SectionTable section = least_section(s.surj);
    DiagSolver inj_solver(s.inj.matrix, s.middle.coeffs.factors);

    std::vector<std::string> labels;
    std::vector<AbelianHom> maps;
    for (int d = 0; d <= max_degree; ++d) {
        std::string deg = "H" + std::to_string(d);
        labels.push_back(deg + "(A)");
        maps.push_back(induced_on_h(ha[d], hb[d], s.inj, s.middle));
        labels.push_back(deg + "(B)");
        maps.push_back(induced_on_h(hb[d], hc[d], s.surj, s.right));
        if (d < max_degree) {
            labels.push_back(deg + "(C)");
            maps.push_back(connecting_on_h(s, hc[d], ha[d + 1], section, inj_solver));
        } else if (closing) {
            labels.push_back(deg + "(C)");
            maps.push_back(connecting_on_h(s, hc[d], *ha_top, section, inj_solver));
        }
    }

    ExactnessReport rep;
    for (size_t i = 0; i < maps.size(); ++i) {
        KernelImage ki_out = kernel_image(maps[i]);
        Int im_prev = 1;
        bool zero_comp = true;
        if (i > 0) {
            im_prev = kernel_image(maps[i - 1]).image.group.order();
            zero_comp = compose(maps[i], maps[i - 1]).matrix.is_zero();
        }
        ExactnessNode node{labels[i], ki_out.kernel.group.order(), im_prev,
                           zero_comp && ki_out.kernel.group.order() == im_prev, ""};
        if (!node.exact)
            node.witness = zero_comp ? "kernel exceeds incoming image" : "composite map nonzero";
        rep.nodes.push_back(std::move(node));
    }
    return rep;
}

bool conj_acts_trivially_on_h1(const GModule& m, Int der_cap) {
    H1Result h1 = h1_der(m);
    const int n = m.group->order;
    std::vector<Cochain> derivations;
    if (h1.der.group.order() <= der_cap) {
        for (Int i = 0; i < h1.der.group.order(); ++i) {
            std::vector<Int> flat =
                mat_apply(h1.der.embedding.matrix, element_at(h1.der.group, i).coords);
            derivations.push_back(cochain_from_flat(m, 1, reduce_coords(flat, cochain_factors(m, 1))));
        }
    } else {
        for (int j = 0; j < h1.der.group.rank(); ++j)
            derivations.push_back(cochain_from_flat(m, 1, column_of(h1.der.embedding.matrix, j)));
    }
    for (const Cochain& f : derivations) {
        for (int x = 0; x < n; ++x) {
            Cochain moved = f;
            for (int y = 0; y < n; ++y)
                moved.values[y] = apply(m.action[x], f.values[static_cast<size_t>(m.group->conj(y, x))]);
            if (!h1.is_inner(cochain_sub(moved, f))) return false;
        }
    }
    return true;
}

}  // namespace cf
