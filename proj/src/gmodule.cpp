#include "cohomoforge/gmodule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cf {

GModule validate_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs,
                        std::vector<AbelianHom> action) {
    if (static_cast<int>(action.size()) != group->order)
        fail(errc::bad_argument, "action array size != group order");
    for (const AbelianHom& h : action)
        if (h.source != coeffs || h.target != coeffs)
            fail(errc::bad_argument, "action value is not an endomorphism of the coefficients");
    if (!action[0].matrix.is_identity()) fail(errc::not_identity_at_e, "action at identity", {0});
    for (int g = 0; g < group->order; ++g)
        for (int h = 0; h < group->order; ++h)
            if (compose(action[g], action[h]).matrix != action[group->mul(g, h)].matrix)
                fail(errc::not_homomorphic, "action is not multiplicative", {g, h});
    for (int g = 0; g < group->order; ++g)
        if (!kernel_image(action[g]).kernel.group.is_trivial())
            fail(errc::not_automorphism, "action value has nontrivial kernel", {g});
    return GModule{group, coeffs, std::move(action)};
}

GModule validate_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs,
                        const std::vector<Mat>& action_matrices) {
    std::vector<AbelianHom> action;
    action.reserve(action_matrices.size());
    for (const Mat& m : action_matrices) action.push_back(validate_hom(coeffs, coeffs, m));
    return validate_module(group, coeffs, std::move(action));
}

GModule trivial_module(const GroupPtr& group, const FiniteAbelianGroup& coeffs) {
    std::vector<AbelianHom> action(group->order, identity_hom(coeffs));
    return GModule{group, coeffs, std::move(action)};
}

bool modules_equal(const GModule& a, const GModule& b) {
    if (a.group.get() != b.group.get() || a.coeffs != b.coeffs) return false;
    for (int g = 0; g < a.group->order; ++g)
        if (a.action[g].matrix != b.action[g].matrix) return false;
    return true;
}

static Submodule submodule_from_lattice(const GModule& m, const Mat& genmat) {
    SubquotientPresentation sq = subquotient(genmat, diagonal(m.coeffs.factors), m.coeffs.factors);
    Submodule s;
    s.parent = m;
    s.presentation = sq.group;
    s.embedding = hom_unchecked(sq.group, m.coeffs, sq.gens_in_ambient);
    for (int j = 0; j < sq.gens_in_ambient.cols; ++j)
        s.generators.push_back(make_element(m.coeffs, column_of(sq.gens_in_ambient, j)));
    return s;
}

Submodule trivial_submodule(const GModule& m) {
    return submodule_from_lattice(m, Mat(m.coeffs.rank(), 0));
}

Submodule whole_submodule(const GModule& m) {
    return submodule_from_lattice(m, Mat::identity(m.coeffs.rank()));
}

bool submodule_contains(const Submodule& s, const AbelianElement& x) {
    return subgroup_contains(s.embedding, x);
}

std::vector<AbelianElement> submodule_elements(const Submodule& s, Int cap) {
    if (s.order() > cap) fail(errc::cap_exceeded, "submodule enumeration over cap");
    std::vector<AbelianElement> out;
    for (Int i = 0; i < s.order(); ++i)
        out.push_back(apply(s.embedding, element_at(s.presentation, i)));
    std::sort(out.begin(), out.end(),
              [](const AbelianElement& a, const AbelianElement& b) { return a.coords < b.coords; });
    return out;
}

bool submodules_equal(const Submodule& a, const Submodule& b) {
    if (a.order() != b.order()) return false;
    for (const AbelianElement& g : a.generators)
        if (!submodule_contains(b, g)) return false;
    return true;
}

Submodule invariants(const GModule& m) {
    const int k = m.coeffs.rank();
    const int n = m.group->order;
    Mat cond((n - 1) * k, k);
    std::vector<Int> moduli;
    moduli.reserve(static_cast<size_t>(n - 1) * k);
    for (int g = 1; g < n; ++g) {
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j)
                cond((g - 1) * k + i, j) = m.action[g].matrix(i, j) - (i == j ? 1 : 0);
            moduli.push_back(m.coeffs.factors[i]);
        }
    }
    KernelLattice ker = kernel_mod_diag(cond, moduli);
    return submodule_from_lattice(m, ker.gens);
}

Submodule spin_submodule(const GModule& m, const std::vector<AbelianElement>& seeds) {
    const int k = m.coeffs.rank();
    Mat orbit(k, m.group->order * static_cast<int>(seeds.size()));
    int c = 0;
    for (const AbelianElement& s : seeds) {
        if (s.parent != m.coeffs) fail(errc::bad_argument, "seed not in coefficients");
        for (int g = 0; g < m.group->order; ++g) {
            AbelianElement v = m.act(g, s);
            for (int i = 0; i < k; ++i) orbit(i, c) = v.coords[i];
            ++c;
        }
    }
    return submodule_from_lattice(m, orbit);
}

bool is_irreducible(const GModule& m) {
    Int n = m.coeffs.order();
    if (n == 1) return false;
    for (Int i = 1; i < n; ++i) {
        AbelianElement a = element_at(m.coeffs, i);
        if (spin_submodule(m, {a}).order() != n) return false;
    }
    return true;
}

// minimal nonzero submodule of m, seeded in canonical (or reversed) order
static Submodule minimal_submodule(const GModule& m, int seed_order) {
    Int n = m.coeffs.order();
    auto seed_at = [&](Int pos) {
        return element_at(m.coeffs, seed_order >= 0 ? pos : n - pos);
    };
    Submodule s = spin_submodule(m, {seed_at(1)});
    for (;;) {
        bool shrunk = false;
        std::vector<AbelianElement> elems = submodule_elements(s);
        if (seed_order < 0) std::reverse(elems.begin(), elems.end());
        for (const AbelianElement& b : elems) {
            if (b.is_zero()) continue;
            Submodule t = spin_submodule(m, {b});
            if (t.order() < s.order()) {
                s = t;
                shrunk = true;
                break;
            }
        }
        if (!shrunk) return s;
    }
}

Submodule minimal_nonzero_submodule(const GModule& m) {
    if (m.coeffs.is_trivial()) fail(errc::bad_argument, "trivial module has no nonzero submodule");
    return minimal_submodule(m, +1);
}

CompositionSeries composition_series(const GModule& m) { return composition_series(m, +1); }

CompositionSeries composition_series(const GModule& m, int seed_order) {
    CompositionSeries out;
    out.chain.push_back(trivial_submodule(m));
    while (out.chain.back().order() < m.coeffs.order()) {
        QuotientModule q = quotient_module(m, out.chain.back());
        Submodule s = minimal_submodule(q.module, seed_order);
        if (!is_irreducible(sub_module_on(q.module, s).module))
            fail(errc::no_solution, "composition factor failed the irreducibility spin");
        std::vector<AbelianElement> gens;
        for (const AbelianElement& sg : s.generators) gens.push_back(q.quotient.section(sg));
        for (const AbelianElement& pg : out.chain.back().generators) gens.push_back(pg);
        Mat genmat(m.coeffs.rank(), static_cast<int>(gens.size()));
        for (size_t j = 0; j < gens.size(); ++j)
            for (int i = 0; i < m.coeffs.rank(); ++i) genmat(i, static_cast<int>(j)) = gens[j].coords[i];
        out.chain.push_back(submodule_from_lattice(m, genmat));
    }
    return out;
}

RestrictedModule restrict_module(const GModule& m, const Subgroup& h) {
    if (h.parent.get() != m.group.get()) fail(errc::bad_argument, "subgroup of a different group");
    GroupPtr hg = subgroup_as_group(h);
    std::vector<AbelianHom> action;
    for (int x : h.elements) action.push_back(m.action[x]);
    return RestrictedModule{validate_module(hg, m.coeffs, std::move(action)), h, h.elements};
}

static Mat coords_of_columns(const DiagSolver& solver, const Mat& rhs, const std::vector<Int>& out_factors) {
    Mat out(static_cast<int>(out_factors.size()), rhs.cols);
    for (int j = 0; j < rhs.cols; ++j) {
        auto sol = solver.solve(column_of(rhs, j));
        if (!sol) fail(errc::no_solution, "column not in subgroup");
        std::vector<Int> red = reduce_coords(std::move(*sol), out_factors);
        for (int i = 0; i < out.rows; ++i) out(i, j) = red[i];
    }
    return out;
}

InflatedModule inflate_module(const GModule& m, const Subgroup& h) {
    // A^H, computed against the H-action only
    const int k = m.coeffs.rank();
    Mat cond((h.order() - 1) * k, k);
    std::vector<Int> moduli;
    int r = 0;
    for (int x : h.elements) {
        if (x == 0) continue;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) cond(r * k + i, j) = m.action[x].matrix(i, j) - (i == j ? 1 : 0);
            moduli.push_back(m.coeffs.factors[i]);
        }
        ++r;
    }
    KernelLattice ker = kernel_mod_diag(cond, moduli);
    Submodule fixed = submodule_from_lattice(m, ker.gens);

    QuotientGroup qg = quotient_group(m.group, h);  // throws NotNormal when H is not normal
    DiagSolver solver(fixed.embedding.matrix, m.coeffs.factors);
    std::vector<Mat> mats;
    for (const auto& coset : qg.cosets) {
        Mat moved = mat_mul(m.action[coset[0]].matrix, fixed.embedding.matrix);
        mats.push_back(coords_of_columns(solver, moved, fixed.presentation.factors));
    }
    GModule module = validate_module(qg.group, fixed.presentation, mats);
    return InflatedModule{std::move(module), std::move(qg), std::move(fixed)};
}

QuotientModule quotient_module(const GModule& m, const Submodule& n) {
    for (const AbelianElement& x : n.generators)
        for (int g = 0; g < m.group->order; ++g)
            if (!submodule_contains(n, m.act(g, x)))
                fail(errc::not_submodule, "subgroup is not G-invariant", {g});
    QuotientPresentation qp = quotient_by(m.coeffs, n.generators);
    std::vector<Mat> mats;
    for (int g = 0; g < m.group->order; ++g)
        mats.push_back(mat_mul(qp.projection.matrix, mat_mul(m.action[g].matrix, qp.section_matrix)));
    GModule module = validate_module(m.group, qp.quotient, mats);
    return QuotientModule{std::move(module), std::move(qp)};
}

SubquotientModule sub_module_on(const GModule& m, const Submodule& n) {
    for (const AbelianElement& x : n.generators)
        for (int g = 0; g < m.group->order; ++g)
            if (!submodule_contains(n, m.act(g, x)))
                fail(errc::not_submodule, "subgroup is not G-invariant", {g});
    DiagSolver solver(n.embedding.matrix, m.coeffs.factors);
    std::vector<Mat> mats;
    for (int g = 0; g < m.group->order; ++g) {
        Mat moved = mat_mul(m.action[g].matrix, n.embedding.matrix);
        mats.push_back(coords_of_columns(solver, moved, n.presentation.factors));
    }
    GModule module = validate_module(m.group, n.presentation, mats);
    return SubquotientModule{std::move(module), n.embedding};
}

DerivedModule derive_module(const GModule& m, const DeriveKind& kind) {
    DerivedModule out;
    if (const auto* r = std::get_if<Restrict>(&kind)) {
        RestrictedModule rm = restrict_module(m, r->h);
        out.module = rm.module;
    } else if (const auto* i = std::get_if<Inflate>(&kind)) {
        InflatedModule im = inflate_module(m, i->h);
        out.module = im.module;
        out.group_map = im.quotient.projection;
        out.coeff_map = im.fixed_points.embedding;
    } else if (const auto* q = std::get_if<QuotientBy>(&kind)) {
        QuotientModule qm = quotient_module(m, q->n);
        out.module = qm.module;
        out.coeff_map = qm.quotient.projection;
    } else {
        const auto& s = std::get<SubOn>(kind);
        SubquotientModule sm = sub_module_on(m, s.n);
        out.module = sm.module;
        out.coeff_map = sm.embedding;
    }
    return out;
}

std::vector<Submodule> submodule_lattice(const GModule& m, size_t cap) {
    auto key_of = [&](const Submodule& s) {
        std::vector<Int> key;
        for (const AbelianElement& e : submodule_elements(s)) key.push_back(index_of(e));
        std::sort(key.begin(), key.end());
        return key;
    };
    std::map<std::vector<Int>, Submodule> found;
    std::vector<Submodule> queue;
    auto insert = [&](Submodule s) {
        auto key = key_of(s);
        if (found.count(key)) return;
        if (found.size() >= cap) fail(errc::lattice_cap_exceeded, "submodule lattice over cap");
        found.emplace(key, s);
        queue.push_back(std::move(s));
    };
    insert(trivial_submodule(m));
    Int n = m.coeffs.order();
    for (Int i = 1; i < n; ++i) insert(spin_submodule(m, {element_at(m.coeffs, i)}));
    // close under joins
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Submodule a = queue[qi];
        for (size_t qj = 0; qj <= qi; ++qj) {
            std::vector<AbelianElement> gens = a.generators;
            const Submodule& b = queue[qj];
            gens.insert(gens.end(), b.generators.begin(), b.generators.end());
            insert(spin_submodule(m, gens));
        }
    }
    std::vector<Submodule> out;
    for (auto& [key, s] : found) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), [&](const Submodule& x, const Submodule& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return key_of(x) < key_of(y);
    });
    return out;
}

ActionRingReport action_ring_centralizer(const GModule& m, const ActionRingOptions& opts) {
    if (m.coeffs.order() > opts.coeff_cap)
        fail(errc::cap_exceeded, "coefficient group over the endomorphism cap");
    const int k = m.coeffs.rank();
    const auto& d = m.coeffs.factors;
    ActionRingReport out;

    // ring closure of {rho(g)} under sum and composition
    std::set<std::vector<Int>> seen;
    std::vector<Mat> ring;
    auto push = [&](Mat x) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) x(i, j) = mod_floor(x(i, j), d[i]);
        if (seen.insert(x.a).second) {
            if (ring.size() >= opts.element_cap) fail(errc::cap_exceeded, "action ring over cap");
            ring.push_back(std::move(x));
            return true;
        }
        return false;
    };
    for (int g = 0; g < m.group->order; ++g) push(m.action[g].matrix);
    for (size_t i = 0; i < ring.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            push(mat_add(ring[i], ring[j]));
            push(mat_mul(ring[i], ring[j]));
            if (i != j) push(mat_mul(ring[j], ring[i]));
        }
    for (const Mat& x : ring) out.ring_elements.push_back(hom_unchecked(m.coeffs, m.coeffs, x));

    // centralizer inside End(A): entry (i,j) = t_ij * c_ij with c_ij mod gcd(d_i, d_j)
    std::vector<Int> cmod(static_cast<size_t>(k) * k, 1);
    std::vector<Int> tfac(static_cast<size_t>(k) * k, 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Int g = gcd_int(d[static_cast<size_t>(i)], d[static_cast<size_t>(j)]);
            cmod[static_cast<size_t>(i) * k + j] = g;
            tfac[static_cast<size_t>(i) * k + j] = d[static_cast<size_t>(i)] / g;
        }
    const int nc = k * k;
    Mat cond(m.group->order * nc, nc);
    std::vector<Int> moduli;
    moduli.reserve(static_cast<size_t>(m.group->order) * nc);
    for (int g = 0; g < m.group->order; ++g) {
        const Mat& b = m.action[g].matrix;
        for (int rr = 0; rr < k; ++rr)
            for (int s = 0; s < k; ++s) {
                int row = g * nc + rr * k + s;
                // (X b - b X)(rr, s) as a linear form in the c-coordinates
                for (int j = 0; j < k; ++j) {
                    cond(row, rr * k + j) += tfac[static_cast<size_t>(rr) * k + j] * b(j, s);
                    cond(row, j * k + s) -= b(rr, j) * tfac[static_cast<size_t>(j) * k + s];
                }
                moduli.push_back(d[rr]);
            }
    }
    KernelLattice ker = kernel_mod_diag(cond, moduli);
    SubquotientPresentation pres = subquotient(ker.gens, diagonal(cmod), cmod);
    out.centralizer_order = pres.group.order();
    if (out.centralizer_order > Int(static_cast<long long>(opts.element_cap)))
        fail(errc::cap_exceeded, "centralizer over cap");
    for (Int idx = 0; idx < out.centralizer_order; ++idx) {
        std::vector<Int> coords = element_at(pres.group, idx).coords;
        std::vector<Int> c = reduce_coords(mat_apply(pres.gens_in_ambient, coords), cmod);
        Mat x(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                x(i, j) = mod_floor(tfac[static_cast<size_t>(i) * k + j] * c[static_cast<size_t>(i) * k + j],
                                    d[i]);
        out.centralizer.push_back(hom_unchecked(m.coeffs, m.coeffs, x));
    }

    bool field = out.centralizer_order >= 2;
    for (size_t i = 0; i < out.centralizer.size() && field; ++i) {
        const Mat& x = out.centralizer[i].matrix;
        if (!x.is_zero() && !kernel_image(out.centralizer[i]).kernel.group.is_trivial()) field = false;
        for (size_t j = 0; j < i && field; ++j)
            if (compose(out.centralizer[i], out.centralizer[j]).matrix !=
                compose(out.centralizer[j], out.centralizer[i]).matrix)
                field = false;
    }
    out.centralizer_is_field = field;
    return out;
}

}  // namespace cf
