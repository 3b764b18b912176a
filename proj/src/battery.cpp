#include "cohomoforge/battery.hpp"

#include "cohomoforge/oracles.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace cf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string factors_str(const std::vector<Int>& f) {
    std::string s = "[";
    for (size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].str();
    return s + "]";
}

FpMat matrix_power_pmap(const LieRing& g, int basis_count,
                        const std::vector<FpMat>& basis_matrices) {
    // [p]-map on an algebra of matrices: p-th matrix power, written in basis coords
    FpMat out(g.p, g.dim, g.dim);
    for (int i = 0; i < basis_count; ++i) {
        FpMat pw = fp_pow(basis_matrices[static_cast<size_t>(i)], g.p);
        // coordinates of pw in the matrix basis (entries are the basis coords for gl2)
        for (int c = 0; c < g.dim; ++c) out.at(c, i) = pw.a[static_cast<size_t>(c)];
    }
    return out;
}

}  // namespace

const std::vector<NamedLieModule>& lie_module_catalog() {
    static const std::vector<NamedLieModule> catalog = [] {
        std::vector<NamedLieModule> out;
        auto scalar = [](int p, int v) {
            FpMat m(p, 1, 1);
            m.at(0, 0) = ((v % p) + p) % p;
            return m;
        };
        for (int p : {2, 3, 5}) {
            LieRing a1 = abelian_lie(p, 1);
            out.push_back({"abelian1/F" + std::to_string(p) + " trivial",
                           trivial_lie_module(a1, 1), std::nullopt});
            out.push_back({"abelian1/F" + std::to_string(p) + " invertible",
                           validate_lie_module(a1, 1, {scalar(p, 1)}), std::nullopt});
            LieRing a2 = abelian_lie(p, 2);
            out.push_back({"abelian2/F" + std::to_string(p) + " trivial",
                           trivial_lie_module(a2, 2), std::nullopt});
            LieRing h = heisenberg_lie(p);
            out.push_back({"heisenberg/F" + std::to_string(p) + " trivial",
                           trivial_lie_module(h, 1), std::nullopt});
            out.push_back({"heisenberg/F" + std::to_string(p) + " scalar",
                           validate_lie_module(h, 1, {scalar(p, 1), scalar(p, 0), scalar(p, 0)}),
                           std::nullopt});
        }
        // 1-dim torus acting with distinct eigenvalues
        {
            LieRing a1 = abelian_lie(5, 1);
            FpMat act(5, 2, 2);
            act.at(0, 0) = 1;
            act.at(1, 1) = 2;
            FpMat pm(5, 1, 1);
            pm.at(0, 0) = 1;
            out.push_back({"torus1/F5 diag(1,2)", validate_lie_module(a1, 2, {act}), pm});
        }
        {
            LieRing a2 = abelian_lie(3, 2);
            FpMat e1 = FpMat::identity(3, 2);
            FpMat e2(3, 2, 2);
            e2.at(0, 0) = 1;
            e2.at(1, 1) = 2;
            out.push_back({"torus2/F3", validate_lie_module(a2, 2, {e1, e2}),
                           FpMat::identity(3, 2)});
        }
        for (int p : {3, 5}) {
            LieRing s = solvable2_lie(p);
            out.push_back({"solvable2/F" + std::to_string(p) + " trivial",
                           trivial_lie_module(s, 1), std::nullopt});
            FpMat d(p, 2, 2), e12(p, 2, 2);
            d.at(0, 0) = 1;
            e12.at(0, 1) = 1;
            out.push_back({"solvable2/F" + std::to_string(p) + " natural",
                           validate_lie_module(s, 2, {d, e12}), std::nullopt});
        }
        {
            LieRing sl2 = sl2_lie(5);
            std::vector<FpMat> ad;
            for (int i = 0; i < 3; ++i) ad.push_back(sl2.ad_basis(i));
            out.push_back({"sl2/F5 adjoint", validate_lie_module(sl2, 3, ad), std::nullopt});
            FpMat e(5, 2, 2), f(5, 2, 2), hm(5, 2, 2);
            e.at(0, 1) = 1;
            f.at(1, 0) = 1;
            hm.at(0, 0) = 1;
            hm.at(1, 1) = 4;
            out.push_back({"sl2/F5 natural", validate_lie_module(sl2, 2, {e, f, hm}), std::nullopt});
        }
        for (int p : {2, 3}) {
            LieRing gl2 = gl2_lie(p);
            std::vector<FpMat> basis;
            for (int i = 0; i < 4; ++i) {
                FpMat m(p, 2, 2);
                m.at(i / 2, i % 2) = 1;
                basis.push_back(m);
            }
            std::vector<FpMat> ad;
            for (int i = 0; i < 4; ++i) ad.push_back(gl2.ad_basis(i));
            out.push_back({"gl2/F" + std::to_string(p) + " adjoint",
                           validate_lie_module(gl2, 4, ad), matrix_power_pmap(gl2, 4, basis)});
        }
        return out;
    }();
    return catalog;
}

namespace {

// --- criterion 1: complex axiom ------------------------------------------------

CriterionResult c1_complex_axiom() {
    CriterionResult r{1, "complex axiom d.d = 0 for n in {0,1,2}", false, "", 0, 60};
    auto t0 = Clock::now();
    CohomologyOptions opts;
    opts.degree_cap = 3;
    opts.size_budget = 6000;
    ModuleFamilyOptions fam;
    fam.max_group_order = 6;
    fam.max_coeff_order = 9;
    int group_count = 0;
    bool all_zero = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        long long top = tuple_count(cm.module, 4) * cm.module.coeffs.rank();
        if (top > opts.size_budget) return true;
        for (int n = 0; n <= 2 && all_zero; ++n) {
            AbelianHom dn = differential(cm.module, n, opts);
            AbelianHom dn1 = differential(cm.module, n + 1, opts);
            if (!compose(dn1, dn).matrix.is_zero()) all_zero = false;
        }
        ++group_count;
        return all_zero && group_count < 60;
    });
    int lie_count = 0;
    for (const NamedLieModule& lm : lie_module_catalog()) {
        for (int n = 0; n <= 2 && all_zero; ++n) {
            FpMat dd = fp_mul(ce_differential(lm.module, n + 1), ce_differential(lm.module, n));
            if (!dd.is_zero()) all_zero = false;
        }
        ++lie_count;
    }
    r.seconds = seconds_since(t0);
    r.pass = all_zero && group_count >= 50 && lie_count >= 10 && r.seconds < r.budget_seconds;
    r.detail = std::to_string(group_count) + " group modules, " + std::to_string(lie_count) +
               " Lie modules";
    return r;
}

// --- criterion 2: oracle equivalence -------------------------------------------

CriterionResult c2_oracle_equivalence() {
    CriterionResult r{2, "H^1/H^2 match brute-force enumeration", false, "", 0, 120};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 4;
    fam.max_coeff_order = 9;
    CohomologyOptions opts;
    opts.degree_cap = 2;
    opts.size_budget = 6000;
    int checked = 0;
    bool all_match = true;
    std::string mismatch;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        std::vector<Int> h1 = cohomology_group(cm.module, 1, opts).group.factors;
        std::vector<Int> h2 = cohomology_group(cm.module, 2, opts).group.factors;
        std::vector<Int> b1 = oracle::brute_h1(cm.module);
        std::vector<Int> b2 = oracle::brute_h2(cm.module);
        if (h1 != b1 || h2 != b2) {
            all_match = false;
            mismatch = cm.name + ": engine " + factors_str(h1) + "/" + factors_str(h2) +
                       " oracle " + factors_str(b1) + "/" + factors_str(b2);
        }
        ++checked;
        return all_match;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_match && checked >= 30 && r.seconds < r.budget_seconds;
    r.detail = std::to_string(checked) + " modules vs oracle" + (mismatch.empty() ? "" : "; " + mismatch);
    return r;
}

// --- criterion 3: H^0 = invariants -----------------------------------------------

CriterionResult c3_h0_identity() {
    CriterionResult r{3, "H^0 equals the invariants submodule", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;  // defaults: the full catalog family
    CohomologyOptions opts;
    opts.size_budget = 1 << 20;  // degree 0 stays tiny regardless of |G|
    int checked = 0;
    bool all_match = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        CohomologyGroup h0 = cohomology_group(cm.module, 0, opts);
        Submodule inv = invariants(cm.module);
        if (h0.group.factors != inv.presentation.factors) {
            all_match = false;
            return false;
        }
        // matching elements: every representative is a fixed point and the
        // generated subgroups agree
        Int gen_order = 1;
        std::vector<AbelianElement> gens;
        for (const Cochain& rep : h0.representatives) {
            if (!submodule_contains(inv, rep.values[0])) {
                all_match = false;
                return false;
            }
            gens.push_back(rep.values[0]);
        }
        (void)gen_order;
        if (!gens.empty() || inv.is_trivial()) {
            Submodule span = spin_submodule(cm.module, gens);
            if (span.order() != inv.order()) {
                all_match = false;
                return false;
            }
        }
        ++checked;
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_match && checked >= 100;
    r.detail = std::to_string(checked) + " modules";
    return r;
}

// --- criterion 4: H^1 two-path agreement -----------------------------------------

CriterionResult c4_two_path() {
    CriterionResult r{4, "h1_der agrees with the cochain route", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 8;
    fam.max_coeff_order = 16;
    CohomologyOptions opts;
    opts.size_budget = 6000;
    int checked = 0;
    bool all_match = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (tuple_count(cm.module, 2) * cm.module.coeffs.rank() > opts.size_budget) return true;
        H1Result der = h1_der(cm.module);
        CohomologyGroup coch = cohomology_group(cm.module, 1, opts);
        if (der.h1.group.factors != coch.group.factors) {
            all_match = false;
            return false;
        }
        // cross classification must give mutually inverse isomorphisms
        const int n = der.h1.group.rank();
        Mat pmat(n, n), qmat(n, n);
        for (int j = 0; j < n; ++j) {
            std::vector<Int> p = coch.classifier.class_of_flat(flat_of(der.h1.representatives[j]));
            std::vector<Int> q = der.h1.classifier.class_of_flat(flat_of(coch.representatives[j]));
            for (int i = 0; i < n; ++i) {
                pmat(i, j) = p[i];
                qmat(i, j) = q[i];
            }
        }
        AbelianHom ph = hom_unchecked(der.h1.group, coch.group, pmat);
        AbelianHom qh = hom_unchecked(coch.group, der.h1.group, qmat);
        if (!compose(ph, qh).matrix.is_identity() || !compose(qh, ph).matrix.is_identity()) {
            all_match = false;
            return false;
        }
        ++checked;
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_match && checked >= 100;
    r.detail = std::to_string(checked) + " modules on both routes";
    return r;
}

// --- criterion 5: vanishing battery ----------------------------------------------

CriterionResult c5_vanishing() {
    CriterionResult r{5, "H^1 = 0 for nilpotent G with trivial invariants", false, "", 0, 600};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 16;
    fam.max_coeff_order = 49;
    fam.nilpotent_groups_only = true;
    fam.include_trivial_actions = false;
    int qualifying = 0, exceptions = 0;
    std::string witness;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (!invariants(cm.module).is_trivial()) return true;
        ++qualifying;
        if (!h1_der(cm.module).h1.group.is_trivial()) {
            ++exceptions;
            witness = cm.name;
            return false;
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = exceptions == 0 && qualifying >= 300 && r.seconds < r.budget_seconds;
    r.detail = std::to_string(qualifying) + " qualifying actions, " + std::to_string(exceptions) +
               " exceptions" + (witness.empty() ? "" : "; first: " + witness);
    return r;
}

// --- criterion 6: inflation-restriction ------------------------------------------

CriterionResult c6_inf_res() {
    CriterionResult r{6, "inflation-restriction exactness and fixed-point containment", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 8;
    fam.max_coeff_order = 9;
    int pairs = 0, qualifying_211 = 0;
    bool all_exact = true;
    std::string witness;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (pairs >= 60) return false;
        std::vector<Subgroup> normals;
        for (const Subgroup& h : enumerate_subgroups(cm.module.group))
            if (is_normal(h)) normals.push_back(h);
        for (const Subgroup& h : normals) {
            if (pairs >= 60) break;
            ExactnessReport rep = check_inf_res_exact(cm.module, h);
            ++pairs;
            if (!rep.all_exact()) {
                all_exact = false;
                witness = cm.name + " with |H| = " + std::to_string(h.order());
                return false;
            }
            if (lemma_faithful_reduction_applies(cm.module, h)) {
                ++qualifying_211;
                InfResData data = h1_maps(cm.module, h);
                FixedClasses fixed = conj_action_fixed(cm.module, h);
                KernelImage ki = kernel_image(data.inflation);
                bool iso = ki.kernel.group.is_trivial() &&
                           ki.image.group.order() == data.h1_g.h1.group.order();
                if (!iso || !fixed.group.is_trivial()) {
                    all_exact = false;
                    witness = cm.name + ": faithful-reduction instance failed";
                    return false;
                }
            }
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_exact && pairs >= 30 && qualifying_211 >= 3;
    r.detail = std::to_string(pairs) + " (M,H) pairs, " + std::to_string(qualifying_211) +
               " faithful-reduction instances" + (witness.empty() ? "" : "; " + witness);
    return r;
}

// --- criterion 7: long exact sequence --------------------------------------------

CriterionResult c7_les() {
    CriterionResult r{7, "six-term exactness and section-independent connecting map", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 4;
    fam.max_coeff_order = 16;
    CohomologyOptions opts;
    opts.degree_cap = 2;
    opts.size_budget = 6000;
    int sequences = 0, nonsplit = 0;
    bool all_ok = true;
    std::string witness;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (sequences >= 14) return false;
        std::vector<Submodule> lattice;
        try {
            lattice = submodule_lattice(cm.module, 64);
        } catch (const Error&) {
            return true;
        }
        for (const Submodule& w : lattice) {
            if (sequences >= 14) break;
            if (w.is_trivial() || w.is_whole()) continue;
            ShortExactSequence s = ses_from_submodule(cm.module, w);
            ++sequences;
            // split as abelian groups iff the factor lists multiply back
            DirectSum ds = direct_sum(s.left.coeffs, s.right.coeffs);
            if (ds.sum.factors != s.middle.coeffs.factors) ++nonsplit;
            ExactnessReport rep = check_long_exact(s, 1, opts);
            if (!rep.all_exact() || rep.nodes.size() != 6) {
                all_ok = false;
                witness = cm.name + ": exactness fails";
                return false;
            }
            ConnectingMap base = connecting_map(s);
            for (unsigned long long seed = 1; seed <= 5 && all_ok; ++seed) {
                ConnectingMap other = connecting_map(s, randomized_section(s.surj, seed));
                if (!(other.map.matrix == base.map.matrix)) {
                    all_ok = false;
                    witness = cm.name + ": connecting map depends on the section";
                }
            }
            if (!all_ok) return false;
            break;  // one sequence per module keeps the set diverse
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_ok && sequences >= 10 && nonsplit >= 2;
    r.detail = std::to_string(sequences) + " sequences (" + std::to_string(nonsplit) +
               " non-split), 5 randomized sections each" + (witness.empty() ? "" : "; " + witness);
    return r;
}

// --- criterion 8: trivial conjugation action on H^1 -------------------------------

CriterionResult c8_conjugation() {
    CriterionResult r{8, "(x.f) - f inner for every derivation and every x", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 8;
    fam.max_coeff_order = 9;
    int exhaustive = 0;
    bool all_ok = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (exhaustive >= 150) return false;
        H1Result h1 = h1_der(cm.module);
        if (h1.der.group.order() > 512) return true;
        ++exhaustive;
        if (!conj_acts_trivially_on_h1(cm.module, 512)) {
            all_ok = false;
            return false;
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_ok && exhaustive >= 100;
    r.detail = std::to_string(exhaustive) + " modules, full derivation groups";
    return r;
}

// --- criterion 9: composition factors ---------------------------------------------

CriterionResult c9_composition_factors() {
    CriterionResult r{9, "(U/V)^G = 0 across full submodule lattices", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 16;
    fam.max_coeff_order = 49;
    fam.nilpotent_groups_only = true;
    fam.include_trivial_actions = false;
    int qualifying = 0;
    bool all_ok = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (qualifying >= 25) return false;
        if (cm.module.coeffs.order() > 49) return true;
        if (!invariants(cm.module).is_trivial()) return true;
        TheoremReport rep = verify_composition_factors(cm.module);
        if (!rep.hypotheses_hold()) return true;
        ++qualifying;
        if (!rep.passed()) {
            all_ok = false;
            return false;
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_ok && qualifying >= 10;
    r.detail = std::to_string(qualifying) + " modules with full lattice scans";
    return r;
}

// --- criterion 10: Schur / Wedderburn ----------------------------------------------

CriterionResult c10_schur() {
    CriterionResult r{10, "centralizer fields and the explicit coboundary witness", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 16;
    fam.max_coeff_order = 49;
    fam.include_trivial_actions = false;
    int irreducible = 0, abelian_witness = 0;
    bool all_ok = true;
    std::string witness;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (irreducible >= 40) return false;
        if (cm.module.coeffs.order() > 81) return true;
        if (!is_irreducible(cm.module)) return true;
        ++irreducible;
        TheoremReport rep = schur_check(cm.module);
        if (!rep.passed()) {
            all_ok = false;
            witness = cm.name;
            return false;
        }
        for (const auto& [k, v] : rep.data)
            if (k == "abelian witness applies" && v == "yes") ++abelian_witness;
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_ok && irreducible >= 10 && abelian_witness >= 5;
    r.detail = std::to_string(irreducible) + " irreducible modules, " +
               std::to_string(abelian_witness) + " with the abelian coboundary witness" +
               (witness.empty() ? "" : "; failed: " + witness);
    return r;
}

// --- criterion 11: Frattini --------------------------------------------------------

CriterionResult c11_frattini() {
    CriterionResult r{11, "G = H N_G(C) for Carter subgroups of normal solvable H", false, "", 0, 0};
    auto t0 = Clock::now();
    long long triples = 0;
    bool all_ok = true;
    std::string witness;
    for (const CatalogGroup& cg : catalog_groups()) {
        if (cg.group->order > 48) continue;
        std::vector<Subgroup> subs = enumerate_subgroups(cg.group);
        for (const Subgroup& h : subs) {
            if (!is_normal(h)) continue;
            if (!is_solvable(subgroup_as_group(h))) continue;
            for (const Subgroup& c : subs) {
                bool inside = true;
                for (int x : c.elements)
                    if (!h.contains(x)) {
                        inside = false;
                        break;
                    }
                if (!inside || !is_carter_in(h, c)) continue;
                ++triples;
                TheoremReport rep = verify_frattini(cg.group, h, c);
                if (!rep.conclusion_holds) {
                    all_ok = false;
                    witness = cg.name + " |H|=" + std::to_string(h.order()) +
                              " |C|=" + std::to_string(c.order());
                    break;
                }
            }
            if (!all_ok) break;
        }
        if (!all_ok) break;
    }
    r.seconds = seconds_since(t0);
    r.pass = all_ok && triples >= 100;
    r.detail = std::to_string(triples) + " (G,H,C) triples" + (witness.empty() ? "" : "; " + witness);
    return r;
}

// --- criterion 12: Maschke ----------------------------------------------------------

CriterionResult c12_maschke() {
    CriterionResult r{12, "Maschke decomposition certificates over p in {2,3,5}", false, "", 0, 0};
    auto t0 = Clock::now();
    ModuleFamilyOptions fam;
    fam.max_group_order = 16;
    fam.max_coeff_order = 49;
    fam.include_trivial_actions = false;
    int count = 0;
    std::set<Int> primes_seen;
    bool all_ok = true;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (count >= 30) return false;
        const auto& fs = cm.module.coeffs.factors;
        Int p = fs.empty() ? Int(0) : fs[0];
        bool elementary = !fs.empty() && (p == 2 || p == 3 || p == 5);
        for (const Int& d : fs)
            if (d != p) elementary = false;
        if (!elementary) return true;
        if (!cm.module.group->is_abelian()) return true;
        if (Int(cm.module.group->order) % p == 0) return true;
        if (!invariants(cm.module).is_trivial()) return true;
        MaschkeDecomposition dec = maschke_decompose(cm.module);
        ++count;
        primes_seen.insert(p);
        if (!dec.certified) {
            all_ok = false;
            return false;
        }
        return true;
    });
    r.seconds = seconds_since(t0);
    r.pass = all_ok && count >= 10 && primes_seen.size() == 3;
    r.detail = std::to_string(count) + " T-modules over " + std::to_string(primes_seen.size()) +
               " primes";
    return r;
}

// --- criterion 13: Lie mirror --------------------------------------------------------

CriterionResult c13_lie_mirror() {
    CriterionResult r{13, "Lie mirror: CE, two-path, inf-res, six-term, vanishing, Frattini",
                      false, "", 0, 300};
    auto t0 = Clock::now();
    bool all_ok = true;
    std::string witness;
    int modules = 0, infres_pairs = 0, six_terms = 0, vanishing = 0;
    for (const NamedLieModule& lm : lie_module_catalog()) {
        ++modules;
        for (int n = 0; n <= 2 && all_ok; ++n)
            if (!fp_mul(ce_differential(lm.module, n + 1), ce_differential(lm.module, n)).is_zero()) {
                all_ok = false;
                witness = lm.name + ": d.d != 0";
            }
        if (!all_ok) break;
        if (lie_h1_der(lm.module).h1.dim != ce_cohomology(lm.module, 1).dim) {
            all_ok = false;
            witness = lm.name + ": H1 routes disagree";
            break;
        }
        for (const SubSpace& ideal : all_subspaces(lm.module.ring.p, lm.module.ring.dim)) {
            if (!is_ideal(lm.module.ring, ideal)) continue;
            ExactnessReport rep = check_lie_inf_res(lm.module, ideal);
            ++infres_pairs;
            if (!rep.all_exact()) {
                all_ok = false;
                witness = lm.name + ": inf-res fails";
                break;
            }
        }
        if (!all_ok) break;
        for (const SubSpace& w : invariant_subspaces(lm.module)) {
            if (w.dim() == 0 || w.dim() == lm.module.mdim) continue;
            ExactnessReport rep = check_six_term(lie_ses_from_submodule(lm.module, w));
            ++six_terms;
            if (!rep.all_exact()) {
                all_ok = false;
                witness = lm.name + ": six-term fails";
            }
            break;  // one per module
        }
        if (!all_ok) break;
        TheoremReport rep = verify_lie_theorems(lm.module, lm.pmap);
        if (rep.hypotheses_hold()) ++vanishing;
        if (rep.conclusion_checked && !rep.conclusion_holds) {
            all_ok = false;
            witness = lm.name + ": structure theorems fail";
            break;
        }
    }
    // the handcrafted non-split six-term instance over a 1-dim ring
    if (all_ok) {
        LieRing g1 = abelian_lie(5, 1);
        FpMat nilp(5, 2, 2);
        nilp.at(0, 1) = 1;
        LieModule bmod = validate_lie_module(g1, 2, {nilp});
        FpMat z(5, 1, 1);
        LieModule amod = validate_lie_module(g1, 1, {z});
        LieModule cmod = validate_lie_module(g1, 1, {z});
        FpMat inj(5, 2, 1), surj(5, 1, 2);
        inj.at(0, 0) = 1;
        surj.at(0, 1) = 1;
        ExactnessReport rep = check_six_term(make_lie_ses(amod, bmod, cmod, inj, surj));
        ++six_terms;
        if (!rep.all_exact()) {
            all_ok = false;
            witness = "non-split six-term instance fails";
        }
    }
    r.seconds = seconds_since(t0);
    r.pass = all_ok && modules >= 10 && infres_pairs >= 10 && six_terms >= 3 && vanishing >= 3 &&
             r.seconds < r.budget_seconds;
    r.detail = std::to_string(modules) + " modules, " + std::to_string(infres_pairs) +
               " inf-res pairs, " + std::to_string(six_terms) + " six-term sequences, " +
               std::to_string(vanishing) + " vanishing instances" +
               (witness.empty() ? "" : "; " + witness);
    return r;
}

// --- criterion 14: restricted structures ----------------------------------------------

CriterionResult c14_restricted() {
    CriterionResult r{14, "restricted axioms and semisimplicity vs squarefree minimal polynomials",
                      false, "", 0, 120};
    auto t0 = Clock::now();
    bool all_ok = true;
    std::string witness;
    long long elements = 0;
    for (int p : {2, 3}) {
        LieRing gl2 = gl2_lie(p);
        std::vector<FpMat> basis;
        for (int i = 0; i < 4; ++i) {
            FpMat m(p, 2, 2);
            m.at(i / 2, i % 2) = 1;
            basis.push_back(m);
        }
        RestrictedStructure rs = validate_restricted(gl2, matrix_power_pmap(gl2, 4, basis));
        for (int code = 0; code < p * p * p * p; ++code) {
            FpMat mat(p, 2, 2);
            std::vector<int> coords(4);
            int rem = code;
            for (int i = 0; i < 4; ++i) {
                coords[i] = rem % p;
                rem /= p;
                mat.at(i / 2, i % 2) = coords[i];
            }
            bool alg = is_semisimple_element(rs, coords).semisimple;
            bool sq = poly_squarefree(min_poly(mat), p);
            ++elements;
            if (alg != sq) {
                all_ok = false;
                witness = "gl2(F" + std::to_string(p) + ") element code " + std::to_string(code);
                break;
            }
        }
        if (!all_ok) break;
    }
    r.seconds = seconds_since(t0);
    r.pass = all_ok && elements == 16 + 81 && r.seconds < r.budget_seconds;
    r.detail = std::to_string(elements) + " matrices cross-checked" +
               (witness.empty() ? "" : "; " + witness);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_battery(std::ostream* log) {
    std::vector<CriterionResult> out;
    auto push = [&](CriterionResult r) {
        if (log) {
            std::ostringstream line;
            line << "[" << (r.id < 10 ? " " : "") << r.id << "] " << r.name << " ... "
                 << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ", "
                 << static_cast<long long>(r.seconds * 1000) << " ms";
            if (r.budget_seconds > 0) line << ", target " << r.budget_seconds << " s";
            line << ")";
            (*log) << line.str() << std::endl;
        }
        out.push_back(std::move(r));
    };
    push(c1_complex_axiom());
    push(c2_oracle_equivalence());
    push(c3_h0_identity());
    push(c4_two_path());
    push(c5_vanishing());
    push(c6_inf_res());
    push(c7_les());
    push(c8_conjugation());
    push(c9_composition_factors());
    push(c10_schur());
    push(c11_frattini());
    push(c12_maschke());
    push(c13_lie_mirror());
    push(c14_restricted());
    return out;
}

}  // namespace cf
