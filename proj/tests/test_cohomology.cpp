#include "cohomoforge/cohomology.hpp"
#include "cohomoforge/oracles.hpp"

#include <doctest.h>

using namespace cf;

namespace {

FiniteAbelianGroup inv_group(std::initializer_list<long long> fs) {
    std::vector<Int> v;
    for (long long f : fs) v.push_back(f);
    return FiniteAbelianGroup::invariant_factors(v);
}

Mat mat2(std::initializer_list<std::initializer_list<long long>> rows) {
    Mat m(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (long long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

GModule z3_on_z7() {
    return validate_module(cyclic_group(3), inv_group({7}),
                           std::vector<Mat>{mat2({{1}}), mat2({{2}}), mat2({{4}})});
}

GModule z2_trivial_z2() { return trivial_module(cyclic_group(2), inv_group({2})); }

GModule z2_negating_z5() {
    return validate_module(cyclic_group(2), inv_group({5}),
                           std::vector<Mat>{mat2({{1}}), mat2({{4}})});
}

GModule z4_rot() {
    Mat j = mat2({{0, -1}, {1, 0}});
    return validate_module(cyclic_group(4), inv_group({3, 3}),
                           std::vector<Mat>{Mat::identity(2), j, mat_mul(j, j), mat_mul(mat_mul(j, j), j)});
}

// the non-split coefficient sequence 0 -> Z/2 -> Z/4 -> Z/2 -> 0 over Z/2
ShortExactSequence z4_extension(bool negate) {
    GroupPtr g = cyclic_group(2);
    Mat act = negate ? mat2({{3}}) : mat2({{1}});
    GModule b = validate_module(g, inv_group({4}), std::vector<Mat>{mat2({{1}}), act});
    GModule a = trivial_module(g, inv_group({2}));
    GModule c = trivial_module(g, inv_group({2}));
    AbelianHom inj = validate_hom(a.coeffs, b.coeffs, mat2({{2}}));
    AbelianHom surj = validate_hom(b.coeffs, c.coeffs, mat2({{1}}));
    return make_ses(a, b, c, inj, surj);
}

}  // namespace

TEST_CASE("the degree-0 differential is g.a - a") {
    GModule m = z2_negating_z5();
    Cochain a = cochain_from_flat(m, 0, {3});
    Cochain d = apply_differential(m, a);
    CHECK(d.values[0].is_zero());                       // at the identity
    CHECK(d.values[1] == make_element(m.coeffs, {1}));  // 4*3 - 3 = 9 = 4 mod 5 ... -3+... = 1? 12-3=9=4
}

TEST_CASE("the degree-0 differential values, pinned by hand") {
    // g.a - a with a = 3 under negation mod 5: (-3) - 3 = -6 = 4 (mod 5)
    GModule m = z2_negating_z5();
    Cochain d = apply_differential(m, cochain_from_flat(m, 0, {3}));
    CHECK(d.values[1] == make_element(m.coeffs, {4}));
}

TEST_CASE("derivations are killed by the degree-1 differential") {
    GModule m = z2_trivial_z2();
    // f(0) = 0, f(1) = 1 is a derivation for the trivial action
    Cochain f = cochain_from_flat(m, 1, {0, 1});
    CHECK(cochain_is_zero(apply_differential(m, f)));
}

TEST_CASE("d composed with d vanishes as a matrix product") {
    CohomologyOptions opts;
    opts.degree_cap = 3;
    opts.size_budget = 20000;
    for (const GModule& m : {z3_on_z7(), z2_trivial_z2(), z4_rot(), z2_negating_z5()})
        for (int n = 0; n <= 2; ++n)
            CHECK(compose(differential(m, n + 1, opts), differential(m, n, opts)).matrix.is_zero());
}

TEST_CASE("cohomology groups against pinned and oracle values") {
    CohomologyOptions opts;
    opts.size_budget = 20000;
    CHECK(cohomology_group(z2_negating_z5(), 0, opts).group.is_trivial());

    CohomologyGroup h1 = cohomology_group(z2_trivial_z2(), 1, opts);
    CHECK(h1.group.factors == std::vector<Int>{2});
    CHECK(oracle::brute_h1(z2_trivial_z2()) == std::vector<Int>{2});

    CohomologyGroup h2 = cohomology_group(z2_trivial_z2(), 2, opts);
    CHECK(h2.group.factors == std::vector<Int>{2});
    CHECK(oracle::brute_h2(z2_trivial_z2()) == std::vector<Int>{2});

    // representatives are honest cocycles generating the group
    for (const Cochain& rep : h2.representatives)
        CHECK(cochain_is_zero(apply_differential(z2_trivial_z2(), rep)));

    CHECK(cohomology_group(z3_on_z7(), 1, opts).group.is_trivial());
    CHECK(oracle::brute_h1(z3_on_z7()).empty());
    CHECK(oracle::brute_h2(z3_on_z7()).empty());
    CHECK(cohomology_group(z3_on_z7(), 2, opts).group.is_trivial());
}

TEST_CASE("degree and size gates") {
    CohomologyOptions opts;  // defaults: degree cap 2, budget 6000
    CHECK_THROWS_AS(cohomology_group(z2_trivial_z2(), 3, opts), Error);
    try {
        cohomology_group(z2_trivial_z2(), 3, opts);
    } catch (const Error& e) {
        CHECK(e.code == errc::degree_cap_exceeded);
    }
    opts.degree_cap = 3;
    CHECK_NOTHROW(cohomology_group(z2_trivial_z2(), 3, opts));
    opts.degree_cap = 9;  // the hard cap still applies
    CHECK_THROWS_AS(differential(z2_trivial_z2(), 4, opts), Error);

    CohomologyOptions tiny;
    tiny.size_budget = 4;
    try {
        cohomology_group(z4_rot(), 2, tiny);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::size_budget_exceeded);
    }
}

TEST_CASE("h1 via derivations") {
    H1Result a = h1_der(z3_on_z7());
    CHECK(a.h1.group.is_trivial());
    CHECK(a.der.group.order() == 7);
    CHECK(a.ider.group.order() == 7);

    H1Result b = h1_der(z2_trivial_z2());
    CHECK(b.h1.group.factors == std::vector<Int>{2});
    CHECK(b.der.group.order() == 2);
    CHECK(b.ider.group.order() == 1);

    H1Result c = h1_der(trivial_module(cyclic_group(4), FiniteAbelianGroup::trivial()));
    CHECK(c.h1.group.is_trivial());
}

TEST_CASE("two-path agreement with compatible representatives") {
    CohomologyOptions opts;
    opts.size_budget = 20000;
    for (const GModule& m : {z2_trivial_z2(), z4_rot(), z2_negating_z5(),
                             trivial_module(cyclic_group(4), inv_group({2, 4}))}) {
        H1Result der = h1_der(m);
        CohomologyGroup coch = cohomology_group(m, 1, opts);
        CHECK(der.h1.group.factors == coch.group.factors);
        // each derivation-route representative classifies consistently and
        // differs from the matching cochain-route combination by a coboundary
        for (int j = 0; j < der.h1.group.rank(); ++j) {
            std::vector<Int> cls = coch.classifier.class_of_flat(flat_of(der.h1.representatives[j]));
            Cochain combo = zero_cochain(m, 1);
            for (int i = 0; i < coch.group.rank(); ++i)
                combo = cochain_add(combo, cochain_scale(cls[i], coch.representatives[i]));
            CHECK(der.is_inner(cochain_sub(combo, der.h1.representatives[j])));
        }
    }
}

TEST_CASE("restriction to the whole group is the identity on H1") {
    GModule m = z2_trivial_z2();
    InfResData data = h1_maps(m, whole_subgroup(m.group));
    CHECK(data.restriction.matrix.is_identity());
    // inflation through the trivial quotient? use H = 1 instead: iso
    InfResData triv = h1_maps(m, trivial_subgroup(m.group));
    KernelImage ki = kernel_image(triv.inflation);
    CHECK(ki.kernel.group.is_trivial());
    CHECK(ki.image.group.order() == triv.h1_g.h1.group.order());
}

TEST_CASE("the conjugation action fixes every class when H = G") {
    GModule m = z2_trivial_z2();
    FixedClasses fixed = conj_action_fixed(m, whole_subgroup(m.group));
    CHECK(fixed.group.order() == fixed.h1_h.h1.group.order());
}

TEST_CASE("faithful-reduction configurations") {
    // Z/4 acting through Z/2 by negation on Z/5; H = the kernel
    GroupPtr z4 = cyclic_group(4);
    GModule m = validate_module(
        z4, inv_group({5}), std::vector<Mat>{mat2({{1}}), mat2({{4}}), mat2({{1}}), mat2({{4}})});
    Subgroup h = subgroup_closure(z4, {2});
    CHECK(lemma_faithful_reduction_applies(m, h));
    InfResData data = h1_maps(m, h);
    KernelImage ki = kernel_image(data.inflation);
    CHECK(ki.kernel.group.is_trivial());
    CHECK(ki.image.group.order() == data.h1_g.h1.group.order());
    CHECK(conj_action_fixed(m, h).group.is_trivial());
    CHECK(conj_action_fixed(m, trivial_subgroup(z4)).group.is_trivial());
}

TEST_CASE("inflation-restriction exactness with the pinned orders") {
    // G = Z/4 trivial on Z/2, H = 2Z/4: all three H1 groups have order 2
    GModule m = trivial_module(cyclic_group(4), inv_group({2}));
    Subgroup h = subgroup_closure(m.group, {2});
    InfResData data = h1_maps(m, h);
    CHECK(data.h1_quotient.h1.group.order() == 2);
    CHECK(data.h1_g.h1.group.order() == 2);
    CHECK(data.h1_h.h1.group.order() == 2);
    ExactnessReport rep = check_inf_res_exact(m, h);
    CHECK(rep.all_exact());
}

TEST_CASE("connecting maps") {
    // split sequence: delta = 0
    GroupPtr g = cyclic_group(2);
    GModule a = trivial_module(g, inv_group({2}));
    GModule c = validate_module(g, inv_group({3}), std::vector<Mat>{mat2({{1}}), mat2({{2}})});
    DirectSum ds = direct_sum(a.coeffs, c.coeffs);
    std::vector<Mat> bact;
    for (int x = 0; x < 2; ++x) {
        // block action through the canonical injections
        Mat m1 = mat_mul(ds.inj_left.matrix, mat_mul(a.action[x].matrix, ds.proj_left.matrix));
        Mat m2 = mat_mul(ds.inj_right.matrix, mat_mul(c.action[x].matrix, ds.proj_right.matrix));
        bact.push_back(mat_add(m1, m2));
    }
    GModule b = validate_module(g, ds.sum, bact);
    ShortExactSequence split = make_ses(a, b, c, ds.inj_left, ds.proj_right);
    ConnectingMap delta = connecting_map(split);
    CHECK(delta.map.matrix.is_zero());

    // the non-split Z/4 extension has a nonzero connecting map
    ShortExactSequence ext = z4_extension(false);
    ConnectingMap d2 = connecting_map(ext);
    CHECK_FALSE(d2.map.matrix.is_zero());

    // C^G = 0 forces the zero map on an empty domain
    ShortExactSequence neg = z4_extension(true);
    ConnectingMap d3 = connecting_map(neg);
    CHECK(d3.domain.presentation.is_trivial());

    // independence from the set-theoretic section
    for (unsigned long long seed : {1ull, 2ull, 3ull})
        CHECK(connecting_map(ext, randomized_section(ext.surj, seed)).map.matrix == d2.map.matrix);
}

TEST_CASE("six-term exactness on the Z/4 extension") {
    CohomologyOptions opts;
    opts.degree_cap = 2;
    opts.size_budget = 20000;
    ExactnessReport rep = check_long_exact(z4_extension(false), 1, opts);
    CHECK(rep.nodes.size() == 6);
    CHECK(rep.all_exact());
}

TEST_CASE("B^G surjects onto C^G whenever H1 of the kernel vanishes") {
    // kernel with H^1 = 0 by the vanishing theorem: Z/3 on Z/7 inside Z/7 x Z/3-quotient?
    // direct construction: A = Z/7 with *2, B = A + C, C = Z/3 trivial? use submodule route
    GroupPtr g = cyclic_group(3);
    GModule a = z3_on_z7();
    GModule c = trivial_module(g, inv_group({3}));
    DirectSum ds = direct_sum(a.coeffs, c.coeffs);
    std::vector<Mat> bact;
    for (int x = 0; x < 3; ++x) {
        Mat m1 = mat_mul(ds.inj_left.matrix, mat_mul(a.action[x].matrix, ds.proj_left.matrix));
        Mat m2 = mat_mul(ds.inj_right.matrix, mat_mul(c.action[x].matrix, ds.proj_right.matrix));
        bact.push_back(mat_add(m1, m2));
    }
    GModule b = validate_module(g, ds.sum, bact);
    ShortExactSequence s = make_ses(a, b, c, ds.inj_left, ds.proj_right);
    CHECK(h1_der(a).h1.group.is_trivial());
    AbelianHom on_h0 = [&] {
        Submodule ib = invariants(b), ic = invariants(c);
        Mat cols(ic.presentation.rank(), ib.presentation.rank());
        for (int j = 0; j < ib.presentation.rank(); ++j) {
            AbelianElement v = apply(s.surj, make_element(b.coeffs, column_of(ib.embedding.matrix, j)));
            std::vector<Int> cc = coords_in_subgroup(ic.embedding, v);
            for (int i = 0; i < cols.rows; ++i) cols(i, j) = cc[i];
        }
        return hom_unchecked(ib.presentation, ic.presentation, cols);
    }();
    CHECK(is_surjective(on_h0));
}

TEST_CASE("the conjugation action is trivial on H1, exhaustively") {
    for (const GModule& m : {z2_trivial_z2(), z3_on_z7(), z4_rot(),
                             trivial_module(cyclic_group(8), inv_group({2, 4}))})
        CHECK(conj_acts_trivially_on_h1(m));
}
