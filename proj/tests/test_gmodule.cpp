#include "cohomoforge/catalog.hpp"
#include "cohomoforge/gmodule.hpp"

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

GModule z3_on_z7_by_2() {
    return validate_module(cyclic_group(3), inv_group({7}),
                           std::vector<Mat>{mat2({{1}}), mat2({{2}}), mat2({{4}})});
}

GModule z4_rotating_e33() {
    Mat j = mat2({{0, -1}, {1, 0}});
    return validate_module(cyclic_group(4), inv_group({3, 3}),
                           std::vector<Mat>{Mat::identity(2), j, mat_mul(j, j), mat_mul(mat_mul(j, j), j)});
}

GModule z2_negating(const FiniteAbelianGroup& a) {
    Mat neg = mat_neg(Mat::identity(a.rank()));
    return validate_module(cyclic_group(2), a, std::vector<Mat>{Mat::identity(a.rank()), neg});
}

}  // namespace

TEST_CASE("module validation") {
    CHECK_NOTHROW(trivial_module(cyclic_group(5), inv_group({2, 4})));
    CHECK_NOTHROW(z3_on_z7_by_2());

    try {  // multiplication by 2 on Z/4 has kernel Z/2
        validate_module(cyclic_group(2), inv_group({4}),
                        std::vector<Mat>{mat2({{1}}), mat2({{2}})});
        CHECK(false);
    } catch (const Error& e) {
        // the action is not even multiplicative: rho(g)^2 = 4 != 1; either
        // rejection names the offending element(s)
        CHECK((e.code == errc::not_automorphism || e.code == errc::not_homomorphic));
    }
    try {  // rho(g) = 3 on Z/9: automorphism squares to 0, kernel is the issue at g*g
        validate_module(cyclic_group(2), inv_group({9}),
                        std::vector<Mat>{mat2({{1}}), mat2({{3}})});
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.code == errc::not_automorphism || e.code == errc::not_homomorphic));
    }
    try {
        Mat not_id = mat2({{2}});
        std::vector<Mat> act{not_id, not_id};
        validate_module(cyclic_group(2), inv_group({5}), act);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_identity_at_e);
    }
}

TEST_CASE("invariants") {
    GModule triv = trivial_module(cyclic_group(4), inv_group({2, 4}));
    CHECK(invariants(triv).order() == 8);

    GModule neg = z2_negating(inv_group({5}));
    CHECK(invariants(neg).is_trivial());

    CHECK(invariants(z3_on_z7_by_2()).is_trivial());
}

TEST_CASE("spin closure") {
    GModule rot = z4_rotating_e33();
    CHECK(spin_submodule(rot, {zero_element(rot.coeffs)}).is_trivial());
    CHECK(spin_submodule(rot, {make_element(rot.coeffs, {1, 0})}).order() == 9);

    GModule neg = z2_negating(inv_group({3, 3}));
    Submodule line = spin_submodule(neg, {make_element(neg.coeffs, {1, 0})});
    CHECK(line.order() == 3);
    CHECK(submodule_contains(line, make_element(neg.coeffs, {2, 0})));
    CHECK_FALSE(submodule_contains(line, make_element(neg.coeffs, {0, 1})));
}

TEST_CASE("spin output is the minimal invariant subgroup containing the seeds") {
    GModule neg = z2_negating(inv_group({3, 3}));
    AbelianElement seed = make_element(neg.coeffs, {1, 2});
    Submodule s = spin_submodule(neg, {seed});
    for (const Submodule& t : submodule_lattice(neg))
        if (submodule_contains(t, seed)) CHECK(t.order() >= s.order());
}

TEST_CASE("composition series") {
    CHECK(composition_series(z4_rotating_e33()).length() == 1);
    CHECK(is_irreducible(z4_rotating_e33()));

    GModule triv = trivial_module(cyclic_group(2), inv_group({2, 2}));
    CHECK(composition_series(triv).length() == 2);

    GModule empty = trivial_module(cyclic_group(2), FiniteAbelianGroup::trivial());
    CHECK(composition_series(empty).length() == 0);

    // Jordan-Hoelder: the length is independent of the seed order
    for (const GModule& m : {z4_rotating_e33(), trivial_module(cyclic_group(2), inv_group({2, 4})),
                             z2_negating(inv_group({3, 3}))})
        CHECK(composition_series(m, +1).length() == composition_series(m, -1).length());

    // factors are irreducible and the chain ascends strictly
    CompositionSeries cs = composition_series(trivial_module(cyclic_group(3), inv_group({2, 2, 2})));
    CHECK(cs.length() == 3);
    for (size_t i = 1; i < cs.chain.size(); ++i) CHECK(cs.chain[i].order() > cs.chain[i - 1].order());
}

TEST_CASE("derived modules") {
    GModule rot = z4_rotating_e33();

    RestrictedModule r = restrict_module(rot, trivial_subgroup(rot.group));
    CHECK(r.module.group->order == 1);
    CHECK(r.module.coeffs == rot.coeffs);

    // inflation in the faithful-reduction shape: H acts trivially, so A^H = A
    GModule via_quotient = [] {
        GroupPtr z4 = cyclic_group(4);
        Mat neg = mat2({{-1}});
        return validate_module(z4, inv_group({5}),
                               std::vector<Mat>{mat2({{1}}), neg, mat2({{1}}), neg});
    }();
    Subgroup h = subgroup_closure(via_quotient.group, {2});
    InflatedModule infl = inflate_module(via_quotient, h);
    CHECK(infl.module.group->order == 2);
    CHECK(infl.module.coeffs.order() == 5);
    CHECK(infl.fixed_points.order() == 5);
    CHECK(infl.module.action[1].matrix == mat2({{4}}));

    QuotientModule q = quotient_module(rot, whole_submodule(rot));
    CHECK(q.module.coeffs.is_trivial());

    GModule neg = z2_negating(inv_group({3, 3}));
    Submodule line = spin_submodule(neg, {make_element(neg.coeffs, {1, 0})});
    SubquotientModule sub = sub_module_on(neg, line);
    CHECK(sub.module.coeffs.order() == 3);
    CHECK(sub.module.action[1].matrix == mat2({{2}}));

    DerivedModule d = derive_module(neg, QuotientBy{line});
    CHECK(d.module.coeffs.order() == 3);
    CHECK(d.coeff_map.has_value());

    // quotient by a non-invariant subgroup is rejected
    GModule swap_mod = validate_module(
        cyclic_group(2), inv_group({3, 3}),
        std::vector<Mat>{Mat::identity(2), mat2({{0, 1}, {1, 0}})});
    Submodule bad{swap_mod, {make_element(swap_mod.coeffs, {1, 0})}, inv_group({3}),
                  hom_unchecked(inv_group({3}), swap_mod.coeffs, mat2({{1}, {0}}))};
    CHECK_THROWS_AS(quotient_module(swap_mod, bad), Error);
}

TEST_CASE("action ring and centralizer") {
    ActionRingReport rot = action_ring_centralizer(z4_rotating_e33());
    CHECK(rot.centralizer_order == 9);
    CHECK(rot.centralizer_is_field);
    CHECK(rot.ring_elements.size() == 9);

    ActionRingReport fp = action_ring_centralizer(trivial_module(cyclic_group(3), inv_group({5})));
    CHECK(fp.centralizer_order == 5);
    CHECK(fp.centralizer_is_field);

    ActionRingReport red = action_ring_centralizer(trivial_module(cyclic_group(2), inv_group({2, 2})));
    CHECK(red.centralizer_order == 16);
    CHECK_FALSE(red.centralizer_is_field);

    ActionRingOptions tight;
    tight.coeff_cap = 4;
    CHECK_THROWS_AS(action_ring_centralizer(z4_rotating_e33(), tight), Error);
}

TEST_CASE("Schur property across the catalog sample") {
    ModuleFamilyOptions fam;
    fam.max_group_order = 8;
    fam.max_coeff_order = 25;
    fam.include_trivial_actions = false;
    int checked = 0;
    for_each_family_module(fam, [&](const CatalogModule& cm) {
        if (checked >= 12) return false;
        if (cm.module.coeffs.order() > 81) return true;
        if (composition_series(cm.module).length() != 1) return true;
        ++checked;
        CHECK(action_ring_centralizer(cm.module).centralizer_is_field);
        return true;
    });
    CHECK(checked >= 5);
}
