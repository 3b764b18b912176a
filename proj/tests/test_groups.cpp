#include "cohomoforge/catalog.hpp"
#include "cohomoforge/groups.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cf;

namespace {

GroupPtr s3() { return from_permutations(3, {{1, 0, 2}, {1, 2, 0}}).group; }
GroupPtr s4() { return from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}).group; }

}  // namespace

TEST_CASE("group validation accepts the axioms and rejects with witnesses") {
    CHECK(validate_group({{0}})->order == 1);
    CHECK(validate_group({{0, 1}, {1, 0}})->order == 2);

    try {
        validate_group({{0, 1}, {1, 1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::missing_inverse);
        CHECK(e.witness == std::vector<long long>{1});
    }

    // a loop with identity and two-sided inverses that is not associative
    std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        validate_group(loop);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_associative);
        CHECK(e.witness.size() == 3);
    }

    try {
        validate_group({{1, 0}, {0, 1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::no_identity_at_zero);
    }

    try {
        validate_group({{0, 2}, {2, 0}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_closed);
    }
}

TEST_CASE("permutation closure with deterministic element order") {
    PermGroup g = from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    CHECK(g.group->order == 6);
    CHECK(g.element_perms[0] == std::vector<int>{0, 1, 2});

    PermGroup c4 = from_permutations(4, {{1, 2, 3, 0}});
    CHECK(c4.group->order == 4);
    CHECK(c4.group->element_order(1) == 4);

    PermGroup triv = from_permutations(1, {});
    CHECK(triv.group->order == 1);

    CHECK_THROWS_AS(from_permutations(4, {{1, 2, 3, 0}}, 3), Error);
    try {
        from_permutations(4, {{1, 2, 3, 0}}, 3);
    } catch (const Error& e) {
        CHECK(e.code == errc::order_cap_exceeded);
    }
}

TEST_CASE("centers") {
    CHECK(center(s3()).order() == 1);
    CHECK(center(cyclic_group(4)).order() == 4);
    CHECK(center(dicyclic_group(2)).order() == 2);  // Q8
}

TEST_CASE("lower central series and nilpotency class") {
    LowerCentralSeries z6 = lower_central_series(cyclic_group(6));
    CHECK(z6.nilpotency_class == 1);

    LowerCentralSeries q8 = lower_central_series(dicyclic_group(2));
    CHECK(q8.nilpotency_class == 2);

    LowerCentralSeries s3s = lower_central_series(s3());
    CHECK_FALSE(s3s.nilpotency_class.has_value());
    CHECK(s3s.terms.back().order() == 3);  // stabilizes at A3

    // terms are normal and descend
    for (const auto& g : {s4(), dicyclic_group(4)}) {
        LowerCentralSeries lcs = lower_central_series(g);
        for (size_t i = 0; i < lcs.terms.size(); ++i) {
            CHECK(is_normal(lcs.terms[i]));
            if (i > 0)
                CHECK(std::includes(lcs.terms[i - 1].elements.begin(), lcs.terms[i - 1].elements.end(),
                                    lcs.terms[i].elements.begin(), lcs.terms[i].elements.end()));
        }
    }
}

TEST_CASE("p-groups have a class and a nontrivial center") {
    for (const CatalogGroup& c : catalog_groups_up_to(16)) {
        int ord = c.group->order;
        bool two_power = (ord & (ord - 1)) == 0;
        bool three_power = ord == 3 || ord == 9;
        if (ord > 1 && (two_power || three_power)) {
            CHECK(lower_central_series(c.group).nilpotency_class.has_value());
            CHECK(center(c.group).order() > 1);
        }
    }
}

TEST_CASE("quotient groups with canonical coset order") {
    GroupPtr z4 = cyclic_group(4);
    QuotientGroup q = quotient_group(z4, subgroup_closure(z4, {2}));
    CHECK(q.group->order == 2);

    GroupPtr s = s3();
    int rot = -1;
    for (int g = 1; g < s->order; ++g)
        if (s->element_order(g) == 3) {
            rot = g;
            break;
        }
    Subgroup a3 = subgroup_closure(s, {rot});
    QuotientGroup q2 = quotient_group(s, a3);
    CHECK(q2.group->order == 2);
    CHECK(hom_is_surjective(q2.projection));
    CHECK(hom_kernel(q2.projection).elements == a3.elements);

    int refl = -1;
    for (int g = 1; g < s->order; ++g)
        if (s->element_order(g) == 2) {
            refl = g;
            break;
        }
    try {
        quotient_group(s, subgroup_closure(s, {refl}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_normal);
        CHECK(e.witness.size() == 2);
    }
}

TEST_CASE("normalizers") {
    GroupPtr s = s3();
    int rot = -1, refl = -1;
    for (int g = 1; g < s->order; ++g) {
        if (s->element_order(g) == 3 && rot < 0) rot = g;
        if (s->element_order(g) == 2 && refl < 0) refl = g;
    }
    CHECK(normalizer(s, subgroup_closure(s, {rot})).order() == 6);
    Subgroup r = subgroup_closure(s, {refl});
    CHECK(normalizer(s, r).elements == r.elements);
    CHECK(normalizer(s, trivial_subgroup(s)).order() == 6);
}

TEST_CASE("subgroup enumeration") {
    CHECK(enumerate_subgroups(cyclic_group(4)).size() == 3);
    CHECK(enumerate_subgroups(s3()).size() == 6);
    CHECK(enumerate_subgroups(trivial_group()).size() == 1);
    CHECK_THROWS_AS(enumerate_subgroups(s4(), 8), Error);

    // closed under conjugation
    GroupPtr g = s4();
    std::vector<Subgroup> subs = enumerate_subgroups(g);
    CHECK(subs.size() == 30);
    for (const Subgroup& h : subs)
        for (int x = 0; x < g->order; ++x) {
            Subgroup conj = conjugate_subgroup(h, x);
            bool found = false;
            for (const Subgroup& k : subs)
                if (k.elements == conj.elements) found = true;
            CHECK(found);
        }
}

TEST_CASE("inverse of a product reverses the factors") {
    for (const auto& g : {s3(), dicyclic_group(2), cyclic_group(8)})
        for (int a = 0; a < g->order; ++a)
            for (int b = 0; b < g->order; ++b)
                CHECK(g->inverse(g->mul(a, b)) == g->mul(g->inverse(b), g->inverse(a)));
}

TEST_CASE("catalog holds every group of order up to 16") {
    std::vector<int> expected = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
    std::vector<int> counts(17, 0);
    for (const CatalogGroup& c : catalog_groups_up_to(16)) ++counts[c.group->order];
    for (int ord = 1; ord <= 16; ++ord) CHECK(counts[ord] == expected[ord - 1]);
    // pairwise non-isomorphic
    auto groups = catalog_groups_up_to(16);
    for (size_t i = 0; i < groups.size(); ++i)
        for (size_t j = i + 1; j < groups.size(); ++j)
            if (groups[i].group->order == groups[j].group->order)
                CHECK_FALSE(are_isomorphic(groups[i].group, groups[j].group));
}

TEST_CASE("group isomorphism testing") {
    CHECK(are_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
    CHECK_FALSE(are_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
    CHECK(are_isomorphic(dicyclic_group(2), dicyclic_group(2)));
    CHECK_FALSE(are_isomorphic(dicyclic_group(2), cyclic_group(8)));
}

TEST_CASE("solvability") {
    CHECK(is_solvable(s4()));
    CHECK(is_solvable(s3()));
    CHECK(is_solvable(dicyclic_group(3)));
    CHECK(is_solvable(cyclic_group(12)));
}
