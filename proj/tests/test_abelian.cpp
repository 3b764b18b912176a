#include "cohomoforge/abelian.hpp"

#include <doctest.h>

#include <random>

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

void check_snf(const Mat& m) {
    SNFResult s = smith_normal_form(m);
    CHECK(mat_mul(mat_mul(s.U, m), s.V) == s.D);
    CHECK(mat_mul(s.U, s.Uinv).is_identity());
    CHECK(mat_mul(s.V, s.Vinv).is_identity());
    Int du = det_bareiss(s.U), dv = det_bareiss(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    auto d = s.diag();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
        if (d[i] == 0) CHECK(d[i + 1] == 0);
    }
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
    SNFResult id2 = smith_normal_form(Mat::identity(2));
    CHECK(id2.D == Mat::identity(2));

    Mat m = mat2({{2, 4}, {6, 8}});
    SNFResult s = smith_normal_form(m);
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(1, 1) == 4);
    check_snf(m);

    SNFResult z = smith_normal_form(Mat::zero(3, 2));
    CHECK(z.D.is_zero());
    CHECK(z.rank == 0);
}

TEST_CASE("smith normal form round-trips on randomized matrices") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> entry(-1000000, 1000000);
    std::uniform_int_distribution<int> dim(1, 20);
    for (int trial = 0; trial < 12; ++trial) {
        Mat m(dim(rng), dim(rng));
        for (Int& v : m.a) v = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("hom validation checks well-definedness per generator") {
    auto z2 = inv_group({2});
    auto z4 = inv_group({4});
    CHECK_NOTHROW(validate_hom(z2, z4, mat2({{2}})));
    CHECK_THROWS_WITH_AS(validate_hom(z2, z4, mat2({{1}})), doctest::Contains("generator"), Error);
    try {
        validate_hom(z2, z4, mat2({{1}}));
    } catch (const Error& e) {
        CHECK(e.code == errc::not_well_defined);
        CHECK(e.witness == std::vector<long long>{0});
    }
    CHECK_NOTHROW(validate_hom(inv_group({3, 6}), z4, Mat::zero(1, 2)));
}

TEST_CASE("kernel and image presentations") {
    auto z4 = inv_group({4});
    KernelImage ki = kernel_image(validate_hom(z4, z4, mat2({{2}})));
    CHECK(ki.kernel.group.factors == std::vector<Int>{2});
    CHECK(ki.image.group.factors == std::vector<Int>{2});

    auto z6 = inv_group({6});
    KernelImage ident = kernel_image(identity_hom(z6));
    CHECK(ident.kernel.group.is_trivial());
    CHECK(ident.image.group.factors == std::vector<Int>{6});

    auto e33 = inv_group({3, 3});
    KernelImage zero = kernel_image(zero_hom(e33, inv_group({2})));
    CHECK(zero.kernel.group.factors == e33.factors);
    CHECK(zero.image.group.is_trivial());
}

TEST_CASE("kernel and image laws on a spread of homs") {
    std::mt19937_64 rng(7);
    std::vector<FiniteAbelianGroup> groups{inv_group({2}), inv_group({4}), inv_group({2, 4}),
                                           inv_group({3, 3}), inv_group({2, 6}), inv_group({8})};
    for (const auto& src : groups)
        for (const auto& dst : groups) {
            // random well-defined hom: entry (i,j) = (d_i / gcd) * c
            Mat m(dst.rank(), src.rank());
            for (int i = 0; i < dst.rank(); ++i)
                for (int j = 0; j < src.rank(); ++j) {
                    Int g = gcd_int(dst.factors[i], src.factors[j]);
                    Int step = dst.factors[i] / g;
                    m(i, j) = step * Int(static_cast<long long>(rng() % 7));
                }
            AbelianHom h = validate_hom(src, dst, m);
            KernelImage ki = kernel_image(h);
            CHECK(ki.kernel.group.order() * ki.image.group.order() == src.order());
            // embedding composed with h vanishes on the kernel
            CHECK(compose(h, ki.kernel.embedding).matrix.is_zero());
            CHECK(is_injective(ki.image.embedding));
        }
}

TEST_CASE("quotients recover the expected invariant factors") {
    auto z4 = inv_group({4});
    QuotientPresentation q1 = quotient_by(z4, {make_element(z4, {2})});
    CHECK(q1.quotient.factors == std::vector<Int>{2});

    auto v4 = inv_group({2, 2});
    QuotientPresentation q2 = quotient_by(v4, {make_element(v4, {1, 1})});
    CHECK(q2.quotient.factors == std::vector<Int>{2});

    auto a = inv_group({2, 6});
    QuotientPresentation q3 = quotient_by(a, {zero_element(a)});
    CHECK(q3.quotient.factors == a.factors);
}

TEST_CASE("the kernel of a quotient projection is the given subgroup") {
    auto a = inv_group({2, 4});
    std::vector<AbelianElement> gens{make_element(a, {1, 2})};
    QuotientPresentation q = quotient_by(a, gens);
    KernelImage ki = kernel_image(q.projection);
    std::vector<AbelianElement> expected = subgroup_closure_elements(a, gens);
    CHECK(ki.kernel.group.order() == Int(static_cast<long long>(expected.size())));
    for (const AbelianElement& x : expected) CHECK(subgroup_contains(ki.kernel.embedding, x));
}

TEST_CASE("sections of a quotient") {
    auto z4 = inv_group({4});
    QuotientPresentation q = quotient_by(z4, {make_element(z4, {2})});
    for (Int i = 0; i < 2; ++i) {
        AbelianElement cls = element_at(q.quotient, i);
        CHECK(apply(q.projection, q.section(cls)) == cls);
        AbelianElement least = q.least_preimage(cls);
        CHECK(apply(q.projection, least) == cls);
        // lexicographically least among both preimages
        AbelianElement other = add(least, make_element(z4, {2}));
        CHECK(least.coords <= other.coords);
    }
}

TEST_CASE("direct sums renormalize to invariant factors") {
    DirectSum s1 = direct_sum(inv_group({2}), inv_group({3}));
    CHECK(s1.sum.factors == std::vector<Int>{6});

    DirectSum s2 = direct_sum(inv_group({2}), inv_group({2}));
    CHECK(s2.sum.factors == std::vector<Int>{2, 2});

    auto a = inv_group({2, 4});
    DirectSum s3 = direct_sum(a, FiniteAbelianGroup::trivial());
    CHECK(s3.sum.factors == a.factors);

    // projection after injection is the identity on each side
    DirectSum s4 = direct_sum(inv_group({4}), inv_group({2, 6}));
    CHECK(compose(s4.proj_left, s4.inj_left).matrix.is_identity());
    CHECK(compose(s4.proj_right, s4.inj_right).matrix.is_identity());
    CHECK(compose(s4.proj_left, s4.inj_right).matrix.is_zero());
    CHECK(s4.sum.order() == Int(4) * Int(12));
    CHECK(s4.sum.is_canonical());
}

TEST_CASE("element enumeration is lexicographic in the coordinates") {
    auto a = inv_group({2, 4});
    std::vector<AbelianElement> elems = all_elements(a);
    CHECK(elems.size() == 8);
    for (size_t i = 0; i + 1 < elems.size(); ++i) CHECK(elems[i].coords < elems[i + 1].coords);
    for (Int i = 0; i < 8; ++i) CHECK(index_of(element_at(a, i)) == i);
}

TEST_CASE("solving inside subgroups") {
    auto a = inv_group({4, 4});
    Mat emb = mat2({{2, 0}, {0, 1}});
    auto sub = FiniteAbelianGroup::invariant_factors({Int(2), Int(4)});
    AbelianHom h = validate_hom(sub, a, emb);
    AbelianElement x = make_element(a, {2, 3});
    std::vector<Int> coords = coords_in_subgroup(h, x);
    CHECK(apply(h, AbelianElement{sub, coords}) == x);
    CHECK_FALSE(subgroup_contains(h, make_element(a, {1, 0})));
}
