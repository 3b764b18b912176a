#include "cohomoforge/battery.hpp"
#include "cohomoforge/liering.hpp"

#include <doctest.h>

using namespace cf;

namespace {

FpMat fpm(int p, std::initializer_list<std::initializer_list<int>> rows) {
    FpMat m(p, static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (int v : r) m.at(i, j++) = ((v % p) + p) % p;
        ++i;
    }
    return m;
}

FpMat gl2_power_pmap(int p) {
    LieRing g = gl2_lie(p);
    FpMat out(p, 4, 4);
    for (int i = 0; i < 4; ++i) {
        FpMat m(p, 2, 2);
        m.at(i / 2, i % 2) = 1;
        FpMat pw = fp_pow(m, p);
        for (int c = 0; c < 4; ++c) out.at(c, i) = pw.a[static_cast<size_t>(c)];
    }
    return out;
}

}  // namespace

TEST_CASE("Lie ring validation") {
    CHECK_NOTHROW(abelian_lie(5, 2));
    CHECK_NOTHROW(heisenberg_lie(5));

    // [x,x] != 0 on a basis vector
    std::vector<int> bad(8, 0);
    bad[(0 * 2 + 0) * 2 + 1] = 1;  // [e1,e1] = e2
    try {
        lie_from_flat(3, 2, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == errc::not_alternating);
    }

    // sl2 with one corrupted sign fails Jacobi
    LieRing sl2 = sl2_lie(5);
    std::vector<int> corrupt = sl2.c;
    corrupt[(2 * 3 + 0) * 3 + 0] = 3;  // [h,e] = 3e instead of 2e, with [e,h] untouched
    try {
        lie_from_flat(5, 3, corrupt);
        CHECK(false);
    } catch (const Error& e) {
        CHECK((e.code == errc::jacobi_fails || e.code == errc::not_alternating));
    }
}

TEST_CASE("CE cohomology on pinned instances") {
    LieModule triv3 = trivial_lie_module(abelian_lie(3, 1), 1);
    CHECK(ce_cohomology(triv3, 1).dim == 1);
    CHECK(lie_h1_der(triv3).h1.dim == 1);

    LieModule heis = trivial_lie_module(heisenberg_lie(5), 1);
    CHECK(ce_cohomology(heis, 1).dim == 2);
    CHECK(lie_h1_der(heis).h1.dim == 2);

    // H^0 = A^g: nontrivial action kills it
    FpMat one(5, 1, 1);
    one.at(0, 0) = 1;
    LieModule inv = validate_lie_module(abelian_lie(5, 1), 1, {one});
    CHECK(lie_invariants(inv).dim() == 0);
    CHECK(ce_cohomology(inv, 0).dim == 0);
    CHECK(lie_h1_der(inv).h1.dim == 0);
}

TEST_CASE("CE complex axiom and two-path agreement across the catalog") {
    for (const NamedLieModule& lm : lie_module_catalog()) {
        for (int n = 0; n <= 2; ++n)
            CHECK(fp_mul(ce_differential(lm.module, n + 1), ce_differential(lm.module, n)).is_zero());
        CHECK(lie_h1_der(lm.module).h1.dim == ce_cohomology(lm.module, 1).dim);
    }
}

TEST_CASE("Lie inflation-restriction") {
    // the center of the Heisenberg ring acting trivially with A^g = 0
    LieRing h5 = heisenberg_lie(5);
    FpMat act1(5, 1, 1);
    act1.at(0, 0) = 1;
    FpMat zero1(5, 1, 1);
    LieModule m = validate_lie_module(h5, 1, {act1, zero1, zero1});
    SubSpace center = row_space(5, 3, fpm(5, {{0, 0, 1}}));
    CHECK(lie_faithful_reduction_applies(m, center));
    ExactnessReport rep = check_lie_inf_res(m, center);
    CHECK(rep.all_exact());
    LieInfRes data = lie_h1_maps(m, center);
    CHECK(data.fixed_classes.dim() == 0);
    CHECK(fp_rank(data.inflation) == data.h1_quotient.h1.dim);

    // degenerate ideals
    CHECK(check_lie_inf_res(m, row_space(5, 3, FpMat::identity(5, 3))).all_exact());
    CHECK(check_lie_inf_res(m, row_space(5, 3, FpMat(5, 0, 3))).all_exact());

    // non-ideals are rejected
    SubSpace not_ideal = row_space(5, 3, fpm(5, {{1, 0, 0}}));
    CHECK_THROWS_AS(check_lie_inf_res(m, not_ideal), Error);
}

TEST_CASE("six-term sequences") {
    // split: connecting map zero; nonsplit: nonzero
    LieRing g1 = abelian_lie(5, 1);
    FpMat nilp(5, 2, 2);
    nilp.at(0, 1) = 1;
    LieModule bmod = validate_lie_module(g1, 2, {nilp});
    FpMat z(5, 1, 1);
    LieModule amod = validate_lie_module(g1, 1, {z});
    LieSES ses = make_lie_ses(amod, bmod, amod, fpm(5, {{1}, {0}}), fpm(5, {{0, 1}}));
    CHECK(check_six_term(ses).all_exact());

    // A = 0: degenerate exactness
    LieModule empty = trivial_lie_module(g1, 0);
    LieSES degen = make_lie_ses(empty, amod, amod, FpMat(5, 1, 0), fpm(5, {{1}}));
    CHECK(check_six_term(degen).all_exact());

    // submodule-built sequences from the catalog
    int built = 0;
    for (const NamedLieModule& lm : lie_module_catalog()) {
        for (const SubSpace& w : invariant_subspaces(lm.module)) {
            if (w.dim() == 0 || w.dim() == lm.module.mdim) continue;
            CHECK(check_six_term(lie_ses_from_submodule(lm.module, w)).all_exact());
            ++built;
            break;
        }
        if (built >= 4) break;
    }
    CHECK(built >= 3);
}

TEST_CASE("restricted structures on gl2") {
    for (int p : {2, 3}) {
        LieRing gl2 = gl2_lie(p);
        CHECK_NOTHROW(validate_restricted(gl2, gl2_power_pmap(p)));
        // the zero p-map breaks axiom 1 on a non-nilpotent basis element
        try {
            validate_restricted(gl2, FpMat(p, 4, 4));
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code == errc::axiom1_fails);
        }
    }
}

TEST_CASE("Jacobson terms vanish on abelian rings") {
    LieRing a = abelian_lie(5, 3);
    for (const auto& s : jacobson_s_terms(a, {1, 2, 0}, {0, 4, 3}))
        for (int v : s) CHECK(v == 0);
}

TEST_CASE("semisimple elements of gl2") {
    LieRing gl2 = gl2_lie(2);
    RestrictedStructure rs = validate_restricted(gl2, gl2_power_pmap(2));
    CHECK(is_semisimple_element(rs, {1, 0, 0, 0}).semisimple);       // idempotent E11
    CHECK_FALSE(is_semisimple_element(rs, {0, 1, 0, 0}).semisimple); // nilpotent E12
    CHECK(is_semisimple_element(rs, {0, 1, 1, 1}).semisimple);       // companion of x^2+x+1

    // the certificate really expresses x through its iterates
    SemisimpleCertificate cert = is_semisimple_element(rs, {0, 1, 1, 1});
    std::vector<int> recon(4, 0);
    for (size_t i = 0; i < cert.iterates.size(); ++i)
        for (int c = 0; c < 4; ++c) recon[c] = (recon[c] + cert.combination[i] * cert.iterates[i][c]) % 2;
    CHECK(recon == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("semisimplicity matches squarefree minimal polynomials exhaustively") {
    for (int p : {2, 3}) {
        LieRing gl2 = gl2_lie(p);
        RestrictedStructure rs = validate_restricted(gl2, gl2_power_pmap(p));
        for (int code = 0; code < p * p * p * p; ++code) {
            std::vector<int> coords(4);
            FpMat mat(p, 2, 2);
            int rem = code;
            for (int i = 0; i < 4; ++i) {
                coords[i] = rem % p;
                rem /= p;
                mat.at(i / 2, i % 2) = coords[i];
            }
            CHECK(is_semisimple_element(rs, coords).semisimple == poly_squarefree(min_poly(mat), p));
        }
    }
}

TEST_CASE("tori") {
    LieRing gl2 = gl2_lie(3);
    RestrictedStructure rs = validate_restricted(gl2, gl2_power_pmap(3));
    CHECK(is_torus(rs, row_space(3, 4, fpm(3, {{1, 0, 0, 0}, {0, 0, 0, 1}}))));
    CHECK_FALSE(is_torus(rs, row_space(3, 4, fpm(3, {{0, 1, 0, 0}}))));
    CHECK(is_torus(rs, SubSpace{3, 4, FpMat(3, 0, 4)}));  // the zero subalgebra, vacuously
}

TEST_CASE("restricted axiom 1 is the matrix identity ad(x^[p]) = ad(x)^p") {
    for (int p : {2, 3}) {
        LieRing gl2 = gl2_lie(p);
        RestrictedStructure rs = validate_restricted(gl2, gl2_power_pmap(p));
        for (int i = 0; i < 4; ++i) {
            std::vector<int> img(4);
            for (int c = 0; c < 4; ++c) img[c] = rs.basis_images.at(c, i);
            CHECK(gl2.ad(img) == fp_pow(gl2.ad_basis(i), p));
        }
    }
}

TEST_CASE("Lie structure theorems") {
    // Heisenberg with invertible joint action and A^g = 0
    LieRing h5 = heisenberg_lie(5);
    FpMat one(5, 1, 1);
    one.at(0, 0) = 1;
    FpMat zero1(5, 1, 1);
    LieModule m = validate_lie_module(h5, 1, {one, zero1, zero1});
    TheoremReport rep = verify_lie_theorems(m);
    CHECK(rep.hypotheses_hold());
    CHECK(rep.passed());

    // solvable non-nilpotent ring: the vanishing hypotheses fail and are reported,
    // while the Frattini sum decomposition still holds
    LieModule sv = trivial_lie_module(solvable2_lie(3), 1);
    TheoremReport rep2 = verify_lie_theorems(sv);
    CHECK_FALSE(rep2.hypotheses_hold());
    CHECK(rep2.conclusion_holds);  // Frattini triples all pass

    // Cartan of an ideal inside a solvable 2-dim ring: sum decomposition
    bool frattini_counted = false;
    for (const auto& [k, v] : rep2.data)
        if (k == "frattini triples") {
            frattini_counted = true;
            CHECK(std::stoll(v) > 0);
        }
    CHECK(frattini_counted);
}

TEST_CASE("torus complements via the primary decomposition") {
    // 1-dim torus with distinct eigenvalues: two invariant complements found
    LieRing t1 = abelian_lie(5, 1);
    FpMat act(5, 2, 2);
    act.at(0, 0) = 1;
    act.at(1, 1) = 2;
    LieModule tm = validate_lie_module(t1, 2, {act});
    FpMat pm(5, 1, 1);
    pm.at(0, 0) = 1;
    RestrictedStructure rs = validate_restricted(t1, pm);
    TheoremReport rep = verify_torus_complements(rs, tm);
    CHECK(rep.passed());
    bool counted = false;
    for (const auto& [k, v] : rep.data)
        if (k == "irreducible submodules") {
            counted = true;
            CHECK(v == "2");
        }
    CHECK(counted);

    // irreducible 2-dim module over a torus: a single irreducible, complement 0
    FpMat comp(5, 2, 2);  // companion of x^2 + 2, irreducible over F5? x^2 = -2 = 3: 3 is not a
    comp.at(0, 1) = 3;    // square mod 5 (squares: 1,4): irreducible
    comp.at(1, 0) = 1;
    LieModule tm2 = validate_lie_module(t1, 2, {comp});
    // x^[5] must satisfy rho(x^[5]) = rho(x)^5 = a rho(x) + b for the certificate
    FpMat rho5 = fp_pow(comp, 5);
    // rho5 = c * comp for some scalar since comp generates a field; solve on the basis
    int scale = -1;
    for (int c2 = 0; c2 < 5 && scale < 0; ++c2) {
        FpMat t = comp;
        for (int& v : t.a) v = v * c2 % 5;
        if (t == rho5) scale = c2;
    }
    REQUIRE(scale >= 0);
    FpMat pm2(5, 1, 1);
    pm2.at(0, 0) = scale;
    RestrictedStructure rs2 = validate_restricted(t1, pm2);
    TheoremReport rep2 = verify_torus_complements(rs2, tm2);
    CHECK(rep2.passed());
}
