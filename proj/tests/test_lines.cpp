#include "eqlines/lines.hpp"

#include "doctest.h"
#include "eqlines/errors.hpp"
#include "test_support.hpp"

using namespace eqlines;
using namespace eqlines::testing;

namespace {

Scalar S(const std::string& text) { return Scalar(C(text)); }

// order 2: [[1, i], [1, -i]]
HadamardMatrix order2_example() {
    return certify_hadamard(Matrix(2, 2, Backend::exact, {S("1"), S("i"), S("1"), S("-i")}));
}

// order 3: [[1,1,1],[1,w,w2],[w,1,w2]]
HadamardMatrix order3_example() {
    auto w = [](long k) { return Scalar(Z(3, k)); };
    return certify_hadamard(Matrix(3, 3, Backend::exact,
                                   {w(0), w(0), w(0), w(0), w(1), w(2), w(1), w(0), w(2)}));
}

bool vec_equals(const Vector& x, std::initializer_list<const char*> expected) {
    if (x.dim() != expected.size()) return false;
    std::size_t k = 0;
    for (const char* e : expected)
        if (!(x[k++].exact() == C(e))) return false;
    return true;
}

}  // namespace

TEST_CASE("construction in dimension 2") {
    LineSet lines = construct_hv(order2_example(), S("(1+sqrt(3))*(1+i)/2"));
    REQUIRE(lines.vectors.size() == 4);
    const char* v = "(1+sqrt(3))*(1+i)/2";
    CHECK(vec_equals(lines.vectors[0].vec, {v, "i"}));
    CHECK(vec_equals(lines.vectors[1].vec, {v, "-i"}));
    CHECK(lines.vectors[2].vec[1].exact() == C(v) * C("i"));
    CHECK(lines.vectors[3].vec[1].exact() == -(C(v) * C("i")));
    CHECK(lines.vectors[2].vec[0].exact() == Q(1));
    // set-major ordering contract
    CHECK(lines.vectors[2].prov.set_index == 1);
    CHECK(lines.vectors[2].prov.row_index == 0);
    // equal norms: |v|^2 + d - 1
    Cyclotomic expected_norm = C(v).abs_squared() + Q(1);
    for (const auto& lv : lines.vectors)
        CHECK(inner_product(lv.vec, lv.vec).exact() == expected_norm);
}

TEST_CASE("construction in dimension 3") {
    LineSet lines = construct_hv(order3_example(), S("-2"));
    REQUIRE(lines.vectors.size() == 9);
    CHECK(vec_equals(lines.vectors[0].vec, {"-2", "1", "1"}));
    CHECK(vec_equals(lines.vectors[1].vec, {"-2", "zeta(3)", "zeta(3)^2"}));
    CHECK(vec_equals(lines.vectors[2].vec, {"-2*zeta(3)", "1", "zeta(3)^2"}));
    CHECK(vec_equals(lines.vectors[3].vec, {"1", "-2", "1"}));
    CHECK(vec_equals(lines.vectors[4].vec, {"1", "-2*zeta(3)", "zeta(3)^2"}));
    CHECK(vec_equals(lines.vectors[6].vec, {"1", "1", "-2"}));
    CHECK(vec_equals(lines.vectors[8].vec, {"zeta(3)", "1", "-2*zeta(3)^2"}));
}

TEST_CASE("construction in dimension 8 follows the block listing") {
    LineSet lines = construct_hv(sylvester(3), S("-1+2*i"));
    REQUIRE(lines.vectors.size() == 64);
    Cyclotomic v = C("-1+2*i");
    // block j, row r: row r of H with coordinate j scaled
    CHECK(lines.vectors[0].vec[0].exact() == v);
    CHECK(lines.vectors[1 * 8 + 1].vec[1].exact() == -v);   // (1,-v,1,-1,...)
    CHECK(lines.vectors[1 * 8 + 1].vec[0].exact() == Q(1));
    CHECK(lines.vectors[2 * 8 + 2].vec[2].exact() == -v);   // third block, third row
    CHECK(lines.vectors[7 * 8 + 7].vec[7].exact() == -v);
    CHECK(lines.vectors[7 * 8 + 7].vec[6].exact() == Q(1));
    for (const auto& lv : lines.vectors)
        CHECK(inner_product(lv.vec, lv.vec).exact() == Q(12));
}

TEST_CASE("pair classification") {
    CHECK(classify_pair({0, 0}, {0, 1}) == PairClass::within_set);
    CHECK(classify_pair({0, 0}, {1, 0}) == PairClass::same_row_across_sets);
    CHECK(classify_pair({0, 0}, {1, 1}) == PairClass::distinct_rows_across_sets);
    CHECK_THROWS_AS(classify_pair({2, 3}, {2, 3}), Error);
}

TEST_CASE("inner product form frozen magnitudes") {
    Scalar v = S("-1+2*i");
    HadamardMatrix s8 = sylvester(3);
    // type i: |a^2+b^2-1|^2 = (1+4-1)^2 = 16
    InnerProductForm fi = inner_product_form(s8, {0, 0}, {0, 1});
    CHECK(fi.evaluate(v).abs_squared().exact() == Q(16));
    // type ii: |2a+d-2|^2 = (-2+6)^2 = 16
    InnerProductForm fii = inner_product_form(s8, {0, 0}, {1, 0});
    CHECK(fii.evaluate(v).abs_squared().exact() == Q(16));
    CHECK(fii.c0.exact() == Q(6));
    CHECK(fii.cv.exact() == Q(1));
    CHECK(fii.cvbar.exact() == Q(1));
    CHECK(fii.cvv.exact().is_zero());
    // type iii on fourier(3) at v = -2: |a-1±b*sqrt(3)| = 3
    InnerProductForm fiii = inner_product_form(fourier(3), {0, 0}, {1, 1});
    CHECK(fiii.evaluate(S("-2")).abs_squared().exact() == Q(9));
    CHECK(fiii.cvv.exact().is_zero());
    CHECK(fiii.cv.exact().abs_squared() == Q(1));
    CHECK(fiii.cvbar.exact().abs_squared() == Q(1));
}

TEST_CASE("form agrees with concrete inner products") {
    Rng rng(5150);
    for (const auto& h : {order3_example(), fourier(4), sylvester(2)}) {
        auto sample = rng.v_sample();
        LineSet lines = construct_hv(h, Scalar(sample.v));
        for (std::size_t p = 0; p < lines.vectors.size(); ++p) {
            for (std::size_t q = 0; q < lines.vectors.size(); ++q) {
                if (p == q) continue;
                InnerProductForm form = inner_product_form(h, lines.vectors[p].prov, lines.vectors[q].prov);
                Scalar direct = inner_product(lines.vectors[p].vec, lines.vectors[q].vec);
                CHECK(form.evaluate(Scalar(sample.v)).equals(direct));
            }
        }
    }
}

TEST_CASE("closed forms for type i and ii magnitudes") {
    Rng rng(99);
    for (const auto& h : {fourier(2), fourier(3), sylvester(3)}) {
        for (int trial = 0; trial < 8; ++trial) {
            auto [v, a, b] = rng.v_sample();
            Cyclotomic type_i = (a * a + b * b - Q(1)) * (a * a + b * b - Q(1));
            Cyclotomic type_ii = (Q(2) * a + Q(static_cast<long>(h.order)) - Q(2));
            type_ii = type_ii * type_ii;
            LineSet lines = construct_hv(h, Scalar(v));
            for (std::size_t p = 0; p < lines.vectors.size(); ++p) {
                for (std::size_t q = p + 1; q < lines.vectors.size(); ++q) {
                    PairClass cls = classify_pair(lines.vectors[p].prov, lines.vectors[q].prov);
                    if (cls == PairClass::distinct_rows_across_sets) continue;
                    Cyclotomic m2 = inner_product(lines.vectors[p].vec, lines.vectors[q].vec)
                                        .abs_squared().exact();
                    CHECK(m2 == (cls == PairClass::within_set ? type_i : type_ii));
                }
            }
        }
    }
}

TEST_CASE("verification of the three reference sets") {
    {
        LineSet lines = construct_hv(order2_example(), S("(1+sqrt(3))*(1+i)/2"));
        EquiangularityReport rep = verify_equiangular(lines);
        CHECK(rep.verdict);
        CHECK(rep.distinct_lines);
        CHECK(rep.sic_ratio->exact() == Q(1, 3));
        CHECK(rep.common_magnitude_squared->exact() == Q(4) + Q(2) * Cyclotomic::sqrt_integer(3));
    }
    {
        LineSet lines = construct_hv(order3_example(), S("-2"));
        EquiangularityReport rep = verify_equiangular(lines);
        CHECK(rep.verdict);
        CHECK(rep.sic_ratio->exact() == Q(1, 4));
        CHECK(rep.common_magnitude_squared->exact() == Q(9));
    }
    {
        LineSet lines = construct_hv(sylvester(3), S("-1+2*i"));
        EquiangularityReport rep = verify_equiangular(lines);
        CHECK(rep.verdict);
        CHECK(rep.sic_ratio->exact() == Q(1, 9));
        CHECK(rep.common_magnitude_squared->exact() == Q(16));
    }
}

TEST_CASE("v = 0 is a genuine solution in dimension 3 and v = 1 never is") {
    EquiangularityReport rep0 = verify_equiangular(construct_hv(order3_example(), S("0")));
    CHECK(rep0.verdict);
    CHECK(rep0.common_magnitude_squared->exact() == Q(1));

    EquiangularityReport rep1 = verify_equiangular(construct_hv(sylvester(3), S("1")));
    CHECK_FALSE(rep1.verdict);
    CHECK_FALSE(rep1.violations.empty());
    CHECK_FALSE(rep1.distinct_lines);  // H(1) repeats every row d times
}

TEST_CASE("verification catches a perturbed entry") {
    LineSet lines = construct_hv(order3_example(), S("-2"));
    lines.vectors[4].vec[2] = Scalar(C("zeta(3)^2") + Q(1));
    EquiangularityReport rep = verify_equiangular(lines);
    CHECK_FALSE(rep.verdict);
    bool touches4 = false;
    for (const auto& viol : rep.violations)
        touches4 = touches4 || viol.first == 4 || viol.second == 4;
    CHECK(touches4);
}

TEST_CASE("equivalence stability of the verdict") {
    Rng rng(404);
    for (std::uint64_t seed = 31; seed <= 33; ++seed) {
        HadamardMatrix h = sylvester(3);
        HadamardMatrix scrambled = apply_equivalence(h, random_equivalence_witness(8, seed));
        Scalar v = S("-1+2*i");
        EquiangularityReport a = verify_equiangular(construct_hv(h, v));
        EquiangularityReport b = verify_equiangular(construct_hv(scrambled, v));
        CHECK(a.verdict == b.verdict);
        CHECK(b.verdict);
        CHECK(a.sic_ratio->exact() == b.sic_ratio->exact());
        // and a non-solution stays a non-solution
        auto sample = rng.v_sample();
        EquiangularityReport c = verify_equiangular(construct_hv(h, Scalar(sample.v)));
        EquiangularityReport d = verify_equiangular(construct_hv(scrambled, Scalar(sample.v)));
        CHECK(c.verdict == d.verdict);
    }
}

TEST_CASE("almost flat profile") {
    {
        auto profile = almost_flat_profile(construct_hv(sylvester(3), S("-1+2*i")));
        REQUIRE(profile.size() == 64);
        for (const auto& mags : profile) {
            REQUIRE(mags.size() == 8);
            for (int k = 0; k < 7; ++k) CHECK(mags[k].exact() == Q(1));
            CHECK(mags[7].exact() == Q(5));
        }
    }
    {
        auto profile = almost_flat_profile(construct_hv(order3_example(), S("-2")));
        for (const auto& mags : profile) {
            CHECK(mags[0].exact() == Q(1));
            CHECK(mags[1].exact() == Q(1));
            CHECK(mags[2].exact() == Q(4));
        }
    }
    {
        LineSet ones{3, Backend::exact,
                     {LineVector{{0, 0}, Vector(Backend::exact, {S("1"), S("1"), S("1")})}}};
        auto profile = almost_flat_profile(ones);
        for (const auto& m : profile[0]) CHECK(m.exact() == Q(1));
    }
}

TEST_CASE("the 8x8 unitary is exactly unitary and preserves the verdict") {
    Matrix u = hoggar_unitary();
    CHECK(is_scaled_identity(mat_mul(u, conj_transpose(u)), Scalar::exact_integer(1)));
    // 4 * U * U^dagger = 4I, using the half-scaled entries
    CHECK(is_scaled_identity(scale(mat_mul(u, conj_transpose(u)), Scalar::exact_integer(4)),
                             Scalar::exact_integer(4)));

    LineSet lines = construct_hv(sylvester(3), S("-1+2*i"));
    LineSet moved = unitary_transform(lines, u, Scalar(Cyclotomic::sqrt_integer(2)));
    EquiangularityReport rep = verify_equiangular(moved);
    CHECK(rep.verdict);
    CHECK(rep.sic_ratio->exact() == Q(1, 9));
    // with scale sqrt(2), every magnitude^2 scales by 4
    CHECK(rep.common_magnitude_squared->exact() == Q(64));

    // identity transform with scale 1 changes nothing
    LineSet same = unitary_transform(lines, Matrix::identity(8, Backend::exact), S("1"));
    for (std::size_t k = 0; k < lines.vectors.size(); ++k)
        for (std::size_t m = 0; m < 8; ++m)
            CHECK(same.vectors[k].vec[m].equals(lines.vectors[k].vec[m]));

    // scale 2 with identity: norms quadruple, ratio unchanged
    LineSet doubled = unitary_transform(lines, Matrix::identity(8, Backend::exact), S("2"));
    EquiangularityReport rep2 = verify_equiangular(doubled);
    CHECK(rep2.verdict);
    CHECK(rep2.sic_ratio->exact() == Q(1, 9));
    CHECK(inner_product(doubled.vectors[0].vec, doubled.vectors[0].vec).exact() == Q(48));
}

TEST_CASE("unitary transform preserves pairwise magnitudes exactly") {
    LineSet lines = construct_hv(order3_example(), S("-2"));
    // F3 itself is unitary up to scale; use a phase-permutation unitary instead
    Matrix u = Matrix::identity(3, Backend::exact);
    u.at(0, 0) = Scalar(Z(3, 1));
    u.at(1, 1) = Scalar(Z(12, 5));
    LineSet moved = unitary_transform(lines, u, S("1"));
    for (std::size_t p = 0; p < lines.vectors.size(); ++p) {
        for (std::size_t q = p + 1; q < lines.vectors.size(); ++q) {
            Cyclotomic before = inner_product(lines.vectors[p].vec, lines.vectors[q].vec).abs_squared().exact();
            Cyclotomic after = inner_product(moved.vectors[p].vec, moved.vectors[q].vec).abs_squared().exact();
            CHECK(before == after);
        }
    }
}

TEST_CASE("float backend construction matches exact within 1e-10") {
    HadamardMatrix h = order3_example();
    Matrix hf = h.body.to_backend(Backend::floating);
    LineSet exact_lines = construct_hv(h, S("-2"));
    LineSet float_lines = construct_hv(certify_hadamard(hf), Scalar(std::complex<double>(-2.0, 0.0)));
    EquiangularityReport rep = verify_equiangular(float_lines, 1e-10);
    CHECK(rep.verdict);
    CHECK(std::abs(rep.sic_ratio->floating() - 0.25) < 1e-10);
    for (std::size_t k = 0; k < exact_lines.vectors.size(); ++k)
        for (std::size_t m = 0; m < 3; ++m)
            CHECK(std::abs(exact_lines.vectors[k].vec[m].approx() -
                           float_lines.vectors[k].vec[m].floating()) < 1e-10);
}
