#include <catch2/catch_amalgamated.hpp>

#include <mzv/identities.hpp>

#include "test_support.hpp"

using mzv::BernoulliCache;
using mzv::ClosedFormFamily;
using mzv::ExponentTuple;
using mzv::Polynomial;
using mzv::rat;
using mzv::Rational;

TEST_CASE("last-variable contiguity: known collapses and passes") {
    BernoulliCache cache;

    // (n1, 0): the correction collapses to the depth-1 parametric value
    for (int n1 = 0; n1 <= 4; ++n1) {
        const auto report = mzv::check_contiguity_last(ExponentTuple{n1, 0}, cache);
        CHECK(report.pass);
        const Polynomial expected =
            mzv::from_univariate(
                mzv::bernoulli_polynomial(cache, static_cast<std::size_t>(n1) + 1), 2, 1) *
            (mzv::sign_pow(n1) / Rational(n1 + 1));
        CHECK(report.lhs == expected);
    }

    // (0,0): both sides equal B_1(z1) embedded in two variables
    const auto zz = mzv::check_contiguity_last(ExponentTuple{0, 0}, cache);
    CHECK(zz.pass);
    CHECK((zz.lhs - zz.rhs).is_zero());
    const Polynomial b1 =
        mzv::from_univariate(mzv::bernoulli_polynomial(cache, 1), 2, 1);
    CHECK(zz.lhs == b1);

    CHECK(mzv::check_contiguity_last(ExponentTuple{1, 2}, cache).pass);

    CHECK_THROWS_AS(mzv::check_contiguity_last(ExponentTuple{3}, cache),
                    std::domain_error);
}

TEST_CASE("last-variable contiguity over the acceptance boxes, spot-sized") {
    BernoulliCache cache;
    for (const auto& t : mzv_test::box_tuples(2, 3)) {
        const auto report = mzv::check_contiguity_last(ExponentTuple(t), cache);
        CHECK(report.pass);
    }
    for (const auto& t : mzv_test::box_tuples(3, 2)) {
        const auto report = mzv::check_contiguity_last(ExponentTuple(t), cache);
        CHECK(report.pass);
    }
}

TEST_CASE("the alternative depth-2 sign normalization really is wrong") {
    // With the (-1)^(n1+1) prefactor instead of (-1)^(n_r), the identity
    // already fails at (0,0): the correction would flip to -B_1(z1).
    BernoulliCache cache;
    const auto report = mzv::check_contiguity_last(ExponentTuple{0, 0}, cache);
    const Polynomial flipped = -report.rhs;
    CHECK(report.lhs != flipped);
}

TEST_CASE("first-variable contiguity at depth 2") {
    BernoulliCache cache;
    const auto zz = mzv::check_contiguity_first_depth2(0, 0, cache);
    CHECK(zz.pass);
    // correction term is B_1(z1+z2) = z1 + z2 - 1/2
    const Polynomial expected = Polynomial::variable(2, 1) + Polynomial::variable(2, 2) -
                                Polynomial::constant(2, rat(1, 2));
    CHECK(zz.rhs == expected);

    CHECK(mzv::check_contiguity_first_depth2(2, 1, cache).pass);
    for (int n1 = 0; n1 <= 4; ++n1)
        for (int n2 = 0; n2 <= 4; ++n2)
            CHECK(mzv::check_contiguity_first_depth2(n1, n2, cache).pass);
    CHECK_THROWS_AS(mzv::check_contiguity_first_depth2(-1, 0, cache),
                    std::invalid_argument);
}

TEST_CASE("shuffle defect, frozen instances") {
    BernoulliCache cache;
    const auto zz = mzv::shuffle_defect(0, 0, cache);
    CHECK(zz.pass);
    CHECK(zz.lhs == rat(-1, 12));
    CHECK(zz.rhs == rat(-1, 12));

    const auto odd = mzv::shuffle_defect(1, 2, cache);
    CHECK(odd.pass);
    CHECK(odd.lhs == 0);
    CHECK(odd.rhs == 0);

    const auto even = mzv::shuffle_defect(2, 2, cache);
    CHECK(even.pass);
    const Rational expected = -rat(mzv::factorial(2) * mzv::factorial(2),
                                   mzv::factorial(6)) *
                              cache.number(6);
    CHECK(even.rhs == expected);
}

TEST_CASE("shuffle defect holds on the full acceptance box") {
    BernoulliCache cache;
    for (int n1 = 0; n1 <= 10; ++n1) {
        for (int n2 = 0; n2 <= 10; ++n2) {
            const auto report = mzv::shuffle_defect(n1, n2, cache);
            CHECK(report.pass);
            if ((n1 + n2) % 2 == 1)
                CHECK(report.lhs == 0);
        }
    }
}

TEST_CASE("closed forms, frozen instances") {
    BernoulliCache cache;
    CHECK(mzv::closed_form(ClosedFormFamily::zeta2_n0, 0, cache) == rat(1, 3));
    CHECK(mzv::closed_form(ClosedFormFamily::zeta3_0n0, 1, cache) == rat(-19, 360));
    CHECK(mzv::closed_form(ClosedFormFamily::zeta3_n00, 1, cache) == rat(-17, 720));
    CHECK(mzv::closed_form(ClosedFormFamily::zeta3_0n0, 1, cache) ==
          mzv::zeta_neg(ExponentTuple{0, 1, 0}, cache));
    CHECK(mzv::closed_form(ClosedFormFamily::zeta3_n00, 1, cache) ==
          mzv::zeta_neg(ExponentTuple{1, 0, 0}, cache));
    CHECK_THROWS_AS(mzv::closed_form(ClosedFormFamily::zeta2_n0, -1, cache),
                    std::invalid_argument);
}

TEST_CASE("closed forms agree with the engine through n = 12") {
    BernoulliCache cache;
    for (const auto family :
         {ClosedFormFamily::zeta2_n0, ClosedFormFamily::zeta2_0n,
          ClosedFormFamily::zeta3_n00, ClosedFormFamily::zeta3_0n0}) {
        for (int n = 0; n <= 12; ++n)
            CHECK(mzv::closed_form(family, n, cache) ==
                  mzv::zeta_neg(mzv::closed_form_tuple(family, n), cache));
    }
}

TEST_CASE("the two depth-2 families meet at the origin") {
    BernoulliCache cache;
    CHECK(mzv::closed_form(ClosedFormFamily::zeta2_n0, 0, cache) ==
          mzv::closed_form(ClosedFormFamily::zeta2_0n, 0, cache));
    CHECK(mzv::closed_form(ClosedFormFamily::zeta2_n0, 0, cache) == rat(1, 3));
}

TEST_CASE("family names parse and render") {
    CHECK(mzv::closed_form_family_from_string("zeta3_0n0") == ClosedFormFamily::zeta3_0n0);
    CHECK(std::string(mzv::to_string(ClosedFormFamily::zeta2_0n)) == "zeta2_0n");
    CHECK_THROWS_AS(mzv::closed_form_family_from_string("zeta9"), std::invalid_argument);
}

TEST_CASE("reports carry both sides") {
    BernoulliCache cache;
    const auto report = mzv::shuffle_defect(3, 3, cache);
    CHECK(report.name == "shuffle-defect");
    CHECK(report.instance == "3,3");
    CHECK(report.pass == (report.lhs == report.rhs));
}
