#include <catch2/catch_amalgamated.hpp>

#include <mzv/series.hpp>

#include "test_support.hpp"

using mzv::Exponents;
using mzv::rat;
using mzv::Rational;
using mzv::TruncatedSeries;

namespace {

TruncatedSeries w(int var_count, int cap, int i) {
    Exponents e(static_cast<std::size_t>(var_count), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return TruncatedSeries::monomial(var_count, cap, e, Rational(1));
}

TruncatedSeries one(int var_count, int cap) {
    return TruncatedSeries::constant(var_count, cap, Rational(1));
}

}  // namespace

TEST_CASE("multiplication truncates at the cap") {
    const TruncatedSeries a = one(1, 2) + w(1, 2, 1);
    const TruncatedSeries b = one(1, 2) - w(1, 2, 1);
    const TruncatedSeries product = a * b;
    CHECK(product.coefficient(Exponents{0}) == 1);
    CHECK(product.coefficient(Exponents{1}) == 0);
    CHECK(product.coefficient(Exponents{2}) == -1);

    // degree-2 result at cap 1 is dropped entirely
    const TruncatedSeries tight = w(1, 1, 1) * w(1, 1, 1);
    CHECK(tight.is_zero());
}

TEST_CASE("series ops never produce terms above the cap") {
    mzv_test::Gen gen(31415);
    for (int i = 0; i < 60; ++i) {
        const TruncatedSeries a = gen.series(2, 4, 6);
        const TruncatedSeries b = gen.series(2, 4, 6);
        for (const TruncatedSeries& s : {a + b, a - b, a * b}) {
            CHECK(s.cap() == 4);
            for (const auto& [e, c] : s.terms()) {
                CHECK(mzv::total_degree(e) <= s.cap());
                CHECK(c != 0);
            }
        }
        const TruncatedSeries sub = a.substitute_sum(2);
        for (const auto& [e, c] : sub.terms())
            CHECK(mzv::total_degree(e) <= sub.cap());
    }
}

TEST_CASE("substitute_sum expands the last variable binomially") {
    const TruncatedSeries a = w(1, 3, 1);
    const TruncatedSeries spread = a.substitute_sum(1);
    CHECK(spread.var_count() == 2);
    CHECK(spread.coefficient(Exponents{1, 0}) == 1);
    CHECK(spread.coefficient(Exponents{0, 1}) == 1);

    const TruncatedSeries sq = w(1, 3, 1) * w(1, 3, 1);
    const TruncatedSeries spread2 = sq.substitute_sum(1);
    CHECK(spread2.coefficient(Exponents{2, 0}) == 1);
    CHECK(spread2.coefficient(Exponents{1, 1}) == 2);
    CHECK(spread2.coefficient(Exponents{0, 2}) == 1);

    CHECK(one(1, 3).substitute_sum(1) == one(2, 3));

    CHECK_THROWS_AS(one(2, 3).substitute_sum(1), std::invalid_argument);
}

TEST_CASE("division by a variable requires exact divisibility") {
    const TruncatedSeries s = w(2, 3, 2) + w(2, 3, 1) * w(2, 3, 2);
    const TruncatedSeries q = s.divided_by_var(2);
    CHECK(q.cap() == 2);
    CHECK(q.coefficient(Exponents{0, 0}) == 1);
    CHECK(q.coefficient(Exponents{1, 0}) == 1);

    CHECK(TruncatedSeries(1, 3).divided_by_var(1).is_zero());

    const TruncatedSeries bad = one(2, 3) + w(2, 3, 2);
    CHECK_THROWS_AS(bad.divided_by_var(2), std::domain_error);
}

TEST_CASE("coefficient queries above the cap are rejected, not zero") {
    const TruncatedSeries s = one(1, 3);
    CHECK(s.coefficient(Exponents{2}) == 0);  // inside the cap: known zero
    CHECK_THROWS_AS(s.coefficient(Exponents{5}), std::out_of_range);
    CHECK_THROWS_AS(s.coefficient(Exponents{1, 1}), std::invalid_argument);
}

TEST_CASE("cap and arity mismatches are errors") {
    CHECK_THROWS_AS(one(1, 2) + one(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(one(1, 2) * one(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries(1, -1), std::invalid_argument);
}

TEST_CASE("ring laws on random series at a fixed cap") {
    mzv_test::Gen gen(2718);
    for (int i = 0; i < 40; ++i) {
        const TruncatedSeries a = gen.series(2, 5, 5);
        const TruncatedSeries b = gen.series(2, 5, 5);
        const TruncatedSeries c = gen.series(2, 5, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("permutation, widening, and re-truncation plumbing") {
    const TruncatedSeries s =
        w(2, 3, 1) + Rational(2) * (w(2, 3, 2) * w(2, 3, 2));
    const TruncatedSeries swapped = s.permuted({2, 1});
    CHECK(swapped.coefficient(Exponents{0, 1}) == 1);
    CHECK(swapped.coefficient(Exponents{2, 0}) == 2);

    const TruncatedSeries widened = s.appended_variables(1);
    CHECK(widened.var_count() == 3);
    CHECK(widened.coefficient(Exponents{1, 0, 0}) == 1);

    const TruncatedSeries cut = s.truncated_to(1);
    CHECK(cut.cap() == 1);
    CHECK(cut.coefficient(Exponents{1, 0}) == 1);
    CHECK_THROWS_AS(cut.coefficient(Exponents{0, 2}), std::out_of_range);
    CHECK_THROWS_AS(s.truncated_to(4), std::invalid_argument);
}

TEST_CASE("series rendering is ascending graded-lex") {
    const TruncatedSeries s = one(2, 2) * rat(1, 3) + w(2, 2, 1) * rat(1, 24) +
                              w(2, 2, 2) * rat(1, 12);
    CHECK(s.to_string() == "1/3 + 1/24*w1 + 1/12*w2");
    CHECK(TruncatedSeries(1, 4).to_string() == "0");
}
