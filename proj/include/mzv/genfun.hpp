#pragma once

/**
 * @file genfun.hpp
 * @brief Exponential generating functions of the zeta values at negative
 *        integers, built by the depth recurrence
 *
 *   F_r(w_1..w_r) = (1/w_r) [ F_{r-1}(w_1..w_{r-1})
 *                             - FB(-w_r) * F_{r-1}(w_1..w_{r-2}, w_{r-1)+w_r) ]
 *
 * with F_1(w) = (1 - FB(-w))/w and FB(w) = w/(e^w - 1) the Bernoulli
 * generating function. Coefficients follow the exponential convention:
 * zeta_r(-n_1..-n_r) = n_1!..n_r! * [w^n] F_r.
 *
 * Every division by w_r costs one degree of certainty at the truncation
 * boundary, so a depth-r series built from a depth-1 series of cap N is
 * certified only through total degree N - (r-1); GenFunResult records that.
 */

#include <stdexcept>
#include <utility>

#include "mzv/bernoulli.hpp"
#include "mzv/exponent_tuple.hpp"
#include "mzv/rational.hpp"
#include "mzv/series.hpp"

namespace mzv {

/// FB(w): coefficient of w^n is B_n/n!, through total degree `order`.
inline TruncatedSeries fb_series(int order,
                                 const BernoulliCache& cache = default_bernoulli_cache()) {
    if (order < 0)
        throw std::invalid_argument("fb_series: negative order");
    TruncatedSeries out(1, order);
    for (int m = 0; m <= order; ++m) {
        const Rational c = cache.number(static_cast<std::size_t>(m)) /
                           Rational(factorial(m));
        if (c != 0)
            out += TruncatedSeries::monomial(1, order, Exponents{m}, c);
    }
    return out;
}

namespace detail {

/// FB(-w) embedded on variable i of a var_count-variable series.
inline TruncatedSeries fb_neg_embedded(int order, int var_count, int i,
                                       const BernoulliCache& cache) {
    TruncatedSeries out(var_count, order);
    for (int m = 0; m <= order; ++m) {
        const Rational c = sign_pow(m) * cache.number(static_cast<std::size_t>(m)) /
                           Rational(factorial(m));
        if (c == 0)
            continue;
        Exponents e(var_count, 0);
        e[i - 1] = m;
        out += TruncatedSeries::monomial(var_count, order, std::move(e), c);
    }
    return out;
}

}  // namespace detail

/**
 * F_1(w) = (1 - FB(-w))/w; builds FB at cap `order` and divides once, so the
 * result's cap is order-1 and [w^n] = zeta_1(-n)/n! for n <= order-1.
 * Requires order >= 1.
 */
inline TruncatedSeries f1_series(int order,
                                 const BernoulliCache& cache = default_bernoulli_cache()) {
    if (order < 1)
        throw std::invalid_argument("f1_series: order must be at least 1");
    TruncatedSeries bracket =
        TruncatedSeries::constant(1, order, Rational(1)) -
        detail::fb_neg_embedded(order, 1, 1, cache);
    // constant terms cancel exactly (FB(0) = 1), so this division cannot fail
    return bracket.divided_by_var(1);
}

/// A depth-r generating function plus the total degree through which its
/// coefficients are exact. Queries above that degree are rejected.
struct GenFunResult {
    TruncatedSeries series;
    int certified_cap;
};

/**
 * Builds F_r starting from a depth-1 series of cap `order`; each of the r-1
 * recurrence steps substitutes w_{r-1} -> w_{r-1}+w_r, multiplies by
 * FB(-w_r), subtracts, and divides by w_r. certified_cap = order - (r-1),
 * so `order >= r-1` is required.
 *
 * A divisibility failure inside a step would mean the recurrence identity
 * itself broke (the bracket must vanish at w_r = 0 because FB(0) = 1); it
 * surfaces as std::domain_error from the division.
 */
inline GenFunResult fr_series(int depth, int order,
                              const BernoulliCache& cache = default_bernoulli_cache()) {
    if (depth < 1)
        throw std::invalid_argument("fr_series: depth must be at least 1");
    if (order < depth - 1)
        throw std::invalid_argument("fr_series: order must be at least depth-1");
    TruncatedSeries f = f1_series(order + 1, cache);
    for (int d = 2; d <= depth; ++d) {
        const TruncatedSeries substituted = f.substitute_sum(d - 1);
        const TruncatedSeries plain = f.appended_variables(1);
        const TruncatedSeries fb_neg = detail::fb_neg_embedded(f.cap(), d, d, cache);
        const TruncatedSeries bracket = plain - fb_neg * substituted;
        f = bracket.divided_by_var(d);
    }
    const int certified = f.cap();
    return GenFunResult{std::move(f), certified};
}

/// zeta_r(-n) = n_1!..n_r! * [w^n] F_r. Rejects weights above the certified
/// cap and tuples whose depth does not match the series.
inline Rational zeta_from_genfun(const GenFunResult& g, const ExponentTuple& n) {
    if (n.depth() != g.series.var_count())
        throw std::invalid_argument("zeta_from_genfun: depth mismatch");
    if (n.weight() > g.certified_cap)
        throw std::out_of_range("zeta_from_genfun: weight above certified cap");
    Rational value = g.series.coefficient(n.entries());
    for (int nj : n)
        value *= Rational(factorial(nj));
    return value;
}

}  // namespace mzv
