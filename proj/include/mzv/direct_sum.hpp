#pragma once

/**
 * @file direct_sum.hpp
 * @brief Independent brute-force routes to the zeta values: the full
 *        (2r-1)-fold sum over (k_2..k_r, l_1..l_r), its collapsed
 *        (r-1)-fold form, and the literal depth-2 triple sum.
 *
 * These share nothing with the symbol engine beyond Bernoulli numbers and
 * binomials, which is what makes them usable as oracles.
 */

#include <stdexcept>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/exponent_tuple.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/**
 * One point of the outer summation lattice: the vector (k_2,...,k_r)
 * together with its sum kbar and the per-level binomial tops
 *
 *   T_j = sum_{i=j}^{r} n_i + r - j + 1 - sum_{i=j+1}^{r} k_i,
 *
 * which bound k_j from above (the tops are nested: T_j depends on the
 * k's to its right).
 */
struct KBar {
    std::vector<int> k;     ///< k[j-2] is k_j, j = 2..r
    std::vector<int> tops;  ///< tops[j-2] is T_j
    int kbar = 0;
    int leading_top = 0;    ///< nbar + r - kbar, the level-1 exponent
};

namespace detail {

inline int suffix_sum(const std::vector<int>& v, int from) {
    int s = 0;
    for (std::size_t i = static_cast<std::size_t>(from); i < v.size(); ++i)
        s += v[i];
    return s;
}

}  // namespace detail

/**
 * Enumerates every (k_2,...,k_r) with 0 <= k_j <= T_j, outermost index k_r
 * first since each top depends on the k's with larger index. Verifies the
 * lattice invariants (every T_j >= 1, leading top >= n_1 + 1) and hands each
 * point to fn as a KBar.
 */
template <typename Fn>
void for_each_k_tuple(const ExponentTuple& n, Fn&& fn) {
    const int r = n.depth();
    if (r < 2)
        throw std::domain_error("for_each_k_tuple: depth must be at least 2");
    const int nbar = n.weight();

    KBar point;
    point.k.assign(static_cast<std::size_t>(r - 1), 0);
    point.tops.assign(static_cast<std::size_t>(r - 1), 0);

    // recurse from j = r down to j = 2; index j-2 in the vectors
    auto descend = [&](auto&& self, int j) -> void {
        if (j == 1) {
            point.kbar = detail::suffix_sum(point.k, 0);
            point.leading_top = nbar + r - point.kbar;
            if (point.leading_top < n.at(0) + 1)
                throw std::logic_error("for_each_k_tuple: leading top below n_1 + 1");
            fn(static_cast<const KBar&>(point));
            return;
        }
        const int top = detail::suffix_sum(n.entries(), j - 1) + r - j + 1 -
                        detail::suffix_sum(point.k, j - 1);
        if (top < 1)
            throw std::logic_error("for_each_k_tuple: nonpositive binomial top");
        point.tops[static_cast<std::size_t>(j - 2)] = top;
        for (int kj = 0; kj <= top; ++kj) {
            point.k[static_cast<std::size_t>(j - 2)] = kj;
            self(self, j - 1);
        }
        point.k[static_cast<std::size_t>(j - 2)] = 0;
    };
    descend(descend, r);
}

/// sum_{l=0}^{N} C(N,l) B_l, the evaluated power (1 + B)^N.
inline Rational binomial_bernoulli_sum(const BernoulliCache& cache, int top) {
    Rational sum(0);
    for (int l = 0; l <= top; ++l)
        sum += Rational(binomial(top, l)) * cache.number(static_cast<std::size_t>(l));
    return sum;
}

/**
 * The full sum for depth >= 2, prefactor (-1)^r:
 *
 *   (-1)^r sum_{k_2..k_r} 1/(nbar+r-kbar) prod_{j=2}^{r} C(T_j,k_j)/T_j
 *       * sum_{l_1..l_r} C(nbar+r-kbar,l_1) C(k_2,l_2)..C(k_r,l_r) B_{l_1}..B_{l_r}.
 *
 * The inner sum's summand factors per index, so each l_j sum is taken
 * separately; the l sums are not collapsed to Bernoulli numbers (that
 * collapse is exactly what distinguishes the reduced form below).
 */
inline Rational zeta_general_verbatim(const ExponentTuple& n,
                                      const BernoulliCache& cache = default_bernoulli_cache()) {
    const int r = n.depth();
    if (r < 2)
        throw std::domain_error("zeta_general_verbatim: defined for depth >= 2");
    Rational total(0);
    for_each_k_tuple(n, [&](const KBar& point) {
        Rational weight = Rational(1) / Rational(point.leading_top);
        for (std::size_t idx = 0; idx < point.k.size(); ++idx)
            weight *= Rational(binomial(point.tops[idx], point.k[idx])) /
                      Rational(point.tops[idx]);
        Rational inner = binomial_bernoulli_sum(cache, point.leading_top);
        for (int kj : point.k)
            inner *= binomial_bernoulli_sum(cache, kj);
        total += weight * inner;
    });
    return sign_pow(r) * total;
}

/**
 * The collapsed (r-1)-fold form, prefactor (-1)^{nbar}:
 *
 *   (-1)^{nbar} sum_{k_2..k_r} 1/(nbar+r-kbar) prod_{j=2}^{r} C(T_j,k_j)/T_j
 *       * B_{nbar+r-kbar} * B_{k_2}..B_{k_r}.
 */
inline Rational zeta_general_reduced(const ExponentTuple& n,
                                     const BernoulliCache& cache = default_bernoulli_cache()) {
    const int r = n.depth();
    if (r < 2)
        throw std::domain_error("zeta_general_reduced: defined for depth >= 2");
    Rational total(0);
    for_each_k_tuple(n, [&](const KBar& point) {
        Rational weight = Rational(1) / Rational(point.leading_top);
        for (std::size_t idx = 0; idx < point.k.size(); ++idx)
            weight *= Rational(binomial(point.tops[idx], point.k[idx])) /
                      Rational(point.tops[idx]);
        Rational inner = cache.number(static_cast<std::size_t>(point.leading_top));
        for (int kj : point.k)
            inner *= cache.number(static_cast<std::size_t>(kj));
        total += weight * inner;
    });
    return sign_pow(n.weight()) * total;
}

/**
 * The depth-2 triple sum, kept fully literal (every (k_2, l_1, l_2) term is
 * visited):
 *
 *   1/(n_2+1) sum_{k_2=0}^{n_2+1} sum_{l_1=0}^{nbar+2-k_2} sum_{l_2=0}^{k_2}
 *     C(n_2+1,k_2) C(nbar+2-k_2,l_1) C(k_2,l_2) / (nbar+2-k_2) * B_{l_1} B_{l_2}.
 */
inline Rational zeta_depth2_triple_sum(int n1, int n2,
                                       const BernoulliCache& cache = default_bernoulli_cache()) {
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("zeta_depth2_triple_sum: exponents must be nonnegative");
    const int nbar = n1 + n2;
    Rational total(0);
    for (int k2 = 0; k2 <= n2 + 1; ++k2) {
        const int top1 = nbar + 2 - k2;
        for (int l1 = 0; l1 <= top1; ++l1) {
            for (int l2 = 0; l2 <= k2; ++l2) {
                total += Rational(binomial(n2 + 1, k2) * binomial(top1, l1) *
                                  binomial(k2, l2)) /
                         Rational(top1) * cache.number(static_cast<std::size_t>(l1)) *
                         cache.number(static_cast<std::size_t>(l2));
            }
        }
    }
    return total / Rational(n2 + 1);
}

}  // namespace mzv
