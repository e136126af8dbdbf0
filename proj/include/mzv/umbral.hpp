#pragma once

/**
 * @file umbral.hpp
 * @brief Evaluation of multiple zeta values at negative integers through the
 *        nested-symbol calculus, plus the independent recursion on the depth.
 *
 * The value at (-n_1,...,-n_r) is (-1)^{nbar} E_r(n_r + 1), where E_k(m) is
 * the evaluation of the combined level-k symbol power inside the product of
 * level-1..k symbols:
 *
 *     E_1(m) = B_m / m
 *     E_k(m) = (1/m) * sum_{j=0}^{m} C(m,j) * B_{m-j} * E_{k-1}(n_{k-1}+1+j)
 *
 * The one semantic subtlety: powers of the SAME level symbol combine
 * additively BEFORE the defining expansion is applied, and evaluation
 * proceeds outermost level first. Treating the levels as ordinary commuting
 * variables instead gives -1/3 at (0,0,0) where the correct value is -1/4.
 * Each binomial expansion isolates the level-k Bernoulli symbol completely,
 * so its power evaluates to a Bernoulli number on the spot; no cross-level
 * bookkeeping is ever needed.
 *
 * The parametric variant replaces B_{m-j} with the Bernoulli polynomial
 * B_{m-j}(z_k) at coefficient level and yields a polynomial in z_1..z_r that
 * specializes to the numeric value at z = 0.
 */

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/exponent_tuple.hpp"
#include "mzv/polynomial.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/**
 * Memoized evaluator of E_k(m) for one fixed exponent tuple. The memo key
 * (k, m) is only meaningful for a fixed prefix n_1..n_{k-1}, so a context
 * must never be reused across tuples.
 */
class EngineContext {
public:
    explicit EngineContext(ExponentTuple tuple,
                           const BernoulliCache& cache = default_bernoulli_cache(),
                           bool memoize = true)
        : tuple_(std::move(tuple)), bernoulli_(cache), memoize_(memoize) {}

    EngineContext(const EngineContext&) = delete;
    EngineContext& operator=(const EngineContext&) = delete;

    const ExponentTuple& tuple() const { return tuple_; }

    /// E_k(m); requires 1 <= k <= depth and m >= 1 (the calculus leaves the
    /// zeroth power undefined, and the evaluation never needs it).
    Rational c_eval(int k, int m) {
        if (k < 1 || k > tuple_.depth())
            throw std::out_of_range("EngineContext::c_eval: level out of range");
        if (m < 1)
            throw std::domain_error("EngineContext::c_eval: zeroth symbol power is undefined");
        if (memoize_) {
            const auto it = memo_.find({k, m});
            if (it != memo_.end())
                return it->second;
        }
        Rational value = compute(k, m);
        if (memoize_)
            memo_.emplace(std::make_pair(k, m), value);
        return value;
    }

private:
    Rational compute(int k, int m) {
        if (k == 1)
            return bernoulli_.number(static_cast<std::size_t>(m)) / Rational(m);
        Rational sum(0);
        const int inner = tuple_.at(k - 2) + 1;  // n_{k-1} + 1
        for (int j = 0; j <= m; ++j)
            sum += Rational(binomial(m, j)) *
                   bernoulli_.number(static_cast<std::size_t>(m - j)) *
                   c_eval(k - 1, inner + j);
        return sum / Rational(m);
    }

    ExponentTuple tuple_;
    const BernoulliCache& bernoulli_;
    bool memoize_;
    std::map<std::pair<int, int>, Rational> memo_;
};

/// zeta_r(-n_1,...,-n_r), exact.
inline Rational zeta_neg(const ExponentTuple& n,
                         const BernoulliCache& cache = default_bernoulli_cache()) {
    EngineContext ctx(n, cache);
    return sign_pow(n.weight()) * ctx.c_eval(n.depth(), n.last() + 1);
}

/// Parametric counterpart of EngineContext: E_k(m) as a polynomial in
/// z_1..z_r, with B_{m-j}(z_k) in place of B_{m-j}.
class ParamEngineContext {
public:
    explicit ParamEngineContext(ExponentTuple tuple,
                                const BernoulliCache& cache = default_bernoulli_cache(),
                                bool memoize = true)
        : tuple_(std::move(tuple)), bernoulli_(cache), memoize_(memoize) {}

    ParamEngineContext(const ParamEngineContext&) = delete;
    ParamEngineContext& operator=(const ParamEngineContext&) = delete;

    const ExponentTuple& tuple() const { return tuple_; }

    Polynomial c_eval(int k, int m) {
        if (k < 1 || k > tuple_.depth())
            throw std::out_of_range("ParamEngineContext::c_eval: level out of range");
        if (m < 1)
            throw std::domain_error(
                "ParamEngineContext::c_eval: zeroth symbol power is undefined");
        if (memoize_) {
            const auto it = memo_.find({k, m});
            if (it != memo_.end())
                return it->second;
        }
        Polynomial value = compute(k, m);
        if (memoize_)
            memo_.emplace(std::make_pair(k, m), value);
        return value;
    }

private:
    Polynomial level_bernoulli(int k, int power) const {
        return from_univariate(
            bernoulli_polynomial(bernoulli_, static_cast<std::size_t>(power)),
            tuple_.depth(), k);
    }

    Polynomial compute(int k, int m) {
        const int r = tuple_.depth();
        if (k == 1)
            return level_bernoulli(1, m) * (Rational(1) / Rational(m));
        Polynomial sum(r);
        const int inner = tuple_.at(k - 2) + 1;
        for (int j = 0; j <= m; ++j)
            sum += Rational(binomial(m, j)) * (level_bernoulli(k, m - j) * c_eval(k - 1, inner + j));
        return sum * (Rational(1) / Rational(m));
    }

    ExponentTuple tuple_;
    const BernoulliCache& bernoulli_;
    bool memoize_;
    std::map<std::pair<int, int>, Polynomial> memo_;
};

/// zeta_r(-n_1,...,-n_r; z_1,...,z_r) as an exact polynomial in z_1..z_r.
/// Specializing every z_i = 0 gives zeta_neg(n); depth 1 gives
/// (-1)^n B_{n+1}(z_1)/(n+1).
inline Polynomial zeta_neg_param(const ExponentTuple& n,
                                 const BernoulliCache& cache = default_bernoulli_cache()) {
    ParamEngineContext ctx(n, cache);
    return ctx.c_eval(n.depth(), n.last() + 1) * sign_pow(n.weight());
}

namespace detail {

struct TupleLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return a < b;
    }
};

inline Rational zeta_recursion_impl(const std::vector<int>& n, const BernoulliCache& cache,
                                    std::map<std::vector<int>, Rational, TupleLess>& memo) {
    const auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    Rational value(0);
    if (n.size() == 1) {
        value = sign_pow(n[0]) * cache.number(static_cast<std::size_t>(n[0]) + 1) /
                Rational(n[0] + 1);
    } else {
        const int nr = n.back();
        std::vector<int> sub(n.begin(), n.end() - 1);
        const int base = sub.back();
        for (int k = 0; k <= nr + 1; ++k) {
            sub.back() = base + k;
            value += Rational(binomial(nr + 1, k)) * sign_pow(k) *
                     zeta_recursion_impl(sub, cache, memo) *
                     cache.number(static_cast<std::size_t>(nr + 1 - k));
        }
        value *= sign_pow(nr) / Rational(nr + 1);
    }
    memo.emplace(n, value);
    return value;
}

inline Polynomial zeta_recursion_param_impl(
    const std::vector<int>& n, int full_depth, const BernoulliCache& cache,
    std::map<std::vector<int>, Polynomial, TupleLess>& memo) {
    const auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    const int r = static_cast<int>(n.size());
    Polynomial value(full_depth);
    if (r == 1) {
        value = from_univariate(
                    bernoulli_polynomial(cache, static_cast<std::size_t>(n[0]) + 1),
                    full_depth, 1) *
                (sign_pow(n[0]) / Rational(n[0] + 1));
    } else {
        const int nr = n.back();
        std::vector<int> sub(n.begin(), n.end() - 1);
        const int base = sub.back();
        for (int k = 0; k <= nr + 1; ++k) {
            sub.back() = base + k;
            const Polynomial factor = from_univariate(
                bernoulli_polynomial(cache, static_cast<std::size_t>(nr + 1 - k)),
                full_depth, r);
            value += (Rational(binomial(nr + 1, k)) * sign_pow(k)) *
                     (zeta_recursion_param_impl(sub, full_depth, cache, memo) * factor);
        }
        value = value * (sign_pow(nr) / Rational(nr + 1));
    }
    memo.emplace(n, value);
    return value;
}

}  // namespace detail

/**
 * The same zeta value through the recursion on the depth,
 *
 *   zeta_r(-n; z) = ((-1)^{n_r}/(n_r+1)) * sum_{k=0}^{n_r+1} C(n_r+1,k) (-1)^k
 *                   * zeta_{r-1}(-n_1,..,-n_{r-1}-k; z) * B_{n_r+1-k}(z_r),
 *
 * with depth-1 base value (-1)^n B_{n+1}(z)/(n+1). Sign bookkeeping is
 * independent of the symbol engine, which makes this a genuine cross-check.
 * Memoized on the full shifted tuple.
 */
inline Rational zeta_depth_recursion(const ExponentTuple& n,
                                     const BernoulliCache& cache = default_bernoulli_cache()) {
    std::map<std::vector<int>, Rational, detail::TupleLess> memo;
    return detail::zeta_recursion_impl(n.entries(), cache, memo);
}

/// Parametric form of the depth recursion; polynomial in z_1..z_r.
inline Polynomial zeta_depth_recursion_param(
    const ExponentTuple& n, const BernoulliCache& cache = default_bernoulli_cache()) {
    std::map<std::vector<int>, Polynomial, detail::TupleLess> memo;
    return detail::zeta_recursion_param_impl(n.entries(), n.depth(), cache, memo);
}

}  // namespace mzv
