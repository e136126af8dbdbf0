#pragma once

/**
 * @file bernoulli.hpp
 * @brief Bernoulli numbers B_n and Bernoulli polynomials B_n(z), exact.
 *
 * Convention: B_1 = -1/2. This is the orientation under which the symbol
 * identity (1+B)^n = (-1)^n B_n holds, which the whole evaluation calculus
 * rests on; it also makes zeta_1(0) = B_1 = -1/2 match the classical
 * continuation of the Riemann zeta function.
 */

#include <mutex>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/**
 * Memo table n -> B_n, filled by the defining sum recurrence
 * sum_{k=0}^{n} C(n+1,k) B_k = 0 (n >= 1).
 *
 * Thread-safe: entries are computed under an internal lock and never change
 * once written, so one cache may be shared across concurrent evaluations.
 */
class BernoulliCache {
public:
    BernoulliCache() = default;
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;

    /// Exact B_n.
    Rational number(std::size_t n) const {
        std::lock_guard<std::mutex> lock(mutex_);
        ensure_locked(n);
        return table_[n];
    }

    /// Number of entries computed so far.
    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return table_.size();
    }

private:
    void ensure_locked(std::size_t n) const {
        if (table_.empty())
            table_.emplace_back(1);  // B_0
        for (std::size_t m = table_.size(); m <= n; ++m) {
            Rational sum(0);
            for (std::size_t k = 0; k < m; ++k)
                sum += Rational(binomial(static_cast<long long>(m) + 1,
                                         static_cast<long long>(k))) *
                       table_[k];
            table_.emplace_back(-sum / Rational(static_cast<long long>(m) + 1));
        }
    }

    mutable std::mutex mutex_;
    mutable std::vector<Rational> table_;
};

/// Process-wide shared cache, used by the convenience overloads.
inline BernoulliCache& default_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

inline Rational bernoulli_number(const BernoulliCache& cache, std::size_t n) {
    return cache.number(n);
}

inline Rational bernoulli_number(std::size_t n) {
    return default_bernoulli_cache().number(n);
}

/**
 * Dense univariate polynomial over Rational, index = power.
 * No stored zero above the degree; the zero polynomial has no coefficients.
 */
class UniPolynomial {
public:
    UniPolynomial() = default;

    explicit UniPolynomial(std::vector<Rational> coefficients)
        : coefficients_(std::move(coefficients)) {
        trim();
    }

    static UniPolynomial constant(Rational c) {
        return UniPolynomial(std::vector<Rational>{std::move(c)});
    }

    bool is_zero() const { return coefficients_.empty(); }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    /// Coefficient of x^k (0 beyond the degree).
    const Rational& coefficient(std::size_t k) const {
        static const Rational zero(0);
        return k < coefficients_.size() ? coefficients_[k] : zero;
    }

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    /// Horner evaluation at a rational point.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    bool operator==(const UniPolynomial& other) const {
        return coefficients_ == other.coefficients_;
    }

private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == 0)
            coefficients_.pop_back();
    }

    std::vector<Rational> coefficients_;
};

/// B_n(z) = sum_k C(n,k) B_k z^{n-k}, degree exactly n.
inline UniPolynomial bernoulli_polynomial(const BernoulliCache& cache, std::size_t n) {
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (std::size_t k = 0; k <= n; ++k)
        coeffs[n - k] = Rational(binomial(static_cast<long long>(n),
                                          static_cast<long long>(k))) *
                        cache.number(k);
    return UniPolynomial(std::move(coeffs));
}

inline UniPolynomial bernoulli_polynomial(std::size_t n) {
    return bernoulli_polynomial(default_bernoulli_cache(), n);
}

/// B_n(x) at a rational point, without materializing the polynomial.
inline Rational eval_bernoulli_poly(const BernoulliCache& cache, std::size_t n,
                                    const Rational& x) {
    Rational sum(0);
    for (std::size_t k = 0; k <= n; ++k)
        sum += Rational(binomial(static_cast<long long>(n), static_cast<long long>(k))) *
               cache.number(k) * rational_pow(x, static_cast<unsigned>(n - k));
    return sum;
}

inline Rational eval_bernoulli_poly(std::size_t n, const Rational& x) {
    return eval_bernoulli_poly(default_bernoulli_cache(), n, x);
}

}  // namespace mzv
