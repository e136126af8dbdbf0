#pragma once

// Shared helpers for the unit tests: a deterministic generator of small
// random rationals/polynomials and tuple enumeration for the property tests.

#include <functional>
#include <random>
#include <vector>

#include <mzv/polynomial.hpp>
#include <mzv/rational.hpp>
#include <mzv/series.hpp>

namespace mzv_test {

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int int_in(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    mzv::Rational rational(int magnitude = 20) {
        const int num = int_in(-magnitude, magnitude);
        const int den = int_in(1, magnitude);
        return mzv::rat(num, den);
    }

    mzv::Rational nonzero_rational(int magnitude = 20) {
        for (;;) {
            mzv::Rational q = rational(magnitude);
            if (q != 0)
                return q;
        }
    }

    mzv::Polynomial polynomial(int var_count, int max_degree, int max_terms) {
        mzv::Polynomial p(var_count);
        const int terms = int_in(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            mzv::Exponents e(static_cast<std::size_t>(var_count), 0);
            int budget = max_degree;
            for (int i = 0; i < var_count; ++i) {
                e[static_cast<std::size_t>(i)] = int_in(0, budget);
                budget -= e[static_cast<std::size_t>(i)];
            }
            p += mzv::Polynomial::monomial(var_count, e, rational(8));
        }
        return p;
    }

    mzv::TruncatedSeries series(int var_count, int cap, int max_terms) {
        mzv::TruncatedSeries s(var_count, cap);
        const int terms = int_in(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            mzv::Exponents e(static_cast<std::size_t>(var_count), 0);
            int budget = cap;
            for (int i = 0; i < var_count; ++i) {
                e[static_cast<std::size_t>(i)] = int_in(0, budget);
                budget -= e[static_cast<std::size_t>(i)];
            }
            s += mzv::TruncatedSeries::monomial(var_count, cap, e, rational(8));
        }
        return s;
    }

private:
    std::mt19937 rng_;
};

/// All depth-r tuples with total weight <= max_weight, graded-lex order.
inline std::vector<std::vector<int>> weight_tuples(int depth, int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(depth), 0);
    std::function<void(int, int)> fill = [&](int pos, int budget) {
        if (pos == depth - 1) {
            current[static_cast<std::size_t>(pos)] = budget;
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= budget; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            fill(pos + 1, budget - v);
        }
    };
    for (int w = 0; w <= max_weight; ++w)
        fill(0, w);
    return out;
}

/// All depth-r tuples with every entry <= box, lexicographic order.
inline std::vector<std::vector<int>> box_tuples(int depth, int box) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(static_cast<std::size_t>(depth), 0);
    std::function<void(int)> fill = [&](int pos) {
        if (pos == depth) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v <= box; ++v) {
            current[static_cast<std::size_t>(pos)] = v;
            fill(pos + 1);
        }
    };
    fill(0);
    return out;
}

}  // namespace mzv_test
