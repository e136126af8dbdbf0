#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over Rational in z_1..z_r.
 *
 * Terms live in a map keyed by exponent vector under graded-lex order, so
 * iteration (and therefore printing) is deterministic. No zero coefficient
 * is ever stored.
 */

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/bernoulli.hpp"
#include "mzv/rational.hpp"

namespace mzv {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order: total degree first, then lex on the exponents.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db)
            return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

using TermMap = std::map<Exponents, Rational, GradedLexLess>;

namespace detail {

inline std::string render_monomial(const Exponents& e, std::string_view var_prefix) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += var_prefix;
        out += std::to_string(i + 1);
        if (e[i] > 1) {
            out += '^';
            out += std::to_string(e[i]);
        }
    }
    return out;
}

/// Shared text rendering for polynomials (degree descending) and series
/// (degree ascending). Within one degree the variable order is natural
/// either way: z1^2 before z1*z2, w1 before w2.
inline std::string render_terms(const TermMap& terms, std::string_view var_prefix,
                                bool ascending) {
    if (terms.empty())
        return "0";
    std::string out;
    auto emit = [&](const Exponents& e, const Rational& c) {
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational magnitude = negative ? Rational(-c) : c;
        const std::string mono = render_monomial(e, var_prefix);
        if (mono.empty()) {
            out += to_string(magnitude);
        } else {
            if (magnitude != 1) {
                out += to_string(magnitude);
                out += '*';
            }
            out += mono;
        }
    };
    if (ascending) {
        // ascending total degree, each equal-degree run reversed so that the
        // leading variables come first
        auto run_begin = terms.begin();
        while (run_begin != terms.end()) {
            auto run_end = run_begin;
            const int degree = total_degree(run_begin->first);
            while (run_end != terms.end() && total_degree(run_end->first) == degree)
                ++run_end;
            for (auto it = std::make_reverse_iterator(run_end);
                 it != std::make_reverse_iterator(run_begin); ++it)
                emit(it->first, it->second);
            run_begin = run_end;
        }
    } else {
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            emit(it->first, it->second);
    }
    return out;
}

}  // namespace detail

class Polynomial {
public:
    explicit Polynomial(int var_count) : var_count_(var_count) {
        if (var_count < 0)
            throw std::invalid_argument("Polynomial: negative variable count");
    }

    static Polynomial constant(int var_count, Rational c) {
        Polynomial p(var_count);
        p.add_term(Exponents(var_count, 0), std::move(c));
        return p;
    }

    /// The monomial z_i (1-based index).
    static Polynomial variable(int var_count, int i) {
        Polynomial p(var_count);
        Exponents e(var_count, 0);
        p.check_var(i);
        e[i - 1] = 1;
        p.add_term(std::move(e), Rational(1));
        return p;
    }

    static Polynomial monomial(int var_count, Exponents e, Rational c) {
        Polynomial p(var_count);
        if (static_cast<int>(e.size()) != var_count)
            throw std::invalid_argument("Polynomial::monomial: exponent arity mismatch");
        for (int x : e)
            if (x < 0)
                throw std::invalid_argument("Polynomial::monomial: negative exponent");
        p.add_term(std::move(e), std::move(c));
        return p;
    }

    int var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Stored coefficient, 0 when absent.
    Rational coefficient(const Exponents& e) const {
        if (static_cast<int>(e.size()) != var_count_)
            throw std::invalid_argument("Polynomial::coefficient: arity mismatch");
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Polynomial& operator+=(const Polynomial& other) {
        check_same_arity(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        check_same_arity(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same_arity(b);
        Polynomial out(a.var_count_);
        Exponents e(a.var_count_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.var_count_; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend Polynomial operator*(Polynomial p, const Rational& c) {
        if (c == 0)
            return Polynomial(p.var_count_);
        for (auto& [e, coeff] : p.terms_)
            coeff *= c;
        return p;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) { return std::move(p) * c; }

    Polynomial operator-() const { return *this * Rational(-1); }

    bool operator==(const Polynomial& other) const {
        return var_count_ == other.var_count_ && terms_ == other.terms_;
    }

    /// Substitutes z_i -> z_i + 1 (1-based), expanded binomially.
    Polynomial shifted_var(int i) const {
        check_var(i);
        Polynomial out(var_count_);
        Exponents e(var_count_);
        for (const auto& [exps, c] : terms_) {
            const int power = exps[i - 1];
            e = exps;
            for (int j = 0; j <= power; ++j) {
                e[i - 1] = j;
                out.add_term(e, c * Rational(binomial(power, j)));
            }
        }
        return out;
    }

    /// Adds trailing variables with exponent zero.
    Polynomial appended_variables(int extra) const {
        if (extra < 0)
            throw std::invalid_argument("Polynomial::appended_variables: negative count");
        Polynomial out(var_count_ + extra);
        for (const auto& [e, c] : terms_) {
            Exponents widened = e;
            widened.resize(e.size() + static_cast<std::size_t>(extra), 0);
            out.terms_.emplace(std::move(widened), c);
        }
        return out;
    }

    /// Full evaluation at a rational point.
    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != var_count_)
            throw std::invalid_argument("Polynomial::eval: arity mismatch");
        Rational sum(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (int i = 0; i < var_count_; ++i)
                if (e[i] > 0)
                    term *= rational_pow(point[i], static_cast<unsigned>(e[i]));
            sum += term;
        }
        return sum;
    }

    /// Evaluation at the origin (constant term).
    Rational eval_at_zero() const { return coefficient(Exponents(var_count_, 0)); }

    /// Graded-lex rendering, highest term first, e.g. "z1^2 - z1 + 1/6".
    std::string to_string(std::string_view var_prefix = "z") const {
        return detail::render_terms(terms_, var_prefix, /*ascending=*/false);
    }

private:
    void check_same_arity(const Polynomial& other) const {
        if (var_count_ != other.var_count_)
            throw std::invalid_argument("Polynomial: variable count mismatch");
    }

    void check_var(int i) const {
        if (i < 1 || i > var_count_)
            throw std::out_of_range("Polynomial: variable index out of range");
    }

    // try_emplace leaves e and c untouched when the key already exists.
    void add_term(Exponents e, Rational c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    int var_count_;
    TermMap terms_;
};

/// p(z_i) as a polynomial in var_count variables (i is 1-based).
inline Polynomial from_univariate(const UniPolynomial& p, int var_count, int i) {
    Polynomial out(var_count);
    if (i < 1 || i > var_count)
        throw std::out_of_range("from_univariate: variable index out of range");
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coefficient(static_cast<std::size_t>(k)) == 0)
            continue;
        Exponents e(var_count, 0);
        e[i - 1] = k;
        out += Polynomial::monomial(var_count, std::move(e),
                                    p.coefficient(static_cast<std::size_t>(k)));
    }
    return out;
}

/// p(arg) by Horner, e.g. a Bernoulli polynomial evaluated at z1+z2.
inline Polynomial compose_univariate(const UniPolynomial& p, const Polynomial& arg) {
    Polynomial acc(arg.var_count());
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * arg;
        acc += Polynomial::constant(arg.var_count(), p.coefficient(static_cast<std::size_t>(k)));
    }
    return acc;
}

}  // namespace mzv
