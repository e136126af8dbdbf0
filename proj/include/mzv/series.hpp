#pragma once

/**
 * @file series.hpp
 * @brief Multivariate formal power series over Rational in w_1..w_r,
 *        truncated at a total-degree cap.
 *
 * The cap is part of the value: arithmetic requires matching caps, results
 * are re-truncated, and dividing by a variable lowers the cap by one (the
 * boundary coefficients are no longer certified). Coefficient queries above
 * the cap are rejected rather than returning 0 -- those values are unknown,
 * not zero.
 */

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzv/polynomial.hpp"
#include "mzv/rational.hpp"

namespace mzv {

class TruncatedSeries {
public:
    TruncatedSeries(int var_count, int cap) : var_count_(var_count), cap_(cap) {
        if (var_count < 1)
            throw std::invalid_argument("TruncatedSeries: need at least one variable");
        if (cap < 0)
            throw std::invalid_argument("TruncatedSeries: negative cap");
    }

    static TruncatedSeries constant(int var_count, int cap, Rational c) {
        TruncatedSeries s(var_count, cap);
        s.add_term(Exponents(var_count, 0), std::move(c));
        return s;
    }

    static TruncatedSeries monomial(int var_count, int cap, Exponents e, Rational c) {
        TruncatedSeries s(var_count, cap);
        if (static_cast<int>(e.size()) != var_count)
            throw std::invalid_argument("TruncatedSeries::monomial: arity mismatch");
        s.add_term(std::move(e), std::move(c));
        return s;
    }

    int var_count() const { return var_count_; }
    int cap() const { return cap_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Stored coefficient, 0 when absent; throws above the cap.
    Rational coefficient(const Exponents& e) const {
        if (static_cast<int>(e.size()) != var_count_)
            throw std::invalid_argument("TruncatedSeries::coefficient: arity mismatch");
        if (total_degree(e) > cap_)
            throw std::out_of_range("TruncatedSeries::coefficient: beyond cap");
        const auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& other) {
        check_compatible(other);
        for (const auto& [e, c] : other.terms_)
            add_term(e, -c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        return a -= b;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_compatible(b);
        TruncatedSeries out(a.var_count_, a.cap_);
        Exponents e(a.var_count_);
        // Both maps iterate in ascending total degree, so the inner loop can
        // stop as soon as the combined degree exceeds the cap.
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            if (da > a.cap_)
                break;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.cap_)
                    break;
                for (int i = 0; i < a.var_count_; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries s, const Rational& c) {
        if (c == 0)
            return TruncatedSeries(s.var_count_, s.cap_);
        for (auto& [e, coeff] : s.terms_)
            coeff *= c;
        return s;
    }

    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries s) {
        return std::move(s) * c;
    }

    TruncatedSeries operator-() const { return *this * Rational(-1); }

    bool operator==(const TruncatedSeries& other) const {
        return var_count_ == other.var_count_ && cap_ == other.cap_ &&
               terms_ == other.terms_;
    }

    /**
     * Substitutes the last variable by (last variable + fresh variable),
     * expanding binomially: an m-variable series becomes an (m+1)-variable
     * one. j names the substituted variable and must be the last (the only
     * case the recurrence needs). Total degree is preserved, so the cap is
     * unchanged.
     */
    TruncatedSeries substitute_sum(int j) const {
        if (j != var_count_)
            throw std::invalid_argument(
                "TruncatedSeries::substitute_sum: only the last variable is supported");
        TruncatedSeries out(var_count_ + 1, cap_);
        Exponents e(var_count_ + 1);
        for (const auto& [exps, c] : terms_) {
            const int power = exps[var_count_ - 1];
            for (int i = 0; i + 1 < var_count_; ++i)
                e[i] = exps[i];
            for (int k = 0; k <= power; ++k) {
                e[var_count_ - 1] = power - k;
                e[var_count_] = k;
                out.add_term(e, c * Rational(binomial(power, k)));
            }
        }
        return out;
    }

    /// Exact division by w_i (1-based); throws std::domain_error when some
    /// term has exponent 0 in variable i. The result's cap drops by one.
    TruncatedSeries divided_by_var(int i) const {
        check_var(i);
        if (cap_ == 0)
            throw std::domain_error("TruncatedSeries::divided_by_var: cap exhausted");
        TruncatedSeries out(var_count_, cap_ - 1);
        for (const auto& [exps, c] : terms_) {
            if (exps[i - 1] < 1)
                throw std::domain_error(
                    "TruncatedSeries::divided_by_var: term not divisible by variable");
            Exponents e = exps;
            --e[i - 1];
            out.terms_.emplace(std::move(e), c);
        }
        return out;
    }

    /// Adds trailing variables with exponent zero; cap unchanged.
    TruncatedSeries appended_variables(int extra) const {
        if (extra < 0)
            throw std::invalid_argument("TruncatedSeries::appended_variables: negative count");
        TruncatedSeries out(var_count_ + extra, cap_);
        for (const auto& [e, c] : terms_) {
            Exponents widened = e;
            widened.resize(e.size() + static_cast<std::size_t>(extra), 0);
            out.terms_.emplace(std::move(widened), c);
        }
        return out;
    }

    /// Drops terms above new_cap and records the lower cap.
    TruncatedSeries truncated_to(int new_cap) const {
        if (new_cap < 0 || new_cap > cap_)
            throw std::invalid_argument("TruncatedSeries::truncated_to: bad cap");
        TruncatedSeries out(var_count_, new_cap);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) > new_cap)
                break;  // graded order: everything after is larger
            out.terms_.emplace(e, c);
        }
        return out;
    }

    /// Relabels variables: new variable i carries old variable perm[i-1].
    TruncatedSeries permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != var_count_)
            throw std::invalid_argument("TruncatedSeries::permuted: arity mismatch");
        TruncatedSeries out(var_count_, cap_);
        Exponents e(var_count_);
        for (const auto& [exps, c] : terms_) {
            for (int i = 0; i < var_count_; ++i) {
                const int src = perm[i];
                if (src < 1 || src > var_count_)
                    throw std::invalid_argument("TruncatedSeries::permuted: bad index");
                e[i] = exps[src - 1];
            }
            out.add_term(e, c);
        }
        return out;
    }

    /// Graded-lex rendering, constant term first, e.g. "1/3 + 1/24*w1 + 1/12*w2".
    std::string to_string(std::string_view var_prefix = "w") const {
        return detail::render_terms(terms_, var_prefix, /*ascending=*/true);
    }

private:
    void check_compatible(const TruncatedSeries& other) const {
        if (var_count_ != other.var_count_)
            throw std::invalid_argument("TruncatedSeries: variable count mismatch");
        if (cap_ != other.cap_)
            throw std::invalid_argument("TruncatedSeries: cap mismatch");
    }

    void check_var(int i) const {
        if (i < 1 || i > var_count_)
            throw std::out_of_range("TruncatedSeries: variable index out of range");
    }

    void add_term(Exponents e, Rational c) {
        if (c == 0 || total_degree(e) > cap_)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    int var_count_;
    int cap_;
    TermMap terms_;
};

/// One-variable series placed on variable i (1-based) of a var_count-variable one.
inline TruncatedSeries embed_single_variable(const TruncatedSeries& a, int var_count, int i) {
    if (a.var_count() != 1)
        throw std::invalid_argument("embed_single_variable: input must be univariate");
    if (i < 1 || i > var_count)
        throw std::out_of_range("embed_single_variable: variable index out of range");
    TruncatedSeries out(var_count, a.cap());
    for (const auto& [e, c] : a.terms()) {
        Exponents widened(var_count, 0);
        widened[i - 1] = e[0];
        out += TruncatedSeries::monomial(var_count, a.cap(), std::move(widened), c);
    }
    return out;
}

}  // namespace mzv
