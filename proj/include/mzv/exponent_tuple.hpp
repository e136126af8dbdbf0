#pragma once

/// @file exponent_tuple.hpp
/// @brief The argument vector (n_1,...,n_r) of a zeta value at (-n_1,...,-n_r).

#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// Nonnegative exponent magnitudes; depth r >= 1, weight = sum of entries.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("ExponentTuple: depth must be at least 1");
        for (int v : entries_)
            if (v < 0)
                throw std::invalid_argument("ExponentTuple: entries must be nonnegative");
    }

    ExponentTuple(std::initializer_list<int> entries)
        : ExponentTuple(std::vector<int>(entries)) {}

    int depth() const { return static_cast<int>(entries_.size()); }
    int weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    /// 0-based access: at(j) is n_{j+1}.
    int at(int j) const { return entries_.at(static_cast<std::size_t>(j)); }
    int last() const { return entries_.back(); }

    const std::vector<int>& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    /// Copy with the last entry increased by k (the depth recursion's shift).
    ExponentTuple with_last_shifted(int k) const {
        std::vector<int> shifted = entries_;
        shifted.back() += k;
        return ExponentTuple(std::move(shifted));
    }

    /// Copy without the last entry; depth must be >= 2.
    ExponentTuple dropped_last() const {
        if (depth() < 2)
            throw std::domain_error("ExponentTuple::dropped_last: depth 1");
        return ExponentTuple(std::vector<int>(entries_.begin(), entries_.end() - 1));
    }

    bool operator==(const ExponentTuple& other) const { return entries_ == other.entries_; }

    /// "n1,n2,...,nr"
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(entries_[i]);
        }
        return out;
    }

private:
    std::vector<int> entries_;
};

}  // namespace mzv
