#pragma once

// Domain types shared by every stage of the Lusztig-Vogan pipeline: dominant
// weights, weighted diagrams, elements of Omega_n and partitions stored by
// multiplicity. All values are immutable after construction.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lvdist {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bad input: violated precondition, malformed weight, p <= n and so on.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A state the algorithms guarantee cannot happen. Carries a diagnostic dump.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Sorts an arbitrary integer sequence into weakly decreasing order.
std::vector<BigInt> dom(std::vector<BigInt> seq);

/// Weakly decreasing integer sequence (an element of the dominant cone).
class Weight {
public:
    Weight() = default;
    /// Throws DomainError unless `entries` is weakly decreasing.
    explicit Weight(std::vector<BigInt> entries);
    Weight(std::initializer_list<long long> entries);

    /// dom(): accepts any order and sorts.
    static Weight from_unsorted(std::vector<BigInt> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const BigInt& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const BigInt> entries() const noexcept { return entries_; }
    const std::vector<BigInt>& vec() const noexcept { return entries_; }

    bool all_zero() const noexcept;
    BigInt sum() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

private:
    std::vector<BigInt> entries_;
};

/// (w_1, ..., w_n) -> (-w_n, ..., -w_1).
Weight reverse_negate(const Weight& w);

/// Ragged array of integers. Rows are not required to be monotone; every row
/// holds at least one entry.
class WeightedDiagram {
public:
    using Row = std::vector<BigInt>;

    WeightedDiagram() = default;
    explicit WeightedDiagram(std::vector<Row> rows);
    WeightedDiagram(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    const Row& row(std::size_t i) const { return rows_[i]; }

    /// Total number of entries.
    std::size_t size() const noexcept;
    std::size_t max_row_length() const noexcept;

    /// Entries of column j (0-based storage index) from top to bottom, paired
    /// with the row they live in.
    std::vector<std::pair<std::size_t, BigInt>> column(std::size_t j) const;

    friend bool operator==(const WeightedDiagram&, const WeightedDiagram&) = default;

private:
    std::vector<Row> rows_;
};

/// Tuple (mu_1, ..., mu_s) of weights with mu_s nonempty; the implied size is
/// n = sum of i * |mu_i|. The empty tuple represents Omega_0.
class OmegaElement {
public:
    OmegaElement() = default;
    explicit OmegaElement(std::vector<Weight> mu);
    /// Also checks that the implied size equals `expected_n`.
    OmegaElement(std::vector<Weight> mu, std::size_t expected_n);

    std::size_t length() const noexcept { return mu_.size(); }
    /// mu_i with 1-based i.
    const Weight& mu(std::size_t i) const { return mu_.at(i - 1); }
    const std::vector<Weight>& parts() const noexcept { return mu_; }
    std::size_t n() const noexcept;

    BigInt entry_sum() const;

    friend bool operator==(const OmegaElement&, const OmegaElement&) = default;

private:
    std::vector<Weight> mu_;
};

OmegaElement reverse_negate(const OmegaElement& o);

/// Partition of n stored as multiplicities: mult[i-1] is the number of parts
/// equal to i. The last entry is nonzero unless the partition is empty.
class PartitionMult {
public:
    PartitionMult() = default;
    explicit PartitionMult(std::vector<std::size_t> mult);

    /// Builds from a list of positive parts in any order.
    static PartitionMult from_parts(std::span<const std::size_t> parts);

    std::size_t n() const noexcept;
    std::size_t largest_part() const noexcept { return mult_.size(); }
    /// Multiplicity of part i (1-based); zero past the largest part.
    std::size_t multiplicity(std::size_t i) const noexcept;
    const std::vector<std::size_t>& mult() const noexcept { return mult_; }
    /// Parts in weakly decreasing order.
    std::vector<std::size_t> parts() const;

    friend bool operator==(const PartitionMult&, const PartitionMult&) = default;

private:
    std::vector<std::size_t> mult_;
};

/// (alpha, nu) presentation -> tuple presentation. `nu` is read against the
/// parts of alpha in weakly decreasing order.
OmegaElement omega_from_pair(const PartitionMult& alpha, std::span<const BigInt> nu);

/// Tuple presentation -> (alpha, nu), nu the concatenation of mu_s, ..., mu_1.
std::pair<PartitionMult, std::vector<BigInt>> omega_to_pair(const OmegaElement& o);

} // namespace lvdist
