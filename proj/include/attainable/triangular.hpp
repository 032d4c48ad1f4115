#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "attainable/partition.hpp"

namespace attainable {

/// t_i = i(i+1)/2 for i >= 1: 1, 3, 6, 10, ...
inline std::uint64_t triangular_number(std::uint64_t i) {
    if (i == 0)
        throw std::invalid_argument("triangular_number: index starts at 1");
    return i * (i + 1) / 2;
}

/// Index i with t_i = v, if v is triangular.
inline std::optional<std::uint64_t> triangular_index(std::uint64_t v) {
    if (v == 0) return std::nullopt;
    std::uint64_t i = (isqrt(8 * v + 1) - 1) / 2;
    for (std::uint64_t c : {i, i + 1})
        if (c >= 1 && c * (c + 1) / 2 == v) return c;
    return std::nullopt;
}

/// A multiset of triangular numbers, keyed by the triangular index i
/// (not the value t_i) so that the prefix sums of the inverse map fall
/// out directly. Stored multiplicities are always positive.
class TriangularMultiset {
public:
    TriangularMultiset() = default;

    void add(std::uint64_t index, std::uint64_t count) {
        if (index == 0)
            throw std::invalid_argument("TriangularMultiset: index starts at 1");
        if (count > 0) mult_[index] += count;
    }

    /// Builds from expanded triangular values, e.g. {1,1,1,1,3}.
    static TriangularMultiset from_values(std::span<const std::uint64_t> values) {
        TriangularMultiset t;
        for (std::uint64_t v : values) {
            auto i = triangular_index(v);
            if (!i)
                throw std::invalid_argument("TriangularMultiset: " + std::to_string(v) +
                                            " is not a triangular number");
            t.add(*i, 1);
        }
        return t;
    }

    bool empty() const { return mult_.empty(); }

    /// Sum of the represented values: total = sum c_i * t_i.
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (auto const& [i, c] : mult_) s += c * triangular_number(i);
        return s;
    }

    std::map<std::uint64_t, std::uint64_t> const& multiplicities() const { return mult_; }

    std::uint64_t largest_index() const {
        if (mult_.empty())
            throw std::invalid_argument("TriangularMultiset: empty");
        return mult_.rbegin()->first;
    }

    std::vector<std::uint64_t> values_ascending() const {
        std::vector<std::uint64_t> out;
        for (auto const& [i, c] : mult_)
            out.insert(out.end(), c, triangular_number(i));
        return out;
    }

    std::vector<std::uint64_t> values_descending() const {
        auto out = values_ascending();
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::string to_string() const {
        std::string s;
        bool first = true;
        for (std::uint64_t v : values_ascending()) {
            if (!first) s += ',';
            s += std::to_string(v);
            first = false;
        }
        return s;
    }

    friend bool operator==(TriangularMultiset const&, TriangularMultiset const&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> mult_;
};

/// Forward direction of the bijection between cyclicity-index-0 partitions
/// of 2m and partitions of m into triangular numbers:
///   2m = sum_{i=2..r} 2 t_{i-1} (n_i - n_{i+1})   with n_{r+1} = 0,
/// so t_{i-1} acquires multiplicity n_i - n_{i+1}.
inline TriangularMultiset zero_to_triangular(Partition const& lambda) {
    if (lambda.empty() || cyclicity_index(lambda) != 0)
        throw std::invalid_argument("zero_to_triangular: cyclicity index must be 0");
    TriangularMultiset t;
    std::size_t r = lambda.length();
    for (std::size_t i = 2; i <= r; ++i) {
        part_t next = (i < r) ? lambda.part(i) : 0;
        t.add(i - 1, lambda.part(i - 1) - next);
    }
    return t;
}

/// Inverse direction: with c_i the multiplicity of t_i and r-1 the largest
/// used index,
///   n_r = c_{r-1},  n_i = c_{i-1} + ... + c_{r-1}  (i = 2..r-1),
///   n_1 = n_2 + 3 n_3 + 5 n_4 + ... + (2r-3) n_r.
/// Yields the cyclicity-index-0 partition of twice the multiset total.
inline Partition triangular_to_zero(TriangularMultiset const& t) {
    if (t.empty())
        throw std::invalid_argument("triangular_to_zero: empty multiset");
    std::uint64_t r = t.largest_index() + 1;
    auto const& mult = t.multiplicities();
    auto c_at = [&](std::uint64_t i) -> std::uint64_t {
        auto it = mult.find(i);
        return it == mult.end() ? 0 : it->second;
    };
    // parts[i-1] = n_i; fill n_r..n_2 as suffix sums of the c_i.
    std::vector<part_t> parts(r, 0);
    std::uint64_t suffix = 0;
    for (std::uint64_t i = r; i >= 2; --i) {
        suffix += c_at(i - 1);
        parts[i - 1] = suffix;
    }
    std::uint64_t n1 = 0;
    for (std::uint64_t i = 2; i <= r; ++i) n1 += (2 * i - 3) * parts[i - 1];
    parts[0] = n1;
    return Partition::from_descending(std::move(parts));
}

namespace detail {

inline void triangular_partitions_rec(std::uint64_t remaining, std::uint64_t max_index,
                                      TriangularMultiset& current,
                                      std::vector<TriangularMultiset>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::uint64_t i = max_index; i >= 1; --i) {
        std::uint64_t t = triangular_number(i);
        if (t > remaining) continue;
        // largest-part-first descent gives reverse-lexicographic output
        TriangularMultiset next = current;
        next.add(i, 1);
        triangular_partitions_rec(remaining - t, i, next, out);
    }
}

}  // namespace detail

/// Every multiset of triangular numbers summing to m, exactly once, in
/// reverse-lexicographic order on the descending value lists:
/// m = 6 gives (6), (3,3), (3,1,1,1), (1,1,1,1,1,1).
inline std::vector<TriangularMultiset> triangular_partitions(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("triangular_partitions: m must be positive");
    std::uint64_t max_index = 1;
    while (triangular_number(max_index + 1) <= m) ++max_index;
    std::vector<TriangularMultiset> out;
    TriangularMultiset current;
    detail::triangular_partitions_rec(m, max_index, current, out);
    return out;
}

}  // namespace attainable
