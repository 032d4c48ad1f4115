#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "attainable/partition.hpp"

namespace attainable {

/// Single-pass range over all partitions of n in reverse-lexicographic
/// order on part sequences: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
/// For n = 0 it yields the empty partition exactly once.
class partition_range {
public:
    explicit partition_range(std::uint64_t n) : n_(n) {}

    class iterator {
    public:
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;

        iterator() : done_(true) {}
        explicit iterator(std::uint64_t n) : done_(false) {
            if (n > 0) buf_.push_back(n);
        }

        Partition operator*() const { return Partition::from_descending(buf_); }

        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        bool operator==(std::default_sentinel_t) const { return done_; }

        /// The raw weakly decreasing buffer, valid until the next increment.
        std::vector<part_t> const& parts() const { return buf_; }

    private:
        void advance() {
            // Locate the rightmost part exceeding 1; everything after it is 1s.
            std::size_t j = buf_.size();
            while (j > 0 && buf_[j - 1] == 1) --j;
            if (j == 0) {
                done_ = true;
                buf_.clear();
                return;
            }
            --j;
            part_t x = buf_[j] - 1;
            std::uint64_t rem = buf_[j] + (buf_.size() - 1 - j);
            buf_.resize(j);
            // Greedy refill with parts of size x keeps the sequence canonical
            // and produces the reverse-lexicographic successor.
            while (rem >= x) {
                buf_.push_back(x);
                rem -= x;
            }
            if (rem > 0) buf_.push_back(rem);
        }

        std::vector<part_t> buf_;
        bool done_;
    };

    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::uint64_t n_;
};

inline partition_range partitions(std::uint64_t n) { return partition_range(n); }

inline std::vector<Partition> all_partitions(std::uint64_t n) {
    std::vector<Partition> out;
    for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it)
        out.push_back(*it);
    return out;
}

/// Partitions of n with nonnegative cyclicity index, enumeration order
/// inherited from partitions(). attainable_partitions(0) = {empty} by the
/// a(0) = 1 convention.
inline std::vector<Partition> attainable_partitions(std::uint64_t n) {
    if (n == 0) return {Partition{}};
    std::vector<Partition> out;
    for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it) {
        Partition lambda = *it;
        if (is_attainable(lambda)) out.push_back(std::move(lambda));
    }
    return out;
}

/// a(0..upto) and z0(0..upto) computed in one enumeration sweep.
struct CountsTable {
    std::uint64_t upto = 0;
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> z0;
};

inline CountsTable counts_table(std::uint64_t upto) {
    CountsTable t;
    t.upto = upto;
    t.a.assign(upto + 1, 0);
    t.z0.assign(upto + 1, 0);
    t.a[0] = t.z0[0] = 1;
    for (std::uint64_t n = 1; n <= upto; ++n) {
        for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it) {
            mpz_class c = cyclicity_index(*it);
            if (c >= 0) ++t.a[n];
            if (c == 0) ++t.z0[n];
        }
    }
    return t;
}

/// a(n): number of attainable partitions of n; a(0) = 1.
inline std::uint64_t count_attainable(std::uint64_t n) {
    if (n == 0) return 1;
    std::uint64_t count = 0;
    for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it)
        if (is_attainable(*it)) ++count;
    return count;
}

/// z0(n): number of partitions of n with cyclicity index 0; z0(0) = 1.
/// Vanishes for odd n.
inline std::uint64_t count_zero_cyclicity(std::uint64_t n) {
    if (n == 0) return 1;
    std::uint64_t count = 0;
    for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it)
        if (cyclicity_index(*it) == 0) ++count;
    return count;
}

/// z(m) = z0(2m), the number of partitions of m into triangular numbers.
inline std::uint64_t count_z(std::uint64_t m) { return count_zero_cyclicity(2 * m); }

}  // namespace attainable
