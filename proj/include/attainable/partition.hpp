#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace attainable {

using part_t = std::uint64_t;

/// An integer partition in canonical form: parts are positive and weakly
/// decreasing. The default-constructed value is the empty partition of 0;
/// it exists only so the counting code can express the conventions
/// a(0) = z0(0) = 1, and every non-counting operation rejects it.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes on construction: sorts descending, rejects zero parts.
    explicit Partition(std::vector<part_t> parts) : parts_(std::move(parts)) {
        for (part_t p : parts_)
            if (p == 0)
                throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    /// Validating pass-through for callers that already hold a weakly
    /// decreasing list (enumeration buffers); O(r) instead of a sort.
    static Partition from_descending(std::vector<part_t> parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] == 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("Partition: parts not weakly decreasing");
        }
        Partition lambda;
        lambda.parts_ = std::move(parts);
        return lambda;
    }

    std::span<const part_t> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// The partitioned integer n = sum of parts.
    std::uint64_t sum() const {
        std::uint64_t s = 0;
        for (part_t p : parts_) s += p;
        return s;
    }

    part_t part(std::size_t i) const { return parts_.at(i); }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;

    friend std::ostream& operator<<(std::ostream& os, Partition const& lambda) {
        return os << '(' << lambda.to_string() << ')';
    }

private:
    std::vector<part_t> parts_;
};

/// c(lambda) = sum over i of (3 - 2i) * n_i, parts indexed from 1.
/// Signed and exact; magnitude can reach 1 - (n-1)^2, hence the wide type.
inline mpz_class cyclicity_index(Partition const& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("cyclicity_index: empty partition");
    mpz_class c = 0;
    mpz_class coeff = 1;  // 3 - 2i for i = 1
    for (part_t p : lambda.parts()) {
        c += coeff * static_cast<unsigned long>(p);
        coeff -= 2;
    }
    return c;
}

inline bool is_attainable(Partition const& lambda) {
    return cyclicity_index(lambda) >= 0;
}

/// (n1, n2, ..., nr) -> (n1 + 1, n2, ..., nr). Raises the cyclicity index by 1.
inline Partition primary_addition(Partition const& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("primary_addition: empty partition");
    std::vector<part_t> parts(lambda.parts().begin(), lambda.parts().end());
    ++parts.front();
    return Partition::from_descending(std::move(parts));
}

/// (n1, n2, ..., nr) -> (n1, n2 + 1, ..., nr), defined only when r >= 2 and
/// n1 != n2. Lowers the cyclicity index by 1.
inline Partition secondary_addition(Partition const& lambda) {
    if (lambda.length() < 2)
        throw std::invalid_argument("secondary_addition: needs at least two parts");
    if (lambda.part(0) == lambda.part(1))
        throw std::invalid_argument("secondary_addition: first two parts are equal");
    std::vector<part_t> parts(lambda.parts().begin(), lambda.parts().end());
    ++parts[1];
    return Partition::from_descending(std::move(parts));
}

/// Floor of the real square root, by pure-integer Newton iteration.
/// Exact at perfect-square boundaries; valid for n <= 2^64 - 2.
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n < 2) return n;
    std::uint64_t x = n;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

/// Greatest r with r(r-1) <= n; equals floor((sqrt(4n+1)+1)/2) and is
/// the maximal length of an attainable partition of n.
inline std::uint64_t max_attainable_length(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("max_attainable_length: n must be positive");
    std::uint64_t r = (1 + isqrt(4 * n + 1)) / 2;
    while (r > 1 && r * (r - 1) > n) --r;
    while ((r + 1) * r <= n) ++r;
    return r;
}

/// The maximal-length attainable partition (n - r + 1, 1, ..., 1) of n,
/// with r = max_attainable_length(n).
inline Partition extremal_long_partition(std::uint64_t n) {
    std::uint64_t r = max_attainable_length(n);
    std::vector<part_t> parts;
    parts.reserve(r);
    parts.push_back(n - r + 1);
    for (std::uint64_t i = 1; i < r; ++i) parts.push_back(1);
    return Partition::from_descending(std::move(parts));
}

/// The attainable partition of n with the smallest cyclicity index:
/// (m, m) for n = 2m (index 0), (m + 1, m) for n = 2m + 1 (index 1).
inline Partition min_cyclicity_partition(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("min_cyclicity_partition: n must be positive");
    if (n == 1) return Partition({1});
    std::uint64_t m = n / 2;
    if (n % 2 == 0) return Partition::from_descending({m, m});
    return Partition::from_descending({m + 1, m});
}

/// Upper bound n / (k(k-1)) on the k-th part of an attainable partition
/// of n, as an exact rational.
inline mpq_class part_bound(std::uint64_t n, std::uint64_t k) {
    if (k < 2)
        throw std::invalid_argument("part_bound: k must be at least 2");
    mpq_class q(mpz_class(static_cast<unsigned long>(n)),
                mpz_class(static_cast<unsigned long>(k)) * static_cast<unsigned long>(k - 1));
    q.canonicalize();
    return q;
}

}  // namespace attainable
