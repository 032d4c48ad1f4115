#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace attainable {

/// Dense truncated power series with exact integer coefficients.
/// coefficient(i) is the coefficient of q^i for 0 <= i <= truncation().
class PowerSeries {
public:
    explicit PowerSeries(std::uint64_t truncation)
        : coeffs_(truncation + 1, mpz_class(0)) {}

    explicit PowerSeries(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("PowerSeries: needs at least the constant term");
    }

    static PowerSeries one(std::uint64_t truncation) {
        PowerSeries s(truncation);
        s.coeffs_[0] = 1;
        return s;
    }

    std::uint64_t truncation() const { return coeffs_.size() - 1; }

    mpz_class const& operator[](std::uint64_t i) const { return coeffs_.at(i); }
    mpz_class& operator[](std::uint64_t i) { return coeffs_.at(i); }

    std::vector<mpz_class> const& coefficients() const { return coeffs_; }

    /// Prefix of this series truncated at n <= truncation().
    PowerSeries restricted(std::uint64_t n) const {
        if (n > truncation())
            throw std::invalid_argument("PowerSeries::restricted: cannot extend");
        return PowerSeries(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + n + 1));
    }

    /// In-place multiplication by 1/(1 - q^k) via the prefix recurrence
    /// c[j] += c[j - k]; O(N) per factor.
    void divide_by_one_minus_qk(std::uint64_t k) {
        if (k == 0)
            throw std::invalid_argument("divide_by_one_minus_qk: k must be positive");
        for (std::uint64_t j = k; j < coeffs_.size(); ++j)
            coeffs_[j] += coeffs_[j - k];
    }

    friend bool operator==(PowerSeries const&, PowerSeries const&) = default;

private:
    std::vector<mpz_class> coeffs_;
};

/// Truncated Cauchy product. Both operands must share a truncation.
inline PowerSeries multiply(PowerSeries const& f, PowerSeries const& g) {
    if (f.truncation() != g.truncation())
        throw std::invalid_argument("multiply: mismatched truncations");
    std::uint64_t n = f.truncation();
    PowerSeries h(n);
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (std::uint64_t j = 0; i + j <= n; ++j) {
            if (g[j] == 0) continue;
            h[i + j] += f[i] * g[j];
        }
    }
    return h;
}

/// The geometric factor 1/(1 - q^k): coefficient 1 at multiples of k.
inline PowerSeries inverse_one_minus_qk(std::uint64_t k, std::uint64_t truncation) {
    if (k == 0)
        throw std::invalid_argument("inverse_one_minus_qk: k must be positive");
    PowerSeries s(truncation);
    for (std::uint64_t j = 0; j <= truncation; j += k) s[j] = 1;
    return s;
}

/// Generating function of the attainable-partition counts a(n):
///   A(q) = 1/(1-q) * prod_{i>=1} 1/(1 - q^{i(i+1)}).
/// Only factors with i(i+1) <= N can touch the retained coefficients.
inline PowerSeries attainable_series(std::uint64_t N) {
    PowerSeries s = PowerSeries::one(N);
    s.divide_by_one_minus_qk(1);
    for (std::uint64_t i = 1; i * (i + 1) <= N; ++i)
        s.divide_by_one_minus_qk(i * (i + 1));
    return s;
}

/// Generating function of z0(n), the number of partitions of n with
/// cyclicity index 0: prod_{i>=1} 1/(1 - q^{i(i+1)}). Odd coefficients vanish.
inline PowerSeries zero_cyclicity_series(std::uint64_t N) {
    PowerSeries s = PowerSeries::one(N);
    for (std::uint64_t i = 1; i * (i + 1) <= N; ++i)
        s.divide_by_one_minus_qk(i * (i + 1));
    return s;
}

/// Generating function of z(m), the number of partitions of m into
/// triangular numbers: prod_{i>=1} 1/(1 - q^{i(i+1)/2}).
inline PowerSeries triangular_series(std::uint64_t N) {
    PowerSeries s = PowerSeries::one(N);
    for (std::uint64_t i = 1; i * (i + 1) / 2 <= N; ++i)
        s.divide_by_one_minus_qk(i * (i + 1) / 2);
    return s;
}

}  // namespace attainable
