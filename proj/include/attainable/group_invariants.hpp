#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "attainable/enumerate.hpp"
#include "attainable/partition.hpp"

namespace attainable {

/// Deterministic trial division; intended for desk-scale p.
inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline bool is_odd_prime(std::uint64_t p) { return p >= 3 && is_prime(p); }

/// The abelian p-group (Z/p^{n1}) x ... x (Z/p^{nr}) named by an odd prime
/// p and a partition lambda; |G| = p^n with n = |lambda|.
struct PGroupShape {
    std::uint64_t p;
    Partition lambda;

    PGroupShape(std::uint64_t p_, Partition lambda_) : p(p_), lambda(std::move(lambda_)) {
        if (!is_odd_prime(p))
            throw std::invalid_argument("PGroupShape: p must be an odd prime");
        if (lambda.empty())
            throw std::invalid_argument("PGroupShape: empty partition");
    }
};

/// Multiplicities of the distinct parts, in order of first appearance:
/// (3,1,1) -> {(3,1), (1,2)}.
inline std::vector<std::pair<part_t, std::uint64_t>> distinct_part_multiplicities(
    Partition const& lambda) {
    std::vector<std::pair<part_t, std::uint64_t>> out;
    for (part_t p : lambda.parts()) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

/// |Aut(G)| = p^{2n - c(lambda)} * prod_i prod_{j=1..m_i} (1 - p^{-j}),
/// where m_i is the multiplicity of the i-th distinct part. Evaluated
/// exactly by clearing denominators:
///   p^{2n - c - sum_i m_i(m_i+1)/2} * prod_i prod_{j=1..m_i} (p^j - 1).
inline mpz_class aut_order(PGroupShape const& shape) {
    std::uint64_t n = shape.lambda.sum();
    mpz_class c = cyclicity_index(shape.lambda);
    mpz_class exponent = 2 * mpz_class(static_cast<unsigned long>(n)) - c;
    mpz_class product = 1;
    mpz_class p(static_cast<unsigned long>(shape.p));
    for (auto const& [part, mult] : distinct_part_multiplicities(shape.lambda)) {
        exponent -= mpz_class(static_cast<unsigned long>(mult)) *
                    static_cast<unsigned long>(mult + 1) / 2;
        mpz_class pj = 1;
        for (std::uint64_t j = 1; j <= mult; ++j) {
            pj *= p;
            product *= pj - 1;
        }
    }
    if (exponent < 0 || !exponent.fits_ulong_p())
        throw std::domain_error("aut_order: exponent out of range");
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), exponent.get_ui());
    return power * product;
}

/// Cohen-Lenstra weight P(G) = (1/|Aut G|) / sum_{G' of the same order}
/// (1/|Aut G'|), with the sum over all partitions of n. Exact rational.
inline mpq_class cohen_lenstra_weight(PGroupShape const& shape) {
    std::uint64_t n = shape.lambda.sum();
    mpq_class denom = 0;
    for (auto it = partitions(n).begin(); it != std::default_sentinel; ++it) {
        mpq_class term(mpz_class(1), aut_order(PGroupShape(shape.p, *it)));
        term.canonicalize();
        denom += term;
    }
    mpq_class numer(mpz_class(1), aut_order(shape));
    numer.canonicalize();
    mpq_class w = numer / denom;
    w.canonicalize();
    return w;
}

/// Exponent in P(G_lambda(p)) ~ p^{c(lambda) - n}.
inline mpz_class weight_asymptotic_exponent(Partition const& lambda) {
    if (lambda.empty())
        throw std::invalid_argument("weight_asymptotic_exponent: empty partition");
    return cyclicity_index(lambda) - mpz_class(static_cast<unsigned long>(lambda.sum()));
}

/// The constant in the predicted counts; an empirical value, configurable
/// by callers.
inline constexpr double default_prediction_constant = 11.317;

/// Heuristic count of fundamental discriminants with class group
/// G_lambda(p) when c(lambda) > 0:  (C/n) * p^c / log p.
/// Returns nullopt when c(lambda) < 0: the group is expected for only
/// finitely many primes, so no count is predicted. Rejects c(lambda) = 0,
/// where only the cumulative form below is meaningful.
inline std::optional<double> predicted_count(PGroupShape const& shape,
                                             double constant = default_prediction_constant) {
    mpz_class c = cyclicity_index(shape.lambda);
    if (c == 0)
        throw std::invalid_argument(
            "predicted_count: cyclicity index 0; use predicted_cumulative");
    if (c < 0) return std::nullopt;
    double n = static_cast<double>(shape.lambda.sum());
    double p = static_cast<double>(shape.p);
    return (constant / n) * std::pow(p, c.get_d()) / std::log(p);
}

/// Heuristic cumulative count over primes p <= x for c(lambda) = 0:
/// (C/n) * x / (log x)^2.
inline double predicted_cumulative(Partition const& lambda, double x,
                                   double constant = default_prediction_constant) {
    if (lambda.empty() || cyclicity_index(lambda) != 0)
        throw std::invalid_argument("predicted_cumulative: cyclicity index must be 0");
    if (!(x > 1.0))
        throw std::invalid_argument("predicted_cumulative: x must exceed 1");
    double n = static_cast<double>(lambda.sum());
    double lx = std::log(x);
    return (constant / n) * x / (lx * lx);
}

}  // namespace attainable
