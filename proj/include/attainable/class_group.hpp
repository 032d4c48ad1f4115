#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "attainable/group_invariants.hpp"
#include "attainable/partition.hpp"

namespace attainable {

/// Positive-definite integral binary quadratic form a x^2 + b xy + c y^2
/// with a > 0 and discriminant b^2 - 4ac < 0.
class QuadForm {
public:
    QuadForm(mpz_class a, mpz_class b, mpz_class c)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (a_ <= 0)
            throw std::invalid_argument("QuadForm: leading coefficient must be positive");
        if (discriminant() >= 0)
            throw std::invalid_argument("QuadForm: discriminant must be negative");
    }

    mpz_class const& a() const { return a_; }
    mpz_class const& b() const { return b_; }
    mpz_class const& c() const { return c_; }

    mpz_class discriminant() const { return b_ * b_ - 4 * a_ * c_; }

    /// |b| <= a <= c, with b >= 0 at either boundary tie.
    bool is_reduced() const {
        mpz_class ab = abs(b_);
        if (ab > a_ || a_ > c_) return false;
        if ((ab == a_ || a_ == c_) && b_ < 0) return false;
        return true;
    }

    std::string to_string() const {
        return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
    }

    friend bool operator==(QuadForm const& f, QuadForm const& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.c_ == g.c_;
    }
    friend bool operator<(QuadForm const& f, QuadForm const& g) {
        if (f.a_ != g.a_) return f.a_ < g.a_;
        if (f.b_ != g.b_) return f.b_ < g.b_;
        return f.c_ < g.c_;
    }

private:
    mpz_class a_, b_, c_;
};

/// The canonical reduced representative of the class of f.
inline QuadForm reduce(QuadForm const& f) {
    mpz_class a = f.a(), b = f.b(), c = f.c();
    mpz_class D = f.discriminant();
    auto normalize = [&]() {
        // bring b into (-a, a]; c follows from the discriminant
        mpz_class two_a = 2 * a;
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), b.get_mpz_t(), two_a.get_mpz_t());
        if (r > a) r -= two_a;
        b = r;
        c = (b * b - D) / (4 * a);
    };
    normalize();
    while (a > c) {
        std::swap(a, c);
        b = -b;
        normalize();
    }
    if (a == c && b < 0) b = -b;
    return QuadForm(a, b, c);
}

/// The identity class: (1, 0, |D|/4) or (1, 1, (1+|D|)/4) by parity of D.
inline QuadForm principal_form(mpz_class const& D) {
    if (D >= 0)
        throw std::invalid_argument("principal_form: discriminant must be negative");
    mpz_class sigma = mpz_odd_p(D.get_mpz_t()) ? 1 : 0;
    return QuadForm(1, sigma, (sigma - D) / 4);
}

inline bool is_principal(QuadForm const& f) { return reduce(f).a() == 1; }

/// The inverse class (a, -b, c), reduced.
inline QuadForm opposite(QuadForm const& f) {
    return reduce(QuadForm(f.a(), -f.b(), f.c()));
}

/*
 * Gauss composition via ideal multiplication. A form (a,b,c) corresponds
 * to the ideal with Z-basis [a, (-b + sqrt(D))/2]. Writing w = (s0 +
 * sqrt(D))/2 with s0 = D mod 2, so w^2 = (D - s0)/4 + s0*w, the product of
 * two such ideals is spanned over Z by
 *
 *     (a1*a2, 0), (a1*x2, a1), (a2*x1, a2), (x1*x2 + (D - s0)/4, -s)
 *
 * in the basis {1, w}, where xk = (-bk - s0)/2 and s = (b1 + b2)/2. Two
 * extended gcds give a combination with w-coefficient e = gcd(a1, a2, s);
 * clearing the other w-coefficients and taking a gcd yields the Hermite
 * form Z*N + Z*(v0 + e*w). Dividing by e gives the composite class:
 * A = N/e and B = -2*(v0/e) - s0, with C fixed by the discriminant.
 */
inline QuadForm compose(QuadForm const& lhs, QuadForm const& rhs) {
    if (lhs.discriminant() != rhs.discriminant())
        throw std::invalid_argument("compose: discriminants differ");
    QuadForm f = reduce(lhs), g = reduce(rhs);
    mpz_class D = f.discriminant();
    mpz_class s0 = mpz_odd_p(D.get_mpz_t()) ? 1 : 0;
    mpz_class wsq = (D - s0) / 4;

    mpz_class a1 = f.a(), a2 = g.a();
    mpz_class x1 = (-f.b() - s0) / 2;
    mpz_class x2 = (-g.b() - s0) / 2;
    mpz_class s = (f.b() + g.b()) / 2;

    mpz_class d0, u0, v0c;  // d0 = gcd(a1, a2) = u0*a1 + v0c*a2
    mpz_gcdext(d0.get_mpz_t(), u0.get_mpz_t(), v0c.get_mpz_t(), a1.get_mpz_t(),
               a2.get_mpz_t());
    mpz_class e, u1, t1;  // e = gcd(d0, s) = u1*d0 + t1*s
    mpz_gcdext(e.get_mpz_t(), u1.get_mpz_t(), t1.get_mpz_t(), d0.get_mpz_t(),
               s.get_mpz_t());

    // generator with w-coefficient e, combining columns 2..4 above
    mpz_class alpha = u1 * u0, beta = u1 * v0c, gamma = -t1;
    mpz_class g2x = a1 * x2, g3x = a2 * x1, g4x = x1 * x2 + wsq;
    mpz_class v0 = alpha * g2x + beta * g3x + gamma * g4x;

    // clear the w-coefficients of the remaining generators and collect N
    mpz_class n1 = a1 * a2;
    mpz_class n2 = g2x - (a1 / e) * v0;
    mpz_class n3 = g3x - (a2 / e) * v0;
    mpz_class n4 = g4x + (s / e) * v0;
    mpz_class N;
    mpz_gcd(N.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
    mpz_gcd(N.get_mpz_t(), N.get_mpz_t(), n3.get_mpz_t());
    mpz_gcd(N.get_mpz_t(), N.get_mpz_t(), n4.get_mpz_t());

    mpz_class A, r;
    mpz_tdiv_qr(A.get_mpz_t(), r.get_mpz_t(), N.get_mpz_t(), e.get_mpz_t());
    if (r != 0)
        throw std::logic_error("compose: module norm not divisible by content");
    mpz_class q;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v0.get_mpz_t(), e.get_mpz_t());
    if (r != 0)
        throw std::logic_error("compose: second basis coordinate not divisible");
    mpz_class B = -2 * q - s0;

    mpz_class BB = B * B - D;
    mpz_class C, r2;
    mpz_tdiv_qr(C.get_mpz_t(), r2.get_mpz_t(), BB.get_mpz_t(), mpz_class(4 * A).get_mpz_t());
    if (r2 != 0)
        throw std::logic_error("compose: discriminant congruence failed");
    return reduce(QuadForm(A, B, C));
}

/// f^exp under composition, square-and-multiply; exp >= 0.
inline QuadForm power(QuadForm const& f, mpz_class exp) {
    if (exp < 0)
        throw std::invalid_argument("power: exponent must be nonnegative");
    QuadForm result = principal_form(f.discriminant());
    QuadForm base = reduce(f);
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = compose(result, base);
        exp >>= 1;
        if (exp > 0) base = compose(base, base);
    }
    return result;
}

namespace detail {

/// Squarefree test by trial division; removes each prime once and checks
/// for a second factor.
inline bool is_squarefree(std::uint64_t m) {
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

/// D < 0 is fundamental iff D = 1 (mod 4) and squarefree, or D = 4m with
/// m = 2, 3 (mod 4) and m squarefree. Documented input limit |D| <= ~1e10
/// (squarefreeness by trial division).
inline bool is_fundamental_discriminant(std::int64_t D) {
    if (D >= 0)
        throw std::invalid_argument("is_fundamental_discriminant: D must be negative");
    std::int64_t m4 = ((D % 4) + 4) % 4;
    if (m4 == 1) return detail::is_squarefree(static_cast<std::uint64_t>(-D));
    if (m4 == 0) {
        std::int64_t m = D / 4;
        std::int64_t mm4 = ((m % 4) + 4) % 4;
        if (mm4 == 2 || mm4 == 3)
            return detail::is_squarefree(static_cast<std::uint64_t>(-m));
    }
    return false;
}

/// All reduced forms of discriminant D < 0: scan b = D (mod 2) with
/// 3b^2 <= |D|, then split (b^2 + |D|)/4 = a*c over divisors a in
/// [max(b,1), sqrt(.)]. Each strict |b| < a < c also yields (a,-b,c).
/// The principal form is always present. With require_fundamental unset,
/// any D = 0,1 (mod 4) is accepted.
inline std::vector<QuadForm> reduced_forms(std::int64_t D, bool require_fundamental = true) {
    if (D >= 0)
        throw std::invalid_argument("reduced_forms: D must be negative");
    std::int64_t m4 = ((D % 4) + 4) % 4;
    if (m4 != 0 && m4 != 1)
        throw std::invalid_argument("reduced_forms: D must be 0 or 1 mod 4");
    if (require_fundamental && !is_fundamental_discriminant(D))
        throw std::invalid_argument("reduced_forms: D is not fundamental");
    std::uint64_t absD = static_cast<std::uint64_t>(-D);
    std::vector<QuadForm> out;
    for (std::uint64_t b = absD % 2; 3 * b * b <= absD; b += 2) {
        std::uint64_t M = (b * b + absD) / 4;  // = a*c
        for (std::uint64_t a = b ? b : 1; a * a <= M; ++a) {
            if (M % a) continue;
            std::uint64_t c = M / a;
            out.emplace_back(mpz_class(static_cast<unsigned long>(a)),
                             mpz_class(static_cast<unsigned long>(b)),
                             mpz_class(static_cast<unsigned long>(c)));
            if (b != 0 && b != a && a != c)
                out.emplace_back(mpz_class(static_cast<unsigned long>(a)),
                                 -mpz_class(static_cast<unsigned long>(b)),
                                 mpz_class(static_cast<unsigned long>(c)));
        }
    }
    return out;
}

inline std::uint64_t class_number(std::int64_t D, bool require_fundamental = true) {
    return reduced_forms(D, require_fundamental).size();
}

/// Class group of discriminant D as abelian invariants: class number h and,
/// for each prime q | h, the partition lambda_q with q-Sylow subgroup
/// (Z/q^{l1}) x (Z/q^{l2}) x ...
struct ClassGroupStructure {
    std::int64_t D = 0;
    std::uint64_t h = 0;
    std::map<std::uint64_t, Partition> sylow;
};

namespace detail {

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        std::uint64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Recovers lambda_q from torsion counts over the full class list:
/// T_k = #{classes killed by q^k}; the number of parts >= k equals
/// log_q(T_k / T_{k-1}).
inline Partition sylow_partition(std::vector<QuadForm> const& forms, std::uint64_t q,
                                 std::uint64_t q_valuation) {
    mpz_class qz(static_cast<unsigned long>(q));
    std::uint64_t q_part = 1;
    for (std::uint64_t i = 0; i < q_valuation; ++i) q_part *= q;

    std::vector<QuadForm> cur = forms;
    std::vector<std::uint64_t> parts_ge;  // parts_ge[k-1] = #parts of lambda_q >= k
    std::uint64_t prev = 1;
    while (prev < q_part) {
        std::uint64_t killed = 0;
        for (auto& f : cur) {
            f = power(f, qz);
            if (f.a() == 1) ++killed;  // reduced principal form has a = 1
        }
        if (killed % prev != 0)
            throw std::logic_error("sylow_partition: torsion counts not nested");
        std::uint64_t ratio = killed / prev;
        std::uint64_t w = 0;
        while (ratio > 1) {
            if (ratio % q != 0)
                throw std::logic_error("sylow_partition: torsion ratio not a q-power");
            ratio /= q;
            ++w;
        }
        if (w == 0)
            throw std::logic_error("sylow_partition: torsion stalled below the q-part");
        parts_ge.push_back(w);
        prev = killed;
    }
    std::vector<part_t> parts;
    for (std::uint64_t j = 1; j <= parts_ge.front(); ++j) {
        part_t len = 0;
        for (std::uint64_t w : parts_ge)
            if (w >= j) ++len;
        parts.push_back(len);
    }
    return Partition::from_descending(std::move(parts));
}

}  // namespace detail

inline ClassGroupStructure class_group_structure(std::int64_t D) {
    auto forms = reduced_forms(D);
    ClassGroupStructure st;
    st.D = D;
    st.h = forms.size();
    for (auto const& [q, v] : detail::factorize(st.h))
        st.sylow.emplace(q, detail::sylow_partition(forms, q, v));
    return st;
}

/// Tallies from a scan of fundamental discriminants in [from, to]:
/// count per (p, lambda) of fields whose p-Sylow subgroup is G_lambda(p),
/// and a class-number histogram.
struct SurveyReport {
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::uint64_t scanned = 0;
    std::map<std::pair<std::uint64_t, Partition>, std::uint64_t> tallies;
    std::map<std::uint64_t, std::uint64_t> class_number_histogram;
};

/// Scans every fundamental discriminant in [d_min, d_max] (both negative).
/// A range with d_min > d_max is empty and produces an empty report.
/// Deterministic: per-discriminant work is independent and merged with
/// commutative tallying.
inline SurveyReport survey(std::int64_t d_min, std::int64_t d_max,
                           std::vector<std::uint64_t> const& primes, std::uint64_t n_max) {
    if (d_max >= 0 || d_min >= 0)
        throw std::invalid_argument("survey: discriminant range must be negative");
    for (std::uint64_t p : primes)
        if (!is_prime(p))
            throw std::invalid_argument("survey: " + std::to_string(p) + " is not prime");
    SurveyReport rep;
    rep.from = d_min;
    rep.to = d_max;
    for (std::int64_t D = d_max; D >= d_min; --D) {
        if (!is_fundamental_discriminant(D)) continue;
        auto st = class_group_structure(D);
        ++rep.scanned;
        ++rep.class_number_histogram[st.h];
        for (std::uint64_t p : primes) {
            auto it = st.sylow.find(p);
            if (it != st.sylow.end() && it->second.sum() <= n_max)
                ++rep.tallies[{p, it->second}];
        }
    }
    return rep;
}

}  // namespace attainable
