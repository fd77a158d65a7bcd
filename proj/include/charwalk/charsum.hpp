#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "charwalk/arith.hpp"
#include "charwalk/rational.hpp"

namespace charwalk {

namespace detail {

inline void require_odd_prime(std::uint64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime_trial(p))
        throw std::invalid_argument(std::string(who) + ": argument must be an odd prime");
}

inline void require_eps(const Rational& eps, const char* who) {
    if (eps.sign() <= 0 || Rational(1) < eps)
        throw std::invalid_argument(std::string(who) + ": epsilon must lie in (0, 1]");
}

// S < eps * ell, compared exactly by cross-multiplication
inline bool below_barrier(std::int64_t s, std::uint64_t ell, const Rational& eps) {
    return static_cast<int128>(s) * eps.den() < eps.num() * static_cast<int128>(ell);
}

// quadratic-residue bitmap: bit n set iff n is a nonzero square mod p
inline std::vector<bool> residue_bitmap(std::uint64_t p) {
    std::vector<bool> qr(p, false);
    for (std::uint64_t r = 1; r <= (p - 1) / 2; ++r) qr[r * r % p] = true;
    return qr;
}

} // namespace detail

// One period of the character walk mod p: S_0..S_p plus its extrema.
struct CharacterProfile {
    std::uint64_t p = 0;
    std::vector<std::int32_t> partial_sums; // S_0 .. S_p
    std::int64_t max_partial = 0;           // max over 1 <= r <= p
    std::int64_t max_abs_partial = 0;

    std::int32_t chi(std::uint64_t n) const {
        std::uint64_t r = n % p;
        if (r == 0) return 0;
        return partial_sums[r] - partial_sums[r - 1];
    }
};

// Builds the full period from a quadratic-residue bitmap (one modular
// multiplication per residue instead of a Jacobi evaluation per value).
inline CharacterProfile build_profile(std::uint64_t p) {
    detail::require_odd_prime(p, "build_profile");
    CharacterProfile prof;
    prof.p = p;
    prof.partial_sums.resize(p + 1);
    std::vector<bool> qr = detail::residue_bitmap(p);
    std::int32_t s = 0;
    prof.partial_sums[0] = 0;
    for (std::uint64_t n = 1; n < p; ++n) {
        s += qr[n] ? 1 : -1;
        prof.partial_sums[n] = s;
        if (s > prof.max_partial) prof.max_partial = s;
        if (std::abs(static_cast<std::int64_t>(s)) > prof.max_abs_partial)
            prof.max_abs_partial = std::abs(static_cast<std::int64_t>(s));
    }
    prof.partial_sums[p] = s; // chi(p) = 0
    return prof;
}

// S_ell for arbitrary ell >= 0 via periodicity: S_ell = S_{ell mod p}.
inline std::int64_t extend_sum(const CharacterProfile& prof, std::uint64_t ell) {
    return prof.partial_sums[ell % prof.p];
}

// Least ell >= 1 with S_ell < eps*ell. Always in [2, p] for eps <= 1.
inline std::uint64_t first_passage(const CharacterProfile& prof, const Rational& eps) {
    detail::require_eps(eps, "first_passage");
    for (std::uint64_t ell = 1; ell <= prof.p; ++ell)
        if (detail::below_barrier(prof.partial_sums[ell], ell, eps)) return ell;
    throw std::logic_error("first_passage: no crossing within one period (broken profile)");
}

// 1 + the largest ell with S_ell >= eps*ell. Because S is bounded by
// max_partial, violations can only occur for ell <= max_partial/eps, which
// replaces the non-effective analytic cutoff with an exact one.
inline std::uint64_t eventual_time(const CharacterProfile& prof, const Rational& eps) {
    detail::require_eps(eps, "eventual_time");
    uint128 bound =
        static_cast<uint128>(prof.max_partial) * static_cast<uint128>(eps.den()) / static_cast<uint128>(eps.num());
    std::uint64_t last = 0;
    for (std::uint64_t ell = 1; ell <= bound; ++ell)
        if (!detail::below_barrier(extend_sum(prof, ell), ell, eps)) last = ell;
    return last + 1;
}

// max_t |S_t| relative to sqrt(p) log p (natural log). Report-only value.
inline double pv_ratio(std::uint64_t p, std::int64_t max_abs_partial) {
    return static_cast<double>(max_abs_partial) /
           (std::sqrt(static_cast<double>(p)) * std::log(static_cast<double>(p)));
}

inline double pv_ratio(const CharacterProfile& prof) { return pv_ratio(prof.p, prof.max_abs_partial); }

// First-passage/eventual-time record for one prime.
struct PassageRecord {
    std::uint64_t p = 0;
    Rational epsilon;
    std::uint64_t first_passage = 0;
    std::uint64_t eventual_time = 0;
};

// Full-period statistics computed in a single streaming pass over the
// residue bitmap, without materializing S_0..S_p. Used wherever the prime
// is too large (or there are too many primes) to keep profiles around.
struct PassageSummary {
    std::uint64_t p = 0;
    std::uint64_t first_passage = 0;
    std::uint64_t eventual_time = 0;
    std::int64_t max_partial = 0;
    std::int64_t max_abs_partial = 0;
};

inline PassageSummary scan_passage(std::uint64_t p, const Rational& eps) {
    detail::require_odd_prime(p, "scan_passage");
    detail::require_eps(eps, "scan_passage");
    std::vector<bool> qr = detail::residue_bitmap(p);

    PassageSummary out;
    out.p = p;
    std::int64_t s = 0;
    std::uint64_t last_violation = 0;
    for (std::uint64_t ell = 1; ell <= p; ++ell) {
        std::uint64_t r = ell % p;
        if (r != 0) s += qr[r] ? 1 : -1;
        if (s > out.max_partial) out.max_partial = s;
        if (std::abs(s) > out.max_abs_partial) out.max_abs_partial = std::abs(s);
        if (detail::below_barrier(s, ell, eps)) {
            if (out.first_passage == 0) out.first_passage = ell;
        } else {
            last_violation = ell;
        }
    }
    // beyond one period the walk repeats; violations need eps*ell <= max_partial
    uint128 bound =
        static_cast<uint128>(out.max_partial) * static_cast<uint128>(eps.den()) / static_cast<uint128>(eps.num());
    s = 0; // S_{ell mod p} tracked incrementally, wrapping at multiples of p
    for (std::uint64_t ell = p + 1; ell <= bound; ++ell) {
        std::uint64_t r = ell % p;
        if (r == 0)
            s = 0;
        else
            s += qr[r] ? 1 : -1;
        if (!detail::below_barrier(s, ell, eps)) last_violation = ell;
    }
    out.eventual_time = last_violation + 1;
    return out;
}

// f_eps(p) by direct walking with Jacobi evaluations; O(f) symbol calls,
// no per-prime allocation. The workhorse for averages over many primes.
inline std::uint64_t first_passage_walk(std::uint64_t p, const Rational& eps) {
    std::int64_t s = 0;
    for (std::uint64_t ell = 1;; ++ell) {
        s += jacobi(static_cast<std::int64_t>(ell), p);
        if (detail::below_barrier(s, ell, eps)) return ell;
    }
}

// Whether f_eps(p) > m, walking at most min(m, p) steps.
inline bool first_passage_exceeds(std::uint64_t p, const Rational& eps, std::uint64_t m) {
    if (m >= p) return false; // f <= p always
    std::int64_t s = 0;
    for (std::uint64_t ell = 1; ell <= m; ++ell) {
        s += jacobi(static_cast<std::int64_t>(ell), p);
        if (detail::below_barrier(s, ell, eps)) return false;
    }
    return true;
}

// S_ell(p) for arbitrary ell without a stored profile: walks ell mod p steps.
inline std::int64_t partial_sum_walk(std::uint64_t p, std::uint64_t ell) {
    std::uint64_t r = ell % p;
    std::int64_t s = 0;
    for (std::uint64_t n = 1; n <= r; ++n) s += jacobi(static_cast<std::int64_t>(n), p);
    return s;
}

inline PassageRecord make_passage_record(std::uint64_t p, const Rational& eps) {
    PassageSummary sum = scan_passage(p, eps);
    return PassageRecord{p, eps, sum.first_passage, sum.eventual_time};
}

} // namespace charwalk
