#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charwalk/rational.hpp"

namespace charwalk {

// All primes up to a limit, sieved segment by segment so the working set
// stays at one bitmap per segment. Immutable once built; lookups are
// binary searches over the sorted prime list.
class PrimeTable {
public:
    static constexpr std::uint64_t kSegmentOdds = 1u << 19; // odd numbers per segment

    explicit PrimeTable(std::uint64_t limit) : limit_(limit) {
        if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
        sieve();
    }

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    // pi(t) for t <= limit
    std::uint64_t count_upto(std::uint64_t t) const {
        check_range(t);
        auto it = std::upper_bound(primes_.begin(), primes_.end(), t);
        return static_cast<std::uint64_t>(it - primes_.begin());
    }

    // pi_odd(t) = pi(t) - 1 for t >= 2
    std::uint64_t count_odd_upto(std::uint64_t t) const {
        std::uint64_t c = count_upto(t);
        return t >= 2 ? c - 1 : 0;
    }

    bool contains(std::uint64_t n) const {
        check_range(n);
        return std::binary_search(primes_.begin(), primes_.end(), n);
    }

private:
    void check_range(std::uint64_t t) const {
        if (t > limit_) throw std::out_of_range("PrimeTable: query beyond sieve limit");
    }

    void sieve() {
        primes_.push_back(2);
        if (limit_ < 3) return;

        // small primes up to sqrt(limit), simple sieve, odd only
        std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit_))) + 1;
        while (root * root > limit_) --root;
        std::vector<bool> small(root / 2 + 1, true); // index i <-> odd 2i+1
        for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= root; ++i) {
            if (!small[i]) continue;
            std::uint64_t p = 2 * i + 1;
            for (std::uint64_t j = (p * p) / 2; j < small.size(); j += p) small[j] = false;
        }
        std::vector<std::uint64_t> small_odd_primes;
        for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i)
            if (small[i]) small_odd_primes.push_back(2 * i + 1);

        std::vector<bool> seg(kSegmentOdds);
        for (std::uint64_t low = 3; low <= limit_; low += 2 * kSegmentOdds) {
            std::uint64_t high = std::min(limit_, low + 2 * kSegmentOdds - 2);
            std::fill(seg.begin(), seg.end(), true);
            for (std::uint64_t p : small_odd_primes) {
                if (p * p > high) break;
                std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
                if (start % 2 == 0) start += p;
                for (std::uint64_t v = start; v <= high; v += 2 * p) seg[(v - low) / 2] = false;
            }
            for (std::uint64_t v = low; v <= high; v += 2)
                if (seg[(v - low) / 2]) primes_.push_back(v);
        }
    }

    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

inline PrimeTable sieve_primes(std::uint64_t limit) { return PrimeTable(limit); }

// Jacobi symbol (n | k) for odd k >= 1, by the binary reciprocity algorithm.
// Negative n is reduced into [0, k); for odd k the symbol is periodic in n.
inline int jacobi(std::int64_t n, std::uint64_t k) {
    if (k == 0 || k % 2 == 0) throw std::invalid_argument("jacobi: lower argument must be odd and positive");
    std::uint64_t a;
    if (n < 0) {
        std::uint64_t r = static_cast<std::uint64_t>(-(n + 1)) + 1; // |n| without UB at INT64_MIN
        a = k - 1 - (r - 1) % k;
    } else {
        a = static_cast<std::uint64_t>(n) % k;
    }
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            std::uint64_t k8 = k & 7;
            if (k8 == 3 || k8 == 5) t = -t;
        }
        std::swap(a, k);
        if ((a & 3) == 3 && (k & 3) == 3) t = -t;
        a %= k;
    }
    return k == 1 ? t : 0;
}

// Kronecker symbol (d | n): extends Jacobi to even and negative n with the
// usual conventions ((d|0)=[|d|=1], (d|2) by the mod-8 rule, (d|-1)=sgn d).
inline int kronecker(std::int64_t d, std::int64_t n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    int t = 1;
    std::uint64_t m;
    if (n < 0) {
        if (d < 0) t = -t;
        m = static_cast<std::uint64_t>(-(n + 1)) + 1;
    } else {
        m = static_cast<std::uint64_t>(n);
    }
    if (m % 2 == 0) {
        if (d % 2 == 0) return 0;
        unsigned shifts = 0;
        while (m % 2 == 0) {
            m >>= 1;
            ++shifts;
        }
        if (shifts & 1) {
            std::int64_t d8 = ((d % 8) + 8) % 8;
            if (d8 == 3 || d8 == 5) t = -t;
        }
    }
    return t * jacobi(d, m);
}

// p* = (-1)^((p-1)/2) p, the signed prime discriminant.
inline std::int64_t p_star(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p_star: argument must be an odd prime");
    return p % 4 == 1 ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<uint128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Legendre symbol by Euler's criterion n^((p-1)/2) mod p. Kept as an
// independent oracle for jacobi(); too slow for bulk use.
inline int euler_criterion(std::int64_t n, std::uint64_t p) {
    if (p < 3 || !is_prime_trial(p)) throw std::invalid_argument("euler_criterion: modulus must be an odd prime");
    std::uint64_t a;
    if (n < 0) {
        std::uint64_t r = static_cast<std::uint64_t>(-(n + 1)) + 1;
        a = p - 1 - (r - 1) % p;
    } else {
        a = static_cast<std::uint64_t>(n) % p;
    }
    if (a == 0) return 0;
    std::uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

struct DivisorCounts {
    std::uint64_t d2; // number of divisors
    std::uint64_t d3; // ordered factorizations into three parts
};

// d(u) = prod (e+1), d_3(u) = prod C(e+2, 2) over the prime factorization.
inline DivisorCounts divisor_counts(std::uint64_t u) {
    if (u == 0) throw std::invalid_argument("divisor_counts: argument must be positive");
    DivisorCounts r{1, 1};
    auto absorb = [&r](std::uint64_t e) {
        r.d2 *= e + 1;
        r.d3 *= (e + 1) * (e + 2) / 2;
    };
    std::uint64_t e = 0;
    while (u % 2 == 0) {
        u /= 2;
        ++e;
    }
    if (e) absorb(e);
    for (std::uint64_t d = 3; d * d <= u; d += 2) {
        if (u % d) continue;
        e = 0;
        while (u % d == 0) {
            u /= d;
            ++e;
        }
        absorb(e);
    }
    if (u > 1) absorb(1);
    return r;
}

// Smallest-prime-factor table: spf[n] is the least prime dividing n (spf[1]=1).
inline std::vector<std::uint32_t> smallest_factor_table(std::uint32_t n) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) spf[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square_u64(std::uint64_t n) {
    std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

inline std::vector<std::uint32_t> primes_upto_small(std::uint32_t m) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= m; ++q)
        if (is_prime_trial(q)) out.push_back(q);
    return out;
}

} // namespace charwalk
