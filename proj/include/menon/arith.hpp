#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "menon/error.hpp"

namespace menon {

using Int = mpz_class;
using Rat = mpq_class;

/// gcd with the convention gcd(d, 0) = d; arguments may be negative.
inline int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

/// Canonical representative of a modulo n in [0, n).
inline int64_t mod_reduce(int64_t a, int64_t n) {
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

/// Compact, locale-independent rendering used in labels ("0.5", "2", "-1.25").
inline std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

inline Int int_pow(int64_t base, int64_t e) {
    if (e < 0) throw std::domain_error("int_pow: exponent must be nonnegative");
    Int b(static_cast<long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// base^e as an exact rational; e may be negative (base != 0 then).
inline Rat rat_pow(int64_t base, int64_t e) {
    if (e >= 0) return Rat(int_pow(base, e));
    Rat r(Int(1), int_pow(base, -e));
    r.canonicalize();
    return r;
}

namespace detail {

inline const std::vector<int32_t>& small_primes() {
    // enough for trial division of any n <= 2^32
    static const std::vector<int32_t> primes = [] {
        constexpr int32_t bound = 1 << 16;
        std::vector<bool> composite(bound + 1, false);
        std::vector<int32_t> out;
        for (int32_t i = 2; i <= bound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (int64_t j = int64_t(i) * i; j <= bound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

} // namespace detail

/// Prime-exponent decomposition of a positive integer.
struct factorization {
    int64_t value = 1;
    std::vector<std::pair<int64_t, int>> parts; // (prime, exponent), primes ascending

    int exponent_of(int64_t p) const {
        for (const auto& [q, e] : parts)
            if (q == p) return e;
        return 0;
    }
};

/// Deterministic trial division; supports n up to 2^32.
inline factorization factorize(int64_t n) {
    if (n <= 0) throw std::domain_error("factorize: n must be positive");
    factorization f;
    f.value = n;
    int64_t rest = n;
    for (int32_t p : detail::small_primes()) {
        if (int64_t(p) * p > rest) break;
        if (rest % p == 0) {
            int e = 0;
            while (rest % p == 0) { rest /= p; ++e; }
            f.parts.emplace_back(p, e);
        }
    }
    if (rest > 1) {
        if (rest > (int64_t(1) << 32))
            throw std::domain_error("factorize: n exceeds the trial-division range");
        f.parts.emplace_back(rest, 1);
    }
    return f;
}

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    auto f = factorize(n);
    return f.parts.size() == 1 && f.parts[0].second == 1;
}

/// A p-adic valuation value: a nonnegative integer or infinity (valuation of 0).
class extended_nat {
public:
    extended_nat(int64_t v) : v_(v), inf_(false) {}
    static extended_nat infinity() {
        extended_nat e(0);
        e.inf_ = true;
        return e;
    }

    bool is_infinite() const { return inf_; }
    int64_t value() const {
        if (inf_) throw std::domain_error("extended_nat: infinite valuation has no finite value");
        return v_;
    }

    extended_nat operator+(int64_t c) const { return inf_ ? *this : extended_nat(v_ + c); }

    friend bool operator==(const extended_nat& a, const extended_nat& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator<(const extended_nat& a, const extended_nat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const extended_nat& a, const extended_nat& b) { return a < b || a == b; }
    friend bool operator>(const extended_nat& a, const extended_nat& b) { return b < a; }
    friend bool operator>=(const extended_nat& a, const extended_nat& b) { return b <= a; }

    std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

private:
    int64_t v_;
    bool inf_;
};

/// nu_p(n); nu_p(0) is infinite. p must be prime.
inline extended_nat valuation(int64_t n, int64_t p) {
    if (!is_prime(p)) throw std::domain_error("valuation: p must be prime");
    if (n < 0) n = -n;
    if (n == 0) return extended_nat::infinity();
    int64_t v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return extended_nat(v);
}

/// All divisors of n, ascending.
inline std::vector<int64_t> divisors(int64_t n) {
    auto f = factorize(n);
    std::vector<int64_t> out{1};
    for (const auto& [p, e] : f.parts) {
        const size_t m = out.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < m; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int moebius(int64_t n) {
    auto f = factorize(n);
    for (const auto& [p, e] : f.parts)
        if (e > 1) return 0;
    return f.parts.size() % 2 == 0 ? 1 : -1;
}

inline bool is_squarefree(int64_t n) {
    auto f = factorize(n);
    for (const auto& [p, e] : f.parts)
        if (e > 1) return false;
    return true;
}

inline int64_t euler_phi(int64_t n) {
    auto f = factorize(n);
    int64_t r = n;
    for (const auto& [p, e] : f.parts) r = r / p * (p - 1);
    return r;
}

inline int64_t divisor_count(int64_t n) {
    auto f = factorize(n);
    int64_t t = 1;
    for (const auto& [p, e] : f.parts) t *= e + 1;
    return t;
}

/// Jordan function J_m(n) = n^m prod_{p|n} (1 - p^-m), exact for integer m.
/// m = 0 degenerates to [n = 1].
inline Rat jordan(int64_t m, int64_t n) {
    if (n <= 0) throw std::domain_error("jordan: n must be positive");
    auto f = factorize(n);
    Rat r = rat_pow(n, m);
    for (const auto& [p, e] : f.parts) r *= Rat(1) - rat_pow(p, -m);
    r.canonicalize();
    return r;
}

inline double jordan(double m, int64_t n) {
    if (n <= 0) throw std::domain_error("jordan: n must be positive");
    auto f = factorize(n);
    double r = std::pow(double(n), m);
    for (const auto& [p, e] : f.parts) r *= 1.0 - std::pow(double(p), -m);
    return r;
}

/// sigma_m(n) = sum of d^m over divisors d of n; exact for integer m.
inline Rat sigma(int64_t m, int64_t n) {
    if (n <= 0) throw std::domain_error("sigma: n must be positive");
    Rat r(0);
    for (int64_t d : divisors(n)) r += rat_pow(d, m);
    r.canonicalize();
    return r;
}

inline double sigma(double m, int64_t n) {
    if (n <= 0) throw std::domain_error("sigma: n must be positive");
    double r = 0.0;
    for (int64_t d : divisors(n)) r += std::pow(double(d), m);
    return r;
}

/// Inverse of a modulo m, canonical in [0, m); m = 1 yields 0.
inline int64_t mod_inverse(int64_t a, int64_t m) {
    if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    int64_t r0 = m, r1 = mod_reduce(a, m);
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw_error(errc::non_invertible,
                    std::to_string(a) + " has no inverse mod " + std::to_string(m));
    return mod_reduce(t0, m);
}

/// Ramanujan sum c_n(k) = sum_{delta | (n,k)} delta * mu(n/delta); integer valued.
inline Int ramanujan_sum(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("ramanujan_sum: n must be positive");
    int64_t g = gcd64(n, k);
    Int r = 0;
    for (int64_t d : divisors(g)) r += Int(d) * moebius(n / d);
    return r;
}

} // namespace menon
