#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "menon/arith.hpp"
#include "menon/cyclo.hpp"
#include "menon/error.hpp"
#include "menon/even_function.hpp"

namespace menon {

/// Scalar-mode glue: exact evaluation works over Rat with cyclotomic
/// values, float evaluation over double with complex values.
template <class T>
struct modes;

template <>
struct modes<Rat> {
    using value = cyclotomic;
    static constexpr bool exact = true;
    static value zero(int64_t n) { return cyclotomic(n); }
    static value from_scalar(int64_t n, const Rat& q) { return cyclotomic::from_rational(n, q); }
    static value root(int64_t n, int64_t a) { return cyclotomic::root(n, a); }
    static value weighted(int64_t n, const std::vector<Rat>& w) {
        return cyclotomic::weighted_root_sum(n, w);
    }
    static value counted(int64_t n, const std::vector<int64_t>& c) {
        std::vector<Int> ci(c.begin(), c.end());
        return cyclotomic::counted_root_sum(n, ci);
    }
    static value promote(const value& z, int64_t n) {
        return z.modulus() == n ? z : z.embed(n);
    }
    static std::complex<double> approx(const value& z) { return z.to_complex(); }
    static bool equal(const value& a, const value& b, double) { return a == b; }
    static bool scalar_equal(const Rat& a, const Rat& b, double) { return a == b; }
};

template <>
struct modes<double> {
    using value = std::complex<double>;
    static constexpr bool exact = false;
    static value zero(int64_t) { return {0.0, 0.0}; }
    static value from_scalar(int64_t, double x) { return {x, 0.0}; }
    static value root(int64_t n, int64_t a) { return root_of_unity_f(n, a); }
    static value weighted(int64_t n, const std::vector<double>& w) {
        return weighted_root_sum_f(n, w);
    }
    static value counted(int64_t n, const std::vector<int64_t>& c) {
        value z{0.0, 0.0};
        for (int64_t j = 0; j < static_cast<int64_t>(c.size()); ++j)
            if (c[j] != 0) z += double(c[j]) * root_of_unity_f(n, j);
        return z;
    }
    static value promote(const value& z, int64_t) { return z; }
    static std::complex<double> approx(const value& z) { return z; }
    static bool equal(const value& a, const value& b, double tol) { return std::abs(a - b) <= tol; }
    static bool scalar_equal(double a, double b, double tol) { return std::abs(a - b) <= tol; }
};

template <class T>
using value_t = typename modes<T>::value;

/// One evaluation point: character index k and shift s, canonical mod n.
struct sum_instance {
    int64_t n = 1;
    int64_t k = 0;
    int64_t s = 0;
};

inline sum_instance make_instance(int64_t n, int64_t k, int64_t s) {
    if (n <= 0) throw std::domain_error("sum_instance: n must be positive");
    return {n, mod_reduce(k, n), mod_reduce(s, n)};
}

/// Deliberate single-fault variants of the closed forms, used to confirm
/// that verification sweeps detect seeded defects.
enum class mutation {
    none,
    negate_mobius,
    invert_scale,
    drop_coprime_filter,
    wrong_residue_inverse,
    truncate_divisors,
};

inline const char* mutation_name(mutation m) {
    switch (m) {
    case mutation::none: return "none";
    case mutation::negate_mobius: return "negate-mobius";
    case mutation::invert_scale: return "invert-scale";
    case mutation::drop_coprime_filter: return "drop-coprime-filter";
    case mutation::wrong_residue_inverse: return "wrong-residue-inverse";
    case mutation::truncate_divisors: return "truncate-divisors";
    }
    return "none";
}

inline mutation parse_mutation(const std::string& s) {
    for (mutation m : {mutation::none, mutation::negate_mobius, mutation::invert_scale,
                       mutation::drop_coprime_filter, mutation::wrong_residue_inverse,
                       mutation::truncate_divisors})
        if (s == mutation_name(m)) return m;
    throw_error(errc::config_invalid, "unknown mutation '" + s + "'");
}

/// witness_offset shifts every residue representative delta' by t * d; all
/// closed-form values must be invariant under it.
struct eval_options {
    mutation mut = mutation::none;
    int64_t witness_offset = 0;
};

namespace detail {

/// Representative delta' of the residue class with delta * delta' == s (mod d).
inline int64_t delta_prime(int64_t delta, int64_t d, int64_t s, const eval_options& o) {
    int64_t dp;
    if (o.mut == mutation::wrong_residue_inverse) {
        dp = mod_reduce(delta * s, d);
    } else {
        int64_t dm = mod_reduce(delta, d);
        if (gcd64(dm, d) != 1)
            dp = mod_reduce(s, d); // reachable only when the coprime filter is dropped
        else
            dp = mod_reduce(mod_inverse(dm, d) * s, d);
    }
    return dp + o.witness_offset * d;
}

inline int mutated_moebius(int64_t delta, const eval_options& o) {
    int mu = moebius(delta);
    return o.mut == mutation::negate_mobius ? -mu : mu;
}

inline bool coprime_filter(int64_t a, int64_t b, const eval_options& o) {
    return o.mut == mutation::drop_coprime_filter || gcd64(a, b) == 1;
}

/// Number of leading entries of a divisor list the mutated forms iterate.
inline size_t divisor_limit(size_t size, const eval_options& o) {
    if (o.mut != mutation::truncate_divisors) return size;
    return size == 0 ? 0 : size - 1;
}

inline void require_divides(int64_t d, int64_t n) {
    if (d <= 0 || n % d != 0)
        throw_error(errc::d_not_dividing,
                    "d = " + std::to_string(d) + " does not divide n = " + std::to_string(n));
}

} // namespace detail

/// True when nu_p(n) >= nu_p(k) + 2 for every prime p | n (vacuous at n = 1).
inline bool high_valuation_hypothesis(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("high_valuation_hypothesis: n must be positive");
    k = mod_reduce(k, n);
    for (const auto& [p, e] : factorize(n).parts)
        if (extended_nat(e) < valuation(k, p) + 2) return false;
    return true;
}

/// True when no prime p | n has nu_p(n) = nu_p(k) + 1, i.e. the valuation
/// splitting of n along k exists.
inline bool valuation_split_defined(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("valuation_split_defined: n must be positive");
    k = mod_reduce(k, n);
    for (const auto& [p, e] : factorize(n).parts) {
        extended_nat vk = valuation(k, p);
        if (!vk.is_infinite() && e == vk.value() + 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Restricted character sums T_n(k, s, d):
//     sum over a in [1, n], gcd(a, n) = 1, a == s (mod d), of zeta_n^(a k).
// ---------------------------------------------------------------------------

/// Definitional evaluation; the oracle for all closed forms below.
template <class T>
value_t<T> coset_sum(int64_t n, int64_t k, int64_t s, int64_t d) {
    if (n <= 0) throw std::domain_error("coset_sum: n must be positive");
    detail::require_divides(d, n);
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    std::vector<int64_t> counts(n, 0);
    for (int64_t a = 1; a <= n; ++a) {
        if (gcd64(a, n) != 1) continue;
        if (mod_reduce(a - s, d) != 0) continue;
        counts[a * k % n] += 1;
    }
    return modes<T>::counted(n, counts);
}

/// Closed form valid for every n, k, s, d | n:
///     T = (n/d) * sum over delta | n, (delta, d) = 1, (n/(d delta)) | k,
///         of (mu(delta)/delta) * zeta_n^(delta delta' k),
/// and T = 0 when (s, d) > 1.
template <class T>
value_t<T> coset_sum_closed(int64_t n, int64_t k, int64_t s, int64_t d,
                            const eval_options& opts = {}) {
    if (n <= 0) throw std::domain_error("coset_sum_closed: n must be positive");
    detail::require_divides(d, n);
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    if (gcd64(s, d) != 1) return modes<T>::zero(n);
    T scale = opts.mut == mutation::invert_scale ? T(d) / T(n) : T(n) / T(d);
    auto deltas = divisors(n);
    std::vector<T> w(n, T{});
    const size_t limit = detail::divisor_limit(deltas.size(), opts);
    for (size_t i = 0; i < limit; ++i) {
        int64_t delta = deltas[i];
        if (!detail::coprime_filter(delta, d, opts)) continue;
        if (n % (d * delta) != 0 || k % (n / (d * delta)) != 0) continue;
        int64_t dp = detail::delta_prime(delta, d, s, opts);
        int64_t e = mod_reduce(delta * dp % n * (k % n), n);
        w[e] += scale * T(detail::mutated_moebius(delta, opts)) / T(delta);
    }
    return modes<T>::weighted(n, w);
}

/// Closed form under the hypothesis nu_p(n) >= nu_p(k) + 2 for every p | n:
///     T = (n/d) * zeta_n^(k s) when (n/d) | k and (s, d) = 1, else 0.
template <class T>
value_t<T> coset_sum_high_valuation(int64_t n, int64_t k, int64_t s, int64_t d) {
    if (n <= 0) throw std::domain_error("coset_sum_high_valuation: n must be positive");
    detail::require_divides(d, n);
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    for (const auto& [p, e] : factorize(n).parts)
        if (extended_nat(e) < valuation(k, p) + 2)
            throw_error(errc::hypothesis_violation,
                        "requires nu_p(n) >= nu_p(k) + 2 for all p | n; fails at p = " +
                            std::to_string(p) + " with nu_p(n) = " + std::to_string(e) +
                            ", nu_p(k) = " + valuation(k, p).str());
    if (gcd64(s, d) != 1 || k % (n / d) != 0) return modes<T>::zero(n);
    return modes<T>::root(n, k * s % n) * (T(n) / T(d));
}

/// Closed form for the trivial character n | k: the value is the rational
/// phi(n)/phi(d) when (s, d) = 1, else 0.
template <class T>
T coset_sum_trivial_char(int64_t n, int64_t k, int64_t s, int64_t d) {
    if (n <= 0) throw std::domain_error("coset_sum_trivial_char: n must be positive");
    detail::require_divides(d, n);
    if (mod_reduce(k, n) != 0)
        throw_error(errc::hypothesis_violation,
                    "requires n | k; k = " + std::to_string(k) + " mod n = " + std::to_string(n));
    s = mod_reduce(s, n);
    if (gcd64(s, d) != 1) return T{};
    return T(euler_phi(n)) / T(euler_phi(d));
}

// ---------------------------------------------------------------------------
// Menon-type sums S_f(n, k, s):
//     sum over a in [1, n], gcd(a, n) = 1, of f(a - s) * zeta_n^(a k)
// for an even function f (mod n).
// ---------------------------------------------------------------------------

/// Definitional evaluation; the oracle for every identity below.
template <class T>
value_t<T> menon_sum(const even_function<T>& f, int64_t k, int64_t s) {
    const int64_t n = f.modulus();
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    std::vector<T> w(n, T{});
    for (int64_t a = 1; a <= n; ++a) {
        if (gcd64(a, n) != 1) continue;
        w[a * k % n] += f(a - s);
    }
    return modes<T>::weighted(n, w);
}

/// Divisor form of the general closed expression:
///     S = n * sum over d | n, (d, s) = 1, of ((mu*f)(d)/d) *
///         sum over delta | n, (delta, d) = 1, (n/(d delta)) | k,
///         of (mu(delta)/delta) * zeta_n^(delta delta' k).
template <class T>
value_t<T> menon_sum_closed_by_divisors(const even_function<T>& f, int64_t k, int64_t s,
                                        const eval_options& opts = {}) {
    const int64_t n = f.modulus();
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    auto mf = mobius_transform(f);
    auto divs = divisors(n);
    T scale = opts.mut == mutation::invert_scale ? T(1) / T(n) : T(n);
    std::vector<T> w(n, T{});
    for (int64_t d : divs) {
        if (gcd64(d, s) != 1) continue;
        T outer = scale * mf.at(d) / T(d);
        const size_t limit = detail::divisor_limit(divs.size(), opts);
        for (size_t i = 0; i < limit; ++i) {
            int64_t delta = divs[i];
            if (!detail::coprime_filter(delta, d, opts)) continue;
            if (n % (d * delta) != 0 || k % (n / (d * delta)) != 0) continue;
            int64_t dp = detail::delta_prime(delta, d, s, opts);
            int64_t e = mod_reduce(delta * dp % n * (k % n), n);
            w[e] += outer * T(detail::mutated_moebius(delta, opts)) / T(delta);
        }
    }
    return modes<T>::weighted(n, w);
}

/// Cofactor form of the same expression:
///     S = sum over e | (n, k) of e * sum over d delta = n/e, (d, delta s) = 1,
///         of (mu*f)(d) * mu(delta) * zeta_n^(delta delta' k).
template <class T>
value_t<T> menon_sum_closed_by_cofactors(const even_function<T>& f, int64_t k, int64_t s,
                                         const eval_options& opts = {}) {
    const int64_t n = f.modulus();
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    auto mf = mobius_transform(f);
    std::vector<T> w(n, T{});
    for (int64_t e : divisors(gcd64(n, k))) {
        T escale = opts.mut == mutation::invert_scale ? T(1) / T(e) : T(e);
        auto ds = divisors(n / e);
        const size_t limit = detail::divisor_limit(ds.size(), opts);
        for (size_t i = 0; i < limit; ++i) {
            int64_t d = ds[i];
            int64_t delta = (n / e) / d;
            if (!detail::coprime_filter(d, delta, opts)) continue;
            if (gcd64(d, s) != 1) continue;
            int64_t dp = detail::delta_prime(delta, d, s, opts);
            int64_t ex = mod_reduce(delta * dp % n * (k % n), n);
            w[ex] += escale * mf.at(d) * T(detail::mutated_moebius(delta, opts));
        }
    }
    return modes<T>::weighted(n, w);
}

/// General closed form. In exact mode without seeded mutations the two
/// algebraic rearrangements above are both evaluated and must agree; a
/// disagreement would mean the library itself is inconsistent.
template <class T>
value_t<T> menon_sum_closed(const even_function<T>& f, int64_t k, int64_t s,
                            const eval_options& opts = {}) {
    value_t<T> a = menon_sum_closed_by_divisors(f, k, s, opts);
    if constexpr (modes<T>::exact) {
        if (opts.mut == mutation::none) {
            value_t<T> b = menon_sum_closed_by_cofactors(f, k, s, opts);
            if (!(a == b))
                throw std::logic_error("menon_sum_closed: divisor and cofactor forms disagree at n=" +
                                       std::to_string(f.modulus()) + " k=" + std::to_string(k) +
                                       " s=" + std::to_string(s) + " f=" + f.label());
        }
    }
    return a;
}

/// Expansion of S through the restricted character sums:
///     S = sum over d | n of (mu*f)(d) * T_n(k, s, d),
/// with each T evaluated by its closed form.
template <class T>
value_t<T> menon_sum_via_cosets(const even_function<T>& f, int64_t k, int64_t s,
                                const eval_options& opts = {}) {
    const int64_t n = f.modulus();
    auto mf = mobius_transform(f);
    value_t<T> acc = modes<T>::zero(n);
    for (int64_t d : divisors(n)) acc += coset_sum_closed<T>(n, k, s, d, opts) * mf.at(d);
    return acc;
}

/// Closed form under nu_p(n) >= nu_p(k) + 2 for every p | n:
///     S = zeta_n^(k s) * sum over d | (n, k), (n/d, s) = 1, of d * (mu*f)(n/d).
template <class T>
value_t<T> menon_sum_high_valuation(const even_function<T>& f, int64_t k, int64_t s) {
    const int64_t n = f.modulus();
    k = mod_reduce(k, n);
    s = mod_reduce(s, n);
    for (const auto& [p, e] : factorize(n).parts)
        if (extended_nat(e) < valuation(k, p) + 2)
            throw_error(errc::hypothesis_violation,
                        "requires nu_p(n) >= nu_p(k) + 2 for all p | n; fails at p = " +
                            std::to_string(p) + " with nu_p(n) = " + std::to_string(e) +
                            ", nu_p(k) = " + valuation(k, p).str());
    auto mf = mobius_transform(f);
    T acc{};
    for (int64_t d : divisors(gcd64(n, k)))
        if (gcd64(n / d, s) == 1) acc += T(d) * mf.at(n / d);
    return modes<T>::root(n, k * s % n) * acc;
}

/// Closed form for the trivial character n | k; the value is the scalar
///     phi(n) * sum over d | n, (d, s) = 1, of (mu*f)(d) / phi(d).
template <class T>
T menon_sum_trivial_char(const even_function<T>& f, int64_t k, int64_t s) {
    const int64_t n = f.modulus();
    if (mod_reduce(k, n) != 0)
        throw_error(errc::hypothesis_violation,
                    "requires n | k; k = " + std::to_string(k) + " mod n = " + std::to_string(n));
    s = mod_reduce(s, n);
    auto mf = mobius_transform(f);
    T acc{};
    for (int64_t d : divisors(n))
        if (gcd64(d, s) == 1) acc += mf.at(d) / T(euler_phi(d));
    return T(euler_phi(n)) * acc;
}

// ---------------------------------------------------------------------------
// Factorizations of S across coprime decompositions of the modulus.
// ---------------------------------------------------------------------------

/// Ordered divisors d of n with gcd(d, n/d) = 1, each giving a coprime
/// factorization n = d * (n/d).
inline std::vector<std::pair<int64_t, int64_t>> coprime_splittings(int64_t n) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t d : divisors(n))
        if (gcd64(d, n / d) == 1) out.emplace_back(d, n / d);
    return out;
}

/// Product rule over a coprime factorization n = n1 * n2:
///     S_f(n, k, s) = S_f(n1, k * inv(n2) mod n1, s) * S_f(n2, k * inv(n1) mod n2, s)
/// for a multiplicative family f. Both factors are evaluated from the
/// definition, then combined over the common modulus n.
template <class T>
value_t<T> menon_sum_split(const function_family<T>& fam, int64_t n1, int64_t n2, int64_t k,
                           int64_t s) {
    if (n1 <= 0 || n2 <= 0) throw std::domain_error("menon_sum_split: moduli must be positive");
    if (gcd64(n1, n2) != 1)
        throw_error(errc::coprimality_violation,
                    "moduli n1 = " + std::to_string(n1) + " and n2 = " + std::to_string(n2) +
                        " are not coprime");
    const int64_t n = n1 * n2;
    int64_t k1 = n1 == 1 ? 0 : mod_reduce(k, n1) * mod_inverse(n2, n1) % n1;
    int64_t k2 = n2 == 1 ? 0 : mod_reduce(k, n2) * mod_inverse(n1, n2) % n2;
    value_t<T> a = menon_sum(fam.at(n1), k1, s);
    value_t<T> b = menon_sum(fam.at(n2), k2, s);
    return modes<T>::promote(a, n) * modes<T>::promote(b, n);
}

/// Valuation-driven coprime factorization n = n1 * n2 induced by k:
/// primes with nu_p(n) >= nu_p(k) + 2 go to n1, primes with
/// nu_p(n) <= nu_p(k) go to n2. The boundary case nu_p(n) = nu_p(k) + 1
/// leaves the factorization undefined.
struct splitting {
    int64_t n = 1;
    int64_t k = 0;
    int64_t n1 = 1;
    int64_t n2 = 1;
    int64_t n1_inv = 0; // inverse of n1 modulo n2
    int64_t n2_inv = 0; // inverse of n2 modulo n1
};

inline splitting valuation_split(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("valuation_split: n must be positive");
    splitting sp;
    sp.n = n;
    sp.k = mod_reduce(k, n);
    std::string undefined_at;
    for (const auto& [p, e] : factorize(n).parts) {
        extended_nat vn(e);
        extended_nat vk = valuation(sp.k, p);
        if (vn >= vk + 2) {
            for (int i = 0; i < e; ++i) sp.n1 *= p;
        } else if (vn <= vk) {
            for (int i = 0; i < e; ++i) sp.n2 *= p;
        } else {
            if (!undefined_at.empty()) undefined_at += ", ";
            undefined_at += std::to_string(p);
        }
    }
    if (!undefined_at.empty())
        throw_error(errc::split_undefined,
                    "nu_p(n) = nu_p(k) + 1 at p = " + undefined_at + " for n = " +
                        std::to_string(n) + ", k = " + std::to_string(sp.k));
    sp.n1_inv = sp.n2 == 1 ? 0 : mod_inverse(sp.n1, sp.n2);
    sp.n2_inv = sp.n1 == 1 ? 0 : mod_inverse(sp.n2, sp.n1);
    return sp;
}

/// Closed form along the valuation splitting:
///     S = zeta_n^(k s) * phi(n2)
///         * [sum over d | (n1, k), (n1/d, s) = 1, of d * (mu*f_n1)(n1/d)]
///         * [sum over d | n2, (d, s) = 1, of (mu*f_n2)(d) / phi(d)].
template <class T>
value_t<T> menon_sum_valuation_split(const function_family<T>& fam, int64_t n, int64_t k,
                                     int64_t s) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    auto mf1 = mobius_transform(fam.at(sp.n1));
    auto mf2 = mobius_transform(fam.at(sp.n2));
    T a{};
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += T(d) * mf1.at(sp.n1 / d);
    T b{};
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += mf2.at(d) / T(euler_phi(d));
    return modes<T>::root(n, k * s % n) * (T(euler_phi(sp.n2)) * a * b);
}

// ---------------------------------------------------------------------------
// Specialized split closed forms for the built-in families. The exact
// overloads take an integer exponent; the float overloads take a double.
// ---------------------------------------------------------------------------

/// S for f = gcd(., n)^m along the valuation splitting:
///     zeta_n^(k s) * J_m(n1) * phi(n2)
///       * sum over d | (n1, k), (n1/d, s) = 1, of d^(1-m)
///       * sum over d | n2, (d, s) = 1, of J_m(d) / phi(d).
inline cyclotomic split_gcd_power(int64_t n, int64_t k, int64_t s, int64_t m) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    Rat a(0);
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += rat_pow(d, 1 - m);
    Rat b(0);
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += jordan(m, d) / Rat(euler_phi(d));
    return cyclotomic::root(n, k * s % n) * (jordan(m, sp.n1) * Rat(euler_phi(sp.n2)) * a * b);
}

inline std::complex<double> split_gcd_power(int64_t n, int64_t k, int64_t s, double m) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    double a = 0.0;
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += std::pow(double(d), 1.0 - m);
    double b = 0.0;
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += jordan(m, d) / double(euler_phi(d));
    return root_of_unity_f(n, k * s % n) * (jordan(m, sp.n1) * double(euler_phi(sp.n2)) * a * b);
}

/// S for f = sigma_m(gcd(., n)) along the valuation splitting:
///     zeta_n^(k s) * n1^m * phi(n2)
///       * sum over d | (n1, k), (n1/d, s) = 1, of d^(1-m)
///       * sum over d | n2, (d, s) = 1, of d^m / phi(d).
inline cyclotomic split_sigma_gcd(int64_t n, int64_t k, int64_t s, int64_t m) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    Rat a(0);
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += rat_pow(d, 1 - m);
    Rat b(0);
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += rat_pow(d, m) / Rat(euler_phi(d));
    return cyclotomic::root(n, k * s % n) * (rat_pow(sp.n1, m) * Rat(euler_phi(sp.n2)) * a * b);
}

inline std::complex<double> split_sigma_gcd(int64_t n, int64_t k, int64_t s, double m) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    double a = 0.0;
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += std::pow(double(d), 1.0 - m);
    double b = 0.0;
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += std::pow(double(d), m) / double(euler_phi(d));
    return root_of_unity_f(n, k * s % n) * std::pow(double(sp.n1), m) *
           double(euler_phi(sp.n2)) * a * b;
}

/// S for f = c_n(.) along the valuation splitting:
///     zeta_n^(k s) * n1 * phi(n2)
///       * sum over d | (n1, k), (n1/d, s) = 1, of mu(d)
///       * sum over d | n2, (d, s) = 1, of d * mu(n2/d) / phi(d).
inline cyclotomic split_ramanujan(int64_t n, int64_t k, int64_t s) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    Rat a(0);
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += moebius(d);
    Rat b(0);
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += Rat(d * moebius(sp.n2 / d)) / Rat(euler_phi(d));
    return cyclotomic::root(n, k * s % n) * (Rat(sp.n1 * euler_phi(sp.n2)) * a * b);
}

inline std::complex<double> split_ramanujan_f(int64_t n, int64_t k, int64_t s) {
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    double a = 0.0;
    for (int64_t d : divisors(gcd64(sp.n1, k)))
        if (gcd64(sp.n1 / d, s) == 1) a += moebius(d);
    double b = 0.0;
    for (int64_t d : divisors(sp.n2))
        if (gcd64(d, s) == 1) b += double(d * moebius(sp.n2 / d)) / double(euler_phi(d));
    return root_of_unity_f(n, k * s % n) * double(sp.n1) * double(euler_phi(sp.n2)) * a * b;
}

// ---------------------------------------------------------------------------
// Divisor sums F_m(n) = sum J_m(d)/phi(d) and G_m(n) = sum d^m/phi(d),
// with their Euler products. Used by the unit-shift closed forms below.
// ---------------------------------------------------------------------------

inline Rat jordan_phi_sum(int64_t m, int64_t n) {
    Rat acc(0);
    for (int64_t d : divisors(n)) acc += jordan(m, d) / Rat(euler_phi(d));
    acc.canonicalize();
    return acc;
}

inline double jordan_phi_sum(double m, int64_t n) {
    double acc = 0.0;
    for (int64_t d : divisors(n)) acc += jordan(m, d) / double(euler_phi(d));
    return acc;
}

/// Euler product form: per prime power p^a, the local factor is
///     1 + (p^m - 1)/(p - 1) * (p^((m-1)a) - 1)/(p^(m-1) - 1),
/// where the second quotient degenerates to a when m = 1.
inline Rat jordan_phi_sum_product(int64_t m, int64_t n) {
    Rat acc(1);
    for (const auto& [p, a] : factorize(n).parts) {
        Rat head = (rat_pow(p, m) - 1) / Rat(p - 1);
        Rat tail = m == 1 ? Rat(a) : (rat_pow(p, (m - 1) * a) - 1) / (rat_pow(p, m - 1) - 1);
        acc *= Rat(1) + head * tail;
    }
    acc.canonicalize();
    return acc;
}

inline double jordan_phi_sum_product(double m, int64_t n) {
    double acc = 1.0;
    for (const auto& [p, a] : factorize(n).parts) {
        double head = (std::pow(double(p), m) - 1.0) / double(p - 1);
        double tail = m == 1.0 ? double(a)
                               : (std::pow(double(p), (m - 1.0) * a) - 1.0) /
                                     (std::pow(double(p), m - 1.0) - 1.0);
        acc *= 1.0 + head * tail;
    }
    return acc;
}

inline Rat power_phi_sum(int64_t m, int64_t n) {
    Rat acc(0);
    for (int64_t d : divisors(n)) acc += rat_pow(d, m) / Rat(euler_phi(d));
    acc.canonicalize();
    return acc;
}

inline double power_phi_sum(double m, int64_t n) {
    double acc = 0.0;
    for (int64_t d : divisors(n)) acc += std::pow(double(d), m) / double(euler_phi(d));
    return acc;
}

/// Euler product form: per prime power p^a, the local factor is
///     1 + p^m/(p - 1) * (p^((m-1)a) - 1)/(p^(m-1) - 1),
/// degenerating as above when m = 1.
inline Rat power_phi_sum_product(int64_t m, int64_t n) {
    Rat acc(1);
    for (const auto& [p, a] : factorize(n).parts) {
        Rat head = rat_pow(p, m) / Rat(p - 1);
        Rat tail = m == 1 ? Rat(a) : (rat_pow(p, (m - 1) * a) - 1) / (rat_pow(p, m - 1) - 1);
        acc *= Rat(1) + head * tail;
    }
    acc.canonicalize();
    return acc;
}

inline double power_phi_sum_product(double m, int64_t n) {
    double acc = 1.0;
    for (const auto& [p, a] : factorize(n).parts) {
        double head = std::pow(double(p), m) / double(p - 1);
        double tail = m == 1.0 ? double(a)
                               : (std::pow(double(p), (m - 1.0) * a) - 1.0) /
                                     (std::pow(double(p), m - 1.0) - 1.0);
        acc *= 1.0 + head * tail;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Unit-shift closed forms: the valuation splitting specialized further to
// gcd(s, n) = 1, where the coprimality filters disappear.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_unit_shift(int64_t n, int64_t s) {
    if (gcd64(mod_reduce(s, n), n) != 1)
        throw_error(errc::s_not_coprime, "requires gcd(s, n) = 1; s = " +
                                             std::to_string(mod_reduce(s, n)) +
                                             ", n = " + std::to_string(n));
}

} // namespace detail

/// S for f = gcd(., n)^m with gcd(s, n) = 1:
///     zeta_n^(k s) * J_m(n1) * sigma_(1-m)((n1, k)) * phi(n2) * F_m(n2).
inline cyclotomic unit_shift_gcd_power(int64_t n, int64_t k, int64_t s, int64_t m) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    Rat v = jordan(m, sp.n1) * sigma(1 - m, gcd64(sp.n1, k)) * Rat(euler_phi(sp.n2)) *
            jordan_phi_sum(m, sp.n2);
    return cyclotomic::root(n, k * s % n) * v;
}

inline std::complex<double> unit_shift_gcd_power(int64_t n, int64_t k, int64_t s, double m) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    double v = jordan(m, sp.n1) * sigma(1.0 - m, gcd64(sp.n1, k)) * double(euler_phi(sp.n2)) *
               jordan_phi_sum(m, sp.n2);
    return root_of_unity_f(n, k * s % n) * v;
}

/// S for f = sigma_m(gcd(., n)) with gcd(s, n) = 1:
///     zeta_n^(k s) * n1^m * sigma_(1-m)((n1, k)) * phi(n2) * G_m(n2).
inline cyclotomic unit_shift_sigma_gcd(int64_t n, int64_t k, int64_t s, int64_t m) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    Rat v = rat_pow(sp.n1, m) * sigma(1 - m, gcd64(sp.n1, k)) * Rat(euler_phi(sp.n2)) *
            power_phi_sum(m, sp.n2);
    return cyclotomic::root(n, k * s % n) * v;
}

inline std::complex<double> unit_shift_sigma_gcd(int64_t n, int64_t k, int64_t s, double m) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    double v = std::pow(double(sp.n1), m) * sigma(1.0 - m, gcd64(sp.n1, k)) *
               double(euler_phi(sp.n2)) * power_phi_sum(m, sp.n2);
    return root_of_unity_f(n, k * s % n) * v;
}

/// S for f = c_n(.) with gcd(s, n) = 1:
///     zeta_n^(k s) * n1 when (n1, k) = 1 and n2 is squarefree, else 0.
inline cyclotomic unit_shift_ramanujan(int64_t n, int64_t k, int64_t s) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    if (gcd64(sp.n1, k) != 1 || !is_squarefree(sp.n2)) return cyclotomic(n);
    return cyclotomic::root(n, k * s % n) * Rat(sp.n1);
}

inline std::complex<double> unit_shift_ramanujan_f(int64_t n, int64_t k, int64_t s) {
    detail::require_unit_shift(n, s);
    splitting sp = valuation_split(n, k);
    k = sp.k;
    s = mod_reduce(s, n);
    if (gcd64(sp.n1, k) != 1 || !is_squarefree(sp.n2)) return {0.0, 0.0};
    return root_of_unity_f(n, k * s % n) * double(sp.n1);
}

/// Split closed form matching a function selector; constant selects the
/// zeroth gcd power, which has the same values.
template <class T>
value_t<T> split_value_for(const function_spec& spec, int64_t n, int64_t k, int64_t s) {
    using K = function_spec::family_kind;
    if constexpr (modes<T>::exact) {
        switch (spec.kind) {
        case K::gcd_power: return split_gcd_power(n, k, s, spec.m_int);
        case K::sigma_gcd: return split_sigma_gcd(n, k, s, spec.m_int);
        case K::ramanujan: return split_ramanujan(n, k, s);
        case K::constant: return split_gcd_power(n, k, s, int64_t{0});
        }
    } else {
        switch (spec.kind) {
        case K::gcd_power: return split_gcd_power(n, k, s, spec.m_float);
        case K::sigma_gcd: return split_sigma_gcd(n, k, s, spec.m_float);
        case K::ramanujan: return split_ramanujan_f(n, k, s);
        case K::constant: return split_gcd_power(n, k, s, 0.0);
        }
    }
    throw_error(errc::config_invalid, "unhandled function selector '" + spec.text + "'");
}

/// Unit-shift closed form matching a function selector.
template <class T>
value_t<T> unit_shift_value_for(const function_spec& spec, int64_t n, int64_t k, int64_t s) {
    using K = function_spec::family_kind;
    if constexpr (modes<T>::exact) {
        switch (spec.kind) {
        case K::gcd_power: return unit_shift_gcd_power(n, k, s, spec.m_int);
        case K::sigma_gcd: return unit_shift_sigma_gcd(n, k, s, spec.m_int);
        case K::ramanujan: return unit_shift_ramanujan(n, k, s);
        case K::constant: return unit_shift_gcd_power(n, k, s, int64_t{0});
        }
    } else {
        switch (spec.kind) {
        case K::gcd_power: return unit_shift_gcd_power(n, k, s, spec.m_float);
        case K::sigma_gcd: return unit_shift_sigma_gcd(n, k, s, spec.m_float);
        case K::ramanujan: return unit_shift_ramanujan_f(n, k, s);
        case K::constant: return unit_shift_gcd_power(n, k, s, 0.0);
        }
    }
    throw_error(errc::config_invalid, "unhandled function selector '" + spec.text + "'");
}

// ---------------------------------------------------------------------------
// DFT of the plain gcd function, shifted by 1; no coprimality filter:
//     sum over a in [1, n] of gcd(a - 1, n) * zeta_n^(a k).
// ---------------------------------------------------------------------------

template <class T>
value_t<T> gcd_dft(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("gcd_dft: n must be positive");
    k = mod_reduce(k, n);
    std::vector<int64_t> w(n, 0);
    for (int64_t a = 1; a <= n; ++a) w[a * k % n] += gcd64(mod_reduce(a - 1, n), n);
    return modes<T>::counted(n, w);
}

/// Closed form: zeta_n^k * sum over l | (n, k) of l * phi(n/l).
template <class T>
value_t<T> gcd_dft_closed(int64_t n, int64_t k) {
    if (n <= 0) throw std::domain_error("gcd_dft_closed: n must be positive");
    k = mod_reduce(k, n);
    T acc{};
    for (int64_t l : divisors(gcd64(n, k))) acc += T(l) * T(euler_phi(n / l));
    return modes<T>::root(n, k) * acc;
}

} // namespace menon
