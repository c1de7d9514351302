#pragma once

#include <complex>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "menon/arith.hpp"
#include "menon/error.hpp"

namespace menon {

/// Dense integer polynomials, coefficient index = power of x.
namespace poly {

using int_poly = std::vector<Int>;

inline void trim(int_poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int64_t degree(const int_poly& p) {
    return static_cast<int64_t>(p.size()) - 1; // -1 for the zero polynomial
}

inline int_poly mul(const int_poly& a, const int_poly& b) {
    if (a.empty() || b.empty()) return {};
    int_poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

/// Exact division by a monic divisor; remainder must vanish.
inline int_poly divexact(int_poly num, const int_poly& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly::divexact: divisor must be monic");
    const int64_t dn = degree(num), dd = degree(den);
    if (dn < dd) {
        trim(num);
        if (!num.empty()) throw std::invalid_argument("poly::divexact: division not exact");
        return {};
    }
    int_poly q(dn - dd + 1, Int(0));
    for (int64_t i = dn - dd; i >= 0; --i) {
        Int c = num[i + dd];
        if (c == 0) continue;
        q[i] = c;
        for (int64_t j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::invalid_argument("poly::divexact: division not exact");
    return q;
}

inline int_poly x_pow_minus_one(int64_t n) {
    int_poly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

} // namespace poly

/// The n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
/// product of the lower cyclotomic polynomials. Results are cached.
inline std::shared_ptr<const poly::int_poly> cyclotomic_polynomial_ptr(int64_t n) {
    if (n <= 0) throw std::domain_error("cyclotomic_polynomial: n must be positive");
    static std::mutex mtx;
    static std::unordered_map<int64_t, std::shared_ptr<const poly::int_poly>> cache;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    poly::int_poly den{Int(1)};
    for (int64_t d : divisors(n)) {
        if (d == n) continue;
        den = poly::mul(den, *cyclotomic_polynomial_ptr(d));
    }
    auto phi = std::make_shared<poly::int_poly>(poly::divexact(poly::x_pow_minus_one(n), den));
    std::lock_guard<std::mutex> lk(mtx);
    auto [it, inserted] = cache.emplace(n, phi);
    return it->second;
}

inline poly::int_poly cyclotomic_polynomial(int64_t n) { return *cyclotomic_polynomial_ptr(n); }

namespace detail {

/// Canonical residues x^j mod Phi_n for j in [0, n); entries have integer
/// coefficients and length phi(n). Immutable once built.
struct root_table {
    int64_t n = 1;
    int64_t deg = 1; // phi(n)
    std::vector<std::vector<Int>> pow;

    explicit root_table(int64_t modulus) : n(modulus) {
        auto phi = cyclotomic_polynomial_ptr(n);
        deg = poly::degree(*phi);
        pow.assign(n, {});
        for (int64_t j = 0; j < std::min(deg, n); ++j) {
            pow[j].assign(deg, Int(0));
            pow[j][j] = 1;
        }
        // x^j = x * x^(j-1), then one reduction step against the monic Phi_n
        for (int64_t j = deg; j < n; ++j) {
            std::vector<Int> t(deg + 1, Int(0));
            const auto& prev = pow[j - 1];
            for (int64_t i = 0; i < deg; ++i) t[i + 1] = prev[i];
            if (t[deg] != 0) {
                Int lead = t[deg];
                for (int64_t i = 0; i < deg; ++i) t[i] -= lead * (*phi)[i];
            }
            t.pop_back();
            pow[j] = std::move(t);
        }
    }
};

/// Small LRU cache of root tables; tables for large moduli are built on
/// demand and evicted once enough newer moduli have been touched.
inline std::shared_ptr<const root_table> get_root_table(int64_t n) {
    if (n <= 0) throw std::domain_error("root table: modulus must be positive");
    constexpr size_t capacity = 24;
    static std::mutex mtx;
    static std::unordered_map<int64_t, std::shared_ptr<const root_table>> cache;
    static std::deque<int64_t> recency;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) {
        if (recency.back() != n) {
            for (auto r = recency.begin(); r != recency.end(); ++r)
                if (*r == n) { recency.erase(r); break; }
            recency.push_back(n);
        }
        return it->second;
    }
    auto table = std::make_shared<const root_table>(n);
    cache.emplace(n, table);
    recency.push_back(n);
    while (cache.size() > capacity) {
        cache.erase(recency.front());
        recency.pop_front();
    }
    return table;
}

} // namespace detail

/// An exact element of Q(zeta_n), stored as rational coordinates in the
/// canonical basis 1, zeta_n, ..., zeta_n^(phi(n)-1). The representation is
/// canonical: two elements over the same modulus are equal as complex
/// numbers iff their coordinate vectors coincide.
class cyclotomic {
public:
    explicit cyclotomic(int64_t n = 1)
        : n_(n), table_(detail::get_root_table(n)), c_(table_->deg, Rat(0)) {}

    static cyclotomic from_rational(int64_t n, const Rat& q) {
        cyclotomic z(n);
        z.c_[0] = q;
        return z;
    }

    /// zeta_n^a, with a reduced modulo n.
    static cyclotomic root(int64_t n, int64_t a) {
        cyclotomic z(n);
        const auto& row = z.table_->pow[mod_reduce(a, n)];
        for (int64_t i = 0; i < z.degree(); ++i) z.c_[i] = Rat(row[i]);
        return z;
    }

    /// Sum of w[j] * zeta_n^j over j in [0, n).
    static cyclotomic weighted_root_sum(int64_t n, const std::vector<Rat>& w) {
        cyclotomic z(n);
        const int64_t deg = z.degree();
        for (int64_t j = 0; j < static_cast<int64_t>(w.size()); ++j) {
            if (w[j] == 0) continue;
            if (j < deg) {
                z.c_[j] += w[j];
            } else {
                const auto& row = z.table_->pow[j % n];
                for (int64_t i = 0; i < deg; ++i)
                    if (row[i] != 0) z.c_[i] += w[j] * row[i];
            }
        }
        return z;
    }

    /// Integer-count variant: sum of c[j] * zeta_n^j.
    static cyclotomic counted_root_sum(int64_t n, const std::vector<Int>& counts) {
        cyclotomic z(n);
        const int64_t deg = z.degree();
        std::vector<Int> acc(deg, Int(0));
        for (int64_t j = 0; j < static_cast<int64_t>(counts.size()); ++j) {
            if (counts[j] == 0) continue;
            if (j < deg) {
                acc[j] += counts[j];
            } else {
                const auto& row = z.table_->pow[j % n];
                for (int64_t i = 0; i < deg; ++i)
                    if (row[i] != 0) acc[i] += counts[j] * row[i];
            }
        }
        for (int64_t i = 0; i < deg; ++i) z.c_[i] = Rat(acc[i]);
        return z;
    }

    int64_t modulus() const { return n_; }
    int64_t degree() const { return static_cast<int64_t>(c_.size()); }
    const std::vector<Rat>& coefficients() const { return c_; }

    bool is_zero() const {
        for (const auto& q : c_)
            if (q != 0) return false;
        return true;
    }

    /// True when the element lies in Q (all basis coordinates above 1 vanish).
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic: value is not rational");
        return c_[0];
    }

    std::complex<double> to_complex() const {
        std::complex<double> z(0.0, 0.0);
        const double tau = 6.283185307179586476925286766559;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            double ang = tau * double(j) / double(n_);
            z += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        return z;
    }

    /// Re-express over a larger modulus m (n | m) via zeta_n = zeta_m^(m/n).
    cyclotomic embed(int64_t m) const {
        if (m % n_ != 0)
            throw_error(errc::modulus_mismatch,
                        "embed: target modulus " + std::to_string(m) +
                            " is not a multiple of " + std::to_string(n_));
        const int64_t step = m / n_;
        std::vector<Rat> w(m, Rat(0));
        for (size_t j = 0; j < c_.size(); ++j)
            if (c_[j] != 0) w[static_cast<int64_t>(j) * step % m] += c_[j];
        return weighted_root_sum(m, w);
    }

    cyclotomic& operator+=(const cyclotomic& o) {
        check_modulus(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    cyclotomic& operator-=(const cyclotomic& o) {
        check_modulus(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    cyclotomic& operator*=(const Rat& q) {
        for (auto& ci : c_) ci *= q;
        return *this;
    }

    friend cyclotomic operator+(cyclotomic a, const cyclotomic& b) { return a += b; }
    friend cyclotomic operator-(cyclotomic a, const cyclotomic& b) { return a -= b; }
    friend cyclotomic operator*(cyclotomic a, const Rat& q) { return a *= q; }
    friend cyclotomic operator*(const Rat& q, cyclotomic a) { return a *= q; }

    friend cyclotomic operator*(const cyclotomic& a, const cyclotomic& b) {
        a.check_modulus(b);
        const int64_t deg = a.degree();
        std::vector<Rat> conv(2 * deg - 1, Rat(0));
        for (int64_t i = 0; i < deg; ++i) {
            if (a.c_[i] == 0) continue;
            for (int64_t j = 0; j < deg; ++j)
                if (b.c_[j] != 0) conv[i + j] += a.c_[i] * b.c_[j];
        }
        return weighted_root_sum(a.n_, conv);
    }

    friend bool operator==(const cyclotomic& x, const cyclotomic& y) {
        return x.n_ == y.n_ && x.c_ == y.c_;
    }
    friend bool operator!=(const cyclotomic& x, const cyclotomic& y) { return !(x == y); }

    /// Coordinate-vector rendering, e.g. "[0, 2]"; rationals render plain.
    std::string str() const {
        if (is_rational()) return c_[0].get_str();
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            os << c_[i].get_str();
        }
        os << ']';
        return os.str();
    }

private:
    void check_modulus(const cyclotomic& o) const {
        if (n_ != o.n_)
            throw_error(errc::modulus_mismatch,
                        "cyclotomic arithmetic across moduli " + std::to_string(n_) + " and " +
                            std::to_string(o.n_));
    }

    int64_t n_;
    std::shared_ptr<const detail::root_table> table_;
    std::vector<Rat> c_;
};

inline cyclotomic root_of_unity(int64_t n, int64_t a) { return cyclotomic::root(n, a); }

/// Floating counterparts used by the float evaluation mode.
inline std::complex<double> root_of_unity_f(int64_t n, int64_t a) {
    const double tau = 6.283185307179586476925286766559;
    double ang = tau * double(mod_reduce(a, n)) / double(n);
    return {std::cos(ang), std::sin(ang)};
}

inline std::complex<double> weighted_root_sum_f(int64_t n, const std::vector<double>& w) {
    std::complex<double> z(0.0, 0.0);
    for (int64_t j = 0; j < static_cast<int64_t>(w.size()); ++j)
        if (w[j] != 0.0) z += w[j] * root_of_unity_f(n, j);
    return z;
}

} // namespace menon
