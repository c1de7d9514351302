#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "menon/arith.hpp"
#include "menon/error.hpp"

namespace menon {

/// Values attached to the divisors of n, in ascending divisor order.
template <class T>
struct divisor_map {
    int64_t n = 1;
    std::vector<int64_t> divs;
    std::vector<T> vals;

    const T& at(int64_t d) const {
        auto it = std::lower_bound(divs.begin(), divs.end(), d);
        if (it == divs.end() || *it != d)
            throw_error(errc::d_not_dividing,
                        std::to_string(d) + " does not divide " + std::to_string(n));
        return vals[static_cast<size_t>(it - divs.begin())];
    }
};

/// A function on Z that is even (mod n): f(a) depends only on gcd(a, n).
/// Stored as its values on the divisors of n; f(0) reads the value at n.
template <class T>
class even_function {
public:
    even_function(int64_t n, std::string label, std::vector<T> divisor_values)
        : n_(n), label_(std::move(label)), divs_(divisors(n)), vals_(std::move(divisor_values)) {
        if (vals_.size() != divs_.size())
            throw std::invalid_argument("even_function: need one value per divisor of n");
    }

    int64_t modulus() const { return n_; }
    const std::string& label() const { return label_; }
    const std::vector<int64_t>& divisor_list() const { return divs_; }

    const T& operator()(int64_t a) const { return at_divisor(gcd64(mod_reduce(a, n_), n_)); }

    const T& at_divisor(int64_t d) const {
        auto it = std::lower_bound(divs_.begin(), divs_.end(), d);
        if (it == divs_.end() || *it != d)
            throw_error(errc::d_not_dividing,
                        std::to_string(d) + " does not divide " + std::to_string(n_));
        return vals_[static_cast<size_t>(it - divs_.begin())];
    }

private:
    int64_t n_;
    std::string label_;
    std::vector<int64_t> divs_;
    std::vector<T> vals_;
};

/// Moebius transform over the divisor lattice of n:
///   (mu * f)(d) = sum over e | d of mu(d / e) * f(e).
template <class T>
divisor_map<T> mobius_transform(const even_function<T>& f) {
    divisor_map<T> out;
    out.n = f.modulus();
    out.divs = f.divisor_list();
    out.vals.reserve(out.divs.size());
    for (int64_t d : out.divs) {
        T acc{};
        for (int64_t e : divisors(d)) {
            int mu = moebius(d / e);
            if (mu == 1)
                acc += f.at_divisor(e);
            else if (mu == -1)
                acc -= f.at_divisor(e);
        }
        out.vals.push_back(acc);
    }
    return out;
}

template <class T>
even_function<T> make_from_function(int64_t n, std::string label,
                                    const std::function<T(int64_t)>& value_at_divisor) {
    std::vector<T> vals;
    for (int64_t d : divisors(n)) vals.push_back(value_at_divisor(d));
    return even_function<T>(n, std::move(label), std::move(vals));
}

inline even_function<Rat> make_gcd_power(int64_t n, int64_t m) {
    std::vector<Rat> vals;
    for (int64_t d : divisors(n)) vals.push_back(rat_pow(d, m));
    return even_function<Rat>(n, "gcdpow:" + std::to_string(m), std::move(vals));
}

inline even_function<double> make_gcd_power_f(int64_t n, double m) {
    std::vector<double> vals;
    for (int64_t d : divisors(n)) vals.push_back(std::pow(double(d), m));
    return even_function<double>(n, "gcdpow:" + format_float(m), std::move(vals));
}

inline even_function<Rat> make_sigma_gcd(int64_t n, int64_t m) {
    std::vector<Rat> vals;
    for (int64_t d : divisors(n)) vals.push_back(sigma(m, d));
    return even_function<Rat>(n, "sigmagcd:" + std::to_string(m), std::move(vals));
}

inline even_function<double> make_sigma_gcd_f(int64_t n, double m) {
    std::vector<double> vals;
    for (int64_t d : divisors(n)) vals.push_back(sigma(m, d));
    return even_function<double>(n, "sigmagcd:" + format_float(m), std::move(vals));
}

/// f_n(a) = c_n(a), the Ramanujan sum; it is even (mod n).
inline even_function<Rat> make_ramanujan(int64_t n) {
    std::vector<Rat> vals;
    for (int64_t d : divisors(n)) vals.push_back(Rat(ramanujan_sum(n, d)));
    return even_function<Rat>(n, "ramanujan", std::move(vals));
}

inline even_function<double> make_ramanujan_f(int64_t n) {
    std::vector<double> vals;
    for (int64_t d : divisors(n)) vals.push_back(Rat(ramanujan_sum(n, d)).get_d());
    return even_function<double>(n, "ramanujan", std::move(vals));
}

template <class T>
even_function<T> make_constant(int64_t n, const T& value, std::string label = "const") {
    std::vector<T> vals(divisors(n).size(), value);
    return even_function<T>(n, std::move(label), std::move(vals));
}

/// Textual selector for the built-in families:
///   gcdpow:M    f_n(a) = gcd(a, n)^M
///   sigmagcd:M  f_n(a) = sigma_M(gcd(a, n))
///   ramanujan   f_n(a) = c_n(a)
///   const       f_n(a) = 1
/// M is an integer for exact evaluation; decimals and fractions such as
/// 1/2 select a floating exponent and require float mode.
struct function_spec {
    enum class family_kind { gcd_power, sigma_gcd, ramanujan, constant };

    family_kind kind = family_kind::constant;
    bool integral_exponent = true;
    int64_t m_int = 0;
    double m_float = 0.0;
    std::string text;

    static function_spec parse(const std::string& s) {
        function_spec out;
        out.text = s;
        auto colon = s.find(':');
        std::string head = s.substr(0, colon);
        std::string tail = colon == std::string::npos ? std::string() : s.substr(colon + 1);
        if (head == "ramanujan" && tail.empty()) {
            out.kind = family_kind::ramanujan;
            return out;
        }
        if (head == "const" && tail.empty()) {
            out.kind = family_kind::constant;
            return out;
        }
        if (head == "gcdpow" || head == "sigmagcd") {
            out.kind = head == "gcdpow" ? family_kind::gcd_power : family_kind::sigma_gcd;
            if (tail.empty())
                throw_error(errc::config_invalid, "function selector '" + s + "' needs an exponent");
            out.parse_exponent(tail, s);
            return out;
        }
        throw_error(errc::config_invalid, "unknown function selector '" + s + "'");
    }

private:
    void parse_exponent(const std::string& t, const std::string& whole) {
        size_t pos = 0;
        try {
            auto slash = t.find('/');
            if (slash == std::string::npos && t.find('.') == std::string::npos &&
                t.find('e') == std::string::npos && t.find('E') == std::string::npos) {
                m_int = std::stoll(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
                integral_exponent = true;
                m_float = double(m_int);
                return;
            }
            integral_exponent = false;
            if (slash != std::string::npos) {
                double num = std::stod(t.substr(0, slash), &pos);
                if (pos != slash) throw std::invalid_argument(t);
                double den = std::stod(t.substr(slash + 1), &pos);
                if (pos != t.size() - slash - 1 || den == 0.0) throw std::invalid_argument(t);
                m_float = num / den;
            } else {
                m_float = std::stod(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
            }
        } catch (const std::exception&) {
            throw_error(errc::config_invalid, "bad exponent in function selector '" + whole + "'");
        }
    }
};

/// A family n -> f_n drawn from one selector, so that the f_{n1}, f_n2
/// appearing in the factorization identities all come from the same rule.
template <class T>
struct function_family {
    std::string label;
    std::function<even_function<T>(int64_t)> at;
};

inline function_family<Rat> make_family(const function_spec& spec, Rat) {
    using K = function_spec::family_kind;
    if ((spec.kind == K::gcd_power || spec.kind == K::sigma_gcd) && !spec.integral_exponent)
        throw_error(errc::config_invalid,
                    "function selector '" + spec.text + "' needs float mode (non-integer exponent)");
    function_family<Rat> fam;
    fam.label = spec.text;
    switch (spec.kind) {
    case K::gcd_power:
        fam.at = [m = spec.m_int](int64_t n) { return make_gcd_power(n, m); };
        break;
    case K::sigma_gcd:
        fam.at = [m = spec.m_int](int64_t n) { return make_sigma_gcd(n, m); };
        break;
    case K::ramanujan:
        fam.at = [](int64_t n) { return make_ramanujan(n); };
        break;
    case K::constant:
        fam.at = [](int64_t n) { return make_constant<Rat>(n, Rat(1)); };
        break;
    }
    return fam;
}

inline function_family<double> make_family(const function_spec& spec, double) {
    using K = function_spec::family_kind;
    function_family<double> fam;
    fam.label = spec.text;
    switch (spec.kind) {
    case K::gcd_power:
        fam.at = [m = spec.m_float](int64_t n) { return make_gcd_power_f(n, m); };
        break;
    case K::sigma_gcd:
        fam.at = [m = spec.m_float](int64_t n) { return make_sigma_gcd_f(n, m); };
        break;
    case K::ramanujan:
        fam.at = [](int64_t n) { return make_ramanujan_f(n); };
        break;
    case K::constant:
        fam.at = [](int64_t n) { return make_constant<double>(n, 1.0); };
        break;
    }
    return fam;
}

/// Default selectors exercised by verification sweeps.
inline std::vector<function_spec> builtin_function_specs() {
    std::vector<function_spec> out;
    for (const char* s :
         {"gcdpow:0", "gcdpow:1", "gcdpow:2", "sigmagcd:0", "sigmagcd:1", "ramanujan"})
        out.push_back(function_spec::parse(s));
    return out;
}

/// Checks f_{ab}(d1 d2) = f_a(d1) * f_b(d2) over coprime a, b with a*b up
/// to the bound. On failure reports a witness through the error message.
template <class T>
bool is_multiplicative_family(const function_family<T>& fam, int64_t bound,
                              std::string* witness = nullptr) {
    for (int64_t a = 1; a <= bound; ++a)
        for (int64_t b = 1; a * b <= bound; ++b) {
            if (gcd64(a, b) != 1) continue;
            auto fa = fam.at(a);
            auto fb = fam.at(b);
            auto fab = fam.at(a * b);
            for (int64_t d1 : fa.divisor_list())
                for (int64_t d2 : fb.divisor_list()) {
                    T lhs = fab.at_divisor(d1 * d2);
                    T rhs = fa.at_divisor(d1) * fb.at_divisor(d2);
                    if (!(lhs == rhs)) {
                        if (witness)
                            *witness = fam.label + " at n1=" + std::to_string(a) +
                                       " n2=" + std::to_string(b) + " d1=" + std::to_string(d1) +
                                       " d2=" + std::to_string(d2);
                        return false;
                    }
                }
        }
    return true;
}

template <class T>
void require_multiplicative_family(const function_family<T>& fam, int64_t bound) {
    std::string witness;
    if (!is_multiplicative_family(fam, bound, &witness))
        throw_error(errc::coprimality_violation,
                    "family is not multiplicative: counterexample " + witness);
}

} // namespace menon
