#pragma once

#include <stdexcept>
#include <string>

namespace menon {

/// Typed error conditions surfaced by the library.
enum class errc {
    non_invertible,        // mod_inverse with gcd(a, m) > 1
    modulus_mismatch,      // mixing cyclotomic values over different moduli
    d_not_dividing,        // residue parameter d does not divide the modulus
    hypothesis_violation,  // a closed form was asked outside its hypothesis
    split_undefined,       // valuation splitting undefined at some prime
    coprimality_violation, // a coprime factorization was required
    s_not_coprime,         // shift s required coprime to the modulus
    config_invalid,        // malformed sweep configuration
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_invertible: return "NON_INVERTIBLE";
    case errc::modulus_mismatch: return "MODULUS_MISMATCH";
    case errc::d_not_dividing: return "D_NOT_DIVIDING";
    case errc::hypothesis_violation: return "HYPOTHESIS_VIOLATION";
    case errc::split_undefined: return "SPLIT_UNDEFINED";
    case errc::coprimality_violation: return "COPRIMALITY_VIOLATION";
    case errc::s_not_coprime: return "S_NOT_COPRIME";
    case errc::config_invalid: return "CONFIG_INVALID";
    }
    return "UNKNOWN";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

/// Raised when a closed form refuses an input outside its stated hypothesis.
/// Verification sweeps count these as skips, not failures.
class hypothesis_error : public error {
public:
    using error::error;
};

[[noreturn]] inline void throw_error(errc code, const std::string& what) {
    switch (code) {
    case errc::hypothesis_violation:
    case errc::split_undefined:
    case errc::s_not_coprime:
        throw hypothesis_error(code, what);
    default:
        throw error(code, what);
    }
}

} // namespace menon
