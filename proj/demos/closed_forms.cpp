// Prints a small table of shifted-gcd character sums, comparing the
// defining summation with the closed form, and shows the classical
// phi(n) * tau(n) specialization at k = 0, s = 1.
#include <menon/menon.hpp>

#include <cstdio>

int main() {
    using namespace menon;

    std::printf("S(n, k, s) = sum over units a mod n of gcd(a - s, n) * zeta_n^(a k)\n\n");
    std::printf("%4s %4s %4s  %-22s %-22s\n", "n", "k", "s", "defining sum", "closed form");
    for (std::int64_t n : {4, 6, 8, 12}) {
        const auto f = make_gcd_power(n, 1);
        for (std::int64_t k = 0; k <= 2; ++k)
            for (std::int64_t s = 0; s <= 1; ++s) {
                const auto brute = menon_sum(f, k, s);
                const auto closed = menon_sum_closed(f, k, s);
                std::printf("%4lld %4lld %4lld  %-22s %-22s%s\n",
                            (long long)n, (long long)k, (long long)s,
                            brute.str().c_str(), closed.str().c_str(),
                            brute == closed ? "" : "  MISMATCH");
            }
    }

    std::printf("\nAt k = 0, s = 1 the sum collapses to phi(n) * tau(n):\n\n");
    std::printf("%4s %10s %10s\n", "n", "S(n,0,1)", "phi*tau");
    for (std::int64_t n = 1; n <= 12; ++n) {
        const Rat value = menon_sum_trivial_char(make_gcd_power(n, 1), 0, 1);
        const std::int64_t expect = euler_phi(n) * divisor_count(n);
        std::printf("%4lld %10s %10lld\n", (long long)n, value.get_str().c_str(),
                    (long long)expect);
    }
    return 0;
}
