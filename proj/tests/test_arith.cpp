// Integer and multiplicative-function utilities: every closed form here is
// cross-checked against a direct definition-level computation.
#include <catch2/catch_amalgamated.hpp>

#include <menon/arith.hpp>
#include <menon/error.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>

using namespace menon;

TEST_CASE("gcd64 treats zero as identity and ignores signs") {
    CHECK(gcd64(0, 0) == 0);
    CHECK(gcd64(7, 0) == 7);
    CHECK(gcd64(0, 7) == 7);
    CHECK(gcd64(-4, 6) == 2);
    CHECK(gcd64(4, -6) == 2);
    CHECK(gcd64(-4, -6) == 2);
    CHECK(gcd64(12, 18) == 6);
}

TEST_CASE("mod_reduce lands in [0, n)") {
    CHECK(mod_reduce(0, 5) == 0);
    CHECK(mod_reduce(7, 5) == 2);
    CHECK(mod_reduce(-1, 5) == 4);
    CHECK(mod_reduce(-10, 5) == 0);
    CHECK(mod_reduce(-13, 5) == 2);
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t a = -3 * n; a <= 3 * n; ++a) {
            const auto r = mod_reduce(a, n);
            CHECK(r >= 0);
            CHECK(r < n);
            CHECK((a - r) % n == 0);
        }
}

TEST_CASE("int_pow and rat_pow") {
    CHECK(int_pow(2, 10) == 1024);
    CHECK(int_pow(-3, 3) == -27);
    CHECK(int_pow(5, 0) == 1);
    CHECK(rat_pow(2, -3) == Rat(1) / 8);
    CHECK(rat_pow(3, 2) == 9);
    CHECK(rat_pow(1, -100) == 1);
}

TEST_CASE("factorize recovers the prime decomposition") {
    const auto f1 = factorize(1);
    CHECK(f1.parts.empty());
    CHECK(f1.value == 1);

    const auto f12 = factorize(12);
    REQUIRE(f12.parts.size() == 2);
    CHECK(f12.parts[0] == std::make_pair((std::int64_t)2, 2));
    CHECK(f12.parts[1] == std::make_pair((std::int64_t)3, 1));
    CHECK(f12.exponent_of(2) == 2);
    CHECK(f12.exponent_of(3) == 1);
    CHECK(f12.exponent_of(5) == 0);

    // A prime above the trial-division sieve limit.
    const auto fp = factorize(1000000007);
    REQUIRE(fp.parts.size() == 1);
    CHECK(fp.parts[0] == std::make_pair((std::int64_t)1000000007, 1));

    for (std::int64_t n = 1; n <= 2000; ++n) {
        const auto f = factorize(n);
        std::int64_t prod = 1;
        std::int64_t prev = 1;
        for (const auto& [p, e] : f.parts) {
            CHECK(p > prev);
            prev = p;
            CHECK(is_prime(p));
            prod *= int_pow(p, e).get_si();
        }
        CHECK(prod == n);
    }
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(-5), std::domain_error);
}

TEST_CASE("is_prime matches a sieve") {
    std::vector<bool> sieve(2001, true);
    sieve[0] = sieve[1] = false;
    for (int p = 2; p * p <= 2000; ++p)
        if (sieve[p])
            for (int q = p * p; q <= 2000; q += p) sieve[q] = false;
    for (std::int64_t n = 0; n <= 2000; ++n) CHECK(is_prime(n) == sieve[n]);
}

TEST_CASE("extended_nat ordering with infinity") {
    const auto inf = extended_nat::infinity();
    const extended_nat two(2);
    const extended_nat three(3);
    CHECK(two < three);
    CHECK(two < inf);
    CHECK(inf >= inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf == inf);
    CHECK((two + 1) == three);
    CHECK((inf + 5) == inf);
    CHECK(two.value() == 2);
    CHECK(two.str() == "2");
    CHECK(inf.str() == "inf");
    CHECK(inf.is_infinite());
}

TEST_CASE("valuation, including nu_p(0) = infinity") {
    CHECK(valuation(12, 2) == extended_nat(2));
    CHECK(valuation(12, 3) == extended_nat(1));
    CHECK(valuation(12, 5) == extended_nat(0));
    CHECK(valuation(0, 2) == extended_nat::infinity());
    CHECK(valuation(0, 97) == extended_nat::infinity());
    CHECK(valuation(1, 2) == extended_nat(0));
    CHECK(valuation(1024, 2) == extended_nat(10));
    CHECK_THROWS_AS(valuation(12, 4), std::domain_error);
    CHECK_THROWS_AS(valuation(12, 1), std::domain_error);
}

TEST_CASE("divisors are ascending and complete") {
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
    for (std::int64_t n = 1; n <= 1000; ++n) {
        const auto ds = divisors(n);
        CHECK(std::is_sorted(ds.begin(), ds.end()));
        CHECK((std::int64_t)ds.size() == divisor_count(n));
        std::int64_t naive = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++naive;
        CHECK((std::int64_t)ds.size() == naive);
        for (auto d : ds) CHECK(n % d == 0);
    }
}

TEST_CASE("moebius: values and the fundamental sum") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    for (std::int64_t n = 1; n <= 1000; ++n) {
        std::int64_t sum = 0;
        for (auto d : divisors(n)) sum += moebius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
        CHECK(is_squarefree(n) == (moebius(n) != 0));
    }
}

TEST_CASE("euler_phi: values and divisor sum") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    for (std::int64_t n = 1; n <= 1000; ++n) {
        std::int64_t count = 0;
        for (std::int64_t a = 1; a <= n; ++a)
            if (gcd64(a, n) == 1) ++count;
        CHECK(euler_phi(n) == count);
    }
    for (std::int64_t n = 1; n <= 1000; ++n) {
        std::int64_t sum = 0;
        for (auto d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("jordan totient equals its moebius-sum definition") {
    CHECK(jordan((std::int64_t)1, 12) == Rat(euler_phi(12)));
    CHECK(jordan((std::int64_t)2, 9) == Rat(72));
    CHECK(jordan((std::int64_t)0, 1) == Rat(1));
    CHECK(jordan((std::int64_t)0, 5) == Rat(0));
    CHECK(jordan((std::int64_t)-1, 4) == -Rat(1) / 4);
    for (std::int64_t m = 0; m <= 3; ++m)
        for (std::int64_t n = 1; n <= 300; ++n) {
            Rat direct = 0;
            for (auto d : divisors(n))
                direct += Rat(moebius(n / d)) * rat_pow(d, m);
            CHECK(jordan(m, n) == direct);
        }
    // Float overload agrees with the exact one at integer exponents.
    for (std::int64_t n = 1; n <= 50; ++n) {
        const double exact = jordan((std::int64_t)2, n).get_d();
        CHECK_THAT(jordan(2.0, n), Catch::Matchers::WithinRel(exact, 1e-12));
    }
}

TEST_CASE("sigma of divisors equals its definition") {
    CHECK(sigma((std::int64_t)0, 12) == Rat(6));
    CHECK(sigma((std::int64_t)1, 6) == Rat(12));
    CHECK(sigma((std::int64_t)-1, 6) == Rat(2));
    for (std::int64_t m = 0; m <= 3; ++m)
        for (std::int64_t n = 1; n <= 300; ++n) {
            Rat direct = 0;
            for (auto d : divisors(n)) direct += rat_pow(d, m);
            CHECK(sigma(m, n) == direct);
        }
    for (std::int64_t n = 1; n <= 50; ++n) {
        double direct = 0;
        for (auto d : divisors(n)) direct += std::sqrt((double)d);
        CHECK_THAT(sigma(0.5, n), Catch::Matchers::WithinRel(direct, 1e-12));
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 10) == 7);
    CHECK(mod_inverse(1, 7) == 1);
    CHECK(mod_inverse(5, 1) == 0);  // everything is congruent mod 1
    CHECK(mod_inverse(-3, 10) == 3);
    for (std::int64_t m = 1; m <= 200; ++m)
        for (std::int64_t a = 1; a < m; ++a)
            if (gcd64(a, m) == 1) {
                const auto inv = mod_reduce(mod_inverse(a, m), m);
                CHECK(mod_reduce(a * inv, m) == (m == 1 ? 0 : 1));
            }
    try {
        mod_inverse(2, 4);
        FAIL("expected NON_INVERTIBLE");
    } catch (const error& e) {
        CHECK(e.code() == errc::non_invertible);
        CHECK(std::string(e.what()).find("NON_INVERTIBLE") == 0);
    }
}

TEST_CASE("ramanujan_sum: spot values and multiplicative formula") {
    CHECK(ramanujan_sum(6, 2) == -1);
    CHECK(ramanujan_sum(4, 2) == -2);
    CHECK(ramanujan_sum(1, 0) == 1);
    CHECK(ramanujan_sum(5, 0) == euler_phi(5));  // k = 0 counts all units
    CHECK(ramanujan_sum(5, 1) == -1);            // = moebius(5)
    CHECK(ramanujan_sum(9, 3) == -3);
    CHECK(ramanujan_sum(12, 12) == euler_phi(12));
    // c_n(k) = mu(n/g) phi(n) / phi(n/g) with g = (n, k).
    for (std::int64_t n = 1; n <= 100; ++n)
        for (std::int64_t k = 0; k < n; ++k) {
            const std::int64_t g = gcd64(n, k) == 0 ? n : gcd64(n, k);
            const Rat hoelder =
                Rat(moebius(n / g)) * euler_phi(n) / euler_phi(n / g);
            CHECK(Rat(ramanujan_sum(n, k)) == hoelder);
        }
    // Periodicity in k.
    for (std::int64_t n = 1; n <= 40; ++n)
        for (std::int64_t k = 0; k < n; ++k)
            CHECK(ramanujan_sum(n, k + 3 * n) == ramanujan_sum(n, k));
}

TEST_CASE("format_float gives compact decimal text") {
    CHECK(format_float(0.5) == "0.5");
    CHECK(format_float(2.0) == "2");
    CHECK(format_float(-1.25) == "-1.25");
}
