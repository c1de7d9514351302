// Even functions (mod n), their moebius transforms, and the selector
// grammar that names function families on the command line.
#include <catch2/catch_amalgamated.hpp>

#include <menon/arith.hpp>
#include <menon/error.hpp>
#include <menon/even_function.hpp>

#include <cstdint>

using namespace menon;

TEST_CASE("builtin functions are even mod n") {
    for (std::int64_t n = 1; n <= 60; ++n) {
        const auto fns = {make_gcd_power(n, 1), make_gcd_power(n, 2),
                          make_sigma_gcd(n, 1), make_ramanujan(n)};
        for (const auto& f : fns)
            for (std::int64_t a = -2 * n; a <= 2 * n; ++a) {
                CHECK(f(a) == f.at_divisor(gcd64(mod_reduce(a, n), n)));
                CHECK(f(a) == f(a + n));
                CHECK(f(a) == f(-a));
            }
    }
}

TEST_CASE("f(0) and f(n) read the value at divisor n") {
    const auto f = make_gcd_power(12, 1);
    CHECK(f(0) == 12);
    CHECK(f(12) == 12);
    CHECK(f(-12) == 12);
    CHECK(f(8) == 4);
    CHECK(f(5) == 1);
}

TEST_CASE("builtin divisor values") {
    const auto g2 = make_gcd_power(12, 2);
    for (auto d : divisors(12)) CHECK(g2.at_divisor(d) == Rat(d * d));

    const auto gm = make_gcd_power(12, -1);
    CHECK(gm.at_divisor(4) == Rat(1) / 4);

    const auto s1 = make_sigma_gcd(12, 1);
    for (auto d : divisors(12)) CHECK(s1.at_divisor(d) == sigma((std::int64_t)1, d));

    const auto r = make_ramanujan(12);
    for (auto d : divisors(12)) CHECK(r.at_divisor(d) == Rat(ramanujan_sum(12, d)));

    const auto c = make_constant<Rat>(9, Rat(1));
    for (auto d : divisors(9)) CHECK(c.at_divisor(d) == 1);

    CHECK(g2.label() == "gcdpow:2");
    CHECK(s1.label() == "sigmagcd:1");
    CHECK(r.label() == "ramanujan");
}

TEST_CASE("at_divisor rejects non-divisors") {
    const auto f = make_gcd_power(12, 1);
    CHECK_THROWS_AS(f.at_divisor(5), error);
    try {
        f.at_divisor(5);
    } catch (const error& e) {
        CHECK(e.code() == errc::d_not_dividing);
    }
    divisor_map<Rat> dm{6, divisors(6), {Rat(1), Rat(2), Rat(3), Rat(6)}};
    CHECK(dm.at(3) == 3);
    CHECK_THROWS_AS(dm.at(4), error);
}

TEST_CASE("even_function requires one value per divisor") {
    CHECK_THROWS_AS(even_function<Rat>(6, "bad", {Rat(1), Rat(2)}),
                    std::invalid_argument);
}

TEST_CASE("moebius transform closed forms for the builtin families") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (std::int64_t m = 0; m <= 2; ++m) {
            const auto tg = mobius_transform(make_gcd_power(n, m));
            const auto ts = mobius_transform(make_sigma_gcd(n, m));
            for (auto d : divisors(n)) {
                CHECK(tg.at(d) == jordan(m, d));
                CHECK(ts.at(d) == rat_pow(d, m));
            }
        }
        const auto tr = mobius_transform(make_ramanujan(n));
        for (auto d : divisors(n))
            CHECK(tr.at(d) == Rat(d) * moebius(n / d));
    }
}

TEST_CASE("moebius transform inverts the divisor sum") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto f = make_sigma_gcd(n, 2);
        const auto t = mobius_transform(f);
        for (auto d : divisors(n)) {
            Rat acc = 0;
            for (auto e : divisors(d)) acc += t.at(e);
            CHECK(acc == f.at_divisor(d));
        }
    }
}

TEST_CASE("make_from_function samples the rule at each divisor") {
    // The explicit return type matters: gmpxx operator expressions are
    // lazy templates that must not outlive their operands.
    const auto f = make_from_function<Rat>(
        18, "halves", [](std::int64_t d) -> Rat { return Rat(d) / 2; });
    CHECK(f.at_divisor(6) == 3);
    CHECK(f(24) == 3);
    CHECK(f.label() == "halves");
}

TEST_CASE("selector grammar accepts the documented forms") {
    auto s = function_spec::parse("gcdpow:2");
    CHECK(s.kind == function_spec::family_kind::gcd_power);
    CHECK(s.integral_exponent);
    CHECK(s.m_int == 2);

    s = function_spec::parse("gcdpow:-1");
    CHECK(s.integral_exponent);
    CHECK(s.m_int == -1);

    s = function_spec::parse("sigmagcd:0");
    CHECK(s.kind == function_spec::family_kind::sigma_gcd);
    CHECK(s.m_int == 0);

    s = function_spec::parse("gcdpow:0.5");
    CHECK_FALSE(s.integral_exponent);
    CHECK(s.m_float == 0.5);

    s = function_spec::parse("gcdpow:1/2");
    CHECK_FALSE(s.integral_exponent);
    CHECK(s.m_float == 0.5);

    s = function_spec::parse("ramanujan");
    CHECK(s.kind == function_spec::family_kind::ramanujan);

    s = function_spec::parse("const");
    CHECK(s.kind == function_spec::family_kind::constant);
}

TEST_CASE("selector grammar rejects malformed input") {
    for (const char* bad : {"", "gcd", "gcdpow", "gcdpow:", "gcdpow:x",
                            "gcdpow:1x", "gcdpow:1/0", "ramanujan:2",
                            "const:1", "sigmagcd:--2"}) {
        try {
            function_spec::parse(bad);
            FAIL("expected CONFIG_INVALID for " << bad);
        } catch (const error& e) {
            CHECK(e.code() == errc::config_invalid);
        }
    }
}

TEST_CASE("exact families require integral exponents") {
    const auto spec = function_spec::parse("gcdpow:1/2");
    CHECK_THROWS_AS(make_family(spec, Rat{}), error);
    const auto fam = make_family(spec, double{});
    CHECK(fam.at(9).at_divisor(9) == 3.0);
}

TEST_CASE("exact and float families agree at integer exponents") {
    const auto spec = function_spec::parse("sigmagcd:2");
    const auto fr = make_family(spec, Rat{});
    const auto fd = make_family(spec, double{});
    for (std::int64_t n : {1, 6, 12, 30}) {
        const auto er = fr.at(n);
        const auto ed = fd.at(n);
        for (auto d : divisors(n))
            CHECK_THAT(ed.at_divisor(d),
                       Catch::Matchers::WithinRel(er.at_divisor(d).get_d(), 1e-12));
    }
}

TEST_CASE("builtin families are multiplicative") {
    for (const auto& spec : builtin_function_specs()) {
        const auto fam = make_family(spec, Rat{});
        CHECK(is_multiplicative_family(fam, 40, nullptr));
        CHECK_NOTHROW(require_multiplicative_family(fam, 30));
    }
}

TEST_CASE("a constant other than 1 is not multiplicative") {
    function_family<Rat> fam;
    fam.label = "const2";
    fam.at = [](std::int64_t n) { return make_constant<Rat>(n, Rat(2)); };
    std::string witness;
    CHECK_FALSE(is_multiplicative_family(fam, 20, &witness));
    CHECK_FALSE(witness.empty());
    try {
        require_multiplicative_family(fam, 20);
        FAIL("expected COPRIMALITY_VIOLATION");
    } catch (const error& e) {
        CHECK(e.code() == errc::coprimality_violation);
    }
}

TEST_CASE("builtin spec list covers the six default selectors") {
    const auto specs = builtin_function_specs();
    REQUIRE(specs.size() == 6);
    CHECK(specs[0].text == "gcdpow:0");
    CHECK(specs[1].text == "gcdpow:1");
    CHECK(specs[2].text == "gcdpow:2");
    CHECK(specs[3].text == "sigmagcd:0");
    CHECK(specs[4].text == "sigmagcd:1");
    CHECK(specs[5].text == "ramanujan");
}
