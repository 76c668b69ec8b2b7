#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "urh/eos.hpp"
#include "urh/errors.hpp"

using urh::EosParams;

TEST_CASE("EosParams rejects sound speeds outside (0, 1)")
{
    CHECK_THROWS_AS(EosParams::from_cs2(0.0), urh::DomainError);
    CHECK_THROWS_AS(EosParams::from_cs2(1.0), urh::DomainError);
    CHECK_THROWS_AS(EosParams::from_cs2(-0.25), urh::DomainError);
    CHECK_THROWS_AS(EosParams::from_cs2(1.5), urh::DomainError);
    CHECK_THROWS_AS(EosParams::from_cs2(std::nan("")), urh::DomainError);
}

TEST_CASE("derived constants for the canonical cs2 = 1/3")
{
    const EosParams eos = EosParams::from_cs2(1.0 / 3.0);
    CHECK(eos.cs2 == 1.0 / 3.0);
    CHECK(eos.kappa == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(eos.cs == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("kappa = cs2/(1+cs2) across the whole range")
{
    testutil::Rng rng(0x5eed0001);
    for (int i = 0; i < 200; ++i) {
        const double cs2 = rng.uniform(1e-6, 1.0 - 1e-6);
        const EosParams eos = EosParams::from_cs2(cs2);
        CHECK(testutil::close(eos.kappa, cs2 / (1.0 + cs2), 1e-15));
        CHECK(testutil::close(eos.cs * eos.cs, cs2, 1e-15));
        CHECK(eos.kappa > 0.0);
        CHECK(eos.kappa < 0.5);  // kappa -> 1/2 only in the luminal limit
    }
}

TEST_CASE("pressure is the linear law p = cs2 rho")
{
    const EosParams eos = EosParams::from_cs2(1.0 / 3.0);
    CHECK(urh::pressure(3.0, eos) == 1.0);
    CHECK_THROWS_AS(urh::pressure(0.0, eos), urh::DomainError);
    CHECK_THROWS_AS(urh::pressure(-1.0, eos), urh::DomainError);

    testutil::Rng rng(0x5eed0002);
    for (int i = 0; i < 200; ++i) {
        const double a = rng.log_uniform(1e-8, 1e8);
        const double b = rng.log_uniform(1e-8, 1e8);
        CHECK(testutil::close(urh::pressure(a + b, eos),
                              urh::pressure(a, eos) + urh::pressure(b, eos), 1e-15));
    }
}

TEST_CASE("entropy density is rho^(1/(1+cs2))")
{
    testutil::Rng rng(0x5eed0003);
    for (int i = 0; i < 100; ++i) {
        const double cs2 = rng.uniform(0.05, 0.95);
        const EosParams eos = EosParams::from_cs2(cs2);
        CHECK(urh::entropy_density(1.0, eos) == 1.0);

        const double rho = rng.log_uniform(1e-6, 1e6);
        const double s = urh::entropy_density(rho, eos);
        // Undo the exponent: s^(1+cs2) must recover rho.
        CHECK(testutil::close(std::pow(s, 1.0 + cs2), rho, 1e-13));

        // Strictly increasing in rho.
        CHECK(urh::entropy_density(rho * 1.5, eos) > s);
    }
}
