#include <doctest.h>

#include <cmath>
#include <limits>

#include "isac/errors.hpp"
#include "isac/quantities.hpp"
#include "oracles.hpp"

using namespace isac;

TEST_CASE("lin_to_db examples")
{
    CHECK(lin_to_db(LinearRatio(1.0)).value() == 0.0);
    CHECK(lin_to_db(LinearRatio(100.0)).value() == doctest::Approx(20.0).epsilon(1e-15));
    CHECK(lin_to_db(LinearRatio(1024.0)).value() == doctest::Approx(30.103).epsilon(1e-5));
}

TEST_CASE("db_to_lin examples")
{
    CHECK(db_to_lin(Decibel(0.0)).value() == 1.0);
    CHECK(db_to_lin(Decibel(10.8)).value() == doctest::Approx(12.023).epsilon(1e-4));
    CHECK(db_to_lin(Decibel(-6.02)).value() == doctest::Approx(0.2500).epsilon(1e-3));
}

TEST_CASE("dbm_to_watts examples")
{
    CHECK(dbm_to_watts(PowerDbm(30.0)).watts() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbm_to_watts(PowerDbm(20.0)).watts() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(dbm_to_watts(PowerDbm(-174.0)).watts() == doctest::Approx(3.981e-21).epsilon(1e-4));
}

TEST_CASE("non-positive and non-finite values are rejected")
{
    CHECK_THROWS_AS(LinearRatio(0.0), DomainError);
    CHECK_THROWS_AS(LinearRatio(-1.0), DomainError);
    CHECK_THROWS_AS(LinearRatio(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(Decibel(std::nan("")), DomainError);
    CHECK_THROWS_AS(Decibel(-std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(PowerWatts(0.0), DomainError);
    CHECK_THROWS_AS(PowerDbm(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(NoisePsd(-1e-21), DomainError);
    CHECK_THROWS_AS(to_db(0.0), DomainError);
}

TEST_CASE("noise PSD from dBm/Hz")
{
    const auto n = NoisePsd::from_dbm_per_hz(-174.0);
    CHECK(n.watts_per_hz() == doctest::Approx(3.981071705534973e-21).epsilon(1e-12));
    CHECK(n.dbm_per_hz() == doctest::Approx(-174.0).epsilon(1e-13));
}

TEST_CASE("property: dB round trip, additivity and dBm consistency")
{
    test::ParamGenerator gen(7);
    for (int i = 0; i < 2000; ++i) {
        const double x = gen.log_uniform(1e-30, 1e30);
        const double y = gen.log_uniform(1e-30, 1e30);
        const double back = db_to_lin(lin_to_db(LinearRatio(x))).value();
        REQUIRE(std::abs(back - x) / x < 1e-12);

        const double sum = lin_to_db(LinearRatio(x)).value() + lin_to_db(LinearRatio(y)).value();
        REQUIRE(std::abs(lin_to_db(LinearRatio(x * y)).value() - sum) < 1e-9);

        const double dbm = gen.uniform(-200.0, 100.0);
        const double w = dbm_to_watts(PowerDbm(dbm)).watts();
        REQUIRE(std::abs(w - db_to_lin(Decibel(dbm)).value() * 1e-3) / w < 1e-12);
        REQUIRE(std::abs(watts_to_dbm(PowerWatts(w)).dbm() - dbm) < 1e-9);
    }
}
