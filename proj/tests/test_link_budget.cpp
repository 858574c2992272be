#include <doctest.h>

#include <cmath>

#include "isac/errors.hpp"
#include "isac/link_budget.hpp"
#include "oracles.hpp"

using namespace isac;
using test::db;

namespace {

const LinearRatio kNoLoss(1.0);

double comm_db(const SystemParams& p, double d) { return db(comm_snr(p, kNoLoss, Meters{d}).value()); }
double radar_db(const SystemParams& p, double d) { return db(radar_snr(p, kNoLoss, Meters{d}).value()); }

}  // namespace

// Expected values below were evaluated independently in double precision
// from the free-space SNR expressions with c = 299792458 m/s.

TEST_CASE("comm_snr examples")
{
    CHECK(comm_db(test::sub6(30.0), 1441.5) == doctest::Approx(38.83349874923883).epsilon(1e-12));
    CHECK(comm_db(test::sub6(30.0), 1441.5) == doctest::Approx(38.84).epsilon(0.05 / 38.84));
    CHECK(comm_db(test::mmwave(20.0), 1443.0) == doctest::Approx(4.845064975133104).epsilon(1e-12));

    const auto p = test::subthz(30.0);
    CHECK(comm_db(p, 100.0) - comm_db(p, 200.0) == doctest::Approx(20.0 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("radar_snr examples")
{
    CHECK(radar_db(test::sub6(30.0), 1442.0) == doctest::Approx(10.782682107843735).epsilon(1e-12));
    CHECK(std::abs(radar_db(test::sub6(30.0), 1442.0) - 10.8) < 0.05);
    CHECK(radar_db(test::subthz(20.0), 67.1) == doctest::Approx(10.795255663647072).epsilon(1e-12));
    CHECK(std::abs(radar_db(test::subthz(20.0), 67.1) - 10.8) < 0.1);

    const auto p = test::mmwave(30.0);
    CHECK(radar_db(p, 100.0) - radar_db(p, 200.0) == doctest::Approx(40.0 * std::log10(2.0)).epsilon(1e-12));
}

TEST_CASE("non-positive distances are domain errors")
{
    const auto p = test::sub6(30.0);
    CHECK_THROWS_AS(comm_snr(p, kNoLoss, Meters{0.0}), DomainError);
    CHECK_THROWS_AS(comm_snr(p, kNoLoss, Meters{-5.0}), DomainError);
    CHECK_THROWS_AS(radar_snr(p, kNoLoss, Meters{0.0}), DomainError);
    CHECK_THROWS_AS(static_cast<void>(Scenario{Meters{10.0}, Meters{0.0}}.delta()), DomainError);
}

TEST_CASE("solve_comm_range examples")
{
    const double d = solve_comm_range(test::sub6(20.0), kNoLoss, LinearRatio(3.0)).value;
    CHECK(d == doctest::Approx(23010.653715516).epsilon(1e-10));
    CHECK(std::abs(d - 24345.0) / 24345.0 < 0.10);

    const auto p = test::mmwave(30.0);
    const double d1 = solve_comm_range(p, kNoLoss, LinearRatio(10.0)).value;
    const double d4 = solve_comm_range(p, kNoLoss, LinearRatio(40.0)).value;
    CHECK(d4 / d1 == doctest::Approx(0.5).epsilon(1e-14));

    CHECK(solve_comm_range(p, kNoLoss, LinearRatio(241.8)).value == doctest::Approx(512.6151432309356).epsilon(1e-10));
}

TEST_CASE("solve_radar_range examples")
{
    const LinearRatio target = db_to_lin(Decibel(10.8));
    const double sub6 = solve_radar_range(test::sub6(30.0), kNoLoss, target).value;
    CHECK(sub6 == doctest::Approx(1440.5631893682455).epsilon(1e-10));
    CHECK(std::abs(sub6 - 1442.0) / 1442.0 < 0.01);
    const double mm = solve_radar_range(test::mmwave(20.0), kNoLoss, target).value;
    CHECK(mm == doctest::Approx(288.1126378736491).epsilon(1e-10));
    CHECK(std::abs(mm - 288.6) / 288.6 < 0.01);

    const double sub6_low = solve_radar_range(test::sub6(20.0), kNoLoss, target).value;
    CHECK(sub6 / sub6_low == doctest::Approx(std::pow(10.0, 0.25)).epsilon(1e-13));
}

TEST_CASE("system parameter validation")
{
    auto p = test::sub6(30.0);
    CHECK_NOTHROW(validate(p));
    p.bandwidth_hz = 3e9;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = test::sub6(30.0);
    p.sigma_rcs_m2 = 0.0;
    CHECK_THROWS_AS(validate(p), ValidationError);
    p = test::sub6(30.0);
    p.freq_hz = std::nan("");
    CHECK_THROWS_AS(validate(p), ValidationError);
}

TEST_CASE("property: range inversions round trip")
{
    test::ParamGenerator gen(11);
    for (int i = 0; i < 1000; ++i) {
        const auto p = gen.params();
        const LinearRatio loss(gen.uniform(0.1, 1.0));
        const Meters d{gen.log_uniform(1.0, 1e5)};

        const LinearRatio rc = comm_snr(p, loss, d);
        REQUIRE(std::abs(solve_comm_range(p, loss, rc).value - d.value) / d.value < 1e-9);
        REQUIRE(std::abs(comm_snr(p, loss, solve_comm_range(p, loss, rc)).value() / rc.value() - 1.0) < 1e-9);

        const LinearRatio rr = radar_snr(p, loss, d);
        REQUIRE(std::abs(solve_radar_range(p, loss, rr).value - d.value) / d.value < 1e-9);
        REQUIRE(std::abs(radar_snr(p, loss, solve_radar_range(p, loss, rr)).value() / rr.value() - 1.0) < 1e-9);
    }
}

TEST_CASE("property: monotonicity and exponents")
{
    test::ParamGenerator gen(13);
    const LinearRatio loss(1.0);
    for (int i = 0; i < 200; ++i) {
        const auto base = gen.params();
        const Meters d{gen.log_uniform(10.0, 1e4)};
        const double c0 = comm_snr(base, loss, d).value();
        const double r0 = radar_snr(base, loss, d).value();
        const double k = gen.uniform(1.5, 10.0);

        REQUIRE(comm_snr(base, loss, Meters{d.value * k}).value() < c0);
        REQUIRE(radar_snr(base, loss, Meters{d.value * k}).value() < r0);

        auto p = base;
        p.bandwidth_hz /= k;  // stays below f
        REQUIRE(comm_snr(p, loss, d).value() > c0);
        REQUIRE(radar_snr(p, loss, d).value() > r0);

        p = base;
        p.n_ue = NoisePsd(base.n_ue.watts_per_hz() * k);
        p.n_bs = NoisePsd(base.n_bs.watts_per_hz() * k);
        REQUIRE(comm_snr(p, loss, d).value() < c0);
        REQUIRE(radar_snr(p, loss, d).value() < r0);

        p = base;
        p.power = PowerWatts(base.power.watts() * k);
        REQUIRE(comm_snr(p, loss, d).value() > c0);
        REQUIRE(radar_snr(p, loss, d).value() > r0);

        p = base;
        p.g_ue = LinearRatio(base.g_ue.value() * k);
        REQUIRE(comm_snr(p, loss, d).value() > c0);
        REQUIRE(radar_snr(p, loss, d).value() == r0);

        p = base;
        p.g_p = LinearRatio(base.g_p.value() * k);
        REQUIRE(radar_snr(p, loss, d).value() > r0);
        p = base;
        p.sigma_rcs_m2 *= k;
        REQUIRE(radar_snr(p, loss, d).value() > r0);

        p = base;
        p.g_bs = LinearRatio(base.g_bs.value() * k);
        REQUIRE(comm_snr(p, loss, d).value() / c0 == doctest::Approx(k).epsilon(1e-13));
        REQUIRE(radar_snr(p, loss, d).value() / r0 == doctest::Approx(k * k).epsilon(1e-13));

        p = base;
        p.freq_hz *= 10.0;
        REQUIRE(db(c0) - db(comm_snr(p, loss, d).value()) == doctest::Approx(20.0).epsilon(1e-11));
        REQUIRE(db(r0) - db(radar_snr(p, loss, d).value()) == doctest::Approx(20.0).epsilon(1e-11));
    }
}
