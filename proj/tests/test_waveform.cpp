#include <catch_amalgamated.hpp>

#include "ddmol/errors.hpp"
#include "ddmol/waveform.hpp"

using namespace ddmol;

TEST_CASE("waveform construction and sampling") {
    DetuningWaveform w({{0, -2500}, {1, 2500}, {2, 2500}, {3, -2500}});
    CHECK(w.duration() == 3);
    CHECK(w.segment_count() == 3);
    CHECK(w.at(0.5) == 0.0);
    CHECK(w.at(-1) == -2500);
    CHECK(w.at(10) == -2500);
    CHECK(w.at(1.5) == 2500);

    CHECK_THROWS_AS(DetuningWaveform({{0, 0}, {0, 1}}), PhysicsError);
    CHECK_THROWS_AS(DetuningWaveform(std::vector<Breakpoint>{}), PhysicsError);
    CHECK_THROWS_AS(DetuningWaveform({{0, std::nan("")}}), PhysicsError);
}

TEST_CASE("trapezoid omits an empty hold") {
    const MoleculeParams p;
    CHECK(DetuningWaveform::trapezoid(p, 1.0, 0.0).breakpoints().size() == 3);
    const auto w = DetuningWaveform::trapezoid(p, 1.0, 0.5);
    CHECK(w.breakpoints().size() == 4);
    CHECK(w.duration() == 2.5);
    CHECK_THROWS_AS(DetuningWaveform::trapezoid(p, 0.0, 1.0), PhysicsError);
}

TEST_CASE("validation flags fast and slow sweeps") {
    const MoleculeParams p; // window about (0.658, 0.861) ns at safety 10
    {
        const auto r = validate_waveform(DetuningWaveform::trapezoid(p, 0.75, 0.3), p);
        CHECK(r.ok());
    }
    {
        const auto r = validate_waveform(DetuningWaveform::trapezoid(p, 0.1, 0.0), p);
        REQUIRE(r.has(WaveformIssue::TooFast));
        CHECK(r.findings[0].message.find("violates adiabaticity with respect to Tc") != std::string::npos);
        CHECK(r.findings[0].equivalent_sweep_time == Catch::Approx(0.1));
    }
    {
        // one full sweep in 1 ns is just above the nuclear bound at safety 10
        const auto r = validate_waveform(DetuningWaveform::trapezoid(p, 1.0, 0.0), p);
        CHECK(r.has(WaveformIssue::TooSlow));
        CHECK(validate_waveform(DetuningWaveform::trapezoid(p, 1.0, 0.0), p, 5.0).ok());
    }
    {
        const auto r = validate_waveform(DetuningWaveform({{0, -2500}, {1, 2600}}), p);
        CHECK(r.has(WaveformIssue::OutOfRange));
    }
    {
        const auto r = validate_waveform(DetuningWaveform({{0, -2500}, {0.7, 2500}}), p);
        CHECK(r.has(WaveformIssue::EndpointNotIdle));
        const auto held = validate_waveform(DetuningWaveform({{0, -2500}, {0.7, 2500}}, true), p);
        CHECK(held.ok());
    }
    {
        const auto r = validate_waveform(DetuningWaveform::trapezoid(p, 0.75, 0.0), p, 100.0);
        CHECK(r.has(WaveformIssue::EmptyWindow));
    }
    {
        // long holds are exempt from the rate check
        const auto r = validate_waveform(DetuningWaveform::trapezoid(p, 0.75, 1000.0), p);
        CHECK(r.ok());
    }
}
