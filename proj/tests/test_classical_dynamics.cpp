#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lee/classical_dynamics.hpp"
#include "lee/fixtures.hpp"

#include <cmath>
#include <random>

using namespace lee;

namespace {

double max_drift(const Trajectory& traj, double lambda) {
    const double p0 = p_lambda(traj.samples.front(), lambda);
    double d = 0.0;
    for (const auto& s : traj.samples) d = std::max(d, std::abs(p_lambda(s, lambda) - p0));
    return d;
}

}  // namespace

TEST_CASE("system builders") {
    const LinearSystem lee11 = lee_system({1.0, 1.0});
    Eigen::Matrix2d g, k;
    g << 0.0, 1.0, -1.0, 0.0;
    k << 1.0, 1.0, 1.0, 1.0;
    CHECK((lee11.G - g).cwiseAbs().maxCoeff() == 0.0);
    CHECK((lee11.K - k).cwiseAbs().maxCoeff() == 0.0);

    const LinearSystem lee1 = lee_system({-1.0, 1.0 / 3.0});
    g << 0.0, -1.0, 1.0, 0.0;
    k << 1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0;
    CHECK((lee1.G - g).cwiseAbs().maxCoeff() == 0.0);
    CHECK((lee1.K - k).cwiseAbs().maxCoeff() == 0.0);

    const LinearSystem free2 = lee_system({0.0, 0.0});
    CHECK(free2.G.cwiseAbs().maxCoeff() == 0.0);
    CHECK((free2.K - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() == 0.0);

    const LinearSystem bate0 = bateman_system(0.0);
    CHECK(bate0.G.cwiseAbs().maxCoeff() == 0.0);

    const LinearSystem gen0 = generalized_system(0.4, 0.0, 0.0);
    const LinearSystem bate = bateman_system(0.4);
    CHECK((gen0.M - bate.M).cwiseAbs().maxCoeff() == 0.0);
    CHECK((gen0.G - bate.G).cwiseAbs().maxCoeff() == 0.0);
    CHECK((gen0.K - bate.K).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_WITH_AS((void)generalized_system(0.1, 0.5, 0.5), "degenerate mass matrix",
                         std::invalid_argument);
    const LinearSystem gen = generalized_system(0.1, 0.2, -0.3);
    CHECK(gen.M(0, 1) == doctest::Approx(-0.6));
    CHECK(gen.M(1, 0) == doctest::Approx(0.4));
}

TEST_CASE("integrate: uncoupled oscillators against the closed-form solution") {
    const TrajectoryState s0{0.0, {1.0, 0.0}, {0.0, 0.0}};
    const Trajectory traj = integrate(lee_system({0.0, 0.0}), s0, 1e-3, 2.0 * M_PI);
    const TrajectoryState& last = traj.samples.back();
    CHECK(last.t == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(std::abs(last.q(0) - 1.0) < 1e-10);
    CHECK(std::abs(last.qdot(0)) < 1e-10);
    // cos/sin over one period, sampled
    for (std::size_t i = 0; i < traj.samples.size(); i += 500) {
        const TrajectoryState& s = traj.samples[i];
        CHECK(std::abs(s.q(0) - std::cos(s.t)) < 1e-8);
        CHECK(std::abs(s.q(1)) < 1e-12);
    }
}

TEST_CASE("integrate: sample grid and argument guards") {
    const TrajectoryState s0{0.0, {1.0, 0.0}, {0.0, 1.0}};
    const Trajectory traj = integrate(lee_system({0.3, 0.2}), s0, 1e-2, 1.0);
    CHECK(traj.samples.size() == 101);
    for (std::size_t i = 0; i + 1 < traj.samples.size(); ++i) {
        CHECK(std::abs(traj.samples[i + 1].t - traj.samples[i].t - traj.dt) < 1e-12);
    }
    CHECK_THROWS_AS((void)integrate(lee_system({0.0, 0.0}), s0, 2.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)integrate(lee_system({0.0, 0.0}), s0, -0.1, 1.0),
                    std::invalid_argument);

    // equilibrium stays put
    const Trajectory zero =
        integrate(lee_system({1.0, 1.0}), TrajectoryState{0.0, {0.0, 0.0}, {0.0, 0.0}},
                  1e-2, 1.0);
    for (const auto& s : zero.samples) {
        CHECK(s.q.cwiseAbs().maxCoeff() == 0.0);
        CHECK(s.qdot.cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("integrate: blow-up detection") {
    // amplified Bateman component grows like exp(gamma t / 2)
    const TrajectoryState s0{0.0, {0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS((void)integrate(bateman_system(5.0), s0, 1e-2, 30.0), BlowUpError);
    try {
        (void)integrate(bateman_system(5.0), s0, 1e-2, 30.0);
    } catch (const BlowUpError& e) {
        CHECK(e.t > 0.0);
        CHECK(std::string(e.what()).find("blow-up at t=") == 0);
    }
}

TEST_CASE("p_lambda values and conservation") {
    CHECK(p_lambda(TrajectoryState{0.0, {0.0, 0.0}, {0.0, 0.0}}, 1.0) == 0.0);
    CHECK(p_lambda(TrajectoryState{0.0, {1.0, 0.0}, {0.0, 0.0}}, 0.0) == 0.5);

    const TrajectoryState s0{0.0, {1.0, 0.0}, {0.0, 1.0}};
    for (const ModelParams p : {ModelParams{1.0, 1.0}, ModelParams{-0.6, 0.4}}) {
        const Trajectory traj = integrate(lee_system(p), s0, 1e-3, 20.0);
        CHECK(max_drift(traj, p.lambda) < 1e-11);
    }
}

TEST_CASE("p_lambda drift shrinks by ~16x or better per halving of dt") {
    const TrajectoryState s0{0.0, {1.0, 0.0}, {0.0, 1.0}};
    const ModelParams p{1.0, 1.0};
    const double d1 = max_drift(integrate(lee_system(p), s0, 0.05, 10.0), p.lambda);
    const double d2 = max_drift(integrate(lee_system(p), s0, 0.025, 10.0), p.lambda);
    const double d3 = max_drift(integrate(lee_system(p), s0, 0.0125, 10.0), p.lambda);
    CHECK(d1 > 1e-9);
    CHECK(d1 / d2 >= 12.0);
    CHECK(d2 / d3 >= 12.0);
}

TEST_CASE("p_lambda is not conserved for the Bateman system") {
    const TrajectoryState s0{0.0, {1.0, 1.0}, {0.0, 0.0}};
    const Trajectory traj = integrate(bateman_system(0.5), s0, 1e-3, 10.0);
    CHECK(max_drift(traj, 0.0) > 1e-3);
}

TEST_CASE("bateman envelopes: damped x, amplified y") {
    const TrajectoryState s0{0.0, {1.0, 1.0}, {0.0, 0.0}};
    const Trajectory traj = integrate(bateman_system(0.1), s0, 1e-3, 40.0);
    double x_early = 0.0, x_late = 0.0, y_early = 0.0, y_late = 0.0;
    for (const auto& s : traj.samples) {
        if (s.t < 10.0) {
            x_early = std::max(x_early, std::abs(s.q(0)));
            y_early = std::max(y_early, std::abs(s.q(1)));
        } else if (s.t > 30.0) {
            x_late = std::max(x_late, std::abs(s.q(0)));
            y_late = std::max(y_late, std::abs(s.q(1)));
        }
    }
    CHECK(x_late < 0.5 * x_early);
    CHECK(y_late > 2.0 * y_early);
}

TEST_CASE("stability_eigenvalues diagnostic") {
    // two uncoupled unit oscillators: +-i twice
    const Eigen::Vector4cd free2 = stability_eigenvalues(lee_system({0.0, 0.0}));
    for (int j = 0; j < 4; ++j) {
        CHECK(std::abs(free2(j).real()) < 1e-12);
        CHECK(std::abs(free2(j).imag()) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // the amplified Bateman branch has a growing mode
    const Eigen::Vector4cd bate = stability_eigenvalues(bateman_system(0.5));
    double max_re = -1e300;
    for (int j = 0; j < 4; ++j) max_re = std::max(max_re, bate(j).real());
    CHECK(max_re == doctest::Approx(0.25).epsilon(1e-10));
    // bounded Lee point: no growth
    const Eigen::Vector4cd l11 = stability_eigenvalues(lee_system({1.0, 1.0}));
    for (int j = 0; j < 4; ++j) CHECK(l11(j).real() < 1e-8);
}

TEST_CASE("hamilton_flow: basics") {
    const QuadraticHamiltonian id = QuadraticHamiltonian::from_matrix(Matrix4::Identity());
    const PhaseTrajectory zero = hamilton_flow(id, Vector4::Zero(), 1e-2, 1.0);
    for (const auto& s : zero.samples) CHECK(s.v.cwiseAbs().maxCoeff() == 0.0);

    // identity h: each (q, p) plane rotates with period 2 pi
    Vector4 v0;
    v0 << 1.0, -0.5, 0.0, 0.25;
    const PhaseTrajectory rot = hamilton_flow(id, v0, 1e-3, 2.0 * M_PI);
    CHECK((rot.samples.back().v - v0).cwiseAbs().maxCoeff() < 1e-8);

    // energy conserved along the flow
    const QuadraticHamiltonian h = build_h({-1.0, 1.0 / 3.0});
    const PhaseTrajectory flow = hamilton_flow(h, v0, 1e-3, 50.0);
    const double e0 = quad_eval(h, flow.samples.front().v);
    double drift = 0.0;
    for (const auto& s : flow.samples) {
        drift = std::max(drift, std::abs(quad_eval(h, s.v) - e0));
    }
    CHECK(drift < 1e-11);
}

TEST_CASE("hamilton_flow energy drift scales like the p_lambda drift") {
    const QuadraticHamiltonian h = build_h({-1.0, 1.0 / 3.0});
    Vector4 v0;
    v0 << 1.0, 0.0, 0.0, 1.0;
    double drifts[3];
    double dt = 0.05;
    for (int i = 0; i < 3; ++i, dt *= 0.5) {
        const PhaseTrajectory flow = hamilton_flow(h, v0, dt, 10.0);
        const double e0 = quad_eval(h, flow.samples.front().v);
        drifts[i] = 0.0;
        for (const auto& s : flow.samples) {
            drifts[i] = std::max(drifts[i], std::abs(quad_eval(h, s.v) - e0));
        }
    }
    CHECK(drifts[0] > 1e-10);
    CHECK(drifts[0] / drifts[1] >= 12.0);
    CHECK(drifts[1] / drifts[2] >= 12.0);
}

TEST_CASE("Hamiltonian flow matches the Lagrangian trajectory") {
    // at the case-1 parameters the reference matrix is the Legendre transform,
    // so build_h itself drives the consistent flow
    const ModelParams p1{-1.0, 1.0 / 3.0};
    const TrajectoryState s0{0.0, {0.7, -0.2}, {0.1, 0.4}};
    Vector4 lag_state;
    lag_state << s0.q(0), s0.q(1), s0.qdot(0), s0.qdot(1);
    const Trajectory lag = integrate(lee_system(p1), s0, 1e-3, 20.0);
    const PhaseTrajectory flow =
        hamilton_flow(build_h(p1), legendre_momenta(p1, lag_state), 1e-3, 20.0);
    double diff = 0.0;
    for (std::size_t i = 0; i < lag.samples.size(); ++i) {
        diff = std::max(diff, std::abs(lag.samples[i].q(0) - flow.samples[i].v(0)));
        diff = std::max(diff, std::abs(lag.samples[i].q(1) - flow.samples[i].v(1)));
    }
    CHECK(diff < 1e-8);

    // at generic parameters the Legendre transform of the Lagrangian is the
    // consistent generator (momenta map across via legendre_velocities too)
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int rep = 0; rep < 3; ++rep) {
        const ModelParams p{d(rng), d(rng)};
        Vector4 ls;
        ls << d(rng) * 0.5, d(rng) * 0.5, d(rng) * 0.5, d(rng) * 0.5;
        const TrajectoryState init{0.0, {ls(0), ls(1)}, {ls(2), ls(3)}};
        const Trajectory lagt = integrate(lee_system(p), init, 1e-3, 10.0);
        const PhaseTrajectory ham = hamilton_flow(legendre_hamiltonian(lee_lagrangian(p)),
                                                  legendre_momenta(p, ls), 1e-3, 10.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < lagt.samples.size(); ++i) {
            worst = std::max(worst, std::abs(lagt.samples[i].q(0) - ham.samples[i].v(0)));
            worst = std::max(worst, std::abs(lagt.samples[i].q(1) - ham.samples[i].v(1)));
            const Eigen::Vector2d vel = legendre_velocities(p, ham.samples[i].v);
            worst = std::max(worst, std::abs(lagt.samples[i].qdot(0) - vel(0)));
            worst = std::max(worst, std::abs(lagt.samples[i].qdot(1) - vel(1)));
        }
        CHECK(worst < 1e-6);
    }
}
