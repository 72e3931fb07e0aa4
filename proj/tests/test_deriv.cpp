#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kernelalg/deriv.hpp"
#include "kernelalg/rng.hpp"
#include "oracles.hpp"

using namespace kernelalg;

namespace {

Derivation gauge_cos(const DiscreteSpace::Ptr& s) {
    Eigen::VectorXd phi(s->size());
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    for (int i = 0; i < s->size(); ++i)
        phi(i) = std::cos(two_pi * s->node_coordinates(i)[0]);
    return Derivation::gauge_generator(s, phi);
}

}  // namespace

TEST_SUITE_BEGIN("deriv");

TEST_CASE("tensor multiplication map") {
    const auto s = DiscreteSpace::circle(24);
    Rng rng(3);
    const Kernel a(s, rng.complex_grid(24, 24));
    const Kernel b(s, rng.complex_grid(24, 24));

    TensorKernel single{s, {{a, b}}};
    CHECK(sup_norm(tensor_lambda(single) - convolve(a, b)) == 0.0);

    TensorKernel empty{s, {}};
    CHECK(sup_norm(tensor_lambda(empty)) == 0.0);
}

TEST_CASE("derivations satisfy the product law") {
    const auto s = DiscreteSpace::circle(24);
    Rng rng(5);
    const Kernel omega(s, rng.complex_grid(24, 24));
    const Derivation di = Derivation::inner(omega);
    const Derivation dg = gauge_cos(s);
    for (int t = 0; t < 4; ++t) {
        const Kernel f(s, rng.complex_grid(24, 24));
        const Kernel g(s, rng.complex_grid(24, 24));
        CHECK(sup_norm(di(convolve(f, g)) - convolve(f, di(g)) - convolve(di(f), g)) <= 1e-12);
        CHECK(sup_norm(dg(convolve(f, g)) - convolve(f, dg(g)) - convolve(dg(f), g)) <= 1e-12);
    }
}

TEST_CASE("twisted map vanishes for the zero derivation and is linear in terms") {
    const auto s = DiscreteSpace::circle(16);
    Rng rng(7);
    const Derivation d0 = Derivation::inner(Kernel::zero(s));
    TensorKernel tk{s, {}};
    for (int t = 0; t < 3; ++t)
        tk.terms.emplace_back(Kernel(s, rng.complex_grid(16, 16)),
                              Kernel(s, rng.complex_grid(16, 16)));
    CHECK(sup_norm(tensor_gamma(tk, d0)) == 0.0);

    const Kernel omega(s, rng.complex_grid(16, 16));
    const Derivation di = Derivation::inner(omega);
    TensorKernel t0{s, {tk.terms[0]}};
    TensorKernel t1{s, {tk.terms[1]}};
    TensorKernel t01{s, {tk.terms[0], tk.terms[1]}};
    CHECK(sup_norm(tensor_gamma(t01, di) - tensor_gamma(t0, di) - tensor_gamma(t1, di)) <= 1e-12);

    // single term expands by definition
    const auto& [a, b] = tk.terms[0];
    CHECK(sup_norm(tensor_gamma(t0, di) -
                   convolve(a, convolve(b, omega) - convolve(omega, b))) <= 1e-13);
}

TEST_CASE("the two twisted-map identities") {
    const auto s = DiscreteSpace::circle(20);
    Rng rng(11);
    const Kernel omega(s, rng.complex_grid(20, 20));
    for (const Derivation& d : {Derivation::inner(omega), gauge_cos(s)}) {
        TensorKernel tk{s, {}};
        for (int t = 0; t < 2; ++t)
            tk.terms.emplace_back(Kernel(s, rng.complex_grid(20, 20)),
                                  Kernel(s, rng.complex_grid(20, 20)));
        const Kernel h(s, rng.complex_grid(20, 20));

        CHECK(sup_norm(tensor_gamma(left_convolve(h, tk), d) -
                       convolve(h, tensor_gamma(tk, d))) <= 1e-10);
        CHECK(sup_norm(tensor_gamma(right_convolve(tk, h), d) -
                       convolve(tensor_lambda(tk), d(h)) -
                       convolve(tensor_gamma(tk, d), h)) <= 1e-10);
    }
}

TEST_CASE("tensor lift reconstructs the normalized ramp") {
    const auto s = DiscreteSpace::circle(128);
    const auto deltas = default_delta_sequence(6);
    for (int n : {0, 3}) {
        const TensorKernel gh = gn_hat(s, deltas, n);
        const double dp = find_delta_prime(*s, deltas[n]);
        const double alpha = ball_measure(*s, 0, deltas[n], Ball::open);
        const Eigen::MatrixXd g = ramp_kernel(*s, deltas[n], dp);
        const Kernel lam = tensor_lambda(gh);
        CHECK(oracles::max_abs(lam.values() - (g / alpha).cast<std::complex<double>>()) <= 1e-10);
        // entries where the pair sits within the inner radius equal 1/alpha
        for (int i = 0; i < s->size(); i += 13)
            for (int j = 0; j < s->size(); j += 17)
                if (s->distance(i, j) <= deltas[n])
                    CHECK(std::abs(lam(i, j) - 1.0 / alpha) <= 1e-10);
    }
}

TEST_CASE("the lifted units coincide with the two-sided unit sequence") {
    const auto s = DiscreteSpace::circle(48);
    const auto deltas = default_delta_sequence(4);
    const UnitNet two = norm_unit_seq(s, deltas, Side::two_sided);
    for (int n = 0; n < 4; ++n)
        CHECK(sup_norm(tensor_lambda(gn_hat(s, deltas, n)) - two.elements[n]) <= 1e-12);
}

TEST_CASE("tensor lift needs center-independent masses") {
    const auto s = DiscreteSpace::interval(32);
    CHECK_THROWS_AS(gn_hat(s, default_delta_sequence(4), 1), ConditionFailed);
}

TEST_CASE("the lifted units nearly commute with Lipschitz kernels") {
    const auto s = DiscreteSpace::circle(64);
    const auto deltas = default_delta_sequence(5);
    const auto battery = make_test_battery(s, 42);

    // distance kernels commute with the lifted units on the nose: both are
    // functions of the arc length, hence simultaneous circulants
    const Kernel& dist = battery[2].kernel;
    const Kernel lam0 = tensor_lambda(gn_hat(s, deltas, 0));
    CHECK(sup_norm(convolve(dist, lam0) - convolve(lam0, dist)) <= 1e-12);

    // a generic band-limited kernel commutes only in the limit
    const Kernel& f = battery.back().kernel;
    std::vector<double> comm;
    for (int n = 0; n < 5; ++n) {
        const Kernel lam = tensor_lambda(gn_hat(s, deltas, n));
        comm.push_back(sup_norm(convolve(f, lam) - convolve(lam, f)));
    }
    CHECK(comm.back() < comm.front());
    for (std::size_t k = 0; k + 1 < comm.size(); ++k) CHECK(comm[k + 1] <= comm[k] + 1e-12);
}

TEST_CASE("inner derivations are recovered by the approximating sequence") {
    const auto s = DiscreteSpace::circle(64);
    const auto deltas = default_delta_sequence(4);
    const auto battery = make_test_battery(s, 42);
    const Kernel omega = battery.back().kernel;
    const Derivation di = Derivation::inner(omega);

    const Report rep = approx_inner_run(s, di, battery, deltas, 3);
    CHECK(rep.pass);

    // the witness itself: D(omega) = 0, so the defect is the pure commutator
    std::vector<TestKernel> self{{"omega", omega, 0.0}};
    const Report rep2 = approx_inner_run(s, di, self, deltas, 3);
    const auto& vals = rep2.checks.front().values;
    CHECK(vals.back() < vals.front() / 4.0);
}

TEST_CASE("the zero inner derivation gives zero defects") {
    const auto s = DiscreteSpace::circle(32);
    const auto deltas = default_delta_sequence(3);
    const Derivation d0 = Derivation::inner(Kernel::zero(s));
    const auto battery = make_test_battery(s, 42);
    const Report rep = approx_inner_run(s, d0, battery, deltas, 2);
    for (const auto& c : rep.checks)
        for (double v : c.values) CHECK(v <= 1e-12);
}

TEST_CASE("gauge generators are approximately inner") {
    const auto s = DiscreteSpace::circle(64);
    const auto deltas = default_delta_sequence(6);
    const auto battery = make_test_battery(s, 42);
    const Report rep = approx_inner_run(s, gauge_cos(s), battery, deltas, 5);
    CHECK(rep.pass);
    for (const auto& c : rep.checks)
        for (std::size_t k = 0; k + 1 < c.values.size(); ++k) CHECK(c.values[k + 1] < c.values[k]);
}

TEST_SUITE_END();
