#ifndef KERNELALG_DERIV_HPP
#define KERNELALG_DERIV_HPP

#include <span>
#include <vector>

#include "kernelalg/algebra.hpp"
#include "kernelalg/report.hpp"
#include "kernelalg/units.hpp"

namespace kernelalg {

// Finite-rank element of the tensor square of the algebra: sum of elementary
// tensors a_t (x) b_t over one shared space.
struct TensorKernel {
    DiscreteSpace::Ptr space;
    std::vector<std::pair<Kernel, Kernel>> terms;

    int rank() const { return static_cast<int>(terms.size()); }
};

// Bounded derivation of the algebra into itself, either inner
// D(f) = f*w - w*f, or the gauge generator D(f)(x,y) = i (phi(x)-phi(y)) f(x,y).
class Derivation {
  public:
    enum class Kind { inner, gauge_generator };

    static Derivation inner(Kernel omega);
    static Derivation gauge_generator(DiscreteSpace::Ptr space, Eigen::VectorXd phi);

    Kind kind() const { return kind_; }
    const Kernel& omega() const;
    const Eigen::VectorXd& phi() const;
    const DiscreteSpace::Ptr& space() const { return space_; }

    Kernel operator()(const Kernel& f) const;

  private:
    Derivation(Kind k, DiscreteSpace::Ptr s) : kind_(k), space_(std::move(s)) {}
    Kind kind_;
    DiscreteSpace::Ptr space_;
    std::vector<Kernel> omega_;  // inner kind
    Eigen::VectorXd phi_;        // gauge kind
};

// The multiplication map: sum_t a_t * b_t.
Kernel tensor_lambda(const TensorKernel& f);

// The derivation-twisted map: sum_t a_t * D(b_t).
Kernel tensor_gamma(const TensorKernel& f, const Derivation& d);

// h * F multiplies every left leg; F * h multiplies every right leg.
TensorKernel left_convolve(const Kernel& h, const TensorKernel& f);
TensorKernel right_convolve(const TensorKernel& f, const Kernel& h);

// Tensor lift of the ramp kernel at radius index n: factor G_n(x,y) through a
// grid singular value factorization sum_t u_t(x) v_t(y) (truncation 1e-12
// relative) and return terms ((x,z) -> u_t(x)/alpha_n, (z',y) -> v_t(y)), so
// that tensor_lambda gives back G_n / alpha_n. Requires center-independent
// ball masses along the sequence.
TensorKernel gn_hat(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas, int n);

// Approximate-innerness run: K_n = tensor_gamma(gn_hat(n), D); the defect of h
// at stage n is sup |h*K_n - K_n*h - D(h)|. Pass per battery kernel: the final
// defect is below a quarter of the initial one and below the analytic bound
// (inner kind) or strictly decreasing (gauge kind).
Report approx_inner_run(const DiscreteSpace::Ptr& space, const Derivation& d,
                        std::span<const TestKernel> battery, const std::vector<double>& deltas,
                        int n_max);

}  // namespace kernelalg

#endif
