#ifndef KERNELALG_OPREP_HPP
#define KERNELALG_OPREP_HPP

#include <Eigen/Core>

#include "kernelalg/algebra.hpp"
#include "kernelalg/report.hpp"

namespace kernelalg {

// Sampled element of C(X;E): one column per component of E (d = 1 for scalars).
struct SampledFunction {
    DiscreteSpace::Ptr space;
    Eigen::MatrixXcd values;  // size() x d

    SampledFunction(DiscreteSpace::Ptr s, Eigen::MatrixXcd v);
    static SampledFunction scalar(DiscreteSpace::Ptr s, Eigen::VectorXcd v);
    int dim() const { return static_cast<int>(values.cols()); }
};

// Integral-operator action (rho(f) g)(x) = sum_y f(x,y) w_y g(y).
SampledFunction rep_apply(const Kernel& f, const SampledFunction& g);

// Module actions on vector-valued functions: act_left is f*g, act_right is g*f.
SampledFunction act_left(const Kernel& f, const SampledFunction& g);
SampledFunction act_right(const SampledFunction& g, const Kernel& f);

enum class OpNormMode { cx, l1, l2, linf };

// Operator norm of rho(f) on C(X)/L^inf (weighted row sums), L^1 (weighted
// column sums), or L^2 (largest singular value of sqrt(w_i) f_ij sqrt(w_j)).
double op_norm(const Kernel& f, OpNormMode mode);

// Weighted-inner-product adjointness of rho: <f u, v>_w == <u, f* v>_w on
// seeded random pairs; records the largest defect.
Report adjoint_check(const Kernel& f, int pair_count = 20, std::uint64_t seed = 42);

struct SpectralDecay {
    Eigen::VectorXd leading;  // k largest singular values, descending
    double tail_mass = 0.0;   // sum of the remaining singular values / total sum
};

SpectralDecay spectral_decay(const Kernel& f, int k);

// All singular values of the weighted operator matrix, descending.
Eigen::VectorXd weighted_singular_values(const Kernel& f);

}  // namespace kernelalg

#endif
