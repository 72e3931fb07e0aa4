#ifndef KERNELALG_ALGEBRA_HPP
#define KERNELALG_ALGEBRA_HPP

#include <complex>
#include <functional>
#include <memory>

#include <Eigen/Core>

#include "kernelalg/space.hpp"

namespace kernelalg {

// Element of the convolution algebra over a discrete space: a complex grid
// sampled on node pairs, entry (i,j) = f(x_i, x_j). Immutable storage; all
// operations below are pure.
class Kernel {
  public:
    Kernel(DiscreteSpace::Ptr space, Eigen::MatrixXcd values);

    static Kernel zero(DiscreteSpace::Ptr space);
    static Kernel constant(DiscreteSpace::Ptr space, std::complex<double> c);
    static Kernel from_function(DiscreteSpace::Ptr space,
                                const std::function<std::complex<double>(int, int)>& f);
    // f(x,y) = a(x) * b(y), the elementary tensor of two sampled functions.
    static Kernel outer(DiscreteSpace::Ptr space, const Eigen::VectorXcd& a,
                        const Eigen::VectorXcd& b);

    const DiscreteSpace& space() const { return *space_; }
    const DiscreteSpace::Ptr& space_ptr() const { return space_; }
    const Eigen::MatrixXcd& values() const { return values_; }
    std::complex<double> operator()(int i, int j) const { return values_(i, j); }
    int size() const { return static_cast<int>(values_.rows()); }

    Kernel operator+(const Kernel& o) const;
    Kernel operator-(const Kernel& o) const;
    Kernel operator*(std::complex<double> c) const;

  private:
    DiscreteSpace::Ptr space_;
    Eigen::MatrixXcd values_;
};

bool same_space(const Kernel& a, const Kernel& b);
void require_same_space(const Kernel& a, const Kernel& b, const char* op);

// Measure-weighted matrix product (f*g)(x,y) = sum_z f(x,z) w_z g(z,y).
Kernel convolve(const Kernel& f, const Kernel& g);

// Conjugate transpose f*(x,y) = conj(f(y,x)).
Kernel involve(const Kernel& f);

double sup_norm(const Kernel& f);
// Largest modulus down column y / along row x / at a single entry.
double cc_seminorm(const Kernel& f, int y);
double rc_seminorm(const Kernel& f, int x);
double pc_seminorm(const Kernel& f, int x, int y);

// Multiplicative unit, finite spaces only: u(i,j) = (i==j) / w_i.
Kernel unit_kernel(DiscreteSpace::Ptr space);

// *-isomorphism between n x n matrices and the algebra over a finite space:
// phi(A)(i,j) = A(i,j) / sqrt(w_i w_j), with inverse kernel_to_matrix. The
// symmetric scaling is the unique weight normalization that respects both the
// product and the involution; it reduces to A(i,j)/w_i for uniform weights and
// sends the identity matrix to the unit kernel.
Kernel matrix_to_kernel(DiscreteSpace::Ptr space, const Eigen::MatrixXcd& a);
Eigen::MatrixXcd kernel_to_matrix(const Kernel& f);

}  // namespace kernelalg

#endif
