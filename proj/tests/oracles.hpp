#ifndef KERNELALG_TEST_ORACLES_HPP
#define KERNELALG_TEST_ORACLES_HPP

// Independent reference computations for the tests. Everything here sticks to
// plain loops so the checks do not share a code path with the library.

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "kernelalg/algebra.hpp"
#include "kernelalg/space.hpp"

namespace oracles {

using kernelalg::DiscreteSpace;
using kernelalg::Kernel;

// Weighted product by the definition, triple loop, fixed order.
inline Eigen::MatrixXcd naive_convolve(const DiscreteSpace& space, const Eigen::MatrixXcd& f,
                                       const Eigen::MatrixXcd& g) {
    const int n = space.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < n; ++k) s += f(i, k) * space.weight(k) * g(k, j);
            out(i, j) = s;
        }
    return out;
}

inline Eigen::MatrixXcd naive_matmul(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const int n = static_cast<int>(a.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::complex<double> s = 0.0;
            for (int k = 0; k < n; ++k) s += a(i, k) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

inline double max_abs(const Eigen::MatrixXcd& m) {
    return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

inline DiscreteSpace::Ptr finite_space(const std::vector<double>& w,
                                       const std::vector<std::vector<double>>& d) {
    const int n = static_cast<int>(w.size());
    Eigen::VectorXd wv(n);
    for (int i = 0; i < n; ++i) wv(i) = w[i];
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d[i][j];
    return DiscreteSpace::finite(wv, m);
}

// Two nodes at the given distance, equal weights.
inline DiscreteSpace::Ptr two_point_space(double dist = 1.0) {
    return finite_space({0.5, 0.5}, {{0.0, dist}, {dist, 0.0}});
}

}  // namespace oracles

#endif
