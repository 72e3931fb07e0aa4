#include "kernelalg/algebra.hpp"

#include <cmath>

namespace kernelalg {

Kernel::Kernel(DiscreteSpace::Ptr space, Eigen::MatrixXcd values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw std::invalid_argument("Kernel: null space");
    if (values_.rows() != space_->size() || values_.cols() != space_->size())
        throw std::invalid_argument("Kernel: grid dimensions do not match the space");
    if (!values_.allFinite()) throw std::invalid_argument("Kernel: non-finite entry");
}

Kernel Kernel::zero(DiscreteSpace::Ptr space) {
    const int n = space->size();
    return Kernel(std::move(space), Eigen::MatrixXcd::Zero(n, n));
}

Kernel Kernel::constant(DiscreteSpace::Ptr space, std::complex<double> c) {
    const int n = space->size();
    return Kernel(std::move(space), Eigen::MatrixXcd::Constant(n, n, c));
}

Kernel Kernel::from_function(DiscreteSpace::Ptr space,
                             const std::function<std::complex<double>(int, int)>& f) {
    const int n = space->size();
    Eigen::MatrixXcd v(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v(i, j) = f(i, j);
    return Kernel(std::move(space), std::move(v));
}

Kernel Kernel::outer(DiscreteSpace::Ptr space, const Eigen::VectorXcd& a,
                     const Eigen::VectorXcd& b) {
    return Kernel(std::move(space), a * b.transpose());
}

Kernel Kernel::operator+(const Kernel& o) const {
    require_same_space(*this, o, "+");
    return Kernel(space_, values_ + o.values_);
}

Kernel Kernel::operator-(const Kernel& o) const {
    require_same_space(*this, o, "-");
    return Kernel(space_, values_ - o.values_);
}

Kernel Kernel::operator*(std::complex<double> c) const { return Kernel(space_, values_ * c); }

bool same_space(const Kernel& a, const Kernel& b) {
    return a.space_ptr() == b.space_ptr() || a.space().hash() == b.space().hash();
}

void require_same_space(const Kernel& a, const Kernel& b, const char* op) {
    if (!same_space(a, b))
        throw SpaceMismatch(std::string("operands of ") + op + " live on different spaces");
}

Kernel convolve(const Kernel& f, const Kernel& g) {
    require_same_space(f, g, "convolve");
    const Eigen::VectorXcd w = f.space().weights().cast<std::complex<double>>();
    return Kernel(f.space_ptr(), f.values() * w.asDiagonal() * g.values());
}

Kernel involve(const Kernel& f) { return Kernel(f.space_ptr(), f.values().adjoint()); }

double sup_norm(const Kernel& f) {
    return f.size() == 0 ? 0.0 : f.values().cwiseAbs().maxCoeff();
}

double cc_seminorm(const Kernel& f, int y) { return f.values().col(y).cwiseAbs().maxCoeff(); }

double rc_seminorm(const Kernel& f, int x) { return f.values().row(x).cwiseAbs().maxCoeff(); }

double pc_seminorm(const Kernel& f, int x, int y) { return std::abs(f.values()(x, y)); }

Kernel unit_kernel(DiscreteSpace::Ptr space) {
    if (space->kind() != SpaceKind::finite)
        throw UnitNotAvailable("unit_kernel: the algebra over a " + to_string(space->kind()) +
                               " space has no unit");
    if (!space->all_weights_positive())
        throw std::invalid_argument("unit_kernel: zero-weight node");
    const int n = space->size();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) u(i, i) = 1.0 / space->weight(i);
    return Kernel(std::move(space), std::move(u));
}

Kernel matrix_to_kernel(DiscreteSpace::Ptr space, const Eigen::MatrixXcd& a) {
    if (space->kind() != SpaceKind::finite)
        throw std::invalid_argument("matrix_to_kernel: finite space required");
    if (!space->all_weights_positive())
        throw std::invalid_argument("matrix_to_kernel: zero-weight node");
    if (a.rows() != space->size() || a.cols() != space->size())
        throw std::invalid_argument("matrix_to_kernel: dimension mismatch");
    const Eigen::VectorXd sq = space->weights().array().sqrt();
    Eigen::MatrixXcd v = a;
    for (int i = 0; i < v.rows(); ++i)
        for (int j = 0; j < v.cols(); ++j) v(i, j) /= sq(i) * sq(j);
    return Kernel(std::move(space), std::move(v));
}

Eigen::MatrixXcd kernel_to_matrix(const Kernel& f) {
    if (f.space().kind() != SpaceKind::finite)
        throw std::invalid_argument("kernel_to_matrix: finite space required");
    const Eigen::VectorXd sq = f.space().weights().array().sqrt();
    Eigen::MatrixXcd a = f.values();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a(i, j) *= sq(i) * sq(j);
    return a;
}

}  // namespace kernelalg
