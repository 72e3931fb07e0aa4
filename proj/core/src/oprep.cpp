#include "kernelalg/oprep.hpp"

#include <Eigen/SVD>

#include "kernelalg/rng.hpp"

namespace kernelalg {

SampledFunction::SampledFunction(DiscreteSpace::Ptr s, Eigen::MatrixXcd v)
    : space(std::move(s)), values(std::move(v)) {
    if (!space) throw std::invalid_argument("SampledFunction: null space");
    if (values.rows() != space->size())
        throw std::invalid_argument("SampledFunction: length does not match the space");
    if (!values.allFinite()) throw std::invalid_argument("SampledFunction: non-finite entry");
}

SampledFunction SampledFunction::scalar(DiscreteSpace::Ptr s, Eigen::VectorXcd v) {
    return SampledFunction(std::move(s), Eigen::MatrixXcd(std::move(v)));
}

namespace {

void require_space(const Kernel& f, const SampledFunction& g, const char* op) {
    if (f.space_ptr() != g.space && f.space().hash() != g.space->hash())
        throw SpaceMismatch(std::string(op) + ": operands live on different spaces");
}

Eigen::VectorXcd complex_weights(const DiscreteSpace& s) {
    return s.weights().cast<std::complex<double>>();
}

// <a, b>_w = sum_i w_i conj(a_i) b_i, fixed summation order
std::complex<double> weighted_dot(const Eigen::VectorXd& w, const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b) {
    std::complex<double> s = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) s += w(i) * std::conj(a(i)) * b(i);
    return s;
}

}  // namespace

SampledFunction rep_apply(const Kernel& f, const SampledFunction& g) {
    require_space(f, g, "rep_apply");
    return {g.space, f.values() * complex_weights(f.space()).asDiagonal() * g.values};
}

SampledFunction act_left(const Kernel& f, const SampledFunction& g) { return rep_apply(f, g); }

SampledFunction act_right(const SampledFunction& g, const Kernel& f) {
    require_space(f, g, "act_right");
    // (g*f)(y) = sum_z g(z) w_z f(z,y), componentwise
    Eigen::MatrixXcd out =
        (g.values.transpose() * complex_weights(f.space()).asDiagonal() * f.values()).transpose();
    return {g.space, std::move(out)};
}

Eigen::VectorXd weighted_singular_values(const Kernel& f) {
    const Eigen::VectorXcd sq =
        f.space().weights().array().sqrt().matrix().cast<std::complex<double>>();
    Eigen::MatrixXcd m = sq.asDiagonal() * f.values() * sq.asDiagonal();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues();
}

double op_norm(const Kernel& f, OpNormMode mode) {
    const auto& w = f.space().weights();
    switch (mode) {
        case OpNormMode::cx:
        case OpNormMode::linf:
            return (f.values().cwiseAbs() * w).maxCoeff();
        case OpNormMode::l1:
            return (f.values().cwiseAbs().transpose() * w).maxCoeff();
        case OpNormMode::l2: {
            const Eigen::VectorXd s = weighted_singular_values(f);
            return s.size() ? s(0) : 0.0;
        }
    }
    return 0.0;
}

Report adjoint_check(const Kernel& f, int pair_count, std::uint64_t seed) {
    Report rep;
    rep.suite = "adjoint_check";
    rep.space_summary = f.space().summary();
    rep.seed = seed;

    Rng rng(seed);
    const int n = f.space().size();
    const auto& w = f.space().weights();
    const Eigen::VectorXcd cw = complex_weights(f.space());
    const Kernel fs = involve(f);

    double worst = 0.0;
    for (int t = 0; t < pair_count; ++t) {
        const Eigen::VectorXcd u = rng.complex_vector(n);
        const Eigen::VectorXcd v = rng.complex_vector(n);
        const Eigen::VectorXcd fu = f.values() * cw.asDiagonal() * u;
        const Eigen::VectorXcd fsv = fs.values() * cw.asDiagonal() * v;
        worst = std::max(worst, std::abs(weighted_dot(w, fu, v) - weighted_dot(w, u, fsv)));
    }
    CheckRecord rec;
    rec.name = "l2_adjoint_defect";
    rec.value = worst;
    rec.bound = 1e-12 * std::max(1.0, sup_norm(f));
    rec.pass = worst <= rec.bound;
    rep.add(rec);
    return rep;
}

SpectralDecay spectral_decay(const Kernel& f, int k) {
    if (k < 0 || k > f.size()) throw std::invalid_argument("spectral_decay: k out of range");
    const Eigen::VectorXd s = weighted_singular_values(f);
    SpectralDecay out;
    out.leading = s.head(k);
    const double total = s.sum();
    const double tail = s.tail(s.size() - k).sum();
    out.tail_mass = total > 0.0 ? tail / total : 0.0;
    return out;
}

}  // namespace kernelalg
