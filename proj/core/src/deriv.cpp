#include "kernelalg/deriv.hpp"

#include <cmath>
#include <future>

#include <Eigen/SVD>

namespace kernelalg {

Derivation Derivation::inner(Kernel omega) {
    Derivation d(Kind::inner, omega.space_ptr());
    d.omega_.push_back(std::move(omega));
    return d;
}

Derivation Derivation::gauge_generator(DiscreteSpace::Ptr space, Eigen::VectorXd phi) {
    if (phi.size() != space->size())
        throw std::invalid_argument("gauge_generator: phi length does not match the space");
    Derivation d(Kind::gauge_generator, std::move(space));
    d.phi_ = std::move(phi);
    return d;
}

const Kernel& Derivation::omega() const {
    if (kind_ != Kind::inner) throw std::logic_error("Derivation: no omega for this kind");
    return omega_.front();
}

const Eigen::VectorXd& Derivation::phi() const {
    if (kind_ != Kind::gauge_generator) throw std::logic_error("Derivation: no phi for this kind");
    return phi_;
}

Kernel Derivation::operator()(const Kernel& f) const {
    if (f.space().hash() != space_->hash())
        throw SpaceMismatch("Derivation: argument lives on a different space");
    if (kind_ == Kind::inner) return convolve(f, omega_.front()) - convolve(omega_.front(), f);
    const int n = f.size();
    Eigen::MatrixXcd out(n, n);
    const std::complex<double> i1(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out(a, b) = i1 * (phi_(a) - phi_(b)) * f(a, b);
    return Kernel(f.space_ptr(), std::move(out));
}

namespace {

void require_term_space(const TensorKernel& f) {
    for (const auto& [a, b] : f.terms) {
        if (a.space().hash() != f.space->hash() || b.space().hash() != f.space->hash())
            throw SpaceMismatch("TensorKernel: term lives on a different space");
    }
}

// Deterministic parallel sum of per-term kernels: fixed chunking, chunk
// results added in index order.
Eigen::MatrixXcd map_sum(int count, int n,
                         const std::function<Eigen::MatrixXcd(int)>& term) {
    if (count == 0) return Eigen::MatrixXcd::Zero(n, n);
    constexpr int kChunk = 16;
    const int chunks = (count + kChunk - 1) / kChunk;
    std::vector<std::future<Eigen::MatrixXcd>> futs;
    futs.reserve(chunks);
    for (int c = 0; c < chunks; ++c) {
        const int lo = c * kChunk, hi = std::min(count, lo + kChunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
            Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n, n);
            for (int t = lo; t < hi; ++t) acc += term(t);
            return acc;
        }));
    }
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(n, n);
    for (auto& f : futs) total += f.get();
    return total;
}

}  // namespace

Kernel tensor_lambda(const TensorKernel& f) {
    require_term_space(f);
    const int n = f.space->size();
    return Kernel(f.space, map_sum(f.rank(), n, [&](int t) {
                      return convolve(f.terms[t].first, f.terms[t].second).values();
                  }));
}

Kernel tensor_gamma(const TensorKernel& f, const Derivation& d) {
    require_term_space(f);
    if (f.space->hash() != d.space()->hash())
        throw SpaceMismatch("tensor_gamma: derivation lives on a different space");
    const int n = f.space->size();
    return Kernel(f.space, map_sum(f.rank(), n, [&](int t) {
                      return convolve(f.terms[t].first, d(f.terms[t].second)).values();
                  }));
}

TensorKernel left_convolve(const Kernel& h, const TensorKernel& f) {
    TensorKernel out;
    out.space = f.space;
    out.terms.reserve(f.terms.size());
    for (const auto& [a, b] : f.terms) out.terms.emplace_back(convolve(h, a), b);
    return out;
}

TensorKernel right_convolve(const TensorKernel& f, const Kernel& h) {
    TensorKernel out;
    out.space = f.space;
    out.terms.reserve(f.terms.size());
    for (const auto& [a, b] : f.terms) out.terms.emplace_back(a, convolve(b, h));
    return out;
}

TensorKernel gn_hat(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas, int n) {
    if (n < 0 || n >= static_cast<int>(deltas.size()))
        throw std::invalid_argument("gn_hat: radius index out of range");
    const ConditionCheck cc = check_conditions(*space, deltas);
    if (!cc.c2)
        throw ConditionFailed("gn_hat: center-independent ball masses required: " + cc.describe());

    const double delta = deltas[n];
    const double dp = find_delta_prime(*space, delta);
    const double alpha = ball_measure(*space, 0, delta, Ball::open);
    const Eigen::MatrixXd g = ramp_kernel(*space, delta, dp);

    Eigen::BDCSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double tol = 1e-12 * (s.size() ? s(0) : 0.0);
    int rank = 0;
    while (rank < s.size() && s(rank) > tol) ++rank;
    if (rank > space->size())
        throw FactorizationOverflow("gn_hat: factorization rank exceeds the resolution");

    const int sz = space->size();
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(sz);
    TensorKernel out;
    out.space = space;
    out.terms.reserve(rank);
    for (int t = 0; t < rank; ++t) {
        const Eigen::VectorXcd u =
            (svd.matrixU().col(t) * (s(t) / alpha)).cast<std::complex<double>>();
        const Eigen::VectorXcd v = svd.matrixV().col(t).cast<std::complex<double>>();
        out.terms.emplace_back(Kernel::outer(space, u, ones), Kernel::outer(space, ones, v));
    }

    const double rec_err = (tensor_lambda(out).values() - (g / alpha).cast<std::complex<double>>())
                               .cwiseAbs()
                               .maxCoeff();
    if (rec_err > 1e-10)
        throw FactorizationOverflow("gn_hat: reconstruction error " + std::to_string(rec_err));
    return out;
}

Report approx_inner_run(const DiscreteSpace::Ptr& space, const Derivation& d,
                        std::span<const TestKernel> battery, const std::vector<double>& deltas,
                        int n_max) {
    if (n_max < 0 || n_max >= static_cast<int>(deltas.size()))
        throw std::invalid_argument("approx_inner_run: n_max out of range");
    Report rep;
    rep.suite = "approx_inner";
    rep.space_summary = space->summary();

    std::vector<Kernel> approximants;
    for (int n = 0; n <= n_max; ++n)
        approximants.push_back(tensor_gamma(gn_hat(space, deltas, n), d));

    const double quad = kQuadSlackC / space->size();
    for (const auto& tk : battery) {
        CheckRecord rec;
        rec.name = "defect_" + tk.name;
        const Kernel dh = d(tk.kernel);
        for (const auto& k : approximants) {
            rec.values.push_back(
                sup_norm(convolve(tk.kernel, k) - convolve(k, tk.kernel) - dh));
        }
        const double first = rec.values.front();
        const double last = rec.values.back();
        // defects at numerical zero count as converged (exact-unit spaces)
        const bool at_floor = last <= 1e-12;
        bool ok = last <= first / 4.0 || at_floor;
        if (d.kind() == Derivation::Kind::inner) {
            rec.bound = 0.05 * sup_norm(d.omega()) * sup_norm(tk.kernel) + quad;
            ok = ok && last <= rec.bound;
        } else {
            bool strict = true;
            for (std::size_t i = 0; i + 1 < rec.values.size(); ++i)
                strict = strict && rec.values[i + 1] < rec.values[i];
            ok = ok && (strict || at_floor);
            rec.note = strict ? "strictly decreasing" : "not strictly decreasing";
        }
        rec.value = last;
        rec.pass = ok;
        rep.add(rec);
    }
    return rep;
}

}  // namespace kernelalg
