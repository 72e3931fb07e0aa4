#include "kernelalg/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "kernelalg/rng.hpp"

namespace kernelalg {

namespace {

Eigen::VectorXcd sqrt_weights(const DiscreteSpace& s) {
    return s.weights().array().sqrt().matrix().cast<std::complex<double>>();
}

// Orthonormal basis (weighted inner product) for the column span of raw.
Eigen::MatrixXcd weighted_orthonormal_basis(const DiscreteSpace& space,
                                            const Eigen::MatrixXcd& raw) {
    if (raw.cols() == 0) return Eigen::MatrixXcd(space.size(), 0);
    const Eigen::VectorXcd sq = sqrt_weights(space);
    const Eigen::MatrixXcd scaled = sq.asDiagonal() * raw;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(scaled, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const double tol = kRankTol * std::max(1.0, s.size() ? s(0) : 0.0);
    int rank = 0;
    while (rank < s.size() && s(rank) > tol) ++rank;
    Eigen::MatrixXcd basis = svd.matrixU().leftCols(rank);
    for (int i = 0; i < space.size(); ++i) basis.row(i) /= sq(i);
    return basis;
}

}  // namespace

Subspace subspace_span(DiscreteSpace::Ptr space, const Eigen::MatrixXcd& raw) {
    if (raw.rows() != space->size())
        throw std::invalid_argument("subspace_span: function length does not match the space");
    Eigen::MatrixXcd basis = weighted_orthonormal_basis(*space, raw);
    return {std::move(space), std::move(basis)};
}

Subspace column_space(std::span<const Kernel> generators) {
    if (generators.empty()) throw std::invalid_argument("column_space: empty generator list");
    const auto& space = generators.front().space_ptr();
    const int n = space->size();
    Eigen::MatrixXcd all(n, n * static_cast<int>(generators.size()));
    int c = 0;
    for (const auto& g : generators) {
        require_same_space(generators.front(), g, "column_space");
        all.middleCols(c, n) = g.values();
        c += n;
    }
    return subspace_span(space, all);
}

Subspace row_space(std::span<const Kernel> generators) {
    if (generators.empty()) throw std::invalid_argument("row_space: empty generator list");
    const auto& space = generators.front().space_ptr();
    const int n = space->size();
    Eigen::MatrixXcd all(n, n * static_cast<int>(generators.size()));
    int c = 0;
    for (const auto& g : generators) {
        require_same_space(generators.front(), g, "row_space");
        all.middleCols(c, n) = g.values().transpose();
        c += n;
    }
    return subspace_span(space, all);
}

Subspace conj_subspace(const Subspace& v) { return {v.space, v.basis.conjugate()}; }

Eigen::VectorXcd project(const Subspace& v, const Eigen::VectorXcd& g) {
    const Eigen::VectorXcd cw = v.space->weights().cast<std::complex<double>>();
    return v.basis * (v.basis.adjoint() * (cw.asDiagonal() * g));
}

Kernel rv_project(const Subspace& v, const Kernel& f) {
    if (v.space->hash() != f.space().hash())
        throw SpaceMismatch("rv_project: subspace and kernel live on different spaces");
    const Eigen::VectorXcd cw = v.space->weights().cast<std::complex<double>>();
    return Kernel(f.space_ptr(), v.basis * (v.basis.adjoint() * (cw.asDiagonal() * f.values())));
}

double rv_residual(const Subspace& v, const Kernel& f) { return sup_norm(rv_project(v, f) - f); }

Kernel lv_project(const Subspace& v, const Kernel& f) {
    if (v.space->hash() != f.space().hash())
        throw SpaceMismatch("lv_project: subspace and kernel live on different spaces");
    const Eigen::VectorXcd cw = v.space->weights().cast<std::complex<double>>();
    // rows f(x,.) projected onto V: transpose, project columns, transpose back
    Eigen::MatrixXcd t = f.values().transpose();
    t = v.basis * (v.basis.adjoint() * (cw.asDiagonal() * t));
    return Kernel(f.space_ptr(), t.transpose());
}

double lv_residual(const Subspace& v, const Kernel& f) { return sup_norm(lv_project(v, f) - f); }

double center_defect(const Kernel& f, int probe_count) {
    const auto& space = f.space_ptr();
    if (space->kind() == SpaceKind::finite)
        throw std::invalid_argument("center_defect: use center_exact on finite spaces");
    if (probe_count < 1) throw std::invalid_argument("center_defect: probe_count must be >= 1");

    const int n = space->size();
    const double jitter = 1.0 - 1.0 / (16.0 * std::numbers::phi_v<double>);

    double defect = 0.0;
    for (int p = 0; p < probe_count; ++p) {
        const int x = static_cast<int>((static_cast<long long>(p) * n) / probe_count);
        int y = 0;
        double best = -1.0;
        for (int j = 0; j < n; ++j)
            if (space->distance(x, j) > best) {
                best = space->distance(x, j);
                y = j;
            }
        const double dxy = space->distance(x, y);
        double delta = jitter * dxy / 8.0;
        for (int halving = 0; halving < 4; ++halving, delta /= 2.0) {
            if (!(delta > 0.0)) break;
            double dp = 0.0;
            try {
                dp = find_delta_prime(*space, delta);
            } catch (const NoDeltaPrime&) {
                continue;  // unresolved radius at this grid; smaller ones may pass
            }
            if (dp > dxy / 2.0) continue;  // supports must stay apart
            Bump ex = bump(*space, x, delta);
            Bump ey = bump(*space, y, delta);
            const double alpha = ball_measure(*space, x, delta, Ball::open);
            const Kernel g =
                Kernel::outer(space, ex.values.cast<std::complex<double>>() / alpha,
                              ex.values.cast<std::complex<double>>());
            const Kernel h =
                Kernel::outer(space, ex.values.cast<std::complex<double>>() / alpha,
                              ey.values.cast<std::complex<double>>());
            defect = std::max(defect, sup_norm(convolve(f, g) - convolve(g, f)));
            defect = std::max(defect, sup_norm(convolve(f, h) - convolve(h, f)));
        }
    }
    return defect;
}

std::vector<Kernel> center_exact(const DiscreteSpace::Ptr& space) {
    if (space->kind() != SpaceKind::finite)
        throw std::invalid_argument("center_exact: finite space required");
    const int n = space->size();

    // commutation constraints against all matrix units e_st:
    // f(i,s) [t==j] == [i==s] (w_t / w_s) f(t,j) for all i,j,s,t
    const int unknowns = n * n;
    Eigen::MatrixXcd sys(unknowns * unknowns, unknowns);
    sys.setZero();
    int r = 0;
    auto vec = [n](int i, int j) { return i * n + j; };
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (t == j) sys(r, vec(i, s)) += 1.0;
                    if (i == s) sys(r, vec(t, j)) -= space->weight(t) / space->weight(s);
                    ++r;
                }

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(sys, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = kRankTol * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int rank = 0;
    while (rank < sv.size() && sv(rank) > tol) ++rank;

    std::vector<Kernel> basis;
    for (int c = rank; c < sv.size(); ++c) {
        Eigen::VectorXcd v = svd.matrixV().col(c);
        Eigen::MatrixXcd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v(vec(i, j));
        basis.emplace_back(space, std::move(m));
    }
    return basis;
}

namespace {

// Weighted-orthonormal basis for a list of vectorized kernels, under
// <A,B> = sum_ij w_i w_j conj(A_ij) B_ij (the inner product whose orthogonal
// projector agrees with the columnwise subspace projector).
Eigen::MatrixXcd kernel_span_basis(const DiscreteSpace& space,
                                   const std::vector<Eigen::MatrixXcd>& gens, int* rank_out) {
    const int n = space.size();
    const Eigen::VectorXcd sq = sqrt_weights(space);
    Eigen::MatrixXcd all(n * n, static_cast<int>(gens.size()));
    for (std::size_t c = 0; c < gens.size(); ++c) {
        Eigen::MatrixXcd scaled = sq.asDiagonal() * gens[c] * sq.asDiagonal();
        all.col(static_cast<int>(c)) = Eigen::Map<Eigen::VectorXcd>(scaled.data(), n * n);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(all, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    const double tol = kRankTol * std::max(1.0, s.size() ? s(0) : 0.0);
    int rank = 0;
    while (rank < s.size() && s(rank) > tol) ++rank;
    if (rank_out) *rank_out = rank;
    return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXcd project_vectorized(const DiscreteSpace& space, const Eigen::MatrixXcd& basis,
                                    const Eigen::MatrixXcd& probe) {
    const int n = space.size();
    const Eigen::VectorXcd sq = sqrt_weights(space);
    Eigen::MatrixXcd scaled = sq.asDiagonal() * probe * sq.asDiagonal();
    const Eigen::Map<Eigen::VectorXcd> v(scaled.data(), n * n);
    Eigen::VectorXcd proj = basis * (basis.adjoint() * v);
    Eigen::MatrixXcd out = Eigen::Map<Eigen::MatrixXcd>(proj.data(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) /= sq(i) * sq(j);
    return out;
}

}  // namespace

Report ideal_closure_check(std::span<const Kernel> generators, const DiscreteSpace::Ptr& space,
                           int probe_count, std::uint64_t seed) {
    if (space->kind() != SpaceKind::finite)
        throw std::invalid_argument("ideal_closure_check: finite space required");
    Report rep;
    rep.suite = "ideal_closure";
    rep.space_summary = space->summary();
    rep.seed = seed;

    const int n = space->size();
    std::vector<Kernel> units;
    units.reserve(n * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
            e(s, t) = 1.0;
            units.push_back(matrix_to_kernel(space, e));
        }

    bool any_nonzero = false;
    std::vector<Eigen::MatrixXcd> two_sided, right_only;
    for (const auto& g : generators) {
        require_same_space(generators.front(), g, "ideal_closure_check");
        if (sup_norm(g) > 0.0) any_nonzero = true;
        for (const auto& a : units)
            for (const auto& b : units)
                two_sided.push_back(convolve(convolve(a, g), b).values());
        for (const auto& b : units) right_only.push_back(convolve(g, b).values());
    }

    int dim2 = 0;
    kernel_span_basis(*space, two_sided, &dim2);
    {
        CheckRecord rec;
        rec.name = "two_sided_ideal_dimension";
        rec.value = dim2;
        rec.bound = any_nonzero ? n * n : 0;
        rec.pass = dim2 == static_cast<int>(rec.bound);
        rec.note = any_nonzero ? "nonzero generator: ideal must be the whole algebra"
                               : "zero generators";
        rep.add(rec);
    }

    int dimr = 0;
    const Eigen::MatrixXcd rbasis = kernel_span_basis(*space, right_only, &dimr);
    std::vector<Kernel> gen_copy(generators.begin(), generators.end());
    const Subspace v = column_space(gen_copy);
    {
        CheckRecord rec;
        rec.name = "right_ideal_dimension";
        rec.value = dimr;
        rec.bound = n * v.dim();
        rec.pass = dimr == n * v.dim();
        rep.add(rec);
    }
    {
        // membership agreement: the span projector and the columnwise
        // projector of the column space agree on random probes
        CheckRecord rec;
        rec.name = "right_ideal_membership_agreement";
        Rng rng(seed);
        double worst = 0.0;
        for (int p = 0; p < probe_count; ++p) {
            const Kernel probe(space, rng.complex_grid(n, n));
            const Eigen::MatrixXcd a = project_vectorized(*space, rbasis, probe.values());
            const Kernel b = rv_project(v, probe);
            worst = std::max(worst, (a - b.values()).cwiseAbs().maxCoeff());
        }
        rec.value = worst;
        rec.bound = kRankTol;
        rec.pass = worst <= kRankTol;
        rep.add(rec);
    }
    return rep;
}

SpaceMap::SpaceMap(DiscreteSpace::Ptr src, DiscreteSpace::Ptr dst, std::vector<int> m, double tol)
    : source(std::move(src)), target(std::move(dst)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source->size())
        throw std::invalid_argument("SpaceMap: map length does not match the source space");
    Eigen::VectorXd pushed = Eigen::VectorXd::Zero(target->size());
    for (int i = 0; i < source->size(); ++i) {
        if (map[i] < 0 || map[i] >= target->size())
            throw std::invalid_argument("SpaceMap: node index out of range");
        pushed(map[i]) += source->weight(i);
    }
    if ((pushed - target->weights()).cwiseAbs().maxCoeff() > tol)
        throw NotMeasurePreserving("SpaceMap: pushforward weights do not match the target");
}

Kernel pullback(const SpaceMap& alpha, const Kernel& f) {
    if (alpha.target->hash() != f.space().hash())
        throw SpaceMismatch("pullback: kernel does not live on the map target");
    const int m = alpha.source->size();
    Eigen::MatrixXcd out(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = f(alpha.map[i], alpha.map[j]);
    return Kernel(alpha.source, std::move(out));
}

Kernel gauge(const Eigen::VectorXcd& beta, const Kernel& f) {
    if (beta.size() != f.size()) throw std::invalid_argument("gauge: length mismatch");
    for (Eigen::Index i = 0; i < beta.size(); ++i)
        if (std::abs(std::abs(beta(i)) - 1.0) > 1e-12)
            throw std::invalid_argument("gauge: beta must be unimodular");
    return Kernel(f.space_ptr(),
                  beta.asDiagonal() * f.values() * beta.conjugate().asDiagonal());
}

Report restrict_and_split(const DiscreteSpace::Ptr& space, const std::vector<int>& subset,
                          const std::vector<int>& rho, double outside_tol, std::uint64_t seed) {
    if (space->kind() != SpaceKind::finite)
        throw std::invalid_argument("restrict_and_split: finite space required");
    const int n = space->size();
    const int m = static_cast<int>(subset.size());
    if (m == 0) throw std::invalid_argument("restrict_and_split: empty subset");

    std::vector<int> pos(n, -1);
    for (int k = 0; k < m; ++k) {
        if (subset[k] < 0 || subset[k] >= n || pos[subset[k]] != -1)
            throw std::invalid_argument("restrict_and_split: bad subset");
        pos[subset[k]] = k;
    }
    if (static_cast<int>(rho.size()) != n)
        throw std::invalid_argument("restrict_and_split: retraction length mismatch");
    for (int i = 0; i < n; ++i)
        if (rho[i] < 0 || rho[i] >= n || pos[rho[i]] == -1)
            throw std::invalid_argument("restrict_and_split: retraction must land in the subset");
    for (int k = 0; k < m; ++k)
        if (rho[subset[k]] != subset[k])
            throw std::invalid_argument("restrict_and_split: rho restricted to the subset must be the identity");

    double outside = 0.0;
    for (int i = 0; i < n; ++i)
        if (pos[i] == -1) outside += space->weight(i);
    if (outside > outside_tol)
        throw SupportViolation("restrict_and_split: weight " + std::to_string(outside) +
                               " outside the subset");

    Report rep;
    rep.suite = "restrict_and_split";
    rep.space_summary = space->summary();
    rep.seed = seed;
    {
        CheckRecord rec;
        rec.name = "outside_weight";
        rec.value = outside;
        rec.bound = outside_tol;
        rec.pass = outside <= outside_tol;
        rep.add(rec);
    }

    Rng rng(seed);
    // restriction of f to the subset square
    auto restrict = [&](const Eigen::MatrixXcd& f) {
        Eigen::MatrixXcd out(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) out(a, b) = f(subset[a], subset[b]);
        return out;
    };
    // extension along the retraction
    auto extend = [&](const Eigen::MatrixXcd& g) {
        Eigen::MatrixXcd out(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out(i, j) = g(pos[rho[i]], pos[rho[j]]);
        return out;
    };

    {
        CheckRecord rec;
        rec.name = "retract_identity";
        const Eigen::MatrixXcd g = rng.complex_grid(m, m);
        rec.value = (restrict(extend(g)) - g).cwiseAbs().maxCoeff();
        rec.bound = 0.0;
        rec.pass = rec.value == 0.0;
        rec.note = "restriction after extension is the identity, entry for entry";
        rep.add(rec);
    }
    {
        CheckRecord rec;
        rec.name = "restriction_kernel";
        Eigen::MatrixXcd f = rng.complex_grid(n, n);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) f(subset[a], subset[b]) = 0.0;
        rec.value = restrict(f).cwiseAbs().maxCoeff();
        rec.bound = 0.0;
        rec.pass = rec.value == 0.0;
        rec.note = "kernels vanishing on the subset square restrict to zero";
        rep.add(rec);
    }
    if (outside == 0.0) {
        // with a null complement the restriction is a *-homomorphism on the nose
        CheckRecord rec;
        rec.name = "restriction_homomorphism";
        const Kernel f(space, rng.complex_grid(n, n));
        const Kernel g(space, rng.complex_grid(n, n));
        const Eigen::MatrixXcd lhs = restrict(convolve(f, g).values());
        Eigen::VectorXd wsub(m);
        for (int k = 0; k < m; ++k) wsub(k) = space->weight(subset[k]);
        const Eigen::MatrixXcd rhs =
            restrict(f.values()) * wsub.cast<std::complex<double>>().asDiagonal() *
            restrict(g.values());
        rec.value = (lhs - rhs).cwiseAbs().maxCoeff();
        rec.bound = 1e-12 * std::max(1.0, sup_norm(f) * sup_norm(g));
        rec.pass = rec.value <= rec.bound;
        rep.add(rec);
    }
    return rep;
}

MeasureRecovery recover_measure(const DiscreteSpace::Ptr& space, const std::vector<int>& nodes,
                                int margin_count) {
    if (nodes.empty()) throw std::invalid_argument("recover_measure: empty node set");
    if (margin_count < 1) throw std::invalid_argument("recover_measure: need at least one margin");

    const int n = space->size();
    std::vector<char> in_set(n, 0);
    MeasureRecovery out;
    for (int c : nodes) {
        in_set[c] = 1;
        out.exact += space->weight(c);
    }

    double margin = space->diameter() / 4.0;
    out.value = std::numeric_limits<double>::infinity();
    for (int k = 0; k < margin_count; ++k, margin /= 2.0) {
        double integral = 0.0;
        for (int i = 0; i < n; ++i) {
            double dist = std::numeric_limits<double>::infinity();
            if (in_set[i]) {
                dist = 0.0;
            } else {
                for (int c : nodes) dist = std::min(dist, space->distance(i, c));
            }
            const double v = std::clamp(1.0 - dist / margin, 0.0, 1.0);
            integral += space->weight(i) * v;
        }
        out.margins.push_back(margin);
        out.trial_values.push_back(integral);
        out.value = std::min(out.value, integral);
    }
    return out;
}

}  // namespace kernelalg
