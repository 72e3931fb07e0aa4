#ifndef KERNELALG_STRUCTURE_HPP
#define KERNELALG_STRUCTURE_HPP

#include <span>
#include <vector>

#include "kernelalg/algebra.hpp"
#include "kernelalg/report.hpp"

namespace kernelalg {

// Numerical rank threshold used wherever a subspace is extracted.
inline constexpr double kRankTol = 1e-10;

// Finite-dimensional subspace of sampled C(X), stored as a basis that is
// orthonormal under the weighted inner product <u,v> = sum_i w_i conj(u_i) v_i.
struct Subspace {
    DiscreteSpace::Ptr space;
    Eigen::MatrixXcd basis;  // size() x dim

    int dim() const { return static_cast<int>(basis.cols()); }
};

// Span of explicit sampled functions (columns of raw).
Subspace subspace_span(DiscreteSpace::Ptr space, const Eigen::MatrixXcd& raw);
// Span of all columns of all generators.
Subspace column_space(std::span<const Kernel> generators);
// Span of all rows (as functions of the second argument).
Subspace row_space(std::span<const Kernel> generators);
// {conj(f) : f in V}.
Subspace conj_subspace(const Subspace& v);

// Projection of a sampled function onto V.
Eigen::VectorXcd project(const Subspace& v, const Eigen::VectorXcd& g);

// Columnwise projector cutting out the right ideal of kernels whose columns
// lie in V; rv_residual measures membership (0 iff the projection fixes f).
Kernel rv_project(const Subspace& v, const Kernel& f);
double rv_residual(const Subspace& v, const Kernel& f);
// Rowwise analogue for the left ideal.
Kernel lv_project(const Subspace& v, const Kernel& f);
double lv_residual(const Subspace& v, const Kernel& f);

// Largest commutator norm against the localized probe kernels of the
// zero-center argument: bumps g = E_x (x) E_x / m(B) and h = E_x (x) E_y / m(B)
// at pairs (x,y) of maximal distance, radii halving from d(x,y)/8 with an
// irrational jitter. Non-finite spaces only.
double center_defect(const Kernel& f, int probe_count);

// Basis of the commutant of the whole algebra over a finite space, via the
// nullspace of the matrix-unit commutation system. Always one-dimensional,
// spanned by the unit.
std::vector<Kernel> center_exact(const DiscreteSpace::Ptr& space);

// Finite-space ideal arithmetic: the two-sided ideal spanned by
// {e * g * e'} over matrix units has full dimension for any nonzero
// generator, and the right-ideal span {g * e} coincides with the columnwise
// projector ideal of column_space(g).
Report ideal_closure_check(std::span<const Kernel> generators, const DiscreteSpace::Ptr& space,
                           int probe_count = 100, std::uint64_t seed = 42);

// Node map alpha : source -> target pushing the source weights onto the
// target weights (checked within tol at construction).
struct SpaceMap {
    DiscreteSpace::Ptr source;
    DiscreteSpace::Ptr target;
    std::vector<int> map;  // node index of target per source node

    SpaceMap(DiscreteSpace::Ptr src, DiscreteSpace::Ptr dst, std::vector<int> m,
             double tol = 1e-10);
};

// (pullback f)(x',y') = f(alpha x', alpha y'): a *-morphism into the algebra
// over the source space.
Kernel pullback(const SpaceMap& alpha, const Kernel& f);

// (gauge f)(x,y) = beta(x) f(x,y) conj(beta(y)) for unimodular beta: an
// isometric *-automorphism.
Kernel gauge(const Eigen::VectorXcd& beta, const Kernel& f);

// Restriction of the algebra to a full-measure closed node subset, split by a
// retraction: verifies that restrict . extend == identity exactly, that the
// restriction kernel is exactly the kernels vanishing on the subset square,
// and that restriction respects convolution when the complement is null.
// rho maps every node of the ambient space to a member of `subset`;
// outside_tol bounds the weight allowed outside the subset.
Report restrict_and_split(const DiscreteSpace::Ptr& space, const std::vector<int>& subset,
                          const std::vector<int>& rho, double outside_tol = 0.0,
                          std::uint64_t seed = 42);

struct MeasureRecovery {
    double value = 0.0;               // best (smallest) trial integral
    std::vector<double> margins;      // geometric margin sweep, descending
    std::vector<double> trial_values; // integral per margin
    double exact = 0.0;               // weight of the target set
};

// Upper bound on m(C) through integrals of ramp functions that are 1 on C and
// vanish beyond a margin; the margin sweeps geometrically downward from
// diameter/4. The reported value is an upper bound by construction.
MeasureRecovery recover_measure(const DiscreteSpace::Ptr& space, const std::vector<int>& nodes,
                                int margin_count = 8);

}  // namespace kernelalg

#endif
