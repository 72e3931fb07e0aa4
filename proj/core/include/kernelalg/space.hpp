#ifndef KERNELALG_SPACE_HPP
#define KERNELALG_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kernelalg/errors.hpp"

namespace kernelalg {

enum class SpaceKind { finite, interval, circle, torus2 };

std::string to_string(SpaceKind kind);

// Quadrature model of a compact metric probability space: nodes, strictly
// positive weights summing to one, and a metric on node indices.
//
// interval  [0,1], midpoint nodes (i+1/2)/N, weights 1/N.
// circle    circumference 1, nodes i/N, weights 1/N, arc-length metric.
// torus2    product of two circles, N*N nodes, flat geodesic metric.
// finite    explicit weights and metric table.
//
// Immutable after construction; all member functions are const and safe for
// concurrent use.
class DiscreteSpace {
  public:
    using Ptr = std::shared_ptr<const DiscreteSpace>;

    static Ptr interval(int resolution);
    static Ptr circle(int resolution);
    static Ptr torus2(int resolution);
    // allow_zero_weights admits null sets (support strictly inside the space);
    // such spaces serve the restriction/extension machinery only.
    static Ptr finite(Eigen::VectorXd weights, Eigen::MatrixXd metric,
                      bool allow_zero_weights = false);

    SpaceKind kind() const { return kind_; }
    int resolution() const { return resolution_; }
    int size() const { return size_; }

    const Eigen::VectorXd& weights() const { return weights_; }
    double weight(int i) const { return weights_(i); }
    bool all_weights_positive() const { return all_positive_; }

    double distance(int i, int j) const;
    double diameter() const { return diameter_; }
    // Smallest distance between distinct nodes.
    double min_spacing() const { return min_spacing_; }

    // Coordinate of node i (interval/circle: 1 value; torus2: 2 values).
    std::vector<double> node_coordinates(int i) const;

    std::uint64_t hash() const { return hash_; }
    std::string summary() const;

  private:
    DiscreteSpace() = default;
    void finalize();

    SpaceKind kind_ = SpaceKind::finite;
    int resolution_ = 0;
    int size_ = 0;
    Eigen::VectorXd weights_;
    Eigen::MatrixXd metric_;       // finite kind only
    std::vector<double> coords_;   // interval/circle: x_i; torus2: unused
    bool all_positive_ = true;
    double diameter_ = 0.0;
    double min_spacing_ = 0.0;
    std::uint64_t hash_ = 0;
};

enum class Ball { open, closed };

// Weight of the ball around node x: distance < r (open) or <= r (closed).
double ball_measure(const DiscreteSpace& space, int x, double r, Ball ball = Ball::open);

// Weight of the sampled sphere {y : d(x,y) == r}.
double sphere_measure(const DiscreteSpace& space, int x, double r);

// Outer radius delta' in (delta, 2*delta) such that for every node x the
// annulus {delta <= d < delta'} has weight < delta * m(B_{x,delta}).
// Candidates descend geometrically from 2*delta; grids of 32,64,...,4096
// points are tried in turn. Among admissible radii the largest one whose
// sampled annulus is empty is preferred; if no grid level yields an empty
// annulus, the largest candidate meeting the weight bound is returned.
double find_delta_prime(const DiscreteSpace& space, double delta);

// Radial plateau-and-ramp profile: 1 on [0, delta], 0 on [delta_prime, inf),
// linear in between; sampled at every node around a center.
struct Bump {
    int center = 0;
    double delta = 0.0;
    double delta_prime = 0.0;
    Eigen::VectorXd values;  // values(i) = profile(distance(center, i))

    double profile(double r) const;
};

Bump bump(const DiscreteSpace& space, int x, double delta);

// Two-variable ramp grid: 1 where d(x,y) <= delta, 0 where d(x,y) >= delta_prime.
Eigen::MatrixXd ramp_kernel(const DiscreteSpace& space, double delta, double delta_prime);

struct SphereWitness {
    int level = 0;   // index into the radius sequence
    int node = 0;
    double mass = 0.0;
};

struct BallWitness {
    int level = 0;
    int node_a = 0;
    int node_b = 0;
    double mass_a = 0.0;
    double mass_b = 0.0;
};

// Verdicts for the zero-sphere hypothesis (c1) and the additional
// center-independent ball-mass hypothesis (c2) along a radius sequence.
struct ConditionCheck {
    bool c1 = false;
    bool c2 = false;
    std::optional<SphereWitness> c1_witness;
    std::optional<BallWitness> c2_witness;

    std::string describe() const;
};

ConditionCheck check_conditions(const DiscreteSpace& space, const std::vector<double>& deltas);

// 0.3 * phi^-n for n = 0..count-1; the irrational step keeps the radii off
// every rational distance lattice.
std::vector<double> default_delta_sequence(int count = 6, double base = 0.3);

}  // namespace kernelalg

#endif
