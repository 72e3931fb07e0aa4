#ifndef KERNELALG_UNITS_HPP
#define KERNELALG_UNITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kernelalg/algebra.hpp"
#include "kernelalg/report.hpp"

namespace kernelalg {

enum class Side { right, left, two_sided };
enum class Topology { norm, cc, rc, pc };

std::string to_string(Side s);
std::string to_string(Topology t);

enum class UnitNetKind { net, right_seq, left_seq, two_sided_seq };

// A finite chain of candidate approximate units, together with the radii and
// ball masses that built them. For sequence kinds, alpha(n) is the smallest
// ball mass at delta(n) over all centers, and sup_norm(element n) == 1/alpha(n).
struct UnitNet {
    UnitNetKind kind = UnitNetKind::right_seq;
    std::vector<Kernel> elements;
    std::vector<double> deltas;
    std::vector<double> delta_primes;
    std::vector<double> alphas;
    // net kind only: the node set and tolerance behind each element
    std::vector<std::vector<int>> node_sets;
    std::vector<double> epsilons;

    int count() const { return static_cast<int>(elements.size()); }
};

struct NetElement {
    Kernel kernel;
    double delta;  // chosen radius: largest admissible value below epsilon
};

// Sum over y in S of bump_y (x) bump_y / m(B_{y,delta}): self-adjoint,
// nonnegative, block supported on the pairwise-disjoint doubled balls.
// Admissible radii run geometrically below epsilon and above half the node
// spacing; DisjointBallsImpossible if none keeps the doubled balls apart.
NetElement net_element(const DiscreteSpace::Ptr& space, const std::vector<int>& nodes,
                       double epsilon);

// Chain of net elements along refining (S, epsilon) pairs.
UnitNet net_chain(const DiscreteSpace::Ptr& space,
                  const std::vector<std::pair<std::vector<int>, double>>& stages);

// Sequence of normalized ramp kernels E_n(x,y) = G_n(x,y)/m(B_{y,delta_n})
// (right side; left divides by the ball mass at x). Requires the zero-sphere
// hypothesis; the two-sided kind additionally requires center-independent
// ball masses, under which both normalizations coincide entrywise.
UnitNet norm_unit_seq(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas,
                      Side side);

// Per-element defect of f against the net in the chosen topology, with the
// modulus-based bound when a Lipschitz constant is supplied.
// Sequence kinds measure uniformly; the net kind measures where the net
// promises convergence: columns (cc) / rows (rc) / entries (pc) indexed by the
// element's node set.
Report convergence_report(const Kernel& f, const UnitNet& net, Side side, Topology topology,
                          double lipschitz = -1.0);

// Growth of sup norms 1/alpha_n along the radius sequence for unit-less
// spaces; finite spaces instead certify the exact unit.
Report unboundedness_probe(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas);

// Fixed reproducible battery: constant, coordinate, distance-based Lipschitz
// kernels, and one seeded band-limited random kernel.
struct TestKernel {
    std::string name;
    Kernel kernel;
    double lipschitz;  // modulus bound in either variable
};

std::vector<TestKernel> make_test_battery(const DiscreteSpace::Ptr& space, std::uint64_t seed);

// Quadrature slack constant: every analytic bound gets + C/N.
inline constexpr double kQuadSlackC = 10.0;

}  // namespace kernelalg

#endif
