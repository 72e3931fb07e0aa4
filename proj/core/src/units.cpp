#include "kernelalg/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kernelalg/rng.hpp"

namespace kernelalg {

std::string to_string(Side s) {
    switch (s) {
        case Side::right: return "right";
        case Side::left: return "left";
        case Side::two_sided: return "two_sided";
    }
    return "?";
}

std::string to_string(Topology t) {
    switch (t) {
        case Topology::norm: return "norm";
        case Topology::cc: return "cc";
        case Topology::rc: return "rc";
        case Topology::pc: return "pc";
    }
    return "?";
}

NetElement net_element(const DiscreteSpace::Ptr& space, const std::vector<int>& nodes,
                       double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("net_element: epsilon must be > 0");
    if (nodes.empty()) throw std::invalid_argument("net_element: empty node set");

    double min_pair = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            min_pair = std::min(min_pair, space->distance(nodes[a], nodes[b]));
    if (min_pair == 0.0) throw std::invalid_argument("net_element: duplicate nodes");

    // Admissible radius: resolvable on this grid (>= half the node spacing)
    // and keeping the doubled balls metrically disjoint (4*delta <= spacing of S).
    const double floor = space->min_spacing() / 2.0;
    double delta = -1.0;
    for (int j = 1; j <= 64; ++j) {
        const double c = epsilon * std::pow(0.5, j / 8.0);
        if (c >= epsilon) continue;
        if (c < floor) break;
        if (4.0 * c <= min_pair) {
            delta = c;
            break;
        }
    }
    if (delta < 0.0)
        throw DisjointBallsImpossible(
            "net_element: nodes at distance " + std::to_string(min_pair) +
            " admit no radius below " + std::to_string(epsilon) + " at this resolution");

    const int n = space->size();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n, n);
    for (int y : nodes) {
        const Bump e = bump(*space, y, delta);
        const double alpha = ball_measure(*space, y, delta, Ball::open);
        u += (e.values * e.values.transpose()).cast<std::complex<double>>() / alpha;
    }
    return {Kernel(space, std::move(u)), delta};
}

UnitNet net_chain(const DiscreteSpace::Ptr& space,
                  const std::vector<std::pair<std::vector<int>, double>>& stages) {
    UnitNet net;
    net.kind = UnitNetKind::net;
    for (const auto& [nodes, eps] : stages) {
        NetElement el = net_element(space, nodes, eps);
        net.elements.push_back(std::move(el.kernel));
        net.deltas.push_back(el.delta);
        net.node_sets.push_back(nodes);
        net.epsilons.push_back(eps);
    }
    return net;
}

UnitNet norm_unit_seq(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas,
                      Side side) {
    const ConditionCheck cc = check_conditions(*space, deltas);
    if (!cc.c1)
        throw ConditionFailed("norm_unit_seq: zero-sphere hypothesis fails: " + cc.describe());
    if (side == Side::two_sided && !cc.c2)
        throw ConditionFailed("norm_unit_seq: center-independent ball masses required: " +
                              cc.describe());

    UnitNet net;
    net.kind = side == Side::right   ? UnitNetKind::right_seq
               : side == Side::left  ? UnitNetKind::left_seq
                                     : UnitNetKind::two_sided_seq;
    const int n = space->size();
    for (double delta : deltas) {
        const double dp = find_delta_prime(*space, delta);
        const Eigen::MatrixXd g = ramp_kernel(*space, delta, dp);
        Eigen::VectorXd alpha(n);
        for (int x = 0; x < n; ++x) alpha(x) = ball_measure(*space, x, delta, Ball::open);

        Eigen::MatrixXcd e(n, n);
        if (side == Side::left) {
            e = (alpha.cwiseInverse().asDiagonal() * g).cast<std::complex<double>>();
        } else {
            // right and two-sided normalize by the column ball mass; under the
            // two-sided hypothesis the row normalization is entrywise equal
            e = (g * alpha.cwiseInverse().asDiagonal()).cast<std::complex<double>>();
        }
        net.elements.emplace_back(space, std::move(e));
        net.deltas.push_back(delta);
        net.delta_primes.push_back(dp);
        net.alphas.push_back(alpha.minCoeff());
    }
    return net;
}

namespace {

Kernel side_defect(const Kernel& f, const Kernel& u, Side side) {
    switch (side) {
        case Side::right: return convolve(f, u) - f;
        case Side::left: return convolve(u, f) - f;
        case Side::two_sided: {
            // handled by caller taking the max of both one-sided defects
            return convolve(f, u) - f;
        }
    }
    return f;
}

double topology_defect(const Kernel& d, const UnitNet& net, int element, Side side,
                       Topology topo) {
    const bool is_net = net.kind == UnitNetKind::net;
    switch (topo) {
        case Topology::norm:
            return sup_norm(d);
        case Topology::cc: {
            if (!is_net) {
                double m = 0.0;
                for (int y = 0; y < d.size(); ++y) m = std::max(m, cc_seminorm(d, y));
                return m;
            }
            double m = 0.0;
            for (int y : net.node_sets[element]) m = std::max(m, cc_seminorm(d, y));
            return m;
        }
        case Topology::rc: {
            if (!is_net) {
                double m = 0.0;
                for (int x = 0; x < d.size(); ++x) m = std::max(m, rc_seminorm(d, x));
                return m;
            }
            double m = 0.0;
            for (int x : net.node_sets[element]) m = std::max(m, rc_seminorm(d, x));
            return m;
        }
        case Topology::pc: {
            if (!is_net) return sup_norm(d);
            double m = 0.0;
            const auto& idx = net.node_sets[element];
            if (side == Side::left) {
                for (int x : idx)
                    for (int y = 0; y < d.size(); ++y) m = std::max(m, pc_seminorm(d, x, y));
            } else {
                for (int y : idx)
                    for (int x = 0; x < d.size(); ++x) m = std::max(m, pc_seminorm(d, x, y));
            }
            return m;
        }
    }
    return 0.0;
}

// max |f(x,z) - f(x,z')| over d(z,z') < eps (second variable), and the
// symmetric first-variable quantity, whichever is larger
double modulus_of_continuity(const Kernel& f, double eps) {
    const int n = f.size();
    double m = 0.0;
    for (int z = 0; z < n; ++z)
        for (int zp = z + 1; zp < n; ++zp) {
            if (!(f.space().distance(z, zp) < eps)) continue;
            const auto dc = (f.values().col(z) - f.values().col(zp)).cwiseAbs().maxCoeff();
            const auto dr = (f.values().row(z) - f.values().row(zp)).cwiseAbs().maxCoeff();
            m = std::max({m, dc, dr});
        }
    return m;
}

}  // namespace

Report convergence_report(const Kernel& f, const UnitNet& net, Side side, Topology topology,
                          double lipschitz) {
    Report rep;
    rep.suite = "convergence";
    rep.space_summary = f.space().summary();

    CheckRecord rec;
    rec.name = to_string(side) + "_" + to_string(topology) + "_defects";
    if (net.count() == 0) {
        rec.note = "empty net";
        rep.add(rec);
        return rep;
    }

    const double snf = sup_norm(f);
    const int n_space = f.space().size();
    const bool is_seq = net.kind != UnitNetKind::net;

    for (int i = 0; i < net.count(); ++i) {
        const Kernel d1 = side_defect(f, net.elements[i], side);
        double defect = topology_defect(d1, net, i, side, topology);
        if (side == Side::two_sided) {
            const Kernel d2 = convolve(net.elements[i], f) - f;
            defect = std::max(defect, topology_defect(d2, net, i, side, topology));
        }
        rec.values.push_back(defect);

        if (is_seq && lipschitz >= 0.0) {
            rec.bounds.push_back(lipschitz * 2.0 * net.delta_primes[i] + net.deltas[i] * snf +
                                 kQuadSlackC / n_space);
        } else if (!is_seq) {
            // pointwise bound r + r*|f| with r = max(modulus at eps, eps)
            const double r = std::max(modulus_of_continuity(f, net.epsilons[i]), net.epsilons[i]);
            rec.bounds.push_back(r + r * snf);
        }
    }
    if (!rec.bounds.empty()) {
        for (std::size_t i = 0; i < rec.values.size(); ++i)
            rec.pass = rec.pass && rec.values[i] <= rec.bounds[i];
        rec.value = rec.values.back();
        rec.bound = rec.bounds.back();
    } else {
        rec.value = rec.values.back();
    }
    rep.add(rec);
    return rep;
}

Report unboundedness_probe(const DiscreteSpace::Ptr& space, const std::vector<double>& deltas) {
    Report rep;
    rep.suite = "unboundedness";
    rep.space_summary = space->summary();

    if (space->kind() == SpaceKind::finite) {
        const Kernel u = unit_kernel(space);
        Rng rng(42);
        const Kernel f(space, rng.complex_grid(space->size(), space->size()));
        const double defect =
            std::max(sup_norm(convolve(f, u) - f), sup_norm(convolve(u, f) - f));
        CheckRecord rec;
        rec.name = "unit_exists";
        rec.value = sup_norm(u);
        rec.bound = 1.0 / space->weights().minCoeff();
        rec.note = "exact unit; identity defect " + std::to_string(defect);
        rec.pass = defect <= 1e-13 && std::abs(rec.value - rec.bound) <= 1e-9;
        rep.add(rec);
        return rep;
    }

    // radii below the node spacing pin the ball to its center and the sup
    // norm plateaus at 1/min(w); growth is only asserted on the resolved prefix
    std::vector<double> resolved;
    for (double d : deltas)
        if (d > space->min_spacing()) resolved.push_back(d);
    if (resolved.empty()) resolved.push_back(deltas.front());
    const UnitNet net = norm_unit_seq(space, resolved, Side::right);
    CheckRecord rec;
    rec.name = "sup_norm_growth";
    bool increasing = true;
    for (int i = 0; i < net.count(); ++i) {
        const double sn = sup_norm(net.elements[i]);
        rec.values.push_back(sn);
        rec.bounds.push_back(1.0 / net.alphas[i]);
        if (std::abs(sn - 1.0 / net.alphas[i]) > 1e-9 * sn) rec.pass = false;
        if (i > 0 && !(rec.values[i] > rec.values[i - 1])) increasing = false;
    }
    rec.pass = rec.pass && increasing;
    rec.value = rec.values.back();
    rec.note = increasing ? "sup norms strictly increasing" : "sup norms not increasing";
    if (resolved.size() < deltas.size())
        rec.note += "; radii below the node spacing omitted";
    rep.add(rec);
    return rep;
}

std::vector<TestKernel> make_test_battery(const DiscreteSpace::Ptr& space, std::uint64_t seed) {
    const int n = space->size();
    const double two_pi = 2.0 * std::numbers::pi_v<double>;
    std::vector<TestKernel> out;

    out.push_back({"const", Kernel::constant(space, 1.0), 0.0});

    // coordinate kernel: the first coordinate, wrapped to a continuous phase
    // on periodic kinds
    if (space->kind() == SpaceKind::interval) {
        Eigen::MatrixXcd v(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v(i, j) = space->node_coordinates(j)[0];
        out.push_back({"coord", Kernel(space, std::move(v)), 1.0});
    } else if (space->kind() != SpaceKind::finite) {
        Eigen::MatrixXcd v(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double y = space->node_coordinates(j)[0];
                v(i, j) = std::polar(1.0, two_pi * y);
            }
        out.push_back({"coord", Kernel(space, std::move(v)), two_pi});
    }

    out.push_back({"dist", Kernel::from_function(space, [&](int i, int j) {
                       return std::complex<double>(space->distance(i, j), 0.0);
                   }),
                   1.0});
    out.push_back({"sindist", Kernel::from_function(space, [&](int i, int j) {
                       return std::complex<double>(std::sin(two_pi * space->distance(i, j)), 0.0);
                   }),
                   two_pi});

    // seeded band-limited random kernel
    Rng rng(seed);
    if (space->kind() == SpaceKind::finite) {
        // discrete Lipschitz constant computed exactly
        const Kernel f(space, rng.complex_grid(n, n));
        double lip = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                const double dab = space->distance(a, b);
                const double dc = (f.values().col(a) - f.values().col(b)).cwiseAbs().maxCoeff();
                const double dr = (f.values().row(a) - f.values().row(b)).cwiseAbs().maxCoeff();
                lip = std::max(lip, std::max(dc, dr) / dab);
            }
        out.push_back({"random", f, lip});
    } else {
        Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
        double lip = 0.0;
        const int modes = 3;
        std::vector<double> csum(n);
        for (int i = 0; i < n; ++i) {
            const auto xi = space->node_coordinates(i);
            csum[i] = xi[0] + (xi.size() > 1 ? xi[1] : 0.0);
        }
        Eigen::VectorXcd ex(n), ey(n);
        for (int k = -modes; k <= modes; ++k)
            for (int l = -modes; l <= modes; ++l) {
                const std::complex<double> c = rng.complex_in_disc(1.0) / 8.0;
                for (int i = 0; i < n; ++i) ex(i) = std::polar(1.0, two_pi * k * csum[i]);
                for (int j = 0; j < n; ++j) ey(j) = std::polar(1.0, two_pi * l * csum[j]);
                v += c * (ex * ey.transpose());
                const double coord_factor = space->kind() == SpaceKind::torus2 ? 2.0 : 1.0;
                lip += std::abs(c) * two_pi * coord_factor * std::max(std::abs(k), std::abs(l));
            }
        out.push_back({"random", Kernel(space, std::move(v)), lip});
    }
    return out;
}

}  // namespace kernelalg
