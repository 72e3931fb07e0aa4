#include "kernelalg/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace kernelalg {

namespace {

constexpr double kWeightSumTol = 1e-12;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

double circle_arc(double a, double b) {
    const double t = std::abs(a - b);
    return std::min(t, 1.0 - t);
}

}  // namespace

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::finite: return "finite";
        case SpaceKind::interval: return "interval";
        case SpaceKind::circle: return "circle";
        case SpaceKind::torus2: return "torus2";
    }
    return "?";
}

DiscreteSpace::Ptr DiscreteSpace::interval(int resolution) {
    if (resolution < 1) throw std::invalid_argument("interval: resolution must be >= 1");
    auto s = std::shared_ptr<DiscreteSpace>(new DiscreteSpace());
    s->kind_ = SpaceKind::interval;
    s->resolution_ = resolution;
    s->size_ = resolution;
    s->weights_ = Eigen::VectorXd::Constant(resolution, 1.0 / resolution);
    s->coords_.resize(resolution);
    for (int i = 0; i < resolution; ++i) s->coords_[i] = (i + 0.5) / resolution;
    s->finalize();
    return s;
}

DiscreteSpace::Ptr DiscreteSpace::circle(int resolution) {
    if (resolution < 1) throw std::invalid_argument("circle: resolution must be >= 1");
    auto s = std::shared_ptr<DiscreteSpace>(new DiscreteSpace());
    s->kind_ = SpaceKind::circle;
    s->resolution_ = resolution;
    s->size_ = resolution;
    s->weights_ = Eigen::VectorXd::Constant(resolution, 1.0 / resolution);
    s->coords_.resize(resolution);
    for (int i = 0; i < resolution; ++i) s->coords_[i] = static_cast<double>(i) / resolution;
    s->finalize();
    return s;
}

DiscreteSpace::Ptr DiscreteSpace::torus2(int resolution) {
    if (resolution < 1) throw std::invalid_argument("torus2: resolution must be >= 1");
    auto s = std::shared_ptr<DiscreteSpace>(new DiscreteSpace());
    s->kind_ = SpaceKind::torus2;
    s->resolution_ = resolution;
    s->size_ = resolution * resolution;
    s->weights_ = Eigen::VectorXd::Constant(s->size_, 1.0 / s->size_);
    s->finalize();
    return s;
}

DiscreteSpace::Ptr DiscreteSpace::finite(Eigen::VectorXd weights, Eigen::MatrixXd metric,
                                         bool allow_zero_weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 1) throw std::invalid_argument("finite: need at least one node");
    if (metric.rows() != n || metric.cols() != n)
        throw std::invalid_argument("finite: metric table dimensions do not match weights");

    bool all_positive = true;
    for (int i = 0; i < n; ++i) {
        if (!(weights(i) > 0.0)) {
            if (!allow_zero_weights || weights(i) < 0.0)
                throw std::invalid_argument("finite: non-positive weight at node " + std::to_string(i));
            all_positive = false;
        }
    }
    if (std::abs(weights.sum() - 1.0) > kWeightSumTol)
        throw std::invalid_argument("finite: weights are not normalizable (sum != 1)");

    for (int i = 0; i < n; ++i) {
        if (metric(i, i) != 0.0)
            throw std::invalid_argument("finite: metric must vanish on the diagonal");
        for (int j = i + 1; j < n; ++j) {
            if (metric(i, j) != metric(j, i))
                throw std::invalid_argument("finite: metric must be symmetric");
            if (!(metric(i, j) > 0.0))
                throw std::invalid_argument("finite: off-diagonal metric entries must be positive");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (metric(i, j) > metric(i, k) + metric(k, j) + 1e-15)
                    throw std::invalid_argument("finite: triangle inequality fails on sampled triple");

    auto s = std::shared_ptr<DiscreteSpace>(new DiscreteSpace());
    s->kind_ = SpaceKind::finite;
    s->resolution_ = n;
    s->size_ = n;
    s->weights_ = std::move(weights);
    s->metric_ = std::move(metric);
    s->all_positive_ = all_positive;
    s->finalize();
    return s;
}

void DiscreteSpace::finalize() {
    double diam = 0.0;
    double spacing = std::numeric_limits<double>::infinity();
    for (int i = 0; i < size_; ++i)
        for (int j = i + 1; j < size_; ++j) {
            const double d = distance(i, j);
            diam = std::max(diam, d);
            spacing = std::min(spacing, d);
        }
    diameter_ = diam;
    min_spacing_ = (size_ > 1) ? spacing : 0.0;

    std::uint64_t h = 1469598103934665603ull;
    const int k = static_cast<int>(kind_);
    h = fnv1a(h, &k, sizeof(k));
    h = fnv1a(h, &resolution_, sizeof(resolution_));
    h = fnv1a(h, weights_.data(), sizeof(double) * weights_.size());
    if (kind_ == SpaceKind::finite)
        h = fnv1a(h, metric_.data(), sizeof(double) * metric_.size());
    hash_ = h;
}

double DiscreteSpace::distance(int i, int j) const {
    switch (kind_) {
        case SpaceKind::finite:
            return metric_(i, j);
        case SpaceKind::interval:
            return std::abs(coords_[i] - coords_[j]);
        case SpaceKind::circle:
            return circle_arc(coords_[i], coords_[j]);
        case SpaceKind::torus2: {
            const int n = resolution_;
            const double a = circle_arc(static_cast<double>(i / n) / n, static_cast<double>(j / n) / n);
            const double b = circle_arc(static_cast<double>(i % n) / n, static_cast<double>(j % n) / n);
            return std::hypot(a, b);
        }
    }
    return 0.0;
}

std::vector<double> DiscreteSpace::node_coordinates(int i) const {
    switch (kind_) {
        case SpaceKind::finite: return {static_cast<double>(i)};
        case SpaceKind::interval:
        case SpaceKind::circle: return {coords_[i]};
        case SpaceKind::torus2: {
            const int n = resolution_;
            return {static_cast<double>(i / n) / n, static_cast<double>(i % n) / n};
        }
    }
    return {};
}

std::string DiscreteSpace::summary() const {
    std::ostringstream os;
    os << to_string(kind_) << ", " << size_ << " nodes, diameter " << diameter_;
    os << ", weights in [" << weights_.minCoeff() << ", " << weights_.maxCoeff() << "]";
    return os.str();
}

double ball_measure(const DiscreteSpace& space, int x, double r, Ball ball) {
    if (r < 0.0) throw std::invalid_argument("ball_measure: radius must be >= 0");
    double m = 0.0;
    for (int j = 0; j < space.size(); ++j) {
        const double d = space.distance(x, j);
        if (ball == Ball::open ? d < r : d <= r) m += space.weight(j);
    }
    return m;
}

double sphere_measure(const DiscreteSpace& space, int x, double r) {
    double m = 0.0;
    for (int j = 0; j < space.size(); ++j)
        if (space.distance(x, j) == r) m += space.weight(j);
    return m;
}

double find_delta_prime(const DiscreteSpace& space, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("find_delta_prime: delta must be > 0");

    const int n = space.size();
    // first_ring  = smallest sampled distance strictly above delta (any center);
    //               candidates at or below it have an empty annulus everywhere.
    // pass_limit  = largest radius whose annulus mass stays below delta * m(B)
    //               for every center.
    double first_ring = std::numeric_limits<double>::infinity();
    double pass_limit = std::numeric_limits<double>::infinity();
    std::vector<double> row(n);
    for (int x = 0; x < n; ++x) {
        double alpha = 0.0;
        for (int j = 0; j < n; ++j) {
            row[j] = space.distance(x, j);
            if (row[j] < delta) alpha += space.weight(j);
        }
        if (!(alpha > 0.0))
            throw NoDeltaPrime("find_delta_prime: empty ball of radius " + std::to_string(delta) +
                               " at node " + std::to_string(x));
        std::vector<int> idx;
        idx.reserve(n);
        for (int j = 0; j < n; ++j)
            if (row[j] >= delta) idx.push_back(j);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return row[a] < row[b]; });

        if (!idx.empty() && row[idx.front()] > delta)
            first_ring = std::min(first_ring, row[idx.front()]);
        const double bound = delta * alpha;
        double cum = 0.0;
        std::size_t t = 0;
        while (t < idx.size()) {
            const double r = row[idx[t]];
            double ring_mass = 0.0;
            while (t < idx.size() && row[idx[t]] == r) ring_mass += space.weight(idx[t++]);
            cum += ring_mass;
            if (cum >= bound) {
                // the annulus may not reach this ring: delta' <= r
                pass_limit = std::min(pass_limit, r);
                break;
            }
        }
        if (sphere_measure(space, x, delta) > 0.0) first_ring = -1.0;  // tie at delta: never empty
    }

    const double two_delta = 2.0 * delta;
    auto largest_candidate_below = [&](double limit) -> double {
        for (int level = 32; level <= 4096; level *= 2) {
            for (int j = 1; j <= level; ++j) {
                const double c = two_delta * std::pow(0.5, static_cast<double>(j) / (level + 1));
                if (c <= limit) return c;
            }
        }
        return -1.0;
    };

    if (first_ring > 0.0) {
        const double c = largest_candidate_below(std::min(first_ring, two_delta));
        if (c > delta) return c;
    }
    if (pass_limit > delta) {
        const double c = largest_candidate_below(std::min(pass_limit, two_delta));
        if (c > delta) return c;
    }
    throw NoDeltaPrime("find_delta_prime: no admissible radius in (" + std::to_string(delta) + ", " +
                       std::to_string(two_delta) + ") at this resolution");
}

double Bump::profile(double r) const {
    if (r <= delta) return 1.0;
    if (r >= delta_prime) return 0.0;
    return (delta_prime - r) / (delta_prime - delta);
}

Bump bump(const DiscreteSpace& space, int x, double delta) {
    Bump b;
    b.center = x;
    b.delta = delta;
    b.delta_prime = find_delta_prime(space, delta);
    b.values.resize(space.size());
    for (int j = 0; j < space.size(); ++j) b.values(j) = b.profile(space.distance(x, j));
    return b;
}

Eigen::MatrixXd ramp_kernel(const DiscreteSpace& space, double delta, double delta_prime) {
    const int n = space.size();
    Eigen::MatrixXd g(n, n);
    Bump profile_only;
    profile_only.delta = delta;
    profile_only.delta_prime = delta_prime;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = profile_only.profile(space.distance(i, j));
    return g;
}

std::string ConditionCheck::describe() const {
    std::ostringstream os;
    os << "C1 " << (c1 ? "ok" : "fails") << ", C2 " << (c2 ? "ok" : "fails");
    if (c1_witness) {
        os << "; sphere of mass " << c1_witness->mass << " at node " << c1_witness->node
           << " for radius index " << c1_witness->level;
    }
    if (c2_witness) {
        os << "; ball masses " << c2_witness->mass_a << " at node " << c2_witness->node_a << " vs "
           << c2_witness->mass_b << " at node " << c2_witness->node_b << " for radius index "
           << c2_witness->level;
    }
    return os.str();
}

ConditionCheck check_conditions(const DiscreteSpace& space, const std::vector<double>& deltas) {
    if (deltas.empty()) throw std::invalid_argument("check_conditions: empty radius sequence");
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (!(deltas[i] > 0.0))
            throw std::invalid_argument("check_conditions: radii must be positive");
        if (i > 0 && !(deltas[i] < deltas[i - 1]))
            throw std::invalid_argument("check_conditions: radii must be strictly decreasing");
    }

    ConditionCheck out;
    out.c1 = true;
    out.c2 = true;
    for (std::size_t ni = 0; ni < deltas.size(); ++ni) {
        for (int x = 0; x < space.size(); ++x) {
            const double s = sphere_measure(space, x, deltas[ni]);
            if (s > 0.0) {
                out.c1 = false;
                if (!out.c1_witness)
                    out.c1_witness = SphereWitness{static_cast<int>(ni), x, s};
            }
        }
        double m0 = ball_measure(space, 0, deltas[ni]);
        for (int x = 1; x < space.size(); ++x) {
            const double mx = ball_measure(space, x, deltas[ni]);
            if (std::abs(mx - m0) > 1e-12) {
                out.c2 = false;
                if (!out.c2_witness)
                    out.c2_witness = BallWitness{static_cast<int>(ni), 0, x, m0, mx};
            }
        }
    }
    out.c2 = out.c2 && out.c1;
    return out;
}

std::vector<double> default_delta_sequence(int count, double base) {
    const double phi = std::numbers::phi_v<double>;
    std::vector<double> out(count);
    double v = base;
    for (int i = 0; i < count; ++i) {
        out[i] = v;
        v /= phi;
    }
    return out;
}

}  // namespace kernelalg
