#ifndef KERNELALG_RNG_HPP
#define KERNELALG_RNG_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Core>

namespace kernelalg {

// Deterministic random source. Draws go through the raw 64-bit stream only,
// never through distribution adaptors, so a seed fixes the exact byte-level
// output across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    // Uniform in [lo, hi).
    double uniform(double lo = 0.0, double hi = 1.0) {
        const double u = static_cast<double>(bits() >> 11) * 0x1.0p-53;
        return lo + u * (hi - lo);
    }

    // Uniform over a centered square; |z| <= radius.
    std::complex<double> complex_in_disc(double radius = 1.0) {
        const double s = radius / std::numbers::sqrt2_v<double>;
        return {uniform(-s, s), uniform(-s, s)};
    }

    int index(int n) { return static_cast<int>(bits() % static_cast<std::uint64_t>(n)); }

    // Dense complex grid with entries bounded by `bound` in modulus.
    Eigen::MatrixXcd complex_grid(int rows, int cols, double bound = 1.0) {
        Eigen::MatrixXcd m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = complex_in_disc(bound);
        return m;
    }

    Eigen::VectorXcd complex_vector(int n, double bound = 1.0) {
        Eigen::VectorXcd v(n);
        for (int i = 0; i < n; ++i) v(i) = complex_in_disc(bound);
        return v;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace kernelalg

#endif
