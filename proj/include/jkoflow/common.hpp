#pragma once

#include <Eigen/Dense>
#include <random>
#include <stdexcept>
#include <string>

namespace jkoflow {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Rng = std::mt19937_64;

// Default tolerances. Operations take them as arguments where it matters;
// these are the desk-scale double-precision defaults used throughout.
namespace tol {
inline constexpr double geom = 1e-8;
inline constexpr double det = 1e-12;
inline constexpr double velocity = 1e-4;
inline constexpr double newton = 1e-10;
inline constexpr double mass = 1e-12;
inline constexpr double lp = 1e-9;
inline constexpr double marginal_exact = 1e-9;
inline constexpr double marginal_entropic = 1e-6;
inline constexpr double mass_fd_implicit = 1e-12;
inline constexpr double mass_fd_explicit = 1e-10;
}  // namespace tol

// Relative step for central finite differences, scaled by coordinate size.
inline constexpr double fd_step_rel = 1e-5;
inline constexpr int max_newton_iters = 50;
inline constexpr int max_newton_halvings = 30;
inline constexpr int max_sinkhorn_iters = 100000;
inline constexpr long exact_size_cap_default = 10000;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : Error {
  using Error::Error;
};
struct SingularMetric : Error {
  using Error::Error;
};
struct OutOfDomain : Error {
  using Error::Error;
};
struct EmptySample : Error {
  using Error::Error;
};
struct SizeCap : Error {
  using Error::Error;
};
struct StabilityViolation : Error {
  using Error::Error;
};
struct NegativeDensity : Error {
  using Error::Error;
};
struct BoundaryIncompatible : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};

// Axis-aligned box; the sampling domain for geometry checks.
struct Box {
  Vec lo;
  Vec hi;

  int dim() const { return static_cast<int>(lo.size()); }

  bool contains(const Vec& x, double slack = 0.0) const {
    for (int a = 0; a < dim(); ++a)
      if (x[a] < lo[a] - slack || x[a] > hi[a] + slack) return false;
    return true;
  }

  Vec sample(Rng& rng) const {
    Vec x(dim());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int a = 0; a < dim(); ++a) x[a] = lo[a] + (hi[a] - lo[a]) * u(rng);
    return x;
  }

  Vec center() const { return 0.5 * (lo + hi); }
};

inline Box make_box(std::initializer_list<double> lo,
                    std::initializer_list<double> hi) {
  Box b;
  b.lo = Eigen::Map<const Vec>(std::data(lo), static_cast<long>(lo.size()));
  b.hi = Eigen::Map<const Vec>(std::data(hi), static_cast<long>(hi.size()));
  return b;
}

}  // namespace jkoflow
