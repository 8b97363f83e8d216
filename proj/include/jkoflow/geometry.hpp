#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jkoflow/common.hpp"

namespace jkoflow::geometry {

// A cost function c(x,y) >= 0 vanishing exactly on the diagonal, together
// with its first derivatives and the mixed second derivative matrix
// H[i][j] = d^2 c / dx^i dy^j.  Derivative slots left empty by a builder are
// filled with central finite differences of eval (relative step fd_step_rel).
struct CostFunction {
  int dim = 0;
  std::string name;
  std::function<double(const Vec&, const Vec&)> eval;
  std::function<Vec(const Vec&, const Vec&)> grad_x;
  std::function<Vec(const Vec&, const Vec&)> grad_y;
  std::function<Mat(const Vec&, const Vec&)> mixed_hessian;
  // Optional validity predicate for points (open domains such as the
  // simplex interior or a half-space chart).
  std::function<bool(const Vec&)> in_domain;
  bool analytic_derivatives = false;

  bool point_ok(const Vec& x) const { return !in_domain || in_domain(x); }
};

// Smooth strictly convex potential with gradient, Hessian and the inverse
// gradient map.  When no closed-form inverse is supplied, a damped Newton
// solve on grad(x) = target is used.
struct ConvexPotential {
  int dim = 0;
  std::string name;
  std::function<double(const Vec&)> phi;
  std::function<Vec(const Vec&)> grad;
  std::function<Mat(const Vec&)> hessian;
  std::function<Vec(const Vec&)> grad_inverse;
  std::function<bool(const Vec&)> in_domain;

  bool point_ok(const Vec& x) const { return !in_domain || in_domain(x); }
};

// Riemannian metric data: the tensor g_ij per point and squared distance.
// dist_sq is exact (quadrature) in 1d, geodesic shooting in higher
// dimension; `approximate` flags anything weaker than the 1d quadrature.
struct MetricModel {
  int dim = 0;
  std::string name;
  std::function<Mat(const Vec&)> tensor;
  std::function<double(const Vec&, const Vec&)> dist_sq;
  bool approximate = false;
};

// Sampled two-sided comparability constants between a cost and d^2.
struct ComparabilityEstimate {
  double lambda_hat = 0.0;
  double Lambda_hat = 0.0;
  int n_samples = 0;
  Box domain_bounds;
};

struct A1A2Report {
  struct Entry {
    Vec x, y;
    double det_mixed = 0.0;
    bool degenerate = false;
  };
  std::vector<Entry> entries;
  double min_abs_det = 0.0;
  int n_degenerate = 0;
  // A1 is a global injectivity hypothesis; only its local surrogate (a
  // nonsingular mixed Hessian) is checked on samples.  For Bregman costs
  // the gradient map is a diffeomorphism, so A1 holds globally.
  bool a1_verified_globally = false;
  std::string a1_note;
};

// --- potentials -----------------------------------------------------------

// phi(x) = |x|^2 / 2; gradient map is the identity.
ConvexPotential quadratic_potential(int dim);

// Separable polynomial potential phi(x) = sum_a P(x_a) with
// P(t) = sum_k coeffs[k] t^k.  Convexity is the caller's responsibility on
// the working box; the gradient inverse is a per-axis monotone solve.
ConvexPotential polynomial_potential(int dim, const std::vector<double>& coeffs);

// Log-partition potential of the 1d Gaussian family in canonical
// coordinates (t1, t2), t2 < 0:  phi = -t1^2/(4 t2) - log(-2 t2)/4.
// Gradient and Hessian are analytic; the gradient inverse is closed form
// on the image {(u,v): v > u^2}.
ConvexPotential gaussian_log_partition_potential();

// --- cost builders --------------------------------------------------------

CostFunction quadratic_cost(int dim);

// c(x,y) = phi(x) - phi(y) - grad phi(y) . (x - y), analytic derivatives.
CostFunction bregman_cost(const ConvexPotential& potential);

// c(x,y) = (x-y)^T  D2phi(y) (x-y) / 2.
CostFunction mahalanobis_cost(const ConvexPotential& potential);

// Log cost on the open unit simplex in n coordinates, exposed on the
// (n-1)-dimensional chart that drops the last coordinate:
//   c(p,q) = log( mean_i q_i/p_i ) - mean_i log( q_i/p_i ).
CostFunction dirichlet_log_cost(int n);

// Full-coordinate evaluation with domain validation (all p_i, q_i > 0 and
// both sum to 1 within tol_geom); throws DomainError otherwise.
double dirichlet_log_eval(const Vec& p_full, const Vec& q_full);

// Lift a chart point (first n-1 simplex coordinates) to the full simplex.
Vec simplex_lift(const Vec& chart);

// --- metric builders ------------------------------------------------------

MetricModel euclidean_metric(int dim);

// Hessian metric g = D2 phi.  dist_sq by quadrature of sqrt(g) in 1d and by
// geodesic shooting in dim >= 2 (flagged approximate).
MetricModel hessian_metric(const ConvexPotential& potential);

// Metric with the tensor of `cost`'s induced metric and Euclidean dist_sq,
// flagged approximate.  Fallback for costs with no usable distance.
MetricModel euclidean_fallback_metric(const CostFunction& cost);

// --- operations -----------------------------------------------------------

// g_ij(x) = -c_{x^i,y^j}(x,x), symmetrized; throws SingularMetric when the
// smallest eigenvalue is <= 0.
Mat induced_metric(const CostFunction& cost, const Vec& x);

A1A2Report check_A1_A2(const CostFunction& cost,
                       const std::vector<std::pair<Vec, Vec>>& samples,
                       double tol_det = tol::det);

// Point y_t on the c-segment with respect to x joining y0 to y1:
//   grad_x c(x, y_t) = (1-t) grad_x c(x,y0) + t grad_x c(x,y1).
// Closed form through the gradient map for Bregman costs (pass the
// potential); damped Newton otherwise, warm-started from `guess` if given.
Vec c_segment(const CostFunction& cost, const Vec& x, const Vec& y0,
              const Vec& y1, double t,
              const ConvexPotential* bregman_potential = nullptr,
              const Vec* guess = nullptr);

// Finite-difference check of the initial c-segment velocity
// dy/dt|_0 = -g(x)^{-1} grad_x c(x,y) along the segment from x to y.
// Returns ||(y_h - x)/h - v||; O(h) for smooth costs.
double c_segment_velocity_check(const CostFunction& cost, const Vec& x,
                                const Vec& y, double h = 1e-3,
                                const ConvexPotential* bregman_potential = nullptr);

// Sampled lambda_hat = min c/d^2 and Lambda_hat = max c/d^2 over random
// pairs in `bounds`; pairs with d^2 < tol_geom are skipped.  Throws
// EmptySample if every pair is skipped.
ComparabilityEstimate estimate_comparability(const CostFunction& cost,
                                             const MetricModel& metric,
                                             const Box& bounds, int n_samples,
                                             Rng& rng);

// --- helpers shared with other modules ------------------------------------

// Central finite-difference gradient of f in its `which`-th argument
// (0 for x, 1 for y), relative step fd_step_rel.
Vec fd_grad(const std::function<double(const Vec&, const Vec&)>& f,
            const Vec& x, const Vec& y, int which);

double spd_min_eigenvalue(const Mat& m);

}  // namespace jkoflow::geometry
