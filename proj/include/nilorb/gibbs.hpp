#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nilorb/matrixlab.hpp"

namespace nilorb::gibbs {

using CMatrix = Eigen::MatrixXcd;

/// Exact matrix to complex doubles.
CMatrix to_numeric(const Matrix& m);

/// kappa(a, b) = c * Re tr(ab). The constant cancels in every ratio below, so
/// c = 1 (trace form) is the default.
struct KillingForm {
  double c = 1.0;
  double operator()(const CMatrix& a, const CMatrix& b) const;
};

/// omega(X*, Y*) = kappa(x, [X, Y]) at the point x.
/// Throws std::invalid_argument on a size mismatch.
double kks_value(const CMatrix& x, const CMatrix& X, const CMatrix& Y, const KillingForm& kappa = {});

/// max |exp(t ad_h) x - e^{2t} x|, with exp(t ad_h) taken as a dense matrix
/// exponential of ad_h on gl(n), which preserves the algebra.
double check_conical_flow(const StandardTriple& t, double time);

/// A tangent frame at x: algebra elements X_i whose [X_i, x] are independent
/// and span the tangent space of the orbit.
struct OrbitChart {
  CMatrix x;
  std::vector<CMatrix> generators;
  KillingForm kappa;
  int dimension = 0;  // 2d
};

/// Throws std::runtime_error if the chosen frame does not span the tangent
/// space at rank tolerance 1e-9.
OrbitChart make_chart(const StandardTriple& t, KillingForm kappa = {});

/// Pfaffian of a real antisymmetric matrix of even size.
double pfaffian(Eigen::MatrixXd a);

/// Gram matrix Omega_ij = omega(X_i*, X_j*) at the point `x`.
Eigen::MatrixXd kks_gram(const CMatrix& x, const std::vector<CMatrix>& frame, const KillingForm& kappa);

struct HomogeneityReport {
  double omega_error = 0;   // max |omega_tx / omega_x - t| / |t|
  double lambda_error = 0;  // max |lambda_tx / lambda_x - t^d| / |t^d|
  int d = 0;
};

/// Compares omega at tx with t * omega at x on random generator pairs, and the
/// Liouville density (Pfaffian of the Gram matrix on a random frame) with
/// t^d. The pushforward of X* under t Id is X* again, so no pullback appears.
/// Throws std::invalid_argument for t = 0 and std::runtime_error for a
/// degenerate frame.
HomogeneityReport check_homogeneity(const OrbitChart& chart, double t, int samples, std::uint64_t seed);

/// Points of the nilpotent cone of [[0,1],[0,0]] in sl(2,R):
/// y(s,u) = [[-su, s^2], [-u^2, su]], with |y|_F = s^2 + u^2. (s,u) and
/// (-s,-u) give the same point.
CMatrix sl2_cone_point(double s, double u);

/// Liouville area of {y in the cone : |y|_F <= R}, by quadrature over the
/// double cover.
double sl2_cone_volume(double radius, int radial_nodes = 64, int angular_nodes = 256);

struct VolumeScaling {
  std::vector<double> radii;
  std::vector<double> volumes;
  /// max over R of |vol(R) / (R^d vol(1)) - 1|
  double max_relative_deviation = 0;
};

VolumeScaling check_volume_scaling(const std::vector<double>& radii, int d = 1);

/// e^{-<beta,y>} + e^{<beta,y>} >= 2 for every sample, <beta,y> = kappa(beta,y).
bool check_divergence_bound(const CMatrix& beta, const std::vector<CMatrix>& samples,
                            const KillingForm& kappa = {});

/// Random cone points with |y| roughly up to `scale`.
std::vector<CMatrix> sample_sl2_cone(int count, double scale, std::mt19937_64& rng);

}  // namespace nilorb::gibbs
