#include "nilorb/gibbs.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace nilorb::gibbs {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kRankTol = 1e-9;

/// Real coordinates of a complex matrix: real parts then imaginary parts.
VectorXd realify(const CMatrix& m) {
  const Eigen::Index n = m.size();
  VectorXd v(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    v(k) = m.data()[k].real();
    v(n + k) = m.data()[k].imag();
  }
  return v;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

std::vector<CMatrix> numeric_basis(const AmbientSpace& ambient) {
  std::vector<CMatrix> out;
  for (const auto& e : algebra_basis(ambient)) out.push_back(to_numeric(e));
  return out;
}

MatrixXd columns_of(const std::vector<CMatrix>& ms) {
  MatrixXd out(2 * ms.front().size(), static_cast<Eigen::Index>(ms.size()));
  for (std::size_t k = 0; k < ms.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = realify(ms[k]);
  return out;
}

Eigen::Index numeric_rank(const MatrixXd& m) {
  Eigen::ColPivHouseholderQR<MatrixXd> qr(m);
  qr.setThreshold(kRankTol);
  return qr.rank();
}

}  // namespace

CMatrix to_numeric(const Matrix& m) {
  CMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {m(i, j).re().get_d(),
                                                                          m(i, j).im().get_d()};
  return out;
}

double KillingForm::operator()(const CMatrix& a, const CMatrix& b) const {
  return c * (a * b).trace().real();
}

double kks_value(const CMatrix& x, const CMatrix& X, const CMatrix& Y, const KillingForm& kappa) {
  if (x.rows() != x.cols() || X.rows() != x.rows() || X.cols() != x.cols() || Y.rows() != x.rows() ||
      Y.cols() != x.cols()) {
    throw std::invalid_argument("kks_value needs square matrices of one size");
  }
  return kappa(x, commutator(X, Y));
}

double check_conical_flow(const StandardTriple& t, double time) {
  // ad_h on gl(n) in the unit-matrix basis: vec(hZ - Zh) = (I (x) h - h^T (x) I) vec(Z)
  // (column-major vec). The algebra is ad_h-invariant, so this restricts to
  // exp(t ad_h) on the algebra.
  const CMatrix h = to_numeric(t.h);
  const CMatrix x = to_numeric(t.x);
  const Eigen::Index n = h.rows();
  const CMatrix id = CMatrix::Identity(n, n);
  CMatrix ad = CMatrix::Zero(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      ad.block(i * n, j * n, n, n) += id(i, j) * h;
      ad.block(i * n, j * n, n, n) -= h(j, i) * id;
    }
  const CMatrix flow = (std::complex<double>(time) * ad).exp();
  const Eigen::VectorXcd vx = Eigen::Map<const Eigen::VectorXcd>(x.data(), n * n);
  const Eigen::VectorXcd moved = flow * vx;
  return (moved - std::exp(2 * time) * vx).cwiseAbs().maxCoeff();
}

OrbitChart make_chart(const StandardTriple& t, KillingForm kappa) {
  OrbitChart chart;
  chart.x = to_numeric(t.x);
  chart.kappa = kappa;
  std::vector<CMatrix> tangents;
  Eigen::Index current = 0;
  const auto basis = numeric_basis(t.ambient);
  for (const auto& e : basis) {
    tangents.push_back(commutator(e, chart.x));
    const Eigen::Index next = numeric_rank(columns_of(tangents));
    if (next > current) {
      current = next;
      chart.generators.push_back(e);
    } else {
      tangents.pop_back();
    }
  }
  std::vector<CMatrix> all;
  for (const auto& e : basis) all.push_back(commutator(e, chart.x));
  if (numeric_rank(columns_of(all)) != current) {
    throw std::runtime_error("chart generators do not span the tangent space");
  }
  chart.dimension = static_cast<int>(current);
  return chart;
}

double pfaffian(MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("pfaffian needs a square matrix");
  if (n % 2 != 0) return 0.0;
  double result = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index pivot;
    a.row(k).tail(n - k - 1).cwiseAbs().maxCoeff(&pivot);
    pivot += k + 1;
    if (pivot != k + 1) {
      a.row(k + 1).swap(a.row(pivot));
      a.col(k + 1).swap(a.col(pivot));
      result = -result;
    }
    const double p = a(k, k + 1);
    if (p == 0.0) return 0.0;
    result *= p;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      const double f = a(k, i) / p;
      a.row(i) -= f * a.row(k + 1);
      a.col(i) -= f * a.col(k + 1);
    }
  }
  return result;
}

MatrixXd kks_gram(const CMatrix& x, const std::vector<CMatrix>& frame, const KillingForm& kappa) {
  const auto n = static_cast<Eigen::Index>(frame.size());
  MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = kks_value(x, frame[i], frame[j], kappa);
  return g;
}

HomogeneityReport check_homogeneity(const OrbitChart& chart, double t, int samples, std::uint64_t seed) {
  if (t == 0.0) throw std::invalid_argument("homogeneity needs t != 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const auto k = static_cast<Eigen::Index>(chart.generators.size());
  auto mix = [&](const Eigen::VectorXd& c) {
    CMatrix out = CMatrix::Zero(chart.x.rows(), chart.x.cols());
    for (Eigen::Index i = 0; i < k; ++i) out += c(i) * chart.generators[static_cast<std::size_t>(i)];
    return out;
  };
  auto random_vec = [&] {
    Eigen::VectorXd v(k);
    for (Eigen::Index i = 0; i < k; ++i) v(i) = gauss(rng);
    return v;
  };

  HomogeneityReport report;
  report.d = chart.dimension / 2;
  const CMatrix tx = t * chart.x;
  const double td = std::pow(t, report.d);
  for (int s = 0; s < samples; ++s) {
    const CMatrix X = mix(random_vec());
    const CMatrix Y = mix(random_vec());
    const double base = kks_value(chart.x, X, Y, chart.kappa);
    const double scaled = kks_value(tx, X, Y, chart.kappa);
    if (std::abs(base) > kRankTol) {
      report.omega_error = std::max(report.omega_error, std::abs(scaled / base - t) / std::abs(t));
    }

    std::vector<CMatrix> frame;
    for (Eigen::Index i = 0; i < k; ++i) frame.push_back(mix(random_vec()));
    const double lam = pfaffian(kks_gram(chart.x, frame, chart.kappa));
    if (std::abs(lam) < kRankTol) throw std::runtime_error("degenerate frame: Liouville density vanishes");
    const double lam_t = pfaffian(kks_gram(tx, frame, chart.kappa));
    report.lambda_error = std::max(report.lambda_error, std::abs(lam_t / lam - td) / std::abs(td));
  }
  return report;
}

CMatrix sl2_cone_point(double s, double u) {
  CMatrix y(2, 2);
  y << -s * u, s * s, -u * u, s * u;
  return y;
}

double sl2_cone_volume(double radius, int radial_nodes, int angular_nodes) {
  // Tangent vectors d_s y and d_u y are written as [A, y]; then the KKS form
  // on the (s,u) chart is kappa(y, [A_s, A_u]).
  const std::vector<CMatrix> sl2 = {
      (CMatrix(2, 2) << 1, 0, 0, -1).finished(),
      (CMatrix(2, 2) << 0, 1, 0, 0).finished(),
      (CMatrix(2, 2) << 0, 0, 1, 0).finished(),
  };
  const KillingForm kappa;
  auto density = [&](double s, double u) {
    const CMatrix y = sl2_cone_point(s, u);
    std::vector<CMatrix> images;
    for (const auto& e : sl2) images.push_back(commutator(e, y));
    const MatrixXd system = columns_of(images);
    const auto solver = system.colPivHouseholderQr();
    CMatrix ds(2, 2), du(2, 2);
    ds << -u, 2 * s, 0, u;
    du << -s, 0, -2 * u, s;
    const VectorXd cs = solver.solve(realify(ds));
    const VectorXd cu = solver.solve(realify(du));
    CMatrix as = CMatrix::Zero(2, 2), au = CMatrix::Zero(2, 2);
    for (std::size_t k = 0; k < sl2.size(); ++k) {
      as += cs(static_cast<Eigen::Index>(k)) * sl2[k];
      au += cu(static_cast<Eigen::Index>(k)) * sl2[k];
    }
    return std::abs(kks_value(y, as, au, kappa));
  };

  // polar coordinates on the (s,u) plane: s^2 + u^2 <= radius; midpoint rule
  const double rho_max = std::sqrt(radius);
  const double dr = rho_max / radial_nodes;
  const double dt = 2 * std::numbers::pi / angular_nodes;
  double total = 0;
  for (int i = 0; i < radial_nodes; ++i) {
    const double rho = (i + 0.5) * dr;
    for (int j = 0; j < angular_nodes; ++j) {
      const double th = (j + 0.5) * dt;
      total += density(rho * std::cos(th), rho * std::sin(th)) * rho * dr * dt;
    }
  }
  return total / 2;  // the chart covers the cone twice
}

VolumeScaling check_volume_scaling(const std::vector<double>& radii, int d) {
  VolumeScaling out;
  out.radii = radii;
  const double unit = sl2_cone_volume(1.0);
  for (double r : radii) {
    const double v = sl2_cone_volume(r);
    out.volumes.push_back(v);
    out.max_relative_deviation =
        std::max(out.max_relative_deviation, std::abs(v / (std::pow(r, d) * unit) - 1));
  }
  return out;
}

bool check_divergence_bound(const CMatrix& beta, const std::vector<CMatrix>& samples,
                            const KillingForm& kappa) {
  for (const auto& y : samples) {
    const double b = kappa(beta, y);
    // allow a few ulps: exp rounds independently on both sides of b = 0
    if (std::exp(-b) + std::exp(b) < 2.0 - 8 * std::numeric_limits<double>::epsilon()) return false;
  }
  return true;
}

std::vector<CMatrix> sample_sl2_cone(int count, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<CMatrix> out;
  const double r = std::sqrt(scale);
  for (int i = 0; i < count; ++i) out.push_back(sl2_cone_point(r * unif(rng), r * unif(rng)));
  return out;
}

}  // namespace nilorb::gibbs
