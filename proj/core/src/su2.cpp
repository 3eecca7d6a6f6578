#include "pqc/su2.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "combinatorics.hpp"
#include "pqc/error.hpp"

namespace pqc {

namespace {

void requireQubitUnitary(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw Error(ErrorCode::kNotUnitary, "expected a 2x2 matrix");
  }
  if (!isUnitary(u, kDefaultTol)) {
    throw Error(ErrorCode::kNotUnitary, "matrix is not unitary within 1e-10");
  }
}

}  // namespace

LiftedUnitary liftSymmetric(const ComplexMatrix& u, int n) {
  requireQubitUnitary(u);
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative photon number");
  if (n == 0) return {u, 0, ComplexMatrix::identity(1)};
  const ComplexMatrix v = symmetricEmbedding(n);
  return {u, n, dagger(v) * tensorPower(u, n) * v};
}

ComplexMatrix blockLift(const ComplexMatrix& u, const SectorStructure& structure) {
  ComplexMatrix out(structure.totalDim(), structure.totalDim());
  for (int n = 0; n <= structure.maxPhotons(); ++n) {
    const auto start = structure.offset(n);
    out.setBlock(start, start, liftSymmetric(u, n).matrix);
  }
  return out;
}

long long multiplicity(int k, Spin s) {
  if (k < 0) throw Error(ErrorCode::kBadSpin, "negative tensor power");
  if (s.twice < 0 || s.twice > k || (k - s.twice) % 2 != 0) {
    throw Error(ErrorCode::kBadSpin, "spin " + std::to_string(s.value()) +
                                         " does not occur in the " + std::to_string(k) +
                                         "-fold product");
  }
  // k/2 + s = (k + 2s)/2
  const int upper = (k + s.twice) / 2;
  const auto numerator = static_cast<long long>(s.twice + 1) *
                         static_cast<long long>(detail::binomial(k, upper));
  return numerator / (upper + 1);
}

std::vector<Spin> spinsInTensorPower(int k) {
  std::vector<Spin> spins;
  for (int twice = k % 2; twice <= k; twice += 2) spins.push_back(Spin{twice});
  return spins;
}

void gaussLegendre(int points, std::vector<double>& nodes, std::vector<double>& weights) {
  if (points < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one node");
  nodes.assign(static_cast<std::size_t>(points), 0.0);
  weights.assign(static_cast<std::size_t>(points), 0.0);
  const int half = (points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= points; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      derivative = points * (x * p0 - p1) / (x * x - 1.0);
      const double step = p0 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(points - 1 - i);
    nodes[lo] = -x;
    nodes[hi] = x;
    weights[lo] = weights[hi] = 2.0 / ((1.0 - x * x) * derivative * derivative);
  }
}

ComplexMatrix HaarQuadrature::chartUnitary(double phi, double psi, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return ComplexMatrix{{std::polar(c, phi), std::polar(s, psi)},
                       {-std::polar(s, -psi), std::polar(c, -phi)}};
}

HaarQuadrature::HaarQuadrature(int order, int refinement) : order_(order) {
  if (order < 0 || refinement < 1) {
    throw Error(ErrorCode::kInvalidArgument, "quadrature order must be >= 0");
  }
  // Phase frequencies reach 2k, so 2k+1 trapezoid nodes are exact. After the
  // phase average the θ-dependence is a polynomial of degree <= k in u.
  const int angle_nodes = refinement * (2 * order + 1);
  const int gauss_nodes = refinement * (order / 2 + 1);

  std::vector<double> u;
  std::vector<double> w;
  gaussLegendre(gauss_nodes, u, w);

  const double step = 2.0 * std::numbers::pi / angle_nodes;
  const double angle_weight = 1.0 / (static_cast<double>(angle_nodes) * angle_nodes);
  nodes_.reserve(static_cast<std::size_t>(angle_nodes) * angle_nodes * u.size());
  for (std::size_t g = 0; g < u.size(); ++g) {
    const double theta = 0.5 * std::acos(u[g]);
    for (int a = 0; a < angle_nodes; ++a) {
      for (int b = 0; b < angle_nodes; ++b) {
        nodes_.push_back(
            {angle_weight * w[g] / 2.0, chartUnitary(a * step, b * step, theta)});
      }
    }
  }
}

ComplexMatrix haarMoment(int k, const HaarQuadrature& quad) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "moment order must be >= 1");
  if (quad.order() < k) {
    throw Error(ErrorCode::kQuadratureTooCoarse,
                "order-" + std::to_string(quad.order()) + " rule cannot integrate the " +
                    std::to_string(k) + "-th moment");
  }
  const std::size_t dim = std::size_t{1} << (2 * k);
  ComplexMatrix moment(dim, dim);
  for (const auto& node : quad.nodes()) {
    moment.addScaled(node.weight,
                     kron(tensorPower(node.unitary, k), tensorPower(conjugate(node.unitary), k)));
  }
  return moment;
}

ComplexMatrix haarChannelApply(const ComplexMatrix& rho, const SectorStructure& structure) {
  if (rho.rows() != structure.totalDim() || rho.cols() != structure.totalDim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state does not live on K(N)");
  }
  if (!isDensityOperator(rho, kDefaultTol)) {
    throw Error(ErrorCode::kNotDensityOperator, "input is not a density operator");
  }
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int n = 0; n <= structure.maxPhotons(); ++n) {
    Complex weight{};
    const auto start = structure.offset(n);
    const auto dim = structure.sectorDim(n);
    for (std::size_t i = 0; i < dim; ++i) weight += rho(start + i, start + i);
    for (std::size_t i = 0; i < dim; ++i)
      out(start + i, start + i) = weight / static_cast<double>(dim);
  }
  return out;
}

ComplexMatrix haarChoi(const SectorStructure& structure) {
  const auto dim = structure.totalDim();
  ComplexMatrix out(dim * dim, dim * dim);
  for (int n = 0; n <= structure.maxPhotons(); ++n) {
    const auto start = structure.offset(n);
    const auto sector = structure.sectorDim(n);
    const double value = 1.0 / static_cast<double>(sector);
    for (std::size_t a = 0; a < sector; ++a) {
      for (std::size_t b = 0; b < sector; ++b) {
        const auto idx = (start + a) * dim + (start + b);
        out(idx, idx) = value;
      }
    }
  }
  return out;
}

}  // namespace pqc
