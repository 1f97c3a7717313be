#include "cohtrade/channels.hpp"

#include "cohtrade/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

namespace cohtrade {

KrausChannel::KrausChannel(std::vector<Matrix> kraus_ops, std::string label)
    : ops_(std::move(kraus_ops)), label_(std::move(label)) {
  if (ops_.empty()) {
    throw ValidationFailure("KrausChannel: empty Kraus list");
  }
  dim_ = static_cast<int>(ops_.front().rows());
  Matrix completeness = Matrix::Zero(dim_, dim_);
  for (const Matrix& k : ops_) {
    if (k.rows() != dim_ || k.cols() != dim_) {
      throw DimensionMismatch("KrausChannel: Kraus operators of mixed dims");
    }
    if (!k.allFinite()) {
      throw ValidationFailure("KrausChannel: non-finite Kraus entries");
    }
    completeness += k.adjoint() * k;
  }
  const double defect =
      (completeness - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (defect > kKrausTol) {
    throw ValidationFailure(
        "KrausChannel: sum K^dag K deviates from identity beyond 1e-10");
  }
}

Matrix encoding_unitary(int m, int n, int d) {
  if (d < 1) {
    throw DomainError("encoding_unitary: dimension must be positive");
  }
  if (m < 0 || m >= d || n < 0 || n >= d) {
    throw IndexOutOfRange("encoding_unitary: indices must lie in [0, d)");
  }
  Matrix u = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const double phase = 2.0 * std::numbers::pi * m * j / d;
    u((j + n) % d, j) = std::polar(1.0, phase);
  }
  return u;
}

Matrix heisenberg_weyl(int mu, int nu, int d) {
  if (d < 1) {
    throw DomainError("heisenberg_weyl: dimension must be positive");
  }
  if (mu < 0 || mu >= d || nu < 0 || nu >= d) {
    throw IndexOutOfRange("heisenberg_weyl: indices must lie in [0, d)");
  }
  Matrix v = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double phase = 2.0 * std::numbers::pi * k * nu / d;
    v(k, (k + mu) % d) = std::polar(1.0, phase);
  }
  return v;
}

KrausChannel depolarizing_channel(double p, int d) {
  if (d < 1) {
    throw DomainError("depolarizing_channel: dimension must be positive");
  }
  if (p < 0.0 || p > 1.0) {
    throw DomainError("depolarizing_channel: p outside [0, 1]");
  }
  const double d2 = static_cast<double>(d) * d;
  std::vector<Matrix> ops;
  ops.reserve(d * d);
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      const double q =
          (mu == 0 && nu == 0) ? 1.0 - (d2 - 1.0) * p / d2 : p / d2;
      ops.push_back(std::sqrt(q) * heisenberg_weyl(mu, nu, d));
    }
  }
  char label[64];
  std::snprintf(label, sizeof(label), "depolarizing(p=%g,d=%d)", p, d);
  return KrausChannel(std::move(ops), label);
}

KrausChannel tensor_channel(const KrausChannel& lambda_a,
                            const KrausChannel& lambda_b) {
  std::vector<Matrix> ops;
  ops.reserve(lambda_a.kraus_ops().size() * lambda_b.kraus_ops().size());
  for (const Matrix& k : lambda_a.kraus_ops()) {
    for (const Matrix& l : lambda_b.kraus_ops()) {
      ops.push_back(kron(k, l));
    }
  }
  return KrausChannel(std::move(ops),
                      lambda_a.label() + " x " + lambda_b.label());
}

Matrix apply_matrix(const KrausChannel& channel, const Matrix& m) {
  if (m.rows() != channel.dim() || m.cols() != channel.dim()) {
    throw DimensionMismatch("apply_matrix: matrix dim differs from channel");
  }
  Matrix out = Matrix::Zero(channel.dim(), channel.dim());
  for (const Matrix& k : channel.kraus_ops()) {
    out += k * m * k.adjoint();
  }
  return out;
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) {
    throw DimensionMismatch("apply: state dim differs from channel");
  }
  return DensityMatrix(apply_matrix(channel, rho.mat()), rho.subsystems());
}

bool is_unital(const KrausChannel& channel) {
  Matrix image = Matrix::Zero(channel.dim(), channel.dim());
  for (const Matrix& k : channel.kraus_ops()) {
    image += k * k.adjoint();
  }
  return (image - Matrix::Identity(channel.dim(), channel.dim()))
             .cwiseAbs()
             .maxCoeff() <= kKrausTol;
}

}  // namespace cohtrade
