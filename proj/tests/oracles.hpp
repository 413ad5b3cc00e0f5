// Copyright 2026 The qmcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Complex omega(int d, long long k) {
  long long r = ((k % d) + d) % d;
  double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
  return {std::cos(angle), std::sin(angle)};
}

inline int mod(long long v, int d) { return static_cast<int>(((v % d) + d) % d); }

/// Tr_B or Tr_A of an operator on C^dA (x) C^dB by explicit index sums.
inline Matrix partial_trace_loops(const Matrix& m, int da, int db, bool keep_a) {
  int out_dim = keep_a ? da : db;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (int i = 0; i < out_dim; ++i) {
    for (int j = 0; j < out_dim; ++j) {
      Complex acc = 0;
      int traced = keep_a ? db : da;
      for (int k = 0; k < traced; ++k) {
        int row = keep_a ? i * db + k : k * db + i;
        int col = keep_a ? j * db + k : k * db + j;
        acc += m(row, col);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

inline Matrix clock(int d) {
  Matrix z = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) z(k, k) = omega(d, k);
  return z;
}

inline Matrix shift(int d) {
  Matrix x = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) x((k + 1) % d, k) = 1;
  return x;
}

inline Matrix power(const Matrix& m, int k) {
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

/// omega^{-2^{-1} p q} Z^p X^q on one qudit, tensored over the register.
inline Matrix weyl(int d, const std::vector<int>& p, const std::vector<int>& q) {
  int half = (d + 1) / 2;
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Matrix factor = omega(d, -static_cast<long long>(half) * p[i] * q[i]) * power(clock(d), mod(p[i], d)) *
                    power(shift(d), mod(q[i], d));
    Matrix next(out.rows() * d, out.cols() * d);
    for (int r = 0; r < out.rows(); ++r) {
      for (int c = 0; c < out.cols(); ++c) next.block(r * d, c * d, d, d) = out(r, c) * factor;
    }
    out = next;
  }
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  }
  return out;
}

/// The single-qudit beam-splitter unitary |i, j> -> |s i + t j, -t i + s j>.
inline Matrix beam_splitter(int d, int s, int t) {
  Matrix u = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      int a = mod(static_cast<long long>(s) * i + static_cast<long long>(t) * j, d);
      int b = mod(-static_cast<long long>(t) * i + static_cast<long long>(s) * j, d);
      u(a * d + b, i * d + j) = 1;
    }
  }
  return u;
}

/// Lambda(rho) = Tr_B[U (rho (x) sigma) U^dagger], or Tr_A for the complement.
inline Matrix channel(int d, int s, int t, const Matrix& sigma, const Matrix& rho, bool complement = false) {
  Matrix u = beam_splitter(d, s, t);
  Matrix joint = u * kron(rho, sigma) * u.adjoint();
  return partial_trace_loops(joint, d, d, !complement);
}

inline double min_eigenvalue(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline double entropy(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  double s = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    if (v > 1e-14) s -= v * std::log2(v);
  }
  return s;
}

/// Purification sum_k sqrt(lambda_k) |k> (x) |v_k> with the reference first.
inline Vector purification(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  const int d = static_cast<int>(m.rows());
  Vector out = Vector::Zero(d * d);
  for (int k = 0; k < d; ++k) {
    double lambda = std::max(0.0, es.eigenvalues()(k));
    for (int i = 0; i < d; ++i) out(k * d + i) = std::sqrt(lambda) * es.eigenvectors()(i, k);
  }
  return out;
}

/// S(B) - S(RB) from the global pure state |Psi>_RA (x) |phi>_{B E'} after the
/// beam splitter acts on A and B.
inline double coherent_information(int d, int s, int t, const Matrix& sigma, const Matrix& rho) {
  Vector psi = purification(rho);
  Vector phi = purification(sigma);
  Matrix u = beam_splitter(d, s, t);
  // Rows index (R, output), columns index (second output, E').
  Matrix m = Matrix::Zero(d * d, d * d);
  for (int r = 0; r < d; ++r) {
    for (int e = 0; e < d; ++e) {
      Vector in = Vector::Zero(d * d);
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) in(a * d + b) = psi(r * d + a) * phi(e * d + b);
      }
      Vector outv = u * in;
      for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) m(r * d + a, b * d + e) = outv(a * d + b);
      }
    }
  }
  Matrix joint = m * m.adjoint();
  Matrix output = partial_trace_loops(joint, d, d, false);
  return entropy(output) - entropy(joint);
}

/// log2 of the smallest lambda with lambda sigma - rho >= 0, by bisection on
/// the minimum eigenvalue. sigma must be full rank.
inline double max_relative_entropy_bisection(const Matrix& rho, const Matrix& sigma) {
  double lo = 0;
  double hi = 1;
  while (min_eigenvalue(hi * sigma - rho) < 0) hi *= 2;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (min_eigenvalue(mid * sigma - rho) >= 0 ? hi : lo) = mid;
  }
  return std::log2(hi);
}

/// The d (d + 1) pure single-qudit stabilizer projectors, as eigenprojectors
/// of Z and of X Z^m for every slope m.
inline std::vector<Matrix> pure_stabilizer_projectors(int d) {
  std::vector<Matrix> out;
  for (int k = 0; k < d; ++k) {
    Matrix p = Matrix::Zero(d, d);
    p(k, k) = 1;
    out.push_back(p);
  }
  for (int m = 0; m < d; ++m) {
    Matrix w = shift(d) * power(clock(d), m);
    Eigen::ComplexEigenSolver<Matrix> es(w);
    for (int k = 0; k < d; ++k) {
      Vector v = es.eigenvectors().col(k).normalized();
      out.push_back(v * v.adjoint());
    }
  }
  return out;
}

struct FeasibilityResult {
  bool feasible = false;
  std::vector<double> weights;
};

/// Euclidean projection onto {y >= 0, sum y = total}.
inline std::vector<double> project_simplex(const std::vector<double>& v, double total) {
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0;
  double theta = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    double candidate = (cumulative - total) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0) theta = candidate;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(0.0, v[i] - theta);
  return out;
}

/// Douglas-Rachford search for y >= 0 with sum y = total and
/// sum_i y_i P_i - rho >= -tolerance. The two sets are the graph
/// {(y, X) : X = sum y_i P_i} and the product of the scaled simplex with
/// {X : X >= rho}.
inline FeasibilityResult stabilizer_cover_feasible(const std::vector<Matrix>& projectors, const Matrix& rho,
                                                   double total, int iterations, double tolerance) {
  std::size_t m = projectors.size();
  Eigen::Index dim = rho.rows();
  Eigen::MatrixXd gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = (projectors[i] * projectors[j]).trace().real();
  }
  Eigen::LDLT<Eigen::MatrixXd> solve(Eigen::MatrixXd::Identity(m, m) + gram);
  auto combine = [&](const std::vector<double>& y) {
    Matrix x = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < m; ++i) x += y[i] * projectors[i];
    return x;
  };
  auto project_b = [&](const std::vector<double>& y, const Matrix& x) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x - rho + (x - rho).adjoint()));
    Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
    Matrix psd = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    return std::make_pair(project_simplex(y, total), Matrix(rho + psd));
  };
  auto project_a = [&](const std::vector<double>& y, const Matrix& x) {
    Eigen::VectorXd rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs(i) = y[i] + (projectors[i] * x).trace().real();
    Eigen::VectorXd sol = solve.solve(rhs);
    std::vector<double> out(sol.data(), sol.data() + m);
    return std::make_pair(out, combine(out));
  };

  std::vector<double> zy(m, total / static_cast<double>(m));
  Matrix zx = combine(zy);
  FeasibilityResult result;
  for (int it = 0; it < iterations; ++it) {
    auto [by, bx] = project_b(zy, zx);
    if (it % 10 == 0 && min_eigenvalue(combine(by) - rho) >= -tolerance) {
      result.feasible = true;
      result.weights = by;
      return result;
    }
    std::vector<double> ry(m);
    for (std::size_t i = 0; i < m; ++i) ry[i] = 2 * by[i] - zy[i];
    Matrix rx = 2 * bx - zx;
    auto [ay, ax] = project_a(ry, rx);
    for (std::size_t i = 0; i < m; ++i) zy[i] += ay[i] - by[i];
    zx += ax - bx;
  }
  return result;
}

/// log2 of the least total weight found feasible by bisection between 1 and
/// d (the computational basis always covers rho).
inline double mrm_inf_bisection(int d, const Matrix& rho, int iterations = 2000, double tolerance = 1e-7) {
  std::vector<Matrix> projectors = pure_stabilizer_projectors(d);
  double lo = 1;
  double hi = d;
  for (int step = 0; step < 24; ++step) {
    double mid = 0.5 * (lo + hi);
    (stabilizer_cover_feasible(projectors, rho, mid, iterations, tolerance).feasible ? hi : lo) = mid;
  }
  return std::log2(hi);
}

}  // namespace oracle
