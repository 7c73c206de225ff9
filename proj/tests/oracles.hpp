// Copyright 2026 The distnorm Authors
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

// Independent reference computations used only by the tests. Nothing
// here calls into the library's algorithms beyond plain data types.
#ifndef DISTNORM_TESTS_ORACLES_HPP
#define DISTNORM_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/beta.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "distnorm/hilbert.hpp"
#include "distnorm/perm4.hpp"
#include "distnorm/povm.hpp"

namespace oracle {

using distnorm::Complex;
using distnorm::Index;
using distnorm::Matrix;
using distnorm::Vector;

inline std::vector<int> digits(Index i, const std::vector<int>& dims) {
  std::vector<int> out(dims.size());
  for (int j = static_cast<int>(dims.size()) - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = static_cast<int>(i % dims[static_cast<std::size_t>(j)]);
    i /= dims[static_cast<std::size_t>(j)];
  }
  return out;
}

inline Index flat(const std::vector<int>& dig, const std::vector<int>& dims) {
  Index i = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) i = i * dims[j] + dig[j];
  return i;
}

inline Index product(const std::vector<int>& dims) {
  Index n = 1;
  for (int d : dims) n *= d;
  return n;
}

/// tr over the parties whose bit is set in `traced`, by explicit loops.
inline Matrix partial_trace(const Matrix& m, const std::vector<int>& dims, std::uint32_t traced) {
  std::vector<int> kept_dims;
  for (std::size_t j = 0; j < dims.size(); ++j)
    if (!((traced >> j) & 1u)) kept_dims.push_back(dims[j]);
  const Index nk = product(kept_dims);
  Matrix out = Matrix::Zero(nk, nk);
  const Index n = product(dims);
  for (Index r = 0; r < n; ++r) {
    const std::vector<int> dr = digits(r, dims);
    for (Index c = 0; c < n; ++c) {
      const std::vector<int> dc = digits(c, dims);
      bool diag = true;
      std::vector<int> kr, kc;
      for (std::size_t j = 0; j < dims.size(); ++j) {
        if ((traced >> j) & 1u) {
          if (dr[j] != dc[j]) diag = false;
        } else {
          kr.push_back(dr[j]);
          kc.push_back(dc[j]);
        }
      }
      if (diag) out(flat(kr, kept_dims), flat(kc, kept_dims)) += m(r, c);
    }
  }
  return out;
}

/// Transpose on the parties in `mask`, by explicit index swapping.
inline Matrix partial_transpose(const Matrix& m, const std::vector<int>& dims, std::uint32_t mask) {
  const Index n = product(dims);
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      std::vector<int> dr = digits(r, dims), dc = digits(c, dims);
      for (std::size_t j = 0; j < dims.size(); ++j)
        if ((mask >> j) & 1u) std::swap(dr[j], dc[j]);
      out(flat(dr, dims), flat(dc, dims)) = m(r, c);
    }
  }
  return out;
}

inline double trace_norm(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Sum of singular values of an arbitrary square matrix.
inline double singular_value_sum(const Matrix& m) { return Eigen::JacobiSVD<Matrix>(m).singularValues().sum(); }

/// Dense operator on (C^D)^{(x)4}, party j of copy a moved to copy
/// pi_j(a): U |x_1, ..., x_4> = |y> with y_{pi_j(a)}[j] = x_a[j].
inline Matrix dense_perm_operator(const distnorm::PermTuple& pi, const std::vector<int>& dims) {
  const Index d = product(dims);
  const Index n = d * d * d * d;
  Matrix u = Matrix::Zero(n, n);
  for (Index x = 0; x < n; ++x) {
    Index copies[4];
    Index rest = x;
    for (int a = 3; a >= 0; --a) {
      copies[a] = rest % d;
      rest /= d;
    }
    std::vector<std::vector<int>> out(4, std::vector<int>(dims.size()));
    for (int a = 0; a < 4; ++a) {
      const std::vector<int> dig = digits(copies[a], dims);
      for (std::size_t j = 0; j < dims.size(); ++j) out[static_cast<std::size_t>(pi[j](a))][j] = dig[j];
    }
    Index y = 0;
    for (int a = 0; a < 4; ++a) y = y * d + flat(out[static_cast<std::size_t>(a)], dims);
    u(y, x) = 1.0;
  }
  return u;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// tr (Delta^{(x)4} U) with the dense operator above.
inline Complex dense_perm_trace(const Matrix& delta, const distnorm::PermTuple& pi, const std::vector<int>& dims) {
  const Matrix d2 = kron(delta, delta);
  const Matrix d4 = kron(d2, d2);
  return (d4 * dense_perm_operator(pi, dims)).trace();
}

/// sum over product outcomes of p_x (tr Delta P_x)^power.
inline double design_sum(const Matrix& delta, const std::vector<distnorm::povm::DesignEnsemble>& parts, int power) {
  std::vector<std::size_t> idx(parts.size(), 0);
  double sum = 0.0;
  while (true) {
    Vector psi = Vector::Ones(1);
    double w = 1.0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Vector& v = parts[j].states()[idx[j]];
      Vector next(psi.size() * v.size());
      for (Index a = 0; a < psi.size(); ++a) next.segment(a * v.size(), v.size()) = psi(a) * v;
      psi = next;
      w *= parts[j].weights()[idx[j]];
    }
    const double s = psi.dot(delta * psi).real();
    sum += w * std::pow(s, power);
    std::size_t j = parts.size();
    while (j > 0) {
      --j;
      if (++idx[j] < parts[j].size()) break;
      idx[j] = 0;
      if (j == 0) return sum;
    }
    if (parts.empty()) return sum;
  }
}

/// Uniform-POVM norm of (a 1 + r . sigma)/2 in closed form.
inline double qubit_uniform_closed_form(double a, double rho) {
  if (std::abs(a) >= rho) return std::abs(a);
  return (a * a + rho * rho) / (2.0 * rho);
}

/// E|2X - 1| for X ~ Beta(d/2, d/2): the uniform-POVM norm of
/// (P - Q)/d with complementary rank-d/2 projectors.
inline double balanced_projector_uniform_norm(int d) {
  boost::math::beta_distribution<double> beta(d / 2.0, d / 2.0);
  auto f = [&](double x) { return std::abs(2.0 * x - 1.0) * boost::math::pdf(beta, x); };
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(f, 0.0, 0.5, 10, 1e-14) +
         gauss_kronrod<double, 61>::integrate(f, 0.5, 1.0, 10, 1e-14);
}

/// Gaussian Hermitian operator rescaled to unit Hilbert-Schmidt norm.
inline Matrix random_unit_hermitian(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) m(r, c) = Complex(g(rng), g(rng));
  const Matrix h = (m + m.adjoint()) * 0.5;
  return h / h.norm();
}

}  // namespace oracle

#endif  // DISTNORM_TESTS_ORACLES_HPP
