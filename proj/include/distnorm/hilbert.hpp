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

#ifndef DISTNORM_HILBERT_HPP
#define DISTNORM_HILBERT_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "distnorm/permutation.hpp"

namespace distnorm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

namespace hilbert {

/// Entrywise tolerance used to accept (and then symmetrize) a matrix as
/// Hermitian.
inline constexpr double kHermitianTolerance = 1e-12;
/// Largest accepted entry magnitude; fourth powers of larger operators
/// overflow double precision.
inline constexpr double kMaxEntryMagnitude = 1e60;

class MultiSpace;

/// A subset of the parties of a K-partite space, as a bitmask. Party j
/// (0-based) corresponds to bit j; user-facing text numbers parties 1..K.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> parties);
  static SubsetMask of(const std::vector<int>& parties);
  static constexpr SubsetMask full(int parties) {
    return SubsetMask(parties >= 32 ? ~0u : ((1u << parties) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int party) const { return (bits_ >> party) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;
  std::vector<int> members() const;
  bool valid_for(const MultiSpace& space) const;
  constexpr SubsetMask complement(int parties) const {
    return SubsetMask(~bits_ & full(parties).bits_);
  }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }
  constexpr bool operator==(const SubsetMask&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All 2^K subsets of K parties, in increasing bitmask order.
std::vector<SubsetMask> all_subsets(int parties);

/// H = H_1 (x) ... (x) H_K with local dimensions d_j. Multi-indices are
/// mixed-radix with party 0 most significant. An empty list is the
/// one-dimensional space of scalars.
class MultiSpace {
 public:
  MultiSpace() = default;
  explicit MultiSpace(std::vector<int> dims);
  static MultiSpace uniform(int local_dim, int parties);

  int parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_[static_cast<std::size_t>(party)]; }
  const std::vector<int>& dims() const { return dims_; }
  Index total_dim() const { return total_; }
  Index stride(int party) const { return strides_[static_cast<std::size_t>(party)]; }
  int digit(Index index, int party) const {
    return static_cast<int>((index / stride(party)) % dim(party));
  }

  /// The space of the parties in `keep`, in their original order.
  MultiSpace restricted(SubsetMask keep) const;
  /// Product of the local dimensions of the parties in `parties`.
  Index dim_of(SubsetMask parties) const;
  /// For every multi-index of restricted(parties), its offset inside a
  /// multi-index of this space (digits of the other parties set to zero).
  std::vector<Index> embedding_offsets(SubsetMask parties) const;

  bool operator==(const MultiSpace& o) const { return dims_ == o.dims_; }

 private:
  std::vector<int> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

/// A Hermitian operator on a MultiSpace. Construction checks Hermiticity
/// entrywise against kHermitianTolerance and stores (M + M^dag)/2.
/// Entries above kMaxEntryMagnitude raise NumericalError.
class HermitianOp {
 public:
  HermitianOp(MultiSpace space, Matrix matrix);

  static HermitianOp zero(const MultiSpace& space);
  static HermitianOp identity(const MultiSpace& space);
  /// Diagonal operator from real diagonal entries.
  static HermitianOp diagonal(const MultiSpace& space, const std::vector<double>& entries);

  const MultiSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  double trace() const { return matrix_.trace().real(); }

  HermitianOp operator+(const HermitianOp& o) const;
  HermitianOp operator-(const HermitianOp& o) const;
  HermitianOp operator*(double s) const;
  friend HermitianOp operator*(double s, const HermitianOp& op) { return op * s; }

 private:
  MultiSpace space_;
  Matrix matrix_;
};

/// Tensor product; the parties of `b` follow those of `a`.
HermitianOp tensor(const HermitianOp& a, const HermitianOp& b);
HermitianOp tensor_power(const HermitianOp& a, int copies);

/// tr_I over the parties in `traced`; the result lives on the remaining
/// parties (a 1x1 operator when everything is traced out).
Matrix partial_trace(const MultiSpace& space, const Matrix& m, SubsetMask traced);
HermitianOp partial_trace(const HermitianOp& op, SubsetMask traced);

/// Transpose on the tensor factors in `parties` only.
Matrix partial_transpose(const MultiSpace& space, const Matrix& m, SubsetMask parties);
HermitianOp partial_transpose(const HermitianOp& op, SubsetMask parties);

/// Ascending eigenvalues. Throws NumericalError when the solver fails.
Eigen::VectorXd eigenvalues(const HermitianOp& op);
Eigen::VectorXd eigenvalues(const Matrix& hermitian);

double schatten_1(const HermitianOp& op);
/// Trace norm of an arbitrary square matrix (sum of singular values).
double trace_norm(const Matrix& m);
double schatten_2(const HermitianOp& op);
double schatten_2(const Matrix& m);
double operator_norm(const HermitianOp& op);
double min_eigenvalue(const HermitianOp& op);

/// Eigenvalues below -1e-10 * ||op||_2 count as negative.
double zero_eigenvalue_tolerance(const HermitianOp& op);
bool is_positive_semidefinite(const HermitianOp& op);

/// U_pi on (C^d)^{(x)t}, t = pi.size(), mapping
/// |v_1> (x) ... (x) |v_t>  to  |v_{pi^-1(1)}> (x) ... (x) |v_{pi^-1(t)}>,
/// so that U_pi U_sigma = U_{pi sigma}.
Matrix permutation_operator(int local_dim, const Permutation& pi);

/// F |a>|b> = |b>|a> on C^dA (x) C^dB; requires dA == dB.
Matrix swap_operator(int dim_a, int dim_b);

/// Hermitian matrix with i.i.d. standard complex Gaussian entries,
/// symmetrized (GUE up to scale).
HermitianOp random_hermitian(const MultiSpace& space, std::mt19937_64& rng);

/// A binary discrimination task: rho0 with prior q, rho1 with prior 1 - q.
class DiscriminationInstance {
 public:
  DiscriminationInstance(HermitianOp rho0, HermitianOp rho1, double q);

  const HermitianOp& rho0() const { return rho0_; }
  const HermitianOp& rho1() const { return rho1_; }
  double q() const { return q_; }
  /// q rho0 - (1 - q) rho1.
  HermitianOp delta() const;

 private:
  HermitianOp rho0_;
  HermitianOp rho1_;
  double q_;
};

/// Checks rho >= 0 and tr rho = 1 within 1e-10.
bool is_density_operator(const HermitianOp& rho);

}  // namespace hilbert
}  // namespace distnorm

#endif  // DISTNORM_HILBERT_HPP
