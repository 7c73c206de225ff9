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

#include "distnorm/hilbert.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "distnorm/errors.hpp"

namespace distnorm::hilbert {

SubsetMask SubsetMask::of(std::initializer_list<int> parties) {
  return of(std::vector<int>(parties));
}

SubsetMask SubsetMask::of(const std::vector<int>& parties) {
  std::uint32_t bits = 0;
  for (int p : parties) {
    if (p < 0 || p >= 32) throw InvalidArgumentError("subset: party index out of range");
    bits |= 1u << p;
  }
  return SubsetMask(bits);
}

int SubsetMask::size() const { return std::popcount(bits_); }

std::vector<int> SubsetMask::members() const {
  std::vector<int> out;
  for (int j = 0; j < 32; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

bool SubsetMask::valid_for(const MultiSpace& space) const {
  return (bits_ & ~full(space.parties()).bits()) == 0;
}

std::vector<SubsetMask> all_subsets(int parties) {
  std::vector<SubsetMask> out;
  for (std::uint32_t b = 0; b < (1u << parties); ++b) out.emplace_back(b);
  return out;
}

MultiSpace::MultiSpace(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.size() > 31) throw InvalidArgumentError("space: too many parties");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t j = dims_.size(); j-- > 0;) {
    if (dims_[j] < 1) throw InvalidArgumentError("space: local dimensions must be >= 1");
    strides_[j] = total_;
    total_ *= dims_[j];
  }
}

MultiSpace MultiSpace::uniform(int local_dim, int parties) {
  return MultiSpace(std::vector<int>(static_cast<std::size_t>(parties), local_dim));
}

MultiSpace MultiSpace::restricted(SubsetMask keep) const {
  std::vector<int> dims;
  for (int j = 0; j < parties(); ++j)
    if (keep.contains(j)) dims.push_back(dim(j));
  return MultiSpace(std::move(dims));
}

Index MultiSpace::dim_of(SubsetMask parties_mask) const {
  Index d = 1;
  for (int j = 0; j < parties(); ++j)
    if (parties_mask.contains(j)) d *= dim(j);
  return d;
}

std::vector<Index> MultiSpace::embedding_offsets(SubsetMask parties_mask) const {
  // Enumerate the restricted multi-indices in mixed-radix order and map
  // each digit onto the stride of its party in the full space.
  std::vector<int> members = parties_mask.members();
  Index count = dim_of(parties_mask);
  std::vector<Index> out(static_cast<std::size_t>(count), 0);
  std::vector<int> digits(members.size(), 0);
  for (Index r = 0; r < count; ++r) {
    Index offset = 0;
    for (std::size_t m = 0; m < members.size(); ++m) offset += digits[m] * stride(members[m]);
    out[static_cast<std::size_t>(r)] = offset;
    for (std::size_t m = members.size(); m-- > 0;) {
      if (++digits[m] < dim(members[m])) break;
      digits[m] = 0;
    }
  }
  return out;
}

HermitianOp::HermitianOp(MultiSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.total_dim() || matrix_.cols() != space_.total_dim()) {
    throw InvalidArgumentError("operator: matrix is " + std::to_string(matrix_.rows()) + "x" +
                               std::to_string(matrix_.cols()) + " but the space has dimension " +
                               std::to_string(space_.total_dim()));
  }
  double asymmetry = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (!(asymmetry <= kHermitianTolerance)) {
    throw InvalidArgumentError("operator: not Hermitian (max |M - M^dag| = " +
                               std::to_string(asymmetry) + ")");
  }
  if (matrix_.size() > 0 && !(matrix_.cwiseAbs().maxCoeff() <= kMaxEntryMagnitude))
    throw NumericalError("operator: entries exceed " + std::to_string(kMaxEntryMagnitude) + " in magnitude");
  Matrix sym = (matrix_ + matrix_.adjoint()) * 0.5;
  matrix_ = std::move(sym);
}

HermitianOp HermitianOp::zero(const MultiSpace& space) {
  return HermitianOp(space, Matrix::Zero(space.total_dim(), space.total_dim()));
}

HermitianOp HermitianOp::identity(const MultiSpace& space) {
  return HermitianOp(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

HermitianOp HermitianOp::diagonal(const MultiSpace& space, const std::vector<double>& entries) {
  if (static_cast<Index>(entries.size()) != space.total_dim())
    throw InvalidArgumentError("operator: diagonal has wrong length");
  Matrix m = Matrix::Zero(space.total_dim(), space.total_dim());
  for (std::size_t i = 0; i < entries.size(); ++i) m(static_cast<Index>(i), static_cast<Index>(i)) = entries[i];
  return HermitianOp(space, std::move(m));
}

HermitianOp HermitianOp::operator+(const HermitianOp& o) const {
  if (!(space_ == o.space_)) throw InvalidArgumentError("operator: space mismatch in sum");
  return HermitianOp(space_, matrix_ + o.matrix_);
}

HermitianOp HermitianOp::operator-(const HermitianOp& o) const {
  if (!(space_ == o.space_)) throw InvalidArgumentError("operator: space mismatch in difference");
  return HermitianOp(space_, matrix_ - o.matrix_);
}

HermitianOp HermitianOp::operator*(double s) const { return HermitianOp(space_, matrix_ * s); }

HermitianOp tensor(const HermitianOp& a, const HermitianOp& b) {
  std::vector<int> dims = a.space().dims();
  dims.insert(dims.end(), b.space().dims().begin(), b.space().dims().end());
  const Index da = a.dim(), db = b.dim();
  Matrix m(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  return HermitianOp(MultiSpace(std::move(dims)), std::move(m));
}

HermitianOp tensor_power(const HermitianOp& a, int copies) {
  if (copies < 1) throw InvalidArgumentError("tensor_power: copies must be >= 1");
  HermitianOp out = a;
  for (int c = 1; c < copies; ++c) out = tensor(out, a);
  return out;
}

Matrix partial_trace(const MultiSpace& space, const Matrix& m, SubsetMask traced) {
  if (!traced.valid_for(space)) throw InvalidArgumentError("partial_trace: subset references a party beyond K");
  const SubsetMask kept = traced.complement(space.parties());
  const std::vector<Index> kept_off = space.embedding_offsets(kept);
  const std::vector<Index> traced_off = space.embedding_offsets(traced);
  const Index n = static_cast<Index>(kept_off.size());
  Matrix out = Matrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      Complex sum = 0.0;
      for (Index t : traced_off) sum += m(kept_off[static_cast<std::size_t>(r)] + t, kept_off[static_cast<std::size_t>(c)] + t);
      out(r, c) = sum;
    }
  }
  return out;
}

HermitianOp partial_trace(const HermitianOp& op, SubsetMask traced) {
  Matrix m = partial_trace(op.space(), op.matrix(), traced);
  return HermitianOp(op.space().restricted(traced.complement(op.space().parties())), std::move(m));
}

Matrix partial_transpose(const MultiSpace& space, const Matrix& m, SubsetMask parties) {
  if (!parties.valid_for(space)) throw InvalidArgumentError("partial_transpose: subset references a party beyond K");
  const Index n = space.total_dim();
  if (m.rows() != n || m.cols() != n) throw InvalidArgumentError("partial_transpose: matrix does not match space");
  // Split every index into the part carried by `parties` and the rest;
  // the transpose exchanges the former between row and column.
  std::vector<Index> inside(static_cast<std::size_t>(n), 0);
  for (Index i = 0; i < n; ++i) {
    Index part = 0;
    for (int j = 0; j < space.parties(); ++j)
      if (parties.contains(j)) part += space.digit(i, j) * space.stride(j);
    inside[static_cast<std::size_t>(i)] = part;
  }
  Matrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    const Index r_in = inside[static_cast<std::size_t>(r)], r_out = r - r_in;
    for (Index c = 0; c < n; ++c) {
      const Index c_in = inside[static_cast<std::size_t>(c)], c_out = c - c_in;
      out(r_out + c_in, c_out + r_in) = m(r, c);
    }
  }
  return out;
}

HermitianOp partial_transpose(const HermitianOp& op, SubsetMask parties) {
  return HermitianOp(op.space(), partial_transpose(op.space(), op.matrix(), parties));
}

Eigen::VectorXd eigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
  return solver.eigenvalues();
}

Eigen::VectorXd eigenvalues(const HermitianOp& op) { return eigenvalues(op.matrix()); }

double schatten_1(const HermitianOp& op) { return eigenvalues(op).cwiseAbs().sum(); }

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double schatten_2(const Matrix& m) { return m.norm(); }
double schatten_2(const HermitianOp& op) { return op.matrix().norm(); }

double operator_norm(const HermitianOp& op) { return eigenvalues(op).cwiseAbs().maxCoeff(); }

double min_eigenvalue(const HermitianOp& op) { return eigenvalues(op).minCoeff(); }

double zero_eigenvalue_tolerance(const HermitianOp& op) { return 1e-10 * schatten_2(op); }

bool is_positive_semidefinite(const HermitianOp& op) {
  return min_eigenvalue(op) >= -zero_eigenvalue_tolerance(op);
}

Matrix permutation_operator(int local_dim, const Permutation& pi) {
  const int t = static_cast<int>(pi.size());
  Index n = 1;
  for (int a = 0; a < t; ++a) n *= local_dim;
  std::vector<Index> stride(static_cast<std::size_t>(t), 1);
  for (int a = t - 2; a >= 0; --a) stride[static_cast<std::size_t>(a)] = stride[static_cast<std::size_t>(a + 1)] * local_dim;
  Matrix u = Matrix::Zero(n, n);
  for (Index in = 0; in < n; ++in) {
    // The factor in slot a moves to slot pi(a).
    Index out = 0;
    for (int a = 0; a < t; ++a) {
      const Index digit = (in / stride[static_cast<std::size_t>(a)]) % local_dim;
      out += digit * stride[static_cast<std::size_t>(pi(a))];
    }
    u(out, in) = 1.0;
  }
  return u;
}

Matrix swap_operator(int dim_a, int dim_b) {
  if (dim_a != dim_b) throw InvalidArgumentError("swap_operator: dimensions differ");
  return permutation_operator(dim_a, Permutation({1, 0}));
}

HermitianOp random_hermitian(const MultiSpace& space, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const Index n = space.total_dim();
  Matrix g(n, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  return HermitianOp(space, (g + g.adjoint()) * 0.5);
}

bool is_density_operator(const HermitianOp& rho) {
  return std::abs(rho.trace() - 1.0) <= 1e-10 && min_eigenvalue(rho) >= -1e-10;
}

DiscriminationInstance::DiscriminationInstance(HermitianOp rho0, HermitianOp rho1, double q)
    : rho0_(std::move(rho0)), rho1_(std::move(rho1)), q_(q) {
  if (!(rho0_.space() == rho1_.space())) throw InvalidArgumentError("instance: states live on different spaces");
  if (!(q_ >= 0.0 && q_ <= 1.0)) throw InvalidArgumentError("instance: prior must lie in [0, 1]");
  if (!is_density_operator(rho0_) || !is_density_operator(rho1_))
    throw InvalidArgumentError("instance: states must be positive with unit trace");
}

HermitianOp DiscriminationInstance::delta() const { return rho0_ * q_ - rho1_ * (1.0 - q_); }

}  // namespace distnorm::hilbert
