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

#ifndef DISTNORM_PERM4_HPP
#define DISTNORM_PERM4_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "distnorm/permutation.hpp"

namespace distnorm {

/// An element of S_4, the permutations of the four tensor copies in
/// Delta^{(x)4}. Points are 0-based internally, 1-based in cycle strings.
class Perm4 {
 public:
  Perm4() : images_{0, 1, 2, 3} {}
  /// One-line images, 0-based. Throws unless a bijection.
  Perm4(int i0, int i1, int i2, int i3);
  explicit Perm4(const Permutation& p);

  /// Cycle notation, e.g. "(123)", "(12)(34)", "id".
  static Perm4 parse(std::string_view text);
  /// The 24 elements in lexicographic order of their one-line form;
  /// all()[p.rank()] == p.
  static const std::array<Perm4, 24>& all();

  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int rank() const { return rank_; }
  /// "1111", "211", "22", "31" or "4".
  const std::string& cycle_type() const;

  Perm4 operator*(const Perm4& rhs) const;
  Perm4 inverse() const;
  Permutation to_permutation() const;
  std::string to_string() const { return to_permutation().to_string(); }

  bool operator==(const Perm4& o) const { return rank_ == o.rank_; }

 private:
  std::array<int, 4> images_;
  int rank_ = 0;
};

/// One permutation of S_4 per party.
using PermTuple = std::vector<Perm4>;

/// Parses "(123),(12)(34),id" (one entry per party, comma separated at
/// the top level).
PermTuple parse_perm_tuple(std::string_view text);
std::string to_string(const PermTuple& tuple);

/// The index-th tuple of S_4^K in lexicographic order (party 0 most
/// significant, each party ordered by rank), and its inverse.
PermTuple tuple_from_index(std::size_t index, int parties);
std::size_t tuple_index(const PermTuple& tuple);

}  // namespace distnorm

#endif  // DISTNORM_PERM4_HPP
