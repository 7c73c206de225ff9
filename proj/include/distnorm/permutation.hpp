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

#ifndef DISTNORM_PERMUTATION_HPP
#define DISTNORM_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace distnorm {

/// A bijection of {0, ..., n-1} stored in one-line notation.
///
/// Externally, points are labelled 1..n as in cycle notation: the string
/// "(13)(24)" is the permutation mapping 1->3, 3->1, 2->4, 4->2. When
/// n > 9 cycles must separate their points with commas, e.g. "(1,10)".
///
/// Composition follows function composition: (p * q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  /// Parses cycle notation; "id" (or "()") is the identity.
  static Permutation parse(std::string_view text, std::size_t n);
  /// All n! permutations in lexicographic order of their one-line form.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  /// Disjoint cycles including fixed points, each starting at its
  /// smallest element, ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  /// Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;
  bool is_identity() const;
  bool is_involution() const;

  /// Cycle notation without fixed points, or "id".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace distnorm

#endif  // DISTNORM_PERMUTATION_HPP
