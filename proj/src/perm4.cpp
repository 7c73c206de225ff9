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

#include "distnorm/perm4.hpp"

#include "distnorm/errors.hpp"

namespace distnorm {

namespace {

int lex_rank(const std::array<int, 4>& p) {
  int rank = 0;
  for (int i = 0; i < 4; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 4; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
    static constexpr int kFactorial[] = {6, 2, 1, 1};
    rank += smaller * kFactorial[i];
  }
  return rank;
}

}  // namespace

Perm4::Perm4(int i0, int i1, int i2, int i3) : images_{i0, i1, i2, i3} {
  Permutation check(std::vector<int>(images_.begin(), images_.end()));
  rank_ = lex_rank(images_);
}

Perm4::Perm4(const Permutation& p) {
  if (p.size() != 4) throw InvalidArgumentError("Perm4: permutation must act on four points");
  for (int i = 0; i < 4; ++i) images_[static_cast<std::size_t>(i)] = p(i);
  rank_ = lex_rank(images_);
}

Perm4 Perm4::parse(std::string_view text) { return Perm4(Permutation::parse(text, 4)); }

const std::array<Perm4, 24>& Perm4::all() {
  static const std::array<Perm4, 24> table = [] {
    std::array<Perm4, 24> out;
    std::vector<Permutation> perms = Permutation::all(4);
    for (std::size_t i = 0; i < 24; ++i) out[i] = Perm4(perms[i]);
    return out;
  }();
  return table;
}

const std::string& Perm4::cycle_type() const {
  static const std::array<std::string, 24> types = [] {
    std::array<std::string, 24> out;
    std::vector<Permutation> perms = Permutation::all(4);
    for (std::size_t i = 0; i < 24; ++i) {
      std::string code;
      for (int len : perms[i].cycle_type()) code += std::to_string(len);
      out[i] = code;
    }
    return out;
  }();
  return types[static_cast<std::size_t>(rank_)];
}

Perm4 Perm4::operator*(const Perm4& rhs) const {
  return Perm4((*this)(rhs(0)), (*this)(rhs(1)), (*this)(rhs(2)), (*this)(rhs(3)));
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Perm4(inv[0], inv[1], inv[2], inv[3]);
}

Permutation Perm4::to_permutation() const { return Permutation(std::vector<int>(images_.begin(), images_.end())); }

PermTuple parse_perm_tuple(std::string_view text) {
  PermTuple out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(Perm4::parse(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::string to_string(const PermTuple& tuple) {
  std::string out;
  for (std::size_t j = 0; j < tuple.size(); ++j) out += (j ? "," : "") + tuple[j].to_string();
  return out;
}

PermTuple tuple_from_index(std::size_t index, int parties) {
  PermTuple out(static_cast<std::size_t>(parties));
  for (int j = parties - 1; j >= 0; --j) {
    out[static_cast<std::size_t>(j)] = Perm4::all()[index % 24];
    index /= 24;
  }
  return out;
}

std::size_t tuple_index(const PermTuple& tuple) {
  std::size_t index = 0;
  for (const Perm4& p : tuple) index = index * 24 + static_cast<std::size_t>(p.rank());
  return index;
}

}  // namespace distnorm
