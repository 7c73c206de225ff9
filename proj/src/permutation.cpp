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

#include "distnorm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "distnorm/errors.hpp"

namespace distnorm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || static_cast<std::size_t>(image) >= images_.size() ||
        seen[static_cast<std::size_t>(image)]) {
      throw InvalidArgumentError("permutation: one-line images are not a bijection");
    }
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);

  auto fail = [&](const std::string& why) -> Permutation {
    throw ParseError("permutation: cannot parse '" + std::string(text) + "': " + why);
  };

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "id" || text.substr(pos).empty()) return Permutation(std::move(images));

  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] != '(') return fail("expected '('");
    ++pos;
    std::vector<int> cycle;
    bool commas = text.substr(pos, text.find(')', pos) - pos).find(',') != std::string_view::npos;
    while (true) {
      skip_space();
      if (pos >= text.size()) return fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return fail("unexpected character");
      int point = 0;
      if (commas) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          point = point * 10 + (text[pos] - '0');
          ++pos;
        }
      } else {
        point = text[pos] - '0';
        ++pos;
      }
      if (point < 1 || static_cast<std::size_t>(point) > n) return fail("point out of range");
      if (used[static_cast<std::size_t>(point - 1)]) return fail("point repeated");
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw InvalidArgumentError("permutation: size mismatch in product");
  std::vector<int> images(size());
  for (std::size_t i = 0; i < size(); ++i) {
    images[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(size());
  for (std::size_t i = 0; i < size(); ++i) images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int i = static_cast<int>(start); !seen[static_cast<std::size_t>(i)]; i = (*this)(i)) {
      seen[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Permutation::is_involution() const { return (*this * *this).is_identity(); }

std::string Permutation::to_string() const {
  std::string out;
  const bool commas = size() > 9;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (commas && i > 0) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

}  // namespace distnorm
