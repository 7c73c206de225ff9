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

#include "distnorm/splitmap.hpp"

#include <cmath>
#include <cstdint>

#include "distnorm/errors.hpp"

namespace distnorm::splitmap {

namespace {

constexpr SplitRow kTable[] = {
    {"1111", "id", "id", "id"},
    {"211", "(12)", "(12)(34)", "id"},
    {"211", "(13)", "(14)", "(23)"},
    {"211", "(14)", "(14)", "(14)"},
    {"211", "(23)", "(23)", "(23)"},
    {"211", "(24)", "(23)", "(14)"},
    {"211", "(34)", "id", "(12)(34)"},
    {"22", "(12)(34)", "(12)(34)", "(12)(34)"},
    {"22", "(13)(24)", "(14)(23)", "(14)(23)"},
    {"22", "(14)(23)", "(14)(23)", "(14)(23)"},
    {"31", "(123)", "(1234)", "(23)"},
    {"31", "(132)", "(1432)", "(23)"},
    {"31", "(124)", "(1234)", "(14)"},
    {"31", "(142)", "(1432)", "(14)"},
    {"31", "(134)", "(14)", "(1234)"},
    {"31", "(143)", "(14)", "(1432)"},
    {"31", "(234)", "(23)", "(1234)"},
    {"31", "(243)", "(23)", "(1432)"},
    {"4", "(1234)", "(1234)", "(1234)"},
    {"4", "(1243)", "(1234)", "(1432)"},
    {"4", "(1324)", "(14)(23)", "(14)(23)"},
    {"4", "(1342)", "(1432)", "(1234)"},
    {"4", "(1432)", "(1432)", "(1432)"},
    {"4", "(1423)", "(14)(23)", "(14)(23)"},
};

const std::array<SplitPair, 24>& lookup() {
  static const std::array<SplitPair, 24> table = [] {
    std::array<SplitPair, 24> out{};
    std::array<bool, 24> filled{};
    for (const SplitRow& row : kTable) {
      const Perm4 sigma = Perm4::parse(row.sigma);
      out[static_cast<std::size_t>(sigma.rank())] = {Perm4::parse(row.left), Perm4::parse(row.right)};
      filled[static_cast<std::size_t>(sigma.rank())] = true;
    }
    for (bool f : filled)
      if (!f) throw std::logic_error("split table does not cover S_4");
    return out;
  }();
  return table;
}

}  // namespace

std::span<const SplitRow> split_table() { return kTable; }

const std::array<Perm4, 7>& set_a() {
  static const std::array<Perm4, 7> a = {Perm4::parse("id"),     Perm4::parse("(14)"),     Perm4::parse("(23)"),
                                         Perm4::parse("(1234)"), Perm4::parse("(1432)"),   Perm4::parse("(12)(34)"),
                                         Perm4::parse("(14)(23)")};
  return a;
}

const std::array<Perm4, 3>& set_a0() {
  static const std::array<Perm4, 3> a0 = {Perm4::parse("id"), Perm4::parse("(12)(34)"), Perm4::parse("(14)(23)")};
  return a0;
}

bool in_a(const Perm4& p) {
  for (const Perm4& q : set_a())
    if (p == q) return true;
  return false;
}

bool in_a0(const Perm4& p) {
  for (const Perm4& q : set_a0())
    if (p == q) return true;
  return false;
}

SplitPair split(const Perm4& sigma) { return lookup()[static_cast<std::size_t>(sigma.rank())]; }

SplitPair derive_split(const Perm4& sigma) {
  const Perm4 inv = sigma.inverse();
  auto in_x = [](int a) { return a < 2; };
  // Mirror slots: copy 1 <-> slot 4, copy 2 <-> slot 3 (0-based 0<->3, 1<->2).
  auto mirror = [](int a) { return 3 - a; };

  std::array<int, 4> left{}, right{};
  for (int a = 0; a < 2; ++a) {
    // Internal wire, or a dangling column index closed against its mirror.
    left[static_cast<std::size_t>(a)] = in_x(sigma(a)) ? sigma(a) : mirror(a);
    // Mirror of a row index: internal wires reverse, dangling rows close.
    const int pre = inv(a);
    left[static_cast<std::size_t>(mirror(a))] = in_x(pre) ? mirror(pre) : a;
  }
  for (int b = 2; b < 4; ++b) {
    right[static_cast<std::size_t>(b)] = !in_x(sigma(b)) ? sigma(b) : mirror(b);
    const int pre = inv(b);
    right[static_cast<std::size_t>(mirror(b))] = !in_x(pre) ? mirror(pre) : b;
  }
  return {Perm4(left[0], left[1], left[2], left[3]), Perm4(right[0], right[1], right[2], right[3])};
}

std::vector<std::string> table_discrepancies() {
  std::vector<std::string> out;
  for (const Perm4& sigma : Perm4::all()) {
    const SplitPair table = split(sigma);
    const SplitPair derived = derive_split(sigma);
    if (!(table == derived)) {
      out.push_back(sigma.to_string() + ": table (" + table.left.to_string() + ", " + table.right.to_string() +
                    ") vs wiring (" + derived.left.to_string() + ", " + derived.right.to_string() + ")");
    }
  }
  return out;
}

Complex contract4(const Perm4& sigma, const Matrix& m1, const Matrix& m2, const Matrix& m3, const Matrix& m4) {
  const Index d = m1.rows();
  for (const Matrix* m : {&m1, &m2, &m3, &m4})
    if (m->rows() != d || m->cols() != d) throw InvalidArgumentError("contract4: matrices must share one dimension");
  const std::array<const Matrix*, 4> ms = {&m1, &m2, &m3, &m4};
  std::array<Index, 4> i{};
  Complex sum = 0.0;
  for (i[0] = 0; i[0] < d; ++i[0])
    for (i[1] = 0; i[1] < d; ++i[1])
      for (i[2] = 0; i[2] < d; ++i[2])
        for (i[3] = 0; i[3] < d; ++i[3]) {
          Complex term = 1.0;
          for (int a = 0; a < 4; ++a)
            term *= (*ms[static_cast<std::size_t>(a)])(i[static_cast<std::size_t>(a)],
                                                         i[static_cast<std::size_t>(sigma(a))]);
          sum += term;
        }
  return sum;
}

SplitCsCheck verify_split_cs(const Perm4& sigma, const Matrix& m1, const Matrix& m2, const Matrix& m3,
                             const Matrix& m4) {
  const SplitPair s = split(sigma);
  SplitCsCheck out;
  out.lhs = std::abs(contract4(sigma, m1, m2, m3, m4));
  out.left_trace = contract4(s.left, m1, m2, m2, m1);
  out.right_trace = contract4(s.right, m4, m3, m3, m4);
  const double scale = m1.squaredNorm() * m2.squaredNorm() + m3.squaredNorm() * m4.squaredNorm();
  const double tol = 1e-10 * std::max(scale, 1e-300);
  out.traces_nonnegative = std::abs(out.left_trace.imag()) <= tol && out.left_trace.real() >= -tol &&
                           std::abs(out.right_trace.imag()) <= tol && out.right_trace.real() >= -tol;
  out.rhs = std::sqrt(std::max(0.0, out.left_trace.real()) * std::max(0.0, out.right_trace.real()));
  out.pass = out.traces_nonnegative && out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-300;
  return out;
}

PermTuple conj_diag(const PermTuple& pi, const Perm4& tau) {
  const Perm4 inv = tau.inverse();
  PermTuple out;
  out.reserve(pi.size());
  for (const Perm4& p : pi) out.push_back(tau * p * inv);
  return out;
}

std::pair<PermTuple, PermTuple> split(const PermTuple& pi) {
  PermTuple left, right;
  for (const Perm4& p : pi) {
    const SplitPair s = split(p);
    left.push_back(s.left);
    right.push_back(s.right);
  }
  return {left, right};
}

ClosureResult a0_closure_check(int parties) {
  if (parties < 1 || parties > 4) throw InvalidArgumentError("a0_closure_check: parties must be in 1..4");
  ClosureResult result;
  result.closed = true;
  for (const Perm4& sigma : set_a0()) {
    for (const Perm4& tau : Perm4::all()) {
      const SplitPair s = split(tau * sigma * tau.inverse());
      if (!in_a0(s.left) || !in_a0(s.right)) {
        result.closed = false;
        result.failures.push_back("closure: sigma=" + sigma.to_string() + " tau=" + tau.to_string());
      }
    }
  }

  std::size_t count = 1;
  for (int j = 0; j < parties; ++j) count *= 24;
  std::vector<std::uint8_t> good(count, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    bool all_a0 = true;
    for (const Perm4& p : tuple_from_index(idx, parties)) all_a0 = all_a0 && in_a0(p);
    good[idx] = all_a0;
  }
  // Least fixed point of "reducible", one synchronous round at a time.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint8_t> next = good;
    for (std::size_t idx = 0; idx < count; ++idx) {
      if (good[idx]) continue;
      const PermTuple pi = tuple_from_index(idx, parties);
      for (const Perm4& tau : Perm4::all()) {
        const auto [left, right] = split(conj_diag(pi, tau));
        if (good[tuple_index(left)] && good[tuple_index(right)]) {
          next[idx] = 1;
          changed = true;
          break;
        }
      }
    }
    if (changed) ++result.rounds;
    good = std::move(next);
  }
  result.reachable = true;
  for (std::size_t idx = 0; idx < count; ++idx) {
    if (!good[idx]) {
      result.reachable = false;
      if (result.failures.size() < 16) result.failures.push_back("unreachable: " + to_string(tuple_from_index(idx, parties)));
    }
  }
  return result;
}

CountingResult counting_lemma(int max_parties) {
  CountingResult out;
  const Perm4 id = Perm4::parse("id");
  const Perm4 t14 = Perm4::parse("(14)");
  std::array<bool, 24> light{};
  for (const Perm4& sigma : Perm4::all()) {
    const Perm4 left = split(sigma).left;
    if (left == id) ++out.count_id;
    if (left == t14) ++out.count_14;
    light[static_cast<std::size_t>(sigma.rank())] = left == id || left == t14;
  }

  out.binomial_ok = true;
  for (int k = 1; k <= max_parties; ++k) {
    std::uint64_t total = 0, expected = 1;
    for (int j = 0; j < k; ++j) expected *= 24;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      const int size = std::popcount(mask);
      std::uint64_t term = 1;
      for (int j = 0; j < size; ++j) term *= 6;
      for (int j = size; j < k; ++j) term *= 18;
      total += term;
    }
    out.binomial_ok = out.binomial_ok && total == expected;
  }

  out.enumeration_ok = true;
  for (int k = 1; k <= std::min(max_parties, 3); ++k) {
    std::size_t count = 1;
    for (int j = 0; j < k; ++j) count *= 24;
    std::vector<std::uint64_t> per_subset(std::size_t{1} << k, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      const PermTuple pi = tuple_from_index(idx, k);
      std::uint32_t mask = 0;
      for (int j = 0; j < k; ++j)
        if (light[static_cast<std::size_t>(pi[static_cast<std::size_t>(j)].rank())]) mask |= 1u << j;
      ++per_subset[mask];
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::uint64_t expected = 1;
      for (int j = 0; j < k; ++j) expected *= ((mask >> j) & 1u) ? 6 : 18;
      out.enumeration_ok = out.enumeration_ok && per_subset[mask] == expected;
    }
  }
  out.pass = out.count_id == 2 && out.count_14 == 4 && out.binomial_ok && out.enumeration_ok;
  return out;
}

}  // namespace distnorm::splitmap
