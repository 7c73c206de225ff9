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

#ifndef DISTNORM_IO_HPP
#define DISTNORM_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "distnorm/hilbert.hpp"
#include "distnorm/povm.hpp"

namespace distnorm::io {

struct Metadata {
  std::string name;
  std::string construction;
};

struct OperatorFile {
  hilbert::HermitianOp op;
  Metadata metadata;
};

struct PovmFile {
  povm::Povm povm;
  /// Design order recorded by the writer. Informational only: a POVM read
  /// from disk is never treated as certified.
  std::optional<int> design_order;
  std::string name;
};

/// Format "distnorm-operator" version 1:
///   {"format", "version", "dims": [...], "matrix": [[[re, im], ...], ...],
///    "metadata": {"name", "construction"}}
/// Rows are written one per line with 17 significant digits.
std::string format_operator(const hilbert::HermitianOp& op, const Metadata& meta = {});
OperatorFile parse_operator(std::string_view text);
void write_operator(const std::string& path, const hilbert::HermitianOp& op, const Metadata& meta = {});
OperatorFile read_operator(const std::string& path);

/// Format "distnorm-povm" version 1: "dims", "elements" (list of
/// matrices as above), "metadata": {"name", "design_order"}.
std::string format_povm(const povm::Povm& m, const std::string& name = {});
PovmFile parse_povm(std::string_view text);
void write_povm(const std::string& path, const povm::Povm& m, const std::string& name = {});
PovmFile read_povm(const std::string& path);

}  // namespace distnorm::io

#endif  // DISTNORM_IO_HPP
