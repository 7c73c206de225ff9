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

#include "distnorm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "distnorm/errors.hpp"

namespace distnorm::io {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quote(const std::string& s) { return json(s).dump(); }

void append_matrix(std::ostringstream& os, const Matrix& m, const char* indent) {
  os << "[\n";
  for (Index r = 0; r < m.rows(); ++r) {
    os << indent << "  [";
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << "[" << num(m(r, c).real()) << ", " << num(m(r, c).imag()) << "]";
    }
    os << "]" << (r + 1 < m.rows() ? "," : "") << "\n";
  }
  os << indent << "]";
}

std::string dims_text(const std::vector<int>& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? ", " : "") + std::to_string(dims[i]);
  return s + "]";
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_header(const json& j, const char* format) {
  if (!j.is_object()) throw ParseError("top level is not an object");
  if (!j.contains("format") || j["format"] != format) throw ParseError(std::string("format is not \"") + format + "\"");
  if (!j.contains("version") || j["version"] != 1) throw ParseError("unsupported version");
}

hilbert::MultiSpace read_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array()) throw ParseError("missing \"dims\" array");
  std::vector<int> dims;
  for (const json& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 1 << 20)
      throw ParseError("dims must be positive integers");
    dims.push_back(d.get<int>());
  }
  try {
    return hilbert::MultiSpace(dims);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Matrix read_matrix(const json& j, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n)
    throw ParseError("matrix must have " + std::to_string(n) + " rows");
  Matrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (Index c = 0; c < n; ++c) {
      const json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not a [re, im] pair");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgumentError("write failed for " + path);
}

}  // namespace

std::string format_operator(const hilbert::HermitianOp& op, const Metadata& meta) {
  std::ostringstream os;
  os << "{\n  \"format\": \"distnorm-operator\",\n  \"version\": 1,\n";
  os << "  \"dims\": " << dims_text(op.space().dims()) << ",\n";
  os << "  \"matrix\": ";
  append_matrix(os, op.matrix(), "  ");
  os << ",\n  \"metadata\": {\"name\": " << quote(meta.name) << ", \"construction\": " << quote(meta.construction)
     << "}\n}\n";
  return os.str();
}

OperatorFile parse_operator(std::string_view text) {
  const json j = parse_json(text);
  expect_header(j, "distnorm-operator");
  const hilbert::MultiSpace space = read_dims(j);
  if (!j.contains("matrix")) throw ParseError("missing \"matrix\"");
  Matrix m = read_matrix(j["matrix"], space.total_dim());
  Metadata meta;
  if (j.contains("metadata") && j["metadata"].is_object()) {
    const json& md = j["metadata"];
    if (md.contains("name") && md["name"].is_string()) meta.name = md["name"].get<std::string>();
    if (md.contains("construction") && md["construction"].is_string())
      meta.construction = md["construction"].get<std::string>();
  }
  try {
    return {hilbert::HermitianOp(space, std::move(m)), meta};
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

void write_operator(const std::string& path, const hilbert::HermitianOp& op, const Metadata& meta) {
  spill(path, format_operator(op, meta));
}

OperatorFile read_operator(const std::string& path) { return parse_operator(slurp(path)); }

std::string format_povm(const povm::Povm& m, const std::string& name) {
  std::ostringstream os;
  os << "{\n  \"format\": \"distnorm-povm\",\n  \"version\": 1,\n";
  os << "  \"dims\": " << dims_text(m.space().dims()) << ",\n";
  os << "  \"elements\": [\n";
  for (std::size_t x = 0; x < m.size(); ++x) {
    os << "    ";
    append_matrix(os, m.elements()[x], "    ");
    os << (x + 1 < m.size() ? "," : "") << "\n";
  }
  os << "  ],\n  \"metadata\": {\"name\": " << quote(name.empty() ? m.label() : name) << ", \"design_order\": "
     << (m.certified_design_order() ? std::to_string(*m.certified_design_order()) : std::string("null")) << "}\n}\n";
  return os.str();
}

PovmFile parse_povm(std::string_view text) {
  const json j = parse_json(text);
  expect_header(j, "distnorm-povm");
  const hilbert::MultiSpace space = read_dims(j);
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
    throw ParseError("missing \"elements\" array");
  std::vector<Matrix> elements;
  for (const json& e : j["elements"]) elements.push_back(read_matrix(e, space.total_dim()));
  std::optional<int> order;
  std::string name;
  if (j.contains("metadata") && j["metadata"].is_object()) {
    const json& md = j["metadata"];
    if (md.contains("design_order") && md["design_order"].is_number_integer()) order = md["design_order"].get<int>();
    if (md.contains("name") && md["name"].is_string()) name = md["name"].get<std::string>();
  }
  try {
    return {povm::Povm(space, std::move(elements)), order, name};
  } catch (const InvalidArgumentError& e) {
    throw ParseError(e.what());
  }
}

void write_povm(const std::string& path, const povm::Povm& m, const std::string& name) {
  spill(path, format_povm(m, name));
}

PovmFile read_povm(const std::string& path) { return parse_povm(slurp(path)); }

}  // namespace distnorm::io
