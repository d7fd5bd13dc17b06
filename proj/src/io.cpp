// Copyright 2026 The stinespring authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stinespring/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "stinespring/error.hpp"

namespace stinespring::io {

namespace {

std::size_t positive_integer(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

DilationMethod method_from_string(const std::string& s) {
  if (s == "finite") return DilationMethod::finite;
  if (s == "hellwig_kraus") return DilationMethod::hellwig_kraus;
  if (s == "sznagy_catalyst") return DilationMethod::sznagy_catalyst;
  throw ParseError("unknown dilation method '" + s + "'");
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const cplx& z : m.row(r)) row.push_back(json::array({z.real(), z.imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, std::string_view what) {
  const std::string name(what);
  if (!j.is_array() || j.empty()) throw ParseError(name + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  std::vector<cplx> entries;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.empty()) {
      throw ParseError(name + ": row " + std::to_string(r) + " is not a non-empty array");
    }
    if (r == 0) {
      cols = row.size();
      entries.reserve(rows * cols);
    } else if (row.size() != cols) {
      throw ParseError(name + ": row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError(name + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") must be a [re, im] pair of numbers");
      }
      const double re = z[0].get<double>();
      const double im = z[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw ParseError(name + ": entry (" + std::to_string(r) + "," + std::to_string(c) +
                         ") is not finite");
      }
      entries.emplace_back(re, im);
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json channel_to_json(const KrausSet& k) {
  json ops = json::array();
  for (const auto& op : k) ops.push_back(matrix_to_json(op));
  return json{{"dim_in", k.dim_in()}, {"dim_out", k.dim_out()}, {"kraus", std::move(ops)}};
}

KrausSet channel_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("channel spec must be a JSON object");
  const std::size_t dim_in = positive_integer(j, "dim_in");
  const std::size_t dim_out = positive_integer(j, "dim_out");
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty()) {
    throw ParseError("field 'kraus' must be a non-empty array of matrices");
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < j.at("kraus").size(); ++i) {
    ComplexMatrix op =
        matrix_from_json(j.at("kraus")[i], "kraus[" + std::to_string(i) + "]");
    if (op.rows() != dim_out || op.cols() != dim_in) {
      throw ParseError("kraus[" + std::to_string(i) + "] is " + std::to_string(op.rows()) +
                       "x" + std::to_string(op.cols()) + ", expected dim_out x dim_in = " +
                       std::to_string(dim_out) + "x" + std::to_string(dim_in));
    }
    ops.push_back(std::move(op));
  }
  return KrausSet(std::move(ops));
}

json choi_to_json(const ChoiMatrix& c) {
  return json{{"dim_in", c.dim_in}, {"dim_out", c.dim_out}, {"choi", matrix_to_json(c.matrix)}};
}

ChoiMatrix choi_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Choi file must be a JSON object");
  const std::size_t dim_in = positive_integer(j, "dim_in");
  const std::size_t dim_out = positive_integer(j, "dim_out");
  if (!j.contains("choi")) throw ParseError("missing field 'choi'");
  ComplexMatrix m = matrix_from_json(j.at("choi"), "choi");
  if (m.rows() != dim_in * dim_out || m.cols() != dim_in * dim_out) {
    throw ParseError("choi matrix must be (dim_in*dim_out) square");
  }
  return ChoiMatrix{dim_in, dim_out, std::move(m)};
}

json dilation_to_json(const Dilation& d) {
  return json{{"method", to_string(d.method)},
              {"layout", to_string(d.layout)},
              {"sys_dim", d.sys_dim},
              {"env_dim", d.env_dim},
              {"psi_index", d.psi_index},
              {"catalyst_qubit", d.catalyst_qubit},
              {"unitary", matrix_to_json(d.unitary)}};
}

Dilation dilation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("dilation file must be a JSON object");
  Dilation d;
  try {
    d.method = method_from_string(j.at("method").get<std::string>());
    const auto layout = j.at("layout").get<std::string>();
    if (layout != "tensor" && layout != "paper_block") {
      throw ParseError("unknown layout '" + layout + "'");
    }
    d.layout = layout == "tensor" ? Layout::tensor : Layout::paper_block;
    d.catalyst_qubit = j.at("catalyst_qubit").get<bool>();
    d.psi_index = j.at("psi_index").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("dilation file: ") + e.what());
  }
  d.sys_dim = positive_integer(j, "sys_dim");
  d.env_dim = positive_integer(j, "env_dim");
  if (!j.contains("unitary")) throw ParseError("missing field 'unitary'");
  d.unitary = matrix_from_json(j.at("unitary"), "unitary");
  if (d.unitary.rows() != d.sys_dim * d.env_dim || !d.unitary.is_square()) {
    throw ParseError("unitary must be (sys_dim*env_dim) square");
  }
  if (d.psi_index >= d.env_dim) throw ParseError("psi_index out of range");
  return d;
}

json report_to_json(const VerificationReport& r) {
  json details = json::object();
  for (const auto& [key, value] : r.details) details[key] = value;
  // NaN is not representable in JSON; null marks a broken residual.
  json residual = std::isfinite(r.residual) ? json(r.residual) : json(nullptr);
  return json{{"check_name", r.check_name}, {"passed", r.passed},
              {"residual", std::move(residual)}, {"tolerance", r.tolerance},
              {"samples", r.samples}, {"details", std::move(details)}};
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::numerical, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string content_digest(const json& j) { return sha256_hex(j.dump()); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::domain, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::domain, "write to '" + path.string() + "' failed");
}

}  // namespace stinespring::io
