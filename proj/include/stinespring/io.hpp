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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "stinespring/channel.hpp"
#include "stinespring/complex_matrix.hpp"
#include "stinespring/dilation.hpp"
#include "stinespring/report.hpp"

// JSON file formats. Complex numbers are [re, im] pairs of JSON numbers and
// matrices are arrays of rows. Doubles are printed in shortest round-trip
// form, so writing and re-reading a matrix is bit-exact.
namespace stinespring::io {

using json = nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError naming `what` on any structural or numeric problem.
ComplexMatrix matrix_from_json(const json& j, std::string_view what);

/// {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}
json channel_to_json(const KrausSet& k);
KrausSet channel_from_json(const json& j);

/// {"dim_in": n, "dim_out": m, "choi": matrix}
json choi_to_json(const ChoiMatrix& c);
ChoiMatrix choi_from_json(const json& j);

/// {"method", "layout", "sys_dim", "env_dim", "psi_index", "catalyst_qubit",
///  "unitary"}
json dilation_to_json(const Dilation& d);
Dilation dilation_from_json(const json& j);

json report_to_json(const VerificationReport& r);

/// Lower-case hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);
/// Digest of the canonical (compact, key-sorted) serialisation.
std::string content_digest(const json& j);

/// Throws ParseError if the file cannot be read or is not JSON.
json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline. Throws Error on I/O failure.
void write_json_file(const std::filesystem::path& path, const json& j);

}  // namespace stinespring::io
