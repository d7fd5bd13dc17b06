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

#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "stinespring/channel.hpp"
#include "stinespring/dilation.hpp"
#include "stinespring/error.hpp"
#include "stinespring/io.hpp"
#include "stinespring/linalg.hpp"
#include "stinespring/random.hpp"
#include "stinespring/verify.hpp"
#include "stinespring/version.hpp"

namespace stinespring::cli {

namespace {

using io::json;

constexpr std::size_t kDefaultMaxDim = 4096;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

std::size_t tool_max_dim() {
  const char* env = std::getenv("TOOL_MAX_DIM");
  if (env == nullptr || *env == '\0') return kDefaultMaxDim;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) {
    throw ParseError(std::string("TOOL_MAX_DIM must be a positive integer, got '") + env + "'");
  }
  return static_cast<std::size_t>(v);
}

void require_within_cap(std::size_t dim, const std::string& what) {
  const std::size_t cap = tool_max_dim();
  if (dim > cap) {
    throw DomainError(what + " dimension " + std::to_string(dim) +
                      " exceeds TOOL_MAX_DIM = " + std::to_string(cap));
  }
}

void emit_json(const std::string& path, const json& j, Streams s) {
  if (path == "-") {
    s.out << j.dump(2) << '\n';
  } else {
    io::write_json_file(path, j);
  }
}

// Human-readable lines go to stderr whenever stdout carries JSON.
std::ostream& human(const std::string& json_path, Streams s) {
  return json_path == "-" ? s.err : s.out;
}

struct LoadedChannel {
  KrausSet kraus;
  std::string digest;
};

LoadedChannel load_channel(const std::string& path) {
  const json j = io::read_json_file(path);
  KrausSet k = io::channel_from_json(j);
  require_within_cap(k.dim_in() * k.dim_out(), "channel");
  return {std::move(k), io::content_digest(j)};
}

DilationMethod parse_method(const std::string& s) {
  if (s == "finite") return DilationMethod::finite;
  if (s == "hk") return DilationMethod::hellwig_kraus;
  if (s == "sznagy") return DilationMethod::sznagy_catalyst;
  throw ParseError("unknown method '" + s + "'");
}

std::size_t env_dim_for(DilationMethod m, std::size_t ell) {
  switch (m) {
    case DilationMethod::finite: return ell;
    case DilationMethod::hellwig_kraus: return ell + 1;
    case DilationMethod::sznagy_catalyst: return 2 * ell;
  }
  return ell;
}

Dilation build(const KrausSet& k, DilationMethod m, std::size_t j0, double tp_tol) {
  require_within_cap(k.dim_in() * env_dim_for(m, k.size()), "dilation");
  switch (m) {
    case DilationMethod::finite: return dilate_finite(k, tp_tol);
    case DilationMethod::hellwig_kraus: return dilate_hellwig_kraus(k, tp_tol);
    case DilationMethod::sznagy_catalyst: return dilate_sznagy(k, j0, tp_tol);
  }
  throw DomainError("unreachable");
}

json base_report(const std::string& command, const std::string& digest) {
  return json{{"tool_version", kVersion},
              {"command", command},
              {"channel_digest", digest},
              {"checks", json::array()},
              {"dilation_summary", json::array()}};
}

json summary(const Dilation& d, double unitarity_residual) {
  return json{{"method", to_string(d.method)},
              {"layout", to_string(d.layout)},
              {"env_dim", d.env_dim},
              {"psi_index", d.psi_index},
              {"unitarity_residual", unitarity_residual}};
}

void print_check(std::ostream& os, const VerificationReport& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.check_name << "  residual=" << r.residual
     << "  tol=" << r.tolerance << '\n';
}

// ---- dilate ---------------------------------------------------------------

struct DilateOptions {
  std::string input;
  std::string method;
  std::size_t j0 = 0;
  std::string output;
  std::string report = "-";
  std::string layout = "tensor";
  double tp_tol = kDefaultTpTol;
  double tol = kDefaultVerifyTol;
};

int cmd_dilate(const DilateOptions& o, Streams s) {
  const LoadedChannel ch = load_channel(o.input);
  const DilationMethod method = parse_method(o.method);
  Dilation d = build(ch.kraus, method, o.j0, o.tp_tol);
  if (o.layout == "tensor") d = to_tensor_layout(d);

  const VerificationReport unitary = check_unitary(d.unitary, o.tol);
  emit_json(o.output, io::dilation_to_json(d), s);

  json report = base_report("dilate", ch.digest);
  report["checks"].push_back(io::report_to_json(unitary));
  report["dilation_summary"].push_back(summary(d, unitary.residual));
  report["passed"] = unitary.passed;
  emit_json(o.report, report, s);

  std::ostream& h = human(o.output == "-" || o.report == "-" ? "-" : "", s);
  h << "dilation " << to_string(d.method) << ": dimension " << d.unitary.rows()
    << ", env_dim " << d.env_dim << ", psi_index " << d.psi_index << ", layout "
    << to_string(d.layout) << '\n';
  print_check(h, unitary);
  return unitary.passed ? kOk : kCheckFailed;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::vector<std::string> methods{"finite", "hk", "sznagy"};
  int samples = kDefaultSamples;
  std::uint64_t seed = 0;
  double tol = kDefaultVerifyTol;
  double tp_tol = kDefaultTpTol;
  std::size_t j0 = 0;
  std::string report = "-";
};

int cmd_verify(const VerifyOptions& o, Streams s) {
  const LoadedChannel ch = load_channel(o.input);
  const KrausSet& k = ch.kraus;
  std::vector<DilationMethod> methods;
  for (const auto& m : o.methods) methods.push_back(parse_method(m));

  std::ostream& h = human(o.report, s);
  json report = base_report("verify", ch.digest);
  bool all_passed = true;
  auto record = [&](VerificationReport r) {
    print_check(h, r);
    all_passed = all_passed && r.passed;
    report["checks"].push_back(io::report_to_json(r));
  };

  for (const DilationMethod m : methods) {
    const Dilation d = build(k, m, o.j0, o.tp_tol);
    VerificationReport unitary = check_unitary(d.unitary, o.tol);
    unitary.check_name = "unitary/" + std::string(to_string(m));
    report["dilation_summary"].push_back(summary(d, unitary.residual));
    record(std::move(unitary));
    record(verify_dilation(k, d, o.samples, o.seed, o.tol));
    if (m == DilationMethod::hellwig_kraus) record(check_involution(d, o.tol));
    if (m == DilationMethod::sznagy_catalyst) {
      Rng rng(o.seed);
      record(check_catalyst(d, random_density(k.dim_in(), rng), o.tol).first);
    }
  }
  Rng rng(o.seed + 1);
  record(compare_constructions(k, random_density(k.dim_in(), rng), o.tol));

  report["passed"] = all_passed;
  emit_json(o.report, report, s);
  return all_passed ? kOk : kCheckFailed;
}

// ---- random ---------------------------------------------------------------

struct RandomOptions {
  std::size_t n = 2;
  std::size_t ell = 1;
  std::uint64_t seed = 0;
  std::string output = "-";
};

int cmd_random(const RandomOptions& o, Streams s) {
  require_within_cap(o.n * o.ell, "random channel");
  emit_json(o.output, io::channel_to_json(random_channel(o.n, o.ell, o.seed)), s);
  return kOk;
}

// ---- choi -----------------------------------------------------------------

struct ChoiOptions {
  std::string input;
  std::string mode = "to-choi";
  double rank_tol = kDefaultRankTol;
  std::string output = "-";
};

int cmd_choi(const ChoiOptions& o, Streams s) {
  const json j = io::read_json_file(o.input);
  ChoiMatrix c = [&] {
    if (j.is_object() && j.contains("choi")) return io::choi_from_json(j);
    return choi(io::channel_from_json(j));
  }();
  require_within_cap(c.dim_in * c.dim_out, "Choi");

  if (o.mode == "to-choi") {
    emit_json(o.output, io::choi_to_json(c), s);
  } else if (o.mode == "rank") {
    s.out << kraus_rank(c, o.rank_tol) << '\n';
  } else {
    emit_json(o.output, io::channel_to_json(kraus_from_choi(c, o.rank_tol)), s);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams s{out, err};
  CLI::App app{"Construct and verify Stinespring dilations of quantum channels"};
  app.name(args.empty() ? "stinespring" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  DilateOptions dil;
  auto* dilate = app.add_subcommand("dilate", "Build a dilation unitary for a channel");
  dilate->add_option("-i,--input", dil.input, "Channel spec (JSON)")->required();
  dilate->add_option("-m,--method", dil.method, "finite | hk | sznagy")
      ->required()
      ->check(CLI::IsMember({"finite", "hk", "sznagy"}));
  dilate->add_option("--j0", dil.j0, "Kraus index of the catalyst initial state");
  dilate->add_option("-o,--output", dil.output, "Unitary output path ('-' = stdout)")->required();
  dilate->add_option("-r,--report", dil.report, "Report path ('-' = stdout)");
  dilate->add_option("--layout", dil.layout, "tensor | paper_block")
      ->check(CLI::IsMember({"tensor", "paper_block"}));
  dilate->add_option("--tp-tol", dil.tp_tol, "Trace-preservation tolerance");
  dilate->add_option("--tol", dil.tol, "Unitarity tolerance");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Run every check on a channel's dilations");
  verify->add_option("-i,--input", ver.input, "Channel spec (JSON)")->required();
  verify->add_option("--methods", ver.methods, "Subset of finite,hk,sznagy")
      ->delimiter(',')
      ->check(CLI::IsMember({"finite", "hk", "sznagy"}));
  verify->add_option("--samples", ver.samples, "Random states per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", ver.seed, "Seed for random states");
  verify->add_option("--tol", ver.tol, "Residual tolerance");
  verify->add_option("--tp-tol", ver.tp_tol, "Trace-preservation tolerance");
  verify->add_option("--j0", ver.j0, "Kraus index of the catalyst initial state");
  verify->add_option("-r,--report", ver.report, "Report path ('-' = stdout)");

  RandomOptions rnd;
  auto* random = app.add_subcommand("random", "Write a random channel spec");
  random->add_option("-n,--n", rnd.n, "Hilbert space dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("-l,--ell", rnd.ell, "Number of Kraus operators")->required()->check(CLI::PositiveNumber);
  random->add_option("-s,--seed", rnd.seed, "Generator seed");
  random->add_option("-o,--output", rnd.output, "Output path ('-' = stdout)");

  ChoiOptions ch;
  auto* choi_cmd = app.add_subcommand("choi", "Choi matrix conversions");
  choi_cmd->add_option("-i,--input", ch.input, "Channel spec or Choi file (JSON)")->required();
  choi_cmd->add_option("--mode", ch.mode, "to-choi | rank | extract-kraus")
      ->check(CLI::IsMember({"to-choi", "rank", "extract-kraus"}));
  choi_cmd->add_option("--rank-tol", ch.rank_tol, "Relative eigenvalue threshold");
  choi_cmd->add_option("-o,--output", ch.output, "Output path ('-' = stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*dilate) return cmd_dilate(dil, s);
    if (*verify) return cmd_verify(ver, s);
    if (*random) return cmd_random(rnd, s);
    if (*choi_cmd) return cmd_choi(ch, s);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return e.code() == ErrorCode::parse ? kBadInput : kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kBadInput;
}

}  // namespace stinespring::cli
