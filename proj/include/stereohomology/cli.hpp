#pragma once

#include "stereohomology/scalar.hpp"
#include "stereohomology/serialize.hpp"

#include <iosfwd>
#include <optional>
#include <string_view>

namespace stereo::cli {

using nlohmann::json;

enum ExitCode { kOk = 0, kSchema = 2, kDomain = 3 };

struct Response {
  int exit_code = kOk;
  json output;
};

/// One of construct, classify, compose, apply, rotate, desargues-verify,
/// desargues-solve. Backend precedence: `backend` argument, then the
/// document's "backend" field, then rational. rotate always runs on floats.
Response run_request(std::string_view subcommand, const json& doc, std::optional<Backend> backend = std::nullopt);

/// stereo <subcommand> [--in FILE] [--out FILE] [--backend rational|float] [--pretty]
int run_cli(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stereo::cli
