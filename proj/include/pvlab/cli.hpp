// Copyright 2026 The pvlab Authors
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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "pvlab/classify.hpp"
#include "pvlab/grading.hpp"
#include "pvlab/models.hpp"
#include "pvlab/pvcore.hpp"

namespace pvlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kCertificate = 3 };

/// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Seed from the flag, else PV_LAB_SEED, else 0. Throws InvalidParameter on a malformed variable.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

Json to_json(const ClassificationReport& r);
Json to_json(const Grading& g);
Json to_json(const Component& c);
Json to_json(const FiltrationReport& f);
Json to_json(const Table1Family& t);

}  // namespace pvlab::cli
