// Copyright 2026 The qcx Authors
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

#ifndef QCX_CLI_HPP
#define QCX_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcx/qudit.hpp"
#include "qcx/serialize.hpp"

namespace qcx::cli {

enum ExitCode : int { kSuccess = 0, kInvalidInput = 1, kNoThreshold = 2, kValidationFailure = 3 };

/// Effective settings of one run. Loaded from defaults, then the JSON
/// config file, then explicit flags; echoed into every artifact.
struct RunConfig {
    int schema = 1;
    int d = 3;
    std::string state = "strange";
    std::vector<Complex> vec;
    std::string method = "wigner";
    std::string scope = "state";
    double tol = 1e-6;
    double class_tol = 1e-12;
    std::uint64_t seed = 1;
    int restarts = 32;
    int max_iterations = 400;
    int threads = 1;
    bool spectral_start = true;
    std::string out;
    std::string format = "json";
    double start = 0.0;
    double stop = 1.0;
    double step = 0.01;
    std::vector<std::string> families;
    std::string builtin;
    std::string frame;
};

Json to_json(const RunConfig& config);
/// Applies the fields present in `j` on top of `config`. Unknown fields and
/// type errors raise InvalidInput naming the field.
void apply_json(RunConfig& config, const Json& j);

/// Parses "1,0,0" or "0.5+0.5i,-1j,2" into complex entries.
std::vector<Complex> parse_vector(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcx::cli

#endif
