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

#ifndef QCX_SERIALIZE_HPP
#define QCX_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "qcx/frames.hpp"
#include "qcx/representations.hpp"
#include "qcx/thresholds.hpp"

namespace qcx {

using Json = nlohmann::ordered_json;

/// {"d", "re", "im", "role"}, row-major.
Json to_json(const Operator& op);
Operator operator_from_json(const Json& j);

/// {"d", "descriptor", "labels", "F", "D"}. Frame elements use role "generic".
Json to_json(const ExactFrame& frame);
ExactFrame frame_from_json(const Json& j);

/// {"labels", "re", "im", "subject"}
Json to_json(const QuasiDistribution& dist);

Json to_json(const FrameValidationReport& report);
Json to_json(const PolytopeCertificate& cert);

/// {"kind", "p", "upper_bound", "certificate", "scan", "tol", "seed", ...}
Json to_json(const ThresholdResult& result);

/// "p,witness" with one LF-terminated row per scan point.
std::string scan_csv(const ThresholdResult& result);

/// Locale-independent shortest round-trip formatting of a double.
std::string format_double(double v);

}  // namespace qcx

#endif
