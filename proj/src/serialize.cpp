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

#include "qcx/serialize.hpp"

#include <charconv>
#include <cmath>

#include "qcx/error.hpp"

namespace qcx {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

Json matrix_part(const Matrix& m, bool imag) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(imag ? m(r, c).imag() : m(r, c).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json matrix_json(int d, const Matrix& m, Role role) {
    Json j;
    j["d"] = d;
    j["re"] = matrix_part(m, false);
    j["im"] = matrix_part(m, true);
    j["role"] = std::string(to_string(role));
    return j;
}

Matrix matrix_from_json(const Json& j, int& d) {
    try {
        d = j.at("d").get<int>();
        const Json& re = j.at("re");
        const Json& im = j.at("im");
        if (!re.is_array() || !im.is_array() || re.size() != static_cast<std::size_t>(d) ||
            im.size() != static_cast<std::size_t>(d)) {
            throw InvalidInput("operator JSON: 're' and 'im' must be d x d arrays");
        }
        Matrix m(d, d);
        for (int r = 0; r < d; ++r) {
            if (re[r].size() != static_cast<std::size_t>(d) || im[r].size() != static_cast<std::size_t>(d)) {
                throw InvalidInput("operator JSON: row " + std::to_string(r) + " has the wrong length");
            }
            for (int c = 0; c < d; ++c) m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("operator JSON: ") + e.what());
    }
}

}  // namespace

Json to_json(const Operator& op) { return matrix_json(op.dim().value(), op.matrix(), op.role()); }

Operator operator_from_json(const Json& j) {
    int d = 0;
    Matrix m = matrix_from_json(j, d);
    const Role role = j.contains("role") ? role_from_string(j.at("role").get<std::string>()) : Role::generic;
    return Operator(Dimension(d), std::move(m), role);
}

Json to_json(const ExactFrame& frame) {
    const int d = frame.dim.value();
    Json j;
    j["d"] = d;
    Json desc;
    desc["kind"] = std::string(to_string(frame.descriptor.kind));
    desc["detail"] = frame.descriptor.detail;
    desc["params"] = frame.descriptor.params;
    j["descriptor"] = std::move(desc);
    Json labels = Json::array();
    for (const auto& [a, b] : frame.labels) labels.push_back({a, b});
    j["labels"] = std::move(labels);
    Json f = Json::array();
    for (const auto& m : frame.analysis) f.push_back(matrix_json(d, m, Role::generic));
    Json g = Json::array();
    for (const auto& m : frame.synthesis) g.push_back(matrix_json(d, m, Role::generic));
    j["F"] = std::move(f);
    j["D"] = std::move(g);
    return j;
}

ExactFrame frame_from_json(const Json& j) {
    try {
        const Dimension dim(j.at("d").get<int>());
        ExactFrame frame{dim, {}, {}, {}, {}};
        if (j.contains("descriptor")) {
            const Json& desc = j.at("descriptor");
            frame.descriptor.kind = frame_kind_from_string(desc.value("kind", std::string("kd")));
            frame.descriptor.detail = desc.value("detail", std::string());
            if (desc.contains("params")) frame.descriptor.params = desc.at("params").get<std::vector<double>>();
        }
        for (const Json& m : j.at("F")) {
            int d = 0;
            frame.analysis.push_back(matrix_from_json(m, d));
            if (d != dim.value()) throw DimensionMismatch("frame element dimension differs from frame");
        }
        for (const Json& m : j.at("D")) {
            int d = 0;
            frame.synthesis.push_back(matrix_from_json(m, d));
            if (d != dim.value()) throw DimensionMismatch("frame element dimension differs from frame");
        }
        if (j.contains("labels")) {
            for (const Json& l : j.at("labels")) frame.labels.emplace_back(l.at(0).get<int>(), l.at(1).get<int>());
        } else {
            for (std::size_t k = 0; k < frame.analysis.size(); ++k) {
                frame.labels.emplace_back(static_cast<int>(k) / dim.value(), static_cast<int>(k) % dim.value());
            }
        }
        return frame;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("frame JSON: ") + e.what());
    }
}

Json to_json(const QuasiDistribution& dist) {
    Json j;
    j["labels"] = dist.labels;
    Json re = Json::array();
    Json im = Json::array();
    for (const auto& v : dist.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    j["subject"] = std::string(to_string(dist.subject));
    return j;
}

Json to_json(const FrameValidationReport& report) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json e;
        e["name"] = c.name;
        e["residual"] = std::isfinite(c.residual) ? Json(c.residual) : Json("inf");
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["pass"] = report.pass;
    return j;
}

Json to_json(const PolytopeCertificate& cert) {
    Json j;
    j["coefficients"] = cert.coefficients;
    j["residual"] = cert.residual;
    return j;
}

Json to_json(const ThresholdResult& result) {
    Json j;
    j["kind"] = std::string(to_string(result.kind));
    j["p"] = result.p;
    j["upper_bound"] = result.upper_bound;
    Json cert;
    if (result.frame_certificate) {
        const FrameCertificate& fc = *result.frame_certificate;
        cert["family"] = fc.family;
        cert["witness"] = fc.witness;
        cert["frame"] = to_json(fc.frame);
        cert["representation"] = to_json(fc.representation);
    }
    if (result.polytope_certificate) {
        cert["family"] = "polytope";
        cert["polytope"] = to_json(*result.polytope_certificate);
    }
    j["certificate"] = cert.is_null() ? Json::object() : std::move(cert);
    Json scan = Json::array();
    for (const auto& [p, w] : result.scan) scan.push_back({p, w});
    j["scan"] = std::move(scan);
    j["tol"] = result.tol;
    j["seed"] = result.seed;
    Json related = Json::object();
    for (const auto& [name, v] : result.related) related[name] = v;
    j["related"] = std::move(related);
    j["diagnostics"] = result.diagnostics;
    return j;
}

std::string scan_csv(const ThresholdResult& result) {
    std::string out = "p,witness\n";
    for (const auto& [p, w] : result.scan) out += format_double(p) + "," + format_double(w) + "\n";
    return out;
}

}  // namespace qcx
