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

#include "qcx/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcx/error.hpp"
#include "qcx/thresholds.hpp"

#ifndef QCX_VERSION
#define QCX_VERSION "0.0.0"
#endif

namespace qcx::cli {

namespace {

constexpr const char* kTool = "qcx";

double parse_real(std::string_view text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) throw InvalidInput("cannot parse number '" + std::string(text) + "'");
    return v;
}

Complex parse_complex(std::string token) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) throw InvalidInput("empty vector entry");
    const char last = token.back();
    if (last != 'i' && last != 'j') return {parse_real(token), 0.0};
    token.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = token.size(); k-- > 1;) {
        if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_real(s);
    };
    if (split == std::string::npos) return {0.0, imag_part(token)};
    return {parse_real(token.substr(0, split)), imag_part(token.substr(split))};
}

Json complex_list(const std::vector<Complex>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back({c.real(), c.imag()});
    return out;
}

struct Output {
    std::ostream& stdout_;
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            stdout_ << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw InvalidInput("out: cannot open '" + path + "' for writing");
        file << text;
    }
};

std::string csv_preamble(const RunConfig& config) {
    return std::string("# ") + kTool + " " + QCX_VERSION + "\n# config " + to_json(config).dump() + "\n";
}

Json envelope(const RunConfig& config) {
    Json j;
    j["tool"] = kTool;
    j["version"] = QCX_VERSION;
    j["config"] = to_json(config);
    return j;
}

void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) throw InvalidInput(field + ": " + why);
}

void validate_common(const RunConfig& c) {
    require(c.schema == 1, "schema", "only schema 1 is supported");
    require(c.d == 3 || c.d == 5 || c.d == 7, "d", "dimension must be 3, 5 or 7");
    require(c.state == "strange" || c.state == "norrell" || c.state == "custom" || c.state == "maximally-mixed",
            "state", "must be strange, norrell, custom or maximally-mixed");
    require((c.state == "custom") == !c.vec.empty(), "vec", "a vector is required exactly when state is custom");
    require(c.scope == "state" || c.scope == "subtheory", "scope", "must be state or subtheory");
    require(c.tol > 0.0 && c.tol < 1.0, "tol", "must lie in (0, 1)");
    require(c.class_tol > 0.0, "class_tol", "must be positive");
    require(c.restarts > 0, "restarts", "must be positive");
    require(c.max_iterations > 0, "max_iterations", "must be positive");
    require(c.threads > 0, "threads", "must be positive");
    require(c.format == "json" || c.format == "csv", "format", "must be json or csv");
}

Operator build_state(const RunConfig& c) {
    const Dimension dim(c.d);
    if (c.state == "maximally-mixed") return maximally_mixed(dim);
    const MagicKind kind = magic_kind_from_string(c.state);
    if (kind != MagicKind::custom) {
        if (c.d != 3) throw InvalidInput("state: '" + c.state + "' is only defined for d = 3");
        return magic_state(kind, dim);
    }
    if (static_cast<int>(c.vec.size()) != c.d) throw InvalidInput("vec: length must equal d");
    Vector v(c.d);
    for (int k = 0; k < c.d; ++k) v(k) = c.vec[k];
    if (v.norm() == 0.0) throw InvalidInput("vec: must be nonzero");
    return magic_state(kind, dim, v);
}

Tolerances tolerances(const RunConfig& c) {
    Tolerances tol;
    tol.classification = c.class_tol;
    return tol;
}

KdThresholdOptions kd_options(const RunConfig& c) {
    KdThresholdOptions o;
    o.scope = scope_from_string(c.scope);
    o.bisect_tol = c.tol;
    o.optimizer.restarts = c.restarts;
    o.optimizer.max_iterations = c.max_iterations;
    o.optimizer.seed = c.seed;
    o.optimizer.threads = c.threads;
    o.optimizer.spectral_start = c.spectral_start;
    o.tol = tolerances(c);
    return o;
}

int cmd_threshold(const RunConfig& c, const Output& out) {
    validate_common(c);
    const ThresholdKind kind = threshold_kind_from_string(c.method);
    const Operator rho = build_state(c);
    const Tolerances tol = tolerances(c);

    ThresholdResult result;
    try {
        switch (kind) {
            case ThresholdKind::wigner: result = wigner_threshold(rho, tol); break;
            case ThresholdKind::polytope: result = polytope_threshold(rho, c.tol, tol); break;
            case ThresholdKind::kd: result = kd_threshold(rho, kd_options(c)); break;
            case ThresholdKind::crit: {
                std::vector<FrameFamily> families;
                const auto names = c.families.empty() ? std::vector<std::string>{"gross", "kd"} : c.families;
                for (const auto& f : names) {
                    if (f == "gross") {
                        families.push_back(FrameFamily::gross);
                    } else if (f == "kd") {
                        families.push_back(FrameFamily::kd);
                    } else {
                        throw InvalidInput("families: crit accepts gross and kd, got '" + f + "'");
                    }
                }
                result = crit_threshold(rho, families, kd_options(c));
                break;
            }
        }
    } catch (const NoThreshold& e) {
        if (c.format == "csv") {
            out.write(csv_preamble(c) + "# no threshold: " + e.what() + "\np,witness\n");
        } else {
            Json j = envelope(c);
            j["kind"] = c.method;
            j["p"] = nullptr;
            j["error"] = std::string("NO_THRESHOLD: ") + e.what();
            out.write(j.dump(2) + "\n");
        }
        return kNoThreshold;
    }

    if (c.format == "csv") {
        out.write(csv_preamble(c) + scan_csv(result));
    } else {
        Json j = envelope(c);
        const Json body = to_json(result);
        for (const auto& [key, value] : body.items()) j[key] = value;
        out.write(j.dump(2) + "\n");
    }
    return kSuccess;
}

struct ScanRow {
    double p;
    std::string frame;
    double witness;
    double min_real;
    double max_abs_imag;
};

int cmd_scan(const RunConfig& c, const Output& out) {
    validate_common(c);
    require(c.start >= 0.0 && c.stop <= 1.0 && c.start < c.stop, "grid", "need 0 <= start < stop <= 1");
    require(c.step > 0.0, "step", "must be positive");
    const Operator rho = build_state(c);
    const Dimension dim(c.d);
    const OmegaScope scope = scope_from_string(c.scope);
    const auto names = c.families.empty() ? std::vector<std::string>{"gross", "kd-mub"} : c.families;
    for (const auto& f : names) {
        require(f == "gross" || f == "kd-mub" || f == "kd-opt", "families",
                "scan accepts gross, kd-mub and kd-opt, got '" + f + "'");
    }

    const ExactFrame gross = gross_wigner_frame(dim);
    const ExactFrame mub = canonical_mub_frame(dim);
    const KdThresholdOptions opt = kd_options(c);
    const auto points = static_cast<long>(std::floor((c.stop - c.start) / c.step + 1e-9)) + 1;

    std::vector<ScanRow> rows;
    for (long k = 0; k < points; ++k) {
        const double p = std::min(c.stop, c.start + static_cast<double>(k) * c.step);
        const OperationalSet set = build_operational_set(rho, p);
        const Operator noisy = set.states[*set.magic];
        for (const auto& name : names) {
            ExactFrame frame = name == "gross" ? gross : mub;
            if (name == "kd-opt") {
                const SearchResult search = minimize_omega(p, {rho, scope, opt.tol}, opt.optimizer);
                frame = frame_from_params(search.best.params, dim, opt.tol);
            }
            const QuasiDistribution rep = represent_state(frame, noisy);
            double min_real = rep.values.front().real();
            double max_imag = 0.0;
            for (const auto& v : rep.values) {
                min_real = std::min(min_real, v.real());
                max_imag = std::max(max_imag, std::abs(v.imag()));
            }
            rows.push_back({p, name, omega(frame, set, scope), min_real, max_imag});
        }
    }

    if (c.format == "csv") {
        std::string text = csv_preamble(c) + "p,frame,witness,min_real,max_abs_imag\n";
        for (const auto& r : rows) {
            text += format_double(r.p) + "," + r.frame + "," + format_double(r.witness) + "," +
                    format_double(r.min_real) + "," + format_double(r.max_abs_imag) + "\n";
        }
        out.write(text);
    } else {
        Json j = envelope(c);
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json e;
            e["p"] = r.p;
            e["frame"] = r.frame;
            e["witness"] = r.witness;
            e["min_real"] = r.min_real;
            e["max_abs_imag"] = r.max_abs_imag;
            arr.push_back(std::move(e));
        }
        j["rows"] = std::move(arr);
        out.write(j.dump(2) + "\n");
    }
    return kSuccess;
}

ExactFrame builtin_frame(const RunConfig& c) {
    require(c.d == 3 || c.d == 5 || c.d == 7, "d", "dimension must be 3, 5 or 7");
    const Dimension dim(c.d);
    if (c.builtin == "gross") return gross_wigner_frame(dim);
    if (c.builtin == "kd-mub") return canonical_mub_frame(dim);
    throw InvalidInput("builtin: must be gross or kd-mub, got '" + c.builtin + "'");
}

Json read_json_file(const std::string& path, const std::string& field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput(field + ": cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(field + ": '" + path + "' is not valid JSON (" + e.what() + ")");
    }
}

int cmd_validate(const RunConfig& c, const Output& out) {
    require(c.builtin.empty() != c.frame.empty(), "frame", "give exactly one of --builtin or --frame");
    const ExactFrame frame = c.builtin.empty() ? frame_from_json(read_json_file(c.frame, "frame")) : builtin_frame(c);
    const FrameValidationReport report = validate_frame(frame);
    Json j = envelope(c);
    j["report"] = to_json(report);
    out.write(j.dump(2) + "\n");
    return report.pass ? kSuccess : kValidationFailure;
}

int cmd_frame(const RunConfig& c, const Output& out) {
    require(!c.builtin.empty(), "builtin", "required");
    out.write(to_json(builtin_frame(c)).dump(2) + "\n");
    return kSuccess;
}

}  // namespace

Json to_json(const RunConfig& c) {
    Json j;
    j["schema"] = c.schema;
    j["d"] = c.d;
    j["state"] = c.state;
    j["vec"] = complex_list(c.vec);
    j["method"] = c.method;
    j["scope"] = c.scope;
    j["tol"] = c.tol;
    j["class_tol"] = c.class_tol;
    j["seed"] = c.seed;
    j["restarts"] = c.restarts;
    j["max_iterations"] = c.max_iterations;
    j["threads"] = c.threads;
    j["spectral_start"] = c.spectral_start;
    j["out"] = c.out;
    j["format"] = c.format;
    j["start"] = c.start;
    j["stop"] = c.stop;
    j["step"] = c.step;
    j["families"] = c.families;
    j["builtin"] = c.builtin;
    j["frame"] = c.frame;
    return j;
}

void apply_json(RunConfig& c, const Json& j) {
    if (!j.is_object()) throw InvalidInput("config: top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "schema") c.schema = value.get<int>();
            else if (key == "d") c.d = value.get<int>();
            else if (key == "state") c.state = value.get<std::string>();
            else if (key == "vec") {
                c.vec.clear();
                for (const auto& e : value) {
                    if (e.is_array()) c.vec.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
                    else if (e.is_string()) c.vec.push_back(parse_complex(e.get<std::string>()));
                    else c.vec.emplace_back(e.get<double>(), 0.0);
                }
            }
            else if (key == "method") c.method = value.get<std::string>();
            else if (key == "scope") c.scope = value.get<std::string>();
            else if (key == "tol") c.tol = value.get<double>();
            else if (key == "class_tol") c.class_tol = value.get<double>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "restarts") c.restarts = value.get<int>();
            else if (key == "max_iterations") c.max_iterations = value.get<int>();
            else if (key == "threads") c.threads = value.get<int>();
            else if (key == "spectral_start") c.spectral_start = value.get<bool>();
            else if (key == "out") c.out = value.get<std::string>();
            else if (key == "format") c.format = value.get<std::string>();
            else if (key == "start") c.start = value.get<double>();
            else if (key == "stop") c.stop = value.get<double>();
            else if (key == "step") c.step = value.get<double>();
            else if (key == "families") c.families = value.get<std::vector<std::string>>();
            else if (key == "builtin") c.builtin = value.get<std::string>();
            else if (key == "frame") c.frame = value.get<std::string>();
            else throw InvalidInput("config: unknown field '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput("config: field '" + key + "' has the wrong type (" + e.what() + ")");
        }
    }
}

std::vector<Complex> parse_vector(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(parse_complex(token));
    if (out.empty()) throw InvalidInput("vec: empty vector");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Decoherence thresholds for qudit magic states under quasiprobability frames", kTool};
    app.set_version_flag("--version", std::string(kTool) + " " + QCX_VERSION);
    app.require_subcommand(1);

    RunConfig flags;
    std::string vec_text;
    std::string config_path;
    // Each entry copies one explicitly given flag into the effective config.
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> overrides;

    auto add_common = [&](CLI::App* sub) {
        auto bind = [&](CLI::Option* opt, auto member) {
            overrides.emplace_back(opt, [&flags, member](RunConfig& c) { c.*member = flags.*member; });
        };
        bind(sub->add_option("--d", flags.d, "Dimension (3, 5 or 7)"), &RunConfig::d);
        bind(sub->add_option("--state", flags.state, "strange | norrell | custom | maximally-mixed"), &RunConfig::state);
        overrides.emplace_back(sub->add_option("--vec", vec_text, "Custom state vector, e.g. 1,0,0 or 1,1j,0"),
                               [&vec_text](RunConfig& c) { c.vec = parse_vector(vec_text); });
        bind(sub->add_option("--method", flags.method, "wigner | polytope | kd | crit"), &RunConfig::method);
        bind(sub->add_option("--scope", flags.scope, "state | subtheory"), &RunConfig::scope);
        bind(sub->add_option("--tol", flags.tol, "Bisection width"), &RunConfig::tol);
        bind(sub->add_option("--class-tol", flags.class_tol, "Penalty classification tolerance"), &RunConfig::class_tol);
        bind(sub->add_option("--seed", flags.seed, "Master seed"), &RunConfig::seed);
        bind(sub->add_option("--restarts", flags.restarts, "Optimizer restarts"), &RunConfig::restarts);
        bind(sub->add_option("--max-iterations", flags.max_iterations, "Iterations per restart"),
             &RunConfig::max_iterations);
        bind(sub->add_option("--threads", flags.threads, "Worker cap"), &RunConfig::threads);
        overrides.emplace_back(sub->add_flag("--no-spectral-start", "Make restart 1 random instead of spectral"),
                               [](RunConfig& c) { c.spectral_start = false; });
        bind(sub->add_option("--out", flags.out, "Output path (default stdout)"), &RunConfig::out);
        bind(sub->add_option("--format", flags.format, "json | csv"), &RunConfig::format);
        bind(sub->add_option("--start", flags.start, "Scan start"), &RunConfig::start);
        bind(sub->add_option("--stop", flags.stop, "Scan stop"), &RunConfig::stop);
        bind(sub->add_option("--step", flags.step, "Scan step"), &RunConfig::step);
        bind(sub->add_option("--families", flags.families, "Frame families")->delimiter(','), &RunConfig::families);
        bind(sub->add_option("--builtin", flags.builtin, "gross | kd-mub"), &RunConfig::builtin);
        bind(sub->add_option("--frame", flags.frame, "Frame JSON file"), &RunConfig::frame);
        sub->add_option("--config", config_path, "JSON config file (flags override it)");
    };

    auto* threshold = app.add_subcommand("threshold", "Compute a noise threshold and its certificate");
    auto* scan = app.add_subcommand("scan", "Tabulate witness values over a noise grid");
    auto* validate = app.add_subcommand("validate", "Check the exact-frame conditions");
    auto* frame = app.add_subcommand("frame", "Export a builtin frame as JSON");
    for (auto* sub : {threshold, scan, validate, frame}) add_common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kTool << " " << QCX_VERSION << "\n";
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << kTool << ": " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        RunConfig config;
        if (!config_path.empty()) apply_json(config, read_json_file(config_path, "config"));
        for (const auto& [opt, copy] : overrides) {
            if (opt->count() > 0) copy(config);
        }
        const Output output{out, config.out};
        if (threshold->parsed()) return cmd_threshold(config, output);
        if (scan->parsed()) return cmd_scan(config, output);
        if (validate->parsed()) return cmd_validate(config, output);
        return cmd_frame(config, output);
    } catch (const Error& e) {
        err << kTool << ": " << e.what() << "\n";
        return kInvalidInput;
    }
}

}  // namespace qcx::cli
