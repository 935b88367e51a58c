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

#include "qcx/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include <Eigen/Eigenvalues>

#include "qcx/error.hpp"
#include "qcx/random.hpp"

namespace qcx {

void OptimizerConfig::validate() const {
    if (restarts <= 0) throw InvalidParameter("restarts must be positive");
    if (max_iterations <= 0) throw InvalidParameter("max_iterations must be positive");
    if (!(convergence > 0.0)) throw InvalidParameter("convergence must be positive");
    if (!(simplex_scale > 0.0)) throw InvalidParameter("simplex_scale must be positive");
    if (threads <= 0) throw InvalidParameter("threads must be positive");
}

Operator unitary_from_params(std::span<const double> params, Dimension dim) {
    const int d = dim.value();
    if (params.size() != static_cast<std::size_t>(d * d)) {
        throw InvalidInput("unitary_from_params expects " + std::to_string(d * d) + " parameters, got " +
                           std::to_string(params.size()));
    }
    // H = -i A is Hermitian; exp(A) = V exp(i diag) V^dagger.
    Matrix h = Matrix::Zero(d, d);
    std::size_t k = 0;
    for (int r = 0; r < d; ++r) h(r, r) = params[k++];
    for (int r = 0; r < d; ++r) {
        for (int c = r + 1; c < d; ++c) {
            const Complex a(params[k], params[k + 1]);
            k += 2;
            // A_rc = a, A_cr = -conj(a); H = -i A.
            h(r, c) = Complex(0.0, -1.0) * a;
            h(c, r) = std::conj(h(r, c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    const Matrix& v = solver.eigenvectors();
    Vector phases(d);
    for (int r = 0; r < d; ++r) phases(r) = std::polar(1.0, solver.eigenvalues()(r));
    Matrix u = v * phases.asDiagonal() * v.adjoint();
    return Operator(dim, std::move(u), Role::unitary);
}

std::vector<double> params_from_unitary(const Operator& u) {
    if (u.role() != Role::unitary) throw InvalidInput("params_from_unitary expects a unitary");
    const int d = u.dim().value();
    Eigen::ComplexSchur<Matrix> schur(u.matrix());
    const Matrix& q = schur.matrixU();
    const Matrix& t = schur.matrixT();
    Vector logs(d);
    for (int r = 0; r < d; ++r) logs(r) = Complex(0.0, std::arg(t(r, r)));
    Matrix a = q * logs.asDiagonal() * q.adjoint();
    a = 0.5 * (a - a.adjoint()).eval();

    std::vector<double> params;
    params.reserve(d * d);
    for (int r = 0; r < d; ++r) params.push_back(a(r, r).imag());
    for (int r = 0; r < d; ++r) {
        for (int c = r + 1; c < d; ++c) {
            params.push_back(a(r, c).real());
            params.push_back(a(r, c).imag());
        }
    }
    return params;
}

ExactFrame frame_from_params(std::span<const double> params, Dimension dim, const Tolerances& tol) {
    const auto block = static_cast<std::size_t>(dim.value() * dim.value());
    if (params.size() != 2 * block) throw InvalidInput("frame parameters must have length 2 d^2");
    const Operator u = unitary_from_params(params.subspan(0, block), dim);
    const Operator v = unitary_from_params(params.subspan(block, block), dim);
    ExactFrame frame = frame_from_unitaries(u, v, tol);
    frame.descriptor.params.assign(params.begin(), params.end());
    return frame;
}

double frame_objective(std::span<const double> params, const OperationalSet& set, OmegaScope scope,
                       const Tolerances& tol) {
    try {
        return omega(frame_from_params(params, set.dim, tol), set, scope);
    } catch (const DegenerateFrame&) {
        return std::numeric_limits<double>::infinity();
    }
}

std::vector<double> restart_origin(int restart, const Operator& rho_m, std::uint64_t seed, bool spectral_start) {
    const Dimension dim = rho_m.dim();
    const int d = dim.value();
    const Operator fourier = fourier_gate(dim);
    std::vector<double> out;
    auto append = [&](const Operator& u) {
        const auto p = params_from_unitary(u);
        out.insert(out.end(), p.begin(), p.end());
    };
    if (restart == 0) {
        append(Operator(dim, Matrix::Identity(d, d), Role::unitary));
        append(fourier);
    } else if (restart == 1 && spectral_start) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_m.matrix());
        const Operator u(dim, solver.eigenvectors(), Role::unitary);
        append(u);
        append(Operator(dim, u.matrix() * fourier.matrix(), Role::unitary));
    } else {
        const auto r = static_cast<std::uint64_t>(restart);
        append(random_unitary(dim, mix_seed(seed, 2 * r)));
        append(random_unitary(dim, mix_seed(seed, 2 * r + 1)));
    }
    return out;
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f, std::vector<double> x0,
                             double scale, int max_iterations, double convergence, double stop_below) {
    const std::size_t n = x0.size();
    struct Vertex {
        std::vector<double> x;
        double value;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({x0, f(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = x0;
        x[i] += scale;
        const double v = f(x);
        simplex.push_back({std::move(x), v});
    }
    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    };
    auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = from[i] + t * (to[i] - from[i]);
        return out;
    };

    int iter = 0;
    order();
    for (; iter < max_iterations; ++iter) {
        const Vertex& best = simplex.front();
        const Vertex& worst = simplex.back();
        if (best.value <= stop_below) break;
        if (std::isfinite(worst.value) && worst.value - best.value <= convergence) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[v].x[i];
        }
        for (auto& c : centroid) c /= static_cast<double>(n);

        const double f_best = best.value;
        const double f_second_worst = simplex[n - 1].value;
        const double f_worst = worst.value;

        std::vector<double> xr = along(centroid, worst.x, -1.0);
        const double fr = f(xr);
        if (fr < f_best) {
            std::vector<double> xe = along(centroid, worst.x, -2.0);
            const double fe = f(xe);
            if (fe < fr) {
                simplex.back() = {std::move(xe), fe};
            } else {
                simplex.back() = {std::move(xr), fr};
            }
        } else if (fr < f_second_worst) {
            simplex.back() = {std::move(xr), fr};
        } else {
            bool shrink = false;
            if (fr < f_worst) {
                std::vector<double> xc = along(centroid, xr, 0.5);
                const double fc = f(xc);
                if (fc <= fr) {
                    simplex.back() = {std::move(xc), fc};
                } else {
                    shrink = true;
                }
            } else {
                std::vector<double> xc = along(centroid, worst.x, 0.5);
                const double fc = f(xc);
                if (fc < f_worst) {
                    simplex.back() = {std::move(xc), fc};
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (std::size_t v = 1; v <= n; ++v) {
                    simplex[v].x = along(simplex.front().x, simplex[v].x, 0.5);
                    simplex[v].value = f(simplex[v].x);
                }
            }
        }
        order();
    }
    return {simplex.front().x, simplex.front().value, iter};
}

SearchResult minimize_omega(double p, const ObjectiveContext& ctx, const OptimizerConfig& config) {
    config.validate();
    const OperationalSet set = build_operational_set(ctx.rho_m, p);
    const auto objective = [&](std::span<const double> x) { return frame_objective(x, set, ctx.scope, ctx.tol); };

    std::vector<FrameSearchPoint> points(static_cast<std::size_t>(config.restarts));
    std::vector<std::exception_ptr> failures(points.size());
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int r = next++; r < config.restarts; r = next++) {
            try {
                auto x0 = restart_origin(r, ctx.rho_m, config.seed, config.spectral_start);
                auto run = nelder_mead(objective, std::move(x0), config.simplex_scale, config.max_iterations,
                                       config.convergence, ctx.tol.classification);
                points[r] = {std::move(run.x), run.value, r, run.iterations};
            } catch (...) {
                failures[r] = std::current_exception();
            }
        }
    };
    const int workers = std::min(config.threads, config.restarts);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : failures) {
        if (e) std::rethrow_exception(e);
    }

    SearchResult result;
    std::size_t best = 0;
    for (std::size_t r = 0; r < points.size(); ++r) {
        result.restarts.push_back({points[r].restart, points[r].iterations, points[r].objective});
        if (points[r].objective < points[best].objective) best = r;
    }
    result.best = points[best];
    return result;
}

BisectionResult bisect_threshold(const std::function<bool(double)>& predicate, double tol) {
    if (!(tol > 0.0 && tol < 1.0)) throw InvalidParameter("bisection tolerance must lie in (0, 1)");
    BisectionResult result;
    const bool top = predicate(1.0);
    result.evaluations.emplace_back(1.0, top);
    if (!top) throw NoThreshold("predicate is false at p = 1: no threshold in [0, 1]");
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const bool ok = predicate(mid);
        result.evaluations.emplace_back(mid, ok);
        (ok ? hi : lo) = mid;
    }
    result.p = hi;
    return result;
}

}  // namespace qcx
