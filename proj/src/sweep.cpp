// Copyright 2026 The polss Authors
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

#include "polss/sweep.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "polss/errors.hpp"

namespace polss {

Solver parse_solver(std::string_view name) {
    if (name == "analytic") return Solver::analytic;
    if (name == "numeric") return Solver::numeric;
    if (name == "both") return Solver::both;
    throw InvalidArgument("unknown solver '" + std::string(name) + "' (expected analytic, numeric or both)");
}

std::string_view solver_name(Solver s) {
    switch (s) {
        case Solver::analytic: return "analytic";
        case Solver::numeric: return "numeric";
        case Solver::both: return "both";
    }
    return "?";
}

double GridRange::at(int i) const {
    if (steps == 1) return min;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void GridRange::validate(std::string_view what) const {
    if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidArgument(std::string(what) + " range must be finite");
    if (steps < 1) throw InvalidArgument(std::string(what) + " range needs steps >= 1");
    if (min > max) throw InvalidArgument(std::string(what) + " range has min > max");
}

void SweepConfig::validate() const {
    zeta.validate("zeta");
    xi1.validate("xi1");
    if (!std::isfinite(xi2)) throw InvalidArgument("xi2 must be finite");
    if (solver == Solver::analytic && xi2 != 0.0) {
        throw InvalidArgument("the analytic sweep covers the xi2 = 0 plane only; use --solver numeric");
    }
    if (workers < 1) throw InvalidArgument("workers must be >= 1");
}

bool SweepRecord::satisfies_invariants() const {
    const double pops = pop_ee + pop_ge + pop_eg + pop_gg;
    return std::abs(pops - 1.0) <= 1e-9 && purity >= 0.25 - 1e-9 && purity <= 1.0 + 1e-9;
}

namespace {

constexpr double kBothDiscrepancyTol = 1e-8;

DensityMatrix analytic_state(const DimensionlessParams& d) {
    if (d.xi2 == 0.0) return to_density_matrix(closed_form(d.zeta, d.xi1));
    if (d.xi1 == 0.0) return to_density_matrix(solve_linear_system(d.zeta, d.xi1, d.xi2));
    throw InvalidArgument("no analytic steady state when both xi1 and xi2 are nonzero; use --solver numeric");
}

double liouvillian_residual(const Liouvillian& l, const DensityMatrix& rho) {
    return (l.matrix * vectorize(rho.data())).norm();
}

SweepRecord make_record(const DimensionlessParams& d, const DensityMatrix& rho, double residual) {
    const auto& m = rho.data();
    SweepRecord r;
    r.zeta = d.zeta;
    r.xi1 = d.xi1;
    r.xi2 = d.xi2;
    r.concurrence = concurrence(rho);
    r.negativity = negativity(rho);
    r.purity = rho.purity();
    r.pop_ee = m(0, 0).real();
    r.pop_ge = m(1, 1).real();
    r.pop_eg = m(2, 2).real();
    r.pop_gg = m(3, 3).real();
    r.residual = residual;
    return r;
}

}  // namespace

DensityMatrix effective_steady_state(const DimensionlessParams& d, Solver solver) {
    d.validate();
    if (solver == Solver::numeric) return steady_state(build_liouvillian(build_effective_model(d))).rho;
    return analytic_state(d);
}

SteadyReport cmd_steady(const DimensionlessParams& d, Solver solver) {
    d.validate();
    const auto l = build_liouvillian(build_effective_model(d));

    std::optional<DensityMatrix> numeric;
    std::optional<DensityMatrix> analytic;
    double residual_numeric = 0.0;
    if (solver != Solver::analytic) {
        auto ss = steady_state(l);
        residual_numeric = ss.residual;
        numeric.emplace(std::move(ss.rho));
    }
    if (solver != Solver::numeric) analytic.emplace(analytic_state(d));

    const DensityMatrix& rho = analytic ? *analytic : *numeric;
    std::optional<double> discrepancy;
    if (analytic && numeric) discrepancy = frobenius_distance(analytic->op(), numeric->op());

    return SteadyReport{d,
                        solver,
                        rho,
                        concurrence(rho),
                        negativity(rho),
                        rho.purity(),
                        analytic ? liouvillian_residual(l, rho) : residual_numeric,
                        residual(d.zeta, d.xi1, d.xi2, from_density_matrix(rho)),
                        discrepancy};
}

std::vector<SweepRecord> cmd_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::size_t nz = static_cast<std::size_t>(cfg.zeta.steps);
    const std::size_t nx = static_cast<std::size_t>(cfg.xi1.steps);
    const std::size_t total = nz * nx;
    std::vector<std::optional<SweepRecord>> slots(total);
    std::vector<std::exception_ptr> errors(total);

    auto compute = [&](std::size_t idx) {
        const DimensionlessParams d{cfg.zeta.at(static_cast<int>(idx / nx)), cfg.xi1.at(static_cast<int>(idx % nx)),
                                    cfg.xi2};
        const auto l = build_liouvillian(build_effective_model(d));
        if (cfg.solver == Solver::numeric) {
            auto ss = steady_state(l);
            return make_record(d, ss.rho, ss.residual);
        }
        const auto rho = analytic_state(d);
        if (cfg.solver == Solver::both) {
            const auto ss = steady_state(l);
            const double gap = frobenius_distance(rho.op(), ss.rho.op());
            if (gap > kBothDiscrepancyTol) {
                std::ostringstream msg;
                msg << "analytic and numeric steady states differ by " << gap << " at zeta=" << d.zeta
                    << ", xi1=" << d.xi1;
                throw NumericalError(msg.str());
            }
        }
        return make_record(d, rho, liouvillian_residual(l, rho));
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < total; idx = next++) {
            try {
                slots[idx] = compute(idx);
            } catch (...) {
                errors[idx] = std::current_exception();
            }
        }
    };
    const unsigned n_workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(total)));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    }

    std::vector<SweepRecord> out;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(*slots[i]);
    }
    return out;
}

std::size_t sweep_argmax(std::span<const SweepRecord> records) {
    if (records.empty()) throw InvalidArgument("sweep_argmax: no records");
    std::size_t best = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].concurrence > records[best].concurrence) best = i;
    }
    return best;
}

WitnessReport cmd_witness(const DimensionlessParams& d, unsigned workers, double threshold) {
    const auto rho = effective_steady_state(d, Solver::numeric);
    auto w = construct_witness(rho);
    const auto samples = sample_product_states(w.op, 10000, 1000, 20260101, workers);
    auto dominant = dominant_terms(w.coefficients, threshold);
    return WitnessReport{d,
                         std::move(w),
                         concurrence(rho),
                         negativity(rho),
                         samples,
                         threshold,
                         std::move(dominant),
                         "frobenius: ||W||_F = 1 (equivalently sum_jk c_jk^2 = 1/4)"};
}

ValidateReport cmd_validate(const PhysicalParams& p, double t_final, double dt) {
    p.validate();
    if (!(t_final >= 0.0)) throw InvalidArgument("t_final must be >= 0");

    auto reduced_full = [](const PhysicalParams& q) {
        const auto model = build_full_model(q);
        auto ss = steady_state(build_liouvillian(model));
        return ss;
    };
    const auto full = reduced_full(p);
    PhysicalParams bigger = p;
    bigger.n_max += 2;
    const auto full_bigger = reduced_full(bigger);

    const auto rho_q = partial_trace(full.rho, {kQubit2Factor, kQubit1Factor});
    const auto rho_q_bigger = partial_trace(full_bigger.rho, {kQubit2Factor, kQubit1Factor});
    const double shift = (rho_q.data() - rho_q_bigger.data()).cwiseAbs().maxCoeff();
    if (!(shift < kTruncationTol)) {
        std::ostringstream msg;
        msg << "photon truncation not converged: qubit state moves by " << shift << " from n_max=" << p.n_max
            << " to " << bigger.n_max << "; rerun with a larger --nmax";
        throw NumericalError(msg.str());
    }

    const auto ops = full_model_operators(p.n_max);
    const cplx a_full = expectation_value(ops.a, full.rho);
    const cplx s1 = expectation_value(ops.sigma1, full.rho);
    const cplx s2 = expectation_value(ops.sigma2, full.rho);
    const cplx a_ad = adiabatic_amplitude(s1, s2, p);

    const auto mapped = map_physical(p);
    auto rho_eff = effective_steady_state(mapped, Solver::numeric);

    std::optional<double> relaxation;
    if (t_final > 0.0) {
        Vector vac = Vector::Zero(full.rho.dim());
        vac(3 * (p.n_max + 1)) = 1.0;  // |g>|g>|0>
        const auto start = DensityMatrix::pure(full.rho.space(), vac);
        const auto end = evolve(build_full_model(p), start, t_final, dt);
        relaxation = trace_distance(end, full.rho);
    }

    return ValidateReport{p,
                          mapped,
                          rho_q,
                          rho_eff,
                          trace_distance(rho_q, rho_eff),
                          a_full,
                          a_ad,
                          std::abs(a_full - a_ad),
                          shift,
                          true,
                          p.j != 0.0 ? p.kappa / p.j : std::numeric_limits<double>::infinity(),
                          relaxation};
}

std::vector<DynamicsRow> cmd_dynamics(const DimensionlessParams& d, double t_final, double dt, int sample_every) {
    d.validate();
    if (sample_every < 0) throw InvalidArgument("sample_every must be >= 0");
    Vector gg = Vector::Zero(4);
    gg(3) = 1.0;
    const auto start = DensityMatrix::pure(two_qubit_space(), gg);
    std::vector<DynamicsRow> rows;
    auto observe = [&](double t, const Matrix& rho, double drift) {
        const DensityMatrix state(Operator(two_qubit_space(), rho));
        rows.push_back({t, concurrence(state), rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
                        rho(3, 3).real(), drift});
    };
    evolve(build_effective_model(d), start, t_final, dt, observe, {.sample_every = sample_every});
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
    out << "zeta,xi1,xi2,concurrence,negativity,purity,pop_ee,pop_ge,pop_eg,pop_gg,residual\n";
    for (const auto& r : records) {
        const double fields[] = {r.zeta,   r.xi1,    r.xi2,    r.concurrence, r.negativity, r.purity,
                                 r.pop_ee, r.pop_ge, r.pop_eg, r.pop_gg,      r.residual};
        bool first = true;
        for (double f : fields) {
            if (!first) out << ',';
            out << format_double(f);
            first = false;
        }
        out << '\n';
    }
}

void write_dynamics_csv(std::ostream& out, std::span<const DynamicsRow> rows) {
    out << "t,concurrence,pop_ee,pop_ge,pop_eg,pop_gg,trace_drift\n";
    for (const auto& r : rows) {
        out << format_double(r.t) << ',' << format_double(r.concurrence) << ',' << format_double(r.pop_ee) << ','
            << format_double(r.pop_ge) << ',' << format_double(r.pop_eg) << ',' << format_double(r.pop_gg) << ','
            << format_double(r.trace_drift) << '\n';
    }
}

}  // namespace polss
