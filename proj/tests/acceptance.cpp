/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The dronetco Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dronetco/cost_model.hpp"
#include "dronetco/link_capacity.hpp"
#include "dronetco/optimizer.hpp"
#include "dronetco/report.hpp"
#include "dronetco/scenario.hpp"
#include "dronetco/sensitivity.hpp"
#include "support/oracles.hpp"

using namespace dronetco;
namespace t = dronetco::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args)
{
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

bool trace_ok(const OptimizationResult& r)
{
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& p = r.trace[i].point;
        if (!(p.n_dr >= 1.0 && p.c_step >= 1.0)) return false;
        if (i > 0 && !(r.trace[i].objective < r.trace[i - 1].objective)) return false;
    }
    return !r.trace.empty();
}

// Shared by criteria 1 and 10.
std::vector<OptimizationResult> g_traces;

Outcome oracle_equivalence()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(20261016);
    int agree = 0;
    int within_one_percent = 0;
    double worst_gap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const CostParams p = t::random_params(rng);
        DescentConfig config;
        config.bounds = {30.0, 10.0};
        OptimizationResult r = coordinate_descent({1.0, 1.0}, p, config, 1);
        const GridSearchResult oracle = grid_search(p, {1, 30}, {1, 10}, 1);
        if (r.minimizer_integer == oracle.argmin) {
            ++agree;
            ++within_one_percent;
        } else {
            const double gap = (r.objective_value - oracle.value) / oracle.value;
            worst_gap = std::max(worst_gap, gap);
            if (gap <= 0.01) ++within_one_percent;
        }
        g_traces.push_back(std::move(r));
    }
    const double elapsed = seconds_since(start);
    return {agree >= 95 && within_one_percent == 100 && elapsed < 10.0,
            fmt("%d/100 argmin agree, %d/100 within 1%% (worst gap %.3g), %.3f s (< 10 s)", agree,
                within_one_percent, worst_gap, elapsed)};
}

Outcome gradient_correctness()
{
    const auto start = Clock::now();
    std::mt19937_64 rng(8128);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const CostParams p = t::random_params(rng);
        const double n = std::uniform_real_distribution<double>(1.5, 30.0)(rng);
        const double s = std::uniform_real_distribution<double>(1.5, 10.0)(rng);
        const Gradient g = analytic_gradient({n, s}, p, 1);
        const Gradient fd = t::finite_difference_gradient(n, s, p, 1, 1e-5);
        worst = std::max({worst, t::relative_error(g.d_n_dr, fd.d_n_dr), t::relative_error(g.d_c_step, fd.d_c_step)});
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-6 && elapsed < 1.0,
            fmt("max per-component relative error %.3g (<= 1e-6), %.3f s (< 1 s)", worst, elapsed)};
}

Outcome decomposition_identity()
{
    std::mt19937_64 rng(31337);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const CostParams p = t::random_params(rng);
        const double n = std::uniform_real_distribution<double>(1.0, 60.0)(rng);
        const double s = std::uniform_real_distribution<double>(1.0, 8.0)(rng);
        const int horizon = std::uniform_int_distribution<int>(1, 20)(rng);
        const CostBreakdown b = tco({n, s}, p, horizon);
        const double sum = b.c_dr + b.c_sc + horizon * (b.c_fh_annual + b.c_bh_annual);
        worst = std::max(worst, std::abs(b.tco - sum) / b.tco);
    }
    return {worst <= 1e-12, fmt("10000 triples, max relative residual %.3g (<= 1e-12)", worst)};
}

Outcome reference_constants()
{
    const CostParams p = default_scenario().params;
    const struct {
        const char* name;
        double got;
        double want;
    } constants[] = {
        {"city_area", p.city_area, 100.0}, {"d", p.drone_unit_cost, 9120.0}, {"a", p.cost_a, 3840.0},
        {"b", p.cost_b, 0.2},              {"smc", p.smc, 2550.0},           {"fhc", p.fhc, 799.0},
        {"bhc", p.bhc, 833.0},             {"bbu", double(p.bbu), 6.0},      {"mux", p.mux, 1.5},
        {"c_base", p.c_base, 665.0},       {"drone_reach", p.drone_reach, 0.2},
    };
    int exact = 0;
    std::string wrong;
    for (const auto& c : constants) {
        if (c.got == c.want) {
            ++exact;
        } else {
            wrong += std::string(" ") + c.name;
        }
    }
    return {exact == 11, fmt("%d/11 constants exact%s", exact, wrong.c_str())};
}

Outcome geometry_law()
{
    const CostParams p;
    const double k = small_cell_count(1.0, p);
    double worst = 0.0;
    for (int i = 0; i <= 9900; ++i) {
        const double n = 1.0 + i * 0.01;
        worst = std::max(worst, t::relative_error(small_cell_count(n, p) * n * n, k));
    }
    const double oracle = 100.0 / (std::numbers::pi * 0.2 * 0.2);
    const bool value_ok = std::abs(k - 795.7747) <= 5e-5 && t::relative_error(k, oracle) <= 1e-12;
    return {worst <= 1e-12 && value_ok,
            fmt("max relative drift %.3g over n in [1,100]; k = %.4f (expected 795.7747)", worst, k)};
}

Outcome drone_cost_trend()
{
    const Scenario s = default_scenario();
    const std::vector<double> d{9120.0, 13120.0, 17120.0, 21120.0};
    std::vector<int> n;
    for (int i = 1; i <= 15; ++i) n.push_back(i);
    const SweepGrid grid = sweep_drone_cost(s.params, d, n, 1);
    bool ok = true;
    std::string argmins;
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
        argmins += fmt("%s%g", r ? "," : "", grid.columns[grid.row_argmin[r]]);
        if (r > 0 && grid.row_argmin[r] > grid.row_argmin[r - 1]) ok = false;
    }
    return {ok, "argmin n_dr per drone cost: " + argmins + " (non-increasing)"};
}

Outcome split_trend()
{
    const Scenario s = default_scenario();
    const std::vector<int> horizons{1, 5};
    const auto rows = compare_splits(s.params, s.splits->split2, s.splits->split7, {7.0, 1.0}, horizons);
    const double s2_5 = rows[1].breakdown.tco;
    const double s7_5 = rows[3].breakdown.tco;
    auto share = [](const CostBreakdown& b) { return b.opex_total() / b.tco; };
    const bool opex_grows = share(rows[1].breakdown) > share(rows[0].breakdown) &&
                            share(rows[3].breakdown) > share(rows[2].breakdown);
    return {s2_5 < s7_5 && opex_grows,
            fmt("5-year TCO split2 %.2f < split7 %.2f; OPEX share split2 %.3f->%.3f, split7 %.3f->%.3f", s2_5, s7_5,
                share(rows[0].breakdown), share(rows[1].breakdown), share(rows[2].breakdown),
                share(rows[3].breakdown))};
}

Outcome shannon()
{
    std::mt19937_64 rng(4242);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double bw = std::exp(std::uniform_real_distribution<double>(std::log(1e5), std::log(1e9))(rng));
        const double snr = std::uniform_real_distribution<double>(-20.0, 60.0)(rng);
        const double back = required_snr(shannon_capacity(bw, snr), bw);
        worst = std::max(worst, std::abs(back - snr) / std::max(1.0, std::abs(snr)));
        // Up to 30 bit/s/Hz (about 90 dB), beyond any radio link.
        const double efficiency = std::uniform_real_distribution<double>(0.01, 30.0)(rng);
        const double cap = bw * efficiency / 1e6;
        worst = std::max(worst, t::relative_error(shannon_capacity(bw, required_snr(cap, bw)), cap));
    }
    const double unit = shannon_capacity(100e6, 0.0);
    double lo = 1.0;
    double hi = 0.0;
    for (double snr = 15.0; snr <= 60.0; snr += 0.25) {
        const double gain = (shannon_capacity(1e6, snr + 3.0103) - shannon_capacity(1e6, snr));
        lo = std::min(lo, gain);
        hi = std::max(hi, gain);
    }
    return {worst <= 1e-9 && unit == 100.0 && lo >= 0.93 && hi <= 1.0,
            fmt("round trip %.3g (<= 1e-9); 100 MHz @ 0 dB = %.17g Mbps; +3.0103 dB gain in [%.4f, %.4f] b/s/Hz",
                worst, unit, lo, hi)};
}

Outcome determinism()
{
    const Scenario s = default_scenario();
    const std::string first = render_csv(cmd_sweep(s, SweepMode::DroneCost, 1));
    int identical = 0;
    for (int i = 0; i < 5; ++i) {
        if (render_csv(cmd_sweep(s, SweepMode::DroneCost, 1)) == first) ++identical;
    }
    std::ifstream in(std::filesystem::path(DRONETCO_TEST_DATA) / "golden" / "sweep_drone_cost_default.csv",
                     std::ios::binary);
    std::ostringstream golden;
    golden << in.rdbuf();
    const bool matches = golden.str() == first;
    return {identical == 5 && matches,
            fmt("%d/5 runs byte-identical; golden file %s", identical, matches ? "matches" : "DIFFERS")};
}

Outcome descent_monotonicity()
{
    std::size_t steps = 0;
    std::size_t bad = 0;
    // The randomized runs from criterion 1 plus the reference city at both horizons.
    std::vector<const OptimizationResult*> runs;
    for (const auto& r : g_traces) runs.push_back(&r);
    const OptimizationResult ref1 = coordinate_descent({1.0, 1.0}, CostParams{}, {}, 1);
    const OptimizationResult ref5 = coordinate_descent({1.0, 1.0}, CostParams{}, {}, 5);
    runs.push_back(&ref1);
    runs.push_back(&ref5);
    for (const auto* r : runs) {
        steps += r->trace.size() - 1;
        if (!trace_ok(*r)) ++bad;
    }
    return {bad == 0 && !g_traces.empty(),
            fmt("%zu traces, %zu accepted steps, %zu traces violating strict decrease or feasibility", runs.size(),
                steps, bad)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1  oracle equivalence", oracle_equivalence},
        {"2  gradient correctness", gradient_correctness},
        {"3  decomposition identity", decomposition_identity},
        {"4  reference constants", reference_constants},
        {"5  geometry law", geometry_law},
        {"6  drone-cost trend", drone_cost_trend},
        {"7  split trend", split_trend},
        {"8  shannon module", shannon},
        {"9  determinism", determinism},
        {"10 descent monotonicity", descent_monotonicity},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %-26s %s\n", outcome.pass ? "PASS" : "FAIL", name, outcome.detail.c_str());
        if (!outcome.pass) ++failed;
    }
    std::printf("%d/%zu acceptance criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
