/*
 * Copyright 2026 The mirrorkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance runner: one PASS/FAIL line per primary criterion. Exits 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mirrorkit/errors.hpp"
#include "mirrorkit/instanton.hpp"
#include "mirrorkit/monodromy.hpp"
#include "mirrorkit/picard_fuchs.hpp"
#include "mirrorkit/series.hpp"
#include "mirrorkit/toric.hpp"
#include "mirrorkit/yukawa.hpp"

using namespace mirrorkit;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(const char* name, double budget_ms, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (o.passed && ms > budget_ms) {
        o.passed = false;
        o.detail = "over time budget";
    }
    if (!o.passed)
        ++failures;
    std::printf("%s [PRIMARY] %s (%.1f ms, budget %.0f ms)%s%s\n", o.passed ? "PASS" : "FAIL", name, ms, budget_ms,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
}

Outcome yukawa_expansion()
{
    Outcome o;
    const auto c = yukawa::normalized_yukawa_q_expansion(10);
    o.require(c.order() == 10, "order");
    o.require(c[0] == Rational(5), "a0 = " + c[0].str());
    o.require(c[1] == Rational(2875), "a1 = " + c[1].str());
    o.require(c[2] == Rational(4876875), "a2 = " + c[2].str());
    if (o.passed)
        o.detail = "5 + 2875 q + 4876875 q^2 + ...";
    return o;
}

Outcome instanton_numbers()
{
    Outcome o;
    const auto c = yukawa::normalized_yukawa_q_expansion(10);
    const auto t = instanton::extract_instanton_numbers(c, false);
    o.require(t.at(1).count == Rational(2875), "n1 = " + t.at(1).count.str());
    o.require(t.at(2).count == Rational(609250), "n2 = " + t.at(2).count.str());
    for (int k = 1; k <= 10; ++k)
        o.require(t.at(k).integral && t.at(k).positive, "n" + std::to_string(k) + " = " + t.at(k).count.str());
    const auto audit = instanton::divisibility_audit(c, t);
    o.require(audit.checks.at(1).divisible && audit.checks.at(1).modulus == 8, "a2 - n1 not divisible by 8");
    o.require(audit.checks.at(2).divisible && audit.checks.at(2).modulus == 27, "a3 - n1 not divisible by 27");
    o.require(audit.all_pass(), "divisibility audit");
    if (o.passed)
        o.detail = "n1 = 2875, n2 = 609250, n3..n10 positive integers";
    return o;
}

Outcome run_groups(std::initializer_list<const char*> groups, std::initializer_list<const char*> extra)
{
    Outcome o;
    const auto r = monodromy::quintic_mirror_report();
    int counted = 0;
    for (const auto& c : r.checks) {
        bool wanted = false;
        for (const char* g : groups)
            wanted = wanted || c.group == g;
        for (const char* n : extra)
            wanted = wanted || c.name == n;
        if (!wanted)
            continue;
        ++counted;
        o.require(c.passed, c.group + "/" + c.name + ": " + c.detail);
    }
    o.require(counted > 0, "no checks");
    if (o.passed)
        o.detail = std::to_string(counted) + " identities";
    return o;
}

Outcome monodromy_fixture()
{
    // log group covers (log T_P)^k and the T, A side checks; basis covers
    // (g0, g1, lambda, m).
    return run_groups({"log", "basis"}, {});
}

Outcome lemma_suite()
{
    return run_groups({"lemmas"}, {});
}

Outcome toric_suite()
{
    Outcome o;
    const auto steps = toric::resolution_pipeline(false);
    const std::size_t expected_new[] = {3, 9, 6, 0};
    o.require(steps.size() == 4, "step count");
    for (std::size_t i = 0; i < steps.size() && i < 4; ++i) {
        o.require(steps[i].new_rays.size() == expected_new[i],
                  "step " + steps[i].name + " added " + std::to_string(steps[i].new_rays.size()) + " rays");
        for (const auto& c : steps[i].checks)
            o.require(c.passed, steps[i].name + "/" + c.name + ": " + c.detail);
    }
    const auto& fan = steps.back().fan;
    o.require(fan.is_simplicial(), "not simplicial");
    o.require(toric::verify_smooth(fan), "not smooth");
    o.require(toric::verify_crepant(fan), "not crepant");
    o.require(toric::cone_count(fan) == 25, "cones = " + std::to_string(toric::cone_count(fan)));
    o.require(fan.rays().size() == 21, "rays = " + std::to_string(fan.rays().size()));
    if (o.passed)
        o.detail = "rays 3 + 9 + 6 + 0, 25 smooth cones, 21 rays";
    return o;
}

TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit, bool zero_constant)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k)
        c.emplace_back(Integer(num(rng)), Integer(den(rng)));
    if (unit && c[0].is_zero())
        c[0] = Rational(1);
    if (zero_constant)
        c[0] = Rational(0);
    return TruncatedSeries(order, c);
}

Outcome property_suites()
{
    Outcome o;
    std::mt19937_64 rng(2026);
    int cases = 0;
    for (int order = 1; order <= 16; ++order) {
        const auto a = random_series(rng, order, false, false);
        const auto b = random_series(rng, order, false, false);
        const auto c = random_series(rng, order, false, false);
        const auto u = random_series(rng, order, true, false);
        const auto s = random_series(rng, order, false, true);
        const std::string at = " at K = " + std::to_string(order);
        o.require(a + b == b + a && a * b == b * a, "commutativity" + at);
        o.require((a * b) * c == a * (b * c) && (a + b) + c == a + (b + c), "associativity" + at);
        o.require(a * (b + c) == a * b + a * c, "distributivity" + at);
        o.require(a * TruncatedSeries::constant(1, order) == a, "identity" + at);
        o.require(series_div(a, u) * u == a, "mul/div" + at);
        o.require(series_log(series_exp(s)) == s, "exp/log" + at);
        auto r = s;
        if (r[1].is_zero())
            r = r + TruncatedSeries::variable(order);
        const auto z = TruncatedSeries::variable(order);
        o.require(series_compose(r, series_reversion(r)) == z, "reversion" + at);
        o.require(series_compose(series_reversion(r), r) == z, "reversion" + at);
        cases += 8;
    }
    o.require(pf::annihilates(pf::pf_operator(), pf::frobenius_basis(12)), "L(y_j) != 0 at K = 12");
    const auto kappa = yukawa::normalized_yukawa_q_expansion(10);
    const auto table = instanton::extract_instanton_numbers(kappa);
    o.require(instanton::predict_coupling_from_instantons(table, 10).coefficients == kappa.coefficients,
              "instanton round trip");
    for (int trial = 0; trial < 4; ++trial)
        o.require(yukawa::gauge_transform_check(random_series(rng, 8, true, false), 8), "gauge homogeneity");
    if (o.passed)
        o.detail = std::to_string(cases) + " series identities, annihilation, round trip, gauge";
    return o;
}

} // namespace

int main()
{
    criterion("yukawa_expansion", 10000, yukawa_expansion);
    criterion("instanton_numbers", 10000, instanton_numbers);
    criterion("monodromy_fixture", 1000, monodromy_fixture);
    criterion("lemma_suite", 1000, lemma_suite);
    criterion("toric_suite", 1000, toric_suite);
    criterion("property_suites", 60000, property_suites);
    std::printf("%d of 6 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
