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

#include "mirrorkit/mirrorkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "mirrorkit/errors.hpp"
#include "mirrorkit/instanton.hpp"
#include "mirrorkit/mirror_map.hpp"
#include "mirrorkit/monodromy.hpp"
#include "mirrorkit/picard_fuchs.hpp"
#include "mirrorkit/toric.hpp"
#include "mirrorkit/yukawa.hpp"

#ifndef MIRRORKIT_VERSION
#define MIRRORKIT_VERSION "0.0.0"
#endif

struct mk_series {
    mirrorkit::TruncatedSeries value;
};

struct mk_frobenius_basis {
    mirrorkit::pf::FrobeniusBasis value;
};

struct mk_instanton_table {
    mirrorkit::instanton::InstantonTable value;
};

struct mk_report {
    struct Check {
        std::string group, name, detail;
        bool passed;
    };
    std::vector<Check> checks;
    std::vector<std::pair<std::string, std::string>> values;
};

struct mk_fan {
    mirrorkit::toric::Fan value;
};

namespace {

using namespace mirrorkit;

thread_local std::string last_error;

class NullPointer : public std::exception {
public:
    const char* what() const noexcept override { return "null pointer argument"; }
};

template <typename T>
const T& deref(const T* p)
{
    if (p == nullptr)
        throw NullPointer();
    return *p;
}

template <typename T>
T*& out_ref(T** p)
{
    if (p == nullptr)
        throw NullPointer();
    return *p;
}

template <typename F>
mk_status guarded(F&& body)
{
    try {
        body();
        last_error.clear();
        return MK_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return static_cast<mk_status>(static_cast<int>(e.code()));
    } catch (const NullPointer& e) {
        last_error = e.what();
        return MK_ERR_NULL_POINTER;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return MK_ERR_OUT_OF_MEMORY;
    } catch (const std::exception& e) {
        last_error = e.what();
        return MK_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return MK_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p == nullptr)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

mk_series* wrap(TruncatedSeries s)
{
    return new mk_series{std::move(s)};
}

std::string bool_text(bool b)
{
    return b ? "true" : "false";
}

void copy_ray(const toric::Ray& r, long out[3])
{
    if (out == nullptr)
        throw NullPointer();
    out[0] = r[0];
    out[1] = r[1];
    out[2] = r[2];
}

} // namespace

extern "C" {

const char* mk_version(void)
{
    return MIRRORKIT_VERSION;
}

const char* mk_status_name(mk_status status)
{
    switch (status) {
    case MK_OK:
        return "Ok";
    case MK_ERR_NULL_POINTER:
        return "NullPointer";
    case MK_ERR_OUT_OF_MEMORY:
        return "OutOfMemory";
    case MK_ERR_INTERNAL:
        return "Internal";
    default:
        if (status >= MK_ERR_INVALID_ARGUMENT && status <= MK_ERR_INDEX_OUT_OF_RANGE)
            return error_code_name(static_cast<ErrorCode>(status));
        return "Unknown";
    }
}

const char* mk_last_error(void)
{
    return last_error.c_str();
}

void mk_string_free(char* s)
{
    std::free(s);
}

mk_status mk_series_new(int order, const char* const* coefficients, size_t count, mk_series** out)
{
    return guarded([&] {
        if (count > 0 && coefficients == nullptr)
            throw NullPointer();
        std::vector<Rational> c;
        for (size_t i = 0; i < count; ++i) {
            if (coefficients[i] == nullptr)
                throw NullPointer();
            c.push_back(Rational::parse(coefficients[i]));
        }
        auto& o = out_ref(out);
        o = wrap(TruncatedSeries(order, std::move(c)));
    });
}

void mk_series_free(mk_series* s)
{
    delete s;
}

int mk_series_order(const mk_series* s)
{
    return s == nullptr ? -1 : s->value.order();
}

mk_status mk_series_coefficient(const mk_series* s, int k, char** out)
{
    return guarded([&] {
        const auto& v = deref(s).value[k];
        out_ref(out) = duplicate(v.str());
    });
}

mk_status mk_series_mul(const mk_series* a, const mk_series* b, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_mul(deref(a).value, deref(b).value)); });
}

mk_status mk_series_div(const mk_series* a, const mk_series* b, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_div(deref(a).value, deref(b).value)); });
}

mk_status mk_series_exp(const mk_series* a, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_exp(deref(a).value)); });
}

mk_status mk_series_log(const mk_series* a, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_log(deref(a).value)); });
}

mk_status mk_series_reversion(const mk_series* a, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_reversion(deref(a).value)); });
}

mk_status mk_series_compose(const mk_series* a, const mk_series* b, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(series_compose(deref(a).value, deref(b).value)); });
}

mk_status mk_pf_operator_text(char** out)
{
    return guarded([&] { out_ref(out) = duplicate(pf::pf_operator().canonical_text()); });
}

mk_status mk_frobenius_basis_compute(int order, mk_frobenius_basis** out)
{
    return guarded([&] {
        auto& o = out_ref(out);
        o = new mk_frobenius_basis{pf::frobenius_basis(order)};
    });
}

mk_status mk_frobenius_basis_from_components(const mk_series* const* components, size_t count,
                                             mk_frobenius_basis** out)
{
    return guarded([&] {
        if (count > 0 && components == nullptr)
            throw NullPointer();
        std::vector<TruncatedSeries> parts;
        for (size_t i = 0; i < count; ++i)
            parts.push_back(deref(components[i]).value);
        auto& o = out_ref(out);
        o = new mk_frobenius_basis{pf::FrobeniusBasis::from_components(std::move(parts))};
    });
}

void mk_frobenius_basis_free(mk_frobenius_basis* b)
{
    delete b;
}

int mk_frobenius_basis_order(const mk_frobenius_basis* b)
{
    return b == nullptr ? -1 : b->value.order();
}

int mk_frobenius_basis_size(const mk_frobenius_basis* b)
{
    return b == nullptr ? -1 : b->value.size();
}

mk_status mk_frobenius_basis_component(const mk_frobenius_basis* b, int k, mk_series** out)
{
    return guarded([&] { out_ref(out) = wrap(deref(b).value.component(k)); });
}

mk_status mk_frobenius_basis_truncate(const mk_frobenius_basis* b, int order, mk_frobenius_basis** out)
{
    return guarded([&] {
        auto& o = out_ref(out);
        o = new mk_frobenius_basis{deref(b).value.truncated(order)};
    });
}

mk_status mk_frobenius_basis_annihilated(const mk_frobenius_basis* b, int* out)
{
    return guarded([&] {
        const bool ok = pf::annihilates(pf::pf_operator(), deref(b).value);
        if (out == nullptr)
            throw NullPointer();
        *out = ok ? 1 : 0;
    });
}

mk_status mk_mirror_map(const mk_frobenius_basis* b, mk_series** q_of_z, mk_series** z_of_q)
{
    return guarded([&] {
        if (q_of_z == nullptr || z_of_q == nullptr)
            throw NullPointer();
        auto map = mirror::canonical_coordinate_series(deref(b).value);
        *q_of_z = wrap(std::move(map.q_of_z));
        try {
            *z_of_q = wrap(std::move(map.z_of_q));
        } catch (...) {
            mk_series_free(*q_of_z);
            *q_of_z = nullptr;
            throw;
        }
    });
}

mk_status mk_monodromy_shift_check(const mk_frobenius_basis* b, int* out)
{
    return guarded([&] {
        const auto& basis = deref(b).value;
        const bool ok = mirror::monodromy_shift_check(basis.solution(0).value, basis.solution(1).value);
        if (out == nullptr)
            throw NullPointer();
        *out = ok ? 1 : 0;
    });
}

mk_status mk_yukawa_from_basis(const mk_frobenius_basis* b, int order, int strict, mk_series** out)
{
    return guarded([&] {
        auto c = yukawa::normalized_yukawa_from_basis(deref(b).value, order, strict != 0);
        out_ref(out) = wrap(std::move(c.coefficients));
    });
}

mk_status mk_yukawa_gauge_check(const mk_series* gauge, int order, int* out)
{
    return guarded([&] {
        const bool ok = yukawa::gauge_transform_check(deref(gauge).value, order);
        if (out == nullptr)
            throw NullPointer();
        *out = ok ? 1 : 0;
    });
}

mk_status mk_instantons_extract(const mk_series* coupling, int strict, mk_instanton_table** out)
{
    return guarded([&] {
        auto t = instanton::extract_instanton_numbers(yukawa::CouplingSeries{deref(coupling).value}, strict != 0);
        out_ref(out) = new mk_instanton_table{std::move(t)};
    });
}

void mk_instanton_table_free(mk_instanton_table* t)
{
    delete t;
}

int mk_instanton_table_max_degree(const mk_instanton_table* t)
{
    return t == nullptr ? -1 : t->value.max_degree();
}

mk_status mk_instanton_number(const mk_instanton_table* t, int degree, char** out, int* integral, int* positive)
{
    return guarded([&] {
        const auto& e = deref(t).value.at(degree);
        out_ref(out) = duplicate(e.count.str());
        if (integral != nullptr)
            *integral = e.integral ? 1 : 0;
        if (positive != nullptr)
            *positive = e.positive ? 1 : 0;
    });
}

mk_status mk_instantons_predict(const mk_instanton_table* t, int order, mk_series** out)
{
    return guarded([&] {
        auto c = instanton::predict_coupling_from_instantons(deref(t).value, order);
        out_ref(out) = wrap(std::move(c.coefficients));
    });
}

void mk_report_free(mk_report* r)
{
    delete r;
}

size_t mk_report_check_count(const mk_report* r)
{
    return r == nullptr ? 0 : r->checks.size();
}

mk_status mk_report_check(const mk_report* r, size_t i, const char** group, const char** name, int* passed,
                          const char** detail)
{
    return guarded([&] {
        const auto& checks = deref(r).checks;
        if (i >= checks.size())
            throw Error(ErrorCode::IndexOutOfRange, "check index " + std::to_string(i) + " out of range");
        const auto& c = checks[i];
        if (group != nullptr)
            *group = c.group.c_str();
        if (name != nullptr)
            *name = c.name.c_str();
        if (passed != nullptr)
            *passed = c.passed ? 1 : 0;
        if (detail != nullptr)
            *detail = c.detail.c_str();
    });
}

size_t mk_report_value_count(const mk_report* r)
{
    return r == nullptr ? 0 : r->values.size();
}

mk_status mk_report_value(const mk_report* r, size_t i, const char** key, const char** value)
{
    return guarded([&] {
        const auto& values = deref(r).values;
        if (i >= values.size())
            throw Error(ErrorCode::IndexOutOfRange, "value index " + std::to_string(i) + " out of range");
        if (key != nullptr)
            *key = values[i].first.c_str();
        if (value != nullptr)
            *value = values[i].second.c_str();
    });
}

int mk_report_all_pass(const mk_report* r)
{
    if (r == nullptr)
        return 0;
    for (const auto& c : r->checks)
        if (!c.passed)
            return 0;
    return 1;
}

mk_status mk_instantons_audit(const mk_series* coupling, const mk_instanton_table* t, mk_report** out)
{
    return guarded([&] {
        const auto audit =
            instanton::divisibility_audit(yukawa::CouplingSeries{deref(coupling).value}, deref(t).value);
        auto report = std::make_unique<mk_report>();
        for (const auto& c : audit.checks) {
            const std::string d = std::to_string(c.degree);
            report->checks.push_back({"divisibility", "degree_" + d,
                                      c.numerator.str() + " mod " + c.modulus.get_str() + " = " + c.remainder.str(),
                                      c.divisible});
            report->values.emplace_back("numerator_" + d, c.numerator.str());
            report->values.emplace_back("modulus_" + d, c.modulus.get_str());
            report->values.emplace_back("remainder_" + d, c.remainder.str());
        }
        out_ref(out) = report.release();
    });
}

mk_status mk_monodromy_report(mk_report** out)
{
    return guarded([&] {
        const auto r = monodromy::quintic_mirror_report();
        const auto j = monodromy::builtin_data().J;
        auto report = std::make_unique<mk_report>();
        for (const auto& c : r.checks)
            report->checks.push_back({c.group, c.name, c.detail, c.passed});
        report->values.emplace_back("T_P", r.T_P.str());
        report->values.emplace_back("log_T_P", r.log_T_P.str());
        if (r.log_T_P.rows() > 0) {
            report->values.emplace_back("log_T_P^2", r.log_T_P.pow(2).str());
            report->values.emplace_back("log_T_P^3", r.log_T_P.pow(3).str());
        }
        if (r.N_cohomology.rows() > 0)
            report->values.emplace_back("N_cohomology", r.N_cohomology.str());
        if (!r.basis.g0.empty()) {
            report->values.emplace_back("g0", j.describe(r.basis.g0));
            report->values.emplace_back("g", j.describe(r.basis.g));
            report->values.emplace_back("g1", j.describe(r.basis.g1));
            report->values.emplace_back("lambda", r.basis.lambda.str());
            report->values.emplace_back("m", r.basis.m.str());
        }
        if (!r.filtration.W.empty()) {
            std::string dims;
            for (int d : r.filtration.dimensions())
                dims += (dims.empty() ? "" : ",") + std::to_string(d);
            report->values.emplace_back("weight_dimensions", dims);
        }
        out_ref(out) = report.release();
    });
}

mk_status mk_fan_quotient_cone(mk_fan** out)
{
    return guarded([&] { out_ref(out) = new mk_fan{toric::quotient_cone()}; });
}

mk_status mk_fan_star_subdivide(const mk_fan* f, const long* rays, size_t count, mk_fan** out)
{
    return guarded([&] {
        if (count > 0 && rays == nullptr)
            throw NullPointer();
        std::vector<toric::Ray> r;
        for (size_t i = 0; i < count; ++i)
            r.push_back({rays[3 * i], rays[3 * i + 1], rays[3 * i + 2]});
        auto fan = toric::star_subdivide(deref(f).value, r);
        out_ref(out) = new mk_fan{std::move(fan)};
    });
}

mk_status mk_fan_pipeline_step(const char* step, mk_fan** fan, mk_report** report)
{
    return guarded([&] {
        if (step == nullptr || fan == nullptr || report == nullptr)
            throw NullPointer();
        const std::string wanted(step);
        const auto& names = toric::pipeline_step_names();
        if (std::find(names.begin(), names.end(), wanted) == names.end())
            throw Error(ErrorCode::InvalidArgument, "unknown step '" + wanted + "' (expected I, IIA, IIB or III)");
        const auto steps = toric::resolution_pipeline(false);
        auto r = std::make_unique<mk_report>();
        for (const auto& s : steps) {
            for (const auto& c : s.checks)
                r->checks.push_back({s.name, c.name, c.detail, c.passed});
            if (s.name != wanted)
                continue;
            std::string added;
            for (const auto& ray : s.new_rays)
                added += toric::to_string(ray);
            r->values.emplace_back("new_rays", added);
            auto f = std::make_unique<mk_fan>(mk_fan{s.fan});
            *fan = f.release();
            *report = r.release();
            return;
        }
        throw Error(ErrorCode::InvalidArgument, "step not produced");
    });
}

void mk_fan_free(mk_fan* f)
{
    delete f;
}

size_t mk_fan_ray_count(const mk_fan* f)
{
    return f == nullptr ? 0 : f->value.rays().size();
}

mk_status mk_fan_ray(const mk_fan* f, size_t i, long out[3])
{
    return guarded([&] {
        const auto rays = deref(f).value.rays();
        if (i >= rays.size())
            throw Error(ErrorCode::IndexOutOfRange, "ray index " + std::to_string(i) + " out of range");
        copy_ray(rays[i], out);
    });
}

size_t mk_fan_cone_count(const mk_fan* f)
{
    return f == nullptr ? 0 : f->value.cones().size();
}

size_t mk_fan_cone_size(const mk_fan* f, size_t i)
{
    if (f == nullptr || i >= f->value.cones().size())
        return 0;
    return f->value.cones()[i].rays.size();
}

mk_status mk_fan_cone_ray(const mk_fan* f, size_t i, size_t j, long out[3])
{
    return guarded([&] {
        const auto& cones = deref(f).value.cones();
        if (i >= cones.size() || j >= cones[i].rays.size())
            throw Error(ErrorCode::IndexOutOfRange, "cone index out of range");
        copy_ray(cones[i].rays[j], out);
    });
}

mk_status mk_fan_verify(const mk_fan* f, mk_report** out)
{
    return guarded([&] {
        const auto& fan = deref(f).value;
        auto r = std::make_unique<mk_report>();
        const auto validity = toric::check_fan(fan);
        r->values.emplace_back("smooth", bool_text(toric::verify_smooth(fan)));
        r->values.emplace_back("crepant", bool_text(toric::verify_crepant(fan)));
        r->values.emplace_back("simplicial", bool_text(fan.is_simplicial()));
        r->values.emplace_back("valid", bool_text(validity.ok()));
        if (!validity.ok())
            r->values.emplace_back("validity_detail", validity.detail);
        r->values.emplace_back("cone_count", std::to_string(toric::cone_count(fan)));
        r->values.emplace_back("ray_count", std::to_string(fan.rays().size()));
        out_ref(out) = r.release();
    });
}

mk_status mk_fan_slice_svg(const mk_fan* f, const char* title, char** out)
{
    return guarded([&] { out_ref(out) = duplicate(toric::slice_svg(deref(f).value, title ? title : "")); });
}

} // extern "C"
