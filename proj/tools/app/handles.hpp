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

#ifndef MIRRORKIT_TOOLS_HANDLES_HPP
#define MIRRORKIT_TOOLS_HANDLES_HPP

// RAII wrappers over the C API handles.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorkit/mirrorkit.h"

namespace mk {

class ApiError : public std::runtime_error {
public:
    ApiError(mk_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    mk_status status() const noexcept { return status_; }

private:
    mk_status status_;
};

inline void check(mk_status s)
{
    if (s != MK_OK)
        throw ApiError(s, std::string(mk_status_name(s)) + ": " + mk_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};

using Series = std::unique_ptr<mk_series, Deleter<mk_series, mk_series_free>>;
using Basis = std::unique_ptr<mk_frobenius_basis, Deleter<mk_frobenius_basis, mk_frobenius_basis_free>>;
using Table = std::unique_ptr<mk_instanton_table, Deleter<mk_instanton_table, mk_instanton_table_free>>;
using Report = std::unique_ptr<mk_report, Deleter<mk_report, mk_report_free>>;
using Fan = std::unique_ptr<mk_fan, Deleter<mk_fan, mk_fan_free>>;

inline std::string take(char* s)
{
    std::string out(s ? s : "");
    mk_string_free(s);
    return out;
}

inline std::vector<std::string> coefficients(const mk_series* s)
{
    std::vector<std::string> out;
    for (int k = 0; k <= mk_series_order(s); ++k) {
        char* c = nullptr;
        check(mk_series_coefficient(s, k, &c));
        out.push_back(take(c));
    }
    return out;
}

inline Series make_series(const std::vector<std::string>& coeffs)
{
    std::vector<const char*> raw;
    for (const auto& c : coeffs)
        raw.push_back(c.c_str());
    mk_series* s = nullptr;
    check(mk_series_new(static_cast<int>(coeffs.size()) - 1, raw.data(), raw.size(), &s));
    return Series(s);
}

struct CheckRow {
    std::string group;
    std::string name;
    bool passed;
    std::string detail;
};

inline std::vector<CheckRow> report_checks(const mk_report* r)
{
    std::vector<CheckRow> out;
    for (size_t i = 0; i < mk_report_check_count(r); ++i) {
        const char *g, *n, *d;
        int p = 0;
        check(mk_report_check(r, i, &g, &n, &p, &d));
        out.push_back({g, n, p != 0, d});
    }
    return out;
}

inline std::vector<std::pair<std::string, std::string>> report_values(const mk_report* r)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (size_t i = 0; i < mk_report_value_count(r); ++i) {
        const char *k, *v;
        check(mk_report_value(r, i, &k, &v));
        out.emplace_back(k, v);
    }
    return out;
}

} // namespace mk

#endif // MIRRORKIT_TOOLS_HANDLES_HPP
