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

#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace mk {

namespace fs = std::filesystem;

namespace {

const char* kTool = "mirrorkit";

void usage_error(const std::string& what)
{
    throw ApiError(MK_ERR_INVALID_ARGUMENT, what);
}

void add_check(Envelope& e, std::string group, std::string name, bool passed, std::string detail)
{
    e.checks.push_back({std::move(group), std::move(name), passed, std::move(detail)});
}

void expect_equal(Envelope& e, const std::string& group, const std::string& name, const std::string& got,
                  const std::string& want)
{
    add_check(e, group, name, got == want, "got " + got + ", expected " + want);
}

bool is_integer_text(const std::string& s)
{
    return s.find('/') == std::string::npos;
}

// First non-integral coefficient, or an empty string.
std::string first_fraction(const std::vector<std::string>& c)
{
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!is_integer_text(c[k]))
            return "coefficient " + std::to_string(k) + " = " + c[k];
    return "";
}

ordered_json ray_json(const long r[3])
{
    return ordered_json::array({std::to_string(r[0]), std::to_string(r[1]), std::to_string(r[2])});
}

Series coupling(FrobeniusCache& cache, int order, bool strict)
{
    Basis b = cache.basis(std::max(order, 2) + 1);
    mk_series* s = nullptr;
    check(mk_yukawa_from_basis(b.get(), order, strict ? 1 : 0, &s));
    return Series(s);
}

void periods(const RunConfig& c, FrobeniusCache& cache, Envelope& e)
{
    Basis b = cache.basis(c.order);
    char* text = nullptr;
    check(mk_pf_operator_text(&text));
    e.payload["order"] = c.order;
    e.payload["operator"] = take(text);
    ordered_json comps = ordered_json::object();
    for (int k = 0; k < mk_frobenius_basis_size(b.get()); ++k) {
        mk_series* s = nullptr;
        check(mk_frobenius_basis_component(b.get(), k, &s));
        Series owned(s);
        comps["S" + std::to_string(k)] = coefficients(owned.get());
    }
    e.payload["components"] = comps;
    int ok = 0;
    check(mk_frobenius_basis_annihilated(b.get(), &ok));
    add_check(e, "periods", "annihilation", ok != 0, "L(y_j) = 0 through order " + std::to_string(c.order));
    const int depth = mk_frobenius_basis_size(b.get());
    add_check(e, "periods", "log_depths", depth == 4, std::to_string(depth) + " solutions with distinct log depth");
}

void mirror_map(const RunConfig& c, FrobeniusCache& cache, Envelope& e)
{
    Basis b = cache.basis(c.order);
    mk_series *qz = nullptr, *zq = nullptr;
    check(mk_mirror_map(b.get(), &qz, &zq));
    Series q_of_z(qz), z_of_q(zq);
    const auto q = coefficients(q_of_z.get());
    const auto z = coefficients(z_of_q.get());
    e.payload["order"] = c.order;
    e.payload["q_of_z"] = q;
    e.payload["z_of_q"] = z;
    // Integrality is reported, not enforced.
    e.payload["integral"] = ordered_json{{"q_of_z", first_fraction(q).empty()}, {"z_of_q", first_fraction(z).empty()}};

    int ok = 0;
    check(mk_monodromy_shift_check(b.get(), &ok));
    add_check(e, "mirror_map", "monodromy_shift", ok != 0, "q is invariant under log z -> log z + 2 pi i");
    mk_series* comp = nullptr;
    check(mk_series_compose(q_of_z.get(), z_of_q.get(), &comp));
    Series roundtrip(comp);
    const auto r = coefficients(roundtrip.get());
    bool identity = true;
    for (std::size_t k = 0; k < r.size(); ++k)
        identity = identity && r[k] == (k == 1 ? "1" : "0");
    add_check(e, "mirror_map", "reversion", identity, "q(z(q)) = q");
}

void yukawa(const RunConfig& c, FrobeniusCache& cache, Envelope& e)
{
    Series s = coupling(cache, c.order, c.strict);
    const auto a = coefficients(s.get());
    e.payload["order"] = c.order;
    e.payload["coefficients"] = a;
    const auto frac = first_fraction(a);
    add_check(e, "yukawa", "integral", frac.empty(), frac.empty() ? "all coefficients integral" : frac);
    expect_equal(e, "yukawa", "a0", a[0], "5");
    if (c.order >= 1)
        expect_equal(e, "yukawa", "a1", a[1], "2875");
    if (c.order >= 2)
        expect_equal(e, "yukawa", "a2", a[2], "4876875");
}

void instantons(const RunConfig& c, FrobeniusCache& cache, Envelope& e)
{
    Series a = coupling(cache, c.order, c.strict);
    mk_instanton_table* t = nullptr;
    check(mk_instantons_extract(a.get(), c.strict ? 1 : 0, &t));
    Table table(t);

    ordered_json n = ordered_json::object();
    std::string bad;
    for (int d = 1; d <= mk_instanton_table_max_degree(table.get()); ++d) {
        char* v = nullptr;
        int integral = 0, positive = 0;
        check(mk_instanton_number(table.get(), d, &v, &integral, &positive));
        const std::string value = take(v);
        n[std::to_string(d)] = value;
        if ((!integral || !positive) && bad.empty())
            bad = "n_" + std::to_string(d) + " = " + value;
    }
    e.payload["n"] = n;
    expect_equal(e, "instantons", "n1", n["1"].get<std::string>(), "2875");
    if (c.order >= 2)
        expect_equal(e, "instantons", "n2", n["2"].get<std::string>(), "609250");
    add_check(e, "instantons", "positive_integers", bad.empty(), bad.empty() ? "every n_d is a positive integer" : bad);

    mk_series* p = nullptr;
    check(mk_instantons_predict(table.get(), c.order, &p));
    Series predicted(p);
    add_check(e, "instantons", "roundtrip", coefficients(predicted.get()) == coefficients(a.get()),
              "5 + sum n_k k^3 q^k/(1-q^k) reproduces the coupling");

    if (c.order >= 3) {
        mk_report* r = nullptr;
        check(mk_instantons_audit(a.get(), table.get(), &r));
        Report audit(r);
        ordered_json aj = ordered_json::object();
        for (const auto& [key, value] : report_values(audit.get())) {
            const auto cut = key.rfind('_');
            aj[key.substr(cut + 1)][key.substr(0, cut)] = value;
        }
        e.payload["audit"] = aj;
        for (auto& row : report_checks(audit.get()))
            e.checks.push_back(std::move(row));
    }
}

void monodromy(const RunConfig& c, Envelope& e)
{
    static const std::vector<std::string> groups = {"all", "log", "basis", "filtration", "lemmas"};
    if (std::find(groups.begin(), groups.end(), c.check) == groups.end())
        usage_error("unknown --check '" + c.check + "'");
    mk_report* r = nullptr;
    check(mk_monodromy_report(&r));
    Report report(r);
    for (const auto& [key, value] : report_values(report.get()))
        e.payload[key] = value;
    for (auto& row : report_checks(report.get()))
        if (c.check == "all" || row.group == c.check)
            e.checks.push_back(std::move(row));
}

void fan(const RunConfig& c, Envelope& e)
{
    mk_fan* f = nullptr;
    mk_report* r = nullptr;
    check(mk_fan_pipeline_step(c.step.c_str(), &f, &r));
    Fan owned(f);
    Report report(r);

    e.payload["step"] = c.step;
    ordered_json added = ordered_json::array();
    for (const auto& [key, value] : report_values(report.get())) {
        if (key != "new_rays")
            continue;
        // "(a,b,c)(d,e,f)..."
        std::istringstream in(value);
        char open, comma1, comma2, close;
        long r[3];
        while (in >> open >> r[0] >> comma1 >> r[1] >> comma2 >> r[2] >> close)
            added.push_back(ray_json(r));
    }
    e.payload["new_rays"] = added;
    ordered_json rays = ordered_json::array();
    long v[3];
    for (size_t i = 0; i < mk_fan_ray_count(f); ++i) {
        check(mk_fan_ray(f, i, v));
        rays.push_back(ray_json(v));
    }
    ordered_json cones = ordered_json::array();
    for (size_t i = 0; i < mk_fan_cone_count(f); ++i) {
        ordered_json cone = ordered_json::array();
        for (size_t j = 0; j < mk_fan_cone_size(f, i); ++j) {
            check(mk_fan_cone_ray(f, i, j, v));
            cone.push_back(ray_json(v));
        }
        cones.push_back(cone);
    }
    e.payload["ray_count"] = std::to_string(rays.size());
    e.payload["cone_count"] = std::to_string(cones.size());
    e.payload["rays"] = rays;
    e.payload["cones"] = cones;
    for (auto& row : report_checks(report.get()))
        e.checks.push_back(std::move(row));

    if (c.verify) {
        mk_report* vr = nullptr;
        check(mk_fan_verify(f, &vr));
        Report verify(vr);
        ordered_json vj = ordered_json::object();
        for (const auto& [key, value] : report_values(verify.get()))
            vj[key] = value;
        e.payload["verify"] = vj;
    }
    if (!c.svg_path.empty()) {
        char* svg = nullptr;
        check(mk_fan_slice_svg(f, ("Step " + c.step).c_str(), &svg));
        std::ofstream out(c.svg_path, std::ios::binary | std::ios::trunc);
        out << take(svg);
        if (!out)
            throw std::runtime_error("cannot write " + c.svg_path);
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string scalar_text(const ordered_json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

void flatten(const ordered_json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out.emplace_back(prefix, scalar_text(j));
    }
}

} // namespace

bool Envelope::all_pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRow& r) { return r.passed; });
}

ordered_json Envelope::to_json() const
{
    ordered_json cj = ordered_json::array();
    for (const auto& r : checks)
        cj.push_back({{"group", r.group}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return {{"tool", kTool},   {"version", mk_version()}, {"subcommand", subcommand},
            {"inputs", inputs}, {"payload", payload},      {"checks", cj}};
}

Envelope Envelope::from_json(const ordered_json& j)
{
    Envelope e;
    e.subcommand = j.at("subcommand").get<std::string>();
    e.inputs = j.at("inputs");
    e.payload = j.at("payload");
    for (const auto& r : j.at("checks"))
        e.checks.push_back({r.at("group").get<std::string>(), r.at("name").get<std::string>(),
                            r.at("passed").get<bool>(), r.at("detail").get<std::string>()});
    return e;
}

Envelope execute(const RunConfig& c, FrobeniusCache& cache)
{
    Envelope e;
    e.subcommand = c.subcommand;
    const bool ordered = c.subcommand == "periods" || c.subcommand == "mirror-map" || c.subcommand == "yukawa" ||
                         c.subcommand == "instantons";
    if (ordered) {
        const int lowest = c.subcommand == "yukawa" ? 0 : 1;
        if (c.order < lowest)
            usage_error("--order must be at least " + std::to_string(lowest));
        e.inputs["order"] = c.order;
        e.inputs["fail_on_nonintegral"] = c.strict;
    }

    if (c.subcommand == "periods") {
        periods(c, cache, e);
    } else if (c.subcommand == "mirror-map") {
        mirror_map(c, cache, e);
    } else if (c.subcommand == "yukawa") {
        yukawa(c, cache, e);
    } else if (c.subcommand == "instantons") {
        instantons(c, cache, e);
    } else if (c.subcommand == "monodromy") {
        e.inputs["check"] = c.check;
        monodromy(c, e);
    } else if (c.subcommand == "fan") {
        e.inputs["step"] = c.step;
        e.inputs["verify"] = c.verify;
        fan(c, e);
    } else {
        usage_error("unknown subcommand '" + c.subcommand + "'");
    }
    return e;
}

std::string render(const Envelope& e, const std::string& format)
{
    ordered_json j = e.to_json();
    if (format == "json")
        return j.dump(2) + "\n";

    j.erase("checks");
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(j, "", rows);
    std::ostringstream out;
    if (format == "csv") {
        out << "key,value\n";
        for (const auto& [k, v] : rows)
            out << csv_field(k) << ',' << csv_field(v) << '\n';
        for (const auto& r : e.checks)
            out << csv_field("check." + r.group + "." + r.name) << ',' << (r.passed ? "PASS" : "FAIL") << '\n';
    } else if (format == "text") {
        for (const auto& [k, v] : rows)
            out << k << " = " << v << '\n';
        for (const auto& r : e.checks)
            out << (r.passed ? "PASS " : "FAIL ") << r.group << '/' << r.name << ": " << r.detail << '\n';
    } else {
        usage_error("unknown format '" + format + "'");
    }
    return out.str();
}

void save_envelope(const Envelope& e, const fs::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << e.to_json().dump(2) << '\n';
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

Envelope load_envelope(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    return Envelope::from_json(ordered_json::parse(in));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    std::string cache_dir;

    CLI::App app{"Exact periods, mirror map, Yukawa coupling and instanton numbers of the quintic mirror", kTool};
    app.set_version_flag("--version", std::string(mk_version()));
    app.require_subcommand(1, 1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache-dir", cache_dir, "Frobenius basis cache (default $MIRRORKIT_CACHE or ~/.cache/mirrorkit)");
    app.add_flag("--no-cache", c.no_cache, "Do not read or write the cache");
    app.add_flag("--fail-on-nonintegral", c.strict, "Stop at the first non-integral coefficient");
    app.add_option("--save", c.save_path, "Also write the JSON envelope to this file");
    app.add_flag("-v,--verbose", c.verbose, "Report cache activity on stderr");

    auto with_order = [&](CLI::App* sub) {
        sub->add_option("--order,-K", c.order, "Truncation order K")->capture_default_str();
        sub->fallthrough();
    };
    with_order(app.add_subcommand("periods", "Frobenius basis at z = 0"));
    with_order(app.add_subcommand("mirror-map", "q(z) and its inverse z(q)"));
    with_order(app.add_subcommand("yukawa", "q-expansion of the normalized Yukawa coupling"));
    with_order(app.add_subcommand("instantons", "Instanton numbers n_1..n_K with divisibility audit"));
    auto* mono = app.add_subcommand("monodromy", "Monodromy identities at the large complex structure point");
    mono->add_option("--check", c.check, "all, log, basis, filtration or lemmas")
        ->check(CLI::IsMember({"all", "log", "basis", "filtration", "lemmas"}))
        ->capture_default_str();
    mono->fallthrough();
    auto* fan_cmd = app.add_subcommand("fan", "Toric resolution pipeline");
    fan_cmd->add_option("--step", c.step, "I, IIA, IIB or III")
        ->required()
        ->check(CLI::IsMember({"I", "IIA", "IIB", "III"}));
    fan_cmd->add_flag("--verify", c.verify, "Add structural verification values");
    fan_cmd->add_option("--emit-slice-svg", c.svg_path, "Write the slice picture as SVG");
    fan_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitUsage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();

    try {
        fs::path dir;
        if (!c.no_cache)
            dir = cache_dir.empty() ? default_cache_dir() : fs::path(cache_dir);
        FrobeniusCache cache(dir);
        Envelope e = execute(c, cache);
        if (c.verbose && cache.last_outcome() != CacheOutcome::Disabled)
            err << "cache " << outcome_name(cache.last_outcome()) << ": " << cache.entry_path().string() << '\n';
        out << render(e, c.format);
        if (!c.save_path.empty())
            save_envelope(e, c.save_path);
        for (const auto& r : e.checks)
            if (!r.passed)
                err << "check failed: " << r.group << '/' << r.name << ": " << r.detail << '\n';
        return e.all_pass() ? kExitOk : kExitCheckFailed;
    } catch (const ApiError& e) {
        err << "error: " << e.what() << '\n';
        const bool usage = e.status() == MK_ERR_INVALID_ARGUMENT || e.status() == MK_ERR_INDEX_OUT_OF_RANGE;
        return usage ? kExitUsage : kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace mk
