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

#ifndef MIRRORKIT_TOOLS_APP_HPP
#define MIRRORKIT_TOOLS_APP_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cache.hpp"
#include "handles.hpp"
#include "json.hpp"

namespace mk {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;

struct RunConfig {
    std::string subcommand;
    int order = 10;
    std::string format = "json"; // json | csv | text
    std::filesystem::path cache_dir;
    bool no_cache = false;
    bool strict = false;  // fail on the first non-integral coefficient
    bool verbose = false;
    std::string check = "all";
    std::string step;
    bool verify = false;
    std::string svg_path;
    std::string save_path;
};

struct Envelope {
    std::string subcommand;
    ordered_json inputs = ordered_json::object();
    ordered_json payload = ordered_json::object();
    std::vector<CheckRow> checks;

    bool all_pass() const;
    ordered_json to_json() const;
    static Envelope from_json(const ordered_json& j);
};

/// Computes one subcommand. Usage problems throw `ApiError` with
/// MK_ERR_INVALID_ARGUMENT.
Envelope execute(const RunConfig& config, FrobeniusCache& cache);

std::string render(const Envelope& e, const std::string& format);

void save_envelope(const Envelope& e, const std::filesystem::path& path);
Envelope load_envelope(const std::filesystem::path& path);

/// Full command line: parse, execute, print. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mk

#endif // MIRRORKIT_TOOLS_APP_HPP
