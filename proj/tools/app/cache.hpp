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

#ifndef MIRRORKIT_TOOLS_CACHE_HPP
#define MIRRORKIT_TOOLS_CACHE_HPP

#include <filesystem>
#include <string>

#include "handles.hpp"

namespace mk {

std::string sha256_hex(const std::string& data);

/// $MIRRORKIT_CACHE, else $HOME/.cache/mirrorkit, else ./.mirrorkit-cache.
std::filesystem::path default_cache_dir();

enum class CacheOutcome { Disabled, Hit, Miss, Corrupt, Extended };

const char* outcome_name(CacheOutcome o);

/// On-disk store of Frobenius bases keyed by the operator hash. One file per
/// operator holds the largest order computed so far; smaller requests are
/// served by truncation. Every file carries a content hash; a mismatch
/// forces a recompute. Access is serialized by flock on a lock file.
class FrobeniusCache {
public:
    /// An empty directory disables caching.
    explicit FrobeniusCache(std::filesystem::path dir);

    Basis basis(int order);

    CacheOutcome last_outcome() const { return last_; }
    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path entry_path() const;

private:
    std::filesystem::path dir_;
    std::string operator_text_;
    std::string operator_hash_;
    CacheOutcome last_ = CacheOutcome::Disabled;
};

} // namespace mk

#endif // MIRRORKIT_TOOLS_CACHE_HPP
