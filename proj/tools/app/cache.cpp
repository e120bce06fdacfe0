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

#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <openssl/evp.h>

#include "json.hpp"

namespace mk {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

fs::path default_cache_dir()
{
    if (const char* env = std::getenv("MIRRORKIT_CACHE"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "mirrorkit";
    return ".mirrorkit-cache";
}

const char* outcome_name(CacheOutcome o)
{
    switch (o) {
    case CacheOutcome::Disabled:
        return "disabled";
    case CacheOutcome::Hit:
        return "hit";
    case CacheOutcome::Miss:
        return "miss";
    case CacheOutcome::Corrupt:
        return "corrupt";
    case CacheOutcome::Extended:
        return "extended";
    }
    return "?";
}

namespace {

class FileLock {
public:
    explicit FileLock(const fs::path& p)
    {
        fd_ = ::open(p.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
        if (fd_ < 0)
            throw std::runtime_error("cannot open lock file " + p.string());
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw std::runtime_error("cannot lock " + p.string());
        }
    }
    ~FileLock()
    {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

using Components = std::vector<std::vector<std::string>>;

std::string content_digest(const std::string& op_hash, int order, const Components& parts)
{
    ordered_json j = {{"operator", op_hash}, {"order", order}, {"components", parts}};
    return sha256_hex(j.dump());
}

Components components_of(const mk_frobenius_basis* b)
{
    Components out;
    for (int k = 0; k < mk_frobenius_basis_size(b); ++k) {
        mk_series* s = nullptr;
        check(mk_frobenius_basis_component(b, k, &s));
        Series owned(s);
        out.push_back(coefficients(owned.get()));
    }
    return out;
}

Basis basis_of(const Components& parts)
{
    std::vector<Series> owned;
    std::vector<const mk_series*> raw;
    for (const auto& p : parts) {
        owned.push_back(make_series(p));
        raw.push_back(owned.back().get());
    }
    mk_frobenius_basis* b = nullptr;
    check(mk_frobenius_basis_from_components(raw.data(), raw.size(), &b));
    return Basis(b);
}

Basis compute(int order)
{
    mk_frobenius_basis* b = nullptr;
    check(mk_frobenius_basis_compute(order, &b));
    return Basis(b);
}

Basis truncate(const Basis& b, int order)
{
    mk_frobenius_basis* t = nullptr;
    check(mk_frobenius_basis_truncate(b.get(), order, &t));
    return Basis(t);
}

} // namespace

FrobeniusCache::FrobeniusCache(fs::path dir) : dir_(std::move(dir))
{
    char* text = nullptr;
    check(mk_pf_operator_text(&text));
    operator_text_ = take(text);
    operator_hash_ = sha256_hex(operator_text_);
}

fs::path FrobeniusCache::entry_path() const
{
    return dir_ / ("frobenius-" + operator_hash_.substr(0, 16) + ".json");
}

Basis FrobeniusCache::basis(int order)
{
    if (dir_.empty()) {
        last_ = CacheOutcome::Disabled;
        return compute(order);
    }
    fs::create_directories(dir_);
    FileLock lock(dir_ / ".lock");

    const fs::path path = entry_path();
    last_ = CacheOutcome::Miss;
    if (fs::exists(path)) {
        try {
            std::ifstream in(path);
            const auto j = ordered_json::parse(in);
            const int stored = j.at("order").get<int>();
            const auto parts = j.at("components").get<Components>();
            if (j.at("operator_hash").get<std::string>() != operator_hash_ ||
                j.at("content_hash").get<std::string>() != content_digest(operator_hash_, stored, parts))
                throw std::runtime_error("content hash mismatch");
            if (stored >= order) {
                last_ = CacheOutcome::Hit;
                return truncate(basis_of(parts), order);
            }
            last_ = CacheOutcome::Extended;
        } catch (const std::exception&) {
            last_ = CacheOutcome::Corrupt;
        }
    }

    Basis fresh = compute(order);
    const auto parts = components_of(fresh.get());
    ordered_json j = {{"operator", operator_text_},
                      {"operator_hash", operator_hash_},
                      {"order", order},
                      {"components", parts},
                      {"content_hash", content_digest(operator_hash_, order, parts)}};
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump() << '\n';
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
    return fresh;
}

} // namespace mk
