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

#include "mirrorkit/rational.hpp"

#include <atomic>
#include <cctype>
#include <ostream>

#include "mirrorkit/errors.hpp"

namespace mirrorkit {

namespace {

std::atomic<bool> g_audit_on{false};
std::atomic<std::uint64_t> g_audit_checked{0};
std::atomic<std::uint64_t> g_audit_violations{0};

void audit(const Rational& r)
{
    if (!g_audit_on.load(std::memory_order_relaxed))
        return;
    g_audit_checked.fetch_add(1, std::memory_order_relaxed);
    if (!r.is_canonical())
        g_audit_violations.fetch_add(1, std::memory_order_relaxed);
}

bool parse_integer(std::string_view text, Integer& out)
{
    if (text.empty())
        return false;
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

} // namespace

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::NotReversible: return "NotReversible";
    case ErrorCode::RecurrenceBreakdown: return "RecurrenceBreakdown";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NoUnimodularPartner: return "NoUnimodularPartner";
    case ErrorCode::RayOutsideSupport: return "RayOutsideSupport";
    case ErrorCode::CheckFailed: return "CheckFailed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "Unknown";
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
    audit(*this);
}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
    audit(*this);
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(text, num)
                        : parse_integer(text.substr(0, slash), num) &&
                              parse_integer(text.substr(slash + 1), den);
    if (!ok)
        throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    return Rational(num, den);
}

bool Rational::is_canonical() const
{
    if (sgn(value_.get_den()) <= 0)
        return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1;
}

std::string Rational::str() const
{
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    audit(*this);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    audit(*this);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    audit(*this);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw Error(ErrorCode::InvalidArgument, "rational division by zero");
    value_ /= rhs.value_;
    audit(*this);
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

namespace rational_audit {
void enable(bool on) { g_audit_on.store(on); }
bool enabled() { return g_audit_on.load(); }
std::uint64_t checked() { return g_audit_checked.load(); }
std::uint64_t violations() { return g_audit_violations.load(); }
void reset()
{
    g_audit_checked.store(0);
    g_audit_violations.store(0);
}
} // namespace rational_audit

} // namespace mirrorkit
