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

#ifndef MIRRORKIT_RATIONAL_HPP
#define MIRRORKIT_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace mirrorkit {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. There is deliberately no conversion from floating point.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T value) // NOLINT(google-explicit-constructor)
    {
        static_assert(sizeof(T) <= sizeof(long), "integer too wide for direct construction");
        if constexpr (std::is_signed_v<T>)
            value_ = static_cast<long>(value);
        else
            value_ = static_cast<unsigned long>(value);
    }

    template <std::floating_point T>
    Rational(T) = delete;

    Rational(const Integer& value); // NOLINT(google-explicit-constructor)
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "p" or "p/q" in base 10. Throws `Error(InvalidArgument)` on
    /// malformed input or a zero denominator.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Lowest terms and positive denominator. Every value produced by this
    /// class satisfies it; the predicate exists for the audit hook.
    bool is_canonical() const;

    std::string str() const;

    const mpq_class& mpq() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value);
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Opt-in normalization audit. While enabled, every arithmetic result is
/// checked with `Rational::is_canonical` and violations are counted.
namespace rational_audit {
void enable(bool on);
bool enabled();
std::uint64_t checked();
std::uint64_t violations();
void reset();
} // namespace rational_audit

} // namespace mirrorkit

#endif // MIRRORKIT_RATIONAL_HPP
