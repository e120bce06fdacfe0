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

#ifndef MIRRORKIT_TESTS_HELPERS_HPP
#define MIRRORKIT_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "mirrorkit/series.hpp"

namespace testing {

using mirrorkit::Rational;
using mirrorkit::TruncatedSeries;

inline TruncatedSeries series_of(std::initializer_list<long> c, int order)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return TruncatedSeries(order, v);
}

inline TruncatedSeries series_of_text(const std::vector<std::string>& c)
{
    std::vector<Rational> v;
    for (const auto& s : c)
        v.push_back(Rational::parse(s));
    return TruncatedSeries(static_cast<int>(c.size()) - 1, v);
}

// Small random rationals p/q, |p| <= 9, 1 <= q <= 4.
inline Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    const long p = num(rng), q = den(rng);
    return Rational(mirrorkit::Integer(p), mirrorkit::Integer(q));
}

inline TruncatedSeries random_series(std::mt19937_64& rng, int order)
{
    std::vector<Rational> v;
    for (int k = 0; k <= order; ++k)
        v.push_back(random_rational(rng));
    return TruncatedSeries(order, v);
}

inline TruncatedSeries random_unit(std::mt19937_64& rng, int order)
{
    auto s = random_series(rng, order);
    std::vector<Rational> v;
    for (int k = 0; k <= order; ++k)
        v.push_back(s[k]);
    if (v[0].is_zero())
        v[0] = Rational(1);
    return TruncatedSeries(order, v);
}

inline std::vector<std::string> strings(const TruncatedSeries& s)
{
    std::vector<std::string> out;
    for (int k = 0; k <= s.order(); ++k)
        out.push_back(s[k].str());
    return out;
}

// Coupling coefficients a_0..a_12 and instanton numbers n_1..n_12 from
// tests/oracle/quintic_oracle.py; a_0..a_2 and n_1, n_2 are also printed in
// the original expansion.
inline const std::vector<std::string> kCoupling = {
    "5",
    "2875",
    "4876875",
    "8564575000",
    "15517926796875",
    "28663236110956000",
    "53621944306062201000",
    "101216230345800061125625",
    "192323666400003538944396875",
    "367299732093982242625847031250",
    "704288164978454714776724365580000",
    "1354842473951260627644461070753075500",
    "2613295702542192770504516764304958585000",
};

inline const std::vector<std::string> kInstantons = {
    "2875",
    "609250",
    "317206375",
    "242467530000",
    "229305888887625",
    "248249742118022000",
    "295091050570845659250",
    "375632160937476603550000",
    "503840510416985243645106250",
    "704288164978454686113488249750",
    "1017913203569692432490203659468875",
    "1512323901934139334751675234074638000",
};

} // namespace testing

#endif // MIRRORKIT_TESTS_HELPERS_HPP
