/*
   Copyright 2026 The toromon authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "toromon/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "toromon/error.hpp"

namespace toromon {

Int iroot_floor(const Int& a, unsigned n) {
    require_internal(a >= 0 && n >= 1, "iroot_floor needs a >= 0, n >= 1");
    if (a == 0 || a == 1 || n == 1) return a;
    Int lo = 0;
    Int hi = 1;
    while (boost::multiprecision::pow(hi, n) <= a) hi <<= 1;
    // Invariant: lo^n <= a < hi^n.
    lo = hi >> 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) >> 1;
        if (boost::multiprecision::pow(mid, n) <= a)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<Int> iroot_exact(const Int& a, unsigned n) {
    Int r = iroot_floor(a, n);
    if (boost::multiprecision::pow(r, n) == a) return r;
    return std::nullopt;
}

std::optional<Rat> rational_nth_root(const Rat& a, unsigned n) {
    require_internal(n >= 1, "rational_nth_root needs n >= 1");
    if (a == 0) return Rat(0);
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = rational_nth_root(-a, n);
        if (!r) return std::nullopt;
        return -*r;
    }
    auto num = iroot_exact(numerator(a), n);
    if (!num) return std::nullopt;
    auto den = iroot_exact(denominator(a), n);
    if (!den) return std::nullopt;
    return Rat(*num, *den);
}

std::vector<Int> signed_divisors(const Int& a) {
    Int v = a < 0 ? Int(-a) : a;
    require_internal(v > 0, "signed_divisors needs a != 0");
    std::vector<Int> ds;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            ds.push_back(d);
            if (d * d != v) ds.push_back(v / d);
        }
    }
    std::vector<Int> out;
    out.reserve(ds.size() * 2);
    for (const Int& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rat rat_from_string(const std::string& text) {
    auto bad = [&]() {
        fail(ErrorKind::ParseError, "malformed rational '" + text + "'");
    };
    if (text.empty()) bad();
    auto parse_int = [&](const std::string& part) {
        std::size_t i = 0;
        if (part[i] == '-' || part[i] == '+') i++;
        if (i == part.size()) bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) bad();
        return Int(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
}

}  // namespace toromon
