// Copyright 2026 The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace zxopt {

/**
 * @brief Exact spider phase: a rational multiple of pi, kept reduced and
 *        normalized to the half-open interval [0, 2*pi).
 *
 * Phase(n, d) represents (n/d)*pi. Arithmetic never leaves the rationals,
 * so Pauli/Clifford classification is exact.
 */
class Phase {
public:
    constexpr Phase() = default;

    Phase(std::int64_t num, std::int64_t den = 1) {
        if (den == 0) throw std::invalid_argument("Phase: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        // reduce, then wrap into [0, 2)
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num %= 2 * den;
        if (num < 0) num += 2 * den;
        if (num == 0) den = 1;
        _num = num;
        _den = den;
    }

    static Phase zero() { return Phase(); }
    static Phase pi() { return Phase(1); }
    static Phase half_pi() { return Phase(1, 2); }
    static Phase quarter_pi() { return Phase(1, 4); }

    std::int64_t num() const { return _num; }
    std::int64_t den() const { return _den; }

    bool is_zero() const { return _num == 0; }
    /// Multiple of pi.
    bool is_pauli() const { return _den == 1; }
    /// Multiple of pi/2.
    bool is_clifford() const { return _den == 1 || _den == 2; }
    /// Odd multiple of pi/2.
    bool is_proper_clifford() const { return _den == 2; }

    Phase operator+(const Phase& o) const {
        // denominators stay small in practice; guard anyway
        std::int64_t l = std::lcm(_den, o._den);
        return Phase(_num * (l / _den) + o._num * (l / o._den), l);
    }
    Phase operator-() const { return Phase(-_num, _den); }
    Phase operator-(const Phase& o) const { return *this + (-o); }
    Phase& operator+=(const Phase& o) { return *this = *this + o; }

    bool operator==(const Phase&) const = default;
    auto operator<=>(const Phase&) const = default;

    double to_radians() const {
        return 3.14159265358979323846 * static_cast<double>(_num) / static_cast<double>(_den);
    }

    /// Reduced fraction string "n/d" (multiples of pi), e.g. "1/2", "0/1".
    std::string to_string() const {
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    static std::optional<Phase> parse(const std::string& s) {
        std::size_t slash = s.find('/');
        try {
            if (slash == std::string::npos) return Phase(std::stoll(s));
            std::int64_t n = std::stoll(s.substr(0, slash));
            std::int64_t d = std::stoll(s.substr(slash + 1));
            if (d <= 0) return std::nullopt;
            return Phase(n, d);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /**
     * @brief Approximate an angle in radians by a rational multiple of pi
     *        with denominator at most max_den. Returns nullopt if no such
     *        rational lies within tol.
     */
    static std::optional<Phase> from_radians(double radians, std::int64_t max_den = 256,
                                             double tol = 1e-9) {
        const double pi = 3.14159265358979323846;
        double x = radians / pi;
        x -= 2.0 * std::floor(x / 2.0);  // into [0, 2)
        for (std::int64_t d = 1; d <= max_den; ++d) {
            double nd = x * static_cast<double>(d);
            std::int64_t n = static_cast<std::int64_t>(nd + 0.5);
            if (std::abs(nd - static_cast<double>(n)) <= tol * static_cast<double>(d)) {
                return Phase(n, d);
            }
        }
        return std::nullopt;
    }

private:
    std::int64_t _num = 0;
    std::int64_t _den = 1;
};

}  // namespace zxopt
