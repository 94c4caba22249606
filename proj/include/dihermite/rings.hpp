/*
   Copyright 2026 The dihermite authors

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

#pragma once

/**
 * @file rings.hpp
 * @brief Exact coefficient arithmetic: arbitrary-precision integers,
 *        normalized rationals, and the quadratic extension Q(sqrt 2).
 *
 * BigInt and Rational are GMP's mpz_class / mpq_class behind project-local
 * names. Rationals are kept canonical (reduced, positive denominator, zero
 * as 0/1); QuadExt stores a + b*sqrt(2) with rational components, so
 * 1/sqrt(2) = (1/2)*sqrt(2) needs no separate denominator track.
 *
 * Every operation returns a fresh value; values are immutable once built
 * and safe to share across threads.
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dihermite {

using BigInt = mpz_class;
using Rational = mpq_class;

/// k! for k >= 0. Negative k is a domain error.
BigInt factorial(long k);

/// Gamma at a positive integer: gamma_int(s) = (s-1)!. Requires s >= 1.
BigInt gamma_int(long s);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// base^e for e >= 0.
BigInt int_pow(const BigInt& base, unsigned long e);

/// Falling factorial a * (a-1) * ... * (a-steps+1); equals a!/(a-steps)!
/// for 0 <= steps <= a. steps < 0 is a domain error.
BigInt falling_factorial(long a, long steps);

/// num/den reduced with positive denominator. den == 0 is a domain error.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Reduced copy (gcd removed, denominator positive). Idempotent.
Rational normalized(const Rational& q);

/// "num/den", shortened to "num" when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "n", "n/d" and plain decimal literals ("0.5" -> 1/2, exactly).
/// Anything else is an invalid_argument.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);
double to_double(const BigInt& z);

/// Element a + b*sqrt(2) of Q(sqrt 2). Since sqrt(2) is irrational,
/// a + b*sqrt(2) == 0 iff a == b == 0, so equality is componentwise.
struct QuadExt {
    Rational a;  // rational part
    Rational b;  // coefficient of sqrt(2)

    QuadExt() : a(0), b(0) {}
    QuadExt(long v) : a(v), b(0) {}
    explicit QuadExt(Rational rational_part) : a(std::move(rational_part)), b(0) {}
    QuadExt(Rational rational_part, Rational sqrt2_part)
        : a(std::move(rational_part)), b(std::move(sqrt2_part)) {}

    static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }
    static QuadExt inv_sqrt2() { return QuadExt(Rational(0), Rational(1, 2)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    friend QuadExt operator+(const QuadExt& p, const QuadExt& q) {
        return QuadExt(p.a + q.a, p.b + q.b);
    }
    friend QuadExt operator-(const QuadExt& p, const QuadExt& q) {
        return QuadExt(p.a - q.a, p.b - q.b);
    }
    QuadExt operator-() const { return QuadExt(-a, -b); }
    // (a + b s)(c + d s) with s^2 = 2.
    friend QuadExt operator*(const QuadExt& p, const QuadExt& q) {
        return QuadExt(p.a * q.a + 2 * p.b * q.b, p.a * q.b + p.b * q.a);
    }
    friend QuadExt operator/(const QuadExt& p, const QuadExt& q) { return p * q.inverse(); }

    QuadExt& operator+=(const QuadExt& q) { return *this = *this + q; }
    QuadExt& operator-=(const QuadExt& q) { return *this = *this - q; }
    QuadExt& operator*=(const QuadExt& q) { return *this = *this * q; }

    friend bool operator==(const QuadExt& p, const QuadExt& q) {
        return p.a == q.a && p.b == q.b;
    }

    /// (a - b s) / (a^2 - 2 b^2); the norm vanishes only at zero.
    QuadExt inverse() const;

    /// Exact sign of the real number a + b*sqrt(2): -1, 0 or +1.
    int sign() const;

    double to_double() const;
};

/// base^e; negative e goes through inverse(). 0^negative is a domain error.
QuadExt quad_pow(const QuadExt& base, long e);

std::string to_string(const QuadExt& q);

// ---- ring tags & traits -------------------------------------------------
//
// Each polynomial carries exactly one coefficient ring, identified by the
// trait's tag/name. Promotion is explicit and one-directional
// (int -> rat -> quad); demotion only through the exactness-checked
// narrowing helpers next to the polynomial types.

enum class RingTag { integer, rational, quad };

template <class C>
struct RingTraits;

template <>
struct RingTraits<BigInt> {
    static constexpr RingTag tag = RingTag::integer;
    static constexpr std::string_view name = "int";
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
    static BigInt from_long(long v) { return BigInt(v); }
    static BigInt from_bigint(const BigInt& v) { return v; }
    static bool is_zero(const BigInt& v) { return sgn(v) == 0; }
    static bool is_negative(const BigInt& v) { return sgn(v) < 0; }
    static bool is_abs_one(const BigInt& v) { return v == 1 || v == -1; }
    static std::optional<BigInt> invert(const BigInt& v) {
        if (v == 1 || v == -1) return v;
        return std::nullopt;
    }
    static std::string abs_string(const BigInt& v) { return to_string(BigInt(abs(v))); }
    static std::string plain(const BigInt& v) { return to_string(v); }
    static double to_double(const BigInt& v) { return dihermite::to_double(v); }
};

template <>
struct RingTraits<Rational> {
    static constexpr RingTag tag = RingTag::rational;
    static constexpr std::string_view name = "rat";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_long(long v) { return Rational(v); }
    static Rational from_bigint(const BigInt& v) { return Rational(v); }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static bool is_negative(const Rational& v) { return sgn(v) < 0; }
    static bool is_abs_one(const Rational& v) { return v == 1 || v == -1; }
    static std::optional<Rational> invert(const Rational& v) {
        if (sgn(v) == 0) return std::nullopt;
        return Rational(1) / v;
    }
    static std::string abs_string(const Rational& v) { return to_string(Rational(abs(v))); }
    static std::string plain(const Rational& v) { return to_string(v); }
    static double to_double(const Rational& v) { return dihermite::to_double(v); }
};

template <>
struct RingTraits<QuadExt> {
    static constexpr RingTag tag = RingTag::quad;
    static constexpr std::string_view name = "quad";
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(1); }
    static QuadExt from_long(long v) { return QuadExt(v); }
    static QuadExt from_bigint(const BigInt& v) { return QuadExt(Rational(v)); }
    static bool is_zero(const QuadExt& v) { return v.is_zero(); }
    static bool is_negative(const QuadExt& v) { return v.sign() < 0; }
    static bool is_abs_one(const QuadExt& v) {
        return v == QuadExt(1) || v == QuadExt(-1);
    }
    static std::optional<QuadExt> invert(const QuadExt& v) {
        if (v.is_zero()) return std::nullopt;
        return v.inverse();
    }
    static std::string abs_string(const QuadExt& v) {
        return to_string(v.sign() < 0 ? -v : v);
    }
    static std::string plain(const QuadExt& v) { return to_string(v); }
    static double to_double(const QuadExt& v) { return v.to_double(); }
};

/// c^e in the coefficient ring; negative e requires an invertible c.
template <class C>
C ring_pow(const C& base, long e) {
    if (e < 0) {
        std::optional<C> inv = RingTraits<C>::invert(base);
        if (!inv) throw std::domain_error("ring_pow: base not invertible, negative exponent");
        return ring_pow(*inv, -e);
    }
    C acc = RingTraits<C>::one();
    C sq = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n != 0) {
        if (n & 1) acc = acc * sq;
        n >>= 1;
        if (n != 0) sq = sq * sq;
    }
    return acc;
}

}  // namespace dihermite
