/*
   Copyright 2026 The z4codes Authors

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

/**
 * @file z4_poly.hpp
 * @brief Exact polynomial arithmetic over Z4 and over F2, the lift of a
 *        binary primitive polynomial to Z4, and the generator-polynomial
 *        pipeline for extended cyclic codes.
 *
 * Coefficient order is lowest degree first throughout: the digit string
 * "3231" is 3 + 2X + 3X^2 + X^3. All digit-string I/O follows the same
 * convention.
 */

#ifndef Z4CODES_Z4_POLY_HPP
#define Z4CODES_Z4_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "z4codes/errors.hpp"
#include "z4codes/z4.hpp"

namespace z4codes {

/// Polynomial over Z4 in canonical form: no trailing zero coefficients,
/// empty coefficient vector for the zero polynomial (degree -1 stands in
/// for "minus infinity").
class Z4Poly {
   public:
    Z4Poly() = default;

    explicit Z4Poly(std::vector<z4_t> coeffs) : c_(std::move(coeffs)) {
        for (z4_t v : c_) {
            if (v > 3u) throw parse_error("Z4 coefficient out of range");
        }
        prune();
    }

    /// Parses a lowest-first digit string, e.g. "323001" = 3+2X+3X^2+X^5.
    static Z4Poly from_digits(std::string_view s) {
        std::vector<z4_t> c;
        c.reserve(s.size());
        for (char ch : s) {
            if (ch < '0' || ch > '3') throw parse_error(std::string("invalid Z4 digit '") + ch + "'");
            c.push_back(static_cast<z4_t>(ch - '0'));
        }
        return Z4Poly(std::move(c));
    }

    /// c * X^k.
    static Z4Poly x_pow(std::size_t k, z4_t c = 1) {
        std::vector<z4_t> v(k + 1, 0);
        v[k] = static_cast<z4_t>(c & 3u);
        return Z4Poly(std::move(v));
    }

    /// X^n - 1, stored as X^n + 3.
    static Z4Poly x_pow_n_minus_one(std::size_t n) {
        std::vector<z4_t> v(n + 1, 0);
        v[0] = 3;
        v[n] = 1;
        return Z4Poly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    z4_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : z4_t{0}; }
    z4_t leading() const noexcept { return c_.empty() ? z4_t{0} : c_.back(); }
    bool is_monic() const noexcept { return leading() == 1u; }
    const std::vector<z4_t>& coeffs() const noexcept { return c_; }

    /// Lowest-first digit string; the zero polynomial prints as "0".
    std::string digits() const {
        if (c_.empty()) return "0";
        std::string s;
        s.reserve(c_.size());
        for (z4_t v : c_) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    friend bool operator==(const Z4Poly& a, const Z4Poly& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const Z4Poly& a, const Z4Poly& b) noexcept { return !(a == b); }

    friend Z4Poly operator+(const Z4Poly& a, const Z4Poly& b) {
        std::vector<z4_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = z4_add(a.coeff(i), b.coeff(i));
        return Z4Poly(std::move(r));
    }

    friend Z4Poly operator-(const Z4Poly& a, const Z4Poly& b) {
        std::vector<z4_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = z4_sub(a.coeff(i), b.coeff(i));
        return Z4Poly(std::move(r));
    }

    friend Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) {
        if (a.is_zero() || b.is_zero()) return Z4Poly();
        std::vector<z4_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = z4_add(r[i + j], z4_mul(a.c_[i], b.c_[j]));
        }
        return Z4Poly(std::move(r));
    }

    friend Z4Poly operator*(z4_t s, const Z4Poly& a) {
        std::vector<z4_t> r(a.c_);
        for (z4_t& v : r) v = z4_mul(s, v);
        return Z4Poly(std::move(r));
    }

   private:
    std::vector<z4_t> c_;

    void prune() noexcept {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// Quotient and remainder in Z4[X]; requires the divisor's leading
/// coefficient to be a unit (1 or 3), the only case where long division
/// over Z4 is well defined.
inline std::pair<Z4Poly, Z4Poly> divmod(const Z4Poly& a, const Z4Poly& b) {
    if (b.is_zero() || !z4_is_unit(b.leading()))
        throw std::invalid_argument("non-unit leading coefficient");
    const z4_t binv = z4_inv(b.leading());
    std::vector<z4_t> rem(a.coeffs());
    const int db = b.degree();
    std::vector<z4_t> quot;
    if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int d = a.degree(); d >= db; --d) {
        const z4_t lead = rem[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        const z4_t c = z4_mul(lead, binv);
        quot[static_cast<std::size_t>(d - db)] = c;
        for (int i = 0; i <= db; ++i) {
            auto& r = rem[static_cast<std::size_t>(d - db + i)];
            r = z4_sub(r, z4_mul(c, b.coeff(static_cast<std::size_t>(i))));
        }
    }
    return {Z4Poly(std::move(quot)), Z4Poly(std::move(rem))};
}

inline Z4Poly operator%(const Z4Poly& a, const Z4Poly& b) { return divmod(a, b).second; }

/// X^{deg p} * p(1/X): the coefficient sequence reversed. Requires a
/// nonzero constant term so the degree does not drop.
inline Z4Poly reciprocal(const Z4Poly& p) {
    if (p.is_zero() || p.coeff(0) == 0) throw std::invalid_argument("reciprocal undefined");
    std::vector<z4_t> r(p.coeffs().rbegin(), p.coeffs().rend());
    return Z4Poly(std::move(r));
}

/// Polynomial over F2, canonical form as Z4Poly (empty = zero).
class BinPoly {
   public:
    BinPoly() = default;

    explicit BinPoly(std::vector<std::uint8_t> bits) : b_(std::move(bits)) {
        for (auto v : b_) {
            if (v > 1u) throw parse_error("binary coefficient out of range");
        }
        while (!b_.empty() && b_.back() == 0) b_.pop_back();
    }

    static BinPoly from_digits(std::string_view s) {
        std::vector<std::uint8_t> b;
        b.reserve(s.size());
        for (char ch : s) {
            if (ch != '0' && ch != '1') throw parse_error(std::string("invalid binary digit '") + ch + "'");
            b.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return BinPoly(std::move(b));
    }

    bool is_zero() const noexcept { return b_.empty(); }
    int degree() const noexcept { return static_cast<int>(b_.size()) - 1; }
    std::uint8_t coeff(std::size_t i) const noexcept { return i < b_.size() ? b_[i] : std::uint8_t{0}; }
    const std::vector<std::uint8_t>& coeffs() const noexcept { return b_; }

    std::string digits() const {
        if (b_.empty()) return "0";
        std::string s;
        s.reserve(b_.size());
        for (auto v : b_) s.push_back(static_cast<char>('0' + v));
        return s;
    }

    friend bool operator==(const BinPoly& a, const BinPoly& b) noexcept { return a.b_ == b.b_; }
    friend bool operator!=(const BinPoly& a, const BinPoly& b) noexcept { return !(a == b); }

    /// Bit-mask encoding, bit i = coefficient of X^i. Degree must fit.
    std::uint64_t mask() const {
        if (degree() >= 63) throw std::invalid_argument("binary polynomial too large for mask form");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < b_.size(); ++i)
            if (b_[i]) m |= (std::uint64_t{1} << i);
        return m;
    }

   private:
    std::vector<std::uint8_t> b_;
};

/// The 0/1 coefficients of h2 read as Z4 values (the naive lift).
inline Z4Poly lift_naive(const BinPoly& h2) {
    std::vector<z4_t> c(h2.coeffs().begin(), h2.coeffs().end());
    return Z4Poly(std::move(c));
}

/// Coefficient-wise reduction mod 2.
inline BinPoly reduce_mod2(const Z4Poly& p) {
    std::vector<std::uint8_t> b;
    b.reserve(p.coeffs().size());
    for (z4_t v : p.coeffs()) b.push_back(static_cast<std::uint8_t>(v & 1u));
    return BinPoly(std::move(b));
}

namespace detail {

/// Carry-less product of two F2 polynomials in mask form, reduced mod `mod`.
inline std::uint64_t f2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int dm) {
    unsigned __int128 acc = 0;
    for (int i = 0; i < 64; ++i)
        if ((a >> i) & 1u) acc ^= (static_cast<unsigned __int128>(b) << i);
    for (int i = 126; i >= dm; --i)
        if ((acc >> i) & 1u) acc ^= (static_cast<unsigned __int128>(mod) << (i - dm));
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t f2_powmod_x(std::uint64_t e, std::uint64_t mod, int dm) {
    std::uint64_t result = 1, base = 2;  // X
    while (e) {
        if (e & 1u) result = f2_mulmod(result, base, mod, dm);
        base = f2_mulmod(base, base, mod, dm);
        e >>= 1;
    }
    return result;
}

inline std::vector<std::uint64_t> factor_u64(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace detail

/// True iff h2 is a primitive irreducible polynomial over F2, checked by
/// the order test: X must be invertible mod h2 and have multiplicative
/// order exactly 2^m - 1 in F2[X]/(h2). A reducible modulus of degree m
/// cannot reach that order, so no separate irreducibility test is needed.
inline bool is_primitive(const BinPoly& h2) {
    const int m = h2.degree();
    if (m < 1) return false;
    if (h2.coeff(0) == 0) return false;  // X divides h2
    if (m == 1) return true;             // X + 1; order of X is 1 = 2^1 - 1
    const std::uint64_t mod = h2.mask();
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    if (detail::f2_powmod_x(n, mod, m) != 1u) return false;
    for (std::uint64_t p : detail::factor_u64(n))
        if (detail::f2_powmod_x(n / p, mod, m) == 1u) return false;
    return true;
}

/// The unique monic h over Z4 with h = h2 (mod 2) and h | X^n - 1 (mod 4),
/// n = 2^m - 1, computed by one Graeffe root-squaring step: write the
/// naive lift f of h2 as f(X) = e(X^2) + X d(X^2); then
/// h(X^2) = +-(e(X^2)^2 - X^2 d(X^2)^2), sign chosen to make h monic.
inline Z4Poly hensel_lift(const BinPoly& h2) {
    if (h2.degree() < 2 || !is_primitive(h2)) throw std::invalid_argument("not primitive");
    const std::size_t m = static_cast<std::size_t>(h2.degree());
    std::vector<z4_t> even, odd;
    for (std::size_t i = 0; i <= m; i += 2) even.push_back(h2.coeff(i));
    for (std::size_t i = 1; i <= m; i += 2) odd.push_back(h2.coeff(i));
    // e(X^2) and d(X^2): spread coefficients to even positions.
    auto spread = [](const std::vector<z4_t>& v) {
        std::vector<z4_t> s(v.size() * 2, 0);
        for (std::size_t i = 0; i < v.size(); ++i) s[2 * i] = v[i];
        return Z4Poly(std::move(s));
    };
    const Z4Poly e2 = spread(even);
    const Z4Poly d2 = spread(odd);
    const Z4Poly prod = e2 * e2 - Z4Poly::x_pow(2) * (d2 * d2);
    std::vector<z4_t> h(m + 1, 0);
    for (std::size_t i = 0; i <= m; ++i) h[i] = prod.coeff(2 * i);
    Z4Poly lifted{std::move(h)};
    if (!lifted.is_monic()) lifted = z4_t{3} * lifted;  // negate
    return lifted;
}

/// Generator polynomial of the Kerdock-side cyclic code: the reciprocal of
/// the exact quotient (X^n - 1) / ((X - 1) h(X)), n = 2^m - 1. The division
/// must be exact; a nonzero remainder means h is not a valid lift.
inline Z4Poly generator_poly_g(const Z4Poly& h, unsigned m) {
    if (h.degree() != static_cast<int>(m) || !h.is_monic())
        throw std::invalid_argument("h must be monic of degree m");
    const std::size_t n = (std::size_t{1} << m) - 1;
    const Z4Poly x_minus_1(std::vector<z4_t>{3, 1});
    auto [q, r] = divmod(Z4Poly::x_pow_n_minus_one(n), x_minus_1 * h);
    if (!r.is_zero()) throw std::invalid_argument("h does not divide X^n - 1");
    return reciprocal(q);
}

}  // namespace z4codes

#endif
