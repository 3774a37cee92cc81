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
 * @file galois_ring.hpp
 * @brief Arithmetic in the Galois ring GR(4, m) = Z4[X]/(h(X)), where h is
 *        the lift of a binary primitive polynomial of degree m, together
 *        with the Frobenius map, the relative trace down to Z4, and the
 *        trace description of the extended cyclic Kerdock-type code.
 *
 * Writing xi for the residue of X, every element has a unique coordinate
 * vector against the basis 1, xi, ..., xi^{m-1}. The Frobenius map sigma is
 * the Z4-linear extension of xi^i -> xi^{2i}; the trace of a is the sum of
 * sigma^j(a) over j = 0..m-1. That sigma is a ring automorphism and that
 * the trace lands in Z4 are consequences of the lift's root structure, and
 * both are enforced by the test suite rather than assumed silently: trace()
 * aborts if its result fails to be constant.
 */

#ifndef Z4CODES_GALOIS_RING_HPP
#define Z4CODES_GALOIS_RING_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "z4codes/errors.hpp"
#include "z4codes/z4.hpp"
#include "z4codes/z4_poly.hpp"
#include "z4codes/z4_vector.hpp"

namespace z4codes {

class GaloisRing;

/// One residue mod h: a Z4 coordinate vector of length m against the
/// basis 1, xi, ..., xi^{m-1}. Elements are immutable values; arithmetic
/// lives on free operators that insist both operands share a ring.
class GaloisRingElement {
   public:
    GaloisRingElement(const GaloisRing& ring, Z4Vector coeffs);

    const Z4Vector& coeffs() const { return c_; }
    const GaloisRing& ring() const { return *ring_; }

    /// True when every coordinate is zero.
    bool is_zero() const { return z4codes::is_zero(c_); }

    /// The constant coordinate (the coefficient of xi^0).
    z4_t constant_coordinate() const { return c_[0]; }

    friend bool operator==(const GaloisRingElement& a,
                           const GaloisRingElement& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const GaloisRingElement& a,
                           const GaloisRingElement& b) {
        return !(a == b);
    }

   private:
    const GaloisRing* ring_;
    Z4Vector c_;
};

/// The ring Z4[X]/(h(X)) for a monic degree-m lift h of a binary primitive
/// polynomial. Precomputes the reductions of X^m..X^{2m-2} (for products)
/// and of X^{2i} (for the Frobenius map). Immutable after construction;
/// elements hold a pointer back to their ring, so the ring must outlive
/// every element minted from it.
class GaloisRing {
   public:
    GaloisRing(unsigned m, Z4Poly h) : m_(m), h_(std::move(h)) {
        if (m_ == 0 || h_.degree() != static_cast<int>(m_) ||
            !z4_is_unit(h_.coeff(m_)) || h_.coeff(m_) != 1u)
            throw std::invalid_argument("h must be monic of degree m");
        n_ = (std::size_t{1} << m_) - 1u;
        // X^m = -(h - X^m), then X^{m+1} = X * X^m reduced, and so on.
        high_powers_.resize(m_ == 1 ? 1 : m_ - 1);
        Z4Vector xm(m_, 0u);
        for (unsigned i = 0; i < m_; ++i) xm[i] = z4_neg(h_.coeff(i));
        high_powers_[0] = xm;
        for (std::size_t k = 1; k < high_powers_.size(); ++k)
            high_powers_[k] = times_x(high_powers_[k - 1]);
        frobenius_basis_.resize(m_);
        for (unsigned i = 0; i < m_; ++i)
            frobenius_basis_[i] = reduce_power(2u * i);
    }

    GaloisRing(const GaloisRing&) = delete;
    GaloisRing& operator=(const GaloisRing&) = delete;

    unsigned degree() const { return m_; }
    const Z4Poly& modulus() const { return h_; }

    /// Multiplicative order of xi, 2^m - 1 (the length of the cyclic code
    /// this ring cross-validates).
    std::size_t cycle_length() const { return n_; }

    /// Element from a coordinate vector of length at most m (shorter
    /// vectors are zero-padded at the top).
    GaloisRingElement element(Z4Vector coeffs) const {
        if (coeffs.size() > m_) throw std::invalid_argument("coefficient vector too long");
        coeffs.resize(m_, 0u);
        return {*this, std::move(coeffs)};
    }

    GaloisRingElement zero() const { return element({}); }
    GaloisRingElement one() const { return constant(1u); }

    GaloisRingElement constant(z4_t c) const {
        Z4Vector v(m_, 0u);
        v[0] = c;
        return {*this, std::move(v)};
    }

    /// The residue of X (a root of the modulus).
    GaloisRingElement xi() const {
        Z4Vector v(m_, 0u);
        if (m_ == 1) {
            // Degree-1 ring: xi is the constant -h(0).
            v[0] = z4_neg(h_.coeff(0));
        } else {
            v[1] = 1u;
        }
        return {*this, std::move(v)};
    }

    /// xi^e for any exponent, by square-free repeated reduction.
    GaloisRingElement xi_power(std::size_t e) const {
        return {*this, reduce_power(e)};
    }

    /// The Frobenius map: Z4-linear extension of xi^i -> xi^{2i}.
    GaloisRingElement frobenius(const GaloisRingElement& a) const {
        require_same_ring(a);
        Z4Vector out(m_, 0u);
        for (unsigned i = 0; i < m_; ++i) {
            const z4_t c = a.coeffs()[i];
            if (c != 0u) add_scaled(out, frobenius_basis_[i], c);
        }
        return {*this, std::move(out)};
    }

    /// Relative trace to Z4: the sum of all m Frobenius images. Aborts with
    /// std::logic_error if the sum fails to be a constant, which would mean
    /// the modulus is not a primitive lift or the Frobenius map is broken.
    z4_t trace(const GaloisRingElement& a) const {
        require_same_ring(a);
        Z4Vector acc(a.coeffs());
        GaloisRingElement img = a;
        for (unsigned j = 1; j < m_; ++j) {
            img = frobenius(img);
            add_scaled(acc, img.coeffs(), 1u);
        }
        for (unsigned i = 1; i < m_; ++i)
            if (acc[i] != 0u)
                throw std::logic_error("trace image is not constant");
        return acc[0];
    }

   private:
    friend GaloisRingElement operator+(const GaloisRingElement&,
                                       const GaloisRingElement&);
    friend GaloisRingElement operator-(const GaloisRingElement&,
                                       const GaloisRingElement&);
    friend GaloisRingElement operator*(const GaloisRingElement&,
                                       const GaloisRingElement&);

    void require_same_ring(const GaloisRingElement& a) const {
        if (&a.ring() != this) throw std::invalid_argument("incompatible rings");
    }

    static void add_scaled(Z4Vector& acc, const Z4Vector& v, z4_t s) {
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = z4_add(acc[i], z4_mul(s, v[i]));
    }

    /// Multiplies a length-m coordinate vector by X and reduces mod h.
    Z4Vector times_x(const Z4Vector& v) const {
        Z4Vector out(m_, 0u);
        for (unsigned i = 0; i + 1 < m_; ++i) out[i + 1] = v[i];
        const z4_t top = v[m_ - 1];
        if (top != 0u) add_scaled(out, high_powers_[0], top);
        return out;
    }

    /// X^e mod h as a coordinate vector.
    Z4Vector reduce_power(std::size_t e) const {
        Z4Vector out(m_, 0u);
        if (e < m_) {
            out[e] = 1u;
            return out;
        }
        out = high_powers_[0];
        for (std::size_t k = m_; k < e; ++k) out = times_x(out);
        return out;
    }

    /// Full product of two coordinate vectors, reduced mod h.
    Z4Vector mul(const Z4Vector& a, const Z4Vector& b) const {
        std::vector<z4_t> prod(2 * m_ - 1, 0u);
        for (unsigned i = 0; i < m_; ++i) {
            if (a[i] == 0u) continue;
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = z4_add(prod[i + j], z4_mul(a[i], b[j]));
        }
        Z4Vector out(prod.begin(), prod.begin() + m_);
        for (unsigned k = m_; k < prod.size(); ++k)
            if (prod[k] != 0u) add_scaled(out, high_powers_[k - m_], prod[k]);
        return out;
    }

    unsigned m_;
    Z4Poly h_;
    std::size_t n_;
    std::vector<Z4Vector> high_powers_;     ///< X^{m+k} mod h, k = 0..m-2.
    std::vector<Z4Vector> frobenius_basis_; ///< X^{2i} mod h, i = 0..m-1.
};

inline GaloisRingElement::GaloisRingElement(const GaloisRing& ring,
                                            Z4Vector coeffs)
    : ring_(&ring), c_(std::move(coeffs)) {
    if (c_.size() != ring.degree())
        throw std::invalid_argument("coefficient vector length must equal the degree");
    for (z4_t v : c_)
        if (v > 3u) throw parse_error("Z4 coefficient out of range");
}

inline GaloisRingElement operator+(const GaloisRingElement& a,
                                   const GaloisRingElement& b) {
    a.ring().require_same_ring(b);
    Z4Vector out(a.coeffs());
    GaloisRing::add_scaled(out, b.coeffs(), 1u);
    return {a.ring(), std::move(out)};
}

inline GaloisRingElement operator-(const GaloisRingElement& a,
                                   const GaloisRingElement& b) {
    a.ring().require_same_ring(b);
    Z4Vector out(a.coeffs());
    GaloisRing::add_scaled(out, b.coeffs(), 3u);
    return {a.ring(), std::move(out)};
}

inline GaloisRingElement operator*(const GaloisRingElement& a,
                                   const GaloisRingElement& b) {
    a.ring().require_same_ring(b);
    return {a.ring(), a.ring().mul(a.coeffs(), b.coeffs())};
}

/**
 * The trace description of the extended cyclic code of length 2^m: all
 * vectors
 *
 *     ( eps, eps + Tr(lambda), eps + Tr(lambda xi), ...,
 *       eps + Tr(lambda xi^{n-1}) )
 *
 * for lambda ranging over the ring and eps over Z4, with the extended
 * coordinate leading. There are exactly 4^{m+1} such vectors (the map
 * (lambda, eps) -> vector is injective), every one sums to 0 mod 4, and
 * the multiset of symmetrized weights matches the extended cyclic
 * construction built from the same modulus.
 *
 * Expanding lambda = sum_i lambda_i xi^i against the basis shows each
 * coordinate is eps + sum_i lambda_i Tr(xi^{t+i}), so one pass of n trace
 * evaluations (xi^{t+i} indexed mod n since xi^n = 1) feeds the whole
 * enumeration.
 */
inline std::vector<Z4Vector> kerdock_via_trace(const GaloisRing& ring) {
    const unsigned m = ring.degree();
    const std::size_t n = ring.cycle_length();
    std::vector<z4_t> trace_of_power(n);
    for (std::size_t t = 0; t < n; ++t)
        trace_of_power[t] = ring.trace(ring.xi_power(t));

    std::vector<Z4Vector> words;
    words.reserve(std::size_t{1} << (2 * (m + 1)));
    Z4Vector lambda(m, 0u);
    while (true) {
        Z4Vector tr_row(n, 0u);
        for (std::size_t t = 0; t < n; ++t) {
            z4_t acc = 0u;
            for (unsigned i = 0; i < m; ++i)
                acc = z4_add(acc,
                             z4_mul(lambda[i], trace_of_power[(t + i) % n]));
            tr_row[t] = acc;
        }
        for (z4_t eps = 0u; eps < 4u; ++eps) {
            Z4Vector w(n + 1);
            w[0] = eps;
            for (std::size_t t = 0; t < n; ++t)
                w[t + 1] = z4_add(eps, tr_row[t]);
            words.push_back(std::move(w));
        }
        // Odometer over lambda's coordinates.
        unsigned pos = 0;
        while (pos < m && lambda[pos] == 3u) lambda[pos++] = 0u;
        if (pos == m) break;
        ++lambda[pos];
    }
    return words;
}

}  // namespace z4codes

#endif  // Z4CODES_GALOIS_RING_HPP
