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
 * @file weight_enumerators.hpp
 * @brief Symmetrized (trivariate) and Hamming (bivariate) weight enumerators
 *        with exact arbitrary-precision coefficients, and the three
 *        transforms connecting a code's enumerator to its dual's:
 *
 *          dual swe:   swe'(x,y,z) = (1/|D|)·swe(x+2y+z, x−z, x−2y+z)
 *          Gray bridge: W(x,y) = swe(x², xy, y²)
 *          binary dual: W'(x,y) = (1/|C|)·W(x+y, x−y)
 *
 * All arithmetic is exact; there is no floating point anywhere here.
 */

#ifndef Z4CODES_WEIGHT_ENUMERATORS_HPP
#define Z4CODES_WEIGHT_ENUMERATORS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z4codes/bigint.hpp"
#include "z4codes/bitvec.hpp"
#include "z4codes/errors.hpp"
#include "z4codes/gray.hpp"
#include "z4codes/quaternary_code.hpp"

namespace z4codes {

/// Census of (N0, N1, N2) over the codewords of a quaternary code, where
/// N_i(a) counts coordinates congruent to ±i mod 4. Homogeneous of degree n;
/// zero coefficients are never stored; term order is lexicographic in the
/// exponent triple.
class TrivariateWeightEnumerator {
   public:
    using Terms = std::map<std::array<unsigned, 3>, BigInt>;

    explicit TrivariateWeightEnumerator(unsigned n) : n_(n) {}

    unsigned degree() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }

    void add(unsigned n0, unsigned n1, unsigned n2, const BigInt& coeff) {
        if (n0 + n1 + n2 != n_) throw std::invalid_argument("exponents do not sum to the degree");
        if (coeff < 0) throw std::invalid_argument("negative coefficient");
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace({n0, n1, n2}, coeff);
        if (!fresh) it->second += coeff;
    }

    /// Evaluation at (1,1,1): the code size when built from a code.
    BigInt mass() const {
        BigInt m = 0;
        for (const auto& [e, c] : terms_) m += c;
        return m;
    }

    /// Least N1 + 2·N2 over terms other than x^n, i.e. the minimum Lee
    /// weight of the underlying code; 0 if only x^n is present.
    unsigned min_lee_weight() const {
        unsigned best = 0;
        for (const auto& [e, c] : terms_) {
            const unsigned lee = e[1] + 2 * e[2];
            if (lee != 0 && (best == 0 || lee < best)) best = lee;
        }
        return best;
    }

    friend bool operator==(const TrivariateWeightEnumerator& a,
                           const TrivariateWeightEnumerator& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : terms_)
            terms.push_back({{"n0", e[0]}, {"n1", e[1]}, {"n2", e[2]}, {"coeff", c.str()}});
        return {{"n", n_}, {"terms", std::move(terms)}};
    }

    static TrivariateWeightEnumerator from_json(const nlohmann::json& j) {
        try {
            TrivariateWeightEnumerator e(j.at("n").get<unsigned>());
            for (const auto& t : j.at("terms"))
                e.add(t.at("n0").get<unsigned>(), t.at("n1").get<unsigned>(),
                      t.at("n2").get<unsigned>(), BigInt(t.at("coeff").get<std::string>()));
            return e;
        } catch (const nlohmann::json::exception&) {
            throw parse_error("bad enumerator JSON");
        } catch (const std::runtime_error& e) {
            throw parse_error(std::string("bad enumerator JSON: ") + e.what());
        }
    }

   private:
    unsigned n_;
    Terms terms_;
};

/// Hamming weight census: term x^{n-w} y^w per codeword of weight w.
/// Homogeneous of degree n; term order lexicographic in (e_x, e_y).
class BivariateWeightEnumerator {
   public:
    using Terms = std::map<std::array<unsigned, 2>, BigInt>;

    explicit BivariateWeightEnumerator(unsigned n) : n_(n) {}

    unsigned degree() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }

    void add(unsigned ex, unsigned ey, const BigInt& coeff) {
        if (ex + ey != n_) throw std::invalid_argument("exponents do not sum to the degree");
        if (coeff < 0) throw std::invalid_argument("negative coefficient");
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace({ex, ey}, coeff);
        if (!fresh) it->second += coeff;
    }

    BigInt mass() const {
        BigInt m = 0;
        for (const auto& [e, c] : terms_) m += c;
        return m;
    }

    /// Least y-exponent over terms other than x^n: the minimum nonzero
    /// codeword weight (= minimum distance for codes containing 0 that are
    /// distance invariant); 0 if only x^n is present.
    unsigned min_positive_weight() const {
        unsigned best = 0;
        for (const auto& [e, c] : terms_)
            if (e[1] != 0 && (best == 0 || e[1] < best)) best = e[1];
        return best;
    }

    friend bool operator==(const BivariateWeightEnumerator& a,
                           const BivariateWeightEnumerator& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    nlohmann::json to_json() const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : terms_)
            terms.push_back({{"n0", e[0]}, {"n1", e[1]}, {"coeff", c.str()}});
        return {{"n", n_}, {"terms", std::move(terms)}};
    }

    static BivariateWeightEnumerator from_json(const nlohmann::json& j) {
        try {
            BivariateWeightEnumerator e(j.at("n").get<unsigned>());
            for (const auto& t : j.at("terms"))
                e.add(t.at("n0").get<unsigned>(), t.at("n1").get<unsigned>(),
                      BigInt(t.at("coeff").get<std::string>()));
            return e;
        } catch (const nlohmann::json::exception&) {
            throw parse_error("bad enumerator JSON");
        } catch (const std::runtime_error& e) {
            throw parse_error(std::string("bad enumerator JSON: ") + e.what());
        }
    }

   private:
    unsigned n_;
    Terms terms_;
};

/// Symmetrized weight enumerator of a code; |code| must be ≤ cap.
inline TrivariateWeightEnumerator swe(const QuaternaryCode& code, std::uint64_t cap) {
    code.check_cap(cap);
    TrivariateWeightEnumerator e(static_cast<unsigned>(code.length()));
    code.for_each_codeword([&](const Z4Vector& w) {
        unsigned counts[3] = {0, 0, 0};
        for (z4_t x : w) ++counts[x == 0 ? 0 : (x == 2 ? 2 : 1)];
        e.add(counts[0], counts[1], counts[2], 1);
    });
    return e;
}

/// Symmetrized census of an explicit list of Z4 words. No group structure
/// is assumed: this is the right tool when the words come from a
/// construction whose closure has not been established yet.
inline TrivariateWeightEnumerator swe_of_words(std::size_t n,
                                               const std::vector<Z4Vector>& words) {
    TrivariateWeightEnumerator e(static_cast<unsigned>(n));
    for (const Z4Vector& w : words) {
        if (w.size() != n) throw std::invalid_argument("length mismatch");
        unsigned counts[3] = {0, 0, 0};
        for (z4_t x : w) ++counts[x == 0 ? 0 : (x == 2 ? 2 : 1)];
        e.add(counts[0], counts[1], counts[2], 1);
    }
    return e;
}

namespace detail {

/// Sparse signed trivariate polynomial, exponent triple -> coefficient.
using TriPoly = std::map<std::array<unsigned, 3>, BigInt>;

inline TriPoly tri_mul(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            const std::array<unsigned, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            const BigInt prod = ca * cb;
            auto [it, fresh] = r.try_emplace(e, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

/// form^0 .. form^kmax.
inline std::vector<TriPoly> tri_powers(const TriPoly& form, unsigned kmax) {
    std::vector<TriPoly> p(kmax + 1);
    p[0] = TriPoly{{{0, 0, 0}, 1}};
    for (unsigned k = 1; k <= kmax; ++k) p[k] = tri_mul(p[k - 1], form);
    return p;
}

/// Sparse signed bivariate polynomial.
using BiPoly = std::map<std::array<unsigned, 2>, BigInt>;

inline BiPoly bi_mul(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            const std::array<unsigned, 2> e{ea[0] + eb[0], ea[1] + eb[1]};
            const BigInt prod = ca * cb;
            auto [it, fresh] = r.try_emplace(e, prod);
            if (!fresh) {
                it->second += prod;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

inline std::vector<BiPoly> bi_powers(const BiPoly& form, unsigned kmax) {
    std::vector<BiPoly> p(kmax + 1);
    p[0] = BiPoly{{{0, 0}, 1}};
    for (unsigned k = 1; k <= kmax; ++k) p[k] = bi_mul(p[k - 1], form);
    return p;
}

}  // namespace detail

/// The dual-code transform: substitutes (x+2y+z, x−z, x−2y+z), expands with
/// exact signed integers, and divides by `size` (= the mass of e). Throws if
/// any final coefficient is negative or not divisible — the input was not
/// the enumerator of a code of that size.
inline TrivariateWeightEnumerator macwilliams_swe(const TrivariateWeightEnumerator& e,
                                                  const BigInt& size) {
    using detail::TriPoly;
    const unsigned n = e.degree();
    if (size <= 0) throw std::invalid_argument("input is not a valid code enumerator");
    const auto pow_x = detail::tri_powers({{{1, 0, 0}, 1}, {{0, 1, 0}, 2}, {{0, 0, 1}, 1}}, n);
    const auto pow_y = detail::tri_powers({{{1, 0, 0}, 1}, {{0, 0, 1}, -1}}, n);
    const auto pow_z = detail::tri_powers({{{1, 0, 0}, 1}, {{0, 1, 0}, -2}, {{0, 0, 1}, 1}}, n);
    TriPoly acc;
    for (const auto& [exp, coeff] : e.terms()) {
        TriPoly term = detail::tri_mul(detail::tri_mul(pow_x[exp[0]], pow_y[exp[1]]), pow_z[exp[2]]);
        for (const auto& [te, tc] : term) {
            const BigInt scaled = coeff * tc;
            auto [it, fresh] = acc.try_emplace(te, scaled);
            if (!fresh) {
                it->second += scaled;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    TrivariateWeightEnumerator out(n);
    for (const auto& [te, tc] : acc) {
        if (tc < 0 || tc % size != 0)
            throw std::invalid_argument("input is not a valid code enumerator");
        out.add(te[0], te[1], te[2], tc / size);
    }
    return out;
}

/// The Gray bridge: W(x,y) = swe(x², xy, y²); a term census over (N0,N1,N2)
/// becomes a census over Hamming weight N1 + 2N2 at doubled length.
inline BivariateWeightEnumerator hwe_from_swe(const TrivariateWeightEnumerator& e) {
    BivariateWeightEnumerator out(2 * e.degree());
    for (const auto& [exp, coeff] : e.terms())
        out.add(2 * exp[0] + exp[1], exp[1] + 2 * exp[2], coeff);
    return out;
}

/// The binary transform: W'(x,y) = (1/size)·W(x+y, x−y), exact. Throws if a
/// coefficient fails to divide or comes out negative — the input enumerator
/// is not consistent with a distance-invariant code of that size.
inline BivariateWeightEnumerator binary_macwilliams(const BivariateWeightEnumerator& w,
                                                    const BigInt& size) {
    using detail::BiPoly;
    const unsigned n = w.degree();
    if (size <= 0) throw std::invalid_argument("not a distance-invariant-consistent enumerator");
    const auto pow_sum = detail::bi_powers({{{1, 0}, 1}, {{0, 1}, 1}}, n);
    const auto pow_diff = detail::bi_powers({{{1, 0}, 1}, {{0, 1}, -1}}, n);
    BiPoly acc;
    for (const auto& [exp, coeff] : w.terms()) {
        BiPoly term = detail::bi_mul(pow_sum[exp[0]], pow_diff[exp[1]]);
        for (const auto& [te, tc] : term) {
            const BigInt scaled = coeff * tc;
            auto [it, fresh] = acc.try_emplace(te, scaled);
            if (!fresh) {
                it->second += scaled;
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    BivariateWeightEnumerator out(n);
    for (const auto& [te, tc] : acc) {
        if (tc < 0 || tc % size != 0)
            throw std::invalid_argument("not a distance-invariant-consistent enumerator");
        out.add(te[0], te[1], tc / size);
    }
    return out;
}

/// Direct Hamming weight census of a binary code's words.
inline BivariateWeightEnumerator hwe_direct(const BinaryCode& c, std::uint64_t cap) {
    const unsigned n = static_cast<unsigned>(c.length());
    BivariateWeightEnumerator out(n);
    for (const BinaryVector& w : c.words(cap)) {
        const unsigned hw = hamming_weight(w);
        out.add(n - hw, hw, 1);
    }
    return out;
}

}  // namespace z4codes

#endif
