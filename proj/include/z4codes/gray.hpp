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
 * @file gray.hpp
 * @brief The Gray map from Z4^n to binary 2n-tuples, binary codes (explicit
 *        word sets or linear bases), the two linearity criteria for Gray
 *        images, Reed-Muller codes, and the binary linear span of a Gray
 *        image.
 *
 * The component maps on one Z4 digit are
 *     i      0 1 2 3
 *     α(i)   0 1 0 1
 *     β(i)   0 0 1 1
 *     γ(i)   0 1 1 0
 * and the Gray map is φ(a) = (β(a), γ(a)), an isometry taking Lee weight to
 * Hamming weight.
 */

#ifndef Z4CODES_GRAY_HPP
#define Z4CODES_GRAY_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "z4codes/bigint.hpp"
#include "z4codes/bitvec.hpp"
#include "z4codes/errors.hpp"
#include "z4codes/quaternary_code.hpp"
#include "z4codes/z4_vector.hpp"

namespace z4codes {

constexpr std::uint8_t alpha_bit(z4_t i) noexcept { return i & 1u; }
constexpr std::uint8_t beta_bit(z4_t i) noexcept { return (i >> 1) & 1u; }
constexpr std::uint8_t gamma_bit(z4_t i) noexcept { return alpha_bit(i) ^ beta_bit(i); }

inline BinaryVector alpha(const Z4Vector& a) {
    BinaryVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = alpha_bit(a[i]);
    return r;
}

inline BinaryVector beta(const Z4Vector& a) {
    BinaryVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = beta_bit(a[i]);
    return r;
}

inline BinaryVector gamma(const Z4Vector& a) {
    BinaryVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = gamma_bit(a[i]);
    return r;
}

struct ComponentMaps {
    BinaryVector alpha, beta, gamma;
};

inline ComponentMaps component_maps(const Z4Vector& a) { return {alpha(a), beta(a), gamma(a)}; }

/// φ(a) = (β(a), γ(a)), length 2n.
inline BinaryVector gray_map(const Z4Vector& a) {
    BinaryVector r(2 * a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = beta_bit(a[i]);
        r[a.size() + i] = gamma_bit(a[i]);
    }
    return r;
}

/// Interchanges the left and right halves of an even-length vector.
inline BinaryVector swap_halves(const BinaryVector& v) {
    const std::size_t h = v.size() / 2;
    BinaryVector r(v.size());
    for (std::size_t i = 0; i < h; ++i) {
        r[i] = v[h + i];
        r[h + i] = v[i];
    }
    return r;
}

/// A binary code: either an explicit word set (possibly nonlinear) or a
/// linear code held as a row-reduced basis. Both forms are canonical, so the
/// file format round-trips bit-exactly.
class BinaryCode {
   public:
    enum class Kind { Explicit, Linear };

    /// Explicit set of words; sorted and deduplicated.
    static BinaryCode explicit_set(std::size_t n, std::vector<BinaryVector> words) {
        for (const BinaryVector& w : words)
            if (w.size() != n) throw std::invalid_argument("length mismatch");
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        BinaryCode c;
        c.kind_ = Kind::Explicit;
        c.n_ = n;
        c.rows_ = std::move(words);
        return c;
    }

    /// Linear span of the given rows; basis is canonicalized by row
    /// reduction over F2.
    static BinaryCode linear_span(std::size_t n, std::vector<BinaryVector> rows) {
        for (const BinaryVector& r : rows)
            if (r.size() != n) throw std::invalid_argument("length mismatch");
        BinaryCode c;
        c.kind_ = Kind::Linear;
        c.n_ = n;
        c.reduce(std::move(rows));
        return c;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_linear_form() const noexcept { return kind_ == Kind::Linear; }
    std::size_t length() const noexcept { return n_; }

    /// Explicit: the sorted words. Linear: the reduced basis rows.
    const std::vector<BinaryVector>& rows() const noexcept { return rows_; }

    /// Basis size (linear form only).
    std::size_t dimension() const {
        if (kind_ != Kind::Linear) throw std::invalid_argument("linear code required");
        return rows_.size();
    }

    BigInt size() const {
        return kind_ == Kind::Explicit ? BigInt(rows_.size()) : pow2(static_cast<unsigned>(rows_.size()));
    }

    bool contains(const BinaryVector& v) const {
        if (v.size() != n_) throw std::invalid_argument("length mismatch");
        if (kind_ == Kind::Explicit)
            return std::binary_search(rows_.begin(), rows_.end(), v);
        BinaryVector w(v);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (w[pivots_[i]]) xor_into(w, rows_[i]);
        return is_zero(w);
    }

    /// Every codeword. Explicit: the stored words. Linear: spans the basis;
    /// throws if 2^dim > cap.
    std::vector<BinaryVector> words(std::uint64_t cap) const {
        if (kind_ == Kind::Explicit) {
            if (rows_.size() > cap) throw cap_exceeded("code too large to enumerate");
            return rows_;
        }
        if (rows_.size() >= 64 || (std::uint64_t{1} << rows_.size()) > cap)
            throw cap_exceeded("code too large to enumerate");
        std::vector<BinaryVector> out;
        out.reserve(std::size_t{1} << rows_.size());
        BinaryVector current(n_, 0);
        std::vector<std::uint8_t> digit(rows_.size(), 0);
        for (;;) {
            out.push_back(current);
            std::size_t i = 0;
            while (i < rows_.size()) {
                xor_into(current, rows_[i]);
                if (++digit[i] < 2) break;
                digit[i] = 0;
                ++i;
            }
            if (i == rows_.size()) break;
        }
        return out;
    }

    friend bool equal_as_sets(const BinaryCode& a, const BinaryCode& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("length mismatch");
        if (a.kind_ == b.kind_) return a.rows_ == b.rows_;  // both canonical
        const BinaryCode& lin = a.kind_ == Kind::Linear ? a : b;
        const BinaryCode& exp = a.kind_ == Kind::Linear ? b : a;
        if (lin.size() != exp.size()) return false;
        for (const BinaryVector& w : exp.rows_)
            if (!lin.contains(w)) return false;
        return true;
    }

    friend bool operator==(const BinaryCode& a, const BinaryCode& b) {
        return a.kind_ == b.kind_ && a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    /// Writes "F2 <n> <#rows> <explicit|linear>" then one row per line.
    void write(std::ostream& os) const {
        os << "F2 " << n_ << ' ' << rows_.size() << ' '
           << (kind_ == Kind::Explicit ? "explicit" : "linear") << '\n';
        for (const BinaryVector& r : rows_) os << format_binary_vector(r) << '\n';
    }

    static BinaryCode read(std::istream& is) {
        std::string tag, kind;
        std::size_t n = 0, k = 0;
        if (!(is >> tag >> n >> k >> kind) || tag != "F2") throw parse_error("bad code file header");
        if (kind != "explicit" && kind != "linear") throw parse_error("bad code kind");
        std::vector<BinaryVector> rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::string line;
            if (!(is >> line)) throw parse_error("missing code row");
            BinaryVector row = parse_binary_vector(line);
            if (row.size() != n) throw parse_error("row length mismatch");
            rows.push_back(std::move(row));
        }
        return kind == "explicit" ? explicit_set(n, std::move(rows))
                                  : linear_span(n, std::move(rows));
    }

   private:
    Kind kind_ = Kind::Explicit;
    std::size_t n_ = 0;
    std::vector<BinaryVector> rows_;
    std::vector<std::size_t> pivots_;  // linear form: pivot column per basis row

    void reduce(std::vector<BinaryVector> work) {
        std::vector<bool> used(work.size(), false);
        std::vector<std::pair<std::size_t, std::size_t>> piv;  // (row, col)
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t r = work.size();
            for (std::size_t i = 0; i < work.size(); ++i)
                if (!used[i] && work[i][col]) {
                    r = i;
                    break;
                }
            if (r == work.size()) continue;
            used[r] = true;
            for (std::size_t q = 0; q < work.size(); ++q)
                if (q != r && work[q][col]) xor_into(work[q], work[r]);
            piv.emplace_back(r, col);
        }
        for (auto [r, col] : piv) {
            rows_.push_back(std::move(work[r]));
            pivots_.push_back(col);
        }
    }
};

/// Explicit Gray image {φ(c) : c ∈ code}; φ is injective, so the image has
/// |code| words. Throws if |code| > cap.
inline BinaryCode gray_image(const QuaternaryCode& code, std::uint64_t cap) {
    code.check_cap(cap);
    std::vector<BinaryVector> words;
    words.reserve(static_cast<std::size_t>(std::uint64_t{1} << code.log2_size()));
    code.for_each_codeword([&](const Z4Vector& w) { words.push_back(gray_map(w)); });
    return BinaryCode::explicit_set(2 * code.length(), std::move(words));
}

/// First linearity criterion: φ(code) is linear iff 2·(α(a) ∗ α(b)) ∈ code
/// for all codewords a, b (∗ = componentwise product). The map (a,b) ↦
/// 2α(a)∗α(b) is additive in each argument (doubling kills the carry) and
/// unchanged under scaling a generator by a unit, so checking generator row
/// pairs i ≤ j suffices.
inline bool image_is_linear(const QuaternaryCode& code) {
    const std::vector<Z4Vector> rows = code.all_rows();
    std::vector<BinaryVector> alphas;
    alphas.reserve(rows.size());
    for (const Z4Vector& r : rows) alphas.push_back(alpha(r));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) {
            Z4Vector t(code.length(), 0);
            for (std::size_t p = 0; p < code.length(); ++p)
                t[p] = static_cast<z4_t>(2 * (alphas[i][p] & alphas[j][p]));
            if (!code.contains(t)) return false;
        }
    return true;
}

/// Debug oracle for image_is_linear: enumerates the Gray image and tests
/// closure under XOR directly. Quadratic in |code|; capped at 2^12 words.
inline bool image_closure_check(const QuaternaryCode& code) {
    code.check_cap(std::uint64_t{1} << 12);
    std::set<BinaryVector> image;
    code.for_each_codeword([&](const Z4Vector& w) { image.insert(gray_map(w)); });
    for (const BinaryVector& x : image)
        for (const BinaryVector& y : image) {
            BinaryVector s(x);
            xor_into(s, y);
            if (!image.count(s)) return false;
        }
    return true;
}

/// Second linearity criterion, for a binary linear code C of even length in
/// the coordinate order given: (u + s(u)) ∗ (v + s(v)) ∈ C for all u, v ∈ C,
/// where s swaps the halves. The expression is bilinear over F2, so basis
/// pairs (including the diagonal) suffice. No permutation search is done.
inline bool swap_condition_holds(const BinaryCode& c) {
    if (!c.is_linear_form()) throw std::invalid_argument("linear code required");
    if (c.length() % 2 != 0) throw std::invalid_argument("odd length");
    std::vector<BinaryVector> folded;
    folded.reserve(c.rows().size());
    for (const BinaryVector& u : c.rows()) {
        BinaryVector f(u);
        xor_into(f, swap_halves(u));
        folded.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < folded.size(); ++i)
        for (std::size_t j = i; j < folded.size(); ++j)
            if (!c.contains(and_product(folded[i], folded[j]))) return false;
    return true;
}

/// Reed-Muller code of order r in m variables, length 2^m, in standard
/// evaluation order: coordinate t has binary expansion (t_{m-1}, ..., t_0),
/// and the basis is the evaluation of every monomial of degree ≤ r. The top
/// variable x_{m-1} separates the left and right halves, so the swap map s
/// coincides with complementing x_{m-1}.
inline BinaryCode reed_muller(unsigned r, unsigned m) {
    if (r > m) throw std::invalid_argument("r out of range");
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::uint32_t> masks;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s)
        if (static_cast<unsigned>(std::popcount(s)) <= r) masks.push_back(s);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        const auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<BinaryVector> rows;
    rows.reserve(masks.size());
    for (std::uint32_t s : masks) {
        BinaryVector row(n);
        for (std::size_t t = 0; t < n; ++t) row[t] = ((t & s) == s) ? 1 : 0;
        rows.push_back(std::move(row));
    }
    return BinaryCode::linear_span(n, std::move(rows));
}

/// The binary linear span of φ(code), built without enumerating the image.
/// From the carry rule φ(a+b) = φ(a) ⊕ φ(b) ⊕ (α(a)∗α(b), α(a)∗α(b)), the
/// span is generated by the φ(g_i) together with the doubled-carry vectors
/// (α(g_i)∗α(g_j), α(g_i)∗α(g_j)) over generator pairs i ≤ j.
inline BinaryCode gray_image_linear_span(const QuaternaryCode& code) {
    const std::vector<Z4Vector> rows = code.all_rows();
    std::vector<BinaryVector> gens;
    std::vector<BinaryVector> alphas;
    for (const Z4Vector& r : rows) {
        gens.push_back(gray_map(r));
        alphas.push_back(alpha(r));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) {
            const BinaryVector prod = and_product(alphas[i], alphas[j]);
            BinaryVector carry(2 * code.length());
            for (std::size_t p = 0; p < code.length(); ++p)
                carry[p] = carry[code.length() + p] = prod[p];
            gens.push_back(std::move(carry));
        }
    return BinaryCode::linear_span(2 * code.length(), std::move(gens));
}

/// Exact minimum pairwise Hamming distance of an explicit code with at
/// least two words. The scan is split across `workers` threads; the merge
/// is a plain minimum, so the result is identical for any worker count.
inline unsigned min_distance_explicit(const BinaryCode& c, std::uint64_t cap,
                                      unsigned workers = 1) {
    if (c.kind() != BinaryCode::Kind::Explicit) throw std::invalid_argument("explicit code required");
    if (c.rows().size() > cap) throw cap_exceeded("code too large to enumerate");
    if (c.rows().size() < 2) throw std::invalid_argument("fewer than two codewords");
    std::vector<PackedBits> packed;
    packed.reserve(c.rows().size());
    for (const BinaryVector& w : c.rows()) packed.push_back(pack_bits(w));
    const std::size_t k = packed.size();
    auto scan = [&](std::size_t begin, std::size_t stride) {
        unsigned best = static_cast<unsigned>(c.length()) + 1;
        for (std::size_t i = begin; i + 1 < k; i += stride)
            for (std::size_t j = i + 1; j < k; ++j)
                best = std::min(best, packed_distance(packed[i], packed[j]));
        return best;
    };
    if (workers <= 1) return scan(0, 1);
    std::vector<unsigned> results(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] { results[t] = scan(t, workers); });
    for (std::thread& th : pool) th.join();
    return *std::min_element(results.begin(), results.end());
}

/// Least Hamming weight among nonzero words of weight ≤ w_max in a linear
/// code, or nullopt if there is none: ascending-weight support search with
/// membership against the reduced basis.
inline std::optional<unsigned> min_weight_linear(const BinaryCode& c, unsigned w_max) {
    if (!c.is_linear_form()) throw std::invalid_argument("linear code required");
    const std::size_t n = c.length();
    std::vector<std::size_t> support;
    // Depth-first over supports of size exactly w, in ascending w.
    auto search = [&](auto&& self, std::size_t from, unsigned remaining,
                      BinaryVector& v) -> bool {
        if (remaining == 0) return c.contains(v);
        if (n - from < remaining) return false;
        for (std::size_t p = from; p < n; ++p) {
            v[p] = 1;
            if (self(self, p + 1, remaining - 1, v)) return true;
            v[p] = 0;
        }
        return false;
    };
    for (unsigned w = 1; w <= w_max; ++w) {
        BinaryVector v(n, 0);
        if (search(search, 0, w, v)) return w;
    }
    return std::nullopt;
}

/// Minimum distance dispatcher. Explicit codes: exact pairwise scan.
/// Linear codes: exact minimum weight by enumeration when 2^dim ≤ cap,
/// otherwise a bounded weight-≤ w_max search (nullopt = "distance > w_max").
inline std::optional<unsigned> min_distance_binary(const BinaryCode& c, std::uint64_t cap,
                                                   unsigned w_max, unsigned workers = 1) {
    if (c.kind() == BinaryCode::Kind::Explicit)
        return min_distance_explicit(c, cap, workers);
    if (c.dimension() < 64 && (std::uint64_t{1} << c.dimension()) <= cap) {
        std::optional<unsigned> best;
        for (const BinaryVector& w : c.words(cap)) {
            const unsigned hw = hamming_weight(w);
            if (hw > 0 && (!best || hw < *best)) best = hw;
        }
        return best;
    }
    return min_weight_linear(c, w_max);
}

/// True iff the multiset of distances from c to all codewords is the same
/// for every codeword c (checked against the first word as reference).
inline bool is_distance_invariant(const BinaryCode& c, std::uint64_t cap) {
    if (c.kind() != BinaryCode::Kind::Explicit) return true;  // linear: translation invariance
    if (c.rows().size() > cap) throw cap_exceeded("code too large to enumerate");
    std::vector<PackedBits> packed;
    packed.reserve(c.rows().size());
    for (const BinaryVector& w : c.rows()) packed.push_back(pack_bits(w));
    const std::size_t k = packed.size();
    if (k == 0) return true;
    std::vector<std::size_t> reference(c.length() + 1, 0), profile;
    for (std::size_t j = 0; j < k; ++j) ++reference[packed_distance(packed[0], packed[j])];
    for (std::size_t i = 1; i < k; ++i) {
        profile.assign(c.length() + 1, 0);
        for (std::size_t j = 0; j < k; ++j) ++profile[packed_distance(packed[i], packed[j])];
        if (profile != reference) return false;
    }
    return true;
}

}  // namespace z4codes

#endif
