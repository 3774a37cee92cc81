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
 * @file quaternary_code.hpp
 * @brief Quaternary linear codes: additive subgroups of Z4^n, held in a
 *        canonical row-reduced form with unit pivots and two-pivots.
 *
 * A code of length n is stored as k1 unit-pivot rows (pivot entry 1) and k2
 * two-pivot rows (pivot entry 2, all entries even); its size is 4^k1 · 2^k2.
 * The reduced form is canonical, so writing a code to its file format and
 * reading it back reproduces the bytes exactly.
 */

#ifndef Z4CODES_QUATERNARY_CODE_HPP
#define Z4CODES_QUATERNARY_CODE_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "z4codes/bigint.hpp"
#include "z4codes/errors.hpp"
#include "z4codes/z4_poly.hpp"
#include "z4codes/z4_vector.hpp"

namespace z4codes {

/// Default ceiling on the number of words any convenience enumeration is
/// willing to expand; callers can always pass their own cap.
inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

class QuaternaryCode {
   public:
    /// Builds the code spanned by the given generator rows (row-reduced on
    /// construction). Rows must all have length n.
    QuaternaryCode(std::size_t n, std::vector<Z4Vector> generators) : n_(n) {
        for (const Z4Vector& r : generators)
            if (r.size() != n) throw std::invalid_argument("length mismatch");
        reduce(std::move(generators));
    }

    /// The zero code {0} of length n.
    static QuaternaryCode zero(std::size_t n) { return QuaternaryCode(n, {}); }

    /// The cyclic code generated by g: the span of all n cyclic shifts of g
    /// modulo X^n - 1, coefficients as coordinates (position i = coefficient
    /// of X^i). When g divides X^n - 1 the non-wrapping shifts g, Xg, ...,
    /// X^{n-1-deg g}·g already span it; taking every shift keeps the output
    /// shift-invariant for arbitrary g too.
    static QuaternaryCode cyclic(const Z4Poly& g, std::size_t n) {
        if (g.degree() >= static_cast<int>(n)) throw std::invalid_argument("generator too long");
        std::vector<Z4Vector> rows;
        const std::size_t dg = static_cast<std::size_t>(g.degree() < 0 ? 0 : g.degree());
        for (std::size_t shift = 0; shift < n; ++shift) {
            Z4Vector row(n, 0);
            for (std::size_t i = 0; i <= dg; ++i) row[(shift + i) % n] = g.coeff(i);
            rows.push_back(std::move(row));
        }
        return QuaternaryCode(n, std::move(rows));
    }

    /// Appends an overall parity coordinate: each row gains a final entry
    /// equal to the negative of its coordinate sum, so every codeword of the
    /// result sums to 0 mod 4. The size is unchanged.
    QuaternaryCode extend_parity() const {
        std::vector<Z4Vector> rows = all_rows();
        for (Z4Vector& r : rows) r.push_back(z4_neg(coordinate_sum(r)));
        return QuaternaryCode(n_ + 1, std::move(rows));
    }

    std::size_t length() const noexcept { return n_; }
    std::size_t k1() const noexcept { return unit_rows_.size(); }
    std::size_t k2() const noexcept { return two_rows_.size(); }

    /// log2 |D| = 2·k1 + k2.
    unsigned log2_size() const noexcept {
        return static_cast<unsigned>(2 * unit_rows_.size() + two_rows_.size());
    }

    /// |D| = 4^k1 · 2^k2.
    BigInt size() const { return pow2(log2_size()); }

    /// Reduced generator rows in canonical order (ascending pivot column).
    std::vector<Z4Vector> all_rows() const {
        std::vector<Z4Vector> rows;
        rows.reserve(unit_rows_.size() + two_rows_.size());
        std::size_t u = 0, t = 0;
        while (u < unit_rows_.size() || t < two_rows_.size()) {
            const bool take_unit =
                t == two_rows_.size() || (u < unit_rows_.size() && unit_cols_[u] < two_cols_[t]);
            rows.push_back(take_unit ? unit_rows_[u++] : two_rows_[t++]);
        }
        return rows;
    }

    const std::vector<Z4Vector>& unit_rows() const noexcept { return unit_rows_; }
    const std::vector<Z4Vector>& two_rows() const noexcept { return two_rows_; }
    const std::vector<std::size_t>& unit_cols() const noexcept { return unit_cols_; }
    const std::vector<std::size_t>& two_cols() const noexcept { return two_cols_; }

    /// Membership test: v reduces to zero against the canonical rows.
    bool contains(const Z4Vector& v) const {
        if (v.size() != n_) throw std::invalid_argument("length mismatch");
        Z4Vector w(v);
        for (std::size_t l = 0; l < unit_rows_.size(); ++l) {
            const z4_t c = w[unit_cols_[l]];
            if (c) sub_scaled(w, c, unit_rows_[l]);
        }
        for (std::size_t i = 0; i < two_rows_.size(); ++i) {
            const z4_t e = w[two_cols_[i]];
            if (e & 1u) return false;
            if (e) sub_scaled(w, static_cast<z4_t>(e >> 1), two_rows_[i]);
        }
        return is_zero(w);
    }

    /// The dual {v : v·d = 0 mod 4 for every d}, computed as the kernel of
    /// the reduced generator matrix. For each free column the kernel gains a
    /// unit generator; for each two-pivot column, a two generator. Always
    /// |D| · |D⊥| = 4^n.
    QuaternaryCode dual() const {
        std::vector<char> pivot(n_, 0);
        for (std::size_t c : unit_cols_) pivot[c] = 1;
        for (std::size_t c : two_cols_) pivot[c] = 2;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < n_; ++c)
            if (!pivot[c]) free_cols.push_back(c);

        std::vector<Z4Vector> gens;
        gens.reserve(free_cols.size() + two_cols_.size());
        for (std::size_t fc : free_cols) {
            Z4Vector v(n_, 0);
            v[fc] = 1;
            // Two-pivot coordinates: forced mod 2 by the two rows.
            for (std::size_t i = 0; i < two_rows_.size(); ++i) {
                const z4_t cij = static_cast<z4_t>(two_rows_[i][fc] >> 1);  // entries are even
                v[two_cols_[i]] = z4_neg(cij);
            }
            // Unit coordinates: fully forced by the unit rows.
            for (std::size_t l = 0; l < unit_rows_.size(); ++l) {
                unsigned acc = 0;
                for (std::size_t i = 0; i < two_rows_.size(); ++i)
                    acc += static_cast<unsigned>(unit_rows_[l][two_cols_[i]]) * (two_rows_[i][fc] >> 1);
                acc += 4u - unit_rows_[l][fc];
                v[unit_cols_[l]] = static_cast<z4_t>(acc & 3u);
            }
            gens.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < two_cols_.size(); ++i) {
            Z4Vector w(n_, 0);
            w[two_cols_[i]] = 2;
            for (std::size_t l = 0; l < unit_rows_.size(); ++l)
                w[unit_cols_[l]] = z4_neg(z4_mul(2, unit_rows_[l][two_cols_[i]]));
            gens.push_back(std::move(w));
        }
        return QuaternaryCode(n_, std::move(gens));
    }

    /// Calls fn(codeword) exactly once per codeword, in a fixed order.
    /// An odometer over the reduced rows: unit-row coefficients run over Z4,
    /// two-row coefficients over {0,1}; each digit increment adds its row
    /// once (4·unit row = 0 and 2·even row = 0, so wraps cost nothing).
    template <typename Fn>
    void for_each_codeword(Fn&& fn) const {
        std::vector<const Z4Vector*> rows;
        std::vector<unsigned> radix;
        for (const Z4Vector& r : unit_rows_) {
            rows.push_back(&r);
            radix.push_back(4);
        }
        for (const Z4Vector& r : two_rows_) {
            rows.push_back(&r);
            radix.push_back(2);
        }
        Z4Vector current(n_, 0);
        std::vector<unsigned> digit(rows.size(), 0);
        for (;;) {
            fn(static_cast<const Z4Vector&>(current));
            std::size_t i = 0;
            while (i < rows.size()) {
                add_into(current, *rows[i]);
                if (++digit[i] < radix[i]) break;
                digit[i] = 0;  // the adds wrapped this digit back to zero
                ++i;
            }
            if (i == rows.size()) break;
        }
    }

    /// Materializes all codewords. Throws if |D| > cap.
    std::vector<Z4Vector> enumerate(std::uint64_t cap) const {
        check_cap(cap);
        std::vector<Z4Vector> words;
        words.reserve(static_cast<std::size_t>(std::uint64_t{1} << log2_size()));
        for_each_codeword([&](const Z4Vector& w) { words.push_back(w); });
        return words;
    }

    /// Throws cap_exceeded unless |D| ≤ cap.
    void check_cap(std::uint64_t cap) const {
        if (log2_size() >= 64 || (std::uint64_t{1} << log2_size()) > cap)
            throw cap_exceeded("code too large to enumerate");
    }

    /// True iff the two codes are the same subgroup of Z4^n: equal sizes and
    /// every generator of a contained in b.
    friend bool equal_as_sets(const QuaternaryCode& a, const QuaternaryCode& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("length mismatch");
        if (a.log2_size() != b.log2_size()) return false;
        for (const Z4Vector& r : a.all_rows())
            if (!b.contains(r)) return false;
        return true;
    }

    /// Least Lee weight among nonzero codewords of Lee weight ≤ w_max, or
    /// nullopt if there is none. Searches supports in ascending target
    /// weight; membership is orthogonality to every generator of the dual,
    /// so the cost depends on n and w_max, never on |D|.
    std::optional<unsigned> min_lee_weight_search(unsigned w_max) const {
        const std::vector<Z4Vector> checks = dual().all_rows();
        for (unsigned target = 1; target <= w_max; ++target) {
            std::vector<z4_t> syndrome(checks.size(), 0);
            if (weight_search(checks, syndrome, 0, target)) return target;
        }
        return std::nullopt;
    }

    friend bool operator==(const QuaternaryCode& a, const QuaternaryCode& b) {
        return a.n_ == b.n_ && a.unit_rows_ == b.unit_rows_ && a.unit_cols_ == b.unit_cols_ &&
               a.two_rows_ == b.two_rows_ && a.two_cols_ == b.two_cols_;
    }

    /// Writes the file form: "Z4 <n> <#rows>" then one digit-string row per
    /// line, canonical order. Reading back reproduces the bytes.
    void write(std::ostream& os) const {
        const std::vector<Z4Vector> rows = all_rows();
        os << "Z4 " << n_ << ' ' << rows.size() << '\n';
        for (const Z4Vector& r : rows) os << format_z4_vector(r) << '\n';
    }

    static QuaternaryCode read(std::istream& is) {
        std::string tag;
        std::size_t n = 0, k = 0;
        if (!(is >> tag >> n >> k) || tag != "Z4") throw parse_error("bad code file header");
        std::vector<Z4Vector> rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            std::string line;
            if (!(is >> line)) throw parse_error("missing code row");
            Z4Vector row = parse_z4_vector(line);
            if (row.size() != n) throw parse_error("row length mismatch");
            rows.push_back(std::move(row));
        }
        return QuaternaryCode(n, std::move(rows));
    }

   private:
    std::size_t n_ = 0;
    std::vector<Z4Vector> unit_rows_;
    std::vector<std::size_t> unit_cols_;  // ascending
    std::vector<Z4Vector> two_rows_;      // all entries even
    std::vector<std::size_t> two_cols_;   // ascending

    /// Two-phase Gaussian elimination over Z4. Phase 1 takes unit pivots
    /// column by column and clears each pivot column in every other row;
    /// a column passed over holds only even entries, and row operations
    /// keep it even, so the leftover rows are entirely even. Phase 2 takes
    /// two-pivots among those rows and reduces every other row's entry at a
    /// two-pivot column below 2. The result is canonical for the subgroup.
    void reduce(std::vector<Z4Vector> work) {
        std::vector<bool> used(work.size(), false);
        std::vector<std::pair<std::size_t, std::size_t>> unit_piv, two_piv;  // (row, col)
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t r = work.size();
            for (std::size_t i = 0; i < work.size(); ++i)
                if (!used[i] && z4_is_unit(work[i][col])) {
                    r = i;
                    break;
                }
            if (r == work.size()) continue;
            used[r] = true;
            if (work[r][col] == 3) work[r] = scaled(3, work[r]);
            for (std::size_t q = 0; q < work.size(); ++q) {
                if (q == r) continue;
                const z4_t c = work[q][col];
                if (c) sub_scaled(work[q], c, work[r]);
            }
            unit_piv.emplace_back(r, col);
        }
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t r = work.size();
            for (std::size_t i = 0; i < work.size(); ++i)
                if (!used[i] && work[i][col] == 2) {
                    r = i;
                    break;
                }
            if (r == work.size()) continue;
            used[r] = true;
            for (std::size_t q = 0; q < work.size(); ++q) {
                if (q == r) continue;
                const z4_t e = work[q][col];
                if (e >= 2) sub_scaled(work[q], static_cast<z4_t>(e >> 1), work[r]);
            }
            two_piv.emplace_back(r, col);
        }
        for (auto [r, col] : unit_piv) {
            unit_rows_.push_back(std::move(work[r]));
            unit_cols_.push_back(col);
        }
        for (auto [r, col] : two_piv) {
            two_rows_.push_back(std::move(work[r]));
            two_cols_.push_back(col);
        }
    }

    /// Depth-first search over supports (ascending positions) and entry
    /// values {1,3} (Lee 1) and {2} (Lee 2), with the syndrome against the
    /// dual rows maintained incrementally. True iff some vector of Lee
    /// weight exactly `remaining` (from this frame on) is orthogonal to all
    /// checks.
    bool weight_search(const std::vector<Z4Vector>& checks, std::vector<z4_t>& syndrome,
                       std::size_t from, unsigned remaining) const {
        if (remaining == 0) {
            for (z4_t s : syndrome)
                if (s) return false;
            return true;
        }
        // Each remaining position contributes Lee weight at most 2.
        if ((n_ - from) * 2 < remaining) return false;
        for (std::size_t p = from; p < n_; ++p) {
            for (z4_t val : {z4_t{1}, z4_t{3}, z4_t{2}}) {
                const unsigned w = lee_weight(val);
                if (w > remaining) continue;
                for (std::size_t c = 0; c < checks.size(); ++c)
                    syndrome[c] = z4_add(syndrome[c], z4_mul(val, checks[c][p]));
                if (weight_search(checks, syndrome, p + 1, remaining - w)) return true;
                for (std::size_t c = 0; c < checks.size(); ++c)
                    syndrome[c] = z4_sub(syndrome[c], z4_mul(val, checks[c][p]));
            }
        }
        return false;
    }
};

}  // namespace z4codes

#endif
