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
 * @file cli.hpp
 * @brief Command-line surface over the whole library. run_cli() parses an
 *        argument vector and executes one subcommand, writing results to
 *        the given streams.
 *
 * Exit codes: 0 = success; 1 = a verification ran and failed; 2 = usage or
 * input error (bad flags, unreadable files, parse failures, caps exceeded).
 *
 * All polynomial digit strings on the command line are lowest degree
 * first: "323001" is 3 + 2X + 3X^2 + X^5. Code files use the formats
 * written by QuaternaryCode::write ("Z4 <n> <rows>") and BinaryCode::write
 * ("F2 <n> <rows> <explicit|linear>"); weight enumerators travel as JSON
 * with arbitrary-precision coefficients kept as decimal strings.
 */

#ifndef Z4CODES_CLI_HPP
#define Z4CODES_CLI_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "z4codes/errors.hpp"
#include "z4codes/families.hpp"
#include "z4codes/galois_ring.hpp"
#include "z4codes/gray.hpp"
#include "z4codes/quaternary_code.hpp"
#include "z4codes/weight_enumerators.hpp"
#include "z4codes/z4_poly.hpp"

namespace z4codes {

namespace cli_detail {

using CodeFile = std::variant<QuaternaryCode, BinaryCode>;

/// Reads a code file, dispatching on the "Z4"/"F2" header tag.
inline CodeFile read_code_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open file: " + path);
    std::string tag;
    if (!(is >> tag)) throw parse_error("bad code file header");
    is.seekg(0);
    if (tag == "Z4") return QuaternaryCode::read(is);
    if (tag == "F2") return BinaryCode::read(is);
    throw parse_error("bad code file header");
}

inline const QuaternaryCode& require_z4(const CodeFile& f) {
    if (!std::holds_alternative<QuaternaryCode>(f))
        throw std::invalid_argument("quaternary code file required");
    return std::get<QuaternaryCode>(f);
}

inline const BinaryCode& require_f2(const CodeFile& f) {
    if (!std::holds_alternative<BinaryCode>(f))
        throw std::invalid_argument("binary code file required");
    return std::get<BinaryCode>(f);
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open file: " + path);
    try {
        nlohmann::json j;
        is >> j;
        return j;
    } catch (const nlohmann::json::exception&) {
        throw parse_error("bad enumerator JSON");
    }
}

/// Writes through a closure either to the --out path or to the session
/// stream.
template <typename Fn>
void emit(const std::string& out_path, std::ostream& fallback, Fn&& write) {
    if (out_path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw parse_error("cannot open file: " + out_path);
    write(os);
}

inline std::optional<BinPoly> parse_h2(const std::string& digits) {
    if (digits.empty()) return std::nullopt;
    return BinPoly::from_digits(digits);
}

inline BigInt parse_size(const std::string& digits, const BigInt& fallback) {
    if (digits.empty()) return fallback;
    try {
        const BigInt s(digits);
        if (s <= 0) throw std::invalid_argument("size must be positive");
        return s;
    } catch (const std::runtime_error&) {
        throw parse_error("bad size: " + digits);
    }
}

inline int verdict(std::ostream& out, const std::string& label, bool ok) {
    out << label << ": " << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

}  // namespace cli_detail

/// Parses and runs one command. `args` holds the arguments without the
/// program name, in the order typed.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    using cli_detail::emit;
    using cli_detail::parse_h2;
    using cli_detail::read_code_file;
    using cli_detail::require_f2;
    using cli_detail::require_z4;
    using cli_detail::verdict;

    CLI::App app{"quaternary (Z4) code toolkit"};
    app.name("z4code");
    app.require_subcommand(1);

    // Shared option storage. Digit strings stay strings until dispatch so
    // that parse failures surface as input errors, not flag errors.
    std::string h2_digits, g_digits, in_path, out_path, size_digits;
    unsigned m = 0, r = 0, wmax = 0, workers = 1;
    std::size_t length_n = 0;
    std::uint64_t cap = default_enumeration_cap;
    bool extend = false, as_json = false;

    CLI::App* lift = app.add_subcommand(
        "lift", "lift a binary primitive polynomial to Z4");
    lift->add_option("--h2", h2_digits,
                     "binary polynomial, lowest-first digits")->required();

    CLI::App* genpoly = app.add_subcommand(
        "genpoly", "generator polynomial of the degree-m extended cyclic code");
    genpoly->add_option("--m", m, "degree")->required();
    genpoly->add_option("--h2", h2_digits, "binary primitive polynomial");

    CLI::App* build =
        app.add_subcommand("build", "construct a named code and print it");
    build->require_subcommand(1);
    CLI::App* build_kerdock =
        build->add_subcommand("kerdock", "quaternary Kerdock-type code");
    CLI::App* build_preparata =
        build->add_subcommand("preparata", "quaternary Preparata-type code");
    for (CLI::App* sub : {build_kerdock, build_preparata}) {
        sub->add_option("--m", m, "degree")->required();
        sub->add_option("--h2", h2_digits, "binary primitive polynomial");
        sub->add_option("--out", out_path, "output file (default stdout)");
    }
    CLI::App* build_octacode =
        build->add_subcommand("octacode", "the self-dual length-8 code");
    build_octacode->add_option("--out", out_path, "output file");
    CLI::App* build_nr =
        build->add_subcommand("nr", "the Nordstrom-Robinson binary code");
    build_nr->add_option("--out", out_path, "output file");
    CLI::App* build_rm =
        build->add_subcommand("rm", "binary Reed-Muller code RM(r, m)");
    build_rm->add_option("--r", r, "order")->required();
    build_rm->add_option("--m", m, "number of variables")->required();
    build_rm->add_option("--out", out_path, "output file");
    CLI::App* build_cyclic =
        build->add_subcommand("cyclic", "quaternary cyclic code from a generator");
    build_cyclic->add_option("--g", g_digits, "generator polynomial digits")
        ->required();
    build_cyclic->add_option("--n", length_n, "code length")->required();
    build_cyclic->add_flag("--extend", extend, "append an overall parity digit");
    build_cyclic->add_option("--out", out_path, "output file");

    CLI::App* dual = app.add_subcommand("dual", "Z4-dual of a quaternary code");
    dual->add_option("--in", in_path, "quaternary code file")->required();
    dual->add_option("--out", out_path, "output file");

    CLI::App* gray =
        app.add_subcommand("gray", "binary image of a quaternary code");
    gray->add_option("--in", in_path, "quaternary code file")->required();
    gray->add_option("--cap", cap, "enumeration cap");
    gray->add_option("--out", out_path, "output file");

    CLI::App* swe_cmd = app.add_subcommand(
        "swe", "symmetrized weight enumerator of a quaternary code (JSON)");
    swe_cmd->add_option("--in", in_path, "quaternary code file")->required();
    swe_cmd->add_option("--cap", cap, "enumeration cap");
    swe_cmd->add_option("--out", out_path, "output file");

    CLI::App* hwe_cmd = app.add_subcommand(
        "hwe",
        "Hamming weight enumerator (of a binary code directly, or of the "
        "binary image of a quaternary code through its census) as JSON");
    hwe_cmd->add_option("--in", in_path, "code file")->required();
    hwe_cmd->add_option("--cap", cap, "enumeration cap");
    hwe_cmd->add_option("--out", out_path, "output file");

    CLI::App* macwilliams =
        app.add_subcommand("macwilliams", "dual-code weight enumerator transforms");
    macwilliams->require_subcommand(1);
    CLI::App* mw_swe = macwilliams->add_subcommand(
        "swe", "transform a symmetrized enumerator to the dual's");
    CLI::App* mw_binary = macwilliams->add_subcommand(
        "binary", "transform a Hamming enumerator to the dual's");
    for (CLI::App* sub : {mw_swe, mw_binary}) {
        sub->add_option("--in", in_path, "enumerator JSON file")->required();
        sub->add_option("--size", size_digits,
                        "size of the original code (default: enumerator mass)");
        sub->add_option("--out", out_path, "output file");
    }

    CLI::App* mindist =
        app.add_subcommand("mindist", "minimum Lee/Hamming distance");
    mindist->add_option("--in", in_path, "code file")->required();
    mindist->add_option("--cap", cap, "enumeration cap");
    mindist->add_option("--wmax", wmax,
                        "bound for the low-weight search (0 = enumerate)");
    mindist->add_option("--workers", workers, "worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* span = app.add_subcommand(
        "span", "F2-linear span of the binary image of a quaternary code");
    span->add_option("--in", in_path, "quaternary code file")->required();
    span->add_option("--out", out_path, "output file");

    CLI::App* check = app.add_subcommand("check", "run a verification");
    check->require_subcommand(1);
    CLI::App* check_selfdual =
        check->add_subcommand("self-dual", "is the code its own Z4-dual?");
    check_selfdual->add_option("--in", in_path, "quaternary code file")
        ->required();
    CLI::App* check_imglin = check->add_subcommand(
        "image-linear", "is the binary image of the code linear?");
    check_imglin->add_option("--in", in_path, "quaternary code file")->required();
    CLI::App* check_swap = check->add_subcommand(
        "swap", "does the half-swap stay inside the doubled code?");
    check_swap->add_option("--in", in_path, "binary linear code file")->required();
    CLI::App* check_di = check->add_subcommand(
        "distance-invariant", "is the distance profile the same from every word?");
    check_di->add_option("--in", in_path, "binary code file")->required();
    check_di->add_option("--cap", cap, "enumeration cap");
    CLI::App* check_family = check->add_subcommand(
        "family", "verify the degree-m Kerdock/Preparata pair");
    check_family->add_option("--m", m, "degree (odd, >= 3)")->required();
    check_family->add_option("--h2", h2_digits, "binary primitive polynomial");
    check_family->add_option("--workers", workers, "worker threads")
        ->check(CLI::PositiveNumber);
    check_family->add_flag("--json", as_json, "emit the report as JSON");
    CLI::App* check_trace = check->add_subcommand(
        "trace-crosscheck",
        "compare the cyclic pipeline against the trace description");
    check_trace->add_option("--m", m, "degree")->required();
    check_trace->add_option("--h2", h2_digits, "binary primitive polynomial");
    check_trace->add_option("--cap", cap, "enumeration cap");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lift) {
            out << hensel_lift(BinPoly::from_digits(h2_digits)).digits() << "\n";
            return 0;
        }
        if (*genpoly) {
            const Z4Poly h = hensel_lift(detail::resolve_h2(m, parse_h2(h2_digits)));
            out << generator_poly_g(h, m).digits() << "\n";
            return 0;
        }
        if (*build_kerdock || *build_preparata) {
            const QuaternaryCode code =
                *build_kerdock ? kerdock_quaternary(m, parse_h2(h2_digits))
                               : preparata_quaternary(m, parse_h2(h2_digits));
            emit(out_path, out, [&](std::ostream& os) { code.write(os); });
            return 0;
        }
        if (*build_octacode) {
            const QuaternaryCode code = octacode();
            emit(out_path, out, [&](std::ostream& os) { code.write(os); });
            return 0;
        }
        if (*build_nr) {
            const BinaryCode code = nordstrom_robinson();
            emit(out_path, out, [&](std::ostream& os) { code.write(os); });
            return 0;
        }
        if (*build_rm) {
            const BinaryCode code = reed_muller(r, m);
            emit(out_path, out, [&](std::ostream& os) { code.write(os); });
            return 0;
        }
        if (*build_cyclic) {
            QuaternaryCode code =
                QuaternaryCode::cyclic(Z4Poly::from_digits(g_digits), length_n);
            if (extend) code = code.extend_parity();
            emit(out_path, out, [&](std::ostream& os) { code.write(os); });
            return 0;
        }
        if (*dual) {
            const QuaternaryCode d = require_z4(read_code_file(in_path)).dual();
            emit(out_path, out, [&](std::ostream& os) { d.write(os); });
            return 0;
        }
        if (*gray) {
            const BinaryCode image =
                gray_image(require_z4(read_code_file(in_path)), cap);
            emit(out_path, out, [&](std::ostream& os) { image.write(os); });
            return 0;
        }
        if (*swe_cmd) {
            const TrivariateWeightEnumerator e =
                swe(require_z4(read_code_file(in_path)), cap);
            emit(out_path, out,
                 [&](std::ostream& os) { os << e.to_json().dump(2) << "\n"; });
            return 0;
        }
        if (*hwe_cmd) {
            const cli_detail::CodeFile f = read_code_file(in_path);
            const BivariateWeightEnumerator e =
                std::holds_alternative<QuaternaryCode>(f)
                    ? hwe_from_swe(swe(std::get<QuaternaryCode>(f), cap))
                    : hwe_direct(std::get<BinaryCode>(f), cap);
            emit(out_path, out,
                 [&](std::ostream& os) { os << e.to_json().dump(2) << "\n"; });
            return 0;
        }
        if (*mw_swe) {
            const TrivariateWeightEnumerator e =
                TrivariateWeightEnumerator::from_json(
                    cli_detail::read_json_file(in_path));
            const TrivariateWeightEnumerator d =
                macwilliams_swe(e, cli_detail::parse_size(size_digits, e.mass()));
            emit(out_path, out,
                 [&](std::ostream& os) { os << d.to_json().dump(2) << "\n"; });
            return 0;
        }
        if (*mw_binary) {
            const BivariateWeightEnumerator e = BivariateWeightEnumerator::from_json(
                cli_detail::read_json_file(in_path));
            const BivariateWeightEnumerator d = binary_macwilliams(
                e, cli_detail::parse_size(size_digits, e.mass()));
            emit(out_path, out,
                 [&](std::ostream& os) { os << d.to_json().dump(2) << "\n"; });
            return 0;
        }
        if (*mindist) {
            const cli_detail::CodeFile f = read_code_file(in_path);
            if (std::holds_alternative<QuaternaryCode>(f)) {
                const QuaternaryCode& d = std::get<QuaternaryCode>(f);
                if (wmax > 0) {
                    const std::optional<unsigned> w = d.min_lee_weight_search(wmax);
                    if (w)
                        out << *w << "\n";
                    else
                        out << "none at weight <= " << wmax << "\n";
                } else {
                    const unsigned w = swe(d, cap).min_lee_weight();
                    if (w == 0)
                        out << "no nonzero codewords\n";
                    else
                        out << w << "\n";
                }
                return 0;
            }
            const BinaryCode& c = std::get<BinaryCode>(f);
            const unsigned bound =
                wmax > 0 ? wmax : static_cast<unsigned>(c.length());
            const std::optional<unsigned> w =
                min_distance_binary(c, cap, bound, workers);
            if (w)
                out << *w << "\n";
            else
                out << "none at weight <= " << bound << "\n";
            return 0;
        }
        if (*span) {
            const BinaryCode s =
                gray_image_linear_span(require_z4(read_code_file(in_path)));
            emit(out_path, out, [&](std::ostream& os) { s.write(os); });
            return 0;
        }
        if (*check_selfdual) {
            const QuaternaryCode d = require_z4(read_code_file(in_path));
            return verdict(out, "self-dual", equal_as_sets(d, d.dual()));
        }
        if (*check_imglin) {
            return verdict(out, "image linear",
                           image_is_linear(require_z4(read_code_file(in_path))));
        }
        if (*check_swap) {
            return verdict(out, "swap condition holds",
                           swap_condition_holds(require_f2(read_code_file(in_path))));
        }
        if (*check_di) {
            return verdict(
                out, "distance invariant",
                is_distance_invariant(require_f2(read_code_file(in_path)), cap));
        }
        if (*check_family) {
            const FamilyReport report =
                verify_family(m, parse_h2(h2_digits), workers);
            if (as_json)
                out << report.to_json().dump(2) << "\n";
            else
                out << report.to_text();
            return report.all_pass() ? 0 : 1;
        }
        if (*check_trace) {
            return verdict(out, "trace crosscheck",
                           trace_crosscheck(m, parse_h2(h2_digits), cap));
        }
    } catch (const cap_exceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand executed\n";
    return 2;
}

}  // namespace z4codes

#endif  // Z4CODES_CLI_HPP
