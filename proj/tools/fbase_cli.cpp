// Command-line front end: conversions, varying-radix arithmetic,
// coefficient queries, digraph export and tiling enumeration.

#include <fbase/fbase.hpp>
#include <fbase/json.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fbase;

Nat parse_value(const std::string& text) {
    if (text.empty()) throw ParseError(0, "expected a decimal value");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError(i, "expected a decimal digit at offset " + std::to_string(i));
        }
    }
    return Nat(text);
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Accepts the parenthesized digit string or the numeral JSON object.
Numeral parse_numeral_arg(const std::string& text, const Sequence& f, std::size_t origin) {
    const std::string t = trimmed(text);
    if (!t.empty() && t.front() == '{') {
        return numeral_from_json(nlohmann::json::parse(t));
    }
    return parse_numeral(t, f, origin);
}

std::string numeral_output(const Numeral& x, const std::string& format) {
    if (format == "json") return numeral_to_json(x).dump();
    return format_numeral(x);
}

// Runs fn on the positional argument, or on every non-empty stdin line
// when the positional was omitted. Batch output is buffered so a failing
// line produces no partial output.
void run_single_or_batch(const std::optional<std::string>& arg,
                         const std::function<std::string(const std::string&)>& fn) {
    if (arg) {
        std::cout << fn(*arg) << "\n";
        return;
    }
    std::ostringstream buffered;
    std::string line;
    while (std::getline(std::cin, line)) {
        const std::string t = trimmed(line);
        if (!t.empty()) buffered << fn(t) << "\n";
    }
    std::cout << buffered.str();
}

struct CommonOptions {
    std::string sequence_spec = "natural";
    std::size_t origin = 1;
    std::string format = "text";

    Sequence sequence() const { return Sequence::parse_spec(sequence_spec); }
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_origin = true) {
    cmd->add_option("--sequence", opts.sequence_spec,
                    "sequence spec: natural | fibonacci | const:<p> | gauss:<q> | file:<path>");
    if (with_origin) cmd->add_option("--origin", opts.origin, "origin index k >= 1")->check(CLI::PositiveNumber);
}

std::string point_to_text(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ", ";
        out += p[i].str();
    }
    out += ")";
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"varying-radix numeral systems and hyper-box tilings"};
    app.require_subcommand(1);

    // encode ---------------------------------------------------------
    auto enc = std::make_shared<CommonOptions>();
    auto enc_value = std::make_shared<std::optional<std::string>>();
    {
        CLI::App* cmd = app.add_subcommand("encode", "natural number -> numeral");
        add_common(cmd, *enc);
        cmd->add_option("--format", enc->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("value", *enc_value, "decimal value; omit to convert stdin line by line");
        cmd->callback([enc, enc_value] {
            const Sequence f = enc->sequence();
            run_single_or_batch(*enc_value, [&](const std::string& text) {
                return numeral_output(encode(parse_value(text), f, enc->origin), enc->format);
            });
        });
    }

    // decode ---------------------------------------------------------
    auto dec = std::make_shared<CommonOptions>();
    auto dec_value = std::make_shared<std::optional<std::string>>();
    {
        CLI::App* cmd = app.add_subcommand("decode", "numeral -> natural number");
        add_common(cmd, *dec);
        cmd->add_option("--format", dec->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("numeral", *dec_value, "\"(c_m ... c_0)_F\" or numeral JSON; omit for stdin");
        cmd->callback([dec, dec_value] {
            const Sequence f = dec->sequence();
            run_single_or_batch(*dec_value, [&](const std::string& text) {
                const Nat value = decode(parse_numeral_arg(text, f, dec->origin));
                if (dec->format == "json") {
                    return nlohmann::json{{"value", value.str()}}.dump();
                }
                return value.str();
            });
        });
    }

    // add / succ -----------------------------------------------------
    auto addo = std::make_shared<CommonOptions>();
    auto add_args = std::make_shared<std::vector<std::string>>();
    {
        CLI::App* cmd = app.add_subcommand("add", "sum of two numerals");
        add_common(cmd, *addo);
        cmd->add_option("--format", addo->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("numerals", *add_args, "two numerals")->expected(2);
        cmd->callback([addo, add_args] {
            const Sequence f = addo->sequence();
            const Numeral a = parse_numeral_arg((*add_args)[0], f, addo->origin);
            const Numeral b = parse_numeral_arg((*add_args)[1], f, addo->origin);
            std::cout << numeral_output(add(a, b), addo->format) << "\n";
        });
    }

    auto succo = std::make_shared<CommonOptions>();
    auto succ_arg = std::make_shared<std::string>();
    {
        CLI::App* cmd = app.add_subcommand("succ", "numeral + 1");
        add_common(cmd, *succo);
        cmd->add_option("--format", succo->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("numeral", *succ_arg, "numeral")->required();
        cmd->callback([succo, succ_arg] {
            const Sequence f = succo->sequence();
            std::cout << numeral_output(successor(parse_numeral_arg(*succ_arg, f, succo->origin)),
                                        succo->format)
                      << "\n";
        });
    }

    // zeckendorf -----------------------------------------------------
    auto zeck_format = std::make_shared<std::string>("text");
    auto zeck_value = std::make_shared<std::string>();
    {
        CLI::App* cmd = app.add_subcommand("zeckendorf", "sum of non-consecutive Fibonacci numbers");
        cmd->add_option("--format", *zeck_format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("value", *zeck_value, "decimal value")->required();
        cmd->callback([zeck_format, zeck_value] {
            const Nat value = parse_value(*zeck_value);
            const std::vector<Nat> terms = zeckendorf_terms(value);
            if (*zeck_format == "json") {
                nlohmann::json jterms = nlohmann::json::array();
                for (const Nat& t : terms) jterms.push_back(t.str());
                std::cout << nlohmann::json{{"value", value.str()},
                                            {"terms", std::move(jterms)},
                                            {"digits_lsb", zeckendorf_digits(value)}}
                                 .dump()
                          << "\n";
                return;
            }
            if (terms.empty()) {
                std::cout << "0\n";
                return;
            }
            std::string out;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i) out += "+";
                out += terms[i].str();
            }
            std::cout << out << "\n";
        });
    }

    // fnomial --------------------------------------------------------
    auto fno = std::make_shared<CommonOptions>();
    auto fn_args = std::make_shared<std::vector<std::size_t>>();
    {
        CLI::App* cmd = app.add_subcommand("fnomial", "coefficient n_F! / (k_F! (n-k)_F!)");
        add_common(cmd, *fno, /*with_origin=*/false);
        cmd->add_option("--format", fno->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("indices", *fn_args, "n k")->expected(2);
        cmd->callback([fno, fn_args] {
            const Rat value = fnomial(fno->sequence(), (*fn_args)[0], (*fn_args)[1]);
            const Nat num = boost::multiprecision::numerator(value);
            const Nat den = boost::multiprecision::denominator(value);
            if (fno->format == "json") {
                std::cout << nlohmann::json{{"numerator", num.str()},
                                            {"denominator", den.str()},
                                            {"integral", is_integral(value)}}
                                 .dump()
                          << "\n";
            } else if (is_integral(value)) {
                std::cout << num.str() << "\n";
            } else {
                std::cout << num.str() << "/" << den.str() << "\n";
            }
        });
    }

    // admissible -----------------------------------------------------
    auto admo = std::make_shared<CommonOptions>();
    auto adm_n = std::make_shared<std::size_t>(0);
    {
        CLI::App* cmd = app.add_subcommand("admissible", "are all coefficients up to n_max integers?");
        add_common(cmd, *admo, /*with_origin=*/false);
        cmd->add_option("--format", admo->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("n_max", *adm_n, "scan bound")->required();
        cmd->callback([admo, adm_n] {
            const AdmissibilityReport report = is_admissible(admo->sequence(), *adm_n);
            if (admo->format == "json") {
                nlohmann::json j{{"admissible", report.admissible}};
                if (report.first_failure) {
                    j["witness"] = {{"n", report.first_failure->first}, {"k", report.first_failure->second}};
                }
                std::cout << j.dump() << "\n";
            } else if (report.admissible) {
                std::cout << "yes\n";
            } else {
                std::cout << "no (n=" << report.first_failure->first << ", k=" << report.first_failure->second
                          << ")\n";
            }
        });
    }

    // hasse ----------------------------------------------------------
    auto haso = std::make_shared<CommonOptions>();
    auto has_n = std::make_shared<std::size_t>(0);
    {
        CLI::App* cmd = app.add_subcommand("hasse", "cover digraph of levels 0..n");
        add_common(cmd, *haso, /*with_origin=*/false);
        cmd->add_option("--format", haso->format, "text | dot | json")
            ->check(CLI::IsMember({"text", "dot", "json"}));
        cmd->add_option("n", *has_n, "top level")->required();
        cmd->callback([haso, has_n] {
            const LevelDigraph g = build_hasse(haso->sequence(), *has_n);
            if (haso->format == "dot") {
                std::cout << g.to_dot();
            } else if (haso->format == "json") {
                std::cout << digraph_to_json(g).dump() << "\n";
            } else {
                for (std::size_t s = g.first_level(); s <= g.last_level(); ++s) {
                    std::cout << "level " << s << ": width " << g.width(s) << "\n";
                }
                std::cout << "vertices: " << g.vertex_count() << "\narcs: " << g.arc_count() << "\n";
            }
        });
    }

    // chains ---------------------------------------------------------
    auto cho = std::make_shared<CommonOptions>();
    auto ch_args = std::make_shared<std::vector<std::size_t>>();
    auto ch_count_only = std::make_shared<bool>(false);
    {
        CLI::App* cmd = app.add_subcommand("chains", "maximal-chain codes of the box between levels k and n");
        add_common(cmd, *cho, /*with_origin=*/false);
        cmd->add_option("--format", cho->format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--count-only", *ch_count_only, "print only the chain count");
        cmd->add_option("levels", *ch_args, "k n")->expected(2);
        cmd->callback([cho, ch_args, ch_count_only] {
            const HyperBox box(cho->sequence(), (*ch_args)[0], (*ch_args)[1]);
            if (*ch_count_only) {
                std::cout << count_max_chains(box).str() << "\n";
                return;
            }
            box.for_each_point([&](const Point& p) {
                if (cho->format == "json") {
                    nlohmann::json j = nlohmann::json::array();
                    for (const Nat& c : p) j.push_back(detail::to_u64(c, "coordinate"));
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << point_to_text(p) << "\n";
                }
                return true;
            });
        });
    }

    // tilings --------------------------------------------------------
    auto tio = std::make_shared<CommonOptions>();
    auto ti_args = std::make_shared<std::vector<std::size_t>>();
    auto ti_count_only = std::make_shared<bool>(false);
    auto ti_intervals = std::make_shared<bool>(false);
    auto ti_limit = std::make_shared<std::size_t>(64);
    auto ti_render = std::make_shared<std::string>();
    auto ti_index = std::make_shared<std::size_t>(0);
    auto ti_out = std::make_shared<std::string>("tiling.svg");
    {
        CLI::App* cmd = app.add_subcommand("tilings", "exhaustive tilings of the box between levels k and n");
        add_common(cmd, *tio, /*with_origin=*/false);
        cmd->add_option("--format", tio->format, "text | json | svg (svg renders like --render svg)")
            ->check(CLI::IsMember({"text", "json", "svg"}));
        cmd->add_flag("--count-only", *ti_count_only, "print only the tiling count");
        cmd->add_flag("--intervals-only", *ti_intervals, "restrict tiles to contiguous index runs");
        cmd->add_option("--limit", *ti_limit, "maximum box point count for the search (default 64)");
        cmd->add_option("--render", *ti_render, "render one tiling: text | svg")
            ->check(CLI::IsMember({"text", "svg"}));
        cmd->add_option("--index", *ti_index, "index of the tiling to render (default 0)");
        cmd->add_option("--out", *ti_out, "output file for --render svg (default tiling.svg)");
        cmd->add_option("levels", *ti_args, "k n")->expected(2);
        cmd->callback([tio, ti_args, ti_count_only, ti_intervals, ti_limit, ti_render, ti_index, ti_out] {
            const HyperBox box(tio->sequence(), (*ti_args)[0], (*ti_args)[1]);
            TilingOptions opts;
            opts.max_points = *ti_limit;
            opts.intervals_only = *ti_intervals;
            if (tio->format == "svg" && ti_render->empty()) *ti_render = "svg";

            if (*ti_count_only) {
                std::cout << count_tilings(box, opts).str() << "\n";
                return;
            }
            if (!ti_render->empty()) {
                std::optional<Tiling> picked;
                std::size_t seen = 0;
                for_each_tiling(box, opts, [&](const Tiling& t) {
                    if (seen++ == *ti_index) {
                        picked = t;
                        return false;
                    }
                    return true;
                });
                if (!picked) {
                    throw InvalidRange("tiling index " + std::to_string(*ti_index) + " out of range (" +
                                       std::to_string(seen) + " tilings)");
                }
                if (*ti_render == "svg") {
                    std::ofstream out(*ti_out);
                    if (!out) throw Error("cannot open output file: " + *ti_out);
                    out << render_svg(*picked);
                } else {
                    std::cout << render_text_grid(*picked);
                }
                return;
            }
            std::size_t index = 0;
            for_each_tiling(box, opts, [&](const Tiling& t) {
                if (tio->format == "json") {
                    std::cout << tiling_to_json(t).dump() << "\n";
                } else if (box.dimension_count() <= 2) {
                    std::cout << "# tiling " << index << "\n" << render_text_grid(t) << "\n";
                } else {
                    std::cout << tiling_to_json(t).dump() << "\n";
                }
                ++index;
                return true;
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const NonRepresentable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SearchLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
