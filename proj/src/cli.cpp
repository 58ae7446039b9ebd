#include "chowmot/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowmot/motive.hpp"
#include "chowmot/ncmot.hpp"
#include "chowmot/nu.hpp"
#include "chowmot/orbit.hpp"
#include "chowmot/verify.hpp"

namespace chowmot {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

/// "P3", "3" and "P1xP2" all name a product of projective spaces.
Variety parse_variety_or_dimension(const std::string& text) {
    const std::string t = trim(text);
    if (!t.empty() && std::isdigit(static_cast<unsigned char>(t[0]))) {
        bool digits_only = true;
        for (char ch : t) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) digits_only = false;
        }
        if (digits_only) return Variety::projective(std::stoi(t));
    }
    return parse_variety(t);
}

/// Summands separated by '+': "1", "1(i)", "L", "L^k", or a variety name,
/// which expands to the verified Tate form of its motive.
MotiveSum parse_tate_sum(const std::string& text) {
    std::vector<Motive> summands;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        const std::string raw = text.substr(pos, next - pos);
        const std::string token = trim(raw);
        if (token.empty()) {
            throw ParseError("empty summand in Tate sum '" + text + "'", pos);
        }
        if (token == "1") {
            summands.push_back(Motive::unit(0));
        } else if (token == "L") {
            summands.push_back(Motive::unit(-1));
        } else if (token.rfind("1(", 0) == 0 && token.back() == ')') {
            const std::string inner = token.substr(2, token.size() - 3);
            try {
                summands.push_back(Motive::unit(std::stoi(inner)));
            } catch (const std::exception&) {
                throw ParseError("bad twist in summand '" + token + "'", pos);
            }
        } else if (token.rfind("L^", 0) == 0) {
            try {
                summands.push_back(Motive::unit(-std::stoi(token.substr(2))));
            } catch (const std::exception&) {
                throw ParseError("bad power in summand '" + token + "'", pos);
            }
        } else if (token == "pt" || token[0] == 'P') {
            for (const auto& m : verified_tate_form(parse_variety(token)).summands()) {
                summands.push_back(m);
            }
        } else {
            throw ParseError("unknown summand '" + token + "'", pos);
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    return MotiveSum(std::move(summands));
}

struct ReportSink {
    std::ostream& out;
    bool as_json = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    /// JSON reports are byte-deterministic for fixed argv and seed, so the
    /// elapsed time is reported only in text mode.
    void emit(const json& report, const std::string& text) {
        if (as_json) {
            out << report.dump(2) << "\n";
        } else {
            out << text;
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start);
            out << "elapsed: " << elapsed.count() << " ms\n";
        }
    }
};

json sweep_json(const std::string& command, const PropertyResult& r, std::uint64_t seed,
                json extra) {
    extra["command"] = command;
    extra["seed"] = seed;
    extra["cases"] = r.cases;
    extra["failures"] = r.failures;
    extra["ok"] = r.ok();
    extra["first_counterexample"] = r.first_counterexample;
    return extra;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chowmot: exact calculator for Chow rings, Riemann-Roch and motive "
                 "comparisons on products of projective spaces"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report instead of text");

    std::uint64_t seed = 0;
    int count = 100;

    int exit_code = 0;
    std::function<void()> action;

    // chow-eval ------------------------------------------------------------
    std::string ce_variety;
    std::string ce_expr;
    auto* chow_eval = app.add_subcommand("chow-eval", "evaluate a Chow-ring expression");
    chow_eval->add_option("variety", ce_variety, "ambient variety, e.g. P2 or P1xP1")
        ->required();
    chow_eval->add_option("expr", ce_expr, "ring expression in h1..hk")->required();
    chow_eval->callback([&] {
        action = [&] {
            const Variety x = parse_variety(ce_variety);
            const ChowClass value = parse_chow_class(ce_expr, x);
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "chow-eval"},
                           {"variety", to_string(x)},
                           {"expr", ce_expr},
                           {"result", to_string(value)}},
                      to_string(value) + "\n");
        };
    });

    // euler ------------------------------------------------------------------
    std::string eu_variety, eu_e, eu_f;
    auto* euler = app.add_subcommand("euler", "Euler pairing chi(E, F) of two K-classes");
    euler->add_option("variety", eu_variety)->required();
    euler->add_option("e", eu_e, "first K-class, e.g. \"O\"")->required();
    euler->add_option("f", eu_f, "second K-class, e.g. \"O(3)\"")->required();
    euler->callback([&] {
        action = [&] {
            const Variety x = parse_variety(eu_variety);
            const KClass e = parse_k_class(eu_e, x);
            const KClass f = parse_k_class(eu_f, x);
            const Rational chi = euler_pairing(e, f);
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "euler"},
                           {"variety", to_string(x)},
                           {"e", to_string(e)},
                           {"f", to_string(f)},
                           {"result", to_string(chi)}},
                      to_string(chi) + "\n");
        };
    });

    // motive-decompose -------------------------------------------------------
    std::string md_spec;
    auto* decompose = app.add_subcommand(
        "motive-decompose", "decompose the motive of a product of projective spaces");
    decompose->add_option("variety", md_spec, "P^n dimension or a product, e.g. 3 or P1xP2")
        ->required();
    decompose->callback([&] {
        action = [&] {
            const Variety x = parse_variety_or_dimension(md_spec);
            const auto pieces = decompose_product(x);
            ChowCorrespondence sum = ChowCorrespondence::zero(x, x);
            json summands = json::array();
            std::ostringstream text;
            for (const auto& piece : pieces) {
                const bool verified = check_iso_pair(piece.to_tate, piece.from_tate);
                sum += piece.summand.projector();
                summands.push_back(json{{"projector", to_string(piece.summand.projector().kernel())},
                                        {"tate", to_string(piece.tate)},
                                        {"witness_to", to_string(piece.to_tate.cls())},
                                        {"witness_from", to_string(piece.from_tate.cls())},
                                        {"verified", verified}});
                text << "pi = " << to_string(piece.summand.projector().kernel()) << "  ~  "
                     << to_string(piece.tate) << "  (witnesses "
                     << (verified ? "verified" : "FAILED") << ")\n";
                if (!verified) {
                    throw InternalError("decomposition witnesses failed to verify");
                }
            }
            const bool complete = sum == ChowCorrespondence::identity(x);
            if (!complete) {
                throw InternalError("projectors do not sum to the diagonal");
            }
            text << "projectors sum to the diagonal; Tate summand count = " << pieces.size()
                 << "\n";
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "motive-decompose"},
                           {"variety", to_string(x)},
                           {"summands", summands},
                           {"sum_equals_diagonal", complete},
                           {"tate_sum_class", pieces.size()}},
                      text.str());
        };
    });

    // corr-compose -------------------------------------------------------------
    std::string cc_x, cc_y, cc_z, cc_k1, cc_k2;
    auto* corr = app.add_subcommand("corr-compose", "convolve two correspondence kernels");
    corr->add_option("X", cc_x)->required();
    corr->add_option("Y", cc_y)->required();
    corr->add_option("Z", cc_z)->required();
    corr->add_option("kernelXY", cc_k1, "class on XxY in flattened variables")->required();
    corr->add_option("kernelYZ", cc_k2, "class on YxZ in flattened variables")->required();
    corr->callback([&] {
        action = [&] {
            const Variety x = parse_variety(cc_x);
            const Variety y = parse_variety(cc_y);
            const Variety z = parse_variety(cc_z);
            const ChowCorrespondence a(x, y, parse_chow_class(cc_k1, product(x, y)));
            const ChowCorrespondence b(y, z, parse_chow_class(cc_k2, product(y, z)));
            const ChowCorrespondence c = compose(a, b);
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "corr-compose"},
                           {"source", to_string(x)},
                           {"middle", to_string(y)},
                           {"target", to_string(z)},
                           {"kernelXY", to_string(a.kernel())},
                           {"kernelYZ", to_string(b.kernel())},
                           {"result", to_string(c.kernel())}},
                      to_string(c) + "\n");
        };
    });

    // fm-act --------------------------------------------------------------------
    std::string fm_x, fm_y, fm_kernel, fm_class;
    auto* fm = app.add_subcommand("fm-act", "apply a kernel to a class on its source");
    fm->add_option("X", fm_x)->required();
    fm->add_option("Y", fm_y)->required();
    fm->add_option("kernel", fm_kernel, "class on XxY")->required();
    fm->add_option("class", fm_class, "class on X")->required();
    fm->callback([&] {
        action = [&] {
            const Variety x = parse_variety(fm_x);
            const Variety y = parse_variety(fm_y);
            const ChowCorrespondence a(x, y, parse_chow_class(fm_kernel, product(x, y)));
            const ChowClass alpha = parse_chow_class(fm_class, x);
            const ChowClass image = fm_action(a, alpha);
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "fm-act"},
                           {"source", to_string(x)},
                           {"target", to_string(y)},
                           {"kernel", to_string(a.kernel())},
                           {"class", to_string(alpha)},
                           {"result", to_string(image)}},
                      to_string(image) + "\n");
        };
    });

    // nu-check -------------------------------------------------------------------
    std::string nc_x, nc_y, nc_z;
    auto* nu_check = app.add_subcommand(
        "nu-check", "sweep the comparison square over random composable kernel pairs");
    nu_check->add_option("X", nc_x)->required();
    nu_check->add_option("Y", nc_y)->required();
    nu_check->add_option("Z", nc_z)->required();
    nu_check->add_option("--seed", seed, "sweep seed")->capture_default_str();
    nu_check->add_option("--count", count, "number of random pairs")->capture_default_str();
    nu_check->callback([&] {
        action = [&] {
            const Variety x = parse_variety(nc_x);
            const Variety y = parse_variety(nc_y);
            const Variety z = parse_variety(nc_z);
            const PropertyResult r = nu_functoriality_sweep(x, y, z, seed, count);
            ReportSink sink{out, as_json};
            std::ostringstream text;
            text << (r.ok() ? "PASS" : "FAIL") << ": " << r.name << " on " << r.cases
                 << " composable pairs";
            if (!r.ok()) {
                text << " (" << r.failures
                     << " failed)\nfirst counterexample: " << r.first_counterexample.dump();
            }
            text << "\n";
            sink.emit(sweep_json("nu-check", r, seed,
                                 json{{"varieties",
                                       json::array({to_string(x), to_string(y), to_string(z)})},
                                      {"count", count}}),
                      text.str());
            if (!r.ok()) exit_code = 1;
        };
    });

    // nm ---------------------------------------------------------------------------
    std::string nm_variety;
    auto* nm = app.add_subcommand("nm", "noncommutative motive: rank and Euler matrix");
    nm->add_option("variety", nm_variety)->required();
    nm->callback([&] {
        action = [&] {
            const Variety x = parse_variety(nm_variety);
            const NCMotive motive = nm_object(x);
            json rows = json::array();
            std::ostringstream text;
            text << "rank " << motive.rank << "\n";
            for (const auto& row : motive.euler) {
                rows.push_back(row);
                text << "[";
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (j > 0) text << " ";
                    text << row[j];
                }
                text << "]\n";
            }
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "nm"},
                           {"variety", to_string(x)},
                           {"rank", motive.rank},
                           {"euler", rows},
                           {"unitriangular", is_unitriangular(motive.euler)}},
                      text.str());
        };
    });

    // orbit-iso -----------------------------------------------------------------------
    std::string oi_left, oi_right;
    auto* orbit_iso = app.add_subcommand(
        "orbit-iso", "decide isomorphism of Tate-type sums modulo Tate twist");
    orbit_iso->add_option("left", oi_left, "e.g. \"1+L\" or \"P2\"")->required();
    orbit_iso->add_option("right", oi_right, "e.g. \"1+1\"")->required();
    orbit_iso->callback([&] {
        action = [&] {
            const MotiveSum left = parse_tate_sum(oi_left);
            const MotiveSum right = parse_tate_sum(oi_right);
            const bool iso = orbit_iso_tate(left, right);
            ReportSink sink{out, as_json};
            sink.emit(json{{"command", "orbit-iso"},
                           {"left", to_string(left)},
                           {"right", to_string(right)},
                           {"left_class", tate_sum_class(left)},
                           {"right_class", tate_sum_class(right)},
                           {"isomorphic", iso}},
                      std::string(iso ? "true" : "false") + "\n");
        };
    });

    // verify ---------------------------------------------------------------------------
    std::string v_suite;
    auto* verify = app.add_subcommand("verify", "run a randomized invariant sweep");
    verify->add_option("suite", v_suite, "ring, chow, grr, corr, motives, orbit, nu, nm, all")
        ->required();
    verify->add_option("--seed", seed, "sweep seed")->capture_default_str();
    verify->add_option("--count", count, "cases per randomized property")
        ->capture_default_str();
    verify->callback([&] {
        action = [&] {
            const SuiteResult r = run_suite(v_suite, seed, count);
            ReportSink sink{out, as_json};
            json report = to_json(r);
            report["command"] = "verify";
            sink.emit(report, to_text(r));
            if (!r.ok()) exit_code = 1;
        };
    });

    // Parse and run ----------------------------------------------------------------------
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("chowmot");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        action();
        return exit_code;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedObjectError& e) {
        err << "unsupported input: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace chowmot
