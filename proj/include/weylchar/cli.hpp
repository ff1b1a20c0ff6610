#ifndef WEYLCHAR_CLI_HPP
#define WEYLCHAR_CLI_HPP

// Command-line front end. run() is the whole program; the executable in
// tools/ only forwards argv to it, so tests drive it in-process.
//
// Exit status: 0 success / identity verified, 1 identity mismatch,
// 2 usage error (bad arguments, limits exceeded without --force).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "characters.hpp"
#include "kostka.hpp"
#include "oracle.hpp"
#include "serialize.hpp"

namespace weylchar::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != item.size()) throw UsageError("malformed " + what + " \"" + text + "\": expected comma-separated integers");
        out.push_back(v);
    }
    if (text.back() == ',') throw UsageError("malformed " + what + " \"" + text + "\": trailing comma");
    return out;
}

inline Weight parse_weight(const std::string& text, std::optional<int> rank) {
    std::vector<int> c = parse_int_list(text, "weight");
    if (c.empty()) throw UsageError("malformed weight \"" + text + "\": no coordinates");
    if (rank && static_cast<int>(c.size()) != *rank)
        throw UsageError("weight \"" + text + "\" has " + std::to_string(c.size()) + " coordinates but --rank is " + std::to_string(*rank));
    return Weight(std::move(c));
}

inline Partition parse_partition(const std::string& text) {
    try {
        return Partition(parse_int_list(text, "partition"));
    } catch (const std::invalid_argument& e) {
        throw UsageError("malformed partition \"" + text + "\": " + e.what());
    }
}

/// Output options shared by all subcommands.
struct Output {
    bool json = false;
    bool text = false;
    std::string path;

    bool use_json(bool default_json) const { return json ? true : text ? false : default_json; }
};

namespace detail {

inline std::string render(const Series& s, bool json) { return json ? to_json(s).dump(2) + "\n" : s.str() + "\n"; }

inline std::string render(const GradedCharacter& g, bool json) {
    if (json) return to_json(g).dump(2) + "\n";
    std::string head = "graded character, rank " + std::to_string(g.rank());
    head += g.trunc() ? ", truncated at u^" + std::to_string(*g.trunc()) : ", exact";
    return head + "\n" + g.str();
}

inline std::string render(const MultiplicitySeries& m, bool json) {
    if (json) return to_json(m).dump(2) + "\n";
    std::string out = "multiplicities, rank " + std::to_string(m.rank) + "\n";
    for (const auto& [w, s] : m.entries) out += "  V" + w.str() + ": " + s.str() + "\n";
    return out;
}

inline std::string render(const VerificationReport& r, bool json) {
    if (json) return to_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": invalid JSON: " + e.what());
    }
}

/// Compares two Series or GradedCharacter JSON files.
inline int diff_files(const std::string& a_path, const std::string& b_path, std::string& report) {
    const Json a = read_json_file(a_path);
    const Json b = read_json_file(b_path);
    auto kind = [](const Json& j) -> std::string {
        if (j.is_object() && j.contains("entries")) return "character";
        if (j.is_object() && j.contains("coeffs")) return "series";
        return "unknown";
    };
    const std::string ka = kind(a), kb = kind(b);
    if (ka == "unknown" || kb == "unknown") throw SchemaError("diff: inputs must be Series or GradedCharacter JSON");
    if (ka != kb) throw SchemaError("diff: schema mismatch (" + ka + " vs " + kb + ")");

    std::ostringstream os;
    bool equal = false;
    std::optional<int> upto;
    if (ka == "series") {
        const SeriesComparison c = compare(series_from_json(a), series_from_json(b));
        equal = c.equal;
        upto = c.compared_up_to;
        if (!equal) {
            const Series sa = series_from_json(a), sb = series_from_json(b);
            os << "first mismatch at degree " << *c.first_mismatch << ": " << sa.coeff(*c.first_mismatch) << " vs "
               << sb.coeff(*c.first_mismatch) << "\n";
        }
    } else {
        const GradedCharacter ga = character_from_json(a), gb = character_from_json(b);
        if (ga.rank() != gb.rank()) throw SchemaError("diff: rank mismatch (" + std::to_string(ga.rank()) + " vs " + std::to_string(gb.rank()) + ")");
        const CharacterComparison c = compare(ga, gb);
        equal = c.equal;
        upto = c.compared_up_to;
        if (!equal) {
            const auto& mm = *c.first_mismatch;
            os << "first mismatch at weight " << mm.weight << ", degree " << mm.degree << ": " << mm.lhs << " vs " << mm.rhs << "\n";
        }
    }
    const bool differ = a.contains("trunc") && b.contains("trunc") && a["trunc"] != b["trunc"];
    if (equal) os << "equal";
    if (upto) os << (equal ? " " : "") << (equal ? "" : "compared ") << "up to degree " << *upto;
    if (differ) os << " (truncation degrees differ; compared up to the minimum)";
    os << "\n";
    report = os.str();
    return equal ? 0 : 1;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weylchar: graded characters of Weyl modules for current algebras of type A"};
    app.name("weylchar");
    app.require_subcommand(1);

    Output o;
    app.add_flag("--json", o.json, "JSON output");
    app.add_flag("--text", o.text, "plain-text output");
    app.add_option("-o,--output", o.path, "write output to a file instead of standard output");
    bool force = false;
    app.add_flag("--force", force, "lift desk-scale oracle bounds (cost grows factorially)");
    auto global = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "JSON output");
        sub->add_flag("--text", o.text, "plain-text output");
        sub->add_option("-o,--output", o.path, "write output to a file");
        sub->add_flag("--force", force, "lift desk-scale oracle bounds");
        sub->fallthrough();
    };

    std::optional<int> rank;
    std::string weight_s, shape_s, content_s, xi_s;
    int degree = 0, grade = 0, m = 0, ell = 0, k = 0;
    bool decompose_flag = false;
    std::string statistic = "charge";
    std::vector<std::string> files;

    // kostka
    auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial by charge");
    global(kostka);
    kostka->add_option("--shape", shape_s, "shape partition, e.g. 2,2");
    kostka->add_option("--content", content_s, "content partition, e.g. 1,1,1,1");
    kostka->add_option("--statistic", statistic, "charge or cocharge")->check(CLI::IsMember({"charge", "cocharge"}));
    kostka->add_option("--rank", rank, "rank n (with --weight/--xi)");
    kostka->add_option("--weight", weight_s, "dominant weight; with --xi gives the local Weyl coefficient");
    kostka->add_option("--xi", xi_s, "partition xi of |lambda| with at most rank+1 parts");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of A_lambda");
    global(hilbert);
    hilbert->add_option("--rank", rank, "rank n");
    hilbert->add_option("--weight", weight_s, "dominant weight")->required();
    hilbert->add_option("--degree", degree, "truncation degree D")->required();

    auto* chr = app.add_subcommand("char", "graded characters");
    global(chr);
    chr->require_subcommand(1);
    auto weight_opts = [&](CLI::App* s, bool needs_degree) {
        global(s);
        s->add_option("--rank", rank, "rank n");
        s->add_option("--weight", weight_s, "dominant weight as fundamental coordinates")->required();
        s->add_option("--grade", grade, "grading shift r (default 0)");
        auto* d = s->add_option("--degree", degree, "truncation degree D");
        if (needs_degree) d->required();
        s->add_flag("--decompose", decompose_flag, "print multiplicities of irreducibles instead");
    };
    auto* c_local = chr->add_subcommand("local", "local Weyl module");
    weight_opts(c_local, false);
    auto* c_global = chr->add_subcommand("global", "global Weyl module");
    weight_opts(c_global, true);
    auto* c_proj = chr->add_subcommand("projective", "projective cover");
    weight_opts(c_proj, true);
    auto* c_sym = chr->add_subcommand("symalg", "symmetric algebra of g (x) tC[t]");
    global(c_sym);
    c_sym->add_option("--rank", rank, "rank n")->required();
    c_sym->add_option("--degree", degree, "truncation degree D")->required();
    c_sym->add_flag("--decompose", decompose_flag, "print multiplicities of irreducibles instead");

    auto* verify = app.add_subcommand("verify", "check identities to a truncation degree");
    global(verify);
    verify->require_subcommand(1);
    auto* v_rec = verify->add_subcommand("reciprocity", "BGG reciprocity for sl2");
    global(v_rec);
    v_rec->add_option("--m", m, "weight m of P(m w, 0)")->required();
    v_rec->add_option("--degree", degree, "truncation degree D")->required();
    auto* v_t2 = verify->add_subcommand("theorem2", "sl2 expansion of the symmetric algebra");
    global(v_t2);
    v_t2->add_option("--degree", degree, "truncation degree D")->required();
    auto* v_conj = verify->add_subcommand("conjecture", "projective expansion in global Weyl modules (rank <= 2)");
    global(v_conj);
    v_conj->add_option("--rank", rank, "rank n");
    v_conj->add_option("--weight", weight_s, "dominant weight lambda")->required();
    v_conj->add_option("--degree", degree, "truncation degree D")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force sl2 realizations");
    global(oracle);
    oracle->require_subcommand(1);
    auto* o_tensor = oracle->add_subcommand("tensor-char", "character of the S_l-invariant tensor space");
    global(o_tensor);
    o_tensor->add_option("--ell", ell, "l")->required();
    o_tensor->add_option("--degree", degree, "truncation degree D")->required();
    auto* o_local = oracle->add_subcommand("local-weyl", "local Weyl module as a quotient of the invariants");
    global(o_local);
    o_local->add_option("--ell", ell, "l")->required();
    auto* o_mmod = oracle->add_subcommand("m-module", "Hilbert series of the module generated by p(r)");
    global(o_mmod);
    o_mmod->add_option("--k", k, "k")->required();
    o_mmod->add_option("--ell", ell, "l")->required();
    o_mmod->add_option("--degree", degree, "truncation degree D")->required();
    auto* o_theta = oracle->add_subcommand("theta", "checks on (g + tau_1 C) (x) C[t]");
    global(o_theta);
    o_theta->add_option("--degree", degree, "truncation degree D")->required();

    auto* diff = app.add_subcommand("diff", "compare two Series or GradedCharacter JSON files");
    global(diff);
    diff->add_option("files", files, "two JSON files")->required()->expected(2);

    std::vector<std::string> argv_store{"weylchar"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    std::string result;
    int status = 0;
    try {
        if (o.json && o.text) throw UsageError("--json and --text are mutually exclusive");
        if (degree < 0) throw UsageError("--degree must be nonnegative");
        auto lim = [&](OracleLimits l) {
            l.force = force;
            return l;
        };
        auto weight = [&] { return parse_weight(weight_s, rank); };
        auto emit_char = [&](const GradedCharacter& g) {
            result = decompose_flag ? detail::render(decompose(g), o.use_json(true)) : detail::render(g, o.use_json(true));
        };
        auto emit_report = [&](const VerificationReport& r) {
            result = detail::render(r, o.use_json(false));
            status = r.pass ? 0 : 1;
        };

        if (*kostka) {
            Series s;
            if (!xi_s.empty() || !weight_s.empty()) {
                if (xi_s.empty() || weight_s.empty()) throw UsageError("kostka: --weight and --xi go together");
                s = local_weyl_kostka(weight(), parse_partition(xi_s));
            } else {
                if (shape_s.empty() || content_s.empty()) throw UsageError("kostka: need --shape and --content (or --weight and --xi)");
                const Partition content = parse_partition(content_s);
                s = kostka_poly(parse_partition(shape_s), content);
                if (statistic == "cocharge") s = reflect_to_cocharge(s, content);
            }
            result = detail::render(s, o.use_json(true));
        } else if (*hilbert) {
            result = detail::render(hilbert_A(weight(), degree), o.use_json(true));
        } else if (*c_local) {
            emit_char(local_weyl_character(weight(), grade));
        } else if (*c_global) {
            emit_char(global_weyl_character(weight(), grade, degree));
        } else if (*c_proj) {
            emit_char(projective_character(weight(), grade, degree));
        } else if (*c_sym) {
            if (*rank < 1) throw UsageError("--rank must be at least 1");
            emit_char(symmetric_algebra_character(*rank, degree));
        } else if (*v_rec) {
            emit_report(verify_reciprocity(m, degree));
        } else if (*v_t2) {
            emit_report(verify_symmetric_algebra(degree));
        } else if (*v_conj) {
            emit_report(verify_projective_expansion(weight(), degree));
        } else if (*o_tensor) {
            result = detail::render(tensor_character(ell, degree, lim(limits::tensor_character)), o.use_json(true));
        } else if (*o_local) {
            result = detail::render(local_weyl_oracle(ell, lim(limits::local_weyl)), o.use_json(true));
        } else if (*o_mmod) {
            result = detail::render(m_module_hilbert(k, ell, degree, lim(limits::m_module)), o.use_json(true));
        } else if (*o_theta) {
            emit_report(theta_module_check(degree, lim(limits::theta)));
        } else if (*diff) {
            status = detail::diff_files(files[0], files[1], result);
        }
    } catch (const UsageError& e) {
        err << "weylchar: " << e.what() << "\n";
        return 2;
    } catch (const OracleLimitError& e) {
        err << "weylchar: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        err << "weylchar: " << e.what() << "\n";
        return 2;
    } catch (const NonCharacterError& e) {
        err << "weylchar: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "weylchar: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "weylchar: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "weylchar: internal inconsistency: " << e.what() << "\n";
        return 1;
    }

    if (o.path.empty()) {
        out << result;
    } else {
        std::ofstream f(o.path);
        if (!f) {
            err << "weylchar: cannot write " << o.path << "\n";
            return 2;
        }
        f << result;
    }
    return status;
}

}  // namespace weylchar::cli

#endif  // WEYLCHAR_CLI_HPP
