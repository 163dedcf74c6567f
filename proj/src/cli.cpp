/*
   Copyright 2026 The wildaut authors

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

#include "wildaut/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wildaut/generic.hpp"
#include "wildaut/parse.hpp"
#include "wildaut/realize.hpp"
#include "wildaut/report.hpp"

namespace wildaut {

namespace {

struct CommonOpts {
    unsigned p = 2;
    unsigned ext = 1;
    std::string modulus;       // csv override
    bool text_mode = false;
    bool json_mode = false;
    bool oracle = false;
    bool timing = false;
    u64 seed = kDefaultSeed;
    u64 max_order_cap = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_field) {
    if (with_field) {
        cmd->add_option("--p", o.p, "characteristic (prime)")->required();
        cmd->add_option("--ext", o.ext, "extension degree e of the coefficient field");
        cmd->add_option("--modulus", o.modulus, "modulus override c0,c1,...,ce");
    }
    cmd->add_flag("--json", o.json_mode, "JSON output (default)");
    cmd->add_flag("--text", o.text_mode, "human-readable output");
    cmd->add_flag("--oracle", o.oracle, "force the brute-force root arbitration sweep");
    cmd->add_flag("--timing", o.timing, "append wall-clock timing to the JSON body");
    cmd->add_option("--seed", o.seed, "seed for sampled property checks");
    cmd->add_option("--max-order-cap", o.max_order_cap, "group order cap (default p^13)");
}

const Field* field_of(const CommonOpts& o) {
    if (o.modulus.empty()) return Field::get(o.p, o.ext);
    std::vector<fp_t> mod;
    std::stringstream ss(o.modulus);
    std::string item;
    while (std::getline(ss, item, ',')) mod.push_back(static_cast<fp_t>(std::stoul(item)));
    return Field::get(o.p, o.ext, mod);
}

AnalyzeOptions options_of(const CommonOpts& o) {
    AnalyzeOptions opt;
    opt.seed = o.seed;
    opt.max_group_order = o.max_order_cap;
    opt.oracle_sweep = o.oracle;
    return opt;
}

ojson field_json(const Field* K) { return ojson{{"e", K->e}, {"modulus", K->modulus}}; }

void emit(std::ostream& out, ojson j, const CommonOpts& o, double ms) {
    if (o.timing) j["timing_ms"] = ms;
    out << j.dump() << "\n";
}

FElem parse_scalar(const std::string& text, const Field* K) {
    UP<FDom> v = parse_poly(text, K);
    require(v.deg() <= 0, ErrKind::usage, "expected a field-element literal: " + text);
    return v.is_zero() ? K->zero() : v.coeff(0);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    require(in.good(), ErrKind::usage, "cannot open batch file: " + path);
    std::string line;
    u64 ok = 0, failed = 0;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        size_t first = trimmed.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        std::vector<std::string> argv;
        std::stringstream ss(trimmed);
        std::string tok;
        while (ss >> tok) argv.push_back(tok);
        std::ostringstream sub_out, sub_err;
        int code = dispatch(argv, sub_out, sub_err);
        if (code == 0) {
            ++ok;
            out << sub_out.str();
        } else {
            ++failed;
            ojson j;
            j["error"] = sub_err.str().empty() ? "request failed" : sub_err.str();
            j["exit"] = code;
            j["request"] = trimmed;
            out << j.dump() << "\n";
        }
    }
    out << "# batch: ok=" << ok << " failed=" << failed << "\n";
    return failed ? 1 : 0;
}

int cmd_selftest(std::ostream& out) {
    const Field* F2 = Field::get(2, 1);
    auto check = [&](bool cond, const std::string& name) {
        out << (cond ? "ok " : "FAIL ") << name << "\n";
        return cond;
    };
    bool all = true;
    {
        CoverAnalysis A = analyze(parse_poly("X^3", F2));
        all &= check(A.prof.label.text == "extraspecial(8, III.b) [Q8]", "analyze X^3 is Q8");
    }
    {
        Realization r = classic_D8_example();
        CoverAnalysis A = analyze(r.f);
        std::vector<std::pair<u64, u64>> expect{{1, 1}, {2, 5}, {4, 2}};
        all &= check(A.prof.order_stats == expect && A.prof.label.text == "extraspecial(8, III.a) [D8]",
                     "reference trace is D8 with stats 1:1 2:5 4:2");
    }
    {
        UniversalFamily U = universal_family(2, 3);
        GenericAd ad = generic_additive_polynomial(U);
        all &= check(up_print(ad.ad, "Y") == "Y^4+Y", "generic Ad(2,3) = Y^4+Y");
    }
    {
        CoverAnalysis A = analyze(realize_cyclic_p2(3).f);
        all &= check(A.prof.label.text == "abelian_p2(rank 1) [Z/9]", "cyclic p^2 realization");
    }
    {
        UP<FDom> f = parse_poly("X^3+X^7+X^19+X^35+X^41", F2);
        all &= check(parse_poly(up_print(f, "X"), F2) == f, "parse/print round trip");
    }
    out << (all ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
    return all ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of wild inertia for Artin-Schreier covers"};
    app.require_subcommand(1);

    CommonOpts aopt, ropt, gopt, dopt, mopt;
    std::string poly_text, with_text, target, d8case, sf_text, tcsv, base_str = "I";
    unsigned rn = 1;
    i64 gm = 3;
    unsigned gp = 2;
    std::string batch_file;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one cover");
    add_common(analyze_cmd, aopt, true);
    analyze_cmd->add_option("--poly", poly_text, "polynomial f(X)")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduced representative and invariants");
    add_common(reduce_cmd, dopt, true);
    reduce_cmd->add_option("--poly", poly_text, "polynomial f(X)")->required();

    CLI::App* realize_cmd = app.add_subcommand("realize", "build f with a prescribed group");
    add_common(realize_cmd, ropt, true);
    realize_cmd
        ->add_option("--target", target,
                     "linearized|cyclic_p2|type_II|type_II_family|saturated|d8_25|classic_d8")
        ->required();
    realize_cmd->add_option("--n", rn, "family index n");
    realize_cmd->add_option("--t", tcsv, "comma-separated coefficient literals t_0..t_{n-1}");
    realize_cmd->add_option("--case", d8case, "conductor-25 case: 1|2i|2ii|2iii");
    realize_cmd->add_option("--sf", sf_text, "monic additive divisor S_F(Y)");
    realize_cmd->add_option("--base", base_str, "saturated base family: I|II|IIIb");

    CLI::App* generic_cmd = app.add_subcommand("generic", "universal-family Ad over F_p[t_*]");
    generic_cmd->add_option("--p", gp, "characteristic")->required();
    generic_cmd->add_option("--m", gm, "conductor")->required();
    add_common(generic_cmd, gopt, false);

    CLI::App* modify_cmd = app.add_subcommand("modify", "type 1/2 modifications");
    add_common(modify_cmd, mopt, true);
    int mtype = 1;
    modify_cmd->add_option("--type", mtype, "1 (f o S) or 2 (f + g)")->required();
    modify_cmd->add_option("--poly", poly_text, "polynomial f(X)")->required();
    modify_cmd->add_option("--with", with_text, "S(X) for type 1, g(X) for type 2")->required();

    CLI::App* batch_cmd = app.add_subcommand("batch", "run requests from a file, one per line");
    batch_cmd->add_option("file", batch_file, "request file ('#' comments)")->required();

    app.add_subcommand("selftest", "run the built-in verification battery");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto ms_since = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (analyze_cmd->parsed()) {
        const Field* K = field_of(aopt);
        UP<FDom> f = parse_poly(poly_text, K);
        CoverAnalysis A = analyze(f, options_of(aopt));
        if (aopt.text_mode)
            out << report_text(A, poly_text);
        else
            emit(out, report_json(A, poly_text), aopt, ms_since());
        return 0;
    }
    if (reduce_cmd->parsed()) {
        const Field* K = field_of(dopt);
        UP<FDom> f = parse_poly(poly_text, K);
        auto r = artin_schreier_reduce(f);
        ojson j;
        j["version"] = "wildaut-reduce/1";
        j["p"] = K->p;
        j["field"] = field_json(K);
        j["input"] = poly_text;
        j["reduced"] = up_print(r.red, "X");
        j["witness"] = up_print(r.witness, "X");
        j["reducible"] = r.red.is_zero();
        if (!r.red.is_zero()) {
            auto inv = cover_invariants_of_reduced(r.red);
            j["conductor"] = inv.conductor;
            j["genus"] = inv.genus;
        }
        emit(out, std::move(j), dopt, ms_since());
        return 0;
    }
    if (realize_cmd->parsed()) {
        const Field* K = field_of(ropt);
        std::vector<FElem> tvals;
        if (!tcsv.empty()) {
            std::stringstream ss(tcsv);
            std::string item;
            while (std::getline(ss, item, ',')) tvals.push_back(parse_scalar(item, K));
        }
        Realization r;
        std::optional<CoverAnalysis> ready;
        if (target == "linearized") {
            while (tvals.size() < rn) tvals.push_back(K->zero());
            r = realize_linearized(ropt.p, rn, tvals);
        } else if (target == "cyclic_p2") {
            r = realize_cyclic_p2(ropt.p);
        } else if (target == "type_II") {
            r = realize_type_II(ropt.p, rn);
        } else if (target == "type_II_family") {
            require(tvals.size() == rn, ErrKind::usage, "need --t with n values");
            r = realize_type_II_family(ropt.p, rn, tvals);
        } else if (target == "saturated") {
            require(!sf_text.empty(), ErrKind::usage, "saturated target needs --sf");
            UP<FDom> sf = parse_poly(sf_text, K, "Y");
            SaturatedBase b = base_str == "II"
                                  ? SaturatedBase::type_II
                                  : (base_str == "IIIb" ? SaturatedBase::type_IIIb
                                                        : SaturatedBase::type_I);
            auto sat = realize_saturated(ropt.p, rn, sf, b, options_of(ropt));
            r = sat.real;
            ready = std::move(sat.analysis);
        } else if (target == "d8_25") {
            D8Case c = d8case == "1"     ? D8Case::case1
                       : d8case == "2i"  ? D8Case::case2i
                       : d8case == "2ii" ? D8Case::case2ii
                                         : D8Case::case2iii;
            require(d8case == "1" || d8case == "2i" || d8case == "2ii" || d8case == "2iii",
                    ErrKind::usage, "--case must be one of 1|2i|2ii|2iii");
            r = realize_D8_family(c);
        } else if (target == "classic_d8") {
            r = classic_D8_example();
        } else {
            fail(ErrKind::usage, "unknown realize target: " + target);
        }
        CoverAnalysis A = ready ? std::move(*ready) : analyze(r.f, options_of(ropt));
        ojson j;
        j["version"] = "wildaut-realize/1";
        j["target"] = r.target;
        j["p"] = r.field->p;
        j["field"] = field_json(r.field);
        j["poly"] = up_print(r.f, "X");
        j["expected_ad"] = up_print(r.expected_ad, "Y");
        j["construction_checks"] = r.checks;
        j["report"] = report_json(A, up_print(r.f, "X"));
        emit(out, std::move(j), ropt, ms_since());
        return 0;
    }
    if (generic_cmd->parsed()) {
        UniversalFamily U = universal_family(gp, gm);
        GenericAd ad = generic_additive_polynomial(U);
        ojson j;
        j["version"] = "wildaut-generic/1";
        j["p"] = gp;
        j["m"] = gm;
        ojson params = ojson::array();
        for (auto& n : U.A->names) params.push_back(n);
        j["params"] = std::move(params);
        j["ad_generic"] = up_print(ad.ad, "Y");
        j["monic"] = ad.monic;
        j["checks"] = U.checks;
        emit(out, std::move(j), gopt, ms_since());
        return 0;
    }
    if (modify_cmd->parsed()) {
        const Field* K = field_of(mopt);
        UP<FDom> f = parse_poly(poly_text, K);
        UP<FDom> g = parse_poly(with_text, K);
        ModifyResult M = (mtype == 1) ? modify_type1(f, g, options_of(mopt))
                                      : modify_type2(f, g, options_of(mopt));
        ojson j;
        j["version"] = "wildaut-modify/1";
        j["type"] = mtype;
        j["divisor"] = up_print(M.divisor, "Y");
        j["modification_checks"] = M.checks;
        j["report"] = report_json(M.result, up_print(M.result.input, "X"));
        emit(out, std::move(j), mopt, ms_since());
        return 0;
    }
    if (batch_cmd->parsed()) return cmd_batch(batch_file, out, err);
    return cmd_selftest(out);
}

}  // namespace

int run_request(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.kind) {
            case ErrKind::degenerate_cover: return 2;
            case ErrKind::cap_exceeded: return 3;
            default: return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_request(args, std::cout, std::cerr);
}

}  // namespace wildaut
