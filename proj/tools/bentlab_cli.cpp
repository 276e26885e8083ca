#include "bentlab/carry.hpp"
#include "bentlab/carry_graph.hpp"
#include "bentlab/certificate.hpp"
#include "bentlab/classify.hpp"
#include "bentlab/cyclotomy.hpp"
#include "bentlab/families.hpp"
#include "bentlab/field.hpp"
#include "bentlab/walsh.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using bentlab::cert::Certificate;
using nlohmann::json;

int env_workers() {
    const char* v = std::getenv("BENTLAB_WORKERS");
    if (!v) return 1;
    int w = std::atoi(v);
    return w >= 1 ? w : 1;
}

std::vector<int> parse_modulus(const std::string& text, int n) {
    // big-endian "c_n c_{n-1} ... c_0", space or comma separated
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::vector<int> big;
    std::istringstream in(cleaned);
    int v;
    while (in >> v) big.push_back(v);
    if (big.size() != static_cast<size_t>(n + 1))
        throw std::invalid_argument("--modulus: expected n+1 coefficients");
    return {big.rbegin(), big.rend()};
}

std::shared_ptr<const bentlab::FieldCtx> make_field(int p, int n, const std::string& modulus) {
    if (modulus.empty()) return bentlab::FieldCtx::build(p, n);
    return bentlab::FieldCtx::build_with_modulus(p, n, parse_modulus(modulus, n));
}

long long parse_element_log(const std::string& text, const bentlab::FieldCtx& ctx) {
    if (text == "zero") return 0;
    return ctx.element_from_log(std::stoll(text));
}

json modulus_json(const bentlab::FieldCtx& ctx) {
    json m = json::array();
    for (int i = ctx.n(); i >= 0; --i) m.push_back(ctx.modulus()[i]);
    return m;
}

void emit(Certificate& cert, const std::string& out_path,
          std::chrono::steady_clock::time_point started) {
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    cert.set_timing_ms(elapsed);
    if (out_path.empty()) {
        std::cout << cert.text();
    } else {
        std::ofstream out(out_path);
        out << cert.text();
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

struct CommonOpts {
    std::string out;
};

int run_field(int p, int n, const std::string& modulus, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    auto ctx = make_field(p, n, modulus);
    Certificate cert("field");
    cert.set_param("p", p);
    cert.set_param("n", n);
    cert.set_param("modulus", modulus_json(*ctx));
    cert.set_param("dump_line", ctx->dump_line());
    cert.set_exhaustive();
    // xi check data: the residue class of x generates the whole group.
    bool order_ok = true;
    if (ctx->q() <= 1 << 20) {
        long long cur = ctx->xi();
        for (long long t = 1; t < ctx->q() - 1 && order_ok; ++t) {
            order_ok = cur != ctx->one();
            cur = ctx->mul(cur, ctx->xi());
        }
        order_ok = order_ok && cur == ctx->one();
    }
    cert.add_verdict("xi_order_q_minus_1", order_ok);
    cert.add_verdict("exp_log_inverse", [&] {
        for (long long t = 0; t < std::min<long long>(ctx->q() - 1, 1 << 16); ++t)
            if (ctx->discrete_log(ctx->element_from_log(t)) != t) return false;
        return true;
    }());
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_spectrum(int p, int n, const std::string& modulus, const std::string& a_log,
                 long long d, const std::string& csv, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    auto ctx = make_field(p, n, modulus);
    long long a = parse_element_log(a_log, *ctx);
    auto spec = bentlab::walsh_spectrum(bentlab::families::monomial_table(a, d, *ctx), *ctx);
    if (!csv.empty()) write_file(csv, spec.to_csv());

    Certificate cert("spectrum");
    cert.set_param("p", p);
    cert.set_param("n", n);
    cert.set_param("modulus", modulus_json(*ctx));
    cert.set_param("a_log", a_log);
    cert.set_param("d", d);
    cert.set_param("csv_ref", csv.empty() ? json() : json(csv));
    cert.set_param("S0", spec.coeffs[0].str());
    cert.set_exhaustive();
    long long expect = 1;
    for (int i = 0; i < 2 * n; ++i) expect *= 3;
    cert.add_verdict("parseval", bentlab::parseval_sum(spec) == expect);
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_classify(int p, int n, const std::string& modulus, const std::string& a_log,
                 long long d, const std::string& csv, const std::string& dual_csv,
                 const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    auto ctx = make_field(p, n, modulus);
    long long a = parse_element_log(a_log, *ctx);
    auto spec = bentlab::walsh_spectrum(bentlab::families::monomial_table(a, d, *ctx), *ctx);
    auto direct = bentlab::classify_direct(spec);
    auto [hou, valuations] = bentlab::classify_hou(spec);

    if (!csv.empty()) write_file(csv, spec.to_csv());
    if (!dual_csv.empty() && direct.dual) {
        std::string text = "b_index,dual\n";
        for (size_t b = 0; b < direct.dual->values.size(); ++b)
            text += std::to_string(b) + "," + std::to_string(direct.dual->values[b]) + "\n";
        write_file(dual_csv, text);
    }

    Certificate cert("classify");
    cert.set_param("p", p);
    cert.set_param("n", n);
    cert.set_param("modulus", modulus_json(*ctx));
    cert.set_param("a_log", a_log);
    cert.set_param("d", d);
    cert.set_param("S0", spec.coeffs[0].str());
    cert.set_param("is_bent", direct.is_bent);
    cert.set_param("is_weakly_regular", direct.is_weakly_regular);
    cert.set_param("is_regular", direct.is_regular);
    cert.set_param("sign", direct.is_weakly_regular ? json(direct.sigma) : json());
    cert.set_param("sign_convention", "sqrt(-3) := 1+2w; sign depends on this branch");
    cert.set_param("parity_branch", direct.parity_branch);
    cert.set_param("dual_csv_ref", dual_csv.empty() ? json() : json(dual_csv));
    cert.set_param("csv_ref", csv.empty() ? json() : json(csv));
    cert.set_param("nu_lambda_S0", valuations.lambda_val_zero);
    cert.set_exhaustive();
    cert.add_verdict("routes_agree", direct.is_bent == hou.is_bent &&
                                         direct.is_weakly_regular == hou.is_weakly_regular);
    cert.add_verdict("hou_ii_without_i_flag_clear", !hou.criterion_ii_without_i);
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_family(const std::string& family, int n, int k, const std::string& a_log,
               bool all_a, long long samples, unsigned long long seed,
               const std::string& modulus, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    Certificate cert("family");
    cert.set_param("family", family);
    cert.set_param("k", k);
    cert.set_param("seed", seed);

    if (family == "hk") {
        auto ctx = make_field(3, 2 * k, modulus);
        cert.set_param("n", 2 * k);
        cert.set_param("modulus", modulus_json(*ctx));
        auto spec = bentlab::families::hk_params(k, *ctx);
        cert.set_param("a_log", ctx->discrete_log(spec.a));
        cert.set_param("d", spec.d);
        auto walsh =
            bentlab::walsh_spectrum(bentlab::families::monomial_table(spec.a, spec.d, *ctx), *ctx);
        auto direct = bentlab::classify_direct(walsh);
        auto hou = bentlab::classify_hou(walsh).first;
        long long m = 1;
        for (int i = 0; i < k; ++i) m *= 3;
        cert.set_param("S0", walsh.coeffs[0].str());
        cert.set_exhaustive();
        cert.add_verdict("weakly_regular_bent",
                         direct.is_weakly_regular && hou.is_weakly_regular && direct.is_bent);
        cert.add_verdict("S0_equals_minus_3k", walsh.coeffs[0] == bentlab::Eisenstein{-m, 0});
        emit(cert, common.out, started);
        return cert.exit_code();
    }

    if (n <= 0) throw std::invalid_argument("--n is required for this family");
    auto ctx = make_field(3, n, modulus);
    cert.set_param("n", n);
    cert.set_param("modulus", modulus_json(*ctx));

    long long d;
    if (family == "cm") {
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= 3;
        d = (pk + 1) / 2;
    } else if (family == "kasami") {
        if (n != 2 * k) throw std::invalid_argument("kasami requires n = 2k");
        long long pk = 1;
        for (int i = 0; i < k; ++i) pk *= 3;
        d = pk + 1;
    } else {
        throw std::invalid_argument("unknown family");
    }
    cert.set_param("d", d);

    std::vector<long long> a_values;
    if (!a_log.empty()) {
        a_values.push_back(parse_element_log(a_log, *ctx));
        cert.set_exhaustive();
    } else if (all_a || ctx->q() - 1 <= samples) {
        for (long long a = 1; a < ctx->q(); ++a) a_values.push_back(a);
        cert.set_exhaustive();
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> pick(1, ctx->q() - 1);
        for (long long i = 0; i < samples; ++i) a_values.push_back(pick(rng));
        cert.set_sampling(samples, seed);
    }

    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= 3;
    bool all_ok = true;
    json failures = json::array();
    for (long long a : a_values) {
        auto spec = bentlab::walsh_spectrum(bentlab::families::monomial_table(a, d, *ctx), *ctx);
        auto direct = bentlab::classify_direct(spec);
        auto hou = bentlab::classify_hou(spec).first;
        bool ok;
        if (family == "cm") {
            ok = direct.is_weakly_regular && hou.is_weakly_regular;
        } else {
            bool degenerate = ctx->add(a, ctx->pow(a, pk)) == 0;
            if (degenerate) {
                ok = !direct.is_bent;
            } else {
                ok = true;
                for (long long b = 0; b < ctx->q() && ok; ++b)
                    ok = spec.coeffs[b] ==
                         bentlab::families::kasami_expected_walsh(a, k, b, *ctx);
            }
        }
        bool agree = direct.is_bent == hou.is_bent &&
                     direct.is_weakly_regular == hou.is_weakly_regular;
        if (!(ok && agree)) {
            all_ok = false;
            if (failures.size() < 10) failures.push_back(ctx->discrete_log(a));
        }
    }
    cert.set_param("instances", static_cast<long long>(a_values.size()));
    cert.add_verdict(family == "cm" ? "all_weakly_regular_bent" : "spectrum_matches_closed_form",
                     all_ok, failures.empty() ? json() : json{{"failing_a_logs", failures}});
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_conjecture_dual(int k, const std::string& modulus, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    auto ctx = make_field(3, 2 * k, modulus);
    auto report = bentlab::families::verify_conjecture_dual(k, *ctx);

    long long both = 0, plus = 0, minus = 0, neither = 0;
    for (auto s : report.per_b_sign) {
        switch (s) {
            case bentlab::families::SignMatch::kBoth: ++both; break;
            case bentlab::families::SignMatch::kPlusOnly: ++plus; break;
            case bentlab::families::SignMatch::kMinusOnly: ++minus; break;
            case bentlab::families::SignMatch::kNeither: ++neither; break;
        }
    }
    Certificate cert("conjecture-dual");
    cert.set_param("k", k);
    cert.set_param("n", 2 * k);
    cert.set_param("modulus", modulus_json(*ctx));
    cert.set_param("sign_counts",
                   json{{"both", both}, {"plus_only", plus}, {"minus_only", minus},
                        {"neither", neither}});
    cert.set_param("globally_uniform_sign", report.globally_uniform_sign);
    cert.set_exhaustive();
    cert.add_verdict("all_values_in_conjectured_set", report.all_match);
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_cyclotomy(int p, int n, long long e, const std::string& modulus,
                  const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    auto ctx = make_field(p, n, modulus);
    bentlab::CyclotomyCtx cyc(ctx, e);

    Certificate cert("cyclotomy");
    cert.set_param("p", p);
    cert.set_param("n", n);
    cert.set_param("e", e);
    cert.set_param("modulus", modulus_json(*ctx));
    cert.set_exhaustive();

    auto periods = cyc.periods_direct();
    json jper = json::array();
    bentlab::CycInt total(p);
    for (const auto& eta : periods) {
        json coeffs = json::array();
        for (const auto& c : eta.coeffs()) coeffs.push_back(c.str());
        jper.push_back(coeffs);
        total += eta;
    }
    cert.set_param("periods_direct", jper);
    cert.add_verdict("periods_sum_to_minus_one",
                     total == bentlab::CycInt(p, bentlab::BigInt(-1)));

    bool predictable = true;
    try {
        auto predicted = bentlab::uniform_periods_predict(p, n, e);
        json jpred = json::array();
        bool match = true;
        for (long long i = 0; i < e; ++i) {
            jpred.push_back(predicted[i]);
            match = match &&
                    periods[i] == bentlab::CycInt(p, bentlab::BigInt(predicted[i]));
        }
        cert.set_param("periods_predicted", jpred);
        cert.add_verdict("uniform_cyclotomy_prediction", match);
    } catch (const std::invalid_argument&) {
        predictable = false;
        cert.set_param("periods_predicted", json());
    }
    cert.set_param("prediction_applicable", predictable);

    if (e <= 8) {
        json jm = json::array();
        for (const auto& row : cyc.cyclotomic_number_matrix()) {
            json jrow = json::array();
            for (long long v : row) jrow.push_back(v);
            jm.push_back(jrow);
        }
        cert.set_param("cyclotomic_numbers", jm);
    }

    // Identity checks where the parameter constraints hold.
    if (e == 4 && p % 8 == 3 && n % 2 == 0 && (n / 2) % 2 == 1) {
        const int k = n / 2;
        bool eq12 = true, conj = true;
        long long sub_order = 1;
        for (int i = 0; i < k; ++i) sub_order *= p;
        long long step = (ctx->q() - 1) / (sub_order - 1);
        for (long long t = 0; t < sub_order - 1; ++t) {
            long long c = ctx->element_from_log(t * step);
            eq12 = eq12 && cyc.eq12_check(c);
            for (int j = 0; j < 4; ++j) conj = conj && cyc.conjugate_identity_check(c, j);
        }
        cert.add_verdict("eq12_identity", eq12);
        cert.add_verdict("conjugate_identity", conj);
        cert.add_verdict("simplecase_fibers", cyc.simplecase_check());
    }
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_weights(int k, bool exhaustive, long long samples, unsigned long long seed,
                const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    Certificate cert("weights");
    cert.set_param("k", k);
    cert.set_param("bound", 2 * k);
    if (exhaustive || k <= 7) {
        auto scan = bentlab::carry::wtinequ_scan(k, env_workers());
        cert.set_exhaustive();
        cert.set_param("min_lhs", scan.min_lhs1);
        cert.set_param("min_lhs_second_form", scan.min_lhs2);
        cert.set_param("argmin", scan.argmin1);
        cert.add_verdict("weight_inequality_bound",
                         scan.min_lhs1 >= 2 * k && scan.min_lhs2 >= 2 * k);
        cert.add_verdict("bound_attained", scan.min_lhs1 == 2 * k);
        if (k % 2 == 1) cert.add_verdict("forms_equivalent", scan.multisets_equal);
    } else {
        std::mt19937_64 rng(seed);
        const long long m = static_cast<long long>(bentlab::carry::modulus(3, 2 * k));
        std::uniform_int_distribution<long long> pick(0, m - 1);
        long long mult = 1;
        for (int i = 0; i < k; ++i) mult *= 3;
        ++mult;
        int min_lhs = 1 << 30;
        long long argmin = -1;
        for (long long i = 0; i < samples; ++i) {
            long long b = pick(rng);
            int lhs = bentlab::carry::weight(b, 3, 2 * k) +
                      bentlab::carry::weight(-(mult * b + m / 4), 3, 2 * k);
            if (lhs < min_lhs) {
                min_lhs = lhs;
                argmin = b;
            }
        }
        cert.set_sampling(samples, seed);
        cert.set_param("min_lhs", min_lhs);
        cert.set_param("argmin", argmin);
        cert.add_verdict("weight_inequality_bound", min_lhs >= 2 * k);
    }
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_awc(int p, int n, const std::string& coeffs, const std::string& addends,
            long long random_count, unsigned long long seed, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    Certificate cert("awc");
    cert.set_param("p", p);
    cert.set_param("n", n);

    auto parse_list = [](const std::string& text) {
        std::vector<long long> out;
        std::istringstream in(text);
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) out.push_back(std::stoll(token));
        return out;
    };

    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        const long long m = static_cast<long long>(bentlab::carry::modulus(p, n));
        std::uniform_int_distribution<long long> pick_a(0, m - 1);
        std::uniform_int_distribution<int> pick_m(1, 4), pick_t(1, 3), sign(0, 1);
        bool ok = true;
        for (long long i = 0; i < random_count && ok; ++i) {
            bentlab::carry::AwcInstance inst;
            inst.p = p;
            inst.n = n;
            int terms = pick_m(rng);
            for (int j = 0; j < terms; ++j) {
                inst.coeffs.push_back(pick_t(rng) * (sign(rng) ? 1 : -1));
                inst.addends.push_back(pick_a(rng));
            }
            try {
                auto sol = bentlab::carry::awc_solve(inst);
                ok = bentlab::carry::awc_poly_solve(inst) == sol.carries;
            } catch (const std::logic_error&) {
                ok = false;
            }
        }
        cert.set_sampling(random_count, seed);
        cert.add_verdict("recurrence_bounds_weights_and_poly_route", ok);
        emit(cert, common.out, started);
        return cert.exit_code();
    }

    bentlab::carry::AwcInstance inst;
    inst.p = p;
    inst.n = n;
    for (long long t : parse_list(coeffs)) inst.coeffs.push_back(static_cast<int>(t));
    inst.addends = parse_list(addends);
    auto sol = bentlab::carry::awc_solve(inst);
    cert.set_exhaustive();
    cert.set_param("s_digits", sol.s.digits);
    cert.set_param("s_value", sol.s.value());
    cert.set_param("carries", sol.carries);
    cert.add_verdict("poly_route_agrees", bentlab::carry::awc_poly_solve(inst) == sol.carries);
    emit(cert, common.out, started);
    return cert.exit_code();
}

int run_graph_prove(const std::string& dot_path, const CommonOpts& common) {
    auto started = std::chrono::steady_clock::now();
    bentlab::CarryGraph g;
    auto [max_w, ok] = g.verify_arcs_nonpositive();
    long long attained = 0;
    for (const auto& arc : g.arcs())
        if (arc.weight == max_w) {
            attained = arc.from;
            break;
        }
    if (!dot_path.empty()) write_file(dot_path, g.to_dot());

    Certificate cert("graph prove");
    cert.set_param("vertices", bentlab::CarryGraph::kVertexCount);
    cert.set_param("arcs", static_cast<long long>(g.arcs().size()));
    cert.set_param("max_arc_weight", max_w);
    cert.set_param("attained_at_vertex", attained);
    cert.set_exhaustive();
    cert.add_verdict("all_arc_weights_nonpositive", ok);
    cert.add_verdict("max_weight_exactly_zero", max_w == 0);
    emit(cert, common.out, started);
    return cert.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale verification suite for ternary bent-function and "
                 "carry-inequality facts"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--out", common.out, "Write the certificate to a file instead of stdout");

    int p = 3, n = 2, k = 1;
    long long d = 2, e = 4;
    std::string modulus, a_log, csv, dual_csv, dot_path, coeffs, addends;
    std::string family = "cm";
    bool all_a = false, exhaustive = false;
    long long samples = 50, random_count = 0;
    unsigned long long seed = 0x5eed;

    auto* c_field = app.add_subcommand("field", "Build a field and emit its parameters");
    c_field->add_option("--p", p)->required();
    c_field->add_option("--n", n)->required();
    c_field->add_option("--modulus", modulus, "Override: big-endian coefficients");

    auto* c_spec = app.add_subcommand("spectrum", "Walsh spectrum of a monomial function");
    c_spec->add_option("--p", p);
    c_spec->add_option("--n", n)->required();
    c_spec->add_option("--monomial-a-log", a_log, "a = xi^t, or 'zero'")->required();
    c_spec->add_option("--d", d)->required();
    c_spec->add_option("--modulus", modulus);
    c_spec->add_option("--csv", csv, "Spectrum CSV path (b_index,x,y)");

    auto* c_cls = app.add_subcommand("classify", "Classify a monomial function");
    c_cls->add_option("--p", p);
    c_cls->add_option("--n", n)->required();
    c_cls->add_option("--monomial-a-log", a_log)->required();
    c_cls->add_option("--d", d)->required();
    c_cls->add_option("--modulus", modulus);
    c_cls->add_option("--csv", csv);
    c_cls->add_option("--dual-csv", dual_csv, "Dual table CSV path");

    auto* c_fam = app.add_subcommand("family", "Verify a monomial family instance");
    c_fam->add_option("--family", family, "cm | kasami | hk")->required();
    c_fam->add_option("--k", k)->required();
    c_fam->add_option("--n", n);
    c_fam->add_option("--a-log", a_log);
    c_fam->add_flag("--all-a", all_a);
    c_fam->add_option("--samples", samples);
    c_fam->add_option("--seed", seed);
    c_fam->add_option("--modulus", modulus);

    auto* c_conj = app.add_subcommand("conjecture-dual", "Dual-value candidate check");
    c_conj->add_option("--k", k)->required();
    c_conj->add_option("--modulus", modulus);

    auto* c_cyc = app.add_subcommand("cyclotomy", "Periods, cyclotomic numbers, identities");
    c_cyc->add_option("--p", p)->required();
    c_cyc->add_option("--n", n)->required();
    c_cyc->add_option("--e", e);
    c_cyc->add_option("--modulus", modulus);

    auto* c_wt = app.add_subcommand("weights", "Weight-inequality scan");
    c_wt->add_option("--k", k)->required();
    c_wt->add_flag("--exhaustive", exhaustive);
    c_wt->add_option("--samples", samples);
    c_wt->add_option("--seed", seed);

    auto* c_awc = app.add_subcommand("awc", "Modular add-with-carry solver");
    c_awc->add_option("--p", p);
    c_awc->add_option("--n", n)->required();
    c_awc->add_option("--coeffs", coeffs, "Comma-separated t_j");
    c_awc->add_option("--addends", addends, "Comma-separated a^{(j)}");
    c_awc->add_option("--random", random_count, "Verify this many random instances");
    c_awc->add_option("--seed", seed);

    auto* c_graph = app.add_subcommand("graph", "Carry-graph certificates");
    auto* c_prove = c_graph->add_subcommand("prove", "Arc-weight bound for the standard graph");
    c_prove->add_option("--dot", dot_path, "Also write a DOT rendering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 2;
    }

    try {
        if (*c_field) return run_field(p, n, modulus, common);
        if (*c_spec) return run_spectrum(p, n, modulus, a_log, d, csv, common);
        if (*c_cls) return run_classify(p, n, modulus, a_log, d, csv, dual_csv, common);
        if (*c_fam)
            return run_family(family, n, k, a_log, all_a, samples, seed, modulus, common);
        if (*c_conj) return run_conjecture_dual(k, modulus, common);
        if (*c_cyc) return run_cyclotomy(p, n, e, modulus, common);
        if (*c_wt) return run_weights(k, exhaustive, samples, seed, common);
        if (*c_awc) return run_awc(p, n, coeffs, addends, random_count, seed, common);
        if (*c_graph && *c_prove) return run_graph_prove(dot_path, common);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "verification failure: " << ex.what() << "\n";
        return 1;
    }
}
