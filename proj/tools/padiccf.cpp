// padiccf: exact arithmetic for Ruban/Browkin p-adic continued fractions,
// with hypothesis checkers for palindromic/quasi-periodic transcendence
// criteria, quantitative Ridout bounds, and growth statistics.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "padiccf/cf.hpp"
#include "padiccf/criteria.hpp"
#include "padiccf/growth.hpp"
#include "padiccf/io.hpp"
#include "padiccf/ridout.hpp"
#include "padiccf/structure.hpp"

using namespace padiccf;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecision = 3;

unsigned thread_budget() {
    const char* env = std::getenv("PADICCF_THREADS");
    if (!env) return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1) return 1;
    if (v > 64) return 64;
    return static_cast<unsigned>(v);
}

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw ParseError("cannot open output file '" + path + "'");
        out << text;
    }
};

json envelope(const std::string& command, json results, std::vector<std::string> warnings = {}) {
    return json{{"schemaVersion", kSchemaVersion},
                {"command", command},
                {"results", std::move(results)},
                {"warnings", warnings}};
}

json expansion_json(const CFExpansion& cf) {
    json quotients = json::array();
    for (const auto& q : cf.quotients) quotients.push_back(q.get_str());
    json complete = json::array();
    for (const auto& c : cf.complete) complete.push_back(field_value_str(c));
    json j = {{"p", cf.context.p.get_str()},
              {"mode", mode_name(cf.context.mode)},
              {"quotients", quotients},
              {"complete_quotients", complete},
              {"termination", termination_name(cf.termination.kind)}};
    if (cf.termination.kind == TerminationKind::Periodic) {
        j["preperiod"] = cf.termination.preperiod;
        j["period"] = cf.termination.period;
    }
    if (cf.termination.kind == TerminationKind::PrecisionExhausted)
        j["failed_index"] = cf.termination.index;
    return j;
}

json convergents_json(const std::vector<ConvergentPair>& conv) {
    json arr = json::array();
    for (const auto& c : conv) {
        json e = {{"i", c.index},
                  {"A", c.A.get_str()},
                  {"B", c.B.get_str()},
                  {"vpA", c.vpA.str()},
                  {"vpB", c.vpB.str()},
                  {"archA", c.archA.get_str()},
                  {"archB", c.archB.get_str()},
                  {"arch_B_le_padic", c.arch_B_le_padic}};
        if (c.arch_A_le_padic) e["arch_A_le_padic"] = *c.arch_A_le_padic;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string convergents_csv(const std::vector<ConvergentPair>& conv) {
    std::string out = "i,A,B,vpA,vpB,archA,archB\n";
    for (const auto& c : conv)
        out += std::to_string(c.index) + "," + c.A.get_str() + "," + c.B.get_str() + "," +
               c.vpA.str() + "," + c.vpB.str() + "," + c.archA.get_str() + "," + c.archB.get_str() +
               "\n";
    return out;
}

// shared input options for commands that take a number
struct NumberInput {
    std::string value;
    std::string surd;
    std::string seqfile;
    std::string branch = "+";
    std::string p = "5";
    std::string mode = "browkin";
    long max_terms = 200;
    long precision = 64;

    void attach(CLI::App* cmd, bool with_seq = true) {
        auto* g = cmd->add_option_group("input", "exactly one input source");
        g->add_option("--value", value, "rational input, e.g. 1/3");
        g->add_option("--surd", surd, "surd input, e.g. \"(-1/10 + 1/10*sqrt(101))\"");
        if (with_seq) g->add_option("--seqfile", seqfile, "partial-quotient file (b_1 onward)");
        g->require_option(1);
        cmd->add_option("--branch", branch, "Hensel branch of sqrt(D): + or -")
            ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
        cmd->add_option("--p", p, "odd prime p");
        cmd->add_option("--mode", mode, "floor digit set")->check(CLI::IsMember({"browkin", "ruban"}));
        cmd->add_option("--max-terms", max_terms, "expansion term cap")->check(CLI::PositiveNumber);
        cmd->add_option("--precision", precision, "certified sqrt(D) digit budget")
            ->check(CLI::PositiveNumber);
    }

    PadicContext context() const {
        return PadicContext(Int(p), mode == "ruban" ? Mode::Ruban : Mode::Browkin, precision);
    }

    bool is_sequence() const { return !seqfile.empty(); }

    // quotients b_0, b_1, ... : either expanded from the value/surd or read
    // from the sequence file (which lists b_1 onward; b_0 = 0 is implied)
    CFExpansion expansion(const PadicContext& ctx) const {
        if (!value.empty()) return expand(parse_rational(value), ctx, static_cast<std::size_t>(max_terms));
        if (!surd.empty())
            return expand(parse_surd(surd, parse_branch(branch)), ctx, static_cast<std::size_t>(max_terms));
        throw ParseError("this command needs --value or --surd");
    }

    std::vector<Rat> quotients_with_b0(const PadicContext& ctx, std::vector<std::string>* warnings) const {
        if (is_sequence()) {
            std::vector<Rat> full{Rat(0)};
            for (auto& q : read_sequence_file(seqfile)) full.push_back(q);
            return full;
        }
        CFExpansion cf = expansion(ctx);
        if (cf.termination.kind == TerminationKind::PrecisionExhausted)
            throw PrecisionExhausted("expansion lost precision at index " +
                                         std::to_string(cf.termination.index),
                                     0, ctx.precision);
        if (warnings && cf.termination.kind == TerminationKind::Truncated)
            warnings->push_back("expansion truncated at " + std::to_string(max_terms) + " terms");
        return unroll(cf, static_cast<std::size_t>(max_terms) + 1);
    }
};

json g_metadata;  // attached to payloads when --metadata is given

int emit(const Output& out, const json& payload, int code) {
    json p = payload;
    if (!g_metadata.is_null()) p["metadata"] = g_metadata;
    out.write(p.dump(2) + "\n");
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic continued fractions: expansions, convergent identities,\n"
                 "palindrome/quasi-periodicity analysis, quantitative Ridout bounds,\n"
                 "Liouville scans and growth statistics"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    app.add_option("--output", output.path, "write the report to a file instead of stdout");

    std::string format = "json";
    app.add_option("--format", format, "json, csv or text (where supported)")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    bool with_metadata = false;
    app.add_flag("--metadata", with_metadata,
                 "attach an environment block (breaks byte-stability across machines)");

    // ---- expand ----
    auto* c_expand = app.add_subcommand("expand", "run the floor/step expansion algorithm");
    NumberInput in_expand;
    in_expand.attach(c_expand, false);

    // ---- convergents ----
    auto* c_conv = app.add_subcommand("convergents", "convergents with valuations and sizes");
    NumberInput in_conv;
    in_conv.attach(c_conv);

    // ---- analyze ----
    auto* c_analyze = app.add_subcommand("analyze", "palindromes, repetition blocks, growth statistic");
    std::string an_seqfile;
    std::size_t an_min_lambda = 2;
    c_analyze->add_option("--seqfile", an_seqfile, "partial-quotient file (b_1 onward)")->required();
    c_analyze->add_option("--min-lambda", an_min_lambda, "minimum repetition count")
        ->check(CLI::Range(std::size_t(2), std::size_t(1000000)));

    // ---- check ----
    auto* c_check = app.add_subcommand("check", "run a criterion checker");
    NumberInput in_check;
    in_check.attach(c_check);
    std::string criterion;
    c_check->add_option("--criterion", criterion, "criterion name")
        ->required()
        ->check(CLI::IsMember({"growth-margin", "palindrome-approximation", "matrix-symmetry",
                               "quasi-periodic", "golden-bound", "tail-quadratic",
                               "subspace-product"}));
    std::string ck_epsilon = "1/10";
    long ck_i0 = 1;
    long ck_n = 0;
    std::size_t ck_h = 1, ck_k = 1, ck_min_lambda = 2;
    std::string ck_bigC = "1";
    c_check->add_option("--epsilon", ck_epsilon, "rational epsilon u/w");
    c_check->add_option("--i0", ck_i0, "first index checked");
    c_check->add_option("--n", ck_n, "palindromic index for subspace-product");
    c_check->add_option("--start", ck_h, "tail start h (tail-quadratic)");
    c_check->add_option("--period", ck_k, "tail period k (tail-quadratic)");
    c_check->add_option("--bigC", ck_bigC, "rational C in k < C n (quasi-periodic)");
    c_check->add_option("--min-lambda", ck_min_lambda, "minimum repetition count (quasi-periodic)");

    // ---- ridout-bound ----
    auto* c_bound = app.add_subcommand("ridout-bound", "quantitative Ridout constants and bounds");
    std::size_t rb_n = 2;
    std::string rb_epsilon = "1/3";
    std::string rb_variant = "exact-kl";
    std::string rb_minpoly;
    c_bound->add_option("--n", rb_n, "algebraic degree")->check(CLI::Range(std::size_t(2), std::size_t(64)));
    c_bound->add_option("--epsilon", rb_epsilon, "rational epsilon u/w")->required();
    c_bound->add_option("--variant", rb_variant, "bound form")
        ->check(CLI::IsMember({"params", "exact-kl", "theorem-half", "corollary-full",
                               "remark-single-exp"}));
    c_bound->add_option("--minpoly", rb_minpoly, "monic coefficients, e.g. 1,0,-6");

    // ---- ridout-enumerate ----
    auto* c_enum = app.add_subcommand("ridout-enumerate", "enumerate approximation-inequality solutions");
    std::string re_minpoly, re_p = "5", re_branch = "+", re_epsilon = "1/2", re_hmax = "100";
    std::string re_variant = "half";
    bool re_gap_law = true;
    c_enum->add_option("--minpoly", re_minpoly, "monic coefficients, e.g. 1,0,-6")->required();
    c_enum->add_option("--p", re_p, "odd prime p");
    c_enum->add_option("--branch", re_branch, "+ or -");
    c_enum->add_option("--epsilon", re_epsilon, "rational epsilon u/w")->required();
    c_enum->add_option("--hmax", re_hmax, "denominator bound");
    c_enum->add_option("--variant", re_variant, "half: < 1/(2 B^(2+eps)); full: < 1/B^(2+eps)")
        ->check(CLI::IsMember({"half", "full"}));
    c_enum->add_flag("--gap-law,!--no-gap-law", re_gap_law, "check the consecutive-denominator gap law");

    // ---- liouville ----
    auto* c_liou = app.add_subcommand("liouville", "effective Liouville constant and exhaustive scan");
    std::string li_minpoly, li_p = "5", li_branch = "+", li_hmax = "100";
    c_liou->add_option("--minpoly", li_minpoly, "monic coefficients, e.g. 1,0,-6")->required();
    c_liou->add_option("--p", li_p, "odd prime p");
    c_liou->add_option("--branch", li_branch, "+ or -");
    c_liou->add_option("--hmax", li_hmax, "height bound for the scan");

    // ---- growth ----
    auto* c_growth = app.add_subcommand("growth", "golden-ratio bound margins and log-log statistic");
    NumberInput in_growth;
    in_growth.attach(c_growth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (with_metadata)
            g_metadata = {{"gmp", gmp_version ? gmp_version : "?"},
                          {"threads", thread_budget()},
                          {"compiler", __VERSION__}};

        std::vector<std::string> warnings;

        if (*c_expand) {
            PadicContext ctx = in_expand.context();
            CFExpansion cf = in_expand.expansion(ctx);
            int code = cf.termination.kind == TerminationKind::PrecisionExhausted ? kExitPrecision : kExitOk;
            if (format == "text") {
                std::string t;
                for (const auto& q : cf.quotients) t += q.get_str() + "\n";
                t += "# termination: " + std::string(termination_name(cf.termination.kind)) + "\n";
                output.write(t);
                return code;
            }
            return emit(output, envelope("expand", expansion_json(cf), warnings), code);
        }

        if (*c_conv) {
            PadicContext ctx = in_conv.context();
            auto quotients = in_conv.quotients_with_b0(ctx, &warnings);
            auto conv = in_conv.is_sequence() ? convergents_of(quotients, ctx.p)
                                              : convergents(in_conv.expansion(ctx));
            if (format == "csv") {
                output.write(convergents_csv(conv));
                return kExitOk;
            }
            return emit(output, envelope("convergents", convergents_json(conv), warnings), kExitOk);
        }

        if (*c_analyze) {
            auto pqs = read_sequence_file(an_seqfile);
            auto pal = palindromic_prefixes(pqs);
            auto blocks = detect_repetitions(pqs, an_min_lambda);
            auto stat = growth_statistic(blocks);
            json jblocks = json::array();
            for (const auto& b : blocks)
                jblocks.push_back({{"n", b.n}, {"k", b.k}, {"lambda", b.lambda}});
            json jstat = json::array();
            for (double s : stat.values) jstat.push_back(s);
            json results = {{"palindromes", pal.lengths}, {"blocks", jblocks}, {"statistic", jstat}};
            if (!stat.not_evaluable.empty()) results["not_evaluable_blocks"] = stat.not_evaluable;
            return emit(output, envelope("analyze", results, warnings), kExitOk);
        }

        if (*c_check) {
            PadicContext ctx = in_check.context();
            auto quotients = in_check.quotients_with_b0(ctx, &warnings);
            auto conv = convergents_of(quotients, ctx.p);
            std::vector<Rat> tail(quotients.begin() + 1, quotients.end());
            json results;
            bool ok = true;

            if (criterion == "growth-margin") {
                auto rep = growth_margin_check(conv, ctx.p, ck_i0);
                results = rep.to_json();
                ok = rep.holds_on_range();
            } else if (criterion == "golden-bound") {
                auto rep = golden_bound_check(conv);
                results = rep.to_json();
                ok = rep.holds_on_range();
            } else if (criterion == "matrix-symmetry") {
                auto rep = verify_matrix_symmetry(conv, palindromic_prefixes(tail));
                results = rep.to_json();
                ok = rep.holds_on_range();
            } else if (criterion == "palindrome-approximation") {
                if (in_check.surd.empty())
                    throw ParseError("palindrome-approximation needs --surd (the expanded number)");
                SurdElement x = parse_surd(in_check.surd, parse_branch(in_check.branch));
                auto rep = palindrome_approximation_check(x, conv, palindromic_prefixes(tail), ctx);
                results = rep.to_json();
                ok = rep.holds_on_range();
            } else if (criterion == "subspace-product") {
                if (in_check.surd.empty()) throw ParseError("subspace-product needs --surd");
                if (ck_n < 1) throw ParseError("subspace-product needs --n >= 1");
                SurdElement x = parse_surd(in_check.surd, parse_branch(in_check.branch));
                auto diag = subspace_product(x, conv, static_cast<std::size_t>(ck_n),
                                             parse_rational(ck_epsilon), ctx);
                json jf = json::array();
                for (const auto& f : diag.factors) jf.push_back({{"factor", f.name}, {"value", f.value}});
                results = {{"criterion", "subspace-product"},
                           {"factors", jf},
                           {"product_lt_one", diag.product_lt_one},
                           {"zero_factor", diag.zero_factor},
                           {"chain_exponent", diag.chain_exponent.get_str()},
                           {"chain_negative", diag.chain_negative}};
                ok = diag.product_lt_one;
            } else if (criterion == "tail-quadratic") {
                auto rel = tail_quadratic(tail, ck_h, ck_k, ctx);
                results = {{"criterion", "tail-quadratic"},
                           {"P", rel.P.get_str()},
                           {"Q", rel.Q.get_str()},
                           {"R", rel.R.get_str()},
                           {"height_bound", rel.height_bound.get_str()},
                           {"height_ok", rel.height_ok},
                           {"root_verified", rel.root_verified}};
                if (rel.eta) results["eta"] = field_value_str(*rel.eta);
                ok = rel.height_ok && (!rel.eta || rel.root_verified);
            } else if (criterion == "quasi-periodic") {
                auto blocks = detect_repetitions(tail, ck_min_lambda);
                auto res = quasiperiodic_check(conv, blocks, parse_rational(ck_bigC), ck_i0);
                json jblocks = json::array();
                for (const auto& b : blocks)
                    jblocks.push_back({{"n", b.n}, {"k", b.k}, {"lambda", b.lambda}});
                json jstat = json::array();
                for (double s : res.statistic.values) jstat.push_back(s);
                results = {{"criterion", "quasi-periodic"},
                           {"arch", res.arch.to_json()},
                           {"blocks", jblocks},
                           {"block_gap", res.blocks.to_json()},
                           {"statistic", jstat},
                           {"trend_slope", res.trend_slope},
                           {"verdict", res.verdict}};
                ok = res.arch.holds_on_range() && res.blocks.holds_on_range();
            }
            return emit(output, envelope("check", results, warnings), ok ? kExitOk : kExitViolation);
        }

        if (*c_bound) {
            Rat eps = parse_rational(rb_epsilon);
            json results;
            if (rb_variant == "params" || rb_minpoly.empty()) {
                RidoutParams rp = rb_minpoly.empty()
                                      ? ridout_params(rb_n, eps)
                                      : ridout_params(rb_n, eps,
                                                      MinimalPolynomial(parse_coefficients(rb_minpoly)).abar());
                results = {{"n", rb_n},
                           {"epsilon", eps.get_str()},
                           {"m", rp.m.get_str()},
                           {"log10_delta_inv", rp.log10_delta_inv.get_str()},
                           {"k", rp.k.to_json()},
                           {"l", rp.l.to_json()},
                           {"chat", rp.chat},
                           {"conditions",
                            {{"delta_below_inverse_m", rp.conditions.delta_below_inverse_m},
                             {"exponent_bound", rp.conditions.exponent_bound},
                             {"eta_margin", rp.conditions.eta_margin}}}};
                if (rb_variant != "params") {
                    MinimalPolynomial mp(parse_coefficients(rb_minpoly));
                    CountBound cb = count_bound(mp, eps, BoundVariant::ExactKL);
                    results["bound"] = cb.bound.to_json();
                    results["variant"] = variant_name(cb.variant);
                    results["audit"] = cb.audit;
                }
            } else {
                MinimalPolynomial mp(parse_coefficients(rb_minpoly));
                BoundVariant v = BoundVariant::ExactKL;
                if (rb_variant == "theorem-half") v = BoundVariant::TheoremHalf;
                else if (rb_variant == "corollary-full") v = BoundVariant::CorollaryFull;
                else if (rb_variant == "remark-single-exp") v = BoundVariant::RemarkSingleExp;
                CountBound cb = count_bound(mp, eps, v);
                RidoutParams rp = ridout_params(mp.degree(), v == BoundVariant::TheoremHalf || v == BoundVariant::ExactKL ? eps : eps / 2, mp.abar());
                results = {{"n", mp.degree()},
                           {"epsilon", eps.get_str()},
                           {"variant", variant_name(cb.variant)},
                           {"m", rp.m.get_str()},
                           {"log10_delta_inv", rp.log10_delta_inv.get_str()},
                           {"bound", cb.bound.to_json()},
                           {"log_term", cb.log_term.to_json()},
                           {"exp_term", cb.exp_term.to_json()},
                           {"instantiated_C", cb.instantiated_C},
                           {"audit", cb.audit},
                           {"chat", c_hat(mp)},
                           {"conditions",
                            {{"delta_below_inverse_m", rp.conditions.delta_below_inverse_m},
                             {"exponent_bound", rp.conditions.exponent_bound},
                             {"eta_margin", rp.conditions.eta_margin}}}};
            }
            return emit(output, envelope("ridout-bound", results, warnings), kExitOk);
        }

        if (*c_enum) {
            MinimalPolynomial mp(parse_coefficients(re_minpoly));
            Rat eps = parse_rational(re_epsilon);
            IneqVariant variant = re_variant == "half" ? IneqVariant::Half : IneqVariant::Full;
            auto sols = enumerate_solutions(mp, Int(re_p), parse_branch(re_branch), eps, Int(re_hmax),
                                            variant, thread_budget());
            json jsols = json::array();
            for (const auto& s : sols)
                jsols.push_back({{"A", s.A.get_str()},
                                 {"B", s.B.get_str()},
                                 {"defect_valuation", s.defect_valuation}});
            json results = {{"minpoly", re_minpoly},
                            {"p", re_p},
                            {"epsilon", eps.get_str()},
                            {"variant", re_variant},
                            {"hmax", re_hmax},
                            {"count", sols.size()},
                            {"solutions", jsols}};
            int code = kExitOk;
            if (re_gap_law && variant == IneqVariant::Half) {
                auto rep = gap_law_check(sols, eps);
                results["gap_law"] = rep.to_json();
                if (!rep.holds_on_range()) code = kExitViolation;
            }
            return emit(output, envelope("ridout-enumerate", results, warnings), code);
        }

        if (*c_liou) {
            MinimalPolynomial mp(parse_coefficients(li_minpoly));
            auto scan = liouville_scan(mp, Int(li_p), parse_branch(li_branch), Int(li_hmax));
            json results = {{"minpoly", li_minpoly},
                            {"p", li_p},
                            {"c", scan.constant.c.get_str()},
                            {"fprime_valuation", scan.constant.fprime_valuation},
                            {"coeff_abs_sum", scan.constant.coeff_abs_sum.get_str()},
                            {"scan", scan.report.to_json()}};
            if (scan.min_slack_pair)
                results["min_slack"] = {{"a", scan.min_slack_pair->first.get_str()},
                                        {"b", scan.min_slack_pair->second.get_str()},
                                        {"slack", scan.min_slack.get_str()}};
            return emit(output, envelope("liouville", results, warnings),
                        scan.report.holds_on_range() ? kExitOk : kExitViolation);
        }

        if (*c_growth) {
            PadicContext ctx = in_growth.context();
            auto quotients = in_growth.quotients_with_b0(ctx, &warnings);
            auto conv = convergents_of(quotients, ctx.p);
            auto golden = golden_bound_check(conv);
            auto rep = loglog_statistic(conv, ctx.p);
            if (format == "csv") {
                std::string t = "k,vpB,s_k,flag_f_ge_e,flag_arch\n";
                for (const auto& r : rep.rows)
                    t += std::to_string(r.k) + "," + std::to_string(r.vpB) + "," +
                         std::to_string(r.s) + "," +
                         (r.f_ge_e ? (*r.f_ge_e ? "1" : "0") : "") + "," +
                         (r.arch_dominated ? (*r.arch_dominated ? "1" : "0") : "") + "\n";
                output.write(t);
                return golden.holds_on_range() ? kExitOk : kExitViolation;
            }
            json rows = json::array();
            for (const auto& r : rep.rows) {
                json e = {{"k", r.k}, {"vpB", r.vpB}, {"s", r.s}};
                if (r.f_ge_e) e["f_ge_e"] = *r.f_ge_e;
                if (r.arch_dominated) e["arch_dominated"] = *r.arch_dominated;
                rows.push_back(std::move(e));
            }
            json results = {{"golden_bound", golden.to_json()},
                            {"rows", rows},
                            {"max_value", rep.max_value},
                            {"trend_slope", rep.trend_slope}};
            return emit(output, envelope("growth", results, warnings),
                        golden.holds_on_range() ? kExitOk : kExitViolation);
        }

        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const EpsilonOutOfRange& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
