// crmin: models generic CR submanifolds through the origin by their
// complexified defining series, decides finite type by iterated Lie
// brackets, and certifies that series pairs satisfying the reality identity
// on a finite-type model have a constant real ratio.
//
// Exit codes: 0 report produced / constant found; 1 usage or parse error;
// 2 validation failure (bad model, oracle mismatch, falsification);
// 3 negative verification outcome (defect_nonzero, not_finite_type);
// 4 insufficient precision.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crmin/constancy.hpp"
#include "crmin/errors.hpp"
#include "crmin/finite_type.hpp"
#include "crmin/fuzz.hpp"
#include "crmin/manifold.hpp"
#include "crmin/oracle.hpp"
#include "crmin/parser.hpp"
#include "crmin/report.hpp"
#include "crmin/specfile.hpp"

namespace {

using crmin::Json;

struct CommandContext {
    std::string spec_path;
    int order_override = 0;
    bool truncate = false;
    std::string format = "text";
    std::string f_override, g_override;
    int max_depth = 0; // 0 = order - 1
    bool trace = false;
    int points = 50;
    std::uint64_t seed = 1;
    int trials = 100;
    int degree = 3;
    std::string mode = "generic";

    crmin::SpecFile spec;
    int order = 0;

    crmin::ReportFormat report_format() const {
        return format == "structured" ? crmin::ReportFormat::Structured
                                      : crmin::ReportFormat::Text;
    }
};

void add_common(CLI::App* cmd, CommandContext& ctx) {
    cmd->add_option("spec", ctx.spec_path, "model spec file")->required();
    cmd->add_option("--order", ctx.order_override, "override the precision order");
    cmd->add_flag("--truncate", ctx.truncate, "truncate inputs of degree >= order instead of rejecting");
    cmd->add_option("--format", ctx.format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
}

void load_spec(CommandContext& ctx) {
    ctx.spec = crmin::load_spec_file(ctx.spec_path);
    ctx.order = ctx.order_override > 0 ? ctx.order_override : ctx.spec.order;
    if (ctx.order < 2)
        throw crmin::ValidationError("the precision order must be >= 2");
}

std::vector<crmin::TruncatedSeries> parse_theta(const CommandContext& ctx) {
    crmin::ParseOptions opt;
    opt.frame = crmin::FrameKind::Full;
    opt.allow_truncation = ctx.truncate;
    std::vector<crmin::TruncatedSeries> theta;
    for (const auto& expr : ctx.spec.theta_exprs)
        theta.push_back(
            crmin::parse_expression(expr, ctx.spec.m, ctx.spec.d, ctx.order, opt));
    return theta;
}

crmin::ManifoldModel load_model(const CommandContext& ctx) {
    return crmin::new_manifold(ctx.spec.m, ctx.spec.d, parse_theta(ctx), ctx.order);
}

crmin::TruncatedSeries parse_t_series(const CommandContext& ctx, const std::string& expr) {
    crmin::ParseOptions opt;
    opt.frame = crmin::FrameKind::T;
    opt.allow_truncation = ctx.truncate;
    return crmin::parse_expression(expr, ctx.spec.m, ctx.spec.d, ctx.order, opt);
}

std::string required_expr(const std::string& override_value,
                          const std::optional<std::string>& from_file, const char* name) {
    if (!override_value.empty()) return override_value;
    if (from_file) return *from_file;
    throw crmin::ParseError(0, std::string("no series '") + name + "' given (use --" +
                                   std::string(name) + " or a spec-file entry)");
}

int effective_depth(const CommandContext& ctx) {
    return ctx.max_depth > 0 ? ctx.max_depth : ctx.order - 1;
}

Json report_header(const CommandContext& ctx, const std::string& command, Json options) {
    Json doc;
    doc["tool"] = "crmin";
    doc["command"] = command;
    doc["spec"] = ctx.spec_path;
    doc["options"] = std::move(options);
    doc["input_digest"] = crmin::input_digest(ctx.spec.raw + "\n" + doc["options"].dump());
    return doc;
}

void emit(const CommandContext& ctx, const Json& doc) {
    std::cout << crmin::render_report(doc, ctx.report_format());
}

int exit_code_for(crmin::CertificateOutcome outcome) {
    switch (outcome) {
        case crmin::CertificateOutcome::ConstantFound: return 0;
        case crmin::CertificateOutcome::DefectNonzero:
        case crmin::CertificateOutcome::NotFiniteType: return 3;
        case crmin::CertificateOutcome::InsufficientPrecision: return 4;
    }
    return 1;
}

int cmd_check(CommandContext& ctx) {
    load_spec(ctx);
    crmin::ModelValidation validation =
        crmin::validate_model(ctx.spec.m, ctx.spec.d, parse_theta(ctx), ctx.order);
    Json doc = report_header(ctx, "check", Json{{"order", ctx.order}});
    doc["model"] = Json{{"m", ctx.spec.m}, {"d", ctx.spec.d}, {"order", ctx.order}};
    doc["outcome"] = validation.ok ? "pass" : "fail";
    doc["checks"] = crmin::checks_json(validation);
    emit(ctx, doc);
    return validation.ok ? 0 : 2;
}

int cmd_finite_type(CommandContext& ctx) {
    load_spec(ctx);
    crmin::ManifoldModel model = load_model(ctx);
    int depth = effective_depth(ctx);
    crmin::FiniteTypeReport report = crmin::finite_type_check(model, depth);
    Json doc = report_header(ctx, "finite-type",
                             Json{{"order", ctx.order}, {"max_depth", depth}});
    doc["model"] = Json{{"m", ctx.spec.m}, {"d", ctx.spec.d}, {"order", ctx.order}};
    Json body = crmin::finite_type_json(report);
    for (auto& [k, v] : body.items()) doc[k] = v;
    emit(ctx, doc);
    return 0;
}

int cmd_verify(CommandContext& ctx, bool corollary_mode) {
    load_spec(ctx);
    crmin::ManifoldModel model = load_model(ctx);
    std::string f_expr = required_expr(ctx.f_override, ctx.spec.f_expr, "f");
    crmin::TruncatedSeries f = parse_t_series(ctx, f_expr);
    std::string g_expr;
    crmin::TruncatedSeries g(model.t_frame(), ctx.order);
    if (corollary_mode) {
        g_expr = "1";
        g = crmin::TruncatedSeries::constant(model.t_frame(), crmin::GaussianRational(1),
                                             ctx.order);
    } else {
        g_expr = required_expr(ctx.g_override, ctx.spec.g_expr, "g");
        g = parse_t_series(ctx, g_expr);
    }
    int depth = effective_depth(ctx);

    crmin::ConstancyCertificate cert =
        crmin::verify_constancy(crmin::SeriesPair(f, g), model, depth, ctx.trace);

    Json doc = report_header(ctx, corollary_mode ? "real" : "verify",
                             Json{{"order", ctx.order},
                                  {"max_depth", depth},
                                  {"f", f_expr},
                                  {"g", g_expr}});
    Json body = crmin::certificate_json(cert);
    for (auto& [k, v] : body.items()) doc[k] = v;
    emit(ctx, doc);
    return exit_code_for(cert.outcome);
}

int cmd_defect(CommandContext& ctx) {
    load_spec(ctx);
    crmin::ManifoldModel model = load_model(ctx);
    std::string f_expr = required_expr(ctx.f_override, ctx.spec.f_expr, "f");
    std::string g_expr = !ctx.g_override.empty()
                             ? ctx.g_override
                             : ctx.spec.g_expr.value_or("1");
    crmin::TruncatedSeries f = parse_t_series(ctx, f_expr);
    crmin::TruncatedSeries g = parse_t_series(ctx, g_expr);
    crmin::TruncatedSeries defect = crmin::reality_defect(crmin::SeriesPair(f, g), model);

    Json doc = report_header(ctx, "defect",
                             Json{{"order", ctx.order}, {"f", f_expr}, {"g", g_expr}});
    doc["defect_empty"] = defect.empty();
    doc["precision"] = defect.precision();
    doc["series"] = crmin::to_string(defect);
    if (!defect.empty()) {
        doc["witness"] =
            crmin::monomial_string(defect.frame(), defect.leading_term()->first);
        doc["witness_coefficient"] = crmin::gaussian_json(defect.leading_term()->second);
    }
    emit(ctx, doc);
    return 0;
}

int cmd_eval_oracle(CommandContext& ctx) {
    load_spec(ctx);
    // Validate the model at the declared order before re-running inflated.
    load_model(ctx);
    crmin::OracleOptions opts;
    opts.points = ctx.points;
    opts.seed = ctx.seed;
    crmin::OracleResult result = crmin::run_eval_oracle(
        ctx.spec.m, ctx.spec.d, ctx.spec.theta_exprs,
        !ctx.f_override.empty() ? ctx.f_override : ctx.spec.f_expr.value_or(""),
        !ctx.g_override.empty() ? ctx.g_override : ctx.spec.g_expr.value_or(""), opts);

    Json doc = report_header(ctx, "eval-oracle",
                             Json{{"order", ctx.order},
                                  {"points", ctx.points},
                                  {"seed", std::to_string(ctx.seed)}});
    doc["working_precision"] = result.working_precision;
    doc["points_sampled"] = result.points_sampled;
    doc["outcome"] = result.all_match ? "all_equal" : "mismatch";
    Json checks = Json::array();
    for (const auto& c : result.checks) {
        Json j;
        j["operation"] = c.name;
        j["comparisons"] = c.comparisons;
        j["mismatches"] = c.mismatches;
        if (!c.first_mismatch.empty()) j["first_mismatch_at"] = c.first_mismatch;
        checks.push_back(std::move(j));
    }
    doc["checks"] = checks;
    emit(ctx, doc);
    if (!result.all_match) {
        for (const auto& c : result.checks)
            if (c.mismatches > 0)
                std::cerr << "numeric oracle mismatch in operation '" << c.name << "' at "
                          << c.first_mismatch << "\n";
        return 2;
    }
    return 0;
}

int cmd_fuzz(CommandContext& ctx) {
    load_spec(ctx);
    crmin::ManifoldModel model = load_model(ctx);
    crmin::FuzzOptions opts;
    opts.trials = ctx.trials;
    opts.seed = ctx.seed;
    opts.max_degree = static_cast<std::uint32_t>(ctx.degree);
    opts.max_depth = ctx.max_depth;
    opts.proportional_mode = ctx.mode == "proportional";
    crmin::FuzzResult result = crmin::run_fuzz(model, opts);

    Json doc = report_header(ctx, "fuzz",
                             Json{{"order", ctx.order},
                                  {"trials", ctx.trials},
                                  {"seed", std::to_string(ctx.seed)},
                                  {"degree", ctx.degree},
                                  {"mode", ctx.mode}});
    doc["outcome"] = result.falsification ? "falsified" : "pass";
    Json buckets;
    buckets["constant_found"] = result.constant_found;
    buckets["defect_nonzero"] = result.defect_nonzero;
    buckets["not_finite_type"] = result.not_finite_type;
    buckets["insufficient_precision"] = result.insufficient_precision;
    doc["buckets"] = std::move(buckets);
    if (opts.proportional_mode) doc["planted_recovered"] = result.planted_recovered;
    if (result.falsification) doc["falsification"] = *result.falsification;
    emit(ctx, doc);
    if (result.falsification) {
        std::cerr << "falsifying instance: " << *result.falsification << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-type and formal-constancy checker for CR manifold models"};
    app.require_subcommand(1);

    CommandContext ctx;

    CLI::App* check = app.add_subcommand("check", "validate a model spec file");
    add_common(check, ctx);

    CLI::App* ftype = app.add_subcommand("finite-type", "rank-per-depth table and type length");
    add_common(ftype, ctx);
    ftype->add_option("--max-depth", ctx.max_depth, "deepest bracket word to try");

    CLI::App* verify = app.add_subcommand("verify", "full constancy certificate for a pair f, g");
    add_common(verify, ctx);
    verify->add_option("--f", ctx.f_override, "series f (overrides the spec file)");
    verify->add_option("--g", ctx.g_override, "series g (overrides the spec file)");
    verify->add_option("--max-depth", ctx.max_depth, "deepest bracket word to try");
    verify->add_flag("--trace", ctx.trace, "record the per-monomial induction trace");

    CLI::App* real = app.add_subcommand("real", "corollary mode: g = 1, certify f constant");
    add_common(real, ctx);
    real->add_option("--f", ctx.f_override, "series f (overrides the spec file)");
    real->add_option("--max-depth", ctx.max_depth, "deepest bracket word to try");
    real->add_flag("--trace", ctx.trace, "record the per-monomial induction trace");

    CLI::App* defect = app.add_subcommand("defect", "print the restricted reality defect");
    add_common(defect, ctx);
    defect->add_option("--f", ctx.f_override, "series f (overrides the spec file)");
    defect->add_option("--g", ctx.g_override, "series g (defaults to 1)");

    CLI::App* oracle = app.add_subcommand("eval-oracle",
                                          "numeric point cross-check of the symbolic engine");
    add_common(oracle, ctx);
    oracle->add_option("--points", ctx.points, "random points to sample");
    oracle->add_option("--seed", ctx.seed, "PRNG seed");
    oracle->add_option("--f", ctx.f_override, "series f (random when absent)");
    oracle->add_option("--g", ctx.g_override, "series g (random when absent)");

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized verification trials");
    add_common(fuzz, ctx);
    fuzz->add_option("--trials", ctx.trials, "number of random pairs");
    fuzz->add_option("--seed", ctx.seed, "PRNG seed");
    fuzz->add_option("--degree", ctx.degree, "max degree of sampled series");
    fuzz->add_option("--mode", ctx.mode, "generic|proportional")
        ->check(CLI::IsMember({"generic", "proportional"}));
    fuzz->add_option("--max-depth", ctx.max_depth, "deepest bracket word to try");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check(ctx);
        if (ftype->parsed()) return cmd_finite_type(ctx);
        if (verify->parsed()) return cmd_verify(ctx, false);
        if (real->parsed()) return cmd_verify(ctx, true);
        if (defect->parsed()) return cmd_defect(ctx);
        if (oracle->parsed()) return cmd_eval_oracle(ctx);
        if (fuzz->parsed()) return cmd_fuzz(ctx);
    } catch (const crmin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const crmin::InsufficientPrecisionError& e) {
        std::cerr << "insufficient precision: " << e.what() << "\n";
        return 4;
    } catch (const crmin::ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    } catch (const crmin::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
