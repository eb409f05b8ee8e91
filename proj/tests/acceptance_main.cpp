// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance <path-to-crmin-cli> <tests-dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "crmin/constancy.hpp"
#include "crmin/finite_type.hpp"
#include "crmin/fuzz.hpp"
#include "crmin/linalg.hpp"
#include "crmin/oracle.hpp"
#include "crmin/parser.hpp"
#include "crmin/random.hpp"

using namespace crmin;

namespace {

std::string g_cli, g_tests_dir;

struct Failure : std::runtime_error {
    explicit Failure(const std::string& msg) : std::runtime_error(msg) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

TruncatedSeries parse_frame(const std::string& text, FrameKind kind, int m, int d, int order) {
    ParseOptions opt;
    opt.frame = kind;
    return parse_expression(text, m, d, order, opt);
}

ManifoldModel model_from(const std::string& theta, int m, int d, int order) {
    return new_manifold(m, d, {parse_frame(theta, FrameKind::Full, m, d, order)}, order);
}

ManifoldModel heisenberg(int order) { return model_from("w1 - 2*i*z1*zeta1", 1, 1, order); }

ManifoldModel power_model(int k, int order) {
    std::string p = std::to_string(k);
    return model_from("w1 - 2*i*z1^" + p + "*zeta1^" + p, 1, 1, order);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VectorField random_field(SplitMix64& rng, const VariableFrame& frame, int precision) {
    SeriesSampler sampler;
    sampler.max_degree = 2;
    sampler.density_percent = 30;
    std::vector<TruncatedSeries> comps;
    for (std::size_t i = 0; i < frame.arity(); ++i)
        comps.push_back(random_series(rng, frame, precision, sampler));
    return VectorField(frame, std::move(comps));
}

// All bracket trees (every shape, every label) up to max_len; rank of the
// accumulated origin evaluations after each length. Independent of the
// left-normed search path.
std::vector<int> brute_force_ranks(const ManifoldModel& model, int max_len) {
    auto l = build_L_fields(model);
    auto u = build_U_fields(model);
    std::vector<std::vector<VectorField>> by_len(static_cast<std::size_t>(max_len) + 1);
    for (const auto& f : l) by_len[1].push_back(f);
    for (const auto& f : u) by_len[1].push_back(f);
    for (int len = 2; len <= max_len; ++len)
        for (int a = 1; a < len; ++a)
            for (const auto& fa : by_len[a])
                for (const auto& fb : by_len[len - a])
                    by_len[len].push_back(lie_bracket(fa, fb));
    std::vector<int> ranks;
    std::vector<std::vector<GaussianRational>> rows;
    for (int len = 1; len <= max_len; ++len) {
        for (const auto& f : by_len[len]) rows.push_back(evaluate_at_origin(f));
        ranks.push_back(static_cast<int>(rank(rows)));
    }
    return ranks;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "cd '" + g_tests_dir + "/data' && '" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "popen failed");
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_golden(const std::string& name) {
    std::string path = g_tests_dir + "/golden/" + name;
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "missing golden file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- criteria -------------------------------------------------------------

void criterion_heisenberg_type() {
    auto report = finite_type_check(heisenberg(8), 7);
    require(report.finite_type, "expected finite type");
    require(report.type_length == 2, "expected type 2");
    require(report.span_by_depth == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}},
            "expected rank table [1->2, 2->3]");

    auto start = std::chrono::steady_clock::now();
    auto cli = run_cli("finite-type heisenberg.spec --format structured");
    double elapsed = seconds_since(start);
    require(cli.exit_code == 0, "finite-type command failed");
    require(cli.output.find("\"type_length\": 2") != std::string::npos,
            "command output lacks type 2");
    require(elapsed < 1.0, "took " + std::to_string(elapsed) + "s, budget 1s");
}

void criterion_power_models() {
    for (int k : {1, 2, 3}) {
        int order = 2 * k + 2;
        auto model = power_model(k, order);
        auto report = finite_type_check(model, 2 * k);
        require(report.finite_type, "k=" + std::to_string(k) + ": expected finite type");
        require(report.type_length == 2 * k,
                "k=" + std::to_string(k) + ": expected type " + std::to_string(2 * k) +
                    ", got " + std::to_string(report.type_length));
        auto oracle = brute_force_ranks(model, 2 * k);
        for (int depth = 1; depth <= 2 * k; ++depth)
            require(report.span_by_depth[depth - 1].second == oracle[depth - 1],
                    "k=" + std::to_string(k) + ": rank mismatch with the all-shapes oracle at depth " +
                        std::to_string(depth));
    }
}

void criterion_levi_flat() {
    auto model = model_from("w1", 1, 1, 8);
    auto report = finite_type_check(model, 7);
    require(!report.finite_type, "flat model must be undetermined");
    require(report.span_by_depth.size() == 7, "expected 7 depth entries");
    for (const auto& [depth, r] : report.span_by_depth)
        require(r == 2, "rank must stall at 2");

    auto f = parse_frame("w1", FrameKind::T, 1, 1, 8);
    auto one = parse_frame("1", FrameKind::T, 1, 1, 8);
    auto cert = verify_constancy(SeriesPair(f, one), model, 7);
    require(cert.outcome == CertificateOutcome::NotFiniteType, "expected not_finite_type");
    require(cert.defect_empty, "w is real on the flat model: defect must be empty");
}

void criterion_planted_recovery() {
    auto start = std::chrono::steady_clock::now();
    struct Case {
        ManifoldModel model;
        std::uint64_t seed;
    };
    std::vector<Case> cases;
    cases.push_back({heisenberg(10), 1001});
    cases.push_back({power_model(2, 18), 1002});
    for (const auto& c : cases) {
        FuzzOptions opts;
        opts.trials = 100;
        opts.seed = c.seed;
        opts.max_degree = 4;
        opts.proportional_mode = true;
        FuzzResult result = run_fuzz(c.model, opts);
        require(!result.falsification,
                "planted constant lost: " + result.falsification.value_or(""));
        require(result.planted_recovered == 100,
                "recovered " + std::to_string(result.planted_recovered) + "/100");
    }
    double elapsed = seconds_since(start);
    require(elapsed < 30.0, "took " + std::to_string(elapsed) + "s, budget 30s");
}

void criterion_falsification_suite() {
    FuzzOptions opts;
    opts.trials = 1000;
    opts.seed = 20250809;
    opts.max_degree = 3;
    FuzzResult result = run_fuzz(heisenberg(8), opts);
    require(!result.falsification,
            "counterexample found: " + result.falsification.value_or(""));
    require(result.not_finite_type == 0, "Heisenberg is finite type");
    require(result.trials == 1000, "expected 1000 trials");
}

void criterion_universal_identity() {
    VariableFrame intr(FrameKind::Intrinsic, 1, 1);
    SplitMix64 rng(424242);
    SeriesSampler sampler;
    sampler.max_degree = 3;
    for (int t = 0; t < 200; ++t) {
        auto r = random_field(rng, intr, 8);
        auto s = random_field(rng, intr, 8);
        auto f = random_series(rng, intr, 8, sampler);
        auto g = random_series(rng, intr, 8, sampler);
        require(leibniz_bracket_identity(r, s, f, g).empty(),
                "identity violated at instance " + std::to_string(t));
    }
}

void criterion_bracket_engine() {
    VariableFrame intr(FrameKind::Intrinsic, 1, 1);
    SplitMix64 rng(515151);
    for (int t = 0; t < 100; ++t) {
        auto x = random_field(rng, intr, 8);
        auto y = random_field(rng, intr, 8);
        auto z = random_field(rng, intr, 8);
        require(lie_bracket(x, x).is_zero(), "[X,X] != 0");
        require((lie_bracket(x, y) + lie_bracket(y, x)).is_zero(), "antisymmetry failed");
        auto jacobi = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                      lie_bracket(z, lie_bracket(x, y));
        require(jacobi.is_zero(), "Jacobi failed at triple " + std::to_string(t));
    }
}

void criterion_frame_inversion() {
    auto model = heisenberg(8);
    auto report = finite_type_check(model, 7);
    auto a = invert_bracket_frame(model, report.spanning_fields);
    auto intr = model.intrinsic_frame();
    int p = a[0][0].precision();
    GaussianRational inv_2i = GaussianRational(1) / GaussianRational{Rational(0), Rational(2)};
    require(a[0][0] == TruncatedSeries::constant(intr, GaussianRational(1), p) &&
                a[0][1].empty() && a[0][2] == -TruncatedSeries::variable(intr, 2, p),
            "d/dz decomposition mismatch");
    require(a[1][0].empty() && a[1][1].empty() &&
                a[1][2] == TruncatedSeries::constant(intr, inv_2i, p),
            "d/dw decomposition mismatch");
    require(a[2][0].empty() && a[2][1] == TruncatedSeries::constant(intr, GaussianRational(1), p) &&
                a[2][2].empty(),
            "d/dzeta decomposition mismatch");

    // 50 random unit-diagonal systems; invert_bracket_frame asserts the
    // residual A(x) u_i - e_i internally and throws on any failure.
    SplitMix64 rng(616161);
    SeriesSampler sampler;
    sampler.max_degree = 2;
    sampler.density_percent = 30;
    for (int t = 0; t < 50; ++t) {
        std::vector<VectorField> fields;
        for (std::size_t j = 0; j < intr.arity(); ++j) {
            std::vector<TruncatedSeries> comps;
            for (std::size_t i = 0; i < intr.arity(); ++i) {
                auto noise = random_series(rng, intr, 8, sampler);
                noise = noise - TruncatedSeries::constant(intr, noise.constant_term(), 8);
                if (i == j)
                    noise = noise + TruncatedSeries::constant(intr, GaussianRational(1), 8);
                comps.push_back(noise);
            }
            fields.emplace_back(intr, std::move(comps));
        }
        auto coeffs = invert_bracket_frame(model, fields);
        require(coeffs.size() == intr.arity(), "wrong system size");
    }
}

void criterion_numeric_oracle() {
    struct Case {
        int m, d;
        std::vector<std::string> theta;
        std::string f, g;
    };
    std::vector<Case> cases = {
        {1, 1, {"w1 - 2*i*z1*zeta1"}, "5 + 5*z1 + 5*w1", "1 + z1 + w1"},
        {1, 1, {"w1"}, "w1", "1"},
        {1, 1, {"w1 - 2*i*z1^2*zeta1^2"}, "", ""},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        OracleOptions opts;
        opts.points = 50;
        opts.seed = 7000 + i;
        auto result = run_eval_oracle(cases[i].m, cases[i].d, cases[i].theta, cases[i].f,
                                      cases[i].g, opts);
        require(result.all_match, "mismatch on model " + std::to_string(i));
        for (const auto& c : result.checks)
            require(c.mismatches == 0 && c.comparisons == 51,
                    "operation " + c.name + " on model " + std::to_string(i));
    }
}

void criterion_gatekeeping_and_goldens() {
    // involution gate
    auto bad = parse_frame("w1 - z1*zeta1", FrameKind::Full, 1, 1, 8);
    auto v = validate_model(1, 1, {bad}, 8);
    require(!v.ok, "w - z*zeta must be rejected");
    bool witnessed = false;
    for (const auto& c : v.checks)
        if (c.name == "involution" && !c.pass && c.detail == "z1*zeta1") witnessed = true;
    require(witnessed, "expected the involution witness z1*zeta1");
    require(validate_model(1, 1, {parse_frame("w1 - 2*i*z1*zeta1", FrameKind::Full, 1, 1, 8)}, 8)
                .ok,
            "Heisenberg model must be accepted");

    // parse/print round-trip
    SplitMix64 rng(717171);
    SeriesSampler sampler;
    sampler.max_degree = 4;
    for (FrameKind kind : {FrameKind::T, FrameKind::Tau, FrameKind::Intrinsic, FrameKind::Full}) {
        VariableFrame frame(kind, 2, 2);
        ParseOptions opt;
        opt.frame = kind;
        for (int t = 0; t < 125; ++t) {
            auto s = random_series(rng, frame, 8, sampler);
            require(parse_expression(to_string(s), 2, 2, 8, opt) == s,
                    "round-trip failed for " + to_string(s));
        }
    }

    // byte-exact reports for the documented command examples
    struct Golden {
        std::string args;
        std::string file;
        int exit_code;
    };
    std::vector<Golden> goldens = {
        {"check heisenberg.spec --format structured", "check_heisenberg.json", 0},
        {"check bad_involution.spec --format structured", "check_bad_involution.json", 2},
        {"finite-type heisenberg.spec --max-depth 4 --format structured",
         "finite_type_heisenberg.json", 0},
        {"finite-type levi_flat.spec --max-depth 6 --format structured",
         "finite_type_levi_flat.json", 0},
        {"finite-type k2.spec --max-depth 4 --format structured", "finite_type_k2.json", 0},
        {"verify heisenberg.spec --format structured", "verify_heisenberg.json", 0},
        {"verify heisenberg.spec --f w1 --g 1 --format structured", "verify_defect_w.json", 3},
        {"verify levi_flat.spec --format structured", "verify_levi_flat.json", 3},
        {"real heisenberg.spec --f 7 --format structured", "real_seven.json", 0},
        {"defect heisenberg.spec --f w1 --g 1 --format structured", "defect_w.json", 0},
        {"eval-oracle heisenberg.spec --points 10 --seed 7 --format structured",
         "eval_oracle_heisenberg.json", 0},
        {"fuzz heisenberg.spec --trials 20 --seed 3 --mode proportional --format structured",
         "fuzz_proportional.json", 0},
    };
    for (const auto& g : goldens) {
        auto r = run_cli(g.args);
        require(r.exit_code == g.exit_code,
                g.args + ": exit " + std::to_string(r.exit_code) + ", expected " +
                    std::to_string(g.exit_code));
        require(r.output == read_golden(g.file), g.args + ": report bytes differ from " + g.file);
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc >= 3) {
        g_cli = argv[1];
        g_tests_dir = argv[2];
    } else {
        std::fprintf(stderr, "usage: acceptance <path-to-crmin> <tests-dir>\n");
        return 2;
    }

    struct Criterion {
        std::string name;
        std::function<void()> run;
    };
    std::vector<Criterion> criteria = {
        {"heisenberg finite type: type 2, ranks [2,3], under 1s", criterion_heisenberg_type},
        {"power models k=1,2,3: type 2k, all-shapes bracket oracle agrees",
         criterion_power_models},
        {"levi-flat: undetermined, rank stalls at 2, verify(w,1) is not_finite_type",
         criterion_levi_flat},
        {"planted-constant recovery: 2x100 seeded trials, exact, under 30s",
         criterion_planted_recovery},
        {"falsification suite: 1000 non-proportional pairs, defect never empty",
         criterion_falsification_suite},
        {"universal bracket identity: 200 random instances vanish",
         criterion_universal_identity},
        {"bracket engine: antisymmetry exact, Jacobi on 100 triples", criterion_bracket_engine},
        {"frame inversion: hand solution plus 50 random unit-diagonal systems",
         criterion_frame_inversion},
        {"numeric point oracle: 50 points per model, zero mismatches",
         criterion_numeric_oracle},
        {"involution gatekeeping, round-trip, byte-exact golden reports",
         criterion_gatekeeping_and_goldens},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.run();
            std::cout << "PASS: " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL: " << c.name << " -- " << e.what() << "\n";
        }
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
