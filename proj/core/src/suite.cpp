#include "bvsym/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "bvsym/bvcalc.hpp"
#include "bvsym/generate.hpp"
#include "bvsym/io.hpp"
#include "bvsym/rng.hpp"
#include "bvsym/symmetrize.hpp"
#include "bvsym/torsion.hpp"

namespace bvsym {

using nlohmann::json;

unsigned thread_count() {
    if (const char* env = std::getenv("BVSYM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

template <class F>
void parallel_for(std::size_t n, F&& body) {
    const unsigned threads = std::min<unsigned>(thread_count(), static_cast<unsigned>(n ? n : 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

std::string fmt(double v) { return render_double(v); }

// ---- rearrange suite -------------------------------------------------

InstanceRecord rearrange_instance(const SuiteConfig& cfg, std::uint64_t i) {
    Rng rng(cfg.seed, i ^ 0x72656172ULL);
    const std::size_t cells = 20 + rng.uniform_int(60);
    std::vector<MeasuredSample> u(cells), w(cells);
    for (std::size_t c = 0; c < cells; ++c) {
        const double m = rng.uniform(0.01, 0.2);
        u[c] = {rng.uniform(0.0, 3.0), m};
        w[c] = {rng.uniform(0.0, 3.0), m};
    }
    double total = 0.0;
    for (const auto& c : u) total += c.measure;

    const StepFunction us = decreasing_rearrangement(u);
    const StepFunction ui = increasing_rearrangement(u, total);

    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream why;

    // equimeasurability at random levels
    for (int k = 0; k < 20; ++k) {
        const double t = rng.uniform(0.0, 3.2);
        const double mu = distribution_function(u, t);
        double mu_star = 0.0;
        for (std::size_t c = 0; c < us.values().size(); ++c)
            if (us.values()[c] > t) mu_star += us.breakpoints()[c + 1] - us.breakpoints()[c];
        margin = std::min(margin, 1e-12 - std::abs(mu - mu_star));
        if (std::abs(mu - mu_star) > 1e-12) why << "equimeasurability broken at t=" << fmt(t) << "; ";
    }
    // reflection identity off the breakpoints
    for (int k = 0; k < 10; ++k) {
        const double s = rng.uniform(1e-6, total - 1e-6);
        const double d = std::abs(ui(s) - us(total - s));
        margin = std::min(margin, 1e-12 - d);
        if (d > 1e-12) why << "reflection broken at s=" << fmt(s) << "; ";
    }
    // Cavalieri for p in {1, 2, inf}
    for (double p : {1.0, 2.0}) {
        double raw = 0.0;
        for (const auto& c : u) raw += std::pow(c.value, p) * c.measure;
        raw = std::pow(raw, 1.0 / p);
        const double d = std::abs(lp_norm(us, p) - raw) / std::max(1.0, raw);
        margin = std::min(margin, 1e-12 - d);
        if (d > 1e-12) why << "Cavalieri broken at p=" << fmt(p) << "; ";
    }
    {
        double raw = 0.0;
        for (const auto& c : u) raw = std::max(raw, c.value);
        const double d = std::abs(lp_norm(us, std::numeric_limits<double>::infinity()) - raw);
        margin = std::min(margin, 1e-12 - d);
        if (d > 1e-12) why << "sup norm mismatch; ";
    }
    // Hardy-Littlewood
    const auto hl = hardy_littlewood_check(u, w);
    const double slack = hl.rhs + 1e-12 * hl.rhs - hl.lhs;
    margin = std::min(margin, slack);
    if (slack < 0.0) why << "Hardy-Littlewood violated; ";

    return {"rearrange", i, margin >= 0.0, margin, why.str()};
}

// ---- coarea suite ----------------------------------------------------

InstanceRecord coarea_instance(const SuiteConfig& cfg, std::uint64_t i, std::size_t n1d) {
    CoareaCheck c;
    if (i < n1d)
        c = coarea_identity(generate_bv1d(cfg.seed, i, cfg.grid));
    else
        c = coarea_identity(generate_radial(cfg.seed, i - n1d, 2, std::max<std::size_t>(64, cfg.grid / 4)));
    const double rel = std::abs(c.integral - c.tv) / std::max(1.0, c.tv);
    const double tol = 1e-9;
    std::ostringstream why;
    why << "integral=" << fmt(c.integral) << " tv=" << fmt(c.tv);
    return {"coarea", i, rel <= tol, tol - rel, why.str()};
}

// ---- main theorem / proposition / polya-szego ------------------------

InstanceRecord main_theorem_instance(const SuiteConfig& cfg, std::uint64_t i, std::size_t n1d,
                                     bool proposition_only) {
    PiecewiseProfile pp = (i < n1d)
                              ? PiecewiseProfile::from(generate_bv1d(cfg.seed, i, cfg.grid))
                              : PiecewiseProfile::from(generate_radial(
                                    cfg.seed, i - n1d, 2, std::max<std::size_t>(64, cfg.grid / 4)));

    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream why;

    const auto pw = pointwise_comparison(pp);
    margin = std::min(margin, cfg.tol - pw.max_violation);
    why << "pointwise=" << fmt(pw.max_violation);

    const auto env = envelope_comparison(pp, sigma_from_g(g_functions(pp)));
    margin = std::min(margin, env + 1e-8);
    why << " envelope=" << fmt(env);

    if (!proposition_only) {
        const auto l1 = l1_comparison(pp, cfg.tol);
        margin = std::min(margin, l1.norm_ustar + cfg.tol * std::max(1.0, l1.norm_ustar) -
                                      l1.norm_u);
        why << " l1=" << fmt(l1.norm_u) << "/" << fmt(l1.norm_ustar);

        const auto vp = variation_preservation(pp, u_star_of_bv(pp));
        const double dac = std::abs(vp.ac_u - vp.ac_star) / std::max(1.0, vp.ac_u);
        const double dsg = std::abs(vp.sing_u - vp.sing_star) / std::max(1.0, vp.sing_u);
        margin = std::min(margin, cfg.tol - dac);
        margin = std::min(margin, 1e-12 - dsg);
        why << " dvar=" << fmt(dac) << "/" << fmt(dsg);
    }
    return {proposition_only ? "proposition" : "main-theorem", i, margin >= 0.0, margin,
            why.str()};
}

InstanceRecord polya_instance(const SuiteConfig& cfg, std::uint64_t i) {
    const auto ck = polya_szego_bv_check(generate_bv1d(cfg.seed, i, cfg.grid));
    const double tol = 1e-10;
    const double m1 = ck.tv + tol - ck.tv_sym;
    const double m2 = ck.singular + tol - ck.singular_sym;
    std::ostringstream why;
    why << "tv=" << fmt(ck.tv_sym) << "<=" << fmt(ck.tv) << " sing=" << fmt(ck.singular_sym)
        << "<=" << fmt(ck.singular);
    const double margin = std::min(m1, m2);
    return {"polya-szego", i, margin >= 0.0, margin, why.str()};
}

// ---- torsion suites ----------------------------------------------------

Polygon unit_square() { return Polygon{{{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}}; }

void torsion_f_suite(const SuiteConfig& cfg, Report& rep) {
    const Polygon square = unit_square();
    const auto base = make_grid(square, cfg.grid2d);
    const auto candidates = generate_torsion_candidates(base, cfg.seed, 50, true);
    std::vector<double> lambdas = cfg.params;
    if (lambdas.empty()) lambdas = {0.0, 0.05, 0.2};

    std::uint64_t idx = 0;
    for (double lam : lambdas) {
        const auto r = saint_venant_f_suite(square, lam, candidates);
        std::ostringstream why;
        why << "lambda=" << fmt(lam) << " bound=" << fmt(r.bound)
            << " ball=" << fmt(r.ball_value);
        rep.instances.push_back(
            {"torsion-F", idx++, r.margin >= -1e-3, r.margin + 1e-3, why.str()});
    }

    // analytic ball value and monotonicity in lambda
    {
        const auto b0 = minimize_f_ball(1.0, 2, 0.0);
        const double rel = std::abs(b0.t_f - std::numbers::pi / 16.0) / (std::numbers::pi / 16.0);
        rep.instances.push_back({"torsion-F", idx++, rel <= 1e-4, 1e-4 - rel,
                                 "T_F(B_1,0)=" + fmt(b0.t_f)});
        double prev = std::numeric_limits<double>::infinity();
        double worst = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= 50; ++k) {
            const double tf = minimize_f_ball(1.0, 2, 0.01 * k).t_f;
            worst = std::min(worst, prev - tf + 1e-9);
            prev = tf;
        }
        rep.instances.push_back(
            {"torsion-F", idx++, worst >= 0.0, worst, "lambda-monotonicity sweep"});
    }
}

void torsion_g_suite(const SuiteConfig& cfg, Report& rep) {
    const Polygon square = unit_square();
    const auto base = make_grid(square, cfg.grid2d);
    const auto candidates = generate_torsion_candidates(base, cfg.seed, 50, false);
    std::vector<double> ms = cfg.params;
    if (ms.empty()) ms = {1.0};

    std::uint64_t idx = 0;
    for (double m : ms) {
        const auto r = saint_venant_g_suite(square, m, candidates);
        std::ostringstream why;
        why << "m=" << fmt(m) << " bound=" << fmt(r.bound) << " ball=" << fmt(r.ball_value);
        rep.instances.push_back(
            {"torsion-G", idx++, r.margin >= -1e-3, r.margin + 1e-3, why.str()});
    }
    {
        const double exact = std::numbers::pi / 8.0 + 0.25;
        const double tg = minimize_g_ball(1.0, 2, 1.0);
        rep.instances.push_back({"torsion-G", idx++, std::abs(tg - exact) <= 1e-3,
                                 1e-3 - std::abs(tg - exact), "T_G(B_1,1)=" + fmt(tg)});
        const double fd = minimize_g_ball_fd(1.0, 2, 1.0);
        rep.instances.push_back({"torsion-G", idx++, std::abs(tg - fd) <= 1e-3,
                                 1e-3 - std::abs(tg - fd), "fd oracle=" + fmt(fd)});
        const double lim = minimize_g_ball(1.0, 2, 1e-6);
        rep.instances.push_back({"torsion-G", idx++,
                                 std::abs(lim - std::numbers::pi / 8.0) <= 5e-3,
                                 5e-3 - std::abs(lim - std::numbers::pi / 8.0),
                                 "m->0 limit=" + fmt(lim)});
    }
}

// ---- plot emission -----------------------------------------------------

void emit_plots(const SuiteConfig& cfg) {
    if (cfg.report_path.empty()) return;
    if (cfg.suite == "main-theorem" || cfg.suite == "proposition" || cfg.suite == "all") {
        const auto pp = PiecewiseProfile::from(generate_bv1d(cfg.seed, 0, cfg.grid));
        const auto sigma = sigma_from_g(g_functions(pp));
        const auto star = u_star_of_bv(pp);
        std::ostringstream out;
        out << "s,u_star,v,sym_star\n";
        const auto grid = pp.s_grid(512);
        for (double s : grid)
            out << fmt(s) << "," << fmt(pp.u_star(s)) << "," << fmt(v_eval(sigma, pp.dim(), s))
                << "," << fmt(star.eval(std::min(s, star.ball().volume))) << "\n";
        write_text_file(cfg.report_path + ".curves.csv", out.str());
    }
    if (cfg.suite == "torsion-F" || cfg.suite == "all") {
        std::ostringstream out;
        out << "r,F\n";
        for (int k = 0; k <= 200; ++k) {
            const double r = k / 200.0;
            out << fmt(r) << "," << fmt(evaluate_f_lambda(RadialCandidate{2, 1.0, r}, 0.05, 2000))
                << "\n";
        }
        write_text_file(cfg.report_path + ".f_profile.csv", out.str());
    }
}

void run_named(const SuiteConfig& cfg, const std::string& name, Report& rep) {
    if (name == "rearrange") {
        std::vector<InstanceRecord> recs(cfg.count);
        parallel_for(cfg.count, [&](std::size_t i) { recs[i] = rearrange_instance(cfg, i); });
        rep.instances.insert(rep.instances.end(), recs.begin(), recs.end());
    } else if (name == "coarea") {
        const std::size_t n1d = cfg.count;
        const std::size_t n = n1d + cfg.count / 4;
        std::vector<InstanceRecord> recs(n);
        parallel_for(n, [&](std::size_t i) { recs[i] = coarea_instance(cfg, i, n1d); });
        rep.instances.insert(rep.instances.end(), recs.begin(), recs.end());
    } else if (name == "main-theorem" || name == "proposition") {
        const std::size_t n1d = cfg.count;
        const std::size_t n = n1d + cfg.count / 4;
        std::vector<InstanceRecord> recs(n);
        parallel_for(n, [&](std::size_t i) {
            recs[i] = main_theorem_instance(cfg, i, n1d, name == "proposition");
        });
        rep.instances.insert(rep.instances.end(), recs.begin(), recs.end());
    } else if (name == "polya-szego") {
        std::vector<InstanceRecord> recs(cfg.count);
        parallel_for(cfg.count, [&](std::size_t i) { recs[i] = polya_instance(cfg, i); });
        rep.instances.insert(rep.instances.end(), recs.begin(), recs.end());
    } else if (name == "torsion-F") {
        torsion_f_suite(cfg, rep);
    } else if (name == "torsion-G") {
        torsion_g_suite(cfg, rep);
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

}  // namespace

Report run_suite(const SuiteConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.config = config;
    if (config.suite == "all") {
        for (const char* name : {"rearrange", "coarea", "main-theorem", "proposition",
                                 "polya-szego", "torsion-F", "torsion-G"})
            run_named(config, name, rep);
    } else {
        run_named(config, config.suite, rep);
    }
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : rep.instances) {
        (r.pass ? rep.passed : rep.failed) += 1;
        rep.worst_margin = std::min(rep.worst_margin, r.margin);
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!config.report_path.empty()) {
        write_text_file(config.report_path, report_to_json(rep));
        emit_plots(config);
    }
    return rep;
}

std::string report_to_json(const Report& report) {
    json j;
    j["schema"] = report.schema;
    j["config"] = {{"suite", report.config.suite},
                   {"seed", report.config.seed},
                   {"count", report.config.count},
                   {"grid", report.config.grid},
                   {"grid2d", report.config.grid2d},
                   {"tol", report.config.tol},
                   {"params", report.config.params}};
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    j["worst_margin"] = report.worst_margin;
    j["wall_seconds"] = report.wall_seconds;
    j["instances"] = json::array();
    for (const auto& r : report.instances)
        j["instances"].push_back({{"suite", r.suite},
                                  {"index", r.index},
                                  {"pass", r.pass},
                                  {"margin", r.margin},
                                  {"detail", r.detail}});
    return j.dump(2) + "\n";
}

}  // namespace bvsym
