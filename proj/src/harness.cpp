#include "ehg/harness.hpp"
#include "ehg/asymptotics.hpp"
#include "ehg/inequalities.hpp"
#include "ehg/integrals.hpp"
#include "ehg/logval.hpp"
#include "ehg/rng.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehg {

namespace {

using nlohmann::json;

// ------------------------------------------------------------ name tables

const std::map<std::string, SpecKind> kSpecNames = {
    {"ELL_I", SpecKind::ELL_I},           {"ELL_II", SpecKind::ELL_II},
    {"ELL_A", SpecKind::ELL_A},           {"HYP_I", SpecKind::HYP_I},
    {"HYP_II", SpecKind::HYP_II},         {"HYP_A", SpecKind::HYP_A},
    {"TRIG_IC1", SpecKind::TRIG_IC1},     {"TRIG_IIC1", SpecKind::TRIG_IIC1},
    {"TRIG_IC2", SpecKind::TRIG_IC2},     {"TRIG_IC3", SpecKind::TRIG_IC3},
    {"TRIG_IIC2", SpecKind::TRIG_IIC2},   {"TRIG_IIC_NS", SpecKind::TRIG_IIC_NS},
    {"RAT_IC1", SpecKind::RAT_IC1},       {"RAT_IC2", SpecKind::RAT_IC2},
    {"RAT_IIC", SpecKind::RAT_IIC},       {"RAT_IIC_NS", SpecKind::RAT_IIC_NS},
    {"SELBERG", SpecKind::SELBERG_SPEC},  {"DIXON", SpecKind::DIXON_SPEC},
    {"CLASS_I", SpecKind::CLASS_I},       {"CLASS_II", SpecKind::CLASS_II},
    {"E7", SpecKind::E7},
};

const std::map<std::string, ClosedFormId> kClosedNames = {
    {"TYPE_I_ELL_EVAL", ClosedFormId::TYPE_I_ELL_EVAL},
    {"TYPE_II_ELL_EVAL", ClosedFormId::TYPE_II_ELL_EVAL},
    {"TYPE_I_HYP_EVAL", ClosedFormId::TYPE_I_HYP_EVAL},
    {"TYPE_II_HYP_EVAL", ClosedFormId::TYPE_II_HYP_EVAL},
    {"TRIG_IIC2_EVAL", ClosedFormId::TRIG_IIC2_EVAL},
    {"SELBERG", ClosedFormId::SELBERG},
};

const std::map<std::string, TransformId> kTransformNames = {
    {"TYPE_I_HYP_SWAP", TransformId::TYPE_I_HYP_SWAP},
    {"E7_INV", TransformId::E7_INV},
    {"TRIG_IC12", TransformId::TRIG_IC12},
    {"TRIG_IC3_INVOL", TransformId::TRIG_IC3_INVOL},
    {"TRIG_IIC_M1", TransformId::TRIG_IIC_M1},
    {"RAT_IC12", TransformId::RAT_IC12},
    {"CLASSICAL_DIXON", TransformId::CLASSICAL_DIXON},
    {"CLASSICAL_SELBERG_TRANS", TransformId::CLASSICAL_SELBERG_TRANS},
};

const std::map<std::string, LimitId> kLimitNames = {
    {"HYP_IC", LimitId::HYP_IC},
    {"HYP_IIC", LimitId::HYP_IIC},
    {"HYP_A", LimitId::HYP_A},
    {"TRIG_IC1", LimitId::TRIG_IC1},
    {"TRIG_IC2", LimitId::TRIG_IC2},
    {"TRIG_IC3", LimitId::TRIG_IC3},
    {"TRIG_IIC1", LimitId::TRIG_IIC1},
    {"TRIG_IIC2", LimitId::TRIG_IIC2},
    {"TRIG_IIC_NONSYM", LimitId::TRIG_IIC_NONSYM},
    {"RAT_IC1", LimitId::RAT_IC1},
    {"RAT_IC2", LimitId::RAT_IC2},
    {"RAT_IIC", LimitId::RAT_IIC},
    {"RAT_IIC_NONSYM", LimitId::RAT_IIC_NONSYM},
    {"CLASS_IC", LimitId::CLASS_IC},
    {"CLASS_SELBERG", LimitId::CLASS_SELBERG},
    {"CLASS_A", LimitId::CLASS_A},
};

const std::map<std::string, IdentityKind> kIdentityNames = {
    {"FROBENIUS_DET", IdentityKind::FROBENIUS_DET},
    {"SIGN_DET_CAUCHY", IdentityKind::SIGN_DET_CAUCHY},
    {"SIGN_DET_TAU", IdentityKind::SIGN_DET_TAU},
    {"DIFFOP_IC", IdentityKind::DIFFOP_IC},
    {"DIFFOP_IIC", IdentityKind::DIFFOP_IIC},
    {"A_TYPE_SYMM", IdentityKind::A_TYPE_SYMM},
};

template <class T>
T lookup(const std::map<std::string, T>& table, const std::string& name,
         const char* what)
{
    auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument(std::string("unknown ") + what + ": " + name);
    return it->second;
}

EstimateCase estimate_by_name(const std::string& name)
{
    for (EstimateCase c : estimate_catalog())
        if (name == case_name(c)) return c;
    throw std::invalid_argument("unknown asymptotic case: " + name);
}

// ------------------------------------------------------------ row output

struct RowOut {
    int row_index = 0;
    std::string point;
    LogC lhs, rhs;
    Real abs_err{0}, rel_err{0};
    std::string verdict; // "pass", "fail", or "info"
};

std::string fmt(const Real& x)
{
    if (isnan(x)) return "nan";
    if (isinf(x)) return x < 0 ? "-inf" : "inf";
    return x.str(24, std::ios_base::scientific);
}

Real json_real(const nlohmann::json& v)
{
    if (v.is_string()) return Real(v.get<std::string>());
    return Real(v.dump()); // numbers keep their decimal text form
}

void write_csv(const std::string& path, const std::vector<RowOut>& rows)
{
    std::ofstream out(path);
    out << "row_index,point,lhs_log_abs,lhs_arg,rhs_log_abs,rhs_arg,"
           "abs_err,rel_err,verdict\n";
    for (const auto& r : rows)
        out << r.row_index << ',' << r.point << ',' << fmt(r.lhs.log_abs) << ','
            << fmt(r.lhs.arg) << ',' << fmt(r.rhs.log_abs) << ',' << fmt(r.rhs.arg)
            << ',' << fmt(r.abs_err) << ',' << fmt(r.rel_err) << ',' << r.verdict
            << '\n';
}

Real get_real(const json& j, const char* key, const char* fallback)
{
    if (j.contains(key)) return json_real(j.at(key));
    return Real(fallback);
}

void fill_pair_row(RowOut& r, const PairResult& pr)
{
    r.lhs = pr.lhs;
    r.rhs = pr.rhs;
    r.abs_err = abs_diff(pr.lhs, pr.rhs);
    r.rel_err = r.abs_err / exp(pr.rhs.log_abs);
}

// ------------------------------------------------------------ job runners

JobOutcome run_evaluation(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    SpecKind kind = lookup(kSpecNames, j.at("spec"), "spec");
    ClosedFormId cf = lookup(kClosedNames, j.at("closed_form"), "closed form");
    int n = j.value("n", 1), m = j.value("m", 0);
    int seeds = j.value("seeds", 1);
    uint64_t seed0 = j.value("seed0", 1);
    Real qtol = get_real(j, "quad_tol", "1e-10");
    Real ctol = get_real(j, "check_tol", "1e-6");
    for (int s = 0; s < seeds; ++s) {
        RowOut r;
        r.row_index = s;
        r.point = "seed=" + std::to_string(seed0 + s);
        auto spec = seed_spec(kind, n, m, seed0 + s);
        PairResult pr{eval_integral(spec, qtol).value, closed_form(cf, spec)};
        fill_pair_row(r, pr);
        r.verdict = r.rel_err <= ctol ? "pass" : "fail";
        if (r.verdict == "fail") ++out.failed_rows;
        rows.push_back(r);
    }
    out.passed = out.failed_rows == 0;
    out.detail = "evaluation vs closed form, check_tol=" + ctol.str(3);
    return out;
}

JobOutcome run_transform(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    SpecKind kind = lookup(kSpecNames, j.at("spec"), "spec");
    TransformId tf = lookup(kTransformNames, j.at("transform"), "transform");
    int n = j.value("n", 1), m = j.value("m", 0);
    int seeds = j.value("seeds", 1);
    int variant = j.value("variant", 0);
    uint64_t seed0 = j.value("seed0", 1);
    Real qtol = get_real(j, "quad_tol", "1e-9");
    Real ctol = get_real(j, "check_tol", "1e-5");
    for (int s = 0; s < seeds; ++s) {
        RowOut r;
        r.row_index = s;
        r.point = "seed=" + std::to_string(seed0 + s) +
                  (variant ? " variant=" + std::to_string(variant) : "");
        auto spec = seed_spec(kind, n, m, seed0 + s);
        fill_pair_row(r, transform_pair(tf, spec, qtol, variant));
        r.verdict = r.rel_err <= ctol ? "pass" : "fail";
        if (r.verdict == "fail") ++out.failed_rows;
        rows.push_back(r);
    }
    out.passed = out.failed_rows == 0;
    out.detail = "transformation pair, check_tol=" + ctol.str(3);
    return out;
}

JobOutcome run_limit(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    SpecKind kind = lookup(kSpecNames, j.at("spec"), "spec");
    LimitId lim = lookup(kLimitNames, j.at("limit"), "limit");
    int n = j.value("n", 1), m = j.value("m", 0);
    uint64_t seed = j.value("seed", 1);
    Real qtol = get_real(j, "quad_tol", "1e-9");
    std::string mode = j.value("mode", "abs");
    auto spec = seed_spec(kind, n, m, seed);

    std::vector<EstimateRow> fit_rows;
    for (size_t k = 0; k < j.at("schedule").size(); ++k) {
        Real v = json_real(j.at("schedule")[k]);
        RowOut r;
        r.row_index = int(k);
        r.point = "v=" + v.str(6);
        fill_pair_row(r, limit_pair(lim, v, spec, qtol));
        r.verdict = "info";
        rows.push_back(r);
        fit_rows.push_back({v, rows.back().rel_err});
    }
    clear_limit_cache();

    if (mode == "abs") {
        Real ctol = get_real(j, "check_tol", "1e-6");
        out.passed = fit_rows.back().residual <= ctol;
        rows.back().verdict = out.passed ? "pass" : "fail";
        out.detail = "final rel_err " + fit_rows.back().residual.str(3) +
                     " vs check_tol " + ctol.str(3);
    } else if (mode == "rate") {
        Real lo = get_real(j, "rate_lo", "1.4"), hi = get_real(j, "rate_hi", "2.8");
        int pairs = j.value("rate_pairs", 1);
        out.passed = true;
        std::string rates;
        for (size_t k = fit_rows.size() - pairs; k < fit_rows.size(); ++k) {
            Real ratio = fit_rows[k - 1].residual / fit_rows[k].residual;
            rates += (rates.empty() ? "" : " ") + ratio.str(3);
            bool ok = ratio >= lo && ratio <= hi;
            rows[k].verdict = ok ? "pass" : "fail";
            if (!ok) {
                out.passed = false;
                ++out.failed_rows;
            }
        }
        out.detail = "halving ratios [" + rates + "] vs band [" + lo.str(3) + ", " +
                     hi.str(3) + "]";
    } else if (mode == "expfit") {
        Real fit_max = get_real(j, "fit_max", "0.15");
        auto fit = fit_decay(fit_rows, DecayModel::EXP_DECAY);
        out.passed = fit.rate > 0 && fit.fit_residual <= fit_max;
        rows.back().verdict = out.passed ? "pass" : "fail";
        out.detail = "exp fit rate " + fit.rate.str(4) + " per 1/v, fit residual " +
                     fit.fit_residual.str(3);
    } else {
        throw std::invalid_argument("unknown limit mode: " + mode);
    }
    if (!out.passed && out.failed_rows == 0) out.failed_rows = 1;
    return out;
}

JobOutcome run_identity(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    IdentityKind kind = lookup(kIdentityNames, j.at("identity"), "identity");
    int n = j.value("n", 2);
    int instances = j.value("instances", 100);
    uint64_t seed = j.value("seed", 1);
    Real ctol = get_real(j, "check_tol", "1e-18");
    for (int s = 0; s < instances; ++s) {
        CounterRng rng(seed, uint64_t(s));
        RowOut r;
        r.row_index = s;
        r.point = "instance=" + std::to_string(s);
        Real res = identity_residual(kind, n, rng);
        r.lhs = LogC::from_cplx(Cplx{res});
        r.rhs = LogC::from_cplx(Cplx{Real(0)});
        r.abs_err = res;
        r.rel_err = res;
        r.verdict = res <= ctol ? "pass" : "fail";
        if (r.verdict == "fail") ++out.failed_rows;
        rows.push_back(r);
    }
    out.passed = out.failed_rows == 0;
    out.detail = "identity residuals, check_tol=" + ctol.str(3);
    return out;
}

JobOutcome run_inequality(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    int trials = j.value("trials", 10000);
    uint64_t seed = j.value("seed", 1);
    Real slack = get_real(j, "slack", "9.094947017729282379150390625e-13"); // 2^-40
    auto reports = sweep(seed, trials);
    int idx = 0;
    for (const auto& rep : reports) {
        RowOut r;
        r.row_index = idx++;
        r.point = rep.name + " trials=" + std::to_string(rep.trials);
        r.lhs = LogC::from_cplx(Cplx{rep.worst});
        r.rhs = LogC::from_cplx(Cplx{Real(0)});
        // Magnitude of the worst negative deficit (or residual) and the
        // failure count, so a regression is visible in the CSV itself.
        r.abs_err = rep.worst < 0 ? -rep.worst : Real(0);
        r.rel_err = Real(rep.failures);
        bool ok = rep.passed && rep.failures == 0 && r.abs_err <= slack;
        r.verdict = ok ? "pass" : "fail";
        if (!ok) ++out.failed_rows;
        rows.push_back(r);
    }
    out.passed = out.failed_rows == 0;
    out.detail = "randomized sweeps, slack=2^-40";
    return out;
}

JobOutcome run_asymptotic(const json& j, std::vector<RowOut>& rows)
{
    JobOutcome out;
    EstimateCase c = estimate_by_name(j.at("case"));
    std::vector<Real> schedule;
    if (j.contains("schedule"))
        for (const auto& s : j.at("schedule")) schedule.push_back(json_real(s));
    auto rep = run_case(c, schedule);
    for (size_t k = 0; k < rep.rows.size(); ++k) {
        RowOut r;
        r.row_index = int(k);
        r.point = "v=" + rep.rows[k].v.str(6);
        r.lhs = LogC::from_cplx(Cplx{rep.rows[k].residual});
        r.rhs = LogC::from_cplx(Cplx{Real(0)});
        r.abs_err = rep.rows[k].residual;
        r.rel_err = rep.rows[k].residual;
        r.verdict = "info";
        rows.push_back(r);
    }
    out.passed = rep.passed;
    if (!rows.empty()) rows.back().verdict = out.passed ? "pass" : "fail";
    if (!out.passed) out.failed_rows = 1;
    out.detail = rep.detail;
    return out;
}

} // namespace

SuiteOutcome run_suite(const std::string& config_json, const std::string& out_dir,
                       int parallelism, const std::vector<std::string>& only)
{
    SuiteOutcome suite;
    json cfg;
    try {
        cfg = json::parse(config_json);
        if (!cfg.contains("jobs") || !cfg.at("jobs").is_array())
            throw std::invalid_argument("config needs a top-level \"jobs\" array");
    } catch (const std::exception& e) {
        suite.config_ok = false;
        suite.all_passed = false;
        suite.config_error = e.what();
        return suite;
    }

#ifdef _OPENMP
    if (parallelism > 0) omp_set_num_threads(parallelism);
#else
    (void)parallelism;
#endif

    std::filesystem::create_directories(out_dir);
    std::ofstream summary(out_dir + "/summary.txt");

    for (const auto& j : cfg.at("jobs")) {
        std::string id = j.value("id", "");
        if (!only.empty() &&
            std::find(only.begin(), only.end(), id) == only.end())
            continue;
        std::string kind = j.value("kind", "");
        std::vector<RowOut> rows;
        JobOutcome out;
        auto t0 = std::chrono::steady_clock::now();
        try {
            if (id.empty()) throw std::invalid_argument("job without an id");
            if (kind == "evaluation") out = run_evaluation(j, rows);
            else if (kind == "transform") out = run_transform(j, rows);
            else if (kind == "limit") out = run_limit(j, rows);
            else if (kind == "identity") out = run_identity(j, rows);
            else if (kind == "inequality") out = run_inequality(j, rows);
            else if (kind == "asymptotic") out = run_asymptotic(j, rows);
            else throw std::invalid_argument("unknown job kind: " + kind);
        } catch (const std::exception& e) {
            out.passed = false;
            out.detail = std::string("error: ") + e.what();
            out.failed_rows = std::max(out.failed_rows, 1);
        }
        out.id = id.empty() ? "(unnamed)" : id;
        out.kind = kind;
        out.rows = int(rows.size());
        out.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (!id.empty()) write_csv(out_dir + "/" + id + ".csv", rows);
        if (!out.passed) suite.all_passed = false;
        char line[512];
        std::snprintf(line, sizeof line, "%-32s %s  rows=%d failed=%d  %.1fs  %s",
                      out.id.c_str(), out.passed ? "PASS" : "FAIL", out.rows,
                      out.failed_rows, out.seconds, out.detail.c_str());
        summary << line << '\n';
        std::fprintf(stderr, "%s\n", line);
        suite.jobs.push_back(std::move(out));
    }
    summary << "suite: " << (suite.all_passed ? "PASS" : "FAIL") << '\n';
    return suite;
}

int suite_exit_code(const SuiteOutcome& s)
{
    if (!s.config_ok) return 2;
    return s.all_passed ? 0 : 1;
}

} // namespace ehg
