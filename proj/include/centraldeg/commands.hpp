#pragma once

/**
 * Command implementations behind the centraldeg executable. Every command is
 * a pure function of its RunConfig and returns the JSON it prints together
 * with the process exit status.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "centralpath.hpp"
#include "formulas.hpp"
#include "homotopy.hpp"
#include "instances.hpp"
#include "polytope.hpp"
#include "sos.hpp"

namespace centraldeg {

enum class OutputFormat { json, csv, text };

inline OutputFormat output_format_from_string(const std::string& s)
{
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

struct RunConfig
{
    std::string command;
    std::string family = "lp";
    int m = 0;
    int d = 0;
    int n = 0;
    int two_D = 0;
    std::string method = "formula";
    std::uint64_t seed = 1;
    TrackerConfig tracker;
    ScheduleConfig schedule;
    OutputFormat format = OutputFormat::json;
    std::string out;
    std::vector<std::int64_t> hvector;
};

struct CommandResult
{
    nlohmann::ordered_json json;
    int exit_code = 0;
    std::string csv; ///< filled by `path`
};

// ---------------------------------------------------------------------------
// Degree by each method

/// Homotopy count for a random instance of the family built from `seed`.
inline CountReport homotopy_count(Family family, int m, int d, const TrackerConfig& cfg, std::uint64_t seed)
{
    CountReport rep;
    switch (family) {
    case Family::lp: {
        const ReducedSystem rs = reduce_lp(random_lp(m, d, seed), random_slice(m, seed));
        rep = count_torus_solutions(as_square_system(rs), torus_filter(rs), cfg);
        break;
    }
    case Family::qp: {
        const ReducedSystem rs = reduce_qp(random_qp(m, d, seed), random_slice(m, seed));
        rep = count_torus_solutions(as_square_system(rs), torus_filter(rs), cfg);
        break;
    }
    case Family::sdp: {
        const MLSystem ml = build_ml_system(random_sdp(m, d, seed), seed);
        rep = count_torus_solutions(ml, ml_filter(ml), cfg);
        break;
    }
    case Family::sos:
        throw std::invalid_argument("homotopy_count: use sos_degree for the sos family");
    }
    rep.family = to_string(family);
    rep.m = m;
    rep.d = d;
    return rep;
}

/// Closed-form degree where one exists (every LP and QP; listed SDP cases).
inline std::optional<std::int64_t> formula_degree(Family family, int m, int d)
{
    switch (family) {
    case Family::lp: return to_int64(psi_lp(m, d));
    case Family::qp: return to_int64(psi_qp(m, d));
    case Family::sdp: return psi_sdp_reference(m, d);
    case Family::sos: return std::nullopt;
    }
    return std::nullopt;
}

/// Normalized volume of the reduced system's Newton polytope, or the staircase count past dimension 7.
inline std::optional<std::int64_t> polytope_degree(Family family, int m, int d, std::uint64_t seed)
{
    if (family != Family::lp && family != Family::qp) {
        return std::nullopt;
    }
    if (m <= 7) {
        const SliceSpec slice = random_slice(m, seed);
        const ReducedSystem rs =
            family == Family::lp ? reduce_lp(random_lp(m, d, seed), slice) : reduce_qp(random_qp(m, d, seed), slice);
        return normalized_volume(LatticePolytope::from_monomials(rs.support()));
    }
    return family == Family::lp ? staircase_counts(m, d).total() : qp_weighted_volume(m, d);
}

namespace detail {

inline void check_family_dims(Family family, int m, int d)
{
    if (family == Family::sdp) {
        if (m < 2 || d < 1 || d >= sym_dim(m)) {
            throw std::invalid_argument("sdp needs m >= 2 and 1 <= d < m(m+1)/2");
        }
        return;
    }
    if (m < 2 || d < 1 || d >= m) {
        throw std::invalid_argument(to_string(family) + " needs 1 <= d < m");
    }
}

inline nlohmann::ordered_json ordered(const nlohmann::json& j) { return nlohmann::ordered_json::parse(j.dump()); }

inline CommandResult sos_degree_command(const RunConfig& rc)
{
    CommandResult res;
    const int D = rc.two_D / 2;
    if (rc.n < 1 || rc.two_D < 2 || rc.two_D % 2 != 0) {
        throw std::invalid_argument("sos needs --n >= 1 and an even --two-d >= 2");
    }
    const auto [m, d] = sos_dimensions(rc.n, D);
    const auto reference = sos_reference_degree(rc.n, rc.two_D);
    auto reference_report = [&] {
        return nlohmann::ordered_json{{"family", "sos"}, {"n", rc.n},         {"two_d", rc.two_D},     {"m", m},
                                      {"d", d},          {"value", *reference}, {"method", "reference"}};
    };
    if (rc.method == "formula" || rc.method == "reference") {
        if (!reference) {
            res.json = {{"family", "sos"}, {"n", rc.n}, {"two_d", rc.two_D}, {"error", "no reference value"}};
            res.exit_code = 1;
            return res;
        }
        res.json = reference_report();
        return res;
    }
    if (rc.method != "homotopy" && rc.method != "all") {
        throw std::invalid_argument("sos supports --method formula, homotopy or all");
    }
    try {
        const CountReport rep = sos_degree(rc.n, rc.two_D, rc.tracker, rc.seed);
        res.json = ordered(rep.to_json());
        res.json["n"] = rc.n;
        res.json["two_d"] = rc.two_D;
        res.exit_code = rep.consensus ? 0 : 1;
        if (rc.method == "all" && reference) {
            const bool agree = rep.consensus && rep.count == *reference;
            res.json = {{"family", "sos"},
                        {"n", rc.n},
                        {"two_d", rc.two_D},
                        {"agree", agree},
                        {"reports", {reference_report()}},
                        {"homotopy", res.json}};
            res.exit_code = agree ? 0 : 1;
        }
    } catch (const SOSBudgetRefusal& e) {
        res.json = {{"family", "sos"}, {"n", rc.n}, {"two_d", rc.two_D}, {"refused", e.what()}};
        if (e.reference()) {
            res.json["reference"] = *e.reference();
        }
        res.exit_code = 1;
    }
    return res;
}

} // namespace detail

/**
 * `degree`: one report per requested method. With method "all" every defined
 * value must agree; a mismatch, a seed disagreement or a budget refusal gives
 * exit status 1.
 */
inline CommandResult cmd_degree(const RunConfig& rc)
{
    const Family family = family_from_string(rc.family);
    if (family == Family::sos) {
        return detail::sos_degree_command(rc);
    }
    detail::check_family_dims(family, rc.m, rc.d);
    CommandResult res;
    auto report = [&](std::int64_t value, DegreeMethod method) {
        return DegreeReport{family, rc.m, rc.d, value, method}.to_json();
    };
    auto run_homotopy = [&]() -> std::optional<CountReport> {
        try {
            return homotopy_count(family, rc.m, rc.d, rc.tracker, rc.seed);
        } catch (const BudgetExceeded& e) {
            res.json["refused"] = e.what();
            return std::nullopt;
        }
    };

    if (rc.method == "formula" || rc.method == "polytope") {
        const auto v = rc.method == "formula" ? formula_degree(family, rc.m, rc.d)
                                              : polytope_degree(family, rc.m, rc.d, rc.seed);
        if (!v) {
            res.json = {{"family", rc.family}, {"m", rc.m}, {"d", rc.d}, {"method", rc.method},
                        {"error", "no " + rc.method + " value for this family and size"}};
            res.exit_code = 1;
            return res;
        }
        const DegreeMethod method = rc.method == "polytope"      ? DegreeMethod::polytope
                                    : family == Family::sdp ? DegreeMethod::reference
                                                            : DegreeMethod::formula;
        res.json = report(*v, method);
        return res;
    }
    if (rc.method == "homotopy") {
        const auto rep = run_homotopy();
        if (!rep) {
            res.exit_code = 1;
            return res;
        }
        res.json = detail::ordered(rep->to_json());
        res.exit_code = rep->consensus ? 0 : 1;
        return res;
    }
    if (rc.method != "all") {
        throw std::invalid_argument("unknown method '" + rc.method + "'");
    }

    std::vector<std::int64_t> values;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    if (const auto v = formula_degree(family, rc.m, rc.d)) {
        reports.push_back(report(*v, family == Family::sdp ? DegreeMethod::reference : DegreeMethod::formula));
        values.push_back(*v);
    }
    if (const auto v = polytope_degree(family, rc.m, rc.d, rc.seed)) {
        reports.push_back(report(*v, DegreeMethod::polytope));
        values.push_back(*v);
    }
    res.json = {{"family", rc.family}, {"m", rc.m}, {"d", rc.d}};
    bool ok = true;
    if (const auto rep = run_homotopy()) {
        if (rep->consensus) {
            reports.push_back(report(rep->count, DegreeMethod::homotopy));
            values.push_back(rep->count);
        } else {
            ok = false;
        }
        res.json["homotopy"] = detail::ordered(rep->to_json());
    } else {
        ok = false;
    }
    const bool agree = std::all_of(values.begin(), values.end(), [&](auto v) { return v == values.front(); });
    res.json["agree"] = agree;
    res.json["reports"] = reports;
    res.exit_code = ok && agree && !values.empty() ? 0 : 1;
    return res;
}

/// `genus`: kind is sdp-special, lp or hvector.
inline CommandResult cmd_genus(const std::string& kind, const RunConfig& rc)
{
    CommandResult res;
    if (kind == "lp") {
        res.json = {{"kind", kind}, {"m", rc.m}, {"d", rc.d}, {"value", to_int64(genus_lp(rc.m, rc.d))}};
        return res;
    }
    if (kind == "hvector") {
        const HVector hv{rc.hvector};
        res.json = {{"kind", kind}, {"h", rc.hvector}, {"value", genus_from_hvector(hv)}};
        return res;
    }
    if (kind != "sdp-special") {
        throw std::invalid_argument("unknown genus kind '" + kind + "'");
    }
    res.json = {{"kind", kind}, {"m", rc.m}, {"d", rc.d}};
    if (const auto g = genus_sdp_special(rc.m, rc.d)) {
        res.json["value"] = *g;
        return res;
    }
    res.json["refused"] = "genus not derivable in closed form for this (m, d); only d = 1, N-3, N-2, N-1 with "
                          "N = m(m+1)/2 are covered";
    res.exit_code = 1;
    return res;
}

/// `path`: traces the central path of a random instance; CSV goes to --out, the summary to stdout.
inline CommandResult cmd_path(const RunConfig& rc)
{
    const Family family = family_from_string(rc.family);
    if (family == Family::sos) {
        throw std::invalid_argument("path supports lp, qp and sdp");
    }
    detail::check_family_dims(family, rc.m, rc.d);
    Trace trace;
    PathCheck check;
    switch (family) {
    case Family::lp: {
        const auto lp = random_lp(rc.m, rc.d, rc.seed);
        trace = trace_lp(lp, rc.schedule);
        check = check_path(lp, trace.samples);
        break;
    }
    case Family::qp: {
        const auto qp = random_qp(rc.m, rc.d, rc.seed);
        trace = trace_qp(qp, rc.schedule);
        check = check_path(qp, trace.samples);
        break;
    }
    default: {
        const auto sdp = random_sdp(rc.m, rc.d, rc.seed);
        trace = trace_sdp(sdp, rc.schedule);
        check = check_path(sdp, trace.samples);
        break;
    }
    }
    CommandResult res;
    res.json = {{"family", rc.family}, {"m", rc.m},  {"d", rc.d}, {"seed", rc.seed},
                {"samples", trace.samples.size()}, {"ok", trace.ok}};
    if (!trace.ok) {
        res.json["error"] = trace.error;
    }
    res.json["check"] = check.to_json();
    if (!trace.samples.empty()) {
        res.csv = samples_csv(trace.samples);
        if (!rc.out.empty()) {
            emit_csv(trace.samples, rc.out);
            res.json["out"] = rc.out;
        }
    }
    res.exit_code = trace.ok && check.strictly_feasible ? 0 : 1;
    return res;
}

/// `instance`: the random instance a seed produces, as JSON.
inline CommandResult cmd_instance(const RunConfig& rc)
{
    const Family family = family_from_string(rc.family);
    CommandResult res;
    switch (family) {
    case Family::lp: res.json = detail::ordered(to_json(random_lp(rc.m, rc.d, rc.seed))); break;
    case Family::qp: res.json = detail::ordered(to_json(random_qp(rc.m, rc.d, rc.seed))); break;
    case Family::sdp: res.json = detail::ordered(to_json(random_sdp(rc.m, rc.d, rc.seed))); break;
    case Family::sos: {
        const auto inst = random_sos(rc.n, rc.two_D / 2, rc.seed);
        res.json = {{"family", "sos"},
                    {"n", inst.n},
                    {"two_d", 2 * inst.D},
                    {"seed", inst.seed},
                    {"p", detail::ordered(detail::vector_json(inst.p))},
                    {"C", detail::ordered(detail::sym_json(inst.C))}};
        break;
    }
    }
    return res;
}

// ---------------------------------------------------------------------------
// reproduce-paper

struct ClaimResult
{
    std::string id;
    std::string claim;
    bool pass = false;
    nlohmann::ordered_json details;

    nlohmann::ordered_json to_json() const
    {
        return {{"id", id}, {"claim", claim}, {"pass", pass}, {"details", details}};
    }
};

namespace detail {

inline nlohmann::ordered_json count_entry(const CountReport& rep, std::int64_t expected)
{
    return {{"m", rep.m},
            {"d", rep.d},
            {"expected", expected},
            {"count", rep.consensus ? nlohmann::ordered_json(rep.count) : nlohmann::ordered_json(nullptr)},
            {"per_seed_counts", rep.per_seed_counts},
            {"failures", rep.failures}};
}

inline ClaimResult claim_lp(const TrackerConfig& cfg, std::uint64_t seed)
{
    ClaimResult c{"lp-degrees", "homotopy count equals C(m-1,d) for 1 <= d < m <= 7", true, {}};
    c.details = nlohmann::ordered_json::array();
    for (int m = 2; m <= 7; ++m) {
        for (int d = 1; d < m; ++d) {
            const auto rep = homotopy_count(Family::lp, m, d, cfg, seed);
            const auto expected = to_int64(psi_lp(m, d));
            c.pass = c.pass && rep.consensus && rep.count == expected;
            c.details.push_back(count_entry(rep, expected));
        }
    }
    return c;
}

inline ClaimResult claim_qp(const TrackerConfig& cfg, std::uint64_t seed)
{
    ClaimResult c{"qp-degrees", "homotopy count equals sum_k C(m-k-2,d-1) 2^k for 1 <= d < m <= 6", true, {}};
    c.details = nlohmann::ordered_json::array();
    for (int m = 2; m <= 6; ++m) {
        for (int d = 1; d < m; ++d) {
            const auto rep = homotopy_count(Family::qp, m, d, cfg, seed);
            const auto expected = to_int64(psi_qp(m, d));
            c.pass = c.pass && rep.consensus && rep.count == expected;
            c.details.push_back(count_entry(rep, expected));
        }
    }
    return c;
}

inline ClaimResult claim_sdp_m3(const TrackerConfig& cfg, std::uint64_t seed)
{
    ClaimResult c{"sdp-m3-symmetry", "SDP counts at m=3, d=1..4 read (2, x, x, 2) on every seed", true, {}};
    std::vector<int> counts;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int d = 1; d <= 4; ++d) {
        const auto rep = homotopy_count(Family::sdp, 3, d, cfg, seed);
        c.pass = c.pass && rep.consensus;
        counts.push_back(rep.consensus ? rep.count : -1);
        rows.push_back(count_entry(rep, psi_sdp_reference(3, d).value_or(-1)));
    }
    c.pass = c.pass && counts[0] == 2 && counts[3] == 2 && counts[1] == counts[2] && counts[1] > 0;
    c.details = {{"counts", counts}, {"runs", rows}};
    return c;
}

inline ClaimResult claim_sdp_polynomial(const TrackerConfig& cfg, std::uint64_t seed)
{
    ClaimResult c{"sdp-d1-polynomial", "SDP counts at d=1 for m=3,4,5 fit the degree-1 polynomial m-1", true, {}};
    std::vector<std::pair<std::int64_t, std::int64_t>> points;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int m = 3; m <= 5; ++m) {
        const auto rep = homotopy_count(Family::sdp, m, 1, cfg, seed);
        c.pass = c.pass && rep.consensus;
        points.emplace_back(m, rep.consensus ? rep.count : -1);
        rows.push_back(count_entry(rep, m - 1));
    }
    const PolynomialFit fit = polynomiality_check(1, points);
    const bool is_m_minus_1 = fit.fits && fit.coefficients.size() == 2 && fit.coefficients[0] == -1 &&
                              fit.coefficients[1] == 1;
    c.pass = c.pass && fit.integer_valued && is_m_minus_1;
    c.details = {{"fit", fit.describe()}, {"integer_valued", fit.integer_valued}, {"runs", rows}};
    return c;
}

inline ClaimResult claim_sos(const TrackerConfig& cfg, std::uint64_t seed)
{
    ClaimResult c{"sos-binary-sextics", "Gram SDP of binary sextics has central degree 7; octics and ternary quartics "
                                        "are refused with reference values 45 and 66",
                  true, {}};
    const CountReport rep = sos_degree(2, 6, cfg, seed);
    c.pass = rep.consensus && rep.count == 7;
    c.details = {{"sextics", count_entry(rep, 7)}, {"paths_tracked", rep.paths_tracked}};
    for (const auto& [n, twoD, ref] : {std::tuple{2, 8, 45}, std::tuple{3, 4, 66}}) {
        std::optional<int> got;
        try {
            (void)sos_degree(n, twoD, cfg, seed);
        } catch (const SOSBudgetRefusal& e) {
            got = e.reference();
        }
        c.pass = c.pass && got == ref;
        c.details[std::to_string(n) + "-" + std::to_string(twoD)] =
            got ? nlohmann::ordered_json{{"refused", true}, {"reference", *got}}
                : nlohmann::ordered_json{{"refused", false}};
    }
    return c;
}

inline ClaimResult claim_polytope(std::uint64_t seed)
{
    ClaimResult c{"polytope-bkk", "normalized volume of the reduced LP support equals C(m-1,d) for m <= 6; staircase "
                                  "counts sum to C(m-1,d) for m <= 12",
                  true, {}};
    nlohmann::ordered_json vols = nlohmann::ordered_json::array();
    for (int m = 2; m <= 6; ++m) {
        for (int d = 1; d < m; ++d) {
            const auto v = *polytope_degree(Family::lp, m, d, seed);
            const auto expected = to_int64(binomial(m - 1, d));
            c.pass = c.pass && v == expected;
            vols.push_back({{"m", m}, {"d", d}, {"volume", v}, {"expected", expected}});
        }
    }
    int checked = 0;
    for (int m = 2; m <= 12; ++m) {
        for (int d = 1; d < m; ++d) {
            const auto sc = staircase_counts(m, d);
            bool ok = BigInt(sc.total()) == binomial(m - 1, d);
            for (std::size_t k = 0; k < sc.counts_by_k.size(); ++k) {
                ok = ok && BigInt(sc.counts_by_k[k]) ==
                               binomial_falling(m - static_cast<int>(k) - 2, d - 1);
            }
            c.pass = c.pass && ok;
            ++checked;
        }
    }
    c.details = {{"volumes", vols}, {"staircase_cases", checked}};
    return c;
}

inline ClaimResult claim_genus()
{
    ClaimResult c{"genus", "closed-form SDP genera match the table; genus_lp is symmetric in d <-> m-d and its two "
                           "forms agree for m <= 12",
                  true, {}};
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const std::vector<std::tuple<int, int, std::int64_t>> expected = {
        {3, 3, 1}, {3, 4, 0}, {4, 7, 10}, {4, 8, 1}, {5, 12, 33}, {5, 13, 3}};
    for (const auto& [m, d, g] : expected) {
        const auto v = genus_sdp_special(m, d);
        c.pass = c.pass && v == g;
        rows.push_back({{"m", m}, {"d", d}, {"genus", v ? nlohmann::ordered_json(*v) : nullptr}, {"expected", g}});
    }
    for (int m = 2; m <= 12; ++m) {
        const auto N = static_cast<std::int64_t>(sym_dim(m));
        c.pass = c.pass && genus_sdp_special(m, 1) == 0 && genus_sdp_special(m, N - 1) == 0;
    }
    bool symmetric = true;
    for (int m = 2; m <= 10; ++m) {
        for (int d = 1; d < m; ++d) {
            symmetric = symmetric && genus_lp(m, d) == genus_lp(m, m - d);
        }
    }
    bool forms_agree = true;
    for (int m = 2; m <= 12; ++m) {
        for (int d = 1; d < m; ++d) {
            try {
                (void)genus_lp(m, d);
            } catch (const std::logic_error&) {
                forms_agree = false;
            }
        }
    }
    c.pass = c.pass && symmetric && forms_agree;
    c.details = {{"sdp_special", rows}, {"lp_symmetric", symmetric}, {"lp_forms_agree", forms_agree}};
    return c;
}

inline ClaimResult claim_central_path(std::uint64_t seed)
{
    ClaimResult c{"central-path", "20-sample traces of LP(6,2), QP(5,2), SDP(4,3): complementarity < 1e-8, gap/lambda "
                                  "= m to 1e-6, strictly feasible",
                  true, {}};
    ScheduleConfig sched;
    sched.n_steps = 20;
    auto judge = [&](const char* name, const Trace& t, const PathCheck& pc) {
        const bool ok = t.ok && t.samples.size() == 20 && pc.max_complementarity < 1e-8 && pc.max_gap_error < 1e-6 &&
                        pc.strictly_feasible && pc.lambda_decreasing;
        c.pass = c.pass && ok;
        auto j = pc.to_json();
        j["samples"] = t.samples.size();
        j["pass"] = ok;
        c.details[name] = j;
    };
    c.details = nlohmann::ordered_json::object();
    const auto lp = random_lp(6, 2, seed);
    const auto tl = trace_lp(lp, sched);
    judge("lp", tl, check_path(lp, tl.samples));
    const auto qp = random_qp(5, 2, seed);
    const auto tq = trace_qp(qp, sched);
    judge("qp", tq, check_path(qp, tq.samples));
    const auto sdp = random_sdp(4, 3, seed);
    const auto ts = trace_sdp(sdp, sched);
    judge("sdp", ts, check_path(sdp, ts.samples));
    return c;
}

} // namespace detail

struct ReproduceOptions
{
    bool include_sos = true;
    /// Called after each claim with its wall time in milliseconds; timings never enter the JSON.
    std::function<void(const ClaimResult&, double)> on_claim;
};

/// Every desk-scale claim, in a fixed order; the JSON carries no timings so reruns are byte-identical.
inline CommandResult cmd_reproduce(const RunConfig& rc, const ReproduceOptions& opt = {})
{
    std::vector<ClaimResult> claims;
    auto run = [&](auto&& claim) {
        const auto t0 = std::chrono::steady_clock::now();
        claims.push_back(claim());
        if (opt.on_claim) {
            opt.on_claim(claims.back(),
                         std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
        }
    };
    run([&] { return detail::claim_lp(rc.tracker, rc.seed); });
    run([&] { return detail::claim_qp(rc.tracker, rc.seed); });
    run([&] { return detail::claim_sdp_m3(rc.tracker, rc.seed); });
    run([&] { return detail::claim_sdp_polynomial(rc.tracker, rc.seed); });
    if (opt.include_sos) {
        run([&] { return detail::claim_sos(rc.tracker, rc.seed); });
    }
    run([&] { return detail::claim_polytope(rc.seed); });
    run([&] { return detail::claim_genus(); });
    run([&] { return detail::claim_central_path(rc.seed); });

    CommandResult res;
    bool all = true;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : claims) {
        all = all && c.pass;
        arr.push_back(c.to_json());
    }
    res.json = {{"seed", rc.seed}, {"tracker", detail::ordered(rc.tracker.to_json())}, {"claims", arr}, {"all_pass", all}};
    res.exit_code = all ? 0 : 1;
    return res;
}

/// Flat "key: value" rendering of a JSON object for --format text.
inline std::string render_text(const nlohmann::ordered_json& j, const std::string& prefix = "")
{
    std::ostringstream os;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            const std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_structured()) {
                os << render_text(v, key);
            } else {
                os << key << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        if (std::none_of(j.begin(), j.end(), [](const auto& e) { return e.is_structured(); })) {
            os << prefix << ": " << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << render_text(j[i], prefix + "[" + std::to_string(i) + "]");
            }
        }
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
    return os.str();
}

} // namespace centraldeg
