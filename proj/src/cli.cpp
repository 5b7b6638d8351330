#include "xdeficit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace xdeficit::cli {

namespace {

using nlohmann::json;

std::string quoted(std::string_view s) { return json(std::string(s)).dump(); }

void print_invalid_state(std::ostream& out, const std::string& reason) {
    out << "{\"error\":\"invalid_state\",\"reason\":" << quoted(reason) << "}\n";
}

// Writes `body` to `path`, or to `out` when the path is empty. Returns false on I/O failure.
bool emit(const std::string& path, const std::string& body, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << body;
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    file << body;
    file.flush();
    if (!file) {
        err << "error: write to " << path << " failed\n";
        return false;
    }
    return true;
}

double parse_number(const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("not a number: '" + token + "'");
    return v;
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw std::invalid_argument("grid must look like NxM, got '" + text + "'");
    try {
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = text.substr(0, x);
        const std::string b = text.substr(x + 1);
        const int n = std::stoi(a, &used_a);
        const int m = std::stoi(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || n < 2 || m < 2) throw std::invalid_argument("");
        return {n, m};
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must look like NxM with N, M >= 2, got '" + text + "'");
    }
}

void write_record(std::ostream& out, const DeficitResult& r) {
    out << "{\"deficit\":" << format_number(r.deficit) << ",\"phi_star\":" << format_number(r.phi_star)
        << ",\"g_max\":" << format_number(r.g_max) << ",\"s_rho\":" << format_number(r.s_rho)
        << ",\"method\":" << quoted(to_string(r.method)) << ",\"case_label\":" << quoted(to_string(r.case_label))
        << ",\"side\":" << quoted(to_string(r.side))
        << ",\"closed_form_rejected\":" << (r.closed_form_rejected ? "true" : "false") << "}\n";
}

}  // namespace

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

XStateParams parse_params(const std::vector<std::string>& tokens) {
    if (tokens.size() == 1 && tokens.front().find('{') != std::string::npos) {
        json obj;
        try {
            obj = json::parse(tokens.front());
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed parameter object: ") + e.what());
        }
        if (!obj.is_object()) throw std::invalid_argument("parameter text must be an object");
        XStateParams p;
        for (const auto& [key, slot] : {std::pair<const char*, double*>{"r3", &p.r3},
                                        {"s3", &p.s3},
                                        {"c1", &p.c1},
                                        {"c2", &p.c2},
                                        {"c3", &p.c3}}) {
            if (!obj.contains(key) || !obj[key].is_number()) {
                throw std::invalid_argument(std::string("parameter object needs a numeric '") + key + "'");
            }
            *slot = obj[key].get<double>();
        }
        return p;
    }
    if (tokens.size() != 5) {
        throw std::invalid_argument("expected five numbers r3 s3 c1 c2 c3, got " + std::to_string(tokens.size()));
    }
    return {parse_number(tokens[0]), parse_number(tokens[1]), parse_number(tokens[2]), parse_number(tokens[3]),
            parse_number(tokens[4])};
}

std::string_view to_string(SweepParam param) noexcept {
    switch (param) {
        case SweepParam::r3: return "r3";
        case SweepParam::s3: return "s3";
        case SweepParam::c1: return "c1";
        case SweepParam::c2: return "c2";
        case SweepParam::c3: return "c3";
    }
    return "c3";
}

double& sweep_slot(XStateParams& p, SweepParam param) noexcept {
    switch (param) {
        case SweepParam::r3: return p.r3;
        case SweepParam::s3: return p.s3;
        case SweepParam::c1: return p.c1;
        case SweepParam::c2: return p.c2;
        case SweepParam::c3: break;
    }
    return p.c3;
}

int cmd_compute(const ComputeRequest& req, std::ostream& out, std::ostream& err) {
    const XStateParams measured = req.side == Side::measure_a ? req.params.swapped() : req.params;
    if (auto v = validate_state(measured); !v) {
        print_invalid_state(out, v.reason);
        return kInvalidState;
    }
    DeficitResult r;
    switch (req.method) {
        case MethodChoice::automatic:
            r = deficit_exact(req.params, req.side);
            break;
        case MethodChoice::numeric_only:
            r = deficit_numeric(req.params, req.side);
            break;
        case MethodChoice::closed_form_only: {
            const CaseLabel label = classify_case(measured);
            if (label == CaseLabel::none) {
                err << "error: no closed-form region applies to this state\n";
                out << "{\"error\":\"no_closed_form\",\"reason\":\"no closed-form region applies\"}\n";
                return kUsage;
            }
            r = deficit_closed_form(measured, label);
            r.side = req.side;
            break;
        }
    }
    write_record(out, r);
    return kOk;
}

int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    VerifyBatch batch;
    if (req.fixed_state) {
        const XStateParams state = *req.fixed_state;
        batch = verify_states(std::span<const XStateParams>(&state, 1), req.options);
    } else {
        batch = verify_random_states(req.sampler, req.options);
    }

    std::ostringstream csv;
    csv << "r3,s3,c1,c2,c3,closed_value,sample_value,grid_value,su2_value,abs_diff_grid,abs_diff_sample,"
           "abs_diff_su2,n_alpha,n_phi,samples,method,error\n";
    for (const OracleReport& r : batch.reports) {
        const XStateParams& p = r.params;
        std::string error = r.error;
        std::replace(error.begin(), error.end(), ',', ';');
        csv << format_number(p.r3) << ',' << format_number(p.s3) << ',' << format_number(p.c1) << ','
            << format_number(p.c2) << ',' << format_number(p.c3) << ',' << format_number(r.closed_value) << ','
            << format_number(r.sample_value) << ',' << format_number(r.grid_value) << ','
            << format_number(r.su2_value) << ',' << format_number(r.abs_diff_grid) << ','
            << format_number(r.abs_diff_sample) << ',' << format_number(r.abs_diff_su2) << ',' << r.grid.n_alpha
            << ',' << r.grid.n_phi << ',' << r.samples << ',' << r.method << ',' << error << '\n';
    }
    const VerifySummary& s = batch.summary;
    const bool pass = s.failures == 0 && s.max_diff_grid <= req.tolerance;
    csv << "# n=" << s.n << ",max_diff_grid=" << format_number(s.max_diff_grid)
        << ",mean_diff_grid=" << format_number(s.mean_diff_grid) << ",failures=" << s.failures
        << ",rng=" << batch.rng_algorithm << '\n';

    std::ostream& summary_stream = req.out.empty() ? err : out;
    if (!emit(req.out, csv.str(), out, err)) return kUsage;
    summary_stream << "{\"n\":" << s.n << ",\"max_diff_grid\":" << format_number(s.max_diff_grid)
                   << ",\"mean_diff_grid\":" << format_number(s.mean_diff_grid)
                   << ",\"max_diff_sample\":" << format_number(s.max_diff_sample) << ",\"failures\":" << s.failures
                   << ",\"tolerance\":" << format_number(req.tolerance) << ",\"pass\":" << (pass ? "true" : "false")
                   << "}\n";
    return pass ? kOk : kToleranceBreach;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.steps < 2) {
        err << "error: --steps must be at least 2\n";
        return kUsage;
    }
    if (!std::isfinite(spec.from) || !std::isfinite(spec.to)) {
        err << "error: sweep bounds must be finite\n";
        return kUsage;
    }
    std::ostringstream csv;
    csv << to_string(spec.varying) << ",deficit,phi_star,case_label,valid\n";
    for (int i = 0; i < spec.steps; ++i) {
        XStateParams p = spec.fixed;
        const double value =
            i == spec.steps - 1 ? spec.to : spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
        sweep_slot(p, spec.varying) = value;
        csv << format_number(value) << ',';
        if (validate_state(p)) {
            const DeficitResult r = deficit_exact(p);
            csv << format_number(r.deficit) << ',' << format_number(r.phi_star) << ',' << to_string(r.case_label)
                << ",1\n";
        } else {
            csv << "nan,nan," << to_string(classify_case(p)) << ",0\n";
        }
    }
    return emit(spec.out, csv.str(), out, err) ? kOk : kUsage;
}

int cmd_gcurve(const GCurveRequest& req, std::ostream& out, std::ostream& err) {
    if (req.points < 2) {
        err << "error: need at least 2 points\n";
        return kUsage;
    }
    if (auto v = validate_state(req.params); !v) {
        print_invalid_state(out, v.reason);
        return kInvalidState;
    }
    std::ostringstream csv;
    csv << "phi,G\n";
    double best_phi = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < req.points; ++i) {
        const double phi = i == req.points - 1 ? 1.0 : static_cast<double>(i) / (req.points - 1);
        const double g = G(req.params, phi);
        if (g > best) {
            best = g;
            best_phi = phi;
        }
        csv << format_number(phi) << ',' << format_number(g) << '\n';
    }
    csv << "# argmax=" << format_number(best_phi) << ",max=" << format_number(best) << '\n';
    return emit(req.out, csv.str(), out, err) ? kOk : kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"One-way information deficit of two-qubit X states", "xdeficit"};
    app.require_subcommand(1);

    std::vector<std::string> param_tokens;
    std::string side = "b";
    std::string method = "auto";
    std::uint64_t seed = 42;
    std::size_t count = 1000;
    std::string grid = "101x101";
    double tolerance = 1e-4;
    std::string out_path;
    int steps = 0;
    double from = 0.0;
    double to = 1.0;
    std::string vary = "c3";
    std::string region = "paper";
    std::size_t su2_samples = 0;
    unsigned threads = 0;

    auto add_params = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("-p,--params,params", param_tokens,
                                    "r3 s3 c1 c2 c3, or {\"r3\":..,\"s3\":..,\"c1\":..,\"c2\":..,\"c3\":..}");
        if (required) opt->required();
        return opt;
    };

    auto* compute = app.add_subcommand("compute", "deficit for one state");
    add_params(compute, true);
    compute->add_option("--side", side, "measured qubit")->check(CLI::IsMember({"a", "b"}));
    compute->add_option("--method", method, "evaluation route")->check(CLI::IsMember({"auto", "numeric", "closed"}));

    auto* verify = app.add_subcommand("verify", "compare against brute-force oracles on random states");
    add_params(verify, false);
    verify->add_option("--seed", seed);
    verify->add_option("--count", count)->check(CLI::PositiveNumber);
    verify->add_option("--grid", grid, "alpha x phi lattice");
    verify->add_option("--tolerance", tolerance);
    verify->add_option("--region", region)->check(CLI::IsMember({"paper", "psd"}));
    verify->add_option("--su2-samples", su2_samples, "0 skips the SU(2) oracle");
    verify->add_option("--threads", threads);
    verify->add_option("--out", out_path);

    auto* sweep = app.add_subcommand("sweep", "deficit along one parameter");
    add_params(sweep, true);
    sweep->add_option("--vary", vary)->check(CLI::IsMember({"r3", "s3", "c1", "c2", "c3"}))->required();
    sweep->add_option("--from", from)->required();
    sweep->add_option("--to", to)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--out", out_path);

    auto* gcurve = app.add_subcommand("gcurve", "G(phi) on a uniform partition of [0, 1]");
    add_params(gcurve, true);
    gcurve->add_option("--steps", steps, "number of points (default 101)");
    gcurve->add_option("--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) {
            ComputeRequest req;
            req.params = parse_params(param_tokens);
            req.side = side == "a" ? Side::measure_a : Side::measure_b;
            req.method = method == "numeric"  ? MethodChoice::numeric_only
                         : method == "closed" ? MethodChoice::closed_form_only
                                              : MethodChoice::automatic;
            return cmd_compute(req, out, err);
        }
        if (verify->parsed()) {
            VerifyRequest req;
            req.sampler = {seed, region == "psd" ? Region::psd_only : Region::paper_region, count};
            const auto [n_alpha, n_phi] = parse_grid(grid);
            req.options.grid = {n_alpha, n_phi};
            req.options.su2_samples = su2_samples;
            req.options.seed = seed;
            req.options.threads = threads;
            req.tolerance = tolerance;
            req.out = out_path;
            if (!param_tokens.empty()) req.fixed_state = parse_params(param_tokens);
            return cmd_verify(req, out, err);
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            spec.fixed = parse_params(param_tokens);
            spec.varying = vary == "r3"   ? SweepParam::r3
                           : vary == "s3" ? SweepParam::s3
                           : vary == "c1" ? SweepParam::c1
                           : vary == "c2" ? SweepParam::c2
                                          : SweepParam::c3;
            spec.from = from;
            spec.to = to;
            spec.steps = steps;
            spec.out = out_path;
            return cmd_sweep(spec, out, err);
        }
        if (gcurve->parsed()) {
            GCurveRequest req;
            req.params = parse_params(param_tokens);
            req.points = steps == 0 ? 101 : steps;
            req.out = out_path;
            return cmd_gcurve(req, out, err);
        }
    } catch (const InvalidStateError& e) {
        print_invalid_state(out, e.reason());
        return kInvalidState;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace xdeficit::cli
