#include "omflat/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "omflat/report.hpp"

namespace omflat {

namespace {

enum class Verdict { pass, fail, timeout };

const char* verdict_text(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::timeout: return "TIMEOUT";
    }
    return "FAIL";
}

Verdict from_bool(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

struct RunReport {
    std::string command;
    std::optional<std::uint64_t> seed;
    Json result = Json::object();
    std::vector<std::pair<std::string, Verdict>> verdicts;

    bool passed() const {
        for (const auto& [name, v] : verdicts)
            if (v != Verdict::pass) return false;
        return !verdicts.empty();
    }

    Json to_json(double elapsed_ms) const {
        Json out;
        out["command"] = command;
        out["seed"] = seed ? Json(*seed) : Json(nullptr);
        out["elapsed_ms"] = static_cast<std::int64_t>(elapsed_ms);
        out["result"] = result;
        Json v = Json::object();
        for (const auto& [name, verdict] : verdicts) v[name] = verdict_text(verdict);
        out["verdicts"] = v;
        out["status"] = passed() ? "PASS" : "FAIL";
        return out;
    }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write " + path);
    file << text;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot read " + path + " (check the path)");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct Options {
    std::string sphere;
    std::uint64_t seed = 1;
    int trials = 100;
    int rank = 3;
    int cycle = 0;
    int samples = 100;
    std::string delta = "1/1000000";
    std::string out_json;
    std::string out_dot;
    double budget_seconds = 0;
    std::string variant = "printed";
    bool homology = false;
    std::string file;
};

void cmd_poset_build(const Options& o, const Budget& budget, RunReport& report) {
    const FlatteningPoset p = enumerate_P(SimplicialSphere::parse(o.sphere), EnumerationPath::automatic, &budget);
    Json& r = report.result;
    r["sphere"] = p.sphere.descriptor();
    r["element_count"] = p.size();
    r["cover_count"] = p.poset().hasse().size();
    Json minimal = Json::array(), maximal = Json::array();
    for (auto i : p.poset().minimal()) minimal.push_back(p.poset().label(i));
    for (auto i : p.poset().maximal()) maximal.push_back(p.poset().label(i));
    r["minimal"] = minimal;
    r["maximal"] = maximal;
    r["unique_minimum"] = minimal.size() == 1;
    if (!o.out_json.empty()) write_file(o.out_json, flattening_poset_to_json(p).dump(2) + "\n");
    if (!o.out_dot.empty()) write_file(o.out_dot, poset_to_dot(p.poset()));
    report.verdicts.emplace_back("nonempty", from_bool(p.size() > 0));
}

void cmd_verify_contractible(const Options& o, const Budget& budget, RunReport& report) {
    const FlatteningPoset p = enumerate_P(SimplicialSphere::parse(o.sphere), EnumerationPath::automatic, &budget);
    const ContractibilityCertificate cert = certify_contractible(p.poset(), &budget);
    report.result["sphere"] = p.sphere.descriptor();
    report.result["element_count"] = p.size();
    report.result["certificate"] = certificate_to_json(cert);
    report.verdicts.emplace_back("homology_trivial", from_bool(cert.homology_trivial()));
}

void cmd_verify_duality(const Options& o, const Budget&, RunReport& report) {
    report.seed = o.seed;
    const DualityReport d = verify_duality_diagram(o.rank, o.trials, o.seed);
    report.result = duality_report_to_json(d);
    report.verdicts.emplace_back("diagram_commutes", from_bool(d.failures.empty()));
}

void cmd_verify_f0f1(const Options& o, const Budget& budget, RunReport& report) {
    const F0F1Report f = verify_f0f1(o.cycle, parse_basis_variant(o.variant), o.homology, &budget);
    report.result = f0f1_report_to_json(f);
    report.verdicts.emplace_back("no_formula_anomaly", from_bool(f.anomalies.empty()));
    report.verdicts.emplace_back("f0_descending", from_bool(f.f0_descending));
    report.verdicts.emplace_back("f1_ascending", from_bool(f.f1_ascending));
    report.verdicts.emplace_back("f0_entrywise_lowering", from_bool(f.f0_entrywise_lowering));
    report.verdicts.emplace_back("f1_entrywise_raising", from_bool(f.f1_entrywise_raising));
    report.verdicts.emplace_back("f1_image_equals_sigma", from_bool(f.image_equals_sigma));
    report.verdicts.emplace_back("deletion_well_defined", from_bool(f.deletion_well_defined));
    report.verdicts.emplace_back("deletion_surjective", from_bool(f.deletion_surjective));
    if (o.homology) {
        bool all = true;
        for (const auto& h : f.homology) all &= h.certificate.homology_trivial();
        report.verdicts.emplace_back("homology_trivial", from_bool(all));
    }
}

void cmd_verify_covers(const Options& o, const Budget& budget, RunReport& report) {
    const SimplicialSphere sphere = SimplicialSphere::parse(o.sphere);
    if (sphere.dim() != 1) throw InputError("verify-covers needs a 1-sphere such as cycle:5");
    const Rational delta = parse_rational(o.delta);
    const FlatteningPoset p = enumerate_P(sphere, EnumerationPath::automatic, &budget);
    Json covers = Json::array();
    std::size_t found = 0;
    for (const auto& [a, b] : p.poset().hasse()) {
        poll(&budget, "cover witnesses");
        const CoverWitness w = cover_witness(p.elements()[a], p.elements()[b], delta, sphere);
        found += w.found ? 1 : 0;
        covers.push_back(cover_witness_to_json(p.elements()[a], p.elements()[b], w));
    }
    report.result["sphere"] = sphere.descriptor();
    report.result["delta"] = format_rational(delta);
    report.result["cover_count"] = p.poset().hasse().size();
    report.result["witnesses_found"] = found;
    report.result["covers"] = covers;
    report.verdicts.emplace_back("all_witnesses_found", from_bool(found == p.poset().hasse().size()));
}

void cmd_flat_check(const Options& o, const Budget&, RunReport& report) {
    const Flattening f = flattening_from_json(read_file(o.file));
    const FlatteningVerdict v = check_flattening(f);
    report.result["sphere"] = f.sphere.descriptor();
    report.result["valid"] = v.valid;
    if (!v.valid) {
        report.result["reason"] = v.reason;
    } else {
        const OrientedMatroid m = mu0(f);
        report.result["mu0"] = m.key();
        report.result["mu0_text"] = m.to_text();
        report.verdicts.emplace_back("mu0_is_om_flattening", from_bool(is_om_flattening(m, f.sphere)));
    }
    report.verdicts.insert(report.verdicts.begin(), {"is_flattening", from_bool(v.valid)});
}

void cmd_flat_strata(const Options& o, const Budget& budget, RunReport& report) {
    report.seed = o.seed;
    const SimplicialSphere sphere = SimplicialSphere::parse(o.sphere);
    const SampleResult samples = sample_flattenings(sphere, static_cast<std::size_t>(o.samples), o.seed);
    std::map<std::string, std::size_t> histogram;
    bool all_in_p = true;
    for (const auto& f : samples.flattenings) {
        poll(&budget, "strata");
        const OrientedMatroid m = mu0(f);
        all_in_p &= is_om_flattening(m, sphere);
        ++histogram[m.key()];
    }
    Json h = Json::object();
    for (const auto& [key, count] : histogram) h[key] = count;
    report.result["sphere"] = sphere.descriptor();
    report.result["requested"] = o.samples;
    report.result["accepted"] = samples.flattenings.size();
    report.result["attempts"] = samples.attempts;
    if (samples.exhausted) report.result["warning"] = "sampling budget exhausted before reaching the requested count";
    report.result["distinct_strata"] = histogram.size();
    report.result["histogram"] = h;
    report.verdicts.emplace_back("images_in_P", from_bool(all_in_p));
    report.verdicts.emplace_back("sample_count", from_bool(!samples.exhausted));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact oriented matroid flattening toolkit", "omflat"};
    app.require_subcommand(1);
    Options o;

    auto sphere_opt = [&](CLI::App* sub) {
        return sub->add_option("--sphere", o.sphere, "cycle:n | simplex:m | join:a,b")->required();
    };
    o.budget_seconds = -1;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out-json", o.out_json, "write the JSON report to this file");
        sub->add_option("--budget-seconds", o.budget_seconds, "wall-clock budget in seconds (verify-contractible defaults to 600, others unlimited)");
    };

    using Handler = void (*)(const Options&, const Budget&, RunReport&);
    std::map<CLI::App*, Handler> handlers;

    auto* poset_build = app.add_subcommand("poset-build", "enumerate P(L) and export it");
    sphere_opt(poset_build);
    poset_build->add_option("--out-json", o.out_json, "poset JSON output");
    poset_build->add_option("--out-dot", o.out_dot, "Hasse diagram DOT output");
    poset_build->add_option("--budget-seconds", o.budget_seconds, "wall-clock budget (default unlimited)");
    handlers[poset_build] = cmd_poset_build;

    auto* contractible = app.add_subcommand("verify-contractible", "homology of the order complex of P(L)");
    sphere_opt(contractible);
    common(contractible);
    handlers[contractible] = cmd_verify_contractible;

    auto* duality = app.add_subcommand("verify-duality", "duality diagram on random points of Gr(r, r+2)");
    duality->add_option("--rank", o.rank, "r >= 2")->check(CLI::Range(2, 12));
    duality->add_option("--trials", o.trials, "number of random points")->check(CLI::NonNegativeNumber);
    duality->add_option("--seed", o.seed, "generator seed");
    common(duality);
    handlers[duality] = cmd_verify_duality;

    auto* f0f1 = app.add_subcommand("verify-f0f1", "lowering/raising maps on P(cycle:N)");
    f0f1->add_option("--n", o.cycle, "cycle size N (>= 4)")->required()->check(CLI::Range(4, 8));
    f0f1->add_option("--f0-basis-variant", o.variant, "printed | n-succ | succ-1")
        ->check(CLI::IsMember({"printed", "n-succ", "succ-1"}));
    f0f1->add_flag("--homology", o.homology, "also certify P, P0, Sigma and the smaller poset");
    common(f0f1);
    handlers[f0f1] = cmd_verify_f0f1;

    auto* covers = app.add_subcommand("verify-covers", "closure witnesses for every Hasse cover");
    sphere_opt(covers);
    covers->add_option("--delta", o.delta, "maximal coordinate distance, rational p/q");
    common(covers);
    handlers[covers] = cmd_verify_covers;

    auto* flat_check = app.add_subcommand("flat-check", "validate a flattening file and print mu0");
    flat_check->add_option("file", o.file, "flattening JSON")->required();
    flat_check->add_option("--out-json", o.out_json, "write the JSON report to this file");
    handlers[flat_check] = cmd_flat_check;

    auto* strata = app.add_subcommand("flat-strata", "histogram of mu0 over seeded samples");
    sphere_opt(strata);
    strata->add_option("--samples", o.samples, "sample count")->check(CLI::NonNegativeNumber);
    strata->add_option("--seed", o.seed, "generator seed");
    common(strata);
    handlers[strata] = cmd_flat_strata;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    RunReport report;
    report.command = "omflat";
    for (int i = 1; i < argc; ++i) report.command += std::string(" ") + argv[i];

    const auto start = std::chrono::steady_clock::now();
    if (o.budget_seconds < 0) o.budget_seconds = chosen == contractible ? 600 : 0;
    const Budget budget(o.budget_seconds);
    try {
        handlers.at(chosen)(o, budget, report);
    } catch (const BudgetExceeded& e) {
        report.result["timeout"] = e.what();
        report.verdicts.emplace_back("budget", Verdict::timeout);
    } catch (const InputError& e) {
        err << "omflat " << chosen->get_name() << ": " << e.what() << "\n"
            << "run 'omflat " << chosen->get_name() << " --help' for usage\n";
        return 2;
    } catch (const DomainError& e) {
        err << "omflat " << chosen->get_name() << ": " << e.what() << "\n";
        return 2;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const std::string text = report.to_json(elapsed).dump(2) + "\n";
    out << text;
    if (!o.out_json.empty() && chosen != poset_build) write_file(o.out_json, text);
    return report.passed() ? 0 : 1;
}

}  // namespace omflat
