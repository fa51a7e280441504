#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "contactloc/dh.hpp"
#include "contactloc/errors.hpp"
#include "contactloc/io.hpp"
#include "contactloc/localization.hpp"
#include "contactloc/mc_oracle.hpp"
#include "contactloc/residue_engine.hpp"
#include "contactloc/sphere_model.hpp"
#include "contactloc/verification.hpp"

namespace {

using nlohmann::json;
using namespace contactloc;

int default_workers() {
    const char* env = std::getenv("CONTACTLOC_THREADS");
    if (env == nullptr || *env == '\0') return 4;
    try {
        int value = std::stoi(env);
        if (value < 1) throw ConfigError("CONTACTLOC_THREADS must be a positive integer");
        return value;
    } catch (const std::logic_error&) {
        throw ConfigError("CONTACTLOC_THREADS must be a positive integer");
    }
}

// Values read from the --config JSON file; command line flags override them.
struct FileConfig {
    std::optional<WeightedSphere> sphere;
    std::optional<std::string> eta;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<int> workers;
    std::optional<int> bins;
};

std::string read_text(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

FileConfig load_config(const std::string& path) {
    FileConfig out;
    if (path.empty()) return out;
    std::string text = read_text(path);
    json config = json::parse(text, nullptr, false);
    if (config.is_discarded()) throw ParseError("malformed JSON config");
    if (!config.is_object()) throw ParseError("config must be a JSON object");
    if (config.contains("n") || config.contains("w") || config.contains("beta")) {
        out.sphere = sphere_from_json_text(text);
    }
    if (config.contains("eta")) {
        if (!config["eta"].is_string()) throw ParseError("eta must be a polynomial string");
        out.eta = config["eta"].get<std::string>();
    }
    if (config.contains("seed")) out.seed = config["seed"].get<std::uint64_t>();
    if (config.contains("samples")) out.samples = config["samples"].get<std::size_t>();
    if (config.contains("workers")) out.workers = config["workers"].get<int>();
    if (config.contains("bins")) out.bins = config["bins"].get<int>();
    return out;
}

const WeightedSphere& require_sphere(const FileConfig& config) {
    if (!config.sphere) throw ConfigError("config file must define the sphere (n, w, beta)");
    return *config.sphere;
}

EquivariantClass resolve_eta(const FileConfig& config, const std::string& flag_value) {
    std::string text = flag_value;
    if (text.empty()) text = config.eta.value_or("1");
    return EquivariantClass(Poly::parse(text));
}

// 15-significant-digit JSON number.
json rounded(double value) { return std::stod(sig15(value)); }

json complex_json(std::complex<double> value) {
    if (value.imag() == 0.0) return rounded(value.real());
    return json{{"re", rounded(value.real())}, {"im", rounded(value.imag())}};
}

struct McFlags {
    std::uint64_t seed = 2026;
    std::size_t samples = 1000000;
    int workers = 0;  // 0: resolve from env
    int bins = 64;
};

McConfig resolve_mc(const FileConfig& config, const McFlags& flags, bool seed_set,
                    bool samples_set, bool workers_set, bool bins_set) {
    McConfig mc;
    mc.seed = seed_set ? flags.seed : config.seed.value_or(flags.seed);
    mc.samples = samples_set ? flags.samples : config.samples.value_or(flags.samples);
    mc.workers = workers_set ? flags.workers : config.workers.value_or(default_workers());
    mc.histogram_bins = bins_set ? flags.bins : config.bins.value_or(flags.bins);
    return mc;
}

json circle_json(const CriticalCircle& circle) {
    return json{{"index", circle.index},
                {"mu", circle.mu_value.get_str()},
                {"euler", circle.euler_class.str()},
                {"restriction_slope", circle.restriction_slope.get_str()},
                {"alpha_integral", circle.alpha_integral.str()}};
}

json term_json(const LocalizationTerm& term) {
    return json{{"circle", term.circle_index},
                {"exponent", term.exponent_lambda.get_str()},
                {"amplitude", term.amplitude.str()}};
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact localization, residue and transform toolkit for weighted spheres"};
    app.require_subcommand(1);

    std::string config_path;
    std::string eta_text;
    McFlags mc_flags;
    bool with_mc = false;
    std::string csv_path, mc_csv_path;
    int grid_points = 16;
    std::vector<double> epsilons = {0.2, 0.1, 0.05, 0.025};
    bool quick = false;
    double perturb_euler = 0.0;

    auto add_config = [&config_path](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--config", config_path,
                                    "JSON config file ('-' reads stdin)");
        if (required) opt->required();
    };
    auto add_eta = [&eta_text](CLI::App* sub) {
        sub->add_option("--eta", eta_text, "class representative, polynomial in u and s");
    };

    struct McOptions {
        CLI::Option* seed = nullptr;
        CLI::Option* samples = nullptr;
        CLI::Option* workers = nullptr;
        CLI::Option* bins = nullptr;
    };
    auto add_mc_flags = [&mc_flags](CLI::App* sub, bool with_bins) {
        McOptions opts;
        opts.seed = sub->add_option("--seed", mc_flags.seed, "Monte Carlo seed");
        opts.samples = sub->add_option("--samples", mc_flags.samples, "Monte Carlo sample count");
        opts.workers = sub->add_option("--workers", mc_flags.workers, "worker thread count");
        if (with_bins) opts.bins = sub->add_option("--bins", mc_flags.bins, "histogram bin count");
        return opts;
    };
    auto mc_config = [&mc_flags](const FileConfig& config, const McOptions& opts) {
        return resolve_mc(config, mc_flags, opts.seed->count() > 0, opts.samples->count() > 0,
                          opts.workers->count() > 0, opts.bins && opts.bins->count() > 0);
    };

    int exit_code = 0;

    auto* volume = app.add_subcommand("volume", "contact volume, exact and numeric");
    add_config(volume, true);
    volume->add_flag("--mc", with_mc, "add a Monte Carlo estimate");
    McOptions volume_mc = add_mc_flags(volume, false);
    volume->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        ExactScalar value = contact_volume(sphere);
        json out{{"exact", value.str()}, {"float", complex_json(value.to_complex())}};
        if (with_mc) {
            McVolumeResult estimate = mc_contact_volume(sphere, mc_config(config, volume_mc));
            out["mc"] = json{{"value", rounded(estimate.value)},
                             {"stderr", rounded(estimate.stderr_value)},
                             {"samples", estimate.samples}};
        }
        emit(out);
    });

    auto* localize = app.add_subcommand("localize",
                                        "fixed point pairing of the contact form with a class");
    add_config(localize, true);
    add_eta(localize);
    localize->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        EquivariantClass eta = resolve_eta(config, eta_text);
        Poly pairing = pair_alpha_eta(sphere, eta);
        json circles = json::array();
        for (const auto& circle : critical_circles(sphere)) circles.push_back(circle_json(circle));
        emit(json{{"eta", eta.rep.str()},
                  {"pairing", pairing.str()},
                  {"circles", circles}});
    });

    auto* push = app.add_subcommand("pushforward",
                                    "fixed point expansion of the oscillatory pushforward");
    add_config(push, true);
    add_eta(push);
    push->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        EquivariantClass eta = resolve_eta(config, eta_text);
        json terms = json::array();
        for (const auto& term : pushforward(sphere, eta)) terms.push_back(term_json(term));
        emit(json{{"eta", eta.rep.str()}, {"terms", terms}});
    });

    auto* residue = app.add_subcommand("residue", "quotient pairing through the residue");
    add_config(residue, true);
    add_eta(residue);
    residue->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        EquivariantClass eta = resolve_eta(config, eta_text);
        ExactScalar value = quotient_pairing(sphere, eta);
        json terms = json::array();
        for (const auto& term : pushforward(sphere, eta)) {
            json entry = term_json(term);
            entry["kept"] = term.exponent_lambda > 0;
            terms.push_back(entry);
        }
        emit(json{{"exact", value.str()},
                  {"float", complex_json(value.to_complex())},
                  {"n0", regular_isotropy_order(sphere)},
                  {"vol_G", circle_group_volume().str()},
                  {"terms", terms}});
    });

    auto* profile_cmd = app.add_subcommand("dh-profile",
                                           "piecewise polynomial transform profile");
    add_config(profile_cmd, true);
    add_eta(profile_cmd);
    profile_cmd->add_option("--csv", csv_path, "write numeric profile samples as CSV");
    profile_cmd->add_option("--grid", grid_points, "profile samples per piece for --csv");
    profile_cmd->add_option("--mc-csv", mc_csv_path, "write a Monte Carlo histogram as CSV");
    McOptions profile_mc = add_mc_flags(profile_cmd, true);
    profile_cmd->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        EquivariantClass eta = resolve_eta(config, eta_text);
        PiecewisePolynomial profile = dh_distribution(sphere, eta);
        json breakpoints = json::array(), pieces = json::array(), atoms = json::array();
        for (const auto& b : profile.breakpoints()) breakpoints.push_back(b.get_str());
        for (const auto& piece : profile.pieces()) pieces.push_back(piece.str());
        for (const auto& atom : profile.atoms()) {
            atoms.push_back(json{{"location", atom.location.get_str()},
                                 {"order", atom.order},
                                 {"coeff", atom.coeff.str()}});
        }
        json out{{"breakpoints", breakpoints},
                 {"pieces", pieces},
                 {"atoms", atoms},
                 {"sqrt_two_pi_power", profile.sqrt_two_pi_power()},
                 {"integral_units", profile.integral().str()}};
        if (auto support = profile.support()) {
            out["support"] = json::array({support->first.get_str(), support->second.get_str()});
        } else {
            out["support"] = nullptr;
        }
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw ConfigError("cannot open '" + csv_path + "' for writing");
            write_profile_csv(csv, profile, grid_points);
        }
        if (!mc_csv_path.empty()) {
            Histogram histogram = mc_dh_histogram(sphere, mc_config(config, profile_mc));
            std::ofstream csv(mc_csv_path);
            if (!csv) throw ConfigError("cannot open '" + mc_csv_path + "' for writing");
            write_histogram_csv(csv, histogram);
            out["mc"] = json{{"samples", histogram.samples}, {"clamped", histogram.clamped}};
        }
        emit(out);
    });

    auto* asym = app.add_subcommand("asymptotics",
                                    "Gaussian-damped pairing along an epsilon grid");
    add_config(asym, true);
    add_eta(asym);
    asym->add_option("--epsilons", epsilons, "epsilon grid (comma separated)")
        ->delimiter(',');
    asym->callback([&] {
        FileConfig config = load_config(config_path);
        const WeightedSphere& sphere = require_sphere(config);
        EquivariantClass eta = resolve_eta(config, eta_text);
        AsymptoticReport report = asymptotic_report(sphere, eta, epsilons);
        std::complex<double> limit = report.limit.to_complex();
        json rows = json::array();
        for (size_t k = 0; k < report.epsilons.size(); ++k) {
            rows.push_back(json{{"epsilon", rounded(report.epsilons[k])},
                                {"I", complex_json(report.I_values[k])},
                                {"abs_error", rounded(std::abs(report.I_values[k] - limit))}});
        }
        emit(json{{"limit_exact", report.limit.str()},
                  {"limit_float", complex_json(limit)},
                  {"rows", rows},
                  {"decay_exponent", rounded(report.decay_exponent_estimate)},
                  {"fit_r_squared", rounded(report.fit_r_squared)},
                  {"fit_amplitude", rounded(report.fit_amplitude)},
                  {"monotone", report.monotone_approach}});
    });

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    add_config(verify, false);
    verify->add_flag("--quick", quick,
                     "small Monte Carlo samples with widened statistical tolerances");
    verify->add_option("--perturb-euler", perturb_euler,
                       "inject an offset into the fixed point identity (negative control)");
    McOptions verify_mc = add_mc_flags(verify, false);
    verify->callback([&] {
        FileConfig config = load_config(config_path);
        VerifyOptions options;
        options.quick = quick;
        options.perturb_euler = perturb_euler;
        McConfig mc = mc_config(config, verify_mc);
        options.seed = mc.seed;
        if (verify_mc.samples->count() > 0 || config.samples) options.mc_samples = mc.samples;
        options.workers = mc.workers;
        auto results = run_verification(options);
        print_report(std::cout, results);
        bool ok = all_passed(results);
        std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
        exit_code = ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& error) {
        std::cerr << "config error: " << error.what() << "\n";
        return 2;
    } catch (const MathPreconditionError& error) {
        std::cerr << "precondition violated: " << error.what() << "\n";
        return 3;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return exit_code;
}
