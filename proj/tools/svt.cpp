// Command-line front end: scheme specs in, tables and verdicts out.
//
// Exit codes: 0 success / suite passed, 1 usage or input error,
// 2 mathematical anomaly (nonzero defect or failed verification).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "svt/hilbert.hpp"
#include "svt/horace.hpp"
#include "svt/secant.hpp"
#include "svt/transfer.hpp"

using nlohmann::json;

namespace {

struct RunConfig {
    std::uint64_t prime = svt::kDefaultModulus;
    std::uint64_t seed = 20240501;
    int trials = 3;
    int dmax = 6;  // degree bound for the piecewise ideal checks
    std::string format = "csv";
    std::string out;
};

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out.empty()) return std::cout;
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
    return file;
}

void emit_table(const std::vector<svt::DefectReport>& table, const RunConfig& cfg,
                std::ostream& os) {
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : table)
            arr.push_back({{"a", r.a},
                           {"b", r.b},
                           {"s", r.s},
                           {"expected_hf", r.expected_hf},
                           {"computed_hf", r.computed_hf},
                           {"defect", r.defect},
                           {"trials", r.trials},
                           {"seed", r.seed}});
        os << arr.dump(2) << "\n";
    } else {
        os << "a,b,s,expected_hf,computed_hf,defect,trials,seed\n";
        for (const auto& r : table)
            os << r.a << "," << r.b << "," << r.s << "," << r.expected_hf << ","
               << r.computed_hf << "," << r.defect << "," << r.trials << "," << r.seed << "\n";
    }
}

void emit_report(const svt::LinSysReport& r, const RunConfig& cfg, std::ostream& os) {
    if (cfg.format == "json") {
        json obj = {{"basis_size", r.basis_size},
                    {"rank", r.rank},
                    {"dim_linsys", r.dim_linsys},
                    {"virtual_dim", r.virtual_dim},
                    {"expected_dim", r.expected_dim},
                    {"status", svt::to_string(r.status)},
                    {"scheme", r.scheme_summary}};
        if (r.ambient == svt::Ambient::Plane)
            obj["degree"] = r.d;
        else
            obj["bidegree"] = {r.a, r.b};
        os << obj.dump(2) << "\n";
    } else {
        os << "degree,basis_size,rank,dim_linsys,virtual_dim,expected_dim,status,scheme\n";
        if (r.ambient == svt::Ambient::Plane)
            os << r.d;
        else
            os << r.a << ";" << r.b;
        os << "," << r.basis_size << "," << r.rank << "," << r.dim_linsys << ","
           << r.virtual_dim << "," << r.expected_dim << "," << svt::to_string(r.status) << ","
           << r.scheme_summary << "\n";
    }
}

void emit_verdict(const std::string& suite, bool pass, const RunConfig& cfg, std::ostream& os) {
    if (cfg.format == "json") {
        os << json({{"suite", suite},
                    {"pass", pass},
                    {"seed", cfg.seed},
                    {"trials", cfg.trials},
                    {"prime", cfg.prime}})
                  .dump(2)
           << "\n";
    } else {
        os << "suite,pass,seed,trials,prime\n"
           << suite << "," << (pass ? "true" : "false") << "," << cfg.seed << "," << cfg.trials
           << "," << cfg.prime << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert functions of (3,2)-point schemes and secant dimensions "
                 "of tangential Segre-Veronese surfaces, over a prime field"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    RunConfig cfg;
    app.add_option("--prime", cfg.prime, "field modulus (prime)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    app.add_option("--trials", cfg.trials, "Monte Carlo repetitions per cell")
        ->capture_default_str();
    app.add_option("--dmax", cfg.dmax, "degree bound for piecewise ideal checks")
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output path (default: stdout)");

    // secant-table
    auto* table_cmd = app.add_subcommand("secant-table", "defect table for all cells up to amax, bmax");
    int amax = 10, bmax = 10;
    table_cmd->add_option("--amax", amax, "largest a")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--bmax", bmax, "largest b")->check(CLI::PositiveNumber);

    // hf
    auto* hf_cmd = app.add_subcommand("hf", "linear-system report for a scheme spec");
    std::string scheme_path;
    int degree = -1;
    std::string bidegree;
    hf_cmd->add_option("--scheme", scheme_path, "path to SchemeSpec JSON")->required();
    hf_cmd->add_option("--degree", degree, "plane degree");
    hf_cmd->add_option("--bidegree", bidegree, "bidegree as a,b");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string subtarget;
    verify_cmd
        ->add_option("subtarget", subtarget,
                     "one of: b1 b2 small main transfer apolarity residue-example colon "
                     "degeneration collinear horace-step")
        ->required();
    int v_amax = 0, v_bmax = 0, v_count = 50;
    verify_cmd->add_option("--amax", v_amax, "range bound where applicable");
    verify_cmd->add_option("--bmax", v_bmax, "range bound where applicable");
    verify_cmd->add_option("--count", v_count, "instance count where applicable");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        svt::set_field_modulus(cfg.prime);
        std::ofstream file;
        std::ostream& os = open_output(cfg, file);

        if (*table_cmd) {
            if (bmax <= 0) bmax = amax;
            const auto table = svt::defect_table(amax, bmax, cfg.trials, cfg.seed);
            emit_table(table, cfg, os);
            for (const auto& r : table)
                if (r.defect != 0) return 2;
            return 0;
        }

        if (*hf_cmd) {
            std::ifstream in(scheme_path);
            if (!in) {
                std::cerr << "cannot read scheme file: " << scheme_path << "\n";
                return 1;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            svt::Rng rng(svt::derive_seed(cfg.seed, {0x5c4e}));
            const svt::SchemeSpec spec = svt::scheme_from_json(buf.str(), rng);
            svt::LinSysReport report;
            if (!bidegree.empty()) {
                int a = 0, b = 0;
                if (std::sscanf(bidegree.c_str(), "%d,%d", &a, &b) != 2 || a < 0 || b < 0) {
                    std::cerr << "--bidegree wants a,b\n";
                    return 1;
                }
                report = svt::linsys_dim(spec, a, b);
            } else if (degree >= 0) {
                report = svt::linsys_dim(spec, degree);
            } else {
                std::cerr << "one of --degree or --bidegree is required\n";
                return 1;
            }
            emit_report(report, cfg, os);
            return 0;
        }

        // verify
        bool pass = false;
        if (subtarget == "b1") {
            pass = svt::check_b1(v_amax > 0 ? v_amax : 30, cfg.trials, cfg.seed);
        } else if (subtarget == "b2") {
            pass = svt::check_b2(v_amax > 0 ? v_amax : 20, cfg.trials, cfg.seed);
        } else if (subtarget == "small") {
            pass = svt::check_small_cases(cfg.trials, cfg.seed);
        } else if (subtarget == "main") {
            const int am = v_amax > 0 ? v_amax : 10;
            pass = svt::check_main_plane(am, v_bmax > 0 ? v_bmax : am, cfg.trials, cfg.seed);
        } else if (subtarget == "transfer") {
            const int am = v_amax > 0 ? v_amax : 8;
            pass = true;
            for (int i = 0; i < v_count && pass; ++i) {
                svt::Rng rng(svt::derive_seed(cfg.seed, {0x7af, static_cast<std::uint64_t>(i)}));
                const int a = 1 + static_cast<int>(rng.u64() % am);
                const int b = 1 + static_cast<int>(rng.u64() % am);
                const int s2 = svt::critical_s(a, b).second;
                const int s = static_cast<int>(rng.u64() % (s2 + 1));
                pass = svt::verify_transfer(a, b, s, 1,
                                            svt::derive_seed(cfg.seed, {0x7a0, static_cast<std::uint64_t>(i)}));
            }
        } else if (subtarget == "apolarity") {
            pass = true;
            for (int a = 1; a <= 11 && pass; ++a)
                for (int b = 1; a + b <= 12 && b <= 11 && pass; ++b) {
                    if (a * b <= 1) continue;
                    pass = svt::verify_tangent_apolarity(a, b, std::max(cfg.trials, 5), cfg.seed);
                }
        } else if (subtarget == "residue-example") {
            pass = svt::verify_residue_example(cfg.dmax);
        } else if (subtarget == "colon") {
            pass = svt::verify_colon_identities(v_count > 0 ? v_count : 20, cfg.dmax, cfg.seed);
        } else if (subtarget == "degeneration") {
            pass = svt::verify_degeneration(10, cfg.dmax, cfg.seed);
        } else if (subtarget == "collinear") {
            pass = svt::verify_collinear_suite(cfg.trials, cfg.seed);
        } else if (subtarget == "horace-step") {
            pass = svt::verify_horace_step_suite(cfg.seed);
        } else {
            std::cerr << "unknown verify subtarget: " << subtarget << "\n";
            return 1;
        }
        emit_verdict(subtarget, pass, cfg, os);
        return pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
