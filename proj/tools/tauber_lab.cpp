// tauber_lab: CLI harness over the library. One subcommand per verification;
// tables go to --out (or stdout) as CSV or JSON. Exit status is nonzero only
// when an asserted identity fails or on I/O problems; audit commands report
// and always exit 0.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tauber/harness.hpp"

namespace {

tauber::Range parse_range(const std::string& text) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
        throw CLI::ValidationError("range", "expected lo:hi:step, got '" + text + "'");
    return {lo, hi, step};
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

int emit(const tauber::Table& table, const tauber::RunConfig& cfg) {
    std::string payload = cfg.format == tauber::OutputFormat::csv
                              ? table.to_csv()
                              : table.to_json().dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << cfg.out << " for writing\n";
            return 2;
        }
        f << payload;
        if (!f) {
            std::cerr << "error: write failed for " << cfg.out << "\n";
            return 2;
        }
    }
    if (table.asserted && !table.ok) {
        std::cerr << table.name << ": asserted check FAILED (see summary rows)\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tauber_lab: numerical checks for the BV/Laplace route to the PNT"};
    app.require_subcommand(1);

    tauber::RunConfig cfg;
    std::string sigma_spec, t_spec, x_spec, alpha_spec, format_spec = "csv",
                fixture_spec = "von-mangoldt";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", cfg.alpha, "damping exponent alpha");
        cmd->add_option("--nmax", cfg.nmax, "sieve/truncation bound (<= 1e8)");
        cmd->add_option("--sigma-range", sigma_spec, "sigma grid as lo:hi:step");
        cmd->add_option("--t-range", t_spec, "imaginary-part grid as lo:hi:step");
        cmd->add_option("--x-list", x_spec, "comma-separated x values");
        cmd->add_option("--alpha-list", alpha_spec, "comma-separated alpha values");
        cmd->add_option("--seed", cfg.seed, "RNG seed");
        cmd->add_option("--tol", cfg.tol, "tolerance (0 = command default)");
        cmd->add_option("--format", format_spec, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", cfg.out, "output path (default stdout)");
        cmd->add_option("--fixture", fixture_spec,
                        "single-jump, von-mangoldt, const-one, or zero")
            ->check(CLI::IsMember({"single-jump", "von-mangoldt", "const-one", "zero"}));
    };

    CLI::App* pnt = app.add_subcommand("pnt-table", "psi(x) and psi(x)/x over an x grid");
    CLI::App* taub = app.add_subcommand("tauberian-check",
                                        "L*_rho(s) against s*L_rho(s) over an s grid");
    CLI::App* diri = app.add_subcommand("dirichlet-zeta",
                                        "Lambda partial sums against -zeta'/zeta");
    CLI::App* tvg = app.add_subcommand("tv-growth",
                                       "total variation growth per alpha and X");
    CLI::App* resi = app.add_subcommand("residue", "contour residue probes of the PNT chain");
    CLI::App* th2 = app.add_subcommand("theorem2-demo",
                                       "f(x) against the predicted Res * x^{alpha+beta}");
    CLI::App* lem = app.add_subcommand("lemma-audit",
                                       "both sides of the TV bound, reported only");
    for (CLI::App* cmd : {pnt, taub, diri, tvg, resi, th2, lem}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!sigma_spec.empty()) cfg.sigma_range = parse_range(sigma_spec);
        if (!t_spec.empty()) cfg.t_range = parse_range(t_spec);
        if (!x_spec.empty()) cfg.x_list = parse_list(x_spec);
        if (!alpha_spec.empty()) cfg.alpha_list = parse_list(alpha_spec);
        cfg.format = format_spec == "json" ? tauber::OutputFormat::json
                                           : tauber::OutputFormat::csv;
        if (fixture_spec == "single-jump") cfg.fixture = tauber::Fixture::single_jump;
        else if (fixture_spec == "const-one") cfg.fixture = tauber::Fixture::const_one;
        else if (fixture_spec == "zero") cfg.fixture = tauber::Fixture::zero;
        else cfg.fixture = tauber::Fixture::von_mangoldt;

        tauber::Table table;
        if (pnt->parsed()) table = tauber::cmd_pnt_table(cfg);
        else if (taub->parsed()) table = tauber::cmd_tauberian_check(cfg);
        else if (diri->parsed()) table = tauber::cmd_dirichlet_zeta(cfg);
        else if (tvg->parsed()) table = tauber::cmd_tv_growth(cfg);
        else if (resi->parsed()) table = tauber::cmd_residue(cfg);
        else if (th2->parsed()) table = tauber::cmd_theorem2_demo(cfg);
        else table = tauber::cmd_lemma_audit(cfg);
        return emit(table, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
