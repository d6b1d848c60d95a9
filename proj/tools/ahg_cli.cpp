#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ahg/report.hpp"

namespace {

std::vector<double> parse_t_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

void add_common(CLI::App* sub, ahg::RunConfig& cfg, std::string& tlist) {
    sub->add_option("--manifold", cfg.manifold, "catalog manifold name");
    sub->add_option("--spec", cfg.spec_file, "manifold spec JSON file");
    sub->add_option("--points", cfg.points, "number of sample points");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--t", tlist, "comma-separated connection parameters");
    sub->add_option("--tol-abs", cfg.tol_abs, "absolute tolerance");
    sub->add_option("--tol-rel", cfg.tol_rel, "relative tolerance");
    sub->add_option("--class-tol", cfg.class_tol, "classification threshold");
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"almost Hermitian curvature identity engine"};
    app.require_subcommand(1);

    ahg::RunConfig cfg;
    std::string tlist;
    std::string integrand;

    CLI::App* list = app.add_subcommand("list", "catalog summary");
    CLI::App* verify = app.add_subcommand("verify", "run the pointwise identity suite");
    add_common(verify, cfg, tlist);
    CLI::App* scalars = app.add_subcommand("scalars", "scalar curvature tables");
    add_common(scalars, cfg, tlist);
    CLI::App* integrate = app.add_subcommand("integrate", "integral estimates");
    add_common(integrate, cfg, tlist);
    integrate
        ->add_option("integrand", integrand,
                     "thm2.1|thm2.3|thm5.1|thm5.2|thm5.4|thm5.5|thm5.8|kgauduchon:k=K|volume|"
                     "expression over reported scalars")
        ->required();
    CLI::App* classify = app.add_subcommand("classify", "Gray-Hervella class label");
    add_common(classify, cfg, tlist);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!tlist.empty()) cfg.t_values = parse_t_list(tlist);
        if (list->parsed()) return ahg::cmd_list(std::cout);
        if (verify->parsed()) return ahg::cmd_verify(cfg);
        if (scalars->parsed()) return ahg::cmd_scalars(cfg);
        if (integrate->parsed()) return ahg::cmd_integrate(cfg, integrand);
        if (classify->parsed()) return ahg::cmd_classify(cfg);
    } catch (const ahg::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ahg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
