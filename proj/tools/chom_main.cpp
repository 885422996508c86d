#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chom/errors.hpp"
#include "chom/parallel.hpp"
#include "chom/workbench.hpp"

namespace {

struct Cli {
    std::string algebra_file;
    int max_degree = -1;  // -1 = document / default
    int max_weight = -1;
    int jobs = 0;  // 0 = available parallelism
    std::string format = "json";
    std::string variant = "negative";
    int ext_max = 10;
};

void add_common(CLI::App* cmd, Cli& cli, bool algebra_required) {
    auto* a = cmd->add_option("--algebra", cli.algebra_file, "algebra presentation file (JSON)");
    if (algebra_required) a->required();
    cmd->add_option("--max-degree", cli.max_degree, "homological degree cap n_max");
    cmd->add_option("--max-weight", cli.max_weight, "weight cap W");
    cmd->add_option("--jobs", cli.jobs, "worker threads (default: available parallelism)");
    cmd->add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"json", "markdown"}));
}

int error_record(const std::string& type, const std::string& message) {
    nlohmann::ordered_json err{{"error", {{"type", type}, {"message", message}}}};
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << message << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational workbench for Hochschild, cyclic and de Rham invariants of "
                 "weight-graded commutative Q-algebras"};
    app.require_subcommand(1);
    Cli cli;

    for (const char* name : {"hh", "derham", "hkr-check", "derived-hkr-check", "b-suite"})
        add_common(app.add_subcommand(name), cli, true);
    auto* cyclic = app.add_subcommand("cyclic");
    add_common(cyclic, cli, true);
    cyclic->add_option("--variant", cli.variant, "totalization variant")
        ->check(CLI::IsMember({"negative", "periodic"}));
    auto* extku = app.add_subcommand("ext-ku");
    add_common(extku, cli, false);
    extku->add_option("--max", cli.ext_max, "report degrees 0 down to -max");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    std::string command = app.get_subcommands().front()->get_name();

    try {
        chom::AlgebraDocument doc;
        if (!cli.algebra_file.empty()) {
            std::ifstream in(cli.algebra_file);
            if (!in) return error_record("io", "cannot open " + cli.algebra_file);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                return error_record("json", e.what());
            }
            doc = chom::load_algebra(j);
        }
        if (cli.max_degree >= 0) doc.n_max = cli.max_degree;
        if (cli.max_weight >= 0) doc.W = cli.max_weight;

        chom::RunOptions opt;
        opt.jobs = cli.jobs > 0 ? cli.jobs : chom::default_jobs();
        opt.variant = cli.variant;
        opt.ext_max = cli.ext_max;

        chom::RunResult res = chom::run(command, doc, opt);
        if (cli.format == "markdown")
            std::cout << chom::render_markdown(res.output);
        else
            std::cout << res.output.dump(2) << "\n";
        return res.exit_code;
    } catch (const chom::SyntaxError& e) {
        return error_record("syntax", e.what());
    } catch (const chom::UnknownVariable& e) {
        return error_record("unknown-variable", e.what());
    } catch (const chom::Error& e) {
        return error_record("input", e.what());
    }
}
