#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cliffq/cli_ops.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int finish(const cliffq::cli::CliResult& result, const std::string& out_path) {
    if (!result.err.empty()) std::cerr << result.err;
    if (!result.out.empty()) {
        if (out_path.empty()) {
            std::cout << result.out;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "{\"error\":{\"kind\":\"io\",\"detail\":\"cannot write '" << out_path
                          << "'\"}}\n";
                return 2;
            }
            out << result.out;
        }
    }
    return result.code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Clifford algebra toolkit: tables, rigid motions, boosts, "
                 "matrix representations and inverses over the rationals"};
    app.require_subcommand(1);

    bool approx = false;
    double tol = 1e-12;
    std::string out_path;
    app.add_flag("--approx", approx, "use floating-point scalars instead of exact rationals");
    app.add_option("--tol", tol, "absolute comparison tolerance in approximate mode");
    app.add_option("-o,--output", out_path, "write the report here instead of stdout");

    std::string signature = "Cl(0,3)";
    std::string format = "csv";
    std::string target;
    std::string scene_path, events_path, input_path;
    std::string beta;

    CLI::App* table = app.add_subcommand("table", "emit the full Cayley table of a signature");
    table->add_option("--signature", signature, "algebra, e.g. Cl(0,2)")->required();
    table->add_option("--format", format, "csv or json");

    CLI::App* census = app.add_subcommand("census", "count basis blades squaring to +1 and -1");
    census->add_option("--signature", signature)->required();

    CLI::App* rep = app.add_subcommand("rep", "emit a catalogue matrix representation with its "
                                              "homomorphism verification");
    rep->add_option("--signature", signature)->required();
    rep->add_option("--target", target, "real-2, real-4, complex-2, quaternion-1 or quaternion-2")
        ->required();

    CLI::App* rotate = app.add_subcommand("rotate", "recover the rigid motion of a three-point scene");
    rotate->add_option("--scene", scene_path, "scene JSON file")->required();

    CLI::App* boost = app.add_subcommand("boost", "apply a velocity boost to a list of events");
    boost->add_option("--events", events_path, "events JSON file")->required();
    boost->add_option("--beta", beta, "velocity in units of c, e.g. 3/5,0,0")->required();

    CLI::App* invert = app.add_subcommand("invert", "invert a Cl(1,3) multivector or classify why "
                                                    "it is singular");
    invert->add_option("--input", input_path, "multivector JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "{\"error\":{\"kind\":\"usage\",\"detail\":\"" << e.what() << "\"}}\n";
        return 2;
    }

    try {
        if (table->parsed()) return finish(cliffq::cli::run_table(signature, format), out_path);
        if (census->parsed()) return finish(cliffq::cli::run_census(signature), out_path);
        if (rep->parsed()) return finish(cliffq::cli::run_rep(signature, target), out_path);
        if (rotate->parsed())
            return finish(cliffq::cli::run_rotate(read_file(scene_path), approx, tol), out_path);
        if (boost->parsed())
            return finish(cliffq::cli::run_boost(read_file(events_path), beta, approx, tol), out_path);
        if (invert->parsed()) return finish(cliffq::cli::run_invert(read_file(input_path)), out_path);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":{\"kind\":\"usage\",\"detail\":\"" << e.what() << "\"}}\n";
        return 2;
    }
    return 2;
}
