#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fluxqm/cli/commands.hpp"
#include "fluxqm/errors.hpp"

int main(int argc, char** argv) {
    using namespace fluxqm;

    CLI::App app{"Exactly solvable flux-matter models: spectra, phase scans and oracle checks"};
    std::string command, config_path, out_path = "-", format = "csv";
    std::vector<std::string> overrides;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    std::vector<std::string> names(cli::command_names().begin(), cli::command_names().end());
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
    app.add_option("--config", config_path, "Flat key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--set", overrides, "Override a configuration key (key=value)")->take_all();
    app.add_option("--out", out_path, "Output path, '-' for stdout");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cli::RunConfig config = config_path.empty() ? cli::RunConfig{} : cli::RunConfig::load(config_path);
        for (const auto& o : overrides) config.set(o);
        const auto result = cli::run_command(command, config, jobs);
        const std::string text = format == "json" ? cli::to_json(result.table) : cli::to_csv(result.table);
        if (out_path == "-") {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw UsageError("cannot write " + out_path);
            out << text;
            if (!out) throw Error("write failed: " + out_path);
        }
        if (result.failed_points > 0) {
            std::cerr << "fluxqm: " << result.failed_points << " scan point(s) failed; see status column\n";
        }
        return cli::exit_status(result);
    } catch (const UsageError& e) {
        std::cerr << "fluxqm: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "fluxqm: " << e.what() << "\n";
        return 1;
    }
}
