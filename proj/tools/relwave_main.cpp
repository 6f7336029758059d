#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relwave/scenario.hpp"
#include "relwave/version.hpp"

namespace fs = std::filesystem;
using namespace relwave;

namespace {

// Exit codes are a stable contract:
//   0 success, 1 usage/validation, 2 numerical/domain, 3 I/O.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

PhysicalConstants constants_for(const std::string& profile) {
    return profile == "natural" ? PhysicalConstants::natural() : PhysicalConstants::si();
}

scenario::OutputFormat format_for(const std::string& name) {
    return name == "json" ? scenario::OutputFormat::json : scenario::OutputFormat::csv;
}

int run_one(const std::string& path, const std::string& format, const std::string& out,
            const std::string& profile) {
    const auto s = scenario::parse_scenario(path);
    const auto table = scenario::run_scenario(s, constants_for(profile));
    std::string target = !out.empty() ? out : s.output_path;
    if (target.empty()) {
        std::cout << scenario::render(table, format_for(format));
    } else {
        scenario::emit(table, format_for(format), target);
        std::cout << path << " -> " << target << "\n";
    }
    return kExitOk;
}

int validate_one(const std::string& path, const std::string& profile) {
    const auto s = scenario::parse_scenario(path);
    scenario::validate_scenario(s, constants_for(profile));
    std::cout << path << ": ok (kind=" << s.kind << ")\n";
    return kExitOk;
}

int list_kinds() {
    for (const auto& kind : scenario::known_kinds()) {
        const auto spec = scenario::kind_spec(kind);
        std::cout << kind << "\n  required:";
        for (const auto& key : spec.required) std::cout << ' ' << key;
        std::cout << "\n  optional:";
        for (const auto& key : spec.optional) std::cout << ' ' << key;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_suite(const std::string& dir, const std::string& out_dir,
              const std::string& format, const std::string& profile) {
    if (!fs::is_directory(dir)) throw IoError("scenario directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".scn")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no .scn files in " + dir);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + out_dir);

    const std::string ext = format == "json" ? ".json" : ".csv";
    const auto constants = constants_for(profile);
    for (const auto& file : files) {
        const auto s = scenario::parse_scenario(file.string());
        const auto table = scenario::run_scenario(s, constants);
        const auto target = fs::path(out_dir) / (file.stem().string() + ext);
        scenario::emit(table, format_for(format), target.string());
        std::cout << file.stem().string() << ": ok\n";
    }
    std::cout << files.size() << " scenarios -> " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    // Constants come only from --constants so runs stay reproducible; an
    // environment override is refused rather than silently honored.
    if (std::getenv("RELWAVE_CONSTANTS") != nullptr) {
        std::cerr << "error: RELWAVE_CONSTANTS is not honored; use --constants=si|natural\n";
        return kExitUsage;
    }

    CLI::App app{std::string("relwave ") + version +
                 " - deterministic relativity and vacuum-lattice scenario runner"};
    app.require_subcommand(1);

    std::string path, format = "csv", out, profile = "si";
    std::string dir = "scenarios/paper", suite_out = "paper_out";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--constants", profile, "Constants profile")
            ->check(CLI::IsMember({"si", "natural"}));
    };

    auto* cmd_run = app.add_subcommand("run", "Run one scenario file");
    cmd_run->add_option("file", path, "Scenario file")->required();
    cmd_run->add_option("--out", out, "Output path (default: 'out' key or stdout)");
    add_common(cmd_run);

    auto* cmd_validate = app.add_subcommand("validate", "Parse and validate a scenario");
    cmd_validate->add_option("file", path, "Scenario file")->required();
    cmd_validate->add_option("--constants", profile, "Constants profile")
        ->check(CLI::IsMember({"si", "natural"}));

    auto* cmd_kinds =
        app.add_subcommand("list-kinds", "List scenario kinds and their parameters");

    auto* cmd_suite =
        app.add_subcommand("paper-suite", "Run every bundled scenario in a directory");
    cmd_suite->add_option("--dir", dir, "Scenario directory");
    cmd_suite->add_option("--out", suite_out, "Output directory");
    add_common(cmd_suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_run->parsed()) return run_one(path, format, out, profile);
        if (cmd_validate->parsed()) return validate_one(path, profile);
        if (cmd_kinds->parsed()) return list_kinds();
        if (cmd_suite->parsed()) return run_suite(dir, suite_out, format, profile);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
