#include "harm/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "harm/errors.hpp"
#include "harm/ingest.hpp"
#include "harm/network_metrics.hpp"
#include "harm/paths.hpp"
#include "harm/report.hpp"

namespace harm {

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

/// Flag beats HARM_PATH_CAP beats the built-in default.
std::size_t resolve_path_cap(const std::optional<std::size_t>& flag) {
    if (flag) return *flag;
    const char* env = std::getenv("HARM_PATH_CAP");
    if (env == nullptr) return kDefaultPathCap;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || parsed == 0)
        throw std::invalid_argument("HARM_PATH_CAP must be a positive integer, got \"" +
                                    std::string(env) + "\"");
    return static_cast<std::size_t>(parsed);
}

std::string path_line(const AttackPath& path) {
    std::ostringstream os;
    os << path.index << ": (";
    for (std::size_t i = 0; i < path.hosts.size(); ++i) os << (i > 0 ? ", " : "") << path.hosts[i];
    os << ")";
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-layer HARM security metrics for declarative network descriptions"};
    app.name("harm");
    app.require_subcommand(1);

    std::string validate_file;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Parse a network file and report invariant violations");
    validate_cmd->add_option("file", validate_file, "network description file")->required();

    std::string paths_file;
    std::optional<std::size_t> paths_cap;
    CLI::App* paths_cmd =
        app.add_subcommand("paths", "Enumerate attack paths from the attacker to the target");
    paths_cmd->add_option("file", paths_file, "network description file")->required();
    paths_cmd->add_option("--path-cap", paths_cap, "abort when more than this many paths exist");

    std::string analyze_file;
    std::string metrics_csv = "all";
    std::optional<int> ncp_path;
    std::string format = "text";
    std::optional<std::size_t> analyze_cap;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Compute metrics and render a report");
    analyze_cmd->add_option("file", analyze_file, "network description file")->required();
    analyze_cmd->add_option("--metrics", metrics_csv,
                            "comma-separated metric ids, or \"all\" (default)");
    analyze_cmd->add_option("--ncp-path", ncp_path, "exploited path index for ncp (1-based)");
    analyze_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--path-cap", analyze_cap, "abort when more than this many paths exist");

    std::vector<const char*> argv;
    argv.push_back("harm");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& error) {
        err << error.what() << "\n";
        return 1;
    }

    try {
        if (validate_cmd->parsed()) {
            NetworkModel model = load_network_file(validate_file);
            out << "ok: " << model.hosts.size() << " hosts, " << model.graph.edges.size()
                << " edges\n";
            return 0;
        }

        if (paths_cmd->parsed()) {
            NetworkModel model = load_network_file(paths_file);
            PathSet paths = enumerate_paths(model, resolve_path_cap(paths_cap));
            for (const AttackPath& path : paths.paths) out << path_line(path) << "\n";
            return 0;
        }

        NetworkModel model = load_network_file(analyze_file);
        ReportOptions options;
        options.metrics = split_csv(metrics_csv);
        options.ncp_path = ncp_path;
        options.path_cap = resolve_path_cap(analyze_cap);
        MetricReport report = build_report(model, options);
        out << render_report(report, format == "json" ? OutputFormat::Json : OutputFormat::Text);
        return 0;
    } catch (const IoError& error) {
        err << error.what() << "\n";
        return 1;
    } catch (const ParseError& error) {
        err << "invalid network description:\n" << error.what() << "\n";
        return 2;
    } catch (const UnreachableTargetError& error) {
        err << error.what() << "\n";
        return 3;
    } catch (const PathCapExceededError& error) {
        err << error.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& error) {
        err << error.what() << "\n";
        return 1;
    } catch (const std::out_of_range& error) {
        err << error.what() << "\n";
        return 1;
    }
}

}  // namespace harm
