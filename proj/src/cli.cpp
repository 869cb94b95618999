#include "ilab/cli.hpp"

#include "ilab/cone.hpp"
#include "ilab/dsl.hpp"
#include "ilab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#ifndef ILAB_SCENARIO_DIR
#define ILAB_SCENARIO_DIR "scenarios"
#endif

namespace ilab {

namespace fs = std::filesystem;

std::string default_scenario_dir() { return ILAB_SCENARIO_DIR; }

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError(path + ": error: cannot open file (file not found or unreadable)");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Job {
    std::string path;
    std::string label;
};

// Evaluates files concurrently; results come back in input order.
std::vector<ScenarioReport> run_jobs(const std::vector<Job>& jobs) {
    std::vector<std::future<ScenarioReport>> futures;
    for (const auto& j : jobs) {
        std::string text = read_file(j.path);
        futures.push_back(std::async(std::launch::async, [text = std::move(text), label = j.label]() {
            return check_text(text, label);
        }));
    }
    std::vector<ScenarioReport> reports;
    std::exception_ptr first;
    for (auto& f : futures) {
        try {
            reports.push_back(f.get());
        } catch (...) {
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
    return reports;
}

ClassExpr parse_class(const std::string& text, const SpaceModel& space) {
    return evaluate_expression(*parse_expression(text, "<argument>"), space);
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact intersection numbers, cones and scenario checks", "intersect-lab"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "md";
    std::string out_path;
    bool timing = false;
    app.add_option("--format", format, "Output format: md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");
    app.add_flag("--timing", timing, "Print wall time per scenario to stderr");

    std::vector<std::string> files;
    auto* check = app.add_subcommand("check", "Parse and evaluate scenario files");
    check->add_option("files", files, "Scenario files (.isl)")->required();

    std::string dir;
    auto* repro = app.add_subcommand("repro", "Evaluate the bundled scenario suite");
    repro->add_option("--dir", dir, "Scenario directory (default: $INTERSECT_LAB_SCENARIOS or the bundled suite)");

    std::string space_name;
    std::vector<std::string> rows, cols;
    auto* table = app.add_subcommand("table", "Print a pairing matrix");
    table->add_option("space", space_name)->required();
    table->add_option("--rows", rows)->delimiter(',')->required();
    table->add_option("--cols", cols)->delimiter(',')->required();

    std::string expr_text;
    auto* eval = app.add_subcommand("eval", "Integrate one class");
    eval->add_option("space", space_name)->required();
    eval->add_option("expr", expr_text)->required();

    auto* catalog = app.add_subcommand("catalog", "List the named classes of a space");
    catalog->add_option("space", space_name)->required();

    auto* spaces = app.add_subcommand("spaces", "List the built-in spaces");

    auto* cone = app.add_subcommand("cone", "Cone computations on class vectors");
    cone->require_subcommand(1);
    std::vector<std::string> gens;
    std::string query;
    auto* cdual = cone->add_subcommand("dual", "Rays of the dual cone");
    cdual->add_option("space", space_name)->required();
    cdual->add_option("generators", gens)->required();
    auto* cmember = cone->add_subcommand("member", "Membership with a certificate");
    cmember->add_option("space", space_name)->required();
    cmember->add_option("query", query)->required();
    cmember->add_option("generators", gens)->required();
    auto* cextremal = cone->add_subcommand("extremal", "Extremality of each generator");
    cextremal->add_option("space", space_name)->required();
    cextremal->add_option("generators", gens)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "intersect-lab: " << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const std::string& text) -> int {
        if (out_path.empty()) {
            out << text;
            return 0;
        }
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << out_path << ": error: cannot write output file\n";
            return 2;
        }
        f << text;
        return 0;
    };

    try {
        Format fmt = parse_format(format);

        if (check->parsed() || repro->parsed()) {
            std::vector<Job> jobs;
            if (check->parsed()) {
                for (const auto& f : files) jobs.push_back({f, f});
            } else {
                if (dir.empty()) {
                    const char* env = std::getenv("INTERSECT_LAB_SCENARIOS");
                    dir = env && *env ? env : default_scenario_dir();
                }
                if (!fs::is_directory(dir)) throw UsageError(dir + ": error: scenario directory not found");
                std::vector<std::string> names;
                for (const auto& e : fs::directory_iterator(dir))
                    if (e.is_regular_file() && e.path().extension() == ".isl")
                        names.push_back(e.path().filename().string());
                std::sort(names.begin(), names.end());
                if (names.empty()) throw UsageError(dir + ": error: no .isl scenarios found");
                for (const auto& n : names) jobs.push_back({(fs::path(dir) / n).string(), n});
            }
            auto reports = run_jobs(jobs);
            if (timing)
                for (const auto& r : reports) err << r.scenario << ": " << r.wall_seconds << " s\n";
            int code = emit(emit_reports(reports, fmt));
            if (code) return code;
            for (const auto& r : reports)
                if (r.failed()) return 1;
            return 0;
        }

        if (spaces->parsed()) {
            std::string s;
            for (const auto& n : builtin_space_names()) s += n + "\n";
            return emit(s);
        }

        const SpaceModel& space = builtin_space(space_name);

        if (eval->parsed()) {
            Rational v = integrate(*space.algebra, parse_class(expr_text, space));
            if (fmt == Format::Json) {
                nlohmann::ordered_json j{{"space", space.name}, {"expr", expr_text}, {"value", v.fraction_str()}};
                return emit(j.dump(2) + "\n");
            }
            if (fmt == Format::Csv) return emit("space,expr,value\n" + space.name + ",\"" + expr_text + "\"," + v.str() + "\n");
            return emit(v.str() + "\n");
        }

        if (table->parsed()) {
            std::vector<ClassExpr> r, c;
            for (const auto& x : rows) r.push_back(parse_class(x, space));
            for (const auto& x : cols) c.push_back(parse_class(x, space));
            return emit(emit_table({space.name, rows, cols, pairing_matrix(*space.algebra, r, c)}, fmt));
        }

        if (catalog->parsed()) {
            if (fmt == Format::Json) {
                nlohmann::ordered_json j;
                j["space"] = space.name;
                j["engine"] = std::string(engine_name(space.engine));
                j["classes"] = nlohmann::ordered_json::array();
                for (const auto& e : space.catalog)
                    j["classes"].push_back(
                        {{"name", e.name}, {"degree", e.degree}, {"expression", e.expr.str()}, {"reference", e.reference}});
                j["constants"] = nlohmann::ordered_json::object();
                for (const auto& [k, v] : space.constants) j["constants"][k] = v.fraction_str();
                return emit(j.dump(2) + "\n");
            }
            std::ostringstream os;
            if (fmt == Format::Csv) {
                os << "name,degree,expression,reference\n";
                for (const auto& e : space.catalog)
                    os << e.name << "," << e.degree << ",\"" << e.expr.str() << "\",\"" << e.reference << "\"\n";
            } else {
                os << "## " << space.name << " (" << engine_name(space.engine) << ")\n\n";
                os << "| name | degree | expression | reference |\n|---|---:|---|---|\n";
                for (const auto& e : space.catalog)
                    os << "| " << e.name << " | " << e.degree << " | `" << e.expr.str() << "` | " << e.reference << " |\n";
                for (const auto& [k, v] : space.constants) os << "\n- " << k << " = " << v.str();
                if (!space.constants.empty()) os << "\n";
            }
            return emit(os.str());
        }

        if (cone->parsed()) {
            std::vector<RationalVector> vecs;
            for (const auto& g : gens) vecs.push_back(cone_coordinates(parse_class(g, space), space));
            std::size_t dim = vecs.empty() ? 0 : vecs.front().size();
            std::ostringstream os;
            nlohmann::ordered_json j;
            if (cdual->parsed()) {
                Cone d = dual_cone(Cone::from_vectors(dim, vecs));
                j["dual"] = nlohmann::ordered_json::array();
                for (const auto& r : d.rays()) j["dual"].push_back(r.str());
                os << "dual rays: " << d.str() << "\n";
            } else if (cmember->parsed()) {
                RationalVector v = cone_coordinates(parse_class(query, space), space);
                auto cert = membership(vecs, v);
                j["inside"] = cert.inside;
                if (cert.inside) {
                    j["coefficients"] = nlohmann::ordered_json::array();
                    for (const auto& x : cert.coefficients) j["coefficients"].push_back(x.fraction_str());
                    os << "inside, coefficients " << to_string(cert.coefficients) << "\n";
                } else {
                    j["separator"] = nlohmann::ordered_json::array();
                    for (const auto& x : cert.separator) j["separator"].push_back(x.fraction_str());
                    os << "outside, separator " << to_string(cert.separator) << "\n";
                }
            } else {
                j["extremal"] = nlohmann::ordered_json::array();
                for (std::size_t i = 0; i < vecs.size(); ++i) {
                    bool ex = is_extremal_generator(vecs, i).extremal;
                    j["extremal"].push_back({{"generator", gens[i]}, {"extremal", ex}});
                    os << gens[i] << ": " << bool_word(ex) << "\n";
                }
            }
            return emit(fmt == Format::Json ? j.dump(2) + "\n" : os.str());
        }
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace ilab
