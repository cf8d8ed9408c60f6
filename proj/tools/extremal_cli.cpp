// Command-line front end: constructions, measures, shifting, shadows,
// registry sweeps and extremal search, with JSON/CSV/text reports.

#include "extremal/constructions.hpp"
#include "extremal/family_io.hpp"
#include "extremal/measures.hpp"
#include "extremal/order.hpp"
#include "extremal/report.hpp"
#include "extremal/shifting.hpp"
#include "extremal/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace extremal;

namespace {

/// Bad invocation or input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    unsigned threads = 0;
    std::string format = "json";
    std::uint64_t budget = 0;
};

std::map<std::string, std::string> key_values(const std::vector<std::string> & tokens)
{
    std::map<std::string, std::string> out;
    for (const auto & t : tokens) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + t + "'");
        out[t.substr(0, eq)] = t.substr(eq + 1);
    }
    return out;
}

int to_int(const std::map<std::string, std::string> & kv, const std::string & key)
{
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("missing " + key + "=");
    try {
        std::size_t used = 0;
        const int v = std::stoi(it->second, &used);
        if (used == it->second.size()) return v;
    }
    catch (const std::exception &) {
    }
    throw UsageError(key + " must be an integer");
}

std::vector<int> int_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            out.push_back(std::stoi(item));
        }
        catch (const std::exception &) {
            throw UsageError("bad integer '" + item + "' in parameter list");
        }
    }
    return out;
}

void emit(const std::string & text, const std::string & path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (! out) throw UsageError("cannot write " + path);
    out << text;
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

/// Renders a report in the requested format. Sweeps get one row per grid
/// point in CSV and text; everything else is key/value rows.
std::string render(const Json & doc, const std::string & format)
{
    if (format == "json") return doc.dump(2) + "\n";
    std::ostringstream out;
    const bool table = doc.contains("grid") && doc["grid"].is_array();
    if (format == "csv") {
        if (table) {
            out << "point,pass,vacuous,fail,equality\n";
            for (const auto & row : doc["grid"]) {
                std::string point;
                for (const auto & [k, v] : row["point"].items())
                    point += (point.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
                out << csv_field(point) << ',' << row["pass"] << ',' << row["vacuous"] << ',' << row["fail"] << ','
                    << row["equality"] << '\n';
            }
            out << "total," << doc["totals"]["pass"] << ',' << doc["totals"]["vacuous"] << ','
                << doc["totals"]["fail"] << ',' << doc["totals"]["equality"] << '\n';
        }
        else {
            out << "key,value\n";
            for (const auto & [k, v] : summary_rows(doc)) out << csv_field(k) << ',' << csv_field(v) << '\n';
        }
        return out.str();
    }
    for (const auto & [k, v] : summary_rows(doc)) out << k << ": " << v << '\n';
    if (table) {
        out << "\n  pass  vacuous  fail  equality  point\n";
        for (const auto & row : doc["grid"]) {
            std::string point;
            for (const auto & [k, v] : row["point"].items())
                point += (point.empty() ? "" : ",") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
            char line[128];
            std::snprintf(line, sizeof line, "%6s %8s %5s %9s  ", row["pass"].dump().c_str(),
                          row["vacuous"].dump().c_str(), row["fail"].dump().c_str(), row["equality"].dump().c_str());
            out << line << point << '\n';
        }
    }
    if (doc.contains("witnesses"))
        for (const auto & w : doc["witnesses"])
            out << "FAIL " << w["detail"].get<std::string>() << " at " << w["instance"]["params"].dump() << '\n';
    return out.str();
}

std::string profile_summary(const SetFamily & f)
{
    std::ostringstream out;
    out << "size " << f.size() << ", " << to_json(measure_profile(f)).dump();
    return out.str();
}

int run_outcome(const RunConfig & config, const Globals & g)
{
    const Outcome outcome = execute(config, g.threads);
    emit(render(report_document(outcome, config), config.format), config.output);
    if (outcome.exit_code == 1) std::cerr << "FAIL found; witnesses are in the report\n";
    return outcome.exit_code;
}

std::uint64_t resolved_budget(const Globals & g) { return g.budget ? g.budget : default_budget(); }

// --- subcommands ------------------------------------------------------------

int cmd_construct(const std::string & id, const std::string & params, const std::string & out_path)
{
    const NamedFamily named = construct(id, params.empty() ? std::vector<int>{} : int_list(params));
    const std::size_t count = named.families.size();
    for (std::size_t i = 0; i < count; ++i) {
        const SetFamily & f = named.families[i];
        std::string path = out_path;
        if (! out_path.empty() && count > 1) {
            std::filesystem::path p(out_path);
            path = (p.parent_path() / (p.stem().string() + "-" + std::to_string(i) + p.extension().string())).string();
        }
        if (path.empty()) {
            if (count > 1) std::cout << "# family " << i << "\n";
            std::cout << "# " << profile_summary(f) << "\n";
            write_family(std::cout, f);
        }
        else {
            write_family_file(path, f);
            std::cout << path << ": " << profile_summary(f) << "\n";
        }
    }
    return 0;
}

int cmd_measure(const std::string & path, const Globals & g, const std::string & out_path)
{
    std::ifstream in(path);
    if (! in) throw UsageError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    SetFamily f = text.find_first_not_of(" \t\r\n") == std::string::npos ? SetFamily(0, 0, {}) : from_text(text);
    if (f.empty()) std::cerr << "warning: " << path << " holds an empty family\n";
    Json doc = {{"file", path}, {"n", f.ground_size()}, {"k", f.uniformity()}, {"size", f.size()}};
    const Json profile = to_json(measure_profile(f));
    for (const auto & [k, v] : profile.items()) doc[k] = v;
    emit(render(doc, g.format), out_path);
    return 0;
}

int cmd_shift(const std::vector<std::string> & files, const std::string & prop_text, const std::string & out_dir,
              const Globals & g)
{
    std::vector<SetFamily> families;
    for (const auto & f : files) families.push_back(read_family_file(f));
    const PropertySpec prop = PropertySpec::parse(prop_text);
    if (! prop.holds(families)) throw UsageError("the input does not satisfy '" + prop.str() + "'");
    const ShiftResult r = shift_ad_extremis(families, prop);
    Json shifted = Json::array();
    for (const auto & f : r.families) shifted.push_back(to_json(f));
    Json doc = {{"property", prop.str()}, {"families", shifted}, {"trace", to_json(r.trace)}};
    if (out_dir.empty()) {
        if (g.format == "json") {
            emit(render(doc, g.format), "");
            return 0;
        }
        std::ostringstream out;
        out << "# property " << prop.str() << ", " << r.trace.passes << " passes, " << r.trace.total_steps
            << " effective shifts\n";
        for (const auto & p : r.trace.resistant) out << "# resistant pair (" << p.i << "," << p.j << ")\n";
        for (std::size_t i = 0; i < r.families.size(); ++i) {
            out << "# family " << i << ": " << profile_summary(r.families[i]) << "\n";
            out << to_text(r.families[i]);
        }
        emit(out.str(), "");
        return 0;
    }
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < r.families.size(); ++i) {
        const auto path = (std::filesystem::path(out_dir) / ("shifted-" + std::to_string(i) + ".txt")).string();
        write_family_file(path, r.families[i]);
        std::cout << path << "\n";
    }
    emit(to_json(r.trace).dump(2) + "\n", (std::filesystem::path(out_dir) / "trace.json").string());
    std::cout << (std::filesystem::path(out_dir) / "trace.json").string() << "\n";
    for (const auto & p : r.trace.resistant) std::cout << "resistant pair (" << p.i << "," << p.j << ")\n";
    return 0;
}

int cmd_lex(const std::map<std::string, std::string> & kv, const std::string & out_path)
{
    const LexSegment seg = lex_segment(to_int(kv, "n"), to_int(kv, "k"), static_cast<std::uint64_t>(to_int(kv, "m")));
    emit(to_text(seg.members), out_path);
    return 0;
}

int cmd_shadow(const std::string & path, int level, const std::string & out_path)
{
    const SetFamily f = read_family_file(path);
    const SetFamily s = shadow(f, level);
    std::ostringstream text;
    text << "# |F| = " << f.size() << ", |shadow_" << level << "| = " << s.size()
         << ", smallest possible = " << kk_min_shadow(f.ground_size(), f.uniformity(), f.size(), level) << "\n"
         << to_text(s);
    emit(text.str(), out_path);
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact tools for uniform set families: constructions, measures, shifting and statement checks"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    Globals g;
    std::string rerun, out_path;
    app.add_option("--threads", g.threads, "Worker threads for sampling (default: all cores)");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--budget", g.budget, "Evaluation budget (default: EXTREMAL_BUDGET or 10^8)");
    app.add_option("--rerun", rerun, "Re-run the configuration embedded in a report and compare");
    app.add_option("--out", out_path, "Output file (default: stdout)");

    auto * construct = app.add_subcommand("construct", "Build a named family and write it in family-file format");
    std::string c_id, c_params;
    construct->add_option("--id", c_id, "Construction id")->required();
    construct->add_option("--params", c_params, "Comma-separated integer parameters");
    construct->add_option("--out", out_path, "Family file to write");

    auto * measure = app.add_subcommand("measure", "rho, tau_t, nu, t_j and initiality of a family file");
    std::string m_file;
    measure->add_option("file", m_file)->required();
    measure->add_option("--out", out_path);

    auto * shift_cmd = app.add_subcommand("shift", "Shift a family tuple ad extremis under a property");
    std::vector<std::string> s_files;
    std::string s_prop = "true", s_dir;
    shift_cmd->add_option("files", s_files)->required();
    shift_cmd->add_option("--prop", s_prop, "Property to preserve");
    shift_cmd->add_option("--out", s_dir, "Directory for shifted families and trace.json");

    auto * lex = app.add_subcommand("lex", "Lexicographic initial segment: lex n=6 k=3 m=4");
    std::vector<std::string> l_args;
    lex->add_option("args", l_args)->required();
    lex->add_option("--out", out_path);

    auto * shadow_cmd = app.add_subcommand("shadow", "l-th shadow of a family file");
    std::string sh_file;
    int sh_level = 1;
    shadow_cmd->add_option("file", sh_file)->required();
    shadow_cmd->add_option("--level,-l", sh_level, "Shadow level")->check(CLI::NonNegativeNumber);
    shadow_cmd->add_option("--out", out_path);

    auto * verify = app.add_subcommand("verify", "Check a registry statement exhaustively, by sampling, or on one instance");
    std::string v_id, v_exhaustive, v_sample, v_instance, v_sampler, v_density;
    std::uint64_t v_seed = 1, v_count = 1000;
    verify->add_option("--id", v_id, "Statement id")->required();
    auto * ex = verify->add_option("--exhaustive", v_exhaustive, "Grid, e.g. n=5,k=2,l=2");
    auto * sa = verify->add_option("--sample", v_sample, "Grid; may include count=, seed=, sampler=");
    auto * inst = verify->add_option("--instance", v_instance, "Instance or witness JSON file");
    ex->excludes(sa)->excludes(inst);
    sa->excludes(inst);
    verify->add_option("--sampler", v_sampler, "uniform | star_perturbation | shifted_random | mixed");
    verify->add_option("--density", v_density, "Uniform sampler density p/q");
    verify->add_option("--seed", v_seed);
    verify->add_option("--count", v_count, "Samples per grid point");
    verify->add_option("--out", out_path);

    auto * search = app.add_subcommand("search", "Largest family with a property: search n=5 k=2 --prop intersecting");
    std::vector<std::string> q_args;
    std::string q_prop = "true";
    search->add_option("args", q_args)->required();
    search->add_option("--prop", q_prop, "Property spec");
    search->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (! rerun.empty()) {
            std::ifstream in(rerun);
            if (! in) throw UsageError("cannot open " + rerun);
            const Json stored = Json::parse(in);
            if (! stored.contains("config")) throw UsageError(rerun + " has no embedded config");
            RunConfig config = run_config_from_json(stored["config"]);
            const Outcome outcome = execute(config, g.threads);
            Json fresh = report_document(outcome, config), old = stored;
            fresh.erase("timing");
            old.erase("timing");
            const bool same = fresh == old;
            std::cerr << (same ? "rerun reproduces " : "rerun DIFFERS from ") << rerun << "\n";
            if (! out_path.empty()) emit(render(report_document(outcome, config), "json"), out_path);
            if (! same) return 1;
            return outcome.exit_code;
        }
        if (app.got_subcommand(construct)) return cmd_construct(c_id, c_params, out_path);
        if (app.got_subcommand(measure)) return cmd_measure(m_file, g, out_path);
        if (app.got_subcommand(shift_cmd)) return cmd_shift(s_files, s_prop, s_dir, g);
        if (app.got_subcommand(lex)) return cmd_lex(key_values(l_args), out_path);
        if (app.got_subcommand(shadow_cmd)) return cmd_shadow(sh_file, sh_level, out_path);
        if (app.got_subcommand(verify)) {
            RunConfig config;
            config.command = "verify";
            config.params["id"] = v_id;
            config.seed = v_seed;
            config.budget = resolved_budget(g);
            config.output = out_path;
            config.format = g.format;
            if (! v_sampler.empty()) config.params["sampler"] = v_sampler;
            if (! v_density.empty()) config.params["density"] = v_density;
            if (! v_exhaustive.empty()) config.params["exhaustive"] = v_exhaustive;
            else if (! v_instance.empty()) config.params["instance"] = v_instance;
            else if (! v_sample.empty()) {
                // Harness settings may ride along in the grid text.
                std::string grid;
                std::stringstream ss(v_sample);
                config.params["count"] = std::to_string(v_count);
                for (std::string item; std::getline(ss, item, ',');) {
                    const auto eq = item.find('=');
                    const std::string key = item.substr(0, eq);
                    if (eq != std::string::npos && key == "count") config.params["count"] = item.substr(eq + 1);
                    else if (eq != std::string::npos && key == "seed") config.seed = std::stoull(item.substr(eq + 1));
                    else if (eq != std::string::npos && key == "sampler") config.params["sampler"] = item.substr(eq + 1);
                    else grid += (grid.empty() ? "" : ",") + item;
                }
                config.params["sample"] = grid;
            }
            else throw UsageError("verify needs --exhaustive, --sample or --instance");
            return run_outcome(config, g);
        }
        if (app.got_subcommand(search)) {
            auto kv = key_values(q_args);
            RunConfig config;
            config.command = "search";
            config.params["n"] = std::to_string(to_int(kv, "n"));
            config.params["k"] = std::to_string(to_int(kv, "k"));
            config.params["prop"] = kv.count("prop") ? kv["prop"] : q_prop;
            config.budget = resolved_budget(g);
            config.output = out_path;
            config.format = g.format;
            return run_outcome(config, g);
        }
        std::cout << app.help();
        return 2;
    }
    catch (const BudgetExceeded & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
