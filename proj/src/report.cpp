#include "extremal/report.hpp"

#include <chrono>
#include <fstream>

namespace extremal {

namespace {

Json rational_json(const Rational & r) { return r.str(); }

std::uint64_t get_u64(const std::map<std::string, std::string> & params, const std::string & key, std::uint64_t fallback)
{
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key + " must be a non-negative integer");
    return v;
}

const std::string & require(const std::map<std::string, std::string> & params, const std::string & key)
{
    auto it = params.find(key);
    if (it == params.end() || it->second.empty()) throw std::invalid_argument("missing '" + key + "'");
    return it->second;
}

Json read_json_file(const std::string & path)
{
    std::ifstream in(path);
    if (! in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
}

Outcome run_verify(const RunConfig & config, unsigned threads)
{
    const auto & p = config.params;
    const std::string & id = require(p, "id");
    const int modes = static_cast<int>(p.count("exhaustive")) + static_cast<int>(p.count("sample")) +
                      static_cast<int>(p.count("instance"));
    if (modes != 1) throw std::invalid_argument("verify needs exactly one of exhaustive, sample or instance");
    Outcome out;

    if (p.count("instance")) {
        Json doc = read_json_file(p.at("instance"));
        // A report witness carries its instance under "instance".
        if (doc.contains("instance")) doc = doc["instance"];
        const StatementReport r = check_statement(id, instance_from_json(doc));
        out.report = to_json(r);
        out.timing = {{"seconds", r.seconds}};
        out.exit_code = r.verdict == Verdict::fail ? 1 : 0;
        return out;
    }

    const std::uint64_t budget = config.budget ? config.budget : default_budget();
    SweepReport sweep;
    if (p.count("exhaustive")) {
        sweep = exhaustive_sweep(id, parse_grid(p.at("exhaustive")), budget);
        sweep.seed = config.seed;
    }
    else {
        Sampler sampler;
        sampler.seed = config.seed;
        if (p.count("sampler")) sampler.mode = parse_sampler_mode(p.at("sampler"));
        if (p.count("density")) {
            const Rational d = Rational::parse(p.at("density"));
            if (d < Rational(0) || d > Rational(1)) throw std::invalid_argument("density must lie in [0,1]");
            sampler.density = static_cast<double>(d.numerator()) / static_cast<double>(d.denominator());
        }
        const std::uint64_t count = get_u64(p, "count", 1000);
        if (count > budget) throw BudgetExceeded("sample count above budget " + std::to_string(budget));
        sweep = sample_sweep(id, parse_grid(p.at("sample")), sampler, count, threads);
    }
    out.report = to_json(sweep);
    out.timing = {{"seconds", sweep.seconds}};
    out.exit_code = sweep.fail ? 1 : 0;
    return out;
}

Outcome run_search(const RunConfig & config)
{
    const auto & p = config.params;
    const int n = static_cast<int>(get_u64(p, "n", 0)), k = static_cast<int>(get_u64(p, "k", 0));
    if (! p.count("n") || ! p.count("k")) throw std::invalid_argument("search needs n and k");
    const PropertySpec prop = PropertySpec::parse(p.count("prop") ? p.at("prop") : "true");
    const std::uint64_t budget = config.budget ? config.budget : default_budget();
    const auto start = std::chrono::steady_clock::now();
    const SearchResult r = search_max(n, k, prop, budget);
    Outcome out;
    out.report = {{"n", n}, {"k", k}, {"property", prop.str()}};
    const Json fields = to_json(r);
    for (const auto & [key, value] : fields.items()) out.report[key] = value;
    out.report["witness_valid"] = r.max_size == 0 || prop.holds(r.witness);
    out.timing = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    return out;
}

} // namespace

Json to_json(const RunConfig & c)
{
    Json params = Json::object();
    for (const auto & [k, v] : c.params) params[k] = v;
    return {{"command", c.command}, {"params", params}, {"seed", c.seed}, {"budget", c.budget},
            {"output", c.output},   {"format", c.format}};
}

RunConfig run_config_from_json(const Json & j)
{
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    for (const auto & [k, v] : j.at("params").items()) c.params[k] = v.get<std::string>();
    c.seed = j.value("seed", std::uint64_t{1});
    c.budget = j.value("budget", std::uint64_t{0});
    c.output = j.value("output", std::string());
    c.format = j.value("format", std::string("json"));
    return c;
}

Json to_json(const SetFamily & f)
{
    Json members = Json::array();
    for (KSet s : f) members.push_back(s.elements());
    return {{"n", f.ground_size()}, {"k", f.uniformity()}, {"members", members}};
}

SetFamily family_from_json(const Json & j)
{
    const int n = j.at("n").get<int>(), k = j.at("k").get<int>();
    std::vector<KSet> members;
    for (const auto & m : j.at("members")) {
        KSet s;
        for (int x : m.get<std::vector<int>>()) {
            if (x < 1 || x > n) throw std::invalid_argument("member element outside [n]");
            s = s.with(x);
        }
        members.push_back(s);
    }
    return SetFamily(n, k, std::move(members));
}

Json to_json(const Params & params)
{
    Json j = Json::object();
    for (const auto & [k, v] : params) {
        if (v.denominator() == 1) j[k] = v.numerator();
        else j[k] = v.str();
    }
    return j;
}

Params params_from_json(const Json & j)
{
    Params p;
    for (const auto & [k, v] : j.items()) {
        if (v.is_number_integer()) p[k] = Rational(v.get<std::int64_t>());
        else if (v.is_string()) p[k] = Rational::parse(v.get<std::string>());
        else throw std::invalid_argument("parameter '" + k + "' must be an integer or a \"p/q\" string");
    }
    return p;
}

Json to_json(const Instance & in)
{
    Json families = Json::array();
    for (const auto & f : in.families) families.push_back(to_json(f));
    return {{"params", to_json(in.params)}, {"families", families}};
}

Instance instance_from_json(const Json & j)
{
    Instance in;
    in.params = params_from_json(j.at("params"));
    for (const auto & f : j.value("families", Json::array())) in.families.push_back(family_from_json(f));
    return in;
}

Json to_json(const MeasureProfile & p)
{
    Json j = {{"rho", rational_json(p.rho)}};
    for (const auto & [t, tau] : p.tau) j["tau" + std::to_string(t)] = tau;
    j["nu"] = p.nu;
    for (const auto & [level, value] : p.t_levels) j["t" + std::to_string(level)] = value;
    j["initial"] = p.initial;
    j["empty"] = p.empty;
    return j;
}

Json to_json(const ShiftTrace & trace)
{
    Json steps = Json::array();
    for (const auto & s : trace.steps) steps.push_back({{"pair", {s.i, s.j}}, {"weights_before", s.weights_before}});
    Json resistant = Json::array();
    for (const auto & r : trace.resistant) resistant.push_back({{"pair", {r.i, r.j}}, {"moved_slots", r.moved_slots}});
    return {{"passes", trace.passes},
            {"total_steps", trace.total_steps},
            {"initial_weights", trace.initial_weights},
            {"final_weights", trace.final_weights},
            {"steps", steps},
            {"resistant", resistant}};
}

Json to_json(const SearchResult & r)
{
    return {{"max_size", r.max_size},
            {"complete", r.complete},
            {"nodes", r.nodes},
            {"catalog_source", r.catalog_source},
            {"witness", to_json(r.witness)}};
}

Json to_json(const StatementReport & r)
{
    return {{"id", r.id},
            {"verdict", std::string(verdict_name(r.verdict))},
            {"detail", r.detail},
            {"equality", r.equality},
            {"instance", to_json(r.instance)}};
}

Json to_json(const SweepReport & r)
{
    Json grid = Json::array();
    for (const auto & p : r.points)
        grid.push_back({{"point", to_json(p.point)},
                        {"pass", p.pass},
                        {"vacuous", p.vacuous},
                        {"fail", p.fail},
                        {"equality", p.equality}});
    Json witnesses = Json::array(), equality = Json::array();
    for (const auto & w : r.witnesses) witnesses.push_back(to_json(w));
    for (const auto & e : r.equality_examples) equality.push_back(to_json(e));
    const std::uint64_t total = r.pass + r.vacuous + r.fail;
    Json j = {{"id", r.id},
              {"mode", r.mode},
              {"grid", grid},
              {"totals", {{"pass", r.pass}, {"vacuous", r.vacuous}, {"fail", r.fail}, {"equality", r.equality}}},
              {"nonvacuous_rate", total ? Rational(static_cast<std::int64_t>(r.pass + r.fail),
                                                   static_cast<std::int64_t>(total)).str()
                                        : std::string("0/1")},
              {"witnesses", witnesses},
              {"equality_examples", equality},
              {"seed", r.seed}};
    if (r.mode == "sample") {
        j["sampler"] = r.sampler;
        j["count"] = r.count;
    }
    j["budget"] = r.budget;
    j["budget_used"] = r.budget_used;
    return j;
}

Outcome execute(const RunConfig & config, unsigned threads)
{
    if (config.command == "verify") return run_verify(config, threads);
    if (config.command == "search") return run_search(config);
    throw std::invalid_argument("cannot execute command '" + config.command + "'");
}

Json report_document(const Outcome & outcome, const RunConfig & config)
{
    Json doc = outcome.report;
    doc["config"] = to_json(config);
    doc["timing"] = outcome.timing;
    return doc;
}

std::vector<std::pair<std::string, std::string>> summary_rows(const Json & report)
{
    std::vector<std::pair<std::string, std::string>> rows;
    auto text = [](const Json & v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto & [key, value] : report.items()) {
        if (value.is_object()) {
            bool flat = true;
            for (const auto & [k2, v2] : value.items()) flat = flat && ! v2.is_structured();
            if (flat)
                for (const auto & [k2, v2] : value.items()) rows.emplace_back(key + "." + k2, text(v2));
        }
        else if (value.is_array()) rows.emplace_back(key, std::to_string(value.size()) + " entries");
        else rows.emplace_back(key, text(value));
    }
    return rows;
}

} // namespace extremal
