#include <rf/bandwidth.hpp>
#include <rf/dense.hpp>
#include <rf/drc.hpp>
#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/harness.hpp>
#include <rf/io.hpp>
#include <rf/lovasz.hpp>
#include <rf/morphisms.hpp>
#include <rf/ramsey.hpp>
#include <rf/regularity.hpp>
#include <rf/rga.hpp>
#include <rf/rng.hpp>
#include <rf/transfer.hpp>
#include <rf/wheel.hpp>

#include "parallel.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace rf {

using nlohmann::json;

namespace {

Rational rational_of(const json & v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_number_float())
        return parse_rational(v.dump());
    throw InputError("expected a rational, got " + v.dump());
}

Rational rat(const json & inst, const char * key, const Rational & fallback)
{
    return inst.contains(key) ? rational_of(inst.at(key)) : fallback;
}

int integer(const json & inst, const char * key, int fallback)
{
    return inst.contains(key) ? inst.at(key).get<int>() : fallback;
}

int required_int(const json & inst, const char * key)
{
    if (! inst.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return inst.at(key).get<int>();
}

Graph random_gnp(int n, const Rational & p, std::uint64_t seed)
{
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    return g;
}

// "cycle:5", a file path, {"gnp": {"n": 30, "p": "1/8"}}, {"kind": "min_degree", "n": 96, "eps": "3/8"}
// or {"kind": "complete", "n": 128}. Random kinds draw from the cell seed.
Graph graph_of(const json & spec, std::uint64_t seed)
{
    if (spec.is_string())
        return load_graph(spec.get<std::string>());
    if (spec.contains("gnp")) {
        const json & g = spec.at("gnp");
        return random_gnp(required_int(g, "n"), rat(g, "p", Rational(1, 2)), seed);
    }
    std::string kind = spec.value("kind", "");
    if (kind == "min_degree")
        return random_min_degree_host(required_int(spec, "n"), rat(spec, "eps", 0), seed);
    if (kind == "complete")
        return Graph::complete(required_int(spec, "n"));
    throw InputError("unknown graph spec " + spec.dump());
}

Graph field_graph(const json & inst, const char * key, std::uint64_t seed)
{
    if (! inst.contains(key))
        throw InputError(std::string("missing field '") + key + "'");
    return graph_of(inst.at(key), seed);
}

std::vector<Rational> weights_of(const json & inst, int n)
{
    if (! inst.contains("weights"))
        return std::vector<Rational>(n, Rational(1));
    const json & w = inst.at("weights");
    if (! w.is_array())
        return std::vector<Rational>(n, rational_of(w));
    if (static_cast<int>(w.size()) != n)
        throw InputError("weights must list one value per vertex");
    std::vector<Rational> out;
    for (const auto & x : w)
        out.push_back(rational_of(x));
    return out;
}

OracleOptions oracle_options(const json & inst)
{
    OracleOptions o;
    o.iso_prune = inst.value("iso_prune", true);
    o.workers = 1;
    return o;
}

void oracle_row(RunRecord & r, const OracleResult & res, const WeightedGraph & gw)
{
    r.outcome = to_string(res.status);
    if (res.status == OracleStatus::Value)
        r.value = std::to_string(res.value);
    r.detail = std::string("mode=") + to_string(res.mode);
    if (res.witness) {
        r.verified = ! mono_copy_search(*res.witness, gw).has_value();
        r.artifacts["witness_n"] = res.witness_n;
    }
}

void embed_row(RunRecord & r, const EmbedResult & res, const std::function<bool(const VertexMap &)> & check)
{
    if (res.found()) {
        r.outcome = "some";
        r.verified = check(*res.map);
        r.artifacts["map"] = res.map->image;
        if (res.color)
            r.value = to_string(*res.color);
    }
    else {
        r.outcome = "none";
        r.stage = res.stage;
    }
}

using TaskFn = std::function<void(const json &, std::uint64_t, RunRecord &)>;

void task_ramsey(const json & inst, std::uint64_t, RunRecord & r)
{
    Graph g = field_graph(inst, "graph", 0);
    auto res = ramsey_number(g, required_int(inst, "n_max"), oracle_options(inst));
    oracle_row(r, res, WeightedGraph::uniform(g));
}

void task_wramsey(const json & inst, std::uint64_t, RunRecord & r)
{
    Graph g = field_graph(inst, "graph", 0);
    WeightedGraph gw(g, weights_of(inst, g.size()));
    oracle_row(r, weighted_ramsey(gw, required_int(inst, "n_max"), oracle_options(inst)), gw);
}

void task_sramsey(const json & inst, std::uint64_t, RunRecord & r)
{
    Graph g = field_graph(inst, "graph", 0);
    WeightedGraph gw(g, weights_of(inst, g.size()));
    oracle_row(r, stable_ramsey(gw, rat(inst, "eps", 0), required_int(inst, "n_max"), oracle_options(inst)), gw);
}

void task_mono_copy(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph pattern = field_graph(inst, "pattern", 0);
    WeightedGraph gw(pattern, weights_of(inst, pattern.size()));
    auto c = random_coloring(Graph::complete(required_int(inst, "n")), rat(inst, "red_prob", Rational(1, 2)), seed);
    auto found = mono_copy_search(c, gw);
    if (! found) {
        r.outcome = "none";
        return;
    }
    r.outcome = "some";
    r.value = to_string(found->first);
    r.verified = is_weighted_embedding(gw, color_subgraph(c, found->first), found->second);
}

void task_lovasz(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph g = field_graph(inst, "graph", seed);
    auto degrees = inst.at("degrees").get<std::vector<int>>();
    auto split = lovasz_partition(g, degrees);
    r.outcome = "some";
    r.value = std::to_string(split.moves);
    r.verified = split_respects(g, split, degrees);
    json classes = json::array();
    for (const auto & cls : split.classes)
        classes.push_back(cls.members());
    r.artifacts["classes"] = classes;
}

void task_regularity(const json & inst, std::uint64_t seed, RunRecord & r)
{
    auto sizes = inst.at("sizes").get<std::vector<int>>();
    if (sizes.size() != 2)
        throw InputError("sizes must be [|X|, |Y|]");
    int a = sizes[0], b = sizes[1];
    Rng rng(seed);
    Rational p = rat(inst, "p", Rational(1, 2));
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            if (rng.bernoulli(p))
                g.add_edge(u, v);
    VertexSet x(a + b), y(a + b);
    for (int u = 0; u < a; ++u)
        x.set(u);
    for (int v = a; v < a + b; ++v)
        y.set(v);
    RegularityParams params{rat(inst, "eps", Rational(1, 4)), 0};
    std::string mode = inst.value("mode", "exhaustive");
    CheckMode m = mode == "sampled" ? CheckMode::sampled(integer(inst, "budget", 64), derive_seed(seed, 1))
        : mode == "auto"            ? CheckMode::automatic(integer(inst, "budget", 64), derive_seed(seed, 1))
                                    : CheckMode::exhaustive();
    auto v = regularity_check(g, x, y, params, m);
    r.outcome = v.status == RegularityStatus::CertifiedRegular ? "certified"
        : v.status == RegularityStatus::Violated               ? "violated"
                                                               : "unrefuted";
    r.value = to_string(pair_density(g, x, y));
    r.detail = std::string("mode=") + to_string(v.mode);
    if (v.status == RegularityStatus::Violated)
        r.verified = witness_violates(g, x, y, params.eps, v.x_witness, v.y_witness);
}

void task_embed_dense(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph host = field_graph(inst, "host", seed);
    Graph pattern = field_graph(inst, "pattern", 0);
    WeightedGraph gw(pattern, weights_of(inst, pattern.size()));
    DenseParams p;
    p.alpha = rat(inst, "alpha", 1);
    p.beta = rat(inst, "beta", 0);
    p.rho = rat(inst, "rho", 1);
    p.delta = rat(inst, "delta", 1);
    p.max_degree = integer(inst, "max_degree", pattern.max_degree());
    DenseWitness w{{VertexSet::full(host.size())}, {p.max_degree}};
    auto res = dense_greedy_embed(host, w, p, gw);
    embed_row(r, res, [&](const VertexMap & f) { return is_weighted_embedding(gw, host, f); });
}

void task_embed_wheel(const json & inst, std::uint64_t seed, RunRecord & r)
{
    int k = required_int(inst, "k");
    auto weights = weights_of(inst, k);
    auto c = random_coloring(Graph::complete(required_int(inst, "n")), rat(inst, "red_prob", Rational(1, 2)), seed);
    auto res = wheel_mono_embed(c, k, weights);
    WeightedGraph wheel(make_named(NamedKind::Wheel, {k}), weights);
    embed_row(r, res, [&](const VertexMap & f) { return is_weighted_embedding(wheel, color_subgraph(c, *res.color), f); });
}

void task_embed_rga(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph base = field_graph(inst, "base", 0);
    Graph pattern = field_graph(inst, "pattern", 0);
    int size = required_int(inst, "part_size");
    Rational density = rat(inst, "density", Rational(3, 4));
    Rational xi = rat(inst, "xi", Rational(1, 4));
    int k = base.size();
    Rng rng(derive_seed(seed, 0));
    Graph gamma(k * size);
    for (auto [i, j] : base.edges())
        for (int u = 0; u < size; ++u)
            for (int v = 0; v < size; ++v)
                if (rng.bernoulli(density))
                    gamma.add_edge(i * size + u, j * size + v);
    Partition part;
    part.n = gamma.size();
    part.classes.assign(k + 1, VertexSet(gamma.size()));
    for (int i = 0; i < k; ++i)
        for (int u = 0; u < size; ++u)
            part.classes[i + 1].set(i * size + u);
    VertexMap f;
    if (inst.contains("hom"))
        f = VertexMap(k, inst.at("hom").get<std::vector<int>>());
    else {
        int cap = static_cast<int>(floor_mul(1 / (1 + xi), size));
        auto found = find_capacity_homomorphism(pattern, base, CapacityProfile::uniform_count(k, cap));
        if (found.status != SearchStatus::Found) {
            r.outcome = "none";
            r.stage = "no pattern homomorphism within the part capacity";
            return;
        }
        f = *found.map;
    }
    RgaParams params = RgaParams::with_defaults(rat(inst, "delta", density), xi);
    if (inst.contains("eps"))
        params.eps = rational_of(inst.at("eps"));
    if (inst.contains("eps1"))
        params.eps1 = rational_of(inst.at("eps1"));
    if (inst.contains("eps2"))
        params.eps2 = rational_of(inst.at("eps2"));
    auto rep = rga_blowup_embed(gamma, part, base, pattern, f, params, derive_seed(seed, 1), integer(inst, "retries", 20), 1, r.trace);
    embed_row(r, rep.result, [&](const VertexMap & emb) { return is_embedding(pattern, gamma, emb); });
    r.detail = "attempts=" + std::to_string(rep.attempts);
    r.artifacts["failures"] = rep.failures;
    r.artifacts["invariant_checks"] = rep.invariant_checks;
    if (r.trace) {
        json steps = json::array();
        for (const auto & st : rep.trace)
            steps.push_back({{"part", st.part}, {"vertex", st.vertex}, {"image", st.image}, {"from_queue", st.from_queue},
                {"free", st.free_candidates}, {"admissible", st.admissible}, {"queue", st.queue_size}});
        r.artifacts["trace"] = steps;
    }
}

void task_embed_drc(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph host = field_graph(inst, "host", derive_seed(seed, 0));
    Graph h = field_graph(inst, "pattern", 0);
    DrcEmbedOptions opt;
    if (inst.contains("beta"))
        opt.beta = rational_of(inst.at("beta"));
    if (inst.contains("delta"))
        opt.delta = inst.at("delta").get<int>();
    opt.select.trials = integer(inst, "trials", opt.select.trials);
    auto rep = drc_bandwidth_embed(host, h, heuristic_labeling(h), rat(inst, "alpha", Rational(1, 2)),
        derive_seed(seed, 1), opt);
    r.detail = "beta=" + to_string(rep.beta) + ";budget=" + std::to_string(rep.width_budget) + ";width="
        + std::to_string(rep.width);
    r.artifacts["reservoirs"] = rep.reservoir_sizes;
    if (rep.status == DrcStatus::DegenerateBudget) {
        r.outcome = "degenerate";
        r.stage = rep.result.stage;
        return;
    }
    embed_row(r, rep.result, [&](const VertexMap & f) { return is_embedding(h, host, f); });
}

void task_transfer(const json & inst, std::uint64_t seed, RunRecord & r)
{
    Graph g = field_graph(inst, "g", 0);
    Graph h = field_graph(inst, "h", 0);
    auto c = random_coloring(Graph::complete(required_int(inst, "n")), rat(inst, "red_prob", Rational(1, 2)),
        derive_seed(seed, 0));
    VertexMap f;
    if (inst.contains("hom"))
        f = VertexMap(h.size(), inst.at("hom").get<std::vector<int>>());
    else {
        auto found = find_capacity_homomorphism(g, h, CapacityProfile::unbounded(h.size()));
        if (found.status != SearchStatus::Found)
            throw InputError("no homomorphism from g to h");
        f = *found.map;
    }
    TransferParams p;
    p.eps = rat(inst, "eps", p.eps);
    p.xi = rat(inst, "xi", p.xi);
    p.k = integer(inst, "k", p.k);
    p.rga_retries = integer(inst, "retries", p.rga_retries);
    auto rep = transference_pipeline(g, h, f, c, p, derive_seed(seed, 1));
    embed_row(r, rep.result, [&](const VertexMap & emb) { return is_embedding(g, color_subgraph(c, *rep.result.color), emb); });
}

const std::map<std::string, TaskFn> & tasks()
{
    static const std::map<std::string, TaskFn> table{
        {"ramsey", task_ramsey},
        {"wramsey", task_wramsey},
        {"sramsey", task_sramsey},
        {"mono-copy", task_mono_copy},
        {"lovasz", task_lovasz},
        {"regularity", task_regularity},
        {"embed-dense", task_embed_dense},
        {"embed-wheel", task_embed_wheel},
        {"embed-rga", task_embed_rga},
        {"embed-drc", task_embed_drc},
        {"transfer", task_transfer},
    };
    return table;
}

// Named graphs and files must resolve before anything runs.
void check_instance(const json & inst, int index)
{
    if (! inst.is_object())
        throw ConfigError("instances[" + std::to_string(index) + "] must be an object");
    for (const char * key : {"graph", "pattern", "g", "h", "base", "host"}) {
        if (! inst.contains(key) || ! inst.at(key).is_string())
            continue;
        try {
            load_graph(inst.at(key).get<std::string>());
        }
        catch (const std::exception & e) {
            throw ConfigError("instances[" + std::to_string(index) + "]." + key + ": " + e.what());
        }
    }
}

std::string csv_field(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

std::uint64_t fnv1a(const std::string & s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void write_text(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw ConfigError("cannot write " + path);
    out << text;
    if (! out)
        throw ConfigError("write failed for " + path);
}

} // namespace

RunRecord run_cell(const std::string & task, const json & instance, std::uint64_t seed, bool trace)
{
    auto it = tasks().find(task);
    if (it == tasks().end())
        throw ConfigError("unknown task '" + task + "'");
    RunRecord r;
    r.task = task;
    r.seed = seed;
    r.trace = trace;
    it->second(instance, seed, r);
    return r;
}

std::vector<std::string> known_tasks()
{
    std::vector<std::string> out;
    for (const auto & [name, fn] : tasks())
        out.push_back(name);
    return out;
}

int effective_workers(int configured)
{
    if (const char * env = std::getenv("RF_WORKERS"); env && *env) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1)
            throw ConfigError("RF_WORKERS must be a positive integer");
        return static_cast<int>(v);
    }
    return std::max(configured, 1);
}

ExperimentConfig ExperimentConfig::from_json(const json & j)
{
    if (! j.is_object())
        throw ConfigError("config must be a JSON object");
    ExperimentConfig cfg;
    cfg.raw = j;
    if (! j.contains("task") || ! j.at("task").is_string())
        throw ConfigError("config.task: missing");
    cfg.task = j.at("task").get<std::string>();
    if (! tasks().contains(cfg.task))
        throw ConfigError("config.task: unknown task '" + cfg.task + "'");

    if (j.contains("instances")) {
        if (! j.at("instances").is_array())
            throw ConfigError("config.instances: must be an array");
        for (const auto & inst : j.at("instances"))
            cfg.instances.push_back(inst);
    }
    else if (j.contains("instance"))
        cfg.instances.push_back(j.at("instance"));
    else
        throw ConfigError("config.instances: missing");
    for (std::size_t i = 0; i < cfg.instances.size(); ++i)
        check_instance(cfg.instances[i], static_cast<int>(i));

    if (! j.contains("seeds"))
        throw ConfigError("config.seeds: missing (seeds must be explicit)");
    const json & s = j.at("seeds");
    try {
        if (s.is_array())
            cfg.seeds = s.get<std::vector<std::uint64_t>>();
        else if (s.is_object()) {
            auto start = s.value("start", std::uint64_t{0});
            auto count = s.at("count").get<std::uint64_t>();
            for (std::uint64_t k = 0; k < count; ++k)
                cfg.seeds.push_back(start + k);
        }
        else
            throw ConfigError("config.seeds: expected a list or {start, count}");
    }
    catch (const json::exception & e) {
        throw ConfigError(std::string("config.seeds: ") + e.what());
    }
    cfg.workers = j.value("workers", 1);
    cfg.csv_path = j.value("csv", "");
    cfg.summary_path = j.value("summary", "");
    cfg.timing_path = j.value("timings", "");
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string & path)
{
    std::string text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw ConfigError(path + ": " + e.what());
    }
    try {
        return from_json(j);
    }
    catch (const ConfigError & e) {
        throw ConfigError(path + ": " + e.what());
    }
}

RunOutput run_experiment(const ExperimentConfig & cfg)
{
    const TaskFn & fn = tasks().at(cfg.task);
    std::size_t n_seeds = cfg.seeds.size();
    std::size_t cells = cfg.instances.size() * n_seeds;
    RunOutput out;
    out.rows.resize(cells);
    detail::parallel_for(static_cast<std::int64_t>(cells), effective_workers(cfg.workers), [&](std::int64_t c) {
        RunRecord & r = out.rows[c];
        r.cell = static_cast<int>(c);
        r.instance = static_cast<int>(c / n_seeds);
        r.seed = cfg.seeds[c % n_seeds];
        r.task = cfg.task;
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(cfg.instances[r.instance], r.seed, r);
        }
        catch (const std::exception & e) {
            r.outcome = "error";
            r.stage = "input";
            r.detail = e.what();
        }
        r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    });

    json summary;
    summary["schema"] = "rf-summary/1";
    json keyed = cfg.raw;
    for (const char * k : {"workers", "csv", "summary", "timings"})
        keyed.erase(k);
    std::ostringstream hash;
    hash << std::hex << fnv1a(keyed.dump());
    summary["config_hash"] = hash.str();
    summary["task"] = cfg.task;
    summary["cells"] = cells;
    std::map<std::string, int> outcomes, stages;
    int some = 0, none = 0, errors = 0;
    for (const auto & r : out.rows) {
        ++outcomes[r.outcome];
        if (! r.stage.empty())
            ++stages[r.stage];
        some += r.outcome == "some";
        none += r.outcome == "none";
        errors += r.outcome == "error";
        if (r.verified && ! *r.verified)
            out.tripwire = true;
    }
    summary["outcomes"] = outcomes;
    summary["stages"] = stages;
    summary["errors"] = errors;
    if (some + none > 0)
        summary["success_rate"] = static_cast<double>(some) / (some + none);
    json per_instance = json::array();
    for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
        std::map<std::string, int> values;
        for (std::size_t s = 0; s < n_seeds; ++s)
            if (! out.rows[i * n_seeds + s].value.empty())
                values[out.rows[i * n_seeds + s].value]++;
        per_instance.push_back(values);
    }
    summary["values"] = per_instance;
    if (cfg.instances.size() == 1 && n_seeds > 0 && out.rows[0].outcome == "value")
        summary["value"] = std::stoi(out.rows[0].value);
    summary["tripwire"] = out.tripwire;
    out.summary = summary;
    return out;
}

std::string render_csv(const std::vector<RunRecord> & rows)
{
    std::ostringstream out;
    out << "schema,cell,instance,seed,task,outcome,value,verified,stage,detail\n";
    for (const auto & r : rows) {
        out << kCsvSchema << ',' << r.cell << ',' << r.instance << ',' << r.seed << ',' << csv_field(r.task) << ','
            << csv_field(r.outcome) << ',' << csv_field(r.value) << ','
            << (r.verified ? (*r.verified ? "true" : "false") : "") << ',' << csv_field(r.stage) << ','
            << csv_field(r.detail) << '\n';
    }
    return out.str();
}

int run_and_write(const ExperimentConfig & cfg)
{
    auto out = run_experiment(cfg);
    if (! cfg.csv_path.empty())
        write_text(cfg.csv_path, render_csv(out.rows));
    if (! cfg.summary_path.empty())
        write_text(cfg.summary_path, out.summary.dump(2) + "\n");
    if (! cfg.timing_path.empty()) {
        json t = json::array();
        for (const auto & r : out.rows)
            t.push_back({{"cell", r.cell}, {"wall_ms", r.wall_ms}});
        write_text(cfg.timing_path, t.dump(2) + "\n");
    }
    return out.tripwire ? 2 : 0;
}

} // namespace rf
