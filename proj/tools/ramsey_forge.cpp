#include <rf/bandwidth.hpp>
#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/harness.hpp>
#include <rf/io.hpp>
#include <rf/morphisms.hpp>
#include <rf/ramsey.hpp>
#include <rf/regularity.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using nlohmann::json;

namespace {

std::vector<int> int_list(const std::string & text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (! item.empty())
            out.push_back(std::stoi(item));
    return out;
}

std::vector<rf::Rational> rational_list(const std::string & text, int n)
{
    std::vector<rf::Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rf::parse_rational(item));
    if (out.size() == 1 && n > 1)
        out.assign(n, out[0]);
    if (static_cast<int>(out.size()) != n)
        throw rf::InputError("expected " + std::to_string(n) + " weights");
    return out;
}

// Inline JSON or a path to a JSON file.
json json_arg(const std::string & text)
{
    std::string body = text;
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec))
        body = rf::read_file(text);
    try {
        return json::parse(body);
    }
    catch (const json::parse_error & e) {
        throw rf::ConfigError("--params: " + std::string(e.what()));
    }
}

void write_graph(const rf::Graph & g, const std::string & out)
{
    if (out.empty()) {
        rf::write_edge_list(std::cout, g);
        return;
    }
    std::ofstream f(out);
    if (! f)
        throw rf::ConfigError("cannot write " + out);
    if (out.ends_with(".g6"))
        f << rf::to_graph6(g) << '\n';
    else
        rf::write_edge_list(f, g);
}

int emit(const json & j)
{
    std::cout << j.dump(2) << '\n';
    return 0;
}

int emit_record(const rf::RunRecord & r)
{
    json j{{"task", r.task}, {"seed", r.seed}, {"outcome", r.outcome}};
    if (! r.value.empty())
        j["value"] = r.value;
    if (r.verified)
        j["verified"] = *r.verified;
    if (! r.stage.empty())
        j["stage"] = r.stage;
    if (! r.detail.empty())
        j["detail"] = r.detail;
    if (! r.artifacts.is_null())
        j.update(r.artifacts);
    std::cout << j.dump(2) << '\n';
    if (r.verified && ! *r.verified) {
        std::cerr << "verification tripwire: " << r.task << " produced an output that failed its recheck\n";
        return 2;
    }
    return 0;
}

struct Common {
    std::uint64_t seed = 0;
    int retries = -1;
    std::string params = "{}";
    bool trace = false;
    int workers = 1;
};

void add_common(CLI::App * sub, Common & c)
{
    sub->add_option("--seed", c.seed, "seed");
    sub->add_option("--retries", c.retries, "retry count");
    sub->add_option("--params", c.params, "instance parameters (inline JSON or file)");
    sub->add_flag("--trace", c.trace, "per-step state dump");
    sub->add_option("--workers", c.workers, "worker threads");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"ramsey-forge: Ramsey oracles and embedding algorithms"};
    app.require_subcommand(1);
    std::function<int()> action;

    // gen
    std::string kind, gen_params, out, eps_text = "1/4", base_spec;
    std::uint64_t gen_seed = 0;
    auto * gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--kind", kind, "named kind, random_bipartite, min_degree_host, blowup")->required();
    gen->add_option("--params", gen_params, "comma-separated integers");
    gen->add_option("--seed", gen_seed);
    gen->add_option("--eps", eps_text, "min_degree_host tolerance");
    gen->add_option("--base", base_spec, "blowup base graph");
    gen->add_option("--out", out, "file (.g6 for graph6); stdout edge list when absent");
    gen->callback([&] {
        action = [&] {
            auto p = int_list(gen_params);
            rf::Graph g;
            if (kind == "random_bipartite") {
                if (p.size() != 2)
                    throw rf::InputError("random_bipartite takes n_per_side,max_degree");
                g = rf::random_bounded_degree_bipartite(p[0], p[1], gen_seed);
            }
            else if (kind == "min_degree_host") {
                if (p.size() != 1)
                    throw rf::InputError("min_degree_host takes n");
                g = rf::random_min_degree_host(p[0], rf::parse_rational(eps_text), gen_seed);
            }
            else if (kind == "blowup") {
                rf::Graph base = rf::load_graph(base_spec);
                if (p.size() == 1)
                    p.assign(base.size(), p[0]);
                g = rf::blowup({base, p}).graph;
            }
            else
                g = rf::make_named(rf::parse_named_kind(kind), p);
            write_graph(g, out);
            return 0;
        };
    });

    // hom
    std::string source, target, weights_text;
    int cap = -1;
    std::uint64_t budget = rf::kDefaultBudget;
    auto * hom = app.add_subcommand("hom", "capacity homomorphism or weighted embedding search");
    hom->add_option("--source", source)->required();
    hom->add_option("--target", target)->required();
    auto * cap_opt = hom->add_option("--cap", cap, "count cap per target vertex");
    hom->add_option("--weights", weights_text, "per-source weights")->excludes(cap_opt);
    hom->add_option("--budget", budget);
    hom->callback([&] {
        action = [&] {
            rf::Graph g = rf::load_graph(source), h = rf::load_graph(target);
            rf::SearchResult res;
            if (! weights_text.empty())
                res = rf::find_weighted_embedding(rf::WeightedGraph(g, rational_list(weights_text, g.size())), h, budget);
            else {
                auto profile = cap < 0 ? rf::CapacityProfile::unbounded(h.size()) : rf::CapacityProfile::uniform_count(h.size(), cap);
                res = rf::find_capacity_homomorphism(g, h, profile, budget);
            }
            if (res.status == rf::SearchStatus::None)
                std::cout << "NONE\n";
            else if (res.status == rf::SearchStatus::BudgetExhausted)
                std::cout << "UNKNOWN\n";
            else {
                if (! rf::verify_homomorphism(g, h, *res.map).valid)
                    return 2;
                rf::write_json_map(std::cout, *res.map);
            }
            return 0;
        };
    });

    // bandwidth
    std::string bw_graph;
    bool exact = false, heuristic = false;
    std::uint64_t bw_budget = 10'000'000;
    auto * bw = app.add_subcommand("bandwidth", "bandwidth of a graph");
    bw->add_option("--graph", bw_graph)->required();
    auto * ex = bw->add_flag("--exact", exact);
    bw->add_flag("--heuristic", heuristic)->excludes(ex);
    bw->add_option("--budget", bw_budget);
    bw->callback([&] {
        action = [&] {
            rf::Graph g = rf::load_graph(bw_graph);
            if (exact) {
                auto r = rf::exact_bandwidth(g, bw_budget);
                json j{{"mode", "exact"}, {"nodes", r.nodes}};
                if (r.width) {
                    j["width"] = *r.width;
                    j["labeling"] = r.labeling->label;
                }
                else
                    j["width"] = "UNKNOWN";
                return emit(j);
            }
            auto l = rf::heuristic_labeling(g);
            return emit({{"mode", "heuristic"}, {"width", rf::labeling_width(g, l)}, {"labeling", l.label}});
        };
    });

    // ramsey, wramsey, sramsey
    struct OracleArgs {
        std::string graph, weights, eps = "0", witness_out;
        int nmax = 6, workers = 1;
        bool no_iso = false;
    } oa;
    auto oracle_cmd = [&](const std::string & name, const std::string & help) {
        auto * sub = app.add_subcommand(name, help);
        sub->add_option("--graph", oa.graph)->required();
        sub->add_option("--nmax", oa.nmax);
        sub->add_option("--workers", oa.workers);
        sub->add_flag("--no-iso-prune", oa.no_iso);
        sub->add_option("--witness-out", oa.witness_out);
        if (name != "ramsey")
            sub->add_option("--weights", oa.weights);
        if (name == "sramsey")
            sub->add_option("--eps", oa.eps);
        sub->callback([&, name] {
            action = [&, name] {
                rf::Graph g = rf::load_graph(oa.graph);
                rf::WeightedGraph gw(g, oa.weights.empty() ? std::vector<rf::Rational>(g.size(), rf::Rational(1))
                                                           : rational_list(oa.weights, g.size()));
                rf::OracleOptions opts;
                opts.workers = rf::effective_workers(oa.workers);
                opts.iso_prune = ! oa.no_iso;
                rf::OracleResult r = name == "ramsey" ? rf::ramsey_number(g, oa.nmax, opts)
                    : name == "wramsey"               ? rf::weighted_ramsey(gw, oa.nmax, opts)
                                                      : rf::stable_ramsey(gw, rf::parse_rational(oa.eps), oa.nmax, opts);
                json j{{"status", rf::to_string(r.status)}, {"n_max", r.n_max}, {"mode", rf::to_string(r.mode)}};
                if (r.status == rf::OracleStatus::Value)
                    j["value"] = r.value;
                if (r.witness) {
                    j["witness_n"] = r.witness_n;
                    bool ok = ! rf::mono_copy_search(*r.witness, gw).has_value();
                    j["witness_verified"] = ok;
                    if (! oa.witness_out.empty()) {
                        std::ofstream f(oa.witness_out);
                        if (! f)
                            throw rf::ConfigError("cannot write " + oa.witness_out);
                        rf::write_coloring(f, *r.witness);
                    }
                    emit(j);
                    return ok ? 0 : 2;
                }
                return emit(j);
            };
        });
    };
    oracle_cmd("ramsey", "Ramsey number r(G)");
    oracle_cmd("wramsey", "weighted Ramsey number");
    oracle_cmd("sramsey", "eps-stable Ramsey number");

    // regularity
    std::string reg_graph, pairs_text, reg_eps = "1/4", reg_delta = "0", reg_mode = "auto";
    int partition_k = 0, reg_budget = 64, reg_retries = 1, reg_workers = 1;
    std::uint64_t reg_seed = 0;
    auto * reg = app.add_subcommand("regularity", "eps-regularity of pairs or a fixed-k partition");
    reg->add_option("--graph", reg_graph)->required();
    auto * pairs_opt = reg->add_option("--pairs", pairs_text, "JSON [[X, Y], ...] with X, Y vertex lists (inline or file)");
    reg->add_option("--partition", partition_k, "number of classes")->excludes(pairs_opt);
    reg->add_option("--epsilon", reg_eps);
    reg->add_option("--delta", reg_delta);
    reg->add_option("--mode", reg_mode)->check(CLI::IsMember({"exhaustive", "sampled", "auto"}));
    reg->add_option("--budget", reg_budget);
    reg->add_option("--seed", reg_seed);
    reg->add_option("--retries", reg_retries);
    reg->add_option("--workers", reg_workers);
    reg->callback([&] {
        action = [&]() -> int {
            rf::Graph g = rf::load_graph(reg_graph);
            rf::RegularityParams p{rf::parse_rational(reg_eps), rf::parse_rational(reg_delta)};
            p.validate();
            rf::CheckMode mode = reg_mode == "exhaustive" ? rf::CheckMode::exhaustive()
                : reg_mode == "sampled"                   ? rf::CheckMode::sampled(reg_budget, reg_seed)
                                                          : rf::CheckMode::automatic(reg_budget, reg_seed);
            if (partition_k > 0) {
                auto [part, rep] = rf::fixed_k_partition(g, partition_k, p, reg_seed, reg_retries, mode,
                    rf::effective_workers(reg_workers));
                json classes = json::array();
                for (const auto & c : part.classes)
                    classes.push_back(c.members());
                return emit({{"classes", classes}, {"irregular_pairs", rep.irregular_pairs},
                    {"irregular_per_class", rep.irregular_per_class}, {"per_class_ok", rep.per_class_ok},
                    {"total_ok", rep.total_ok}, {"exceptional_ok", rep.exceptional_ok},
                    {"mode", rf::to_string(rep.mode)}, {"retry", rep.retry}, {"seed_used", rep.seed_used}});
            }
            if (pairs_text.empty())
                throw rf::InputError("regularity needs --pairs or --partition");
            json pairs = json_arg(pairs_text), out = json::array();
            auto to_set = [&](const json & list) {
                rf::VertexSet s(g.size());
                for (int v : list.get<std::vector<int>>()) {
                    if (v < 0 || v >= g.size())
                        throw rf::InputError("vertex out of range in --pairs");
                    s.set(v);
                }
                return s;
            };
            int code = 0;
            for (const auto & pr : pairs) {
                rf::VertexSet x = to_set(pr.at(0)), y = to_set(pr.at(1));
                auto v = rf::regularity_check(g, x, y, p, mode);
                json e{{"status", rf::to_string(v.status)}, {"mode", rf::to_string(v.mode)},
                    {"density", rf::to_string(rf::pair_density(g, x, y))}, {"samples", v.samples_tried}};
                if (v.status == rf::RegularityStatus::Violated) {
                    e["x_witness"] = v.x_witness.members();
                    e["y_witness"] = v.y_witness.members();
                    bool ok = rf::witness_violates(g, x, y, p.eps, v.x_witness, v.y_witness);
                    e["witness_verified"] = ok;
                    if (! ok)
                        code = 2;
                }
                out.push_back(e);
            }
            emit(out);
            return code;
        };
    });

    // harness-backed algorithm subcommands
    Common common;
    auto task_cmd = [&](const std::string & name, const std::string & task, const std::string & help) {
        auto * sub = app.add_subcommand(name, help);
        add_common(sub, common);
        sub->callback([&, task] {
            action = [&, task] {
                json inst = json_arg(common.params);
                if (! inst.is_object())
                    throw rf::ConfigError("--params must be a JSON object");
                if (common.retries >= 0)
                    inst["retries"] = common.retries;
                return emit_record(rf::run_cell(task, inst, common.seed, common.trace));
            };
        });
    };
    task_cmd("embed-dense", "embed-dense", "greedy weighted embedding into a dense host");
    task_cmd("embed-wheel", "embed-wheel", "monochromatic weighted wheel in a random colouring");
    task_cmd("embed-rga", "embed-rga", "random greedy blow-up embedding");
    task_cmd("embed-drc", "embed-drc", "dependent random choice bandwidth embedding");
    task_cmd("transfer", "transfer", "regularity transfer pipeline");
    task_cmd("split-lovasz", "lovasz", "degree-bounded vertex split");

    // run
    std::string config;
    auto * run = app.add_subcommand("run", "config-driven experiment");
    run->add_option("--config", config)->required();
    run->callback([&] {
        action = [&] { return rf::run_and_write(rf::ExperimentConfig::load(config)); };
    });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    try {
        return action();
    }
    catch (const rf::ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    }
    catch (const rf::InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::logic_error & e) {
        std::cerr << "internal verification failed: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
