// symbreak: solve, benchmark and verify symmetry-breaking models.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symbreak/models.hpp"
#include "symbreak/oracle.hpp"
#include "symbreak/serialize.hpp"
#include "symbreak/strategies.hpp"

using namespace symbreak;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw UsageError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad integer '" + item + "'");
        }
    }
    return out;
}

struct ModelSpec {
    std::string model;
    std::optional<int> n;
    std::string params;
    std::string dimacs;
    std::optional<int> colors;
    std::string group = "geometric";
};

ModelBundle build(const ModelSpec& ms)
{
    const std::vector<int> p = ms.params.empty() ? std::vector<int>{} : parse_ints(ms.params);
    auto need = [&](std::size_t k, const char* form) {
        if (p.size() != k)
            throw UsageError(ms.model + " expects --params " + form);
    };
    auto order = [&]() {
        if (ms.n)
            return *ms.n;
        need(1, "N (or --n)");
        return p[0];
    };
    try {
        if (ms.model == "most-perfect")
            return most_perfect_magic_square(order());
        if (ms.model == "magic") {
            MagicGroup g = MagicGroup::Geometric8;
            if (ms.group == "rotations")
                g = MagicGroup::Rotations4;
            else if (ms.group == "full")
                g = MagicGroup::Full16;
            else if (ms.group != "geometric")
                throw UsageError("--group must be geometric, rotations or full");
            return magic_square(order(), g);
        }
        if (ms.model == "coloring") {
            if (!ms.dimacs.empty()) {
                std::ifstream in(ms.dimacs);
                if (!in)
                    throw UsageError("cannot open " + ms.dimacs);
                const Graph g = read_dimacs(in);
                ModelBundle b = graph_coloring(g, ms.colors.value_or(g.vertexCount));
                b.name = std::filesystem::path(ms.dimacs).stem().string();
                return b;
            }
            if (p.size() < 3 || p.size() > 4)
                throw UsageError("coloring expects --params V,MAXBLOCK,SEED[,COLORS] or --dimacs FILE");
            const int colors = p.size() == 4 ? p[3] : ms.colors.value_or(0);
            return graph_coloring(p[0], p[1], static_cast<std::uint64_t>(p[2]), colors);
        }
        if (ms.model == "efpa") {
            need(4, "V,Q,LAMBDA,D");
            return efpa(p[0], p[1], p[2], p[3]);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown model '" + ms.model + "' (most-perfect, magic, coloring, efpa)");
}

struct RunSpec {
    std::string strategy = "static";
    std::string valueOrder = "lex";
    std::string varOrder = "min-domain";
    std::uint64_t cutoff = 1000;
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> maxRestarts;
    std::optional<double> timeout;
};

BranchSpec branch_for(const RunSpec& r, std::uint64_t seed)
{
    BranchSpec b;
    if (r.varOrder == "fixed")
        b.var = VarHeuristic::FixedOrder;
    else if (r.varOrder == "min-domain")
        b.var = VarHeuristic::MinDomain;
    else
        throw UsageError("--var-order must be fixed or min-domain");
    if (r.valueOrder == "lex")
        b.val = ValHeuristic::LexMin;
    else if (r.valueOrder == "random")
        b.val = ValHeuristic::RandomOrder;
    else
        throw UsageError("--value-order must be lex or random");
    b.seed = seed;
    return b;
}

StrategyResult run(const ModelBundle& m, const RunSpec& r, std::uint64_t seed)
{
    const BranchSpec b = branch_for(r, seed);
    StrategyLimits lim{r.budget, r.timeout};
    if (r.strategy == "static")
        return run_static(m.csp, m.sbc, b, lim);
    if (r.strategy == "model-restarts") {
        if (r.cutoff < 1)
            throw UsageError("--cutoff must be at least 1");
        RestartConfig cfg{r.cutoff, r.maxRestarts, seed};
        return run_model_restarts(m.csp, m.sbc, m.group, b, cfg, lim);
    }
    if (r.strategy == "sbds")
        return run_sbds(m.csp, m.group.generators(), b, lim);
    throw UsageError("--strategy must be static, model-restarts or sbds");
}

int exit_code(const ModelBundle& m, const StrategyResult& r)
{
    if (m.csp.objective()) {
        if (r.provedOptimal)
            return r.solution ? kExitSolved : kExitInfeasible;
        return kExitBudget;
    }
    switch (r.outcome) {
    case Outcome::Solution:
        return kExitSolved;
    case Outcome::Exhausted:
        return kExitInfeasible;
    default:
        return kExitBudget;
    }
}

std::string opt_field(const ModelBundle& m, const StrategyResult& r)
{
    if (m.csp.objective())
        return r.objective ? std::to_string(*r.objective) + (r.provedOptimal ? "" : "*") : "-";
    if (r.outcome == Outcome::Solution)
        return "sat";
    return r.outcome == Outcome::Exhausted ? "unsat" : "-";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("SYMBREAK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::logic_error&) {
            throw UsageError("SYMBREAK_SEED is not an integer");
        }
    }
    return 0;
}

std::string command_line(int argc, char** argv)
{
    std::string s;
    for (int i = 0; i < argc; ++i)
        s += (i ? " " : "") + std::string(argv[i]);
    return s;
}

void add_model_flags(CLI::App* cmd, ModelSpec& m)
{
    cmd->add_option("--model", m.model, "most-perfect, magic, coloring or efpa")->required();
    cmd->add_option("--n", m.n, "Square order");
    cmd->add_option("--params", m.params, "Comma-separated model parameters");
    cmd->add_option("--dimacs", m.dimacs, "Read the coloring graph from a DIMACS file");
    cmd->add_option("--colors", m.colors, "Number of colors for coloring models");
    cmd->add_option("--group", m.group, "Magic square group: geometric, rotations or full");
}

void add_run_flags(CLI::App* cmd, RunSpec& r)
{
    cmd->add_option("--var-order", r.varOrder, "fixed or min-domain");
    cmd->add_option("--cutoff", r.cutoff, "Backtracks per restart");
    cmd->add_option("--budget", r.budget, "Total backtrack budget");
    cmd->add_option("--max-restarts", r.maxRestarts, "Restart limit");
    cmd->add_option("--timeout", r.timeout, "Wall-clock limit in seconds");
}

int cmd_solve(const ModelSpec& ms, const RunSpec& rs, std::optional<std::uint64_t> seedFlag, const std::string& out,
              bool showLog)
{
    const ModelBundle m = build(ms);
    const std::uint64_t seed = resolve_seed(seedFlag);
    const StrategyResult r = run(m, rs, seed);

    std::ostringstream os;
    os << "instance " << m.name << "\n";
    os << "strategy " << rs.strategy << "  value-order " << rs.valueOrder << "  var-order " << rs.varOrder
       << "  seed " << seed << "\n";
    if (r.solution)
        os << render(m, *r.solution);
    os << "outcome " << to_string(r.outcome) << "\n";
    os << "opt " << opt_field(m, r) << "\n";
    os << "b " << r.stats.backtracks << "\n";
    os << "nodes " << r.stats.nodes << "\n";
    os << "restarts " << r.stats.restarts << "\n";
    if (showLog) {
        os << log_header() << "\n";
        for (const auto& e : r.log)
            os << format_log_entry(e) << "\n";
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out);
        if (!f)
            throw UsageError("cannot write " + out);
        f << os.str();
    }
    std::fprintf(stderr, "t %.3f\n", r.stats.wallTime);
    return exit_code(m, r);
}

struct BenchSpec {
    std::vector<std::string> instances;
    std::string strategies = "static,model-restarts,sbds";
    std::string valueOrders = "lex,random";
    std::string seeds = "1";
};

ModelSpec parse_instance(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("instance '" + text + "' must look like MODEL:P1,P2,...");
    ModelSpec m;
    m.model = text.substr(0, colon);
    m.params = text.substr(colon + 1);
    return m;
}

std::vector<std::string> split(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_bench(const BenchSpec& bs, const RunSpec& base, const std::string& out, const std::string& args)
{
    if (bs.instances.empty())
        throw UsageError("bench needs at least one --instance");
    std::vector<std::pair<std::string, ModelBundle>> models;
    for (const auto& text : bs.instances)
        models.emplace_back(text, build(parse_instance(text)));
    const auto strategies = split(bs.strategies);
    const auto orders = split(bs.valueOrders);
    const auto seedList = parse_ints(bs.seeds);

    std::ofstream file;
    std::ostream* os = &std::cout;
    bool header = true;
    if (!out.empty()) {
        header = !std::filesystem::exists(out) || std::filesystem::file_size(out) == 0;
        file.open(out, std::ios::app);
        if (!file)
            throw UsageError("cannot write " + out);
        os = &file;
    }
    if (header)
        *os << "instance,strategy,valueOrder,seed,opt,provedOptimal,backtracks,seconds\n";
    *os << "# " << args << "\n";
    for (const auto& [text, m] : models)
        for (const auto& strategy : strategies)
            for (const auto& order : orders)
                for (int seed : seedList) {
                    RunSpec r = base;
                    r.strategy = strategy;
                    r.valueOrder = order;
                    const StrategyResult res = run(m, r, static_cast<std::uint64_t>(seed));
                    char secs[32];
                    std::snprintf(secs, sizeof secs, "%.3f", res.stats.wallTime);
                    *os << m.name << ',' << strategy << ',' << order << ',' << seed << ',' << opt_field(m, res) << ','
                        << (res.provedOptimal ? 1 : 0) << ',' << res.stats.backtracks << ',' << secs << '\n';
                    os->flush();
                }
    return 0;
}

int cmd_verify(const ModelSpec& ms, const std::vector<std::string>& extraGenerators, const std::string& swap,
               std::size_t groupBound, const std::string& only)
{
    ModelBundle m = build(ms);
    for (const auto& text : extraGenerators) {
        try {
            m.group.add_generator(symmetry_from_json(text));
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad --extra-generator: ") + e.what());
        }
    }
    if (!swap.empty()) {
        const auto ij = parse_ints(swap);
        if (ij.size() != 2 || ij[0] < 0 || ij[1] < 0 || ij[0] >= m.csp.var_count() || ij[1] >= m.csp.var_count())
            throw UsageError("--inject-swap expects I,J with valid variable indices");
        std::vector<int> img(static_cast<std::size_t>(m.csp.var_count()));
        for (int i = 0; i < m.csp.var_count(); ++i)
            img[static_cast<std::size_t>(i)] = i;
        std::swap(img[static_cast<std::size_t>(ij[0])], img[static_cast<std::size_t>(ij[1])]);
        m.group.add_generator({Permutation(img), Permutation::identity(m.csp.value_count()),
                               "swap(" + m.csp.var_name(ij[0]) + "," + m.csp.var_name(ij[1]) + ")"});
    }
    if (!extraGenerators.empty() || !swap.empty())
        m.group.clear_structure();
    const auto ctx = make_context(m, groupBound);
    std::vector<CheckResult> results;
    if (only.empty()) {
        results = check_all(ctx);
    } else {
        for (const auto& name : split(only)) {
            auto p = parse_proposition(name);
            if (!p)
                throw UsageError("unknown proposition '" + name + "'");
            results.push_back(check_proposition(*p, ctx));
        }
    }
    std::cout << report(ctx, results);
    for (const auto& r : results)
        if (!r.passed)
            return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symmetry breaking with symmetric constraint sets"};
    app.require_subcommand(1);

    ModelSpec ms;
    RunSpec rs;
    std::optional<std::uint64_t> seed;
    std::string out;
    bool showLog = false;

    auto* solve = app.add_subcommand("solve", "Solve one model with one strategy");
    add_model_flags(solve, ms);
    add_run_flags(solve, rs);
    solve->add_option("--strategy", rs.strategy, "static, model-restarts or sbds");
    solve->add_option("--value-order", rs.valueOrder, "lex or random");
    solve->add_option("--seed", seed, "Master seed (default: $SYMBREAK_SEED, then 0)");
    solve->add_option("--out", out, "Write the report to a file");
    solve->add_flag("--log", showLog, "Print the per-restart log");

    BenchSpec bs;
    auto* bench = app.add_subcommand("bench", "Run a strategy x value-order x seed matrix and write CSV");
    bench->add_option("--instance", bs.instances, "MODEL:P1,P2,... (repeatable)")->required();
    bench->add_option("--strategies", bs.strategies, "Comma-separated strategies");
    bench->add_option("--value-orders", bs.valueOrders, "Comma-separated value orders");
    bench->add_option("--seeds", bs.seeds, "Comma-separated seeds");
    bench->add_option("--out", out, "Append rows to this CSV file");
    add_run_flags(bench, rs);

    ModelSpec vs;
    std::vector<std::string> extra;
    std::string swap;
    std::size_t groupBound = kDefaultGroupBound;
    std::string only;
    auto* verify = app.add_subcommand("verify", "Check every proposition exhaustively on a small model");
    add_model_flags(verify, vs);
    verify->add_option("--extra-generator", extra, "Add a generator given as JSON {\"var\":[..],\"val\":[..]}");
    verify->add_option("--inject-swap", swap, "Add the transposition of variables I,J as a generator");
    verify->add_option("--group-bound", groupBound, "Largest group to enumerate");
    verify->add_option("--only", only, "Comma-separated proposition names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve)
            return cmd_solve(ms, rs, seed, out, showLog);
        if (*bench)
            return cmd_bench(bs, rs, out, command_line(argc, argv));
        return cmd_verify(vs, extra, swap, groupBound, only);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
