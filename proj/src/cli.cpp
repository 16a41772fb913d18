#include "hyperpoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperpoly/parser.hpp"
#include "hyperpoly/report.hpp"

namespace hyperpoly {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonOpts {
    std::string input;
    std::string widening = "upto-m";
    unsigned delay = 3;
    std::string modes;
    std::string output = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool analysis_flags) {
    cmd->add_option("file", opts.input, "While-dt source file")->required();
    if (analysis_flags) {
        cmd->add_option("--widening", opts.widening, "widening operator")
            ->check(CLI::IsMember({"standard", "upto-m"}));
        cmd->add_option("--delay", opts.delay, "plain joins before each widening");
    }
    cmd->add_option("--modes", opts.modes,
                    "mode declarations, e.g. \"p:{0,1},s:{0,1}\" (overrides the pragma)");
    cmd->add_option("--output", opts.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
}

Program load_program(const CommonOpts& opts) {
    std::optional<std::string> modes;
    if (!opts.modes.empty()) modes = opts.modes;
    return parse_program(read_file(opts.input), modes);
}

AnalysisConfig make_config(const CommonOpts& opts) {
    AnalysisConfig cfg;
    cfg.widening = opts.widening == "standard" ? WideningKind::STANDARD : WideningKind::UPTO_M;
    cfg.delay = opts.delay;
    return cfg;
}

std::vector<long> parse_sweep(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stol(item));
    }
    if (out.empty()) throw std::invalid_argument("empty sweep");
    return out;
}

int cmd_analyze(const CommonOpts& opts, const std::string& dt_value,
                const std::string& trace_path, std::ostream& out) {
    Program prog = load_program(opts);
    if (!dt_value.empty()) prog = substitute_dt(prog, Rational::parse(dt_value));
    AnalysisConfig cfg = make_config(opts);
    cfg.record_trace = true;
    AnalysisResult result = analyze_program(prog, cfg);

    if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        if (!tf) throw std::runtime_error("cannot write '" + trace_path + "'");
        tf << export_plot_data(result, Rational(0)).dump(2) << "\n";
    }
    if (opts.output == "json")
        out << result_to_json(result, prog).dump(2) << "\n";
    else
        print_text_report(out, result, prog);
    return 0;
}

int cmd_simulate(const CommonOpts& opts, long n, size_t max_steps, std::ostream& out) {
    Program prog = load_program(opts);
    SimulationResult sim = simulate_section(prog, n, max_steps);
    if (opts.output == "json") {
        nlohmann::json j;
        j["n"] = n;
        j["steps_executed"] = sim.steps_executed;
        j["terminated"] = sim.terminated;
        j["records"] = nlohmann::json::array();
        for (const auto& rec : sim.records) {
            nlohmann::json r;
            r["loop"] = rec.loop_id;
            r["step"] = rec.step;
            for (const auto& [v, val] : rec.store) r["store"][v] = val.str();
            j["records"].push_back(std::move(r));
        }
        for (const auto& [v, val] : sim.final_store) j["final"][v] = val.str();
        out << j.dump(2) << "\n";
    } else {
        out << "section dt = 1/" << n << ": " << sim.steps_executed << " steps, "
            << (sim.terminated ? "terminated" : "budget exhausted") << "\n";
        out << "loop-head stores recorded: " << sim.records.size() << "\n";
        out << "final store:";
        for (const auto& [v, val] : sim.final_store) out << " " << v << "=" << val.str();
        out << "\n";
    }
    return 0;
}

int cmd_check(const CommonOpts& opts, const std::string& sweep_text, size_t max_steps,
              std::ostream& out) {
    Program prog = load_program(opts);
    AnalysisConfig cfg = make_config(opts);
    cfg.record_trace = false;
    AnalysisResult result = analyze_program(prog, cfg);

    bool violated = false;
    for (long n : parse_sweep(sweep_text)) {
        size_t budget = max_steps != 0 ? max_steps : static_cast<size_t>(10 * n);
        SimulationResult sim = simulate_section(prog, n, budget);
        ContainmentReport rep = check_containment(result, prog, sim.records, n);
        out << "N=" << n << ": " << rep.stores_checked << " loop-head stores, "
            << rep.violations.size() << " violations\n";
        size_t shown = 0;
        for (const auto& v : rep.violations) {
            if (++shown > 5) {
                out << "  ...\n";
                break;
            }
            out << "  step " << v.step << " mode [" << v.mode << "] violates " << v.constraint
                << " with " << v.store << "\n";
        }
        if (!rep.violations.empty()) violated = true;
    }
    return violated ? 2 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperpoly: polyhedral analysis of While-dt programs"};
    app.require_subcommand(1);

    CommonOpts a_opts;
    std::string dt_value, trace_path;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze a program");
    add_common(analyze, a_opts, true);
    analyze->add_option("--dt-value", dt_value, "substitute a positive rational for dt");
    analyze->add_option("--trace", trace_path, "write the iteration sequence as plot data");

    CommonOpts s_opts;
    long section_n = 1;
    size_t sim_steps = 1000;
    CLI::App* simulate = app.add_subcommand("simulate", "run a section concretely");
    add_common(simulate, s_opts, false);
    simulate->add_option("--n", section_n, "section: dt := 1/n")->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--max-steps", sim_steps, "loop-body iteration budget");

    CommonOpts c_opts;
    std::string sweep = "100,1000,10000";
    size_t check_steps = 0;  // 0: default 10*N
    CLI::App* check = app.add_subcommand("check", "analyze, then verify against simulations");
    add_common(check, c_opts, true);
    check->add_option("--sweep", sweep, "comma-separated section list");
    check->add_option("--max-steps", check_steps, "budget per section (default 10*N)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        int code = app.exit(e, msg, msg);
        (code == 0 ? out : err) << msg.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(a_opts, dt_value, trace_path, out);
        if (simulate->parsed()) return cmd_simulate(s_opts, section_n, sim_steps, out);
        if (check->parsed()) return cmd_check(c_opts, sweep, check_steps, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace hyperpoly
