#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <algshift/cli.hpp>

namespace {

std::string read_all(std::istream& in)
{
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool needs_input(algshift::Command c)
{
    using algshift::Command;
    return c != Command::VerifyAxioms && c != Command::EnumerateShifted && c != Command::ProbeConjecture;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace algshift;
    CLI::App app{"Algebraic shifting of simplicial complexes and squarefree monomial ideals"};
    std::string command;
    RunConfig cfg;
    std::string order;
    unsigned n = 0;
    std::vector<std::string> commands;
    for (const auto& [name, c] : command_names()) commands.push_back(name);
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(commands));
    app.add_option("--order", order, "Term order: lex, revlex (rl), index-sum-lex, index-sum-revlex");
    app.add_option("--seed", cfg.seed, "Seed for generic matrices (0: from entropy, echoed in the output)");
    app.add_option("--trials", cfg.trials, "Independent generic matrices per Gin")->capture_default_str();
    app.add_option("--dbound", cfg.dbound, "Degree bound for B-sequences, limits and orbit prefixes")->capture_default_str();
    app.add_option("--max-steps", cfg.max_steps, "Step budget for iterate")->capture_default_str();
    auto* n_opt = app.add_option("--n", n, "Number of variables / vertices");
    app.add_option("--samples", cfg.samples, "Random samples for verify-axioms")->capture_default_str();
    app.add_option("--input", cfg.input, "Input JSON file, '-' for stdin")->capture_default_str();
    app.add_option("--output", cfg.output, "Output JSON file, '-' for stdout")->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << Json{{"error", Json{{"type", "usage"}, {"message", e.what()}}}}.dump() << "\n";
        return kExitInputError;
    }
    cfg.command = command_from_name(command);
    if (!order.empty()) cfg.order = order;
    if (n_opt->count() > 0) cfg.n = static_cast<Vertex>(n);

    std::string input;
    if (needs_input(cfg.command)) {
        if (cfg.input == "-") {
            input = read_all(std::cin);
        } else {
            std::ifstream f(cfg.input);
            if (!f) {
                std::cerr << Json{{"error", Json{{"type", "input"}, {"message", "cannot open " + cfg.input}}}}.dump() << "\n";
                return kExitInputError;
            }
            input = read_all(f);
        }
    }
    if (cfg.output == "-") return run(cfg, input, std::cout, std::cerr);
    std::ofstream out(cfg.output);
    if (!out) {
        std::cerr << Json{{"error", Json{{"type", "input"}, {"message", "cannot write " + cfg.output}}}}.dump() << "\n";
        return kExitInputError;
    }
    return run(cfg, input, out, std::cerr);
}
