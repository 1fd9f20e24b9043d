#pragma once

// Batch front end: a resolved RunConfig plus an input document produce one JSON output document.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "serialize.hpp"

namespace algshift {

enum class Command { Shift, Gin, Iterate, Limit, Classify, Bseq, VerifyAxioms, EnumerateShifted, ProbeConjecture };

inline const std::vector<std::pair<std::string, Command>>& command_names()
{
    static const std::vector<std::pair<std::string, Command>> names = {
        {"shift", Command::Shift},
        {"gin", Command::Gin},
        {"iterate", Command::Iterate},
        {"limit", Command::Limit},
        {"classify", Command::Classify},
        {"bseq", Command::Bseq},
        {"verify-axioms", Command::VerifyAxioms},
        {"enumerate-shifted", Command::EnumerateShifted},
        {"probe-conjecture", Command::ProbeConjecture},
    };
    return names;
}

inline std::string command_name(Command c)
{
    for (const auto& [name, cmd] : command_names())
        if (cmd == c) return name;
    return "?";
}

inline Command command_from_name(const std::string& s)
{
    for (const auto& [name, cmd] : command_names())
        if (name == s) return cmd;
    throw InvalidInput("unknown command '" + s + "'");
}

struct RunConfig {
    Command command = Command::Classify;
    std::optional<std::string> order; // command-specific default when unset
    std::uint64_t seed = 0;           // 0: draw from entropy, echoed in the output
    int trials = 2;
    std::uint32_t dbound = 6;
    std::uint32_t max_steps = 32;
    std::optional<Vertex> n;
    std::size_t samples = 200;
    std::string input = "-";
    std::string output = "-";
};

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

namespace detail {

inline std::string default_order(Command c) { return c == Command::Shift ? "revlex" : "lex"; }

inline Json config_json(const RunConfig& c)
{
    return Json{{"command", command_name(c.command)},
                {"order", c.order.value_or(default_order(c.command))},
                {"seed", c.seed},
                {"trials", c.trials},
                {"dbound", c.dbound},
                {"max_steps", c.max_steps},
                {"n", c.n ? Json(*c.n) : Json(nullptr)},
                {"samples", c.samples},
                {"input", c.input},
                {"output", c.output}};
}

/// An input document is either a complex or an ideal.
struct Subject {
    std::optional<SimplicialComplex> complex;
    MonomialIdeal ideal_;
    Vertex n = 0;

    /// The void complex has no Stanley-Reisner ideal; only delta_rl accepts it.
    const MonomialIdeal& ideal() const
    {
        if (complex && complex->is_void()) throw InvalidInput("the void complex has the unit ideal as Stanley-Reisner ideal");
        return ideal_;
    }
};

inline Subject read_subject(const Json& doc, std::optional<Vertex> n_flag)
{
    Subject s;
    if (doc.is_object() && doc.contains("facets")) {
        s.complex = complex_from_json(doc);
        s.n = s.complex->n();
        if (n_flag && *n_flag != s.n) throw InvalidInput("--n disagrees with the complex's vertex count");
        if (!s.complex->is_void()) s.ideal_ = stanley_reisner(*s.complex);
    } else if (doc.is_object() && doc.contains("generators")) {
        s.ideal_ = ideal_from_json(doc);
        s.n = n_flag.value_or(s.ideal_.max_var());
        detail::check_support(s.ideal_, s.n);
    } else {
        throw InvalidInput("input must be a complex {\"n\", \"facets\"} or an ideal {\"generators\"}");
    }
    return s;
}

inline Json error_json(const std::string& type, const std::string& message)
{
    return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

} // namespace detail

/// Runs one command. `input` is the input document text (ignored by commands that take none).
/// Writes the result JSON to `out` and structured errors to `err`; returns the exit code.
inline int run(RunConfig config, const std::string& input, std::ostream& out, std::ostream& err)
{
    if (config.seed == 0) {
        std::random_device rd;
        config.seed = (std::uint64_t{rd()} << 32 | rd()) | 1;
    }
    Json result{{"config", detail::config_json(config)}};
    int code = kExitOk;
    try {
        if (config.trials < 1) throw InvalidInput("--trials must be at least 1");
        GinOptions gopt;
        gopt.seed = config.seed;
        gopt.trials = config.trials;
        const auto order_name = config.order.value_or(detail::default_order(config.command));
        const auto ord = order_by_name(order_name);
        auto parse_input = [&] {
            try {
                return Json::parse(input);
            } catch (const Json::parse_error& e) {
                throw InvalidInput(std::string("malformed JSON: ") + e.what());
            }
        };

        switch (config.command) {
        case Command::Shift: {
            const auto s = detail::read_subject(parse_input(), config.n);
            if (ord.kind() == WithinDegree::Revlex) {
                if (!s.complex) throw InvalidInput("shift --order revlex needs a complex");
                ShiftOptions sopt;
                sopt.gin = gopt;
                result["result"] = to_json(delta_rl(*s.complex, sopt));
            } else {
                const auto shifted = delta_generic(s.ideal(), ord, gopt);
                result["ideal"] = to_json(shifted);
                result["result"] =
                    s.complex && shifted.max_var() <= s.n ? to_json(complex_of(shifted, s.n)) : Json(nullptr);
            }
            break;
        }
        case Command::Gin: {
            const auto s = detail::read_subject(parse_input(), config.n);
            result["n"] = s.n;
            result["result"] = to_json(gin(s.ideal(), s.n, ord, gopt));
            break;
        }
        case Command::Iterate: {
            const auto s = detail::read_subject(parse_input(), config.n);
            if (ord.kind() != WithinDegree::Lex) throw InvalidInput("iterate supports --order lex only");
            const auto orbit = iterate_lex(s.ideal(), config.max_steps, config.dbound, gopt);
            result["result"] = to_json(orbit);
            if (!orbit.certified) result["note"] = "step budget exhausted before a certified stabilization";
            break;
        }
        case Command::Limit: {
            const auto s = detail::read_subject(parse_input(), config.n);
            result["result"] = to_json(limit_usli(s.ideal(), s.n, config.dbound));
            break;
        }
        case Command::Classify: {
            const auto s = detail::read_subject(parse_input(), config.n);
            result["result"] = Json{{"squarefree", s.ideal().is_squarefree()},
                                    {"strongly_stable", is_strongly_stable(s.ideal())},
                                    {"squarefree_strongly_stable", is_squarefree_strongly_stable(s.ideal())},
                                    {"usli", is_usli(s.ideal())},
                                    {"almost_usli", is_almost_usli(s.ideal())}};
            if (s.complex) result["result"]["shifted"] = is_shifted(*s.complex);
            break;
        }
        case Command::Bseq: {
            const auto s = detail::read_subject(parse_input(), config.n);
            const auto b = b_sequence(s.ideal(), s.n, config.dbound);
            Json routes{{"hilbert", to_json(b_sequence_hilbert(s.ideal(), s.n, config.dbound))}};
            if (is_squarefree_strongly_stable(s.ideal()))
                routes["eliahou_kervaire"] = to_json(b_from_table(ek_betti_sqfree(s.ideal()), config.dbound));
            else if (is_strongly_stable(s.ideal()))
                routes["eliahou_kervaire"] = to_json(b_from_table(ek_betti(s.ideal()), config.dbound));
            if (s.complex && !s.complex->is_void() && s.ideal().generators_of_degree(1).empty())
                routes["h_vector"] = to_json(b_from_h(h_vector(*s.complex), config.dbound));
            result["result"] = to_json(b);
            result["routes"] = routes;
            try {
                result["k"] = to_json(k_from_b(b, config.dbound));
            } catch (const NotRealizable& e) {
                result["k"] = nullptr;
                result["k_error"] = e.what();
            }
            for (const auto& [name, r] : routes.items())
                if (r != result["result"]) code = kExitVerificationFailed;
            break;
        }
        case Command::VerifyAxioms: {
            ShiftOptions sopt;
            sopt.gin = gopt;
            const auto report = verify_axioms(config.n.value_or(5), config.samples, config.seed, sopt);
            result["result"] = to_json(report);
            if (!report.ok()) code = kExitVerificationFailed;
            break;
        }
        case Command::EnumerateShifted: {
            const auto n = config.n.value_or(4);
            Json list = Json::array();
            enumerate_shifted(n, [&](const SimplicialComplex& c) { list.push_back(to_json(c)); });
            result["count"] = list.size();
            result["result"] = list;
            break;
        }
        case Command::ProbeConjecture: {
            result["result"] = to_json(probe_conjecture(ord, 7, 4, gopt));
            break;
        }
        }
    } catch (const TheoremViolation& e) {
        err << detail::error_json("theorem_violation", e.what()).dump() << "\n";
        return kExitVerificationFailed;
    } catch (const GinError& e) {
        err << detail::error_json("gin_certificate", e.what()).dump() << "\n";
        return kExitVerificationFailed;
    } catch (const NotRealizable& e) {
        err << detail::error_json("not_realizable", e.what()).dump() << "\n";
        return kExitInputError;
    } catch (const InvalidInput& e) {
        err << detail::error_json("input", e.what()).dump() << "\n";
        return kExitInputError;
    } catch (const Json::exception& e) {
        err << detail::error_json("input", e.what()).dump() << "\n";
        return kExitInputError;
    }
    out << result.dump(2) << "\n";
    return code;
}

} // namespace algshift
