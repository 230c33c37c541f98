// Command-line front end for hierarchical revenue sharing with needs:
// rule evaluation, lambda sweeps, axiom audits, and problem generation.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hrs/axioms.hpp"
#include "hrs/core.hpp"
#include "hrs/io.hpp"
#include "hrs/rules.hpp"

namespace {

// Exit-code contract: tests assert outcomes without parsing text.
constexpr int kExitAuditFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitParseError = 3;
constexpr int kExitDomainError = 4;

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

hrs::Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hrs::ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return hrs::problem_from_json(buf.str());
}

hrs::RuleSpec parse_rule(const std::string& name, std::optional<double> lambda) {
    auto spec = hrs::rule_from_string(name, lambda);
    if (!spec)
        throw CLI::ValidationError("--rule", "unknown rule or missing/extra --lambda: " + name);
    return *spec;
}

// Rules are evaluated on the canonical relabeling and mapped back.
hrs::Allocation apply_rule(const hrs::RuleSpec& spec, const hrs::Problem& p) {
    hrs::Canonical c = hrs::canonicalize(p);
    hrs::Allocation x = hrs::make_rule(spec)(c.problem);
    x.agents = c.original_ids;
    return x;
}

std::vector<hrs::AxiomSpec> parse_axioms(const std::string& list) {
    if (list == "all") return hrs::all_axioms();
    std::vector<hrs::AxiomSpec> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto id = hrs::axiom_from_string(item);
        if (!id) throw CLI::ValidationError("--axioms", "unknown axiom: " + item);
        out.push_back({*id, 0.5});
    }
    if (out.empty()) throw CLI::ValidationError("--axioms", "empty axiom list");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Revenue allocation rules for linear hierarchies with needs"};
    app.require_subcommand(1);

    std::string input, output, rule_name, axioms_list = "all", domain_name = "Z";
    std::string grid_text, agents_range = "2..8", out_path;
    std::optional<double> lambda;
    double magnitude = 10.0, tol = 1e-9;
    long trials = 1000, count = 1;
    std::uint64_t seed = 0;

    auto add_rule_flags = [&](CLI::App* cmd) {
        cmd->add_option("--rule", rule_name,
                        "geometric|serial|full-transfer|no-transfer|balanced")
            ->required();
        cmd->add_option("--lambda", lambda, "lambda in [0,1] for the geometric rule");
    };

    CLI::App* allocate = app.add_subcommand("allocate", "evaluate a rule on one problem");
    allocate->add_option("--input", input, "problem file (JSON)")->required();
    add_rule_flags(allocate);
    allocate->add_option("--output", output, "write the allocation here instead of stdout");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate the geometric family on a lambda grid");
    sweep->add_option("--input", input, "problem file (JSON)")->required();
    sweep->add_option("--grid", grid_text, "comma list of lambda values in [0,1]")->required();

    CLI::App* audit_cmd = app.add_subcommand("audit", "seeded axiom falsification run");
    add_rule_flags(audit_cmd);
    audit_cmd->add_option("--axioms", axioms_list, "all, or comma list of axiom names");
    audit_cmd->add_option("--domain", domain_name, "Z|Zstar|Zzero");
    audit_cmd->add_option("--trials", trials, "trials per axiom")->required();
    audit_cmd->add_option("--seed", seed, "RNG seed")->required();
    audit_cmd->add_option("--tol", tol, "absolute tolerance");

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded problem stream");
    gen->add_option("--domain", domain_name, "Z|Zstar|Zzero")->required();
    gen->add_option("--agents", agents_range, "agent count range, e.g. 2..6")->required();
    gen->add_option("--magnitude", magnitude, "value magnitude")->required();
    gen->add_option("--count", count, "number of problems")->required();
    gen->add_option("--seed", seed, "RNG seed")->required();
    gen->add_option("--out", out_path, "output stream file")->required();

    CLI::App* infer = app.add_subcommand("infer-lambda", "recover a rule's lambda from the probe problem");
    add_rule_flags(infer);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitBadArguments;
    }

    try {
        if (*allocate) {
            hrs::Problem p = load_problem(input);
            hrs::RuleSpec spec = parse_rule(rule_name, lambda);
            hrs::Allocation x = apply_rule(spec, p);
            std::string doc = hrs::to_json(x, hrs::rule_name(spec), hrs::classify(p));
            if (output.empty()) {
                std::cout << doc << '\n';
            } else {
                std::ofstream out(output);
                out << doc << '\n';
            }
            return 0;
        }

        if (*sweep) {
            hrs::Problem p = load_problem(input);
            std::vector<double> grid;
            std::stringstream ss(grid_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                double v = 0.0;
                try {
                    v = std::stod(item);
                } catch (const std::exception&) {
                    std::cerr << "error: bad grid value: " << item << '\n';
                    return kExitBadArguments;
                }
                if (!(v >= 0.0 && v <= 1.0)) {
                    std::cerr << "error: grid value out of [0,1]: " << item << '\n';
                    return kExitBadArguments;
                }
                grid.push_back(v);
            }
            std::cout << "lambda\tpayoffs\ttotal\n";
            for (double l : grid) {
                hrs::Allocation x = apply_rule({hrs::RuleKind::Geometric, l}, p);
                std::cout << fmt12(l) << '\t';
                for (std::size_t i = 0; i < x.payoffs.size(); ++i)
                    std::cout << (i ? "," : "") << fmt12(x.payoffs[i]);
                std::cout << '\t' << fmt12(x.total()) << '\n';
            }
            return 0;
        }

        if (*audit_cmd) {
            hrs::RuleSpec spec = parse_rule(rule_name, lambda);
            auto domain = hrs::domain_from_string(domain_name);
            if (!domain || *domain == hrs::DomainClass::Invalid) {
                std::cerr << "error: unknown domain: " << domain_name << '\n';
                return kExitBadArguments;
            }
            hrs::AuditConfig cfg;
            cfg.domain = *domain;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.tol.abs_tol = tol;
            hrs::AuditReport report = hrs::audit(hrs::make_rule(spec),
                                                 hrs::rule_name(spec),
                                                 parse_axioms(axioms_list), cfg);
            std::cout << hrs::to_json(report) << '\n';
            return report.all_clean() ? 0 : kExitAuditFailed;
        }

        if (*gen) {
            auto domain = hrs::domain_from_string(domain_name);
            if (!domain || *domain == hrs::DomainClass::Invalid) {
                std::cerr << "error: unknown domain: " << domain_name << '\n';
                return kExitBadArguments;
            }
            const auto dots = agents_range.find("..");
            if (dots == std::string::npos) {
                std::cerr << "error: --agents expects min..max\n";
                return kExitBadArguments;
            }
            hrs::GeneratorConfig gc;
            gc.domain = *domain;
            gc.magnitude = magnitude;
            try {
                gc.min_agents = std::stoi(agents_range.substr(0, dots));
                gc.max_agents = std::stoi(agents_range.substr(dots + 2));
            } catch (const std::exception&) {
                std::cerr << "error: --agents expects min..max\n";
                return kExitBadArguments;
            }
            hrs::ProblemGenerator generator(gc, seed);
            std::vector<hrs::Problem> problems;
            problems.reserve(static_cast<std::size_t>(count));
            for (long i = 0; i < count; ++i) problems.push_back(generator.next());
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot open " << out_path << '\n';
                return kExitParseError;
            }
            hrs::write_problem_stream(out, problems);
            std::cout << "seed " << seed << "\nwrote " << count << " problems to "
                      << out_path << '\n';
            return 0;
        }

        if (*infer) {
            hrs::RuleSpec spec = parse_rule(rule_name, lambda);
            std::cout << fmt12(hrs::infer_lambda(hrs::make_rule(spec))) << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    } catch (const hrs::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }
    return kExitBadArguments;
}
