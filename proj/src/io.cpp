#include "hrs/io.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace hrs {

namespace {

using json = nlohmann::ordered_json;

json problem_to_value(const Problem& p) {
    return json{{"agents", p.agents},
                {"revenues", p.revenues},
                {"needs", p.needs}};
}

Problem problem_from_value(const json& v) {
    Problem p;
    try {
        p.agents = v.at("agents").get<std::vector<int>>();
        p.revenues = v.at("revenues").get<std::vector<double>>();
        p.needs = v.at("needs").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad problem document: ") + e.what());
    }
    if (auto err = structural_error(p)) throw ParseError(*err);
    return p;
}

json counterexample_to_value(const Counterexample& ce) {
    json v;
    v["note"] = ce.note;
    v["problem"] = problem_to_value(ce.base);
    v["payoffs"] = ce.base_alloc.payoffs;
    if (ce.perturbed) {
        v["perturbed_problem"] = problem_to_value(*ce.perturbed);
        v["perturbed_payoffs"] = ce.perturbed_alloc->payoffs;
    }
    return v;
}

}  // namespace

std::string to_json(const Problem& p) { return problem_to_value(p).dump(); }

Problem problem_from_json(const std::string& text) {
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded()) throw ParseError("not a valid JSON document");
    return problem_from_value(v);
}

std::vector<Problem> read_problem_stream(std::istream& in) {
    std::vector<Problem> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(problem_from_json(line));
    }
    return out;
}

void write_problem_stream(std::ostream& out, const std::vector<Problem>& ps) {
    for (const Problem& p : ps) out << to_json(p) << '\n';
}

std::string to_json(const Allocation& x, const std::string& rule,
                    DomainClass domain) {
    json v{{"agents", x.agents},
           {"payoffs", x.payoffs},
           {"total", x.total()},
           {"rule", rule},
           {"domain", to_string(domain)}};
    return v.dump();
}

std::string to_json(const AuditReport& report) {
    json v;
    v["rule"] = report.rule;
    v["domain"] = to_string(report.domain);
    v["seed"] = report.seed;
    v["tolerance"] = report.tolerance;
    v["trials"] = report.trials;
    v["axioms"] = json::array();
    for (const AxiomResult& r : report.axioms) {
        json a;
        a["axiom"] = to_string(r.axiom.id);
        if (r.axiom.id == AxiomId::CanonicalBilateralFairness)
            a["lambda"] = r.axiom.lambda;
        a["attempted"] = r.attempted;
        a["skipped"] = r.skipped;
        a["failed"] = r.failed;
        a["verdict"] = r.verdict;
        if (r.first_counterexample) {
            a["first_failure_trial"] = r.first_failure_index;
            a["first_counterexample"] = counterexample_to_value(*r.first_counterexample);
        }
        v["axioms"].push_back(std::move(a));
    }
    return v.dump(2);
}

}  // namespace hrs
