#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hrs/axioms.hpp"
#include "hrs/core.hpp"

namespace hrs {

/// Thrown on malformed problem documents; the CLI maps it to its own
/// parse-error exit code, distinct from domain violations.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string to_json(const Problem& p);
Problem problem_from_json(const std::string& text);

/// One problem per line (batch streams, `gen` output).
std::vector<Problem> read_problem_stream(std::istream& in);
void write_problem_stream(std::ostream& out, const std::vector<Problem>& ps);

std::string to_json(const Allocation& x, const std::string& rule,
                    DomainClass domain);

std::string to_json(const AuditReport& report);

}  // namespace hrs
