#pragma once

#include <stdexcept>
#include <string>

#include "dpvc/generation.hpp"
#include "dpvc/host_graph.hpp"

namespace dpvc {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text rule list format, bit-exact and diffable:
//   dpvc-rules 1
//   d <d>
//   beta <beta>          (shortest round-trip decimal)
//   psi <max pattern size>
//   count <rules>
//   rule <i>
//   n <pattern size>
//   edges u-v u-v ...
//   red r ...            (possibly no ids)
//   branch v ...         (one line per branch)
//   end
std::string serialize_rule_list(const RuleList& list);
RuleList parse_rule_list(const std::string& text);

void write_rule_file(const std::string& path, const RuleList& list);
RuleList read_rule_file(const std::string& path);

// Graph file: first line "n m", then m lines "u v" with 0-based endpoints.
std::string serialize_graph(const HostGraph& g);
HostGraph parse_graph(const std::string& text);

void write_graph_file(const std::string& path, const HostGraph& g);
HostGraph read_graph_file(const std::string& path);

// Appends one "d,beta,rules,seconds" row, writing the header first when the
// file is new or empty.
void append_stats_row(const std::string& path, int d, double beta, int rules, double seconds);

// Shortest decimal that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace dpvc
