#include "dpvc/rule_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace dpvc {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

namespace {

std::string format_vertex_list(VertexSet set) {
    std::string out;
    for (VertexSet s = set; s;) {
        int v = lowest_vertex(s);
        s &= static_cast<VertexSet>(s - 1);
        out += ' ';
        out += std::to_string(v);
    }
    return out;
}

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::string next(const std::string& what) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) return line;
        }
        throw ParseError("rule file: unexpected end of file, expected " + what);
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("rule file line " + std::to_string(line_no) + ": " + message);
    }
};

long parse_int(LineReader& reader, const std::string& token, long lo, long hi) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        reader.fail("expected an integer, got '" + token + "'");
    if (value < lo || value > hi) reader.fail("value " + token + " out of range");
    return value;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

// "key v1 v2 ..." where each vi is a vertex index below n.
VertexSet parse_vertex_list(LineReader& reader, const std::vector<std::string>& tokens, int n) {
    VertexSet set = 0;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        int v = static_cast<int>(parse_int(reader, tokens[i], 0, n - 1));
        if ((set >> v) & 1u) reader.fail("repeated vertex " + tokens[i]);
        set |= static_cast<VertexSet>(1u << v);
    }
    return set;
}

std::string expect_keyword_line(LineReader& reader, const std::string& keyword) {
    std::string line = reader.next("'" + keyword + "'");
    if (line.rfind(keyword + " ", 0) != 0 && line != keyword)
        reader.fail("expected '" + keyword + "', got '" + line + "'");
    return line;
}

}  // namespace

std::string serialize_rule_list(const RuleList& list) {
    std::ostringstream out;
    out << "dpvc-rules 1\n";
    out << "d " << list.d << "\n";
    out << "beta " << format_double(list.beta) << "\n";
    out << "psi " << list.psi() << "\n";
    out << "count " << list.rules.size() << "\n";
    for (std::size_t i = 0; i < list.rules.size(); ++i) {
        const SubgraphBranchingRule& rule = list.rules[i];
        out << "rule " << i << "\n";
        out << "n " << rule.pattern.vertex_count() << "\n";
        out << "edges";
        for (auto [u, v] : rule.pattern.edges()) out << ' ' << u << '-' << v;
        out << "\n";
        out << "red" << format_vertex_list(rule.red) << "\n";
        for (VertexSet branch : rule.branches) out << "branch" << format_vertex_list(branch) << "\n";
        out << "end\n";
    }
    return out.str();
}

RuleList parse_rule_list(const std::string& text) {
    LineReader reader(text);
    if (reader.next("header") != "dpvc-rules 1") reader.fail("bad or missing format header");

    auto keyed_value = [&reader](const std::string& key) {
        auto tokens = split(expect_keyword_line(reader, key));
        if (tokens.size() != 2) reader.fail("expected '" + key + " <value>'");
        return tokens[1];
    };

    RuleList list;
    list.d = static_cast<int>(parse_int(reader, keyed_value("d"), 2, 64));
    {
        const std::string token = keyed_value("beta");
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), list.beta);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            reader.fail("bad beta value '" + token + "'");
        if (list.beta < 1.0) reader.fail("beta below 1");
    }
    const int psi = static_cast<int>(parse_int(reader, keyed_value("psi"), 0, kMaxVertices));
    const long count = parse_int(reader, keyed_value("count"), 0, 1000000);

    for (long i = 0; i < count; ++i) {
        auto rule_tokens = split(expect_keyword_line(reader, "rule"));
        if (rule_tokens.size() != 2 || parse_int(reader, rule_tokens[1], 0, count - 1) != i)
            reader.fail("expected 'rule " + std::to_string(i) + "'");
        const int n = static_cast<int>(parse_int(reader, keyed_value("n"), 1, kMaxVertices));

        SmallGraph pattern(n);
        auto edge_tokens = split(expect_keyword_line(reader, "edges"));
        for (std::size_t t = 1; t < edge_tokens.size(); ++t) {
            const std::string& tok = edge_tokens[t];
            const std::size_t dash = tok.find('-');
            if (dash == std::string::npos) reader.fail("bad edge token '" + tok + "'");
            int u = static_cast<int>(parse_int(reader, tok.substr(0, dash), 0, n - 1));
            int v = static_cast<int>(parse_int(reader, tok.substr(dash + 1), 0, n - 1));
            if (u == v) reader.fail("self-loop in edge token '" + tok + "'");
            if (pattern.has_edge(u, v)) reader.fail("duplicate edge '" + tok + "'");
            pattern.add_edge(u, v);
        }

        auto red_tokens = split(expect_keyword_line(reader, "red"));
        VertexSet red = parse_vertex_list(reader, red_tokens, n);

        std::vector<VertexSet> branches;
        for (;;) {
            std::string line = reader.next("'branch' or 'end'");
            if (line == "end") break;
            auto tokens = split(line);
            if (tokens.empty() || tokens[0] != "branch")
                reader.fail("expected 'branch' or 'end', got '" + line + "'");
            VertexSet branch = parse_vertex_list(reader, tokens, n);
            if (branch == 0) reader.fail("empty branch");
            branches.push_back(branch);
        }
        if (branches.empty()) reader.fail("rule without branches");
        list.rules.push_back(make_rule_keep_order(std::move(pattern), red, std::move(branches)));
    }
    if (list.psi() != psi) reader.fail("psi header does not match the rules");
    return list;
}

void write_rule_file(const std::string& path, const RuleList& list) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write rule file: " + path);
    out << serialize_rule_list(list);
    if (!out) throw std::runtime_error("failed writing rule file: " + path);
}

namespace {

std::string slurp(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(std::string("cannot read ") + what + ": " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

RuleList read_rule_file(const std::string& path) {
    return parse_rule_list(slurp(path, "rule file"));
}

std::string serialize_graph(const HostGraph& g) {
    std::ostringstream out;
    out << g.capacity() << ' ' << g.edge_count() << "\n";
    for (int u : g.vertices())
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << "\n";
    return out.str();
}

HostGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0 || n > 1000000)
        throw ParseError("graph file: bad 'n m' header");
    HostGraph g(static_cast<int>(n));
    std::set<std::pair<long, long>> seen;
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("graph file: missing edge line");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("graph file: endpoint out of range in edge " + std::to_string(u) +
                             " " + std::to_string(v));
        if (u == v) throw ParseError("graph file: self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ParseError("graph file: duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw ParseError("graph file: trailing data after the edge list");
    return g;
}

void write_graph_file(const std::string& path, const HostGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << serialize_graph(g);
}

HostGraph read_graph_file(const std::string& path) {
    return parse_graph(slurp(path, "graph file"));
}

void append_stats_row(const std::string& path, int d, double beta, int rules, double seconds) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to stats file: " + path);
    if (fresh) out << "d,beta,rules,seconds\n";
    char sec[32];
    std::snprintf(sec, sizeof(sec), "%.3f", seconds);
    out << d << ',' << format_double(beta) << ',' << rules << ',' << sec << "\n";
}

}  // namespace dpvc
