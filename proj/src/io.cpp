#include "hyperpath/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace hyperpath {

namespace {

struct Token {
    std::string text;
    int line;
    int column;  // 1-based
};

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

// Tokens of one line, comments stripped.
std::vector<Token> tokenize(const std::string& line, int line_no, bool hash_comments) {
    std::vector<Token> out;
    std::size_t end = hash_comments ? std::min(line.size(), line.find('#')) : line.size();
    std::size_t i = 0;
    while (i < end) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < end && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

void require_plain_token(const Token& t) {
    for (unsigned char c : t.text)
        if (c <= ' ')
            throw SyntaxError(t.line, t.column, "control character in token");
}

}  // namespace

DirectedHypergraph parse_dhg(const std::string& text) {
    std::vector<VertexId> names;
    std::unordered_map<VertexId, int> index;
    bool declared = false;
    bool first_content = true;
    std::vector<ArcSpec> specs;

    auto vertex_of = [&](const Token& t) {
        require_plain_token(t);
        auto it = index.find(t.text);
        if (it != index.end()) return;
        if (declared)
            throw UnknownVertex("line " + std::to_string(t.line) + ", column " +
                                std::to_string(t.column) + ": unknown vertex '" + t.text + "'");
        index.emplace(t.text, static_cast<int>(names.size()));
        names.push_back(t.text);
    };

    const std::vector<std::string> lines = split_lines(text);
    for (int line_no = 1; line_no <= static_cast<int>(lines.size()); ++line_no) {
        std::vector<Token> tokens = tokenize(lines[static_cast<std::size_t>(line_no - 1)], line_no, true);
        if (tokens.empty()) continue;

        if (tokens.front().text == "vertices:") {
            if (!first_content)
                throw SyntaxError(tokens.front().line, tokens.front().column,
                                  "the vertex header must be the first content line");
            declared = true;
            first_content = false;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                require_plain_token(tokens[i]);
                if (tokens[i].text == "->")
                    throw SyntaxError(tokens[i].line, tokens[i].column,
                                      "'->' cannot name a vertex");
                if (!index.emplace(tokens[i].text, static_cast<int>(names.size())).second)
                    throw SyntaxError(tokens[i].line, tokens[i].column,
                                      "duplicate vertex '" + tokens[i].text + "'");
                names.push_back(tokens[i].text);
            }
            continue;
        }
        first_content = false;

        int arrow = -1;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (tokens[i].text != "->") continue;
            if (arrow >= 0)
                throw SyntaxError(tokens[i].line, tokens[i].column, "a second '->' in one arc");
            arrow = static_cast<int>(i);
        }
        if (arrow < 0)
            throw SyntaxError(line_no, tokens.front().column, "an arc needs '->'");

        ArcSpec spec;
        for (int i = 0; i < arrow; ++i) {
            vertex_of(tokens[static_cast<std::size_t>(i)]);
            spec.tails.push_back(tokens[static_cast<std::size_t>(i)].text);
        }
        for (std::size_t i = static_cast<std::size_t>(arrow) + 1; i < tokens.size(); ++i) {
            vertex_of(tokens[i]);
            spec.heads.push_back(tokens[i].text);
        }
        if (spec.tails.empty())
            throw EmptySide("line " + std::to_string(line_no) + ": the tail side is empty");
        if (spec.heads.empty())
            throw EmptySide("line " + std::to_string(line_no) + ": the head side is empty");

        auto unique_sorted = [](std::vector<VertexId> v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return v;
        };
        std::vector<VertexId> ts = unique_sorted(spec.tails);
        std::vector<VertexId> hs = unique_sorted(spec.heads);
        std::vector<VertexId> both;
        std::set_intersection(ts.begin(), ts.end(), hs.begin(), hs.end(), std::back_inserter(both));
        if (!both.empty())
            throw DisjointnessViolation("line " + std::to_string(line_no) + ": vertex '" +
                                        both.front() + "' appears on both sides");
        specs.push_back(std::move(spec));
    }
    return DirectedHypergraph::build(names, specs);
}

std::string serialize_dhg(const DirectedHypergraph& d) {
    std::ostringstream out;
    if (d.vertex_count() > 0) {
        out << "vertices:";
        for (const VertexId& name : d.vertex_names()) out << ' ' << name;
        out << '\n';
    }
    for (const Hyperarc& a : d.arcs()) {
        bool first = true;
        for (int v : a.tails) {
            if (!first) out << ' ';
            out << d.vertex_name(v);
            first = false;
        }
        out << " ->";
        for (int v : a.heads) out << ' ' << d.vertex_name(v);
        out << '\n';
    }
    return out.str();
}

namespace {

int parse_int(const Token& t) {
    int value = 0;
    const char* begin = t.text.data();
    const char* end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw SyntaxError(t.line, t.column, "expected an integer, got '" + t.text + "'");
    return value;
}

}  // namespace

CnfFormula parse_cnf(const std::string& text) {
    std::vector<Token> tokens;
    const std::vector<std::string> lines = split_lines(text);
    for (int line_no = 1; line_no <= static_cast<int>(lines.size()); ++line_no) {
        std::vector<Token> line_tokens =
            tokenize(lines[static_cast<std::size_t>(line_no - 1)], line_no, false);
        if (!line_tokens.empty() && line_tokens.front().text == "c") continue;
        tokens.insert(tokens.end(), line_tokens.begin(), line_tokens.end());
    }

    if (tokens.size() < 4 || tokens[0].text != "p" || tokens[1].text != "cnf")
        throw SyntaxError(tokens.empty() ? 1 : tokens[0].line, tokens.empty() ? 1 : tokens[0].column,
                          "expected a 'p cnf <vars> <clauses>' header");
    const int declared_vars = parse_int(tokens[2]);
    const int declared_clauses = parse_int(tokens[3]);
    if (declared_vars < 0)
        throw SyntaxError(tokens[2].line, tokens[2].column, "negative variable count");
    if (declared_clauses < 0)
        throw SyntaxError(tokens[3].line, tokens[3].column, "negative clause count");

    CnfFormula f;
    f.num_vars = declared_vars;
    std::vector<int> clause;
    for (std::size_t i = 4; i < tokens.size(); ++i) {
        const int lit = parse_int(tokens[i]);
        if (lit == 0) {
            if (clause.size() != 3)
                throw NotThreeCnf("clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                  std::to_string(clause.size()) + " literals");
            if (static_cast<int>(f.clauses.size()) == declared_clauses)
                throw HeaderMismatch("more clauses than the declared " +
                                     std::to_string(declared_clauses));
            f.clauses.push_back({clause[0], clause[1], clause[2]});
            clause.clear();
            continue;
        }
        const int var = lit < 0 ? -lit : lit;
        if (var > declared_vars)
            throw HeaderMismatch("literal " + std::to_string(lit) + " is beyond the declared " +
                                 std::to_string(declared_vars) + " variables");
        clause.push_back(lit);
    }
    if (!clause.empty())
        throw SyntaxError(tokens.back().line, tokens.back().column, "unterminated clause");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw HeaderMismatch("found " + std::to_string(f.clauses.size()) +
                             " clauses, the header declared " + std::to_string(declared_clauses));
    return f;
}

UndirectedHypergraph parse_hg(const std::string& text) {
    std::vector<std::vector<VertexId>> edges;
    const std::vector<std::string> lines = split_lines(text);
    for (int line_no = 1; line_no <= static_cast<int>(lines.size()); ++line_no) {
        std::vector<Token> tokens =
            tokenize(lines[static_cast<std::size_t>(line_no - 1)], line_no, true);
        if (tokens.empty()) continue;
        std::vector<VertexId> edge;
        for (const Token& t : tokens) {
            require_plain_token(t);
            edge.push_back(t.text);
        }
        edges.push_back(std::move(edge));
    }
    return UndirectedHypergraph::from_edges(edges);
}

std::string serialize_hg(const UndirectedHypergraph& h) {
    std::ostringstream out;
    for (const auto& e : h.edges()) {
        bool first = true;
        for (int v : e) {
            if (!first) out << ' ';
            out << h.vertex_name(v);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

void common_sat_keys(std::ostringstream& out, const char* format, bool bounded_tail,
                     const VertexId& source, const VertexId& target, const CnfFormula& formula,
                     int original_vars, int original_clauses, const std::optional<int>& padding_var) {
    out << "format: " << format << '\n';
    out << "variant: " << (bounded_tail ? "bounded-tail" : "base") << '\n';
    out << "source: " << source << '\n';
    out << "target: " << target << '\n';
    out << "vars: " << formula.num_vars << '\n';
    out << "clauses: " << formula.clauses.size() << '\n';
    out << "original-vars: " << original_vars << '\n';
    out << "original-clauses: " << original_clauses << '\n';
    if (padding_var) out << "dummy-var: x" << *padding_var << '\n';
}

void family_lines(std::ostringstream& out, const char* key,
                  const std::vector<std::vector<VertexId>>& family) {
    for (const auto& set : family) {
        out << key << ':';
        for (const VertexId& v : set) out << ' ' << v;
        out << '\n';
    }
}

}  // namespace

std::string metadata_text(const SatInducedInstance& inst) {
    std::ostringstream out;
    common_sat_keys(out, "sat-induced", inst.bounded_tail, inst.source, inst.target, inst.formula,
                    inst.original_vars, inst.original_clauses, inst.padding_var);
    for (const auto& [pos, neg] : inst.variable_vertices)
        out << "var: " << pos << ' ' << neg << '\n';
    for (const VertexId& c : inst.clause_vertices) out << "clause: " << c << '\n';
    family_lines(out, "seed-path", inst.seed_paths);
    return out.str();
}

std::string metadata_text(const SatSeparatorInstance& inst) {
    std::ostringstream out;
    common_sat_keys(out, "sat-separator", inst.bounded_tail, inst.source, inst.target, inst.formula,
                    inst.original_vars, inst.original_clauses, inst.padding_var);
    out << "collector: " << inst.collector << '\n';
    for (std::size_t i = 0; i < inst.variable_vertices.size(); ++i)
        out << "var: " << inst.variable_vertices[i].first << ' ' << inst.variable_vertices[i].second
            << ' ' << inst.guard_vertices[i] << '\n';
    for (const VertexId& c : inst.clause_vertices) out << "clause: " << c << '\n';
    family_lines(out, "seed-separator", inst.seed_separators);
    return out.str();
}

std::string metadata_text(const TransversalMapping& m) {
    std::ostringstream out;
    out << "format: transversal\n";
    out << "source: " << m.source << '\n';
    out << "target: " << m.target << '\n';
    out << "vertices: " << m.hypergraph.vertex_count() << '\n';
    out << "edges: " << m.hypergraph.edge_count() << '\n';
    out << "final-arc: " << m.final_arc << '\n';
    for (int v = 0; v < m.hypergraph.vertex_count(); ++v)
        out << "vertex-arc: " << m.hypergraph.vertex_name(v) << ' '
            << m.vertex_arcs[static_cast<std::size_t>(v)] << '\n';
    return out.str();
}

}  // namespace hyperpath
