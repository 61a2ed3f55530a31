#include "strongcolor/io.hpp"

#include "strongcolor/errors.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace strongcolor {

namespace {

// Pulls the next non-comment, non-blank line; false at end of input.
bool next_line(std::istream& in, std::string& line)
{
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos)
            continue;
        if (line[i] == '#')
            continue;
        return true;
    }
    return false;
}

std::vector<long> parse_ints(const std::string& line, const char* what)
{
    std::istringstream is(line);
    std::vector<long> out;
    long v;
    while (is >> v)
        out.push_back(v);
    std::string rest;
    if (is.bad() || (is.clear(), is >> rest))
        throw ParseError(std::string("malformed ") + what + " line: \"" + line + "\"");
    return out;
}

long expect_count(const std::vector<long>& vals, size_t n, const char* what,
                  const std::string& line)
{
    if (vals.size() != n)
        throw ParseError(std::string("expected ") + std::to_string(n) + " fields in "
            + what + " line: \"" + line + "\"");
    return vals[0];
}

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    return in;
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open file for writing: " + path);
    return out;
}

} // namespace

Graph read_graph(std::istream& in)
{
    std::string line;
    if (!next_line(in, line))
        throw ParseError("empty graph file");
    std::istringstream head(line);
    std::string tag;
    long n = -1, m = -1;
    std::string rest;
    if (!(head >> tag >> n >> m) || tag != "p" || (head >> rest))
        throw ParseError("bad graph header: \"" + line + "\"");
    if (n < 0 || m < 0)
        throw ParseError("negative count in graph header: \"" + line + "\"");
    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!next_line(in, line))
            throw ParseError("graph file ends after " + std::to_string(i) + " of "
                + std::to_string(m) + " edges");
        auto vals = parse_ints(line, "edge");
        if (vals.size() != 2)
            throw ParseError("expected 2 fields in edge line: \"" + line + "\"");
        long u = vals[0], v = vals[1];
        if (u < 0 || v < 0 || u >= v || v >= n)
            throw ParseError("edge line must satisfy 0 <= u < v < n: \"" + line + "\"");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const PreconditionError& e) {
            throw ParseError(e.what());
        }
    }
    if (next_line(in, line))
        throw ParseError("trailing content after edge list: \"" + line + "\"");
    return g;
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
}

BlockPartition read_partition(std::istream& in)
{
    std::vector<std::vector<int>> blocks;
    std::string line;
    while (next_line(in, line)) {
        auto vals = parse_ints(line, "partition");
        std::vector<int> block;
        block.reserve(vals.size());
        for (long v : vals) {
            if (v < 0)
                throw ParseError("negative vertex id in partition line: \"" + line + "\"");
            block.push_back(static_cast<int>(v));
        }
        blocks.push_back(std::move(block));
    }
    try {
        return BlockPartition(std::move(blocks));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void write_partition(std::ostream& out, const BlockPartition& p)
{
    for (int b = 0; b < p.block_count(); ++b) {
        const auto& block = p.block(b);
        for (size_t i = 0; i < block.size(); ++i)
            out << block[i] << (i + 1 == block.size() ? "" : " ");
        out << "\n";
    }
}

StrongColoring read_coloring(std::istream& in)
{
    std::vector<std::pair<long, long>> pairs;
    long max_vertex = -1;
    std::string line;
    while (next_line(in, line)) {
        auto vals = parse_ints(line, "coloring");
        if (vals.size() != 2)
            throw ParseError("expected 2 fields in coloring line: \"" + line + "\"");
        if (vals[0] < 0 || vals[1] < 0)
            throw ParseError("negative value in coloring line: \"" + line + "\"");
        pairs.emplace_back(vals[0], vals[1]);
        max_vertex = std::max(max_vertex, vals[0]);
    }
    StrongColoring c;
    c.color.assign(static_cast<size_t>(max_vertex + 1), -1);
    for (auto [v, col] : pairs) {
        if (c.color[static_cast<size_t>(v)] != -1)
            throw ParseError("vertex " + std::to_string(v) + " colored twice");
        c.color[static_cast<size_t>(v)] = static_cast<int>(col);
    }
    for (size_t v = 0; v < c.color.size(); ++v)
        if (c.color[v] == -1)
            throw ParseError("vertex " + std::to_string(v) + " missing from coloring");
    return c;
}

void write_coloring(std::ostream& out, const StrongColoring& c)
{
    for (size_t v = 0; v < c.color.size(); ++v)
        out << v << " " << c.color[v] << "\n";
}

TripartiteInstance read_tripartite(std::istream& in)
{
    std::string line;
    if (!next_line(in, line))
        throw ParseError("empty tripartite file");
    std::istringstream head(line);
    std::string tag, rest;
    long n = -1;
    if (!(head >> tag >> n) || tag != "t" || (head >> rest))
        throw ParseError("bad tripartite header: \"" + line + "\"");
    if (n < 0)
        throw ParseError("negative part size in tripartite header");
    std::vector<std::pair<int, int>> edges;
    while (next_line(in, line)) {
        auto vals = parse_ints(line, "cross-edge");
        if (vals.size() != 2)
            throw ParseError("expected 2 fields in cross-edge line: \"" + line + "\"");
        if (vals[0] < 0 || vals[1] < 0 || vals[0] >= 3 * n || vals[1] >= 3 * n)
            throw ParseError("cross-edge endpoint out of range: \"" + line + "\"");
        edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
    }
    try {
        return TripartiteInstance::from_edges(static_cast<int>(n), edges);
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

void write_tripartite(std::ostream& out, const TripartiteInstance& t)
{
    out << "t " << t.part_size << "\n";
    for (auto [u, v] : t.graph.edges())
        out << u << " " << v << "\n";
}

void write_factor(std::ostream& out, const TriangleFactor& f)
{
    for (const auto& tri : f.triangles)
        out << tri[0] << " " << tri[1] << " " << tri[2] << "\n";
}

Graph read_graph_file(const std::string& path)
{
    auto in = open_in(path);
    return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g)
{
    auto out = open_out(path);
    write_graph(out, g);
}

BlockPartition read_partition_file(const std::string& path)
{
    auto in = open_in(path);
    return read_partition(in);
}

void write_partition_file(const std::string& path, const BlockPartition& p)
{
    auto out = open_out(path);
    write_partition(out, p);
}

StrongColoring read_coloring_file(const std::string& path)
{
    auto in = open_in(path);
    return read_coloring(in);
}

void write_coloring_file(const std::string& path, const StrongColoring& c)
{
    auto out = open_out(path);
    write_coloring(out, c);
}

TripartiteInstance read_tripartite_file(const std::string& path)
{
    auto in = open_in(path);
    return read_tripartite(in);
}

void write_tripartite_file(const std::string& path, const TripartiteInstance& t)
{
    auto out = open_out(path);
    write_tripartite(out, t);
}

void write_factor_file(const std::string& path, const TriangleFactor& f)
{
    auto out = open_out(path);
    write_factor(out, f);
}

} // namespace strongcolor
