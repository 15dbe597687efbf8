#include <rf/errors.hpp>
#include <rf/generators.hpp>
#include <rf/io.hpp>

#include <json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rf {

namespace {

struct Token {
    std::string text;
    int column; // 1-based
};

struct Line {
    int number;
    std::vector<Token> tokens;
};

// Non-empty lines with '#' comments stripped.
std::vector<Line> tokenize(std::istream & in)
{
    std::vector<Line> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < raw.size() && ! std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
            i = j;
        }
        if (! line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

int to_int(const Token & t, int line)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected an integer, got '" + t.text + "'", line, t.column);
    return v;
}

struct Header {
    int n, m;
};

Header read_header(const std::vector<Line> & lines)
{
    if (lines.empty())
        throw ParseError("missing header 'n m'", 1, 1);
    const Line & h = lines[0];
    if (h.tokens.size() != 2)
        throw ParseError("header must be 'n m'", h.number, h.tokens[0].column);
    Header hd{to_int(h.tokens[0], h.number), to_int(h.tokens[1], h.number)};
    if (hd.n < 0)
        throw ParseError("negative vertex count", h.number, h.tokens[0].column);
    if (hd.m < 0)
        throw ParseError("negative edge count", h.number, h.tokens[1].column);
    if (static_cast<int>(lines.size()) - 1 != hd.m) {
        int line = lines.size() > static_cast<std::size_t>(hd.m) + 1 ? lines[hd.m + 1].number : lines.back().number + 1;
        throw ParseError("header announces " + std::to_string(hd.m) + " edges, found "
                + std::to_string(lines.size() - 1),
            line, 1);
    }
    return hd;
}

Edge read_pair(const Line & l, int n, std::size_t want_tokens)
{
    if (l.tokens.size() != want_tokens) {
        int col = l.tokens.size() > want_tokens ? l.tokens[want_tokens].column : l.tokens.back().column;
        throw ParseError("expected " + std::to_string(want_tokens) + " fields", l.number, col);
    }
    int u = to_int(l.tokens[0], l.number), v = to_int(l.tokens[1], l.number);
    if (u < 0 || u >= n)
        throw ParseError("vertex out of range", l.number, l.tokens[0].column);
    if (v < 0 || v >= n)
        throw ParseError("vertex out of range", l.number, l.tokens[1].column);
    if (u == v)
        throw ParseError("loop edge", l.number, l.tokens[1].column);
    return {u, v};
}

void add_checked(Graph & g, Edge e, const Line & l)
{
    if (g.adjacent(e.first, e.second))
        throw ParseError("duplicate edge", l.number, l.tokens[0].column);
    g.add_edge(e.first, e.second);
}

} // namespace

Graph read_edge_list(std::istream & in)
{
    auto lines = tokenize(in);
    Header hd = read_header(lines);
    Graph g(hd.n);
    for (std::size_t i = 1; i < lines.size(); ++i)
        add_checked(g, read_pair(lines[i], hd.n, 2), lines[i]);
    return g;
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    auto edges = g.edges();
    out << g.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view text, int line)
{
    while (! text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.starts_with(">>graph6<<"))
        text.remove_prefix(10);
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size())
            throw ParseError("truncated graph6", line, static_cast<int>(i) + 1);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character", line, static_cast<int>(i) + 1);
        return c - 63;
    };
    int n;
    if (text.empty())
        throw ParseError("empty graph6 line", line, 1);
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~')
            throw ParseError("graph6 sizes above 258047 are not supported", line, 2);
        n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    }
    else {
        n = byte(0);
        pos = 1;
    }
    Graph g(n);
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::size_t need = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != need)
        throw ParseError("graph6 length does not match n = " + std::to_string(n), line,
            static_cast<int>(std::min(text.size(), need)) + 1);
    long long k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k) {
            int chunk = byte(pos + static_cast<std::size_t>(k / 6));
            if (chunk >> (5 - k % 6) & 1)
                g.add_edge(u, v);
        }
    for (; k % 6 != 0; ++k)
        if (byte(pos + static_cast<std::size_t>(k / 6)) >> (5 - k % 6) & 1)
            throw ParseError("nonzero graph6 padding", line, static_cast<int>(pos + k / 6) + 1);
    return g;
}

std::string to_graph6(const Graph & g)
{
    int n = g.size();
    if (n > 258047)
        throw InputError("graph6 sizes above 258047 are not supported");
    std::string out;
    if (n < 63)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

std::vector<Graph> read_graph6(std::istream & in)
{
    std::vector<Graph> out;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (raw.empty() || raw == "\r")
            continue;
        out.push_back(parse_graph6(raw, line));
    }
    return out;
}

EdgeColoring read_coloring(std::istream & in)
{
    auto lines = tokenize(in);
    Header hd = read_header(lines);
    Graph host(hd.n), red(hd.n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line & l = lines[i];
        Edge e = read_pair(l, hd.n, 3);
        add_checked(host, e, l);
        const Token & c = l.tokens[2];
        if (c.text == "R" || c.text == "r")
            red.add_edge(e.first, e.second);
        else if (c.text != "B" && c.text != "b")
            throw ParseError("colour must be R or B", l.number, c.column);
    }
    return EdgeColoring(host, red);
}

void write_coloring(std::ostream & out, const EdgeColoring & c)
{
    auto edges = c.host().edges();
    out << c.size() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges)
        out << u << ' ' << v << ' ' << (c.is_red(u, v) ? 'R' : 'B') << '\n';
}

VertexMap read_json_map(std::istream & in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto locate = [&](std::size_t offset) {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            }
            else
                ++col;
        }
        return std::pair{line, col};
    };
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        auto [line, col] = locate(e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON map", line, col);
    }
    try {
        int source = j.at("source_n").get<int>();
        int target = j.at("target_n").get<int>();
        auto image = j.at("image").get<std::vector<int>>();
        if (static_cast<int>(image.size()) != source)
            throw ParseError("image length differs from source_n", 1, 1);
        return VertexMap(target, image);
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(std::string("bad JSON map: ") + e.what(), 1, 1);
    }
    catch (const InputError & e) {
        throw ParseError(std::string("bad JSON map: ") + e.what(), 1, 1);
    }
}

void write_json_map(std::ostream & out, const VertexMap & f)
{
    nlohmann::json j;
    j["source_n"] = f.source_n;
    j["target_n"] = f.target_n;
    j["image"] = f.image;
    out << j.dump() << '\n';
}

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string & path_or_spec)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(path_or_spec, ec)) {
        std::istringstream in(read_file(path_or_spec));
        if (path_or_spec.ends_with(".g6")) {
            auto gs = read_graph6(in);
            if (gs.size() != 1)
                throw InputError(path_or_spec + " must hold exactly one graph");
            return gs[0];
        }
        return read_edge_list(in);
    }
    return make_named(path_or_spec);
}

} // namespace rf
