#include "ramseylab/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ramseylab {

namespace {

// strict line scanner: single spaces, no stray whitespace, LF endings
struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line = 0;

    bool done() const { return pos >= text.size(); }

    std::string_view next_line() {
        ++line;
        if (done()) throw ParseError(line, "unexpected end of file");
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) throw ParseError(line, "missing newline");
        std::string_view out = text.substr(pos, nl - pos);
        if (out.find('\r') != std::string_view::npos)
            throw ParseError(line, "carriage return not allowed");
        pos = nl + 1;
        return out;
    }
};

std::vector<std::string_view> split_fields(std::string_view s, int line) {
    if (!s.empty() && (s.front() == ' ' || s.back() == ' '))
        throw ParseError(line, "stray leading or trailing space");
    std::vector<std::string_view> out;
    while (!s.empty()) {
        auto sp = s.find(' ');
        std::string_view tok = s.substr(0, sp);
        if (tok.empty()) throw ParseError(line, "double space");
        out.push_back(tok);
        s = sp == std::string_view::npos ? std::string_view{} : s.substr(sp + 1);
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, int line) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "bad integer '" + std::string(tok) + "'");
    return value;
}

void expect_keyword(std::string_view got, std::string_view want, int line) {
    if (got != want)
        throw ParseError(line, "expected '" + std::string(want) + "', got '" + std::string(got) + "'");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

}  // namespace

std::string write_coloring(const Coloring& c) {
    std::uint64_t assigned = 0;
    for (std::int32_t col : c.colors)
        if (col != Coloring::kUnassigned) ++assigned;
    std::string out = "HRC1\n";
    out += "r " + std::to_string(c.r) + " n " + std::to_string(c.n) + " k " + std::to_string(c.k) +
           " m " + std::to_string(assigned) + "\n";
    if (c.n >= c.r) {
        auto subset = first_colex_subset(c.r);
        std::uint64_t rank = 0;
        do {
            if (c.colors[rank] != Coloring::kUnassigned) {
                for (Vertex v : subset) {
                    out += std::to_string(v);
                    out += ' ';
                }
                out += std::to_string(c.colors[rank]);
                out += '\n';
            }
            ++rank;
        } while (next_colex_subset(subset, c.n));
    }
    return out;
}

Coloring parse_coloring(std::string_view text) {
    LineReader reader{text};
    expect_keyword(reader.next_line(), "HRC1", reader.line);
    auto header = split_fields(reader.next_line(), reader.line);
    if (header.size() != 8) throw ParseError(reader.line, "header must be 'r # n # k # m #'");
    expect_keyword(header[0], "r", reader.line);
    expect_keyword(header[2], "n", reader.line);
    expect_keyword(header[4], "k", reader.line);
    expect_keyword(header[6], "m", reader.line);
    const std::int64_t r = parse_int(header[1], reader.line);
    const std::int64_t n = parse_int(header[3], reader.line);
    const std::int64_t k = parse_int(header[5], reader.line);
    const std::int64_t m = parse_int(header[7], reader.line);
    if (r < 2 || n < 0 || k < 1) throw ParseError(reader.line, "bad header values");

    Coloring c;
    try {
        c = Coloring(static_cast<int>(r), static_cast<int>(n), static_cast<int>(k));
    } catch (const std::exception& e) {
        throw ParseError(reader.line, e.what());
    }
    if (m < 0 || static_cast<std::uint64_t>(m) > c.edge_count())
        throw ParseError(reader.line, "assigned count out of range");

    std::int64_t prev_rank = -1;
    for (std::int64_t i = 0; i < m; ++i) {
        auto fields = split_fields(reader.next_line(), reader.line);
        if (fields.size() != static_cast<std::size_t>(r) + 1)
            throw ParseError(reader.line, "expected " + std::to_string(r) + " vertices and a color");
        std::vector<Vertex> verts(static_cast<std::size_t>(r));
        for (std::int64_t j = 0; j < r; ++j) {
            std::int64_t v = parse_int(fields[static_cast<std::size_t>(j)], reader.line);
            if (v < 0 || v >= n) throw ParseError(reader.line, "vertex out of range");
            verts[static_cast<std::size_t>(j)] = static_cast<Vertex>(v);
        }
        for (std::int64_t j = 1; j < r; ++j)
            if (verts[static_cast<std::size_t>(j)] <= verts[static_cast<std::size_t>(j - 1)])
                throw ParseError(reader.line, "vertices must be strictly ascending");
        std::int64_t color = parse_int(fields.back(), reader.line);
        if (color < 0 || color >= k) throw ParseError(reader.line, "color out of range");
        std::int64_t rank = static_cast<std::int64_t>(colex_rank(verts, static_cast<int>(n)));
        if (rank <= prev_rank) throw ParseError(reader.line, "edges must be in colex order");
        prev_rank = rank;
        c.colors[static_cast<std::uint64_t>(rank)] = static_cast<std::int32_t>(color);
    }
    if (!reader.done()) throw ParseError(reader.line + 1, "trailing content");
    return c;
}

void save_coloring(const std::filesystem::path& path, const Coloring& c) {
    write_file(path, write_coloring(c));
}

Coloring load_coloring(const std::filesystem::path& path) { return parse_coloring(read_file(path)); }

std::string write_design(const Design& d) {
    std::string out = "DES1\n";
    out += "v " + std::to_string(d.v) + " b " + std::to_string(d.block_size) + " m " +
           std::to_string(d.blocks.size()) + "\n";
    std::vector<std::pair<std::uint64_t, const std::vector<Vertex>*>> ordered;
    ordered.reserve(d.blocks.size());
    for (const auto& b : d.blocks) ordered.emplace_back(colex_rank(b, d.v), &b);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [rank, b] : ordered) {
        for (std::size_t i = 0; i < b->size(); ++i) {
            if (i) out += ' ';
            out += std::to_string((*b)[i]);
        }
        out += '\n';
    }
    return out;
}

Design parse_design(std::string_view text) {
    LineReader reader{text};
    expect_keyword(reader.next_line(), "DES1", reader.line);
    auto header = split_fields(reader.next_line(), reader.line);
    if (header.size() != 6) throw ParseError(reader.line, "header must be 'v # b # m #'");
    expect_keyword(header[0], "v", reader.line);
    expect_keyword(header[2], "b", reader.line);
    expect_keyword(header[4], "m", reader.line);
    const std::int64_t v = parse_int(header[1], reader.line);
    const std::int64_t bs = parse_int(header[3], reader.line);
    const std::int64_t m = parse_int(header[5], reader.line);
    if (v < 1 || bs < 1 || bs > v || m < 0) throw ParseError(reader.line, "bad header values");

    Design d;
    d.v = static_cast<int>(v);
    d.block_size = static_cast<int>(bs);
    std::int64_t prev_rank = -1;
    for (std::int64_t i = 0; i < m; ++i) {
        auto fields = split_fields(reader.next_line(), reader.line);
        if (fields.size() != static_cast<std::size_t>(bs))
            throw ParseError(reader.line, "expected " + std::to_string(bs) + " points");
        std::vector<Vertex> block(static_cast<std::size_t>(bs));
        for (std::int64_t j = 0; j < bs; ++j) {
            std::int64_t x = parse_int(fields[static_cast<std::size_t>(j)], reader.line);
            if (x < 0 || x >= v) throw ParseError(reader.line, "point out of range");
            block[static_cast<std::size_t>(j)] = static_cast<Vertex>(x);
        }
        for (std::int64_t j = 1; j < bs; ++j)
            if (block[static_cast<std::size_t>(j)] <= block[static_cast<std::size_t>(j - 1)])
                throw ParseError(reader.line, "points must be strictly ascending");
        std::int64_t rank = static_cast<std::int64_t>(colex_rank(block, static_cast<int>(v)));
        if (rank <= prev_rank) throw ParseError(reader.line, "blocks must be in colex order");
        prev_rank = rank;
        d.blocks.push_back(std::move(block));
    }
    if (!reader.done()) throw ParseError(reader.line + 1, "trailing content");
    return d;
}

void save_design(const std::filesystem::path& path, const Design& d) {
    write_file(path, write_design(d));
}

Design load_design(const std::filesystem::path& path) { return parse_design(read_file(path)); }

std::filesystem::path catalog_dir() {
    if (const char* env = std::getenv("RAMSEYLAB_CATALOG")) return env;
#ifdef RAMSEYLAB_DEFAULT_CATALOG
    return RAMSEYLAB_DEFAULT_CATALOG;
#else
    return "data/catalog";
#endif
}

Coloring load_catalog_coloring(std::string_view name) {
    return load_coloring(catalog_dir() / (std::string(name) + ".hrc"));
}

}  // namespace ramseylab
