#include "oddcrit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "oddcrit/errors.hpp"

namespace oddcrit {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t data_bytes(std::size_t n) {
    const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
    return (bits + 5) / 6;
}


std::string_view trim_line_end(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    return text;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    const std::string_view body = trim_line_end(text.substr(base));
    auto at = [&](std::size_t i) {
        if (i >= body.size()) throw ParseError("graph6 input truncated", base + i);
        const char c = body[i];
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range [63,126]", base + i);
        return c - kBias;
    };
    auto fail_at = [&](std::size_t i) { return base + i; };

    if (body.empty()) throw ParseError("empty graph6 string", base);
    std::size_t n = 0;
    std::size_t pos = 0;
    if (body[0] != '~') {
        n = static_cast<std::size_t>(at(0));
        pos = 1;
    } else if (body.size() > 1 && body[1] != '~') {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(at(i));
        if (n < 63) throw ParseError("graph6 size uses long form for n < 63", fail_at(0));
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(at(i));
        if (n < 258048) throw ParseError("graph6 size uses 8-byte form for n < 258048", fail_at(0));
        pos = 8;
    }

    for (std::size_t i = pos; i < body.size(); ++i) at(i);
    const std::size_t expected = data_bytes(n);
    if (body.size() != pos + expected)
        throw ParseError("graph6 length mismatch: expected " + std::to_string(expected) + " data bytes for n = " +
                             std::to_string(n),
                         fail_at(std::min(body.size(), pos + expected)));

    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++bit) {
            const int byte = at(pos + bit / 6);
            if (byte & (1 << (5 - bit % 6))) g.add_edge(u, v);
        }
    }
    if (bit % 6 != 0) {
        const std::size_t last = pos + bit / 6;
        const int byte = at(last);
        if (byte & ((1 << (6 - bit % 6)) - 1)) throw ParseError("graph6 nonzero padding bits", fail_at(last));
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::size_t values[2];
        std::size_t count = 0;
        std::size_t i = 0;
        while (true) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            if (i >= line.size()) break;
            if (count == 2) throw ParseError("edge list line has more than two fields", line_start + i);
            const char* first = line.data() + i;
            const char* last = line.data() + line.size();
            auto [ptr, ec] = std::from_chars(first, last, values[count]);
            if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
                throw ParseError("edge list expects nonnegative integers", line_start + i);
            i += static_cast<std::size_t>(ptr - first);
            ++count;
        }
        if (count == 1) throw ParseError("edge list line has a single field", line_start);
        if (count == 2) {
            if (values[0] == values[1]) throw ParseError("edge list contains a self-loop", line_start);
            edges.emplace_back(values[0], values[1]);
            n = std::max({n, values[0] + 1, values[1] + 1});
        }
        line_start = line_end + 1;
    }
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(std::string_view text) {
    // Blank and '#' lines are skipped when sniffing the format.
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        const std::size_t end = std::min(text.find('\n', line_start), text.size());
        const std::string_view line = text.substr(line_start, end - line_start);
        const std::size_t c = line.find_first_not_of(" \t\r");
        if (c != std::string_view::npos && line[c] != '#') {
            const char lead = line[c];
            if (lead == '>' || (lead >= 63 && lead <= 126)) {
                try {
                    return parse_graph6(text.substr(line_start + c));
                } catch (const ParseError& e) {
                    throw ParseError(e.message(), line_start + c + e.offset());
                }
            }
            break;
        }
        line_start = end + 1;
    }
    return parse_edge_list(text);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

std::vector<NamedGraph> parse_corpus(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    // Skip leading comment lines when sniffing the format.
    std::size_t probe = 0;
    while (probe < text.size()) {
        const std::size_t end = std::min(text.find('\n', probe), text.size());
        const std::string_view line = text.substr(probe, end - probe);
        const std::size_t c = line.find_first_not_of(" \t\r");
        if (c != std::string_view::npos && line[c] != '#') {
            first = probe + c;
            break;
        }
        probe = end + 1;
    }
    const char lead = probe < text.size() ? text[first] : '#';
    if (!(lead == '>' || (lead >= 63 && lead <= 126))) {
        return {NamedGraph{"line:1", parse_edge_list(text)}};
    }

    std::vector<NamedGraph> corpus;
    std::size_t line_start = 0;
    std::size_t line_no = 1;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = trim_line_end(text.substr(line_start, line_end - line_start));
        const std::size_t lead_ws = line.find_first_not_of(" \t");
        if (lead_ws != std::string_view::npos && line[lead_ws] != '#') {
            line = line.substr(lead_ws);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
            try {
                corpus.push_back({"line:" + std::to_string(line_no), parse_graph6(line)});
            } catch (const ParseError& e) {
                throw ParseError("corpus line " + std::to_string(line_no) + ": " + e.message(),
                                 line_start + lead_ws + e.offset());
            }
        }
        line_start = line_end + 1;
        ++line_no;
    }
    return corpus;
}

std::vector<NamedGraph> read_corpus_file(const std::string& path) { return parse_corpus(slurp(path)); }

}  // namespace oddcrit
