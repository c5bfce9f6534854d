#include "boxdom/graph6.hpp"

#include <fstream>
#include <string>

#include "boxdom/errors.hpp"

namespace boxdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(char c, std::string_view word) {
    int v = static_cast<unsigned char>(c);
    if (v < 63 || v > 126)
        throw MalformedGraph6("byte " + std::to_string(v) + " out of range in \"" +
                              std::string(word) + "\"");
    return v - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text, int max_n) {
    std::string_view word = text;
    while (!word.empty() && (word.back() == '\n' || word.back() == '\r')) word.remove_suffix(1);
    if (word.substr(0, kHeader.size()) == kHeader) word.remove_prefix(kHeader.size());
    if (word.empty()) throw MalformedGraph6("empty graph6 word");

    std::size_t pos = 0;
    long long n;
    if (word[0] != '~') {
        n = sixbits(word[0], word);
        pos = 1;
    } else {
        // Three-byte size, 18 bits.  (The six-byte form for n >= 2^18 is far
        // beyond the product cap and is rejected as oversize below.)
        if (word.size() < 4) throw MalformedGraph6("truncated size in \"" + std::string(word) + "\"");
        if (word[1] == '~')
            throw Oversize("graph6 word encodes a graph beyond the supported size");
        n = 0;
        for (pos = 1; pos <= 3; ++pos) n = (n << 6) | sixbits(word[pos], word);
    }
    if (n > max_n)
        throw Oversize("graph on " + std::to_string(n) + " vertices exceeds cap of " +
                       std::to_string(max_n));

    const long long bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (word.size() - pos != bytes)
        throw MalformedGraph6("word \"" + std::string(word) + "\" has " +
                              std::to_string(word.size() - pos) + " data bytes, expected " +
                              std::to_string(bytes));

    Graph g(static_cast<int>(n));
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int group = sixbits(word[pos + static_cast<std::size_t>(k / 6)], word);
            if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits after the last edge bit must be zero.
    for (; k < static_cast<long long>(bytes) * 6; ++k) {
        int group = sixbits(word[pos + static_cast<std::size_t>(k / 6)], word);
        if ((group >> (5 - k % 6)) & 1)
            throw MalformedGraph6("nonzero padding in \"" + std::string(word) + "\"");
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path, int max_n) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        try {
            out.push_back(parse_graph6(sv, max_n));
        } catch (const MalformedGraph6& e) {
            throw MalformedGraph6(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace boxdom
