#include <cctype>
#include <optional>

#include "singtaut/graph.hpp"

namespace singtaut {
namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(head) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::optional<Int> parse_uint(const std::string& s) {
    if (s.empty() || s.size() > 18) return std::nullopt;
    Int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

DualGraph parse_graph(const std::string& text) {
    DualGraph g;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++line_no;
        pos = end + 1;

        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const auto& kw = toks[0];
        if (kw.text == "vertex") {
            if (toks.size() < 2) throw ParseError("expected vertex id", line_no, line.size() + 1);
            if (!valid_id(toks[1].text)) throw ParseError("invalid id '" + toks[1].text + "'", line_no, toks[1].column);
            std::optional<Int> b, genus;
            for (std::size_t k = 2; k < toks.size(); ++k) {
                const auto& t = toks[k];
                auto eq = t.text.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected key=value, got '" + t.text + "'", line_no, t.column);
                std::string key = t.text.substr(0, eq);
                auto val = parse_uint(t.text.substr(eq + 1));
                if (!val) throw ParseError("expected unsigned integer after '" + key + "='", line_no, t.column + eq + 1);
                if (key == "b") {
                    if (b) throw ParseError("repeated key 'b'", line_no, t.column);
                    if (*val == 0) throw ParseError("b must be positive", line_no, t.column + eq + 1);
                    b = val;
                } else if (key == "genus") {
                    if (genus) throw ParseError("repeated key 'genus'", line_no, t.column);
                    genus = val;
                } else {
                    throw ParseError("unknown key '" + key + "'", line_no, t.column);
                }
            }
            if (!b) throw ParseError("vertex '" + toks[1].text + "' is missing b=", line_no, kw.column);
            if (g.index_of(toks[1].text))
                throw ParseError("duplicate vertex id '" + toks[1].text + "'", line_no, toks[1].column);
            g.add_vertex(Vertex{toks[1].text, genus.value_or(0), *b});
        } else if (kw.text == "edge") {
            if (toks.size() != 3) {
                std::size_t col = toks.size() > 3 ? toks[3].column : line.size() + 1;
                throw ParseError("edge needs exactly two ids", line_no, col);
            }
            for (std::size_t k = 1; k <= 2; ++k) {
                if (!valid_id(toks[k].text))
                    throw ParseError("invalid id '" + toks[k].text + "'", line_no, toks[k].column);
                if (!g.index_of(toks[k].text))
                    throw ParseError("edge references unknown vertex '" + toks[k].text + "'", line_no, toks[k].column);
            }
            g.add_edge(toks[1].text, toks[2].text);
        } else {
            throw ParseError("unknown directive '" + kw.text + "'", line_no, kw.column);
        }
    }
    return g;
}

}  // namespace singtaut
