#include "betticone/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace betticone {

namespace {

struct Grid {
    long toprow = 0;
    std::vector<std::vector<std::string>> tokens;  // "-" marks a zero cell
};

Grid to_grid(const BettiDiagram& d, std::optional<long> toprow) {
    Grid g;
    if (d.is_zero()) {
        g.toprow = toprow.value_or(0);
        return g;
    }
    g.toprow = toprow ? *toprow : std::min(0L, d.top_row());
    if (g.toprow > d.top_row())
        throw std::invalid_argument("toprow cuts off nonzero entries");
    const long rows = d.reg() - g.toprow + 1;
    const long cols = d.pdim() + 1;
    g.tokens.assign(rows, std::vector<std::string>(cols, "-"));
    for (const auto& [key, value] : d.cells()) {
        const long row = key.second - key.first - g.toprow;
        g.tokens[row][key.first] = format_rational(value);
    }
    return g;
}

BettiDiagram from_grid(const Grid& g) {
    BettiDiagram d;
    for (std::size_t r = 0; r < g.tokens.size(); ++r)
        for (std::size_t c = 0; c < g.tokens[r].size(); ++c) {
            const std::string& tok = g.tokens[r][c];
            if (tok == "-") continue;
            d.set(static_cast<long>(c), g.toprow + static_cast<long>(r), parse_rational(tok));
        }
    return d;
}

}  // namespace

std::string format_diagram_text(const BettiDiagram& d, std::optional<long> toprow) {
    Grid g = to_grid(d, toprow);
    const std::size_t rows = g.tokens.size();
    const std::size_t cols = rows == 0 ? 0 : g.tokens[0].size();
    std::ostringstream out;
    out << "rows " << rows << " cols " << cols << " toprow " << g.toprow << "\n";
    std::vector<std::size_t> width(cols, 0);
    for (const auto& line : g.tokens)
        for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : g.tokens) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c > 0) out << ' ';
            out << std::string(width[c] - line[c].size(), ' ') << line[c];
        }
        out << "\n";
    }
    return out.str();
}

BettiDiagram parse_diagram_text(const std::string& text) {
    std::istringstream in(text);
    std::string kw_rows, kw_cols, kw_toprow;
    long rows = 0, cols = 0;
    Grid g;
    if (!(in >> kw_rows >> rows >> kw_cols >> cols >> kw_toprow >> g.toprow) ||
        kw_rows != "rows" || kw_cols != "cols" || kw_toprow != "toprow")
        throw std::invalid_argument("malformed diagram header");
    if (rows < 0 || cols < 0) throw std::invalid_argument("malformed diagram header");
    g.tokens.assign(rows, std::vector<std::string>(cols));
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c)
            if (!(in >> g.tokens[r][c]))
                throw std::invalid_argument("diagram body ends early");
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing content after diagram");
    return from_grid(g);
}

std::string format_diagram_json(const BettiDiagram& d, std::optional<long> toprow) {
    Grid g = to_grid(d, toprow);
    nlohmann::ordered_json j;
    j["toprow"] = g.toprow;
    j["table"] = g.tokens;
    return j.dump();
}

BettiDiagram parse_diagram_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("toprow") || !j.contains("table"))
        throw std::invalid_argument("diagram JSON needs toprow and table");
    if (!j["toprow"].is_number_integer())
        throw std::invalid_argument("toprow must be an integer");
    Grid g;
    g.toprow = j["toprow"].get<long>();
    if (!j["table"].is_array()) throw std::invalid_argument("table must be an array of rows");
    for (const auto& row : j["table"]) {
        if (!row.is_array()) throw std::invalid_argument("table must be an array of rows");
        std::vector<std::string> line;
        for (const auto& cell : row) {
            if (cell.is_string()) {
                const std::string s = cell.get<std::string>();
                line.push_back(s == "0" ? "-" : s);
            } else if (cell.is_number_integer()) {
                long v = cell.get<long>();
                line.push_back(v == 0 ? "-" : std::to_string(v));
            } else {
                throw std::invalid_argument("table cells must be strings or integers");
            }
        }
        g.tokens.push_back(std::move(line));
    }
    for (const auto& line : g.tokens)
        if (line.size() != g.tokens[0].size())
            throw std::invalid_argument("table rows have unequal lengths");
    return from_grid(g);
}

BettiDiagram parse_diagram(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return parse_diagram_json(text);
        return parse_diagram_text(text);
    }
    throw std::invalid_argument("empty diagram input");
}

BettiDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

DeterminingVector parse_vector_literal(const std::string& text) {
    const auto bad = [&]() {
        return std::invalid_argument("invalid determining vector '" + text + "'");
    };
    std::size_t b = text.find_first_not_of(" \t\r\n");
    std::size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos || text[b] != '(' || text[e] != ')') throw bad();
    std::string body = text.substr(b + 1, e - b - 1);
    std::vector<long> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = body.find(',', pos);
        std::string piece = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        piece.erase(std::remove_if(piece.begin(), piece.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    piece.end());
        if (piece.empty()) throw bad();
        try {
            std::size_t used = 0;
            entries.push_back(std::stol(piece, &used));
            if (used != piece.size()) throw bad();
        } catch (const std::logic_error&) {
            throw bad();
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return DeterminingVector(entries);
}

std::string format_vector_literal(const DeterminingVector& a) {
    std::ostringstream out;
    out << '(';
    const std::vector<long> entries = a.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out << ',';
        out << entries[i];
    }
    out << ')';
    return out.str();
}

}  // namespace betticone
