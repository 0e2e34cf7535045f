#pragma once

#include <optional>
#include <string>

#include "betticone/diagram.hpp"
#include "betticone/koszul.hpp"

namespace betticone {

// Text form: a header line "rows R cols C toprow T" followed by R lines of
// C whitespace-separated tokens, each an integer, a fraction p/q in lowest
// terms, or "-" for zero.  The first data line is row T.
std::string format_diagram_text(const BettiDiagram& d, std::optional<long> toprow = {});
BettiDiagram parse_diagram_text(const std::string& text);

// JSON form: {"toprow": T, "table": [[...], ...]} with the same tokens as
// strings ("0" is also accepted on input).
std::string format_diagram_json(const BettiDiagram& d, std::optional<long> toprow = {});
BettiDiagram parse_diagram_json(const std::string& text);

// Accepts either of the two forms, keyed off the first non-space character.
BettiDiagram parse_diagram(const std::string& text);
BettiDiagram load_diagram_file(const std::string& path);

// Literal form "(a0,a1,...,ac)".
DeterminingVector parse_vector_literal(const std::string& text);
std::string format_vector_literal(const DeterminingVector& a);

}  // namespace betticone
