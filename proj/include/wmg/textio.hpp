// Text formats: transition-system files, net files, DOT export, word
// parsing.
//
// Transition-system files:   `initial <state>` on the first non-comment
// line, then `arc <src> <label> <dst>` lines; `#` starts a comment; states
// auto-declare on first mention; duplicate arcs are errors.
//
// Net files:   `place <name> tokens=<k> [in=<t>:<w>] [out=<t>:<w>]` lines
// plus optional `transition <name>` lines for transitions no place touches.
//
// Emission is canonical (fixed ordering), so emit-then-parse round-trips
// and DOT output is byte-stable.
#pragma once

#include <string>
#include <vector>

#include "wmg/errors.hpp"
#include "wmg/lts.hpp"
#include "wmg/net.hpp"

namespace wmg {

Lts parse_lts_text(const std::string& text, const std::string& origin = "<text>");
Lts parse_lts_file(const std::string& path);
System parse_net_text(const std::string& text, const std::string& origin = "<text>");
System parse_net_file(const std::string& path);

std::string emit_lts_text(const Lts& lts);
std::string emit_net_text(const System& system);

std::string emit_lts_dot(const Lts& lts);
std::string emit_net_dot(const System& system);

// "abc" -> a, b, c;  words with multi-character labels are comma-separated:
// "a,b2,c" -> a, b2, c.  Errors on empty words or empty components.
std::vector<std::string> parse_word(const std::string& text);
std::string word_to_string(const std::vector<std::string>& word);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace wmg
