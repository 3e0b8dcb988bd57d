#include "wmg/textio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace wmg {

namespace {

[[noreturn]] void parse_fail(const std::string& origin, int line,
                             const std::string& message) {
  fail(ErrorCode::ParseError,
       origin + ":" + std::to_string(line) + ": " + message);
}

// Strips comments, splits into whitespace-separated tokens.
std::vector<std::vector<std::string>> tokenize(const std::string& text,
                                               std::vector<int>* line_numbers) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream stream(text);
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    lines.push_back(std::move(tokens));
    line_numbers->push_back(number);
  }
  return lines;
}

long long parse_number(const std::string& text, const std::string& origin,
                       int line) {
  try {
    size_t used = 0;
    long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    parse_fail(origin, line, "expected a number, got '" + text + "'");
  }
}

}  // namespace

Lts parse_lts_text(const std::string& text, const std::string& origin) {
  std::vector<int> line_of;
  auto lines = tokenize(text, &line_of);
  if (lines.empty()) {
    parse_fail(origin, 1, "expected an 'initial <state>' line");
  }
  if (lines[0][0] != "initial" || lines[0].size() != 2) {
    parse_fail(origin, line_of[0],
               "the first line must be 'initial <state>'");
  }
  Lts::Builder builder;
  builder.initial(lines[0][1]);
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens[0] != "arc" || tokens.size() != 4) {
      parse_fail(origin, line_of[i], "expected 'arc <src> <label> <dst>'");
    }
    if (!seen.emplace(tokens[1], tokens[2], tokens[3]).second) {
      parse_fail(origin, line_of[i],
                 "duplicate arc " + tokens[1] + " -" + tokens[2] + "-> " +
                     tokens[3]);
    }
    builder.arc(tokens[1], tokens[2], tokens[3]);
  }
  return builder.build();
}

Lts parse_lts_file(const std::string& path) {
  return parse_lts_text(read_file(path), path);
}

System parse_net_text(const std::string& text, const std::string& origin) {
  std::vector<int> line_of;
  auto lines = tokenize(text, &line_of);
  if (lines.empty()) {
    parse_fail(origin, 1, "expected 'place' or 'transition' lines");
  }
  std::vector<std::pair<std::string, PlaceDescriptor>> places;
  std::set<std::string> place_names;
  std::vector<std::string> extra_transitions;
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens[0] == "transition") {
      if (tokens.size() != 2) {
        parse_fail(origin, line_of[i], "expected 'transition <name>'");
      }
      extra_transitions.push_back(tokens[1]);
      continue;
    }
    if (tokens[0] != "place" || tokens.size() < 3) {
      parse_fail(origin, line_of[i],
                 "expected 'place <name> tokens=<k> [in=<t>:<w>] "
                 "[out=<t>:<w>]'");
    }
    const std::string& name = tokens[1];
    if (!place_names.insert(name).second) {
      parse_fail(origin, line_of[i], "place '" + name + "' declared twice");
    }
    PlaceDescriptor desc;
    bool have_tokens = false, have_in = false, have_out = false;
    for (size_t f = 2; f < tokens.size(); ++f) {
      const std::string& field = tokens[f];
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        parse_fail(origin, line_of[i], "expected key=value, got '" + field + "'");
      }
      std::string key = field.substr(0, eq);
      std::string value = field.substr(eq + 1);
      if (key == "tokens") {
        if (have_tokens) parse_fail(origin, line_of[i], "repeated tokens=");
        have_tokens = true;
        desc.initial_tokens = parse_number(value, origin, line_of[i]);
        if (desc.initial_tokens < 0) {
          parse_fail(origin, line_of[i], "token counts must be >= 0");
        }
      } else if (key == "in" || key == "out") {
        bool& have = key == "in" ? have_in : have_out;
        if (have) parse_fail(origin, line_of[i], "repeated " + key + "=");
        have = true;
        auto colon = value.find(':');
        if (colon == std::string::npos || colon == 0) {
          parse_fail(origin, line_of[i],
                     "expected " + key + "=<transition>:<weight>");
        }
        std::string transition = value.substr(0, colon);
        long long weight =
            parse_number(value.substr(colon + 1), origin, line_of[i]);
        if (weight <= 0) {
          parse_fail(origin, line_of[i], "arc weights must be positive");
        }
        if (key == "in") {
          desc.input = transition;
          desc.in_weight = weight;
        } else {
          desc.output = transition;
          desc.out_weight = weight;
        }
      } else {
        parse_fail(origin, line_of[i], "unknown key '" + key + "'");
      }
    }
    if (!have_tokens) {
      parse_fail(origin, line_of[i], "place '" + name + "' needs tokens=<k>");
    }
    places.emplace_back(name, desc);
  }
  return build_system(places, extra_transitions);
}

System parse_net_file(const std::string& path) {
  return parse_net_text(read_file(path), path);
}

std::string emit_lts_text(const Lts& lts) {
  std::string out = "initial " + lts.state_name(lts.initial()) + "\n";
  for (int s = 0; s < lts.num_states(); ++s) {
    for (const auto& [l, t] : lts.out(s)) {
      out += "arc " + lts.state_name(s) + " " + lts.label_name(l) + " " +
             lts.state_name(t) + "\n";
    }
  }
  return out;
}

std::string emit_net_text(const System& system) {
  const WeightedNet& net = system.net;
  WmgCheck shape = is_wmg(net);
  if (!shape) {
    fail(ErrorCode::NotWmg,
         "only weighted marked graphs can be serialized: " + shape.witness);
  }
  std::string out;
  std::set<std::string> mentioned;
  for (int p = 0; p < net.num_places(); ++p) {
    out += "place " + net.place_name(p) +
           " tokens=" + std::to_string(system.initial[p]);
    auto producers = net.producers(p);
    auto consumers = net.consumers(p);
    if (!producers.empty()) {
      const std::string& t = net.transition_name(producers[0]);
      out += " in=" + t + ":" + std::to_string(net.weight_tp(producers[0], p));
      mentioned.insert(t);
    }
    if (!consumers.empty()) {
      const std::string& t = net.transition_name(consumers[0]);
      out += " out=" + t + ":" + std::to_string(net.weight_pt(p, consumers[0]));
      mentioned.insert(t);
    }
    out += "\n";
  }
  for (const auto& t : net.transitions()) {
    if (mentioned.count(t) == 0) out += "transition " + t + "\n";
  }
  return out;
}

std::string emit_lts_dot(const Lts& lts) {
  std::vector<std::string> nodes = lts.states();
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int s = 0; s < lts.num_states(); ++s) {
    for (const auto& [l, t] : lts.out(s)) {
      edges.emplace_back(lts.state_name(s), lts.label_name(l),
                         lts.state_name(t));
    }
  }
  std::sort(edges.begin(), edges.end());
  std::string out = "digraph lts {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& name : nodes) {
    out += "  \"" + name + "\"";
    if (name == lts.state_name(lts.initial())) out += " [peripheries=2]";
    out += ";\n";
  }
  for (const auto& [src, label, dst] : edges) {
    out += "  \"" + src + "\" -> \"" + dst + "\" [label=\"" + label + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string emit_net_dot(const System& system) {
  const WeightedNet& net = system.net;
  std::vector<std::string> places = net.places();
  std::sort(places.begin(), places.end());
  std::string out = "digraph net {\n  rankdir=LR;\n";
  for (const auto& name : places) {
    int p = net.place_index(name);
    out += "  \"" + name + "\" [shape=circle, label=\"" + name + "\\n" +
           std::to_string(system.initial[p]) + "\"];\n";
  }
  for (const auto& name : net.transitions()) {
    out += "  \"" + name + "\" [shape=box];\n";
  }
  std::vector<std::tuple<std::string, std::string, long long>> edges;
  for (int p = 0; p < net.num_places(); ++p) {
    for (int t : net.producers(p)) {
      edges.emplace_back(net.transition_name(t), net.place_name(p),
                         net.weight_tp(t, p));
    }
    for (int t : net.consumers(p)) {
      edges.emplace_back(net.place_name(p), net.transition_name(t),
                         net.weight_pt(p, t));
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [from, to, weight] : edges) {
    out += "  \"" + from + "\" -> \"" + to + "\" [label=\"" +
           std::to_string(weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::vector<std::string> parse_word(const std::string& text) {
  if (text.empty()) {
    fail(ErrorCode::EmptyWord, "the word is empty");
  }
  std::vector<std::string> word;
  if (text.find(',') != std::string::npos) {
    std::string current;
    std::istringstream stream(text);
    while (std::getline(stream, current, ',')) {
      if (current.empty()) {
        fail(ErrorCode::ParseError, "empty label in word '" + text + "'");
      }
      word.push_back(current);
    }
    if (text.back() == ',') {
      fail(ErrorCode::ParseError, "empty label in word '" + text + "'");
    }
  } else {
    for (char c : text) word.push_back(std::string(1, c));
  }
  return word;
}

std::string word_to_string(const std::vector<std::string>& word) {
  bool multi = std::any_of(word.begin(), word.end(),
                           [](const std::string& l) { return l.size() > 1; });
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (multi && i > 0) out += ",";
    out += word[i];
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    fail(ErrorCode::ParseError, "cannot open '" + path + "' for writing");
  }
  file << content;
  if (!file.good()) {
    fail(ErrorCode::ParseError, "failed writing '" + path + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace wmg
