#include "latcuts/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latcuts {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

bool valid_token(const std::string& tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(begin, end - begin);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    std::istringstream stream{std::string(raw)};
    Line line{number, {}};
    std::string tok;
    while (stream >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    begin = end + 1;
  }
  return lines;
}

void expect_tokens(const Line& line, std::size_t from) {
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    if (!valid_token(line.tokens[i])) {
      parse_fail(line.number, "bad token '" + line.tokens[i] + "'");
    }
  }
}

}  // namespace

Lattice parse_lattice(std::string_view text, std::size_t carrier_cap) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(Errc::parse_error, "line 1: empty lattice document");
  const Line& head = lines.front();
  if (head.tokens[0] != "elements:") {
    parse_fail(head.number, "expected 'elements:'");
  }
  if (head.tokens.size() < 2) {
    parse_fail(head.number, "elements line needs at least one element");
  }
  expect_tokens(head, 1);
  std::vector<std::string> elements(head.tokens.begin() + 1, head.tokens.end());

  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "elements:") {
      parse_fail(line.number, "duplicate elements line");
    }
    if (line.tokens[0] != "cover:") {
      parse_fail(line.number, "expected 'cover:'");
    }
    if (line.tokens.size() != 3) {
      parse_fail(line.number, "cover line needs exactly two elements");
    }
    expect_tokens(line, 1);
    covers.emplace_back(line.tokens[1], line.tokens[2]);
  }
  return Lattice::validate(Poset::from_covers(std::move(elements), covers, carrier_cap));
}

SetFamily parse_family(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(Errc::parse_error, "line 1: empty family document");
  const Line& head = lines.front();
  if (head.tokens[0] != "universe:") {
    parse_fail(head.number, "expected 'universe:'");
  }
  if (head.tokens.size() < 2) {
    parse_fail(head.number, "universe line needs at least one element");
  }
  expect_tokens(head, 1);
  std::vector<std::string> universe(head.tokens.begin() + 1, head.tokens.end());

  std::vector<std::vector<std::string>> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] == "universe:") {
      parse_fail(line.number, "duplicate universe line");
    }
    if (line.tokens[0] != "set:") {
      parse_fail(line.number, "expected 'set:'");
    }
    expect_tokens(line, 1);
    members.emplace_back(line.tokens.begin() + 1, line.tokens.end());
  }
  return SetFamily::from_names(std::move(universe), members);
}

FuzzySet parse_fuzzy(std::string_view text, const Lattice& lattice) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(Errc::parse_error, "line 1: empty fuzzy set document");
  const Line& head = lines.front();
  if (head.tokens[0] != "domain:") {
    parse_fail(head.number, "expected 'domain:'");
  }
  if (head.tokens.size() < 2) {
    parse_fail(head.number, "domain line needs at least one element");
  }
  expect_tokens(head, 1);
  std::vector<std::string> domain(head.tokens.begin() + 1, head.tokens.end());

  std::vector<int> values(domain.size(), -1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "map:") {
      parse_fail(line.number, "expected 'map:'");
    }
    if (line.tokens.size() != 4 || line.tokens[2] != "->") {
      parse_fail(line.number, "map line must read 'map: <x> -> <p>'");
    }
    if (!valid_token(line.tokens[1]) || !valid_token(line.tokens[3])) {
      parse_fail(line.number, "bad token in map line");
    }
    auto x = std::find(domain.begin(), domain.end(), line.tokens[1]);
    if (x == domain.end()) {
      parse_fail(line.number, "unknown domain element '" + line.tokens[1] + "'");
    }
    auto p = lattice.poset().index_of(line.tokens[3]);
    if (!p) {
      parse_fail(line.number, "unknown grade '" + line.tokens[3] + "'");
    }
    const std::size_t xi = static_cast<std::size_t>(x - domain.begin());
    if (values[xi] != -1) {
      parse_fail(line.number, "duplicate map for '" + line.tokens[1] + "'");
    }
    values[xi] = *p;
  }
  for (std::size_t xi = 0; xi < values.size(); ++xi) {
    if (values[xi] == -1) {
      fail(Errc::parse_error, "no map line for domain element '" + domain[xi] + "'");
    }
  }
  return FuzzySet(lattice, std::move(domain), std::move(values));
}

std::string render_lattice(const Lattice& l) {
  std::string out = "elements:";
  for (const auto& e : l.poset().elements()) out += " " + e;
  out += "\n";
  for (const auto& [lo, hi] : l.poset().cover_pairs()) {
    out += "cover: " + l.name(lo) + " " + l.name(hi) + "\n";
  }
  return out;
}

std::string render_family(const SetFamily& f) {
  std::string out = "universe:";
  for (const auto& u : f.universe()) out += " " + u;
  out += "\n";
  for (const auto& member : f.members()) {
    out += "set:";
    for (int x : member) out += " " + f.universe()[static_cast<std::size_t>(x)];
    out += "\n";
  }
  return out;
}

std::string render_fuzzy(const FuzzySet& mu) {
  std::string out = "domain:";
  for (const auto& x : mu.domain()) out += " " + x;
  out += "\n";
  for (std::size_t x = 0; x < mu.domain().size(); ++x) {
    out += "map: " + mu.domain()[x] + " -> " +
           mu.lattice().name(mu.value(static_cast<int>(x))) + "\n";
  }
  return out;
}

}  // namespace latcuts
