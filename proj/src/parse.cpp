#include "crn/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace crn {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct LineCursor {
  const std::string& text;
  int line;
  size_t pos = 0;

  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  bool try_literal(std::string_view lit) {
    skip_ws();
    if (text.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }
  std::string name() {
    skip_ws();
    if (pos >= text.size() || !name_start(text[pos])) fail("expected a name");
    size_t start = pos;
    while (pos < text.size() && name_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stol(text.substr(start, pos - start));
  }
};

struct NetBuilder {
  std::vector<std::string> species;
  std::map<std::string, int> species_index;
  bool species_pinned = false;
  std::vector<std::vector<int>> complexes;
  std::map<std::vector<int>, int> complex_index;
  std::vector<Reaction> reactions;

  int species_id(const std::string& name, LineCursor& c) {
    auto it = species_index.find(name);
    if (it != species_index.end()) return it->second;
    if (species_pinned) c.fail("species not in header: " + name);
    species_index[name] = static_cast<int>(species.size());
    species.push_back(name);
    for (auto& y : complexes) y.push_back(0);
    return species_index[name];
  }

  // Keys are stored with trailing zeros trimmed so complexes recorded before
  // a later species was first seen still compare equal.
  int complex_id(std::vector<int> y) {
    std::vector<int> key = y;
    while (!key.empty() && key.back() == 0) key.pop_back();
    auto it = complex_index.find(key);
    if (it != complex_index.end()) return it->second;
    int id = static_cast<int>(complexes.size());
    y.resize(species.size(), 0);
    complexes.push_back(std::move(y));
    complex_index.emplace(std::move(key), id);
    return id;
  }
};

std::vector<int> parse_complex(LineCursor& c, NetBuilder& b) {
  std::vector<int> y(b.species.size(), 0);
  while (true) {
    c.skip_ws();
    long coeff = 1;
    if (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) coeff = c.integer();
    if (coeff <= 0) c.fail("stoichiometric coefficient must be positive");
    int sp = b.species_id(c.name(), c);
    if (sp >= static_cast<int>(y.size())) y.resize(sp + 1, 0);
    y[sp] += static_cast<int>(coeff);
    if (!c.try_literal("+")) break;
  }
  return y;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
  NetBuilder b;
  std::set<std::string> rate_names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    LineCursor c{raw, lineno};
    if (c.eof()) continue;

    if (c.try_literal("species:")) {
      if (!b.species.empty()) c.fail("species header must come first");
      while (!c.eof()) {
        c.try_literal(",");
        if (c.eof()) break;
        std::string name = c.name();
        if (b.species_index.count(name)) c.fail("duplicate species in header: " + name);
        b.species_index[name] = static_cast<int>(b.species.size());
        b.species.push_back(name);
      }
      b.species_pinned = true;
      continue;
    }

    std::vector<int> lhs = parse_complex(c, b);
    bool reversible;
    if (c.try_literal("<->"))
      reversible = true;
    else if (c.try_literal("->"))
      reversible = false;
    else
      c.fail("expected '->' or '<->'");
    std::vector<int> rhs = parse_complex(c, b);
    if (!c.try_literal(";")) c.fail("expected ';' before the rate list");

    lhs.resize(b.species.size(), 0);
    rhs.resize(b.species.size(), 0);
    int educt = b.complex_id(std::move(lhs));
    int product = b.complex_id(std::move(rhs));
    if (educt == product) c.fail("self-loop reaction");

    std::string fwd = c.name();
    if (!rate_names.insert(fwd).second) c.fail("duplicate rate name: " + fwd);
    b.reactions.push_back({educt, product, fwd});
    if (reversible) {
      if (!c.try_literal(",")) c.fail("'<->' requires two comma-separated rate names");
      std::string bwd = c.name();
      if (!rate_names.insert(bwd).second) c.fail("duplicate rate name: " + bwd);
      b.reactions.push_back({product, educt, bwd});
    }
    if (!c.eof()) c.fail("trailing input after reaction");
  }

  ReactionNetwork net;
  net.species = std::move(b.species);
  net.complexes = std::move(b.complexes);
  for (auto& y : net.complexes) y.resize(net.species.size(), 0);
  net.reactions = std::move(b.reactions);
  net.validate();
  return net;
}

RateAssignment parse_rates(std::string_view text) {
  RateAssignment rates;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    LineCursor c{raw, lineno};
    if (c.eof()) continue;
    std::string name = c.name();
    if (!c.try_literal("=")) c.fail("expected '=' after rate name");
    c.skip_ws();
    std::string value = raw.substr(c.pos);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
    auto v = parse_rat(value);
    if (!v) c.fail("malformed rate value: " + value);
    if (sign_of(*v) <= 0) c.fail("rate must be positive");
    if (rates.count(name)) c.fail("duplicate rate name: " + name);
    rates[name] = *v;
  }
  return rates;
}

std::string render_network(const ReactionNetwork& net) {
  std::ostringstream out;
  out << "species:";
  for (const auto& s : net.species) out << " " << s;
  out << "\n";
  auto complex_str = [&](int id) {
    std::ostringstream c;
    bool first = true;
    for (int i = 0; i < net.num_species(); ++i) {
      int e = net.complexes[id][i];
      if (e == 0) continue;
      if (!first) c << " + ";
      if (e != 1) c << e;
      c << net.species[i];
      first = false;
    }
    return c.str();
  };
  for (const auto& rx : net.reactions)
    out << complex_str(rx.educt) << " -> " << complex_str(rx.product) << " ; " << rx.rate << "\n";
  return out.str();
}

std::string render_rates(const RateAssignment& rates) {
  std::ostringstream out;
  for (const auto& [name, value] : rates) out << name << " = " << rat_str(value) << "\n";
  return out.str();
}

}  // namespace crn
