#ifndef BRAIDORBITS_CATALOG_HPP
#define BRAIDORBITS_CATALOG_HPP

#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "group.hpp"

namespace braidorbits {

// One catalog block: a named group given by explicit generators in cycle
// notation, its expected order (verified at load), the socle parameters,
// and the pinned class labels used by the published tables.
struct CatalogEntry {
  std::string name;
  int degree = 0;
  int p = 0;
  int e = 0;
  std::uint64_t expected_order = 0;
  std::vector<std::string> generator_cycles;
  std::map<std::string, std::string> label_pins;  // label -> representative
  bool table1 = false;  // counted in the per-degree summary (G'' nontrivial)

  PermGroup build() const {
    std::vector<Permutation> gens;
    for (auto const& text : generator_cycles) gens.push_back(parse_cycles(text, degree));
    PermGroup g(gens);
    if (g.order() != expected_order)
      throw std::runtime_error("catalog entry " + name + ": generators give order " +
                               std::to_string(g.order()) + ", expected " +
                               std::to_string(expected_order));
    if (!label_pins.empty()) {
      std::map<std::string, Permutation> pins;
      for (auto const& [label, cycles] : label_pins)
        pins.emplace(label, parse_cycles(cycles, degree));
      g.pin_labels(pins);
    }
    return g;
  }
};

class Catalog {
 public:
  static Catalog parse(std::istream& in, std::string const& origin = "<stream>") {
    Catalog cat;
    CatalogEntry entry;
    bool open = false;
    std::string line;
    int line_no = 0;
    auto fail = [&](std::string const& what) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string word;
      if (!(ls >> word)) continue;
      if (word == "group") {
        if (open) fail("missing 'end' before a new group");
        entry = CatalogEntry{};
        if (!(ls >> entry.name)) fail("group needs a name");
        open = true;
      } else if (!open) {
        fail("directive outside a group block: " + word);
      } else if (word == "degree") {
        if (!(ls >> entry.degree)) fail("bad degree");
      } else if (word == "affine") {
        if (!(ls >> entry.p >> entry.e)) fail("affine needs p and e");
      } else if (word == "order") {
        if (!(ls >> entry.expected_order)) fail("bad order");
      } else if (word == "table1") {
        entry.table1 = true;
      } else if (word == "gen") {
        std::string rest;
        std::getline(ls, rest);
        if (rest.empty()) fail("gen needs cycle notation");
        entry.generator_cycles.push_back(rest);
      } else if (word == "class") {
        std::string label, rest;
        if (!(ls >> label)) fail("class needs a label");
        std::getline(ls, rest);
        if (rest.empty()) fail("class needs a representative in cycle notation");
        entry.label_pins[label] = rest;
      } else if (word == "end") {
        if (entry.degree <= 0) fail("group " + entry.name + " has no degree");
        if (entry.expected_order == 0) fail("group " + entry.name + " has no order");
        if (entry.generator_cycles.empty()) fail("group " + entry.name + " has no generators");
        cat.entries_.push_back(entry);
        open = false;
      } else {
        fail("unknown directive: " + word);
      }
    }
    if (open) fail("unterminated group block");
    return cat;
  }

  static Catalog load(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file " + path);
    return parse(in, path);
  }

  static Catalog builtin();  // defined with the embedded data

  std::vector<CatalogEntry> const& entries() const { return entries_; }

  CatalogEntry const& find(std::string const& name) const {
    for (auto const& e : entries_)
      if (e.name == name) return e;
    std::string hint;
    for (auto const& e : entries_)
      if (close_match(e.name, name)) hint += (hint.empty() ? "" : ", ") + e.name;
    throw std::runtime_error("unknown group '" + name + "'" +
                             (hint.empty() ? "" : " (did you mean: " + hint + "?)"));
  }

  std::vector<CatalogEntry const*> by_degree(int degree) const {
    std::vector<CatalogEntry const*> out;
    for (auto const& e : entries_)
      if (e.degree == degree) out.push_back(&e);
    return out;
  }

 private:
  static bool close_match(std::string const& a, std::string const& b) {
    auto lower = [](std::string s) {
      for (auto& c : s) c = static_cast<char>(tolower(static_cast<unsigned char>(c)));
      return s;
    };
    std::string la = lower(a), lb = lower(b);
    if (la.find(lb) != std::string::npos || lb.find(la) != std::string::npos) return true;
    if (la.size() != lb.size()) return false;
    int diff = 0;
    for (std::size_t i = 0; i < la.size(); ++i) diff += la[i] != lb[i];
    return diff <= 2;
  }

  std::vector<CatalogEntry> entries_;
};

// Parse a comma-separated label list like "2B,3A,3A,3A" against a group's
// class labels, normalizing to the canonical block order.
inline std::vector<int> parse_type(PermGroup const& G, std::string const& text) {
  std::vector<int> classes;
  std::string label;
  std::istringstream in(text);
  while (std::getline(in, label, ',')) {
    while (!label.empty() && label.front() == ' ') label.erase(label.begin());
    while (!label.empty() && label.back() == ' ') label.pop_back();
    if (label.empty()) throw std::invalid_argument("empty class label in type");
    classes.push_back(G.class_by_label(label));
  }
  if (classes.size() < 3) throw std::invalid_argument("a ramification type needs at least 3 classes");
  std::sort(classes.begin(), classes.end(), [&](int a, int b) {
    auto const &A = G.conj_class(a), &B = G.conj_class(b);
    if (A.element_order != B.element_order) return A.element_order < B.element_order;
    return A.label < B.label;
  });
  return classes;
}

inline std::string type_string(PermGroup const& G, std::vector<int> const& classes) {
  std::string out;
  for (int c : classes) {
    if (!out.empty()) out += ',';
    out += G.conj_class(c).label;
  }
  return out;
}

}  // namespace braidorbits

#endif  // BRAIDORBITS_CATALOG_HPP
