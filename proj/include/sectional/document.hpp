#pragma once

// Line-oriented text format for posets, operation tables and selections.
//
//   poset NAME
//   elements e1 ... en
//   cover x y          (or: le x y; any number)
//   end
//
//   optable NAME over POSET kind partial|total
//   row x : v1 ... vn  (one per element, in declaration order; - = undefined)
//   end
//
//   selection NAME over POSET
//   pair x y : m1 ... mk   (unordered; comparable pairs may be omitted)
//   end
//
// `#` starts a comment. Names are unique across the file.

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sectional/checks.hpp"
#include "sectional/poset.hpp"
#include "sectional/selection.hpp"
#include "sectional/tables.hpp"

namespace sectional {

struct PosetSection {
  std::string name;
  std::vector<OrderDeclaration> order;
  Poset poset;
};

struct TableSection {
  std::string name;
  std::string over;
  std::variant<PartialTable, TotalTable> table;

  TableKind kind() const { return table.index() == 0 ? TableKind::partial : TableKind::total; }
  const Poset& poset() const {
    return std::visit([](const auto& t) -> const Poset& { return t.poset(); }, table);
  }
  std::span<const int> cells() const {
    return std::visit([](const auto& t) { return t.cells(); }, table);
  }
};

struct SelectionSection {
  std::string name;
  std::string over;
  LocalSelection selection;
};

using Section = std::variant<PosetSection, TableSection, SelectionSection>;

inline const std::string& section_name(const Section& s) {
  return std::visit([](const auto& v) -> const std::string& { return v.name; }, s);
}

class Document {
 public:
  const std::vector<Section>& sections() const { return sections_; }

  void add(Section s) {
    const std::string& name = section_name(s);
    if (find(name)) throw Error(ErrorKind::Reference, "duplicate section name '" + name + "'");
    if (auto* t = std::get_if<TableSection>(&s)) require_over(t->over);
    if (auto* sel = std::get_if<SelectionSection>(&s)) require_over(sel->over);
    sections_.push_back(std::move(s));
  }

  void add_poset(const Poset& p) {
    PosetSection s{p.name(), {}, p};
    for (auto [x, y] : covers(p)) s.order.push_back({OrderDeclaration::Kind::cover, p.label(x), p.label(y)});
    add(std::move(s));
  }
  void add_table(std::string name, const PartialTable& t) {
    add(TableSection{std::move(name), t.poset().name(), t});
  }
  void add_table(std::string name, const TotalTable& t) {
    add(TableSection{std::move(name), t.poset().name(), t});
  }

  const Section* find(std::string_view name) const {
    for (const auto& s : sections_)
      if (section_name(s) == name) return &s;
    return nullptr;
  }

  const PosetSection& poset(std::string_view name) const { return get<PosetSection>(name, "poset"); }
  const TableSection& table(std::string_view name) const { return get<TableSection>(name, "optable"); }
  const SelectionSection& selection(std::string_view name) const { return get<SelectionSection>(name, "selection"); }

  bool operator==(const Document& o) const { return emit_key() == o.emit_key(); }

 private:
  template <class T>
  const T& get(std::string_view name, const char* what) const {
    const Section* s = find(name);
    if (!s || !std::holds_alternative<T>(*s))
      throw Error(ErrorKind::Reference, std::string("no ") + what + " named '" + std::string(name) + "'");
    return std::get<T>(*s);
  }

  void require_over(const std::string& poset) const {
    const Section* s = find(poset);
    if (!s || !std::holds_alternative<PosetSection>(*s))
      throw Error(ErrorKind::Reference, "'" + poset + "' is not a previously defined poset");
  }

  std::string emit_key() const;

  std::vector<Section> sections_;
};

// ---------------------------------------------------------------------------
// Emitting.

namespace detail {

inline void emit_section(std::ostream& out, const PosetSection& s) {
  out << "poset " << s.name << "\nelements";
  for (const auto& l : s.poset.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& d : s.order)
    out << (d.kind == OrderDeclaration::Kind::cover ? "cover " : "le ") << d.lower << ' ' << d.upper << '\n';
  out << "end\n";
}

inline void emit_section(std::ostream& out, const TableSection& s) {
  const Poset& p = s.poset();
  out << "optable " << s.name << " over " << s.over << " kind "
      << (s.kind() == TableKind::partial ? "partial" : "total") << '\n';
  auto cells = s.cells();
  std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    out << "row " << p.label(static_cast<Element>(x)) << " :";
    for (std::size_t y = 0; y < n; ++y) {
      int v = cells[x * n + y];
      out << ' ' << (v < 0 ? std::string("-") : p.label(v));
    }
    out << '\n';
  }
  out << "end\n";
}

inline void emit_section(std::ostream& out, const SelectionSection& s) {
  const Poset& p = s.selection.poset();
  out << "selection " << s.name << " over " << s.over << '\n';
  auto n = static_cast<Element>(p.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (p.comparable(x, y)) continue;
      out << "pair " << p.label(x) << ' ' << p.label(y) << " :";
      for (Element m : s.selection.at(x, y)) out << ' ' << p.label(m);
      out << '\n';
    }
  }
  out << "end\n";
}

}  // namespace detail

inline std::string emit(const Document& doc) {
  std::ostringstream out;
  bool first = true;
  for (const auto& s : doc.sections()) {
    if (!first) out << '\n';
    first = false;
    std::visit([&](const auto& v) { detail::emit_section(out, v); }, s);
  }
  return out.str();
}

inline std::string Document::emit_key() const { return emit(*this); }

// ---------------------------------------------------------------------------
// Parsing.

namespace detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Re-raises library errors with the line of the block that caused them.
template <class F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.detail());
  }
}

class Parser {
 public:
  Parser(std::vector<Line> lines, std::size_t cap) : lines_(std::move(lines)), cap_(cap) {}

  Document run() {
    if (lines_.empty()) throw Error(ErrorKind::Parse, "no sections");
    while (i_ < lines_.size()) {
      const Line& head = lines_[i_];
      const std::string& kw = head.tokens[0];
      if (kw == "poset") poset_block();
      else if (kw == "optable") table_block();
      else if (kw == "selection") selection_block();
      else parse_fail(head.number, "expected 'poset', 'optable' or 'selection', found '" + kw + "'");
    }
    return std::move(doc_);
  }

 private:
  const Line& next(const char* context) {
    if (i_ >= lines_.size()) parse_fail(lines_.back().number, std::string("missing 'end' in ") + context);
    return lines_[i_++];
  }

  static bool is_end(const Line& l) { return l.tokens.size() == 1 && l.tokens[0] == "end"; }

  void add(int line, Section s) {
    at_line(line, [&] {
      doc_.add(std::move(s));
      return 0;
    });
  }

  void poset_block() {
    const Line& head = next("poset");
    if (head.tokens.size() != 2) parse_fail(head.number, "expected 'poset NAME'");
    std::string name = head.tokens[1];
    const Line& el = next("poset");
    if (el.tokens[0] != "elements" || el.tokens.size() < 2) parse_fail(el.number, "expected 'elements e1 ... en'");
    std::vector<std::string> elements(el.tokens.begin() + 1, el.tokens.end());
    std::vector<OrderDeclaration> order;
    for (;;) {
      const Line& l = next("poset");
      if (is_end(l)) break;
      if (l.tokens.size() != 3 || (l.tokens[0] != "cover" && l.tokens[0] != "le"))
        parse_fail(l.number, "expected 'cover x y', 'le x y' or 'end'");
      for (std::size_t k = 1; k < 3; ++k)
        if (std::find(elements.begin(), elements.end(), l.tokens[k]) == elements.end())
          throw Error(ErrorKind::UnknownElement,
                      "line " + std::to_string(l.number) + ": '" + l.tokens[k] + "' is not declared in poset '" + name + "'");
      order.push_back({l.tokens[0] == "cover" ? OrderDeclaration::Kind::cover : OrderDeclaration::Kind::le, l.tokens[1],
                       l.tokens[2]});
    }
    Poset p = at_line(head.number, [&] { return build_poset(name, elements, order, cap_); });
    add(head.number, PosetSection{name, std::move(order), std::move(p)});
  }

  const Poset& over(const Line& head, const std::string& name) {
    const Section* s = doc_.find(name);
    if (!s || !std::holds_alternative<PosetSection>(*s))
      throw Error(ErrorKind::Reference,
                  "line " + std::to_string(head.number) + ": '" + name + "' is not a previously defined poset");
    return std::get<PosetSection>(*s).poset;
  }

  Element element(const Poset& p, const Line& l, const std::string& label) {
    auto e = p.find(label);
    if (!e)
      throw Error(ErrorKind::UnknownElement,
                  "line " + std::to_string(l.number) + ": '" + label + "' is not an element of '" + p.name() + "'");
    return *e;
  }

  void table_block() {
    const Line& head = next("optable");
    const auto& t = head.tokens;
    if (t.size() != 6 || t[2] != "over" || t[4] != "kind" || (t[5] != "partial" && t[5] != "total"))
      parse_fail(head.number, "expected 'optable NAME over POSET kind partial|total'");
    const Poset& p = over(head, t[3]);
    bool partial = t[5] == "partial";
    std::size_t n = p.size();
    std::vector<int> cells(n * n, kUndefinedCell);
    std::size_t row = 0;
    for (;;) {
      const Line& l = next("optable");
      if (is_end(l)) break;
      if (l.tokens.size() < 2 || l.tokens[0] != "row" || (l.tokens.size() > 2 && l.tokens[2] != ":"))
        parse_fail(l.number, "expected 'row x : v1 ... vn' or 'end'");
      if (row >= n) parse_fail(l.number, "more rows than elements");
      if (l.tokens[1] != p.label(static_cast<Element>(row)))
        parse_fail(l.number, "expected row '" + p.label(static_cast<Element>(row)) + "', found '" + l.tokens[1] + "'");
      if (l.tokens.size() != n + 3)
        parse_fail(l.number, "row '" + l.tokens[1] + "' needs " + std::to_string(n) + " values");
      for (std::size_t y = 0; y < n; ++y) {
        const std::string& v = l.tokens[y + 3];
        if (v == "-") {
          if (!partial) parse_fail(l.number, "undefined cell in a total table");
          continue;
        }
        cells[row * n + y] = element(p, l, v);
      }
      ++row;
    }
    if (row != n) parse_fail(head.number, "table '" + t[1] + "' has " + std::to_string(row) + " rows, expected " +
                                              std::to_string(n));
    TableSection s{t[1], t[3], at_line(head.number, [&]() -> std::variant<PartialTable, TotalTable> {
                     if (partial) return PartialTable(p, std::move(cells));
                     return TotalTable(p, std::move(cells));
                   })};
    add(head.number, std::move(s));
  }

  void selection_block() {
    const Line& head = next("selection");
    const auto& t = head.tokens;
    if (t.size() != 4 || t[2] != "over") parse_fail(head.number, "expected 'selection NAME over POSET'");
    const Poset& p = over(head, t[3]);
    auto n = static_cast<Element>(p.size());
    std::vector<ElementSet> sets(p.size() * p.size());
    std::vector<bool> given(p.size() * p.size(), false);
    auto idx = [&](Element x, Element y) { return static_cast<std::size_t>(x * n + y); };
    for (;;) {
      const Line& l = next("selection");
      if (is_end(l)) break;
      if (l.tokens.size() < 4 || l.tokens[0] != "pair" || l.tokens[3] != ":")
        parse_fail(l.number, "expected 'pair x y : m1 ... mk' or 'end'");
      Element x = element(p, l, l.tokens[1]);
      Element y = element(p, l, l.tokens[2]);
      if (given[idx(x, y)]) parse_fail(l.number, "pair (" + l.tokens[1] + ", " + l.tokens[2] + ") given twice");
      ElementSet m;
      for (std::size_t k = 4; k < l.tokens.size(); ++k) m = m.with(element(p, l, l.tokens[k]));
      sets[idx(x, y)] = sets[idx(y, x)] = m;
      given[idx(x, y)] = given[idx(y, x)] = true;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (given[idx(x, y)]) continue;
        if (p.leq(y, x)) sets[idx(x, y)] = p.down(x);
        else if (p.leq(x, y)) sets[idx(x, y)] = p.down(y);
        else
          throw Error(ErrorKind::SelectionAxiomViolation, "line " + std::to_string(head.number) + ": selection '" +
                                                               t[1] + "' omits the incomparable pair (" +
                                                               p.label(x) + ", " + p.label(y) + ")");
      }
    }
    LocalSelection sel = at_line(head.number, [&] { return selection_custom(p, t[1], std::move(sets)); });
    add(head.number, SelectionSection{t[1], t[3], std::move(sel)});
  }

  std::vector<Line> lines_;
  std::size_t i_ = 0;
  std::size_t cap_;
  Document doc_;
};

}  // namespace detail

inline Document parse_document(std::string_view text, std::size_t cap = kDefaultElementCap) {
  return detail::Parser(detail::tokenize(text), cap).run();
}

inline Document load_document(const std::string& path, std::size_t cap = kDefaultElementCap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), cap);
}

/// A one-poset, one-table document: the replayable form of a counterexample.
inline std::string emit_instance(const Poset& p, const std::string& table_name, const TotalTable& t) {
  Document d;
  d.add_poset(p);
  d.add_table(table_name, t);
  return emit(d);
}

inline std::string emit_instance(const Poset& p) {
  Document d;
  d.add_poset(p);
  return emit(d);
}

}  // namespace sectional
