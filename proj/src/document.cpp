#include "peqa/document.hpp"

#include <sstream>

namespace peqa {

const char* kind_name(DocKind k) {
  switch (k) {
    case DocKind::eq: return "eq";
    case DocKind::bck: return "bck";
    case DocKind::hoop: return "hoop";
  }
  return "eq";
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void syntax(int line, const std::string& what) {
  fail(Errc::syntax_error, "line " + std::to_string(line) + ": " + what);
}

const char* kTableNames[] = {"meet", "tilde", "btilde", "arrow", "squig", "prod"};

bool is_table_name(const std::string& s) {
  for (const char* t : kTableNames)
    if (s == t) return true;
  return false;
}

}  // namespace

AlgebraDocument parse_document(const std::string& text) {
  AlgebraDocument doc;
  bool saw_algebra = false, saw_elements = false, saw_top = false, saw_end = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto next_line = [&](std::vector<std::string>& toks) -> bool {
    while (std::getline(in, raw)) {
      ++lineno;
      toks = split_tokens(strip_comment(raw));
      if (!toks.empty()) return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_line(toks)) {
    const std::string& head = toks[0];
    if (head == "algebra") {
      if (toks.size() != 2) syntax(lineno, "expected: algebra <name>");
      doc.name = toks[1];
      saw_algebra = true;
    } else if (head == "kind") {
      if (toks.size() != 2) syntax(lineno, "expected: kind eq|bck|hoop");
      if (toks[1] == "eq")
        doc.kind = DocKind::eq;
      else if (toks[1] == "bck")
        doc.kind = DocKind::bck;
      else if (toks[1] == "hoop")
        doc.kind = DocKind::hoop;
      else
        syntax(lineno, "unknown kind '" + toks[1] + "'");
    } else if (head == "elements") {
      if (toks.size() < 2) syntax(lineno, "expected: elements <t1> ... <tn>");
      doc.elements.assign(toks.begin() + 1, toks.end());
      saw_elements = true;
    } else if (head == "top") {
      if (toks.size() != 2) syntax(lineno, "expected: top <t>");
      doc.top = toks[1];
      saw_top = true;
    } else if (head == "point") {
      if (toks.size() != 2) syntax(lineno, "expected: point <t>");
      doc.point = toks[1];
    } else if (is_table_name(head)) {
      if (toks.size() != 1) syntax(lineno, "table header takes no arguments");
      if (!saw_elements) syntax(lineno, "table before 'elements'");
      const int n = static_cast<int>(doc.elements.size());
      std::vector<std::vector<std::string>> rows;
      for (int r = 0; r < n; ++r) {
        std::vector<std::string> row;
        if (!next_line(row)) syntax(lineno, "unexpected end of " + head + " table");
        if (static_cast<int>(row.size()) != n)
          fail(Errc::shape_error, "line " + std::to_string(lineno) + ": " + head +
                                      " row has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(n));
        rows.push_back(std::move(row));
      }
      doc.tables[head] = std::move(rows);
    } else if (head == "end") {
      saw_end = true;
      break;
    } else {
      syntax(lineno, "unknown directive '" + head + "'");
    }
  }

  if (!saw_algebra) fail(Errc::syntax_error, "missing 'algebra' directive");
  if (!saw_elements) fail(Errc::syntax_error, "missing 'elements' directive");
  if (!saw_top) fail(Errc::syntax_error, "missing 'top' directive");
  if (!saw_end) fail(Errc::syntax_error, "missing 'end' directive");

  // All tokens inside tables and headers must be declared elements.
  auto check_token = [&](const std::string& t) {
    for (const auto& e : doc.elements)
      if (e == t) return;
    fail(Errc::unknown_token, "undeclared token '" + t + "'");
  };
  check_token(doc.top);
  if (doc.point) check_token(*doc.point);
  for (const auto& [name, rows] : doc.tables)
    for (const auto& row : rows)
      for (const auto& t : row) check_token(t);

  auto require_table = [&](const char* t) {
    if (!doc.tables.count(t))
      fail(Errc::shape_error, std::string("kind ") + kind_name(doc.kind) +
                                  " requires a '" + t + "' table");
  };
  switch (doc.kind) {
    case DocKind::eq:
      require_table("meet");
      require_table("tilde");
      require_table("btilde");
      break;
    case DocKind::bck:
      require_table("meet");
      require_table("arrow");
      require_table("squig");
      break;
    case DocKind::hoop:
      require_table("prod");
      require_table("arrow");
      require_table("squig");
      break;
  }
  return doc;
}

std::string render_document(const AlgebraDocument& doc) {
  std::ostringstream out;
  out << "algebra " << doc.name << "\n";
  out << "kind " << kind_name(doc.kind) << "\n";
  out << "elements";
  for (const auto& e : doc.elements) out << " " << e;
  out << "\n";
  out << "top " << doc.top << "\n";
  if (doc.point) out << "point " << *doc.point << "\n";
  for (const char* t : kTableNames) {
    auto it = doc.tables.find(t);
    if (it == doc.tables.end()) continue;
    out << t << "\n";
    for (const auto& row : it->second) {
      for (size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

namespace {

std::vector<std::vector<int>> resolve_table(const AlgebraDocument& doc,
                                            const std::string& name) {
  const auto& rows = doc.tables.at(name);
  std::vector<std::vector<int>> out;
  for (const auto& row : rows) {
    std::vector<int> r;
    for (const auto& tok : row) {
      int idx = -1;
      for (size_t i = 0; i < doc.elements.size(); ++i)
        if (doc.elements[i] == tok) idx = static_cast<int>(i);
      r.push_back(idx);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<std::string>> table_tokens(const BinTable& t,
                                                   const Carrier& c) {
  std::vector<std::vector<std::string>> rows;
  for (int x = 0; x < t.n(); ++x) {
    std::vector<std::string> row;
    for (int y = 0; y < t.n(); ++y) row.push_back(c.name(t(x, y)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

FiniteEqAlgebra eq_from_document(const AlgebraDocument& doc) {
  if (doc.kind != DocKind::eq)
    fail(Errc::shape_error, "document kind is not 'eq'");
  return build_algebra(doc.elements, resolve_table(doc, "meet"),
                       resolve_table(doc, "tilde"), resolve_table(doc, "btilde"),
                       doc.top);
}

FiniteBckMs bck_from_document(const AlgebraDocument& doc) {
  if (doc.kind != DocKind::bck)
    fail(Errc::shape_error, "document kind is not 'bck'");
  Carrier c = make_carrier(doc.elements, doc.top);
  return assemble_bck(std::move(c),
                      BinTable::from_rows(resolve_table(doc, "meet")),
                      BinTable::from_rows(resolve_table(doc, "arrow")),
                      BinTable::from_rows(resolve_table(doc, "squig")));
}

FinitePseudoHoop hoop_from_document(const AlgebraDocument& doc) {
  if (doc.kind != DocKind::hoop)
    fail(Errc::shape_error, "document kind is not 'hoop'");
  Carrier c = make_carrier(doc.elements, doc.top);
  FinitePseudoHoop h;
  h.carrier = std::move(c);
  h.prod = BinTable::from_rows(resolve_table(doc, "prod"));
  h.arrow = BinTable::from_rows(resolve_table(doc, "arrow"));
  h.squig = BinTable::from_rows(resolve_table(doc, "squig"));
  return h;
}

AlgebraDocument document_from_eq(const FiniteEqAlgebra& a, const std::string& name,
                                 const std::optional<std::string>& point) {
  AlgebraDocument doc;
  doc.name = name;
  doc.kind = DocKind::eq;
  doc.elements = a.carrier.names;
  doc.top = a.carrier.name(a.top());
  doc.point = point;
  doc.tables["meet"] = table_tokens(a.meet, a.carrier);
  doc.tables["tilde"] = table_tokens(a.tilde, a.carrier);
  doc.tables["btilde"] = table_tokens(a.btilde, a.carrier);
  return doc;
}

AlgebraDocument document_from_bck(const FiniteBckMs& b, const std::string& name,
                                  const std::optional<std::string>& point) {
  AlgebraDocument doc;
  doc.name = name;
  doc.kind = DocKind::bck;
  doc.elements = b.carrier.names;
  doc.top = b.carrier.name(b.top());
  doc.point = point;
  doc.tables["meet"] = table_tokens(b.meet, b.carrier);
  doc.tables["arrow"] = table_tokens(b.arrow, b.carrier);
  doc.tables["squig"] = table_tokens(b.squig, b.carrier);
  return doc;
}

OperatorDocument parse_operator_document(const std::string& text) {
  OperatorDocument doc;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_op = false, saw_end = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> toks = split_tokens(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "op") {
      if (toks.size() != 2) syntax(lineno, "expected: op <name>");
      doc.name = toks[1];
      saw_op = true;
    } else if (toks[0] == "end") {
      saw_end = true;
      break;
    } else {
      if (toks.size() != 3 || toks[1] != "->")
        syntax(lineno, "expected: <token> -> <token>");
      doc.entries.emplace_back(toks[0], toks[2]);
    }
  }
  if (!saw_op) fail(Errc::syntax_error, "missing 'op' directive");
  if (!saw_end) fail(Errc::syntax_error, "missing 'end' directive");
  return doc;
}

std::string render_operator_document(const OperatorDocument& doc) {
  std::ostringstream out;
  out << "op " << doc.name << "\n";
  for (const auto& [from, to] : doc.entries) out << from << " -> " << to << "\n";
  out << "end\n";
  return out.str();
}

UnaryOperator operator_from_document(const OperatorDocument& doc, const Carrier& c) {
  const int n = c.size();
  UnaryOperator op;
  op.map.assign(static_cast<size_t>(n), -1);
  for (const auto& [from, to] : doc.entries) {
    const int i = c.index_of(from);
    const int j = c.index_of(to);
    if (i < 0) fail(Errc::unknown_token, "undeclared token '" + from + "'");
    if (j < 0) fail(Errc::unknown_token, "undeclared token '" + to + "'");
    if (op.map[static_cast<size_t>(i)] >= 0)
      fail(Errc::shape_error, "token '" + from + "' mapped twice");
    op.map[static_cast<size_t>(i)] = j;
  }
  for (int i = 0; i < n; ++i)
    if (op.map[static_cast<size_t>(i)] < 0)
      fail(Errc::shape_error, "token '" + c.name(i) + "' has no image");
  return op;
}

PartialOperator partial_operator_from_document(const OperatorDocument& doc,
                                               const Carrier& c) {
  const int n = c.size();
  PartialOperator p;
  p.table.map.assign(static_cast<size_t>(n), 0);
  p.domain = SubsetMask::empty(n);
  for (const auto& [from, to] : doc.entries) {
    const int i = c.index_of(from);
    const int j = c.index_of(to);
    if (i < 0) fail(Errc::unknown_token, "undeclared token '" + from + "'");
    if (j < 0) fail(Errc::unknown_token, "undeclared token '" + to + "'");
    if (p.domain.contains(i))
      fail(Errc::shape_error, "token '" + from + "' mapped twice");
    p.domain.insert(i);
    p.table.map[static_cast<size_t>(i)] = j;
  }
  return p;
}

OperatorDocument document_from_operator(const UnaryOperator& op, const Carrier& c,
                                        const std::string& name) {
  OperatorDocument doc;
  doc.name = name;
  for (int i = 0; i < c.size(); ++i)
    doc.entries.emplace_back(c.name(i), c.name(op(i)));
  return doc;
}

}  // namespace peqa
