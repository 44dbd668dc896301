#include "qcolor/algebra.hpp"

#include <sstream>

#include "qcolor/errors.hpp"

namespace qcolor {

DihedralGroup::DihedralGroup(int n) : n_(n) {
  if (n < 3) throw InvalidArgument("dihedral group needs n >= 3, got " + std::to_string(n));
  if (2 * n > kMaxQuandleSize)
    throw InvalidArgument("D" + std::to_string(n) + " is too large (order limit " +
                          std::to_string(kMaxQuandleSize) + ")");
}

void DihedralGroup::check(const GroupElement& a) const {
  if ((a.reflection != 0 && a.reflection != 1) || a.rotation < 0 || a.rotation >= n_)
    throw InvalidArgument("element (" + std::to_string(a.reflection) + ", " + std::to_string(a.rotation) +
                          ") is not canonical in " + name());
}

GroupElement DihedralGroup::element(int code) const {
  if (code < 0 || code >= order())
    throw InvalidArgument("code " + std::to_string(code) + " out of range for " + name());
  return {code / n_, code % n_};
}

GroupElement DihedralGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  // f^sa r^ka f^sb r^kb = f^(sa+sb) r^((-1)^sb ka + kb)
  int k = (b.reflection ? -a.rotation : a.rotation) + b.rotation;
  k %= n_;
  if (k < 0) k += n_;
  return {a.reflection ^ b.reflection, k};
}

GroupElement DihedralGroup::inverse(const GroupElement& a) const {
  check(a);
  if (a.reflection) return a;
  return {0, (n_ - a.rotation) % n_};
}

GroupElement DihedralGroup::conjugate(const GroupElement& a, const GroupElement& b) const {
  return multiply(multiply(inverse(b), a), b);
}

std::vector<std::vector<int>> DihedralGroup::cayley_table() const {
  const int m = order();
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = code(multiply(element(a), element(b)));
  return t;
}

DihedralGroup parse_group_selector(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'D' && text[0] != 'd'))
    throw InvalidArgument("group selector must look like D<n>, got '" + text + "'");
  int n = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9' || n > 100000)
      throw InvalidArgument("group selector must look like D<n>, got '" + text + "'");
    n = n * 10 + (text[i] - '0');
  }
  return DihedralGroup(n);
}

namespace {

void check_shape(const std::vector<std::vector<int>>& rows) {
  const std::size_t m = rows.size();
  if (m == 0) throw InvalidArgument("quandle table is empty");
  if (m > static_cast<std::size_t>(kMaxQuandleSize))
    throw InvalidArgument("quandle table has " + std::to_string(m) + " rows; limit is " +
                          std::to_string(kMaxQuandleSize));
  for (std::size_t a = 0; a < m; ++a) {
    if (rows[a].size() != m)
      throw InvalidArgument("quandle table is not square: row " + std::to_string(a) + " has " +
                            std::to_string(rows[a].size()) + " entries, expected " + std::to_string(m));
    for (std::size_t b = 0; b < m; ++b)
      if (rows[a][b] < 0 || static_cast<std::size_t>(rows[a][b]) >= m)
        throw InvalidArgument("quandle table entry [" + std::to_string(a) + "][" + std::to_string(b) +
                              "] = " + std::to_string(rows[a][b]) + " is out of range");
  }
}

}  // namespace

FiniteQuandle FiniteQuandle::from_table(const std::vector<std::vector<int>>& rows, std::string name) {
  check_shape(rows);
  const int m = static_cast<int>(rows.size());
  FiniteQuandle q;
  q.size_ = m;
  q.name_ = std::move(name);
  q.op_.resize(m * m);
  q.inv_.assign(m * m, 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) q.op_[a * m + b] = static_cast<Color>(rows[a][b]);
  for (int b = 0; b < m; ++b) {
    std::vector<bool> hit(m, false);
    for (int x = 0; x < m; ++x) {
      const int y = rows[x][b];
      if (hit[y])
        throw InvalidArgument("column " + std::to_string(b) + " of the quandle table is not a bijection (" +
                              std::to_string(y) + " appears twice)");
      hit[y] = true;
      q.inv_[y * m + b] = static_cast<Color>(x);
    }
  }
  return q;
}

std::vector<std::vector<int>> FiniteQuandle::rows() const {
  std::vector<std::vector<int>> t(size_, std::vector<int>(size_));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) t[a][b] = op_[a * size_ + b];
  return t;
}

FiniteQuandle conjugation_quandle(const DihedralGroup& g) {
  const int m = g.order();
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rows[a][b] = g.code(g.conjugate(g.element(a), g.element(b)));
  return FiniteQuandle::from_table(rows, "Conj(" + g.name() + ")");
}

FiniteQuandle conjugation_quandle(const std::vector<std::vector<int>>& t, std::string name) {
  check_shape(t);
  const int m = static_cast<int>(t.size());
  int e = -1;
  for (int c = 0; c < m && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) ok = t[c][x] == x && t[x][c] == x;
    if (ok) e = c;
  }
  if (e < 0) throw InvalidArgument("group table has no identity");
  std::vector<int> inv(m, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (t[x][y] == e && t[y][x] == e) inv[x] = y;
  for (int x = 0; x < m; ++x)
    if (inv[x] < 0) throw InvalidArgument("group table: element " + std::to_string(x) + " has no inverse");
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) throw InvalidArgument("group table is not associative");
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) rows[a][b] = t[t[inv[b]][a]][b];
  return FiniteQuandle::from_table(rows, std::move(name));
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Idempotency:
      return "idempotency";
    case Axiom::RightInvertibility:
      return "right invertibility";
    case Axiom::SelfDistributivity:
      return "self-distributivity";
  }
  return "?";
}

std::string AxiomViolation::describe() const {
  std::ostringstream out;
  out << axiom_name(axiom) << ": ";
  const auto& w = witness;
  switch (axiom) {
    case Axiom::Idempotency:
      out << w[0] << " |> " << w[0] << " = " << w[1] << " != " << w[0];
      break;
    case Axiom::RightInvertibility:
      out << w[0] << " |> " << w[2] << " = " << w[1] << " |> " << w[2] << " with " << w[0] << " != " << w[1];
      break;
    case Axiom::SelfDistributivity:
      out << "(" << w[0] << " |> " << w[1] << ") |> " << w[2] << " != (" << w[0] << " |> " << w[2] << ") |> ("
          << w[1] << " |> " << w[2] << ")";
      break;
  }
  return out.str();
}

std::vector<AxiomViolation> verify_quandle_axioms(const std::vector<std::vector<int>>& t) {
  check_shape(t);
  const int m = static_cast<int>(t.size());
  std::vector<AxiomViolation> out;
  for (int x = 0; x < m; ++x)
    if (t[x][x] != x) out.push_back({Axiom::Idempotency, {x, t[x][x]}});
  // Right invertibility: x |> b is injective (hence bijective) in x for each b.
  for (int b = 0; b < m; ++b) {
    std::vector<int> first(m, -1);
    for (int x = 0; x < m; ++x) {
      const int y = t[x][b];
      if (first[y] >= 0)
        out.push_back({Axiom::RightInvertibility, {first[y], x, b}});
      else
        first[y] = x;
    }
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) out.push_back({Axiom::SelfDistributivity, {x, y, z}});
  return out;
}

std::vector<AxiomViolation> verify_quandle_axioms(const FiniteQuandle& q) { return verify_quandle_axioms(q.rows()); }

std::vector<std::vector<int>> parse_quandle_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int m = -1;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (m < 0) {
      std::string kw;
      std::string extra;
      if (!(ls >> kw >> m) || kw != "quandle" || (ls >> extra))
        throw ParseError("expected header 'quandle <m>'", lineno);
      if (m <= 0 || m > kMaxQuandleSize)
        throw ParseError("quandle size must be in [1, " + std::to_string(kMaxQuandleSize) + "]", lineno);
      continue;
    }
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
      if (v < 0 || v >= m) throw ParseError("entry " + tok + " out of range [0, " + std::to_string(m) + ")", lineno);
      row.push_back(v);
    }
    if (static_cast<int>(row.size()) != m)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(m), lineno);
    if (static_cast<int>(rows.size()) == m) throw ParseError("more than " + std::to_string(m) + " rows", lineno);
    rows.push_back(std::move(row));
  }
  if (m < 0) throw ParseError("missing header 'quandle <m>'");
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " rows, got " + std::to_string(rows.size()));
  return rows;
}

FiniteQuandle parse_quandle(const std::string& text, std::string name) {
  auto rows = parse_quandle_rows(text);
  try {
    return FiniteQuandle::from_table(rows, std::move(name));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_quandle(const FiniteQuandle& q) {
  std::ostringstream out;
  out << "quandle " << q.size() << '\n';
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) out << (b ? " " : "") << int(q.op(a, b));
    out << '\n';
  }
  return out.str();
}

}  // namespace qcolor
