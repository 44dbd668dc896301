#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcolor {

// Quandle elements and arc colors. Tables are stored as bytes, so quandles
// are limited to 255 elements (D_n up to n = 127).
using Color = std::uint8_t;
inline constexpr int kMaxQuandleSize = 255;

// Element f^s r^k of D_n, written (s, k).
struct GroupElement {
  int reflection = 0;  // s in {0, 1}
  int rotation = 0;    // k in [0, n)

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

class DihedralGroup {
 public:
  explicit DihedralGroup(int n);

  int n() const { return n_; }
  int order() const { return 2 * n_; }
  std::string name() const { return "D" + std::to_string(n_); }

  // Flat labeling: r^k -> k, f r^k -> n + k. Code 0 is the identity.
  int code(const GroupElement& a) const { return a.reflection * n_ + a.rotation; }
  GroupElement element(int code) const;
  GroupElement identity() const { return {}; }

  // Normal form f^s r^k with r f = f r^-1.
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  // a |> b = b^-1 a b
  GroupElement conjugate(const GroupElement& a, const GroupElement& b) const;

  std::vector<std::vector<int>> cayley_table() const;

 private:
  void check(const GroupElement& a) const;

  int n_;
};

// Parses "D<n>" (n >= 3). Throws InvalidArgument otherwise.
DihedralGroup parse_group_selector(const std::string& text);

// A finite quandle on {0..m-1} with materialized operation tables:
// op(a, b) = a |> b, inv(a, b) = a |>^-1 b.
class FiniteQuandle {
 public:
  // Builds from the rows of the operation table and derives the inverse
  // table column by column. Throws InvalidArgument if the table is not
  // square, has an out-of-range entry, or some column is not a bijection.
  static FiniteQuandle from_table(const std::vector<std::vector<int>>& rows, std::string name = "");

  int size() const { return size_; }
  const std::string& name() const { return name_; }

  Color op(Color a, Color b) const { return op_[a * size_ + b]; }
  Color inv(Color a, Color b) const { return inv_[a * size_ + b]; }

  // Row-major tables, entry [a * size() + b].
  const std::vector<Color>& op_table() const { return op_; }
  const std::vector<Color>& inv_table() const { return inv_; }

  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.size_ == b.size_ && a.op_ == b.op_;
  }

 private:
  FiniteQuandle() = default;

  int size_ = 0;
  std::string name_;
  std::vector<Color> op_;
  std::vector<Color> inv_;
};

// Conj(G) for a dihedral group; named "Conj(D<n>)".
FiniteQuandle conjugation_quandle(const DihedralGroup& g);

// Conj(G) for a group given by its multiplication table (entry [a][b] = a*b).
// Throws InvalidArgument unless the table is associative with an identity
// and inverses.
FiniteQuandle conjugation_quandle(const std::vector<std::vector<int>>& group_table, std::string name);

enum class Axiom { Idempotency, RightInvertibility, SelfDistributivity };

const char* axiom_name(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  // (x, x |> x); or (x, y, b) with x |> b = y |> b; or (x, y, z)
  std::vector<int> witness;

  std::string describe() const;
};

// Checks the three quandle axioms on a raw operation table. Returns an empty
// list iff all hold. A table that is not m x m with entries in [0, m) is a
// malformed input, not a violation: InvalidArgument is thrown.
std::vector<AxiomViolation> verify_quandle_axioms(const std::vector<std::vector<int>>& rows);
std::vector<AxiomViolation> verify_quandle_axioms(const FiniteQuandle& q);

// Quandle table text format: "quandle <m>" then m rows of m integers.
// Comment lines start with '#'. parse_quandle_rows only checks the shape;
// parse_quandle additionally requires every column to be a bijection.
std::vector<std::vector<int>> parse_quandle_rows(const std::string& text);
FiniteQuandle parse_quandle(const std::string& text, std::string name = "");
std::string serialize_quandle(const FiniteQuandle& q);

}  // namespace qcolor
