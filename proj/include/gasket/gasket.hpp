#pragma once

#include <string>
#include <vector>

#include "gasket/geom.hpp"
#include "gasket/point.hpp"

namespace gasket {

// Enumeration guard: stage(m) materializes 3^m cells.
inline constexpr int kDefaultLevelCap = 12;

// Address of a construction cell: a finite word over {1,2,3}. The empty word
// addresses the whole triangle. Maps compose right-to-left, so the last
// letter acts first and the first letter names the top-level branch.
struct Word {
  std::string letters;  // characters '1'..'3'

  Word() = default;
  explicit Word(std::string s);

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  int letter(int i) const { return letters[i] - '0'; }
  bool has_prefix(const Word& p) const {
    return letters.compare(0, p.letters.size(), p.letters) == 0;
  }
  Word suffix(int from) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters == b.letters;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters < b.letters;  // lexicographic, '1' < '2' < '3'
  }

  const std::string& str() const { return letters; }
};

// The corner map phi_i(p) = (p + v_i)/2 and its inverse.
Point apply_map(int i, const Point& p);
Point apply_map_inv(int i, const Point& p);

// phi_w = phi_{i1} o ... o phi_{in}: the rightmost letter is applied first.
Point apply_word(const Word& w, const Point& p);
Point apply_word_inv(const Word& w, const Point& p);

// Level-|w| construction triangle phi_w(Delta), side exactly 2^-|w|.
struct Cell {
  Word word;
  geom::Triangle triangle;
  Rat side;
};

Cell cell(const Word& w);

// All 3^m cells of one construction stage, in lexicographic word order.
struct StageSet {
  int level;
  std::vector<Cell> cells;
};

StageSet stage(int m, int level_cap = kDefaultLevelCap);

// (3/4)^m * sqrt(3)/4, the exact area of K_m.
Quad3 stage_area(int m);

// Constructive evidence that a point belongs to E: the point lies on side
// `side_index` of the cell addressed by `word`, at affine parameter t in
// [0,1]. Every cell side is contained in E, so any such location proves
// membership; dyadic t corresponds to the subdivision-point construction,
// and t = 0 marks a cell vertex.
struct MembershipWitness {
  enum class Kind { CellVertex, SidePoint };
  Kind kind;
  Word word;
  int side_index;  // 1..3, see geom::Triangle::side
  Rat t;
};

Point witness_point(const MembershipWitness& w);
bool witness_holds(const Point& p, const MembershipWitness& w);

struct WitnessedPoint {
  Point p;
  MembershipWitness witness;
};

// Finds a side of the given cell containing p, if any, and returns the
// corresponding witness (smallest side index wins).
std::optional<MembershipWitness> witness_on_cell(const Word& w,
                                                 const Point& p);

// The 2^n + 1 dyadic subdivision points along one side of a cell, each with
// its witness.
std::vector<WitnessedPoint> side_dyadics(const Word& w, int side_index, int n);

// Deduplicated vertices of all level-n cells, sorted by (u, w); the count is
// 3(3^n + 1)/2 and every point lies in E exactly. This is the canonical
// finite inner approximation E_n.
std::vector<Point> vertex_sample(int n, int level_cap = kDefaultLevelCap);
std::vector<WitnessedPoint> vertex_sample_witnessed(
    int n, int level_cap = kDefaultLevelCap);

// All length-n words whose closed cell contains x, in lexicographic order;
// empty iff x lies outside stage n. Consumers needing one representative take
// the front (smallest) word. Throws if x is outside the base triangle.
std::vector<Word> locate_cells(const Point& x, int n,
                               int level_cap = kDefaultLevelCap);

// Necessary-condition membership test: p survives to stage m. Points in E
// pass for every m; the converse holds only in the limit.
bool in_stage(const Point& p, int m, int level_cap = kDefaultLevelCap);

}  // namespace gasket
