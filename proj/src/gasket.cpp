#include "gasket/gasket.hpp"

#include <algorithm>
#include <cmath>

#include "gasket/errors.hpp"

namespace gasket {

namespace {

Point corner(int i) {
  switch (i) {
    case 1:
      return vertex1();
    case 2:
      return vertex2();
    case 3:
      return vertex3();
    default:
      throw DomainError("map index must be 1..3");
  }
}

void check_level(int n, int level_cap, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be nonnegative");
  if (n > level_cap)
    throw ResourceError(std::string("level cap exceeded: ") + what + " " +
                        std::to_string(n) + " > cap " +
                        std::to_string(level_cap));
}

}  // namespace

Word::Word(std::string s) : letters(std::move(s)) {
  for (char ch : letters)
    if (ch < '1' || ch > '3')
      throw DomainError("word letters must be 1, 2 or 3");
}

Word Word::suffix(int from) const {
  Word w;
  w.letters = letters.substr(from);
  return w;
}

Point apply_map(int i, const Point& p) { return (p + corner(i)) / Rat(2); }

Point apply_map_inv(int i, const Point& p) {
  return Rat(2) * p - corner(i);
}

Point apply_word(const Word& w, const Point& p) {
  Point q = p;
  for (int k = w.size(); k-- > 0;) q = apply_map(w.letter(k), q);
  return q;
}

Point apply_word_inv(const Word& w, const Point& p) {
  Point q = p;
  for (int k = 0; k < w.size(); ++k) q = apply_map_inv(w.letter(k), q);
  return q;
}

Cell cell(const Word& w) {
  return Cell{w,
              geom::Triangle(apply_word(w, vertex1()), apply_word(w, vertex2()),
                             apply_word(w, vertex3())),
              pow2(-w.size())};
}

namespace {

// DFS subdivision; children reuse the parent's vertices and midpoints, which
// agrees with apply_word exactly because the maps are affine.
void subdivide(std::string& word, const Point& a, const Point& b,
               const Point& c, int remaining, const Rat& side,
               std::vector<Cell>& out) {
  if (remaining == 0) {
    out.push_back(Cell{Word(word), geom::Triangle(a, b, c), side});
    return;
  }
  Point mab = midpoint(a, b), mbc = midpoint(b, c), mca = midpoint(c, a);
  Rat half = side / Rat(2);
  word.push_back('1');
  subdivide(word, a, mab, mca, remaining - 1, half, out);
  word.back() = '2';
  subdivide(word, mab, b, mbc, remaining - 1, half, out);
  word.back() = '3';
  subdivide(word, mca, mbc, c, remaining - 1, half, out);
  word.pop_back();
}

}  // namespace

StageSet stage(int m, int level_cap) {
  check_level(m, level_cap, "stage level");
  StageSet s;
  s.level = m;
  s.cells.reserve(static_cast<std::size_t>(std::pow(3.0, m)) + 1);
  std::string word;
  subdivide(word, vertex1(), vertex2(), vertex3(), m, Rat(1), s.cells);
  return s;
}

Quad3 stage_area(int m) {
  if (m < 0) throw DomainError("stage level must be nonnegative");
  Rat coeff(1, 4);  // area(Delta) = sqrt(3)/4
  for (int k = 0; k < m; ++k) coeff *= Rat(3, 4);
  return Quad3::sqrt3(coeff);
}

Point witness_point(const MembershipWitness& w) {
  auto [A, B] = cell(w.word).triangle.side(w.side_index);
  return A + w.t * (B - A);
}

bool witness_holds(const Point& p, const MembershipWitness& w) {
  if (w.t < Rat(0) || w.t > Rat(1)) return false;
  if (w.kind == MembershipWitness::Kind::CellVertex && !w.t.is_zero())
    return false;
  return witness_point(w) == p;
}

std::optional<MembershipWitness> witness_on_cell(const Word& w,
                                                 const Point& p) {
  auto tri = cell(w).triangle;
  for (int side = 1; side <= 3; ++side) {
    auto [A, B] = tri.side(side);
    if (auto t = geom::param_on_segment(p, A, B)) {
      auto kind = t->is_zero() ? MembershipWitness::Kind::CellVertex
                               : MembershipWitness::Kind::SidePoint;
      return MembershipWitness{kind, w, side, *t};
    }
  }
  return std::nullopt;
}

std::vector<WitnessedPoint> side_dyadics(const Word& w, int side_index,
                                         int n) {
  if (n < 0) throw DomainError("subdivision level must be nonnegative");
  if (n > 20) throw ResourceError("subdivision level above 20");
  auto [A, B] = cell(w).triangle.side(side_index);
  Point step = B - A;
  std::int64_t count = (std::int64_t{1} << n) + 1;
  std::vector<WitnessedPoint> out;
  out.reserve(count);
  for (std::int64_t k = 0; k < count; ++k) {
    Rat t(k, std::int64_t{1} << n);
    auto kind = (k == 0) ? MembershipWitness::Kind::CellVertex
                         : MembershipWitness::Kind::SidePoint;
    out.push_back({A + t * step,
                   MembershipWitness{kind, w, side_index, t}});
  }
  return out;
}

std::vector<Point> vertex_sample(int n, int level_cap) {
  check_level(n, level_cap, "sample level");
  std::vector<Point> pts = {vertex1(), vertex2(), vertex3()};
  std::sort(pts.begin(), pts.end());
  for (int lvl = 0; lvl < n; ++lvl) {
    std::vector<Point> next;
    next.reserve(3 * pts.size());
    for (int i = 1; i <= 3; ++i)
      for (const Point& p : pts) next.push_back(apply_map(i, p));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    pts = std::move(next);
  }
  // Shared vertices collapse to 3(3^n + 1)/2 distinct points.
  std::int64_t p3 = 1;
  for (int k = 0; k < n; ++k) p3 *= 3;
  if (static_cast<std::int64_t>(pts.size()) != 3 * (p3 + 1) / 2)
    throw InvariantError("vertex_sample count mismatch");
  return pts;
}

std::vector<WitnessedPoint> vertex_sample_witnessed(int n, int level_cap) {
  check_level(n, level_cap, "sample level");
  StageSet s = stage(n, level_cap);
  std::vector<WitnessedPoint> all;
  all.reserve(3 * s.cells.size());
  for (const Cell& c : s.cells) {
    auto vs = c.triangle.vertices();
    for (int i = 1; i <= 3; ++i)
      all.push_back({vs[i - 1],
                     MembershipWitness{MembershipWitness::Kind::CellVertex,
                                       c.word, i, Rat(0)}});
  }
  auto key_less = [](const WitnessedPoint& x, const WitnessedPoint& y) {
    if (x.p != y.p) return x.p < y.p;
    if (x.witness.word != y.witness.word) return x.witness.word < y.witness.word;
    return x.witness.side_index < y.witness.side_index;
  };
  std::sort(all.begin(), all.end(), key_less);
  all.erase(std::unique(all.begin(), all.end(),
                        [](const WitnessedPoint& x, const WitnessedPoint& y) {
                          return x.p == y.p;
                        }),
            all.end());
  return all;
}

namespace {

void locate_rec(const Point& x, const Point& a, const Point& b, const Point& c,
                std::string& word, int remaining, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(Word(word));
    return;
  }
  Point mab = midpoint(a, b), mbc = midpoint(b, c), mca = midpoint(c, a);
  const Point* tri[3][3] = {{&a, &mab, &mca}, {&mab, &b, &mbc}, {&mca, &mbc, &c}};
  for (int i = 0; i < 3; ++i) {
    // Exact closed-triangle test without constructing a Triangle object.
    if (orient(*tri[i][0], *tri[i][1], x) < 0) continue;
    if (orient(*tri[i][1], *tri[i][2], x) < 0) continue;
    if (orient(*tri[i][2], *tri[i][0], x) < 0) continue;
    word.push_back(static_cast<char>('1' + i));
    locate_rec(x, *tri[i][0], *tri[i][1], *tri[i][2], word, remaining - 1, out);
    word.pop_back();
  }
}

bool in_stage_rec(const Point& x, const Point& a, const Point& b,
                  const Point& c, int remaining) {
  if (remaining == 0) return true;
  Point mab = midpoint(a, b), mbc = midpoint(b, c), mca = midpoint(c, a);
  const Point* tri[3][3] = {{&a, &mab, &mca}, {&mab, &b, &mbc}, {&mca, &mbc, &c}};
  for (int i = 0; i < 3; ++i) {
    if (orient(*tri[i][0], *tri[i][1], x) < 0) continue;
    if (orient(*tri[i][1], *tri[i][2], x) < 0) continue;
    if (orient(*tri[i][2], *tri[i][0], x) < 0) continue;
    if (in_stage_rec(x, *tri[i][0], *tri[i][1], *tri[i][2], remaining - 1))
      return true;
  }
  return false;
}

bool in_base_triangle(const Point& x) {
  Point a = vertex1(), b = vertex2(), c = vertex3();
  return orient(a, b, x) >= 0 && orient(b, c, x) >= 0 && orient(c, a, x) >= 0;
}

}  // namespace

std::vector<Word> locate_cells(const Point& x, int n, int level_cap) {
  check_level(n, level_cap, "location level");
  if (!in_base_triangle(x))
    throw DomainError("point lies outside the base triangle");
  std::vector<Word> out;
  std::string word;
  locate_rec(x, vertex1(), vertex2(), vertex3(), word, n, out);
  return out;  // DFS with ascending branch index = lexicographic order
}

bool in_stage(const Point& p, int m, int level_cap) {
  check_level(m, level_cap, "stage level");
  if (!in_base_triangle(p)) return false;
  return in_stage_rec(p, vertex1(), vertex2(), vertex3(), m);
}

}  // namespace gasket
