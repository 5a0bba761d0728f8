#include "gerst/point.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace gerst {

Point::Point(std::initializer_list<int> coords)
    : Point(std::span<const int>(coords.begin(), coords.size())) {}

Point::Point(std::span<const int> coords) : Point(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Point Point::unit(int dim, int axis) {
  if (axis < 0 || axis >= dim) throw Error("axis out of range", "axis");
  Point p(dim);
  p[axis] = 1;
  return p;
}

bool Point::nonnegative() const noexcept {
  for (int i = 0; i < dim_; ++i)
    if (c_[static_cast<std::size_t>(i)] < 0) return false;
  return true;
}

bool Point::is_origin() const noexcept {
  for (int i = 0; i < dim_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool Point::leq(const Point& o) const noexcept {
  for (int i = 0; i < dim_; ++i)
    if ((*this)[i] > o[i]) return false;
  return true;
}

Point Point::meet(const Point& o) const {
  Point r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = std::min((*this)[i], o[i]);
  return r;
}

Point Point::join(const Point& o) const {
  Point r(dim_);
  for (int i = 0; i < dim_; ++i) r[i] = std::max((*this)[i], o[i]);
  return r;
}

Point Point::project() const {
  if (dim_ == 0) throw Error("cannot project a 0-dimensional point", "dimension");
  Point r(dim_ - 1);
  for (int i = 0; i + 1 < dim_; ++i) r[i] = (*this)[i];
  return r;
}

Point Point::lift(int last) const {
  Point r(dim_ + 1);
  for (int i = 0; i < dim_; ++i) r[i] = (*this)[i];
  r[dim_] = last;
  return r;
}

Point& Point::operator+=(const Point& o) {
  if (o.dim_ != dim_) throw Error("dimension mismatch in point arithmetic", "dimension");
  for (int i = 0; i < dim_; ++i) (*this)[i] += o[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (o.dim_ != dim_) throw Error("dimension mismatch in point arithmetic", "dimension");
  for (int i = 0; i < dim_; ++i) (*this)[i] -= o[i];
  return *this;
}

std::vector<int> Point::coords() const { return {c_.begin(), c_.begin() + dim_}; }

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? "," : "") << (*this)[i];
  os << ')';
  return os.str();
}

bool colex_less(const Point& a, const Point& b) noexcept {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int i = a.dim() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::size_t PointHash::operator()(const Point& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.dim());
  for (int i = 0; i < p.dim(); ++i)
    h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(p[i]));
  return h;
}

Cells make_cells(int dim, std::vector<Point> pts) {
  for (const auto& p : pts)
    if (p.dim() != dim)
      throw Error("point " + p.str() + " has dimension " + std::to_string(p.dim()) +
                      ", expected " + std::to_string(dim),
                  "dimension");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool contains(const Cells& cells, const Point& p) {
  return std::binary_search(cells.begin(), cells.end(), p);
}

Point meet(const Cells& cells) {
  if (cells.empty()) throw Error("empty shape has no meet", "nonempty");
  Point m = cells.front();
  for (const auto& c : cells) m = m.meet(c);
  return m;
}

Point join(const Cells& cells) {
  if (cells.empty()) throw Error("empty shape has no join", "nonempty");
  Point m = cells.front();
  for (const auto& c : cells) m = m.join(c);
  return m;
}

Cells translate(const Cells& cells, const Point& v) {
  Cells out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c + v);
  return out;  // translation preserves lexicographic order
}

Cells set_union(const Cells& a, const Cells& b) {
  Cells out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cells set_intersection(const Cells& a, const Cells& b) {
  Cells out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cells set_difference(const Cells& a, const Cells& b) {
  Cells out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Cells& a, const Cells& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

bool subset(const Cells& a, const Cells& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace gerst
