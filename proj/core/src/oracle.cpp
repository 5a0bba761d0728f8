#include "gerst/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace gerst {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; static_cast<std::uint64_t>(q) * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, std::size_t d) : p_(p), d_(d), a_(d * d, 0) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime", "prime");
  if (p <= d) throw Error("prime must exceed the matrix size", "prime");
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint32_t p, std::size_t d) {
  PrimeFieldMatrix m(p, d);
  for (std::size_t i = 0; i < d; ++i) m.a_[i * d + i] = 1;
  return m;
}

void PrimeFieldMatrix::set(std::size_t i, std::size_t j, std::int64_t v) {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  a_[i * d_ + j] = static_cast<std::uint32_t>(r);
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) {
  if (x.p_ != y.p_ || x.d_ != y.d_) throw Error("matrix shapes differ", "dimension");
  PrimeFieldMatrix out(x.p_, x.d_);
  const std::size_t d = x.d_;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint64_t a = x.a_[i * d + k];
      if (!a) continue;
      for (std::size_t j = 0; j < d; ++j)
        out.a_[i * d + j] =
            static_cast<std::uint32_t>((out.a_[i * d + j] + a * y.a_[k * d + j]) % x.p_);
    }
  }
  return out;
}

bool commute(const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) { return x * y == y * x; }

namespace {

using Sparse = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Fully reduced row-echelon basis of a subspace of k^(d*d); sparse rows.
class SpanBasis {
 public:
  SpanBasis(std::size_t n, std::uint32_t p) : p_(p), pivot_of_(n, -1), acc_(n, 0), mark_(n, 0) {}

  std::size_t size() const { return rows_.size(); }

  bool insert(const Sparse& v) {
    touched_.clear();
    auto touch = [&](std::uint32_t j) {
      if (!mark_[j]) {
        mark_[j] = 1;
        touched_.push_back(j);
      }
    };
    for (auto [j, x] : v) {
      acc_[j] = x;
      touch(j);
    }
    for (auto [j, x] : v) {
      const int k = pivot_of_[j];
      if (k < 0 || !x) continue;
      const std::uint64_t c = x;
      for (auto [t, y] : rows_[static_cast<std::size_t>(k)]) {
        touch(t);
        acc_[t] = static_cast<std::uint32_t>((acc_[t] + (p_ - c * y % p_)) % p_);
      }
    }
    Sparse r;
    for (auto j : touched_) {
      if (acc_[j]) r.emplace_back(j, acc_[j]);
      acc_[j] = 0;
      mark_[j] = 0;
    }
    if (r.empty()) return false;
    std::sort(r.begin(), r.end());
    const std::uint64_t inv = inverse(r.front().second, p_);
    for (auto& e : r) e.second = static_cast<std::uint32_t>(e.second * inv % p_);
    const std::uint32_t piv = r.front().first;
    for (auto& row : rows_) {
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(piv, 0u));
      if (it == row.end() || it->first != piv) continue;
      row = axpy(row, r, p_ - it->second);
    }
    pivot_of_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

 private:
  // x + c * y, both sorted.
  Sparse axpy(const Sparse& x, const Sparse& y, std::uint64_t c) const {
    Sparse out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.push_back(x[i++]);
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, static_cast<std::uint32_t>(c * y[j].second % p_));
        ++j;
      } else {
        const auto v = static_cast<std::uint32_t>((x[i].second + c * y[j].second) % p_);
        if (v) out.emplace_back(x[i].first, v);
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::uint32_t p_;
  std::vector<Sparse> rows_;
  std::vector<int> pivot_of_;
  std::vector<std::uint32_t> acc_;
  std::vector<char> mark_;
  std::vector<std::uint32_t> touched_;
};

Sparse to_sparse(const PrimeFieldMatrix& m) {
  Sparse s;
  const auto& a = m.entries();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k]) s.emplace_back(static_cast<std::uint32_t>(k), a[k]);
  return s;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(x + 1);
    return h;
  }
};

std::size_t index_of(const Cells& cells, const Point& p) {
  return static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), p) - cells.begin());
}

}  // namespace

ModuleBasis module_basis(const GluingData& g) {
  require_valid(g);
  ModuleBasis mb;
  for (const auto& v : g.lambda.cells()) mb.cells.push_back({false, v});
  const Cells glued = make_cells(g.dim(), g.placed_c());
  for (const auto& w : g.mu.cells())
    if (!contains(glued, w)) mb.cells.push_back({true, w});
  for (std::size_t j = 0; j < g.nu.size(); ++j)
    for (const auto& u : g.nu[j].cells())
      mb.identification.emplace_back(u + g.c[j], index_of(g.lambda.cells(), u + g.b[j]));
  std::sort(mb.identification.begin(), mb.identification.end());
  return mb;
}

MonomialAction module_action(const GluingData& g) {
  const ModuleBasis mb = module_basis(g);
  const Cells& lam = g.lambda.cells();
  Cells free_right;
  for (const auto& e : mb.cells)
    if (e.right) free_right.push_back(e.cell);
  const std::size_t d = mb.cells.size();
  const int n = g.dim();

  MonomialAction a;
  a.d = d;
  a.act.assign(static_cast<std::size_t>(n), std::vector<int>(d, -1));
  for (int i = 0; i < n; ++i) {
    auto& row = a.act[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < d; ++k) {
      Point w = mb.cells[k].cell;
      ++w[i];
      if (!mb.cells[k].right) {
        if (contains(lam, w)) row[k] = static_cast<int>(index_of(lam, w));
        continue;
      }
      if (!g.mu.contains(w)) continue;
      auto it = std::lower_bound(mb.identification.begin(), mb.identification.end(),
                                 std::make_pair(w, std::size_t{0}));
      if (it != mb.identification.end() && it->first == w)
        row[k] = static_cast<int>(it->second);
      else
        row[k] = static_cast<int>(lam.size() + index_of(free_right, w));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const int x = a.act[i][k] < 0 ? -1 : a.act[j][static_cast<std::size_t>(a.act[i][k])];
        const int y = a.act[j][k] < 0 ? -1 : a.act[i][static_cast<std::size_t>(a.act[j][k])];
        if (x != y) throw Error("module action does not commute", "internal");
      }
  return a;
}

std::vector<PrimeFieldMatrix> to_matrices(const MonomialAction& a, std::uint32_t p) {
  std::vector<PrimeFieldMatrix> out;
  for (const auto& f : a.act) {
    PrimeFieldMatrix m(p, a.d);
    for (std::size_t k = 0; k < a.d; ++k)
      if (f[k] >= 0) m.set(static_cast<std::size_t>(f[k]), k, 1);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<PrimeFieldMatrix> module_to_matrices(const GluingData& g, std::uint32_t p) {
  auto mats = to_matrices(module_action(g), p);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commute(mats[i], mats[j])) throw Error("constructed matrices do not commute", "internal");
  return mats;
}

std::size_t algebra_dimension(const std::vector<PrimeFieldMatrix>& mats) {
  if (mats.empty()) throw Error("need at least one matrix", "dimension");
  const std::uint32_t p = mats.front().prime();
  const std::size_t d = mats.front().size();
  for (const auto& m : mats)
    if (m.prime() != p || m.size() != d) throw Error("matrices differ in size or field", "dimension");
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commute(mats[i], mats[j])) throw Error("matrices do not commute", "commuting");

  SpanBasis span(d * d, p);
  std::deque<PrimeFieldMatrix> layer;
  auto id = PrimeFieldMatrix::identity(p, d);
  if (span.insert(to_sparse(id))) layer.push_back(std::move(id));
  // Children of independent products suffice: a dependent product's
  // multiples lie in the span of the multiples of earlier ones.
  while (!layer.empty()) {
    const PrimeFieldMatrix m = std::move(layer.front());
    layer.pop_front();
    for (const auto& a : mats) {
      PrimeFieldMatrix prod = m * a;
      if (span.insert(to_sparse(prod))) layer.push_back(std::move(prod));
    }
  }
  return span.size();
}

std::size_t algebra_dimension(const MonomialAction& a, std::uint32_t p) {
  const std::size_t d = a.d;
  if (!is_prime(p) || p <= d) throw Error("need a prime larger than the module dimension", "prime");
  SpanBasis span(d * d, p);
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::deque<std::vector<int>> layer;

  auto sparse_of = [d](const std::vector<int>& f) {
    Sparse s;
    for (std::size_t k = 0; k < d; ++k)
      if (f[k] >= 0) s.emplace_back(static_cast<std::uint32_t>(static_cast<std::size_t>(f[k]) * d + k), 1u);
    std::sort(s.begin(), s.end());
    return s;
  };

  std::vector<int> id(d);
  for (std::size_t k = 0; k < d; ++k) id[k] = static_cast<int>(k);
  seen.insert(id);
  if (span.insert(sparse_of(id))) layer.push_back(std::move(id));
  while (!layer.empty()) {
    const std::vector<int> f = std::move(layer.front());
    layer.pop_front();
    for (const auto& gen : a.act) {
      std::vector<int> h(d, -1);
      bool zero = true;
      for (std::size_t k = 0; k < d; ++k) {
        if (f[k] >= 0) h[k] = gen[static_cast<std::size_t>(f[k])];
        zero = zero && h[k] < 0;
      }
      if (zero || !seen.insert(h).second) continue;
      if (span.insert(sparse_of(h))) layer.push_back(std::move(h));
    }
  }
  return span.size();
}

GqResult verify_gq(const GluingData& g, std::uint32_t p) {
  GqResult r;
  const auto action = module_action(g);
  r.prime = p;
  r.dim_n = action.d;
  r.dim_alg = action.d == 0 ? 0 : algebra_dimension(action, p);
  r.holds = r.dim_alg <= r.dim_n;
  r.union_size = set_union(g.lambda.cells(), g.mu.cells()).size();
  r.matches_union = r.dim_alg == r.union_size;
  return r;
}

}  // namespace gerst
