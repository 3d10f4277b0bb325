#include "pfaffcy/polymat.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "pfaffcy/parallel.hpp"

namespace pfaffcy {

PolyMat::PolyMat(const Ring& ring, int rows, int cols)
    : ring_(ring), rows_(rows), cols_(cols), row_twists_(rows, 0), col_twists_(cols, 0),
      entries_(std::size_t(rows) * cols, Poly(ring)) {}

PolyMat::PolyMat(const Ring& ring, std::vector<int> row_twists, std::vector<int> col_twists, bool skew)
    : ring_(ring), rows_(static_cast<int>(row_twists.size())), cols_(static_cast<int>(col_twists.size())),
      skew_(skew), row_twists_(std::move(row_twists)), col_twists_(std::move(col_twists)),
      entries_(std::size_t(rows_) * cols_, Poly(ring)) {
  if (skew_ && rows_ != cols_) throw Error(Errc::invalid_argument, "skew matrix must be square");
}

void PolyMat::set(int i, int j, Poly p) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error(Errc::invalid_argument, "matrix index out of range");
  if (skew_) {
    if (i == j) {
      if (!p.is_zero()) throw Error(Errc::invalid_argument, "skew matrix needs a zero diagonal");
      return;
    }
    entries_[std::size_t(j) * cols_ + i] = -p;
  }
  entries_[std::size_t(i) * cols_ + j] = std::move(p);
}

void PolyMat::check() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Poly& e = at(i, j);
      if (!e.is_zero()) {
        auto d = e.homogeneous_degree();
        if (!d || *d != entry_degree(i, j))
          throw Error(Errc::invalid_argument, "matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") does not have the twist-forced degree");
      }
      if (skew_ && (e + at(j, i)) != Poly(ring_)) throw Error(Errc::invalid_argument, "matrix is not skew");
    }
}

PolyMat PolyMat::transpose() const {
  std::vector<int> rt(cols_), ct(rows_);
  for (int j = 0; j < cols_; ++j) rt[j] = -col_twists_[j];
  for (int i = 0; i < rows_; ++i) ct[i] = -row_twists_[i];
  PolyMat t(ring_, rt, ct);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.entries_[std::size_t(j) * rows_ + i] = at(i, j);
  t.skew_ = skew_;
  return t;
}

PolyMat PolyMat::substitute(std::span<const Poly> images) const {
  const Ring& target = images.empty() ? ring_ : images.front().ring();
  PolyMat out(target, row_twists_, col_twists_);
  out.skew_ = skew_;
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].substitute(images);
  return out;
}

Matrix PolyMat::evaluate(std::span<const Coeff> point) const {
  Matrix m(ring_.field, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).evaluate(point);
  return m;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::invalid_argument, "matrix shapes do not match");
  // twists compose when a's column twists and b's row twists agree; otherwise
  // the product keeps a's rows and b's columns shifted by the first mismatch
  std::vector<int> ct(b.cols_);
  int shift = a.cols_ ? a.col_twists_[0] - b.row_twists_[0] : 0;
  for (int j = 0; j < b.cols_; ++j) ct[j] = b.col_twists_[j] + shift;
  PolyMat c(a.ring_, a.row_twists_, ct);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      Poly s(a.ring_);
      for (int k = 0; k < a.cols_; ++k) {
        const Poly& x = a.at(i, k);
        const Poly& y = b.at(k, j);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      c.entries_[std::size_t(i) * c.cols_ + j] = std::move(s);
    }
  return c;
}

bool operator==(const PolyMat& a, const PolyMat& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

// Pfaffians of all masks in `targets` by level-wise expansion along the
// smallest index; only sub-supports reachable from a target are computed.
std::vector<Poly> pfaffians_of(const PolyMat& a, const std::vector<Mask>& targets) {
  if (!a.skew()) throw Error(Errc::invalid_argument, "pfaffian needs a skew matrix");
  if (a.rows() > 32) throw Error(Errc::unsupported, "pfaffian supports limited to 32 indices");
  const Ring& ring = a.ring();
  int top = 0;
  for (Mask m : targets) {
    int s = std::popcount(m);
    if (s % 2) throw Error(Errc::odd_support, "pfaffian support must have even size");
    top = std::max(top, s);
  }
  // needed[l] = supports of size 2l
  std::vector<std::vector<Mask>> needed(top / 2 + 1);
  for (Mask m : targets) needed[std::popcount(m) / 2].push_back(m);
  for (int l = top / 2; l >= 1; --l) {
    auto& cur = needed[l];
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    if (l == 1) break;
    for (Mask m : cur) {
      Mask rest = m & (m - 1);
      for (Mask r = rest; r; r &= r - 1) needed[l - 1].push_back(rest & ~(r & -r));
    }
  }
  std::unordered_map<Mask, Poly> prev;
  prev.emplace(Mask{0}, Poly::constant(ring, 1));
  std::unordered_map<Mask, Poly> all_results;
  std::vector<Mask> wanted = targets;
  std::sort(wanted.begin(), wanted.end());
  auto keep = [&](Mask m, const Poly& p) {
    if (std::binary_search(wanted.begin(), wanted.end(), m)) all_results.emplace(m, p);
  };
  if (std::binary_search(wanted.begin(), wanted.end(), Mask{0})) all_results.emplace(Mask{0}, prev.at(0));
  for (int l = 1; l <= top / 2; ++l) {
    const auto& cur = needed[l];
    std::vector<Poly> values(cur.size());
    parallel_for(cur.size(), [&](std::size_t idx) {
      Mask m = cur[idx];
      int s0 = std::countr_zero(m);
      Mask rest = m & (m - 1);
      Poly sum(ring);
      int t = 1;
      for (Mask r = rest; r; r &= r - 1, ++t) {
        int st = std::countr_zero(r);
        const Poly& e = a.at(s0, st);
        if (e.is_zero()) continue;
        const Poly& sub = prev.at(rest & ~(r & -r));
        if (sub.is_zero()) continue;
        Poly term = e * sub;
        if (t % 2 == 1) sum += term;
        else sum -= term;
      }
      values[idx] = std::move(sum);
    });
    std::unordered_map<Mask, Poly> next;
    next.reserve(cur.size());
    for (std::size_t idx = 0; idx < cur.size(); ++idx) {
      keep(cur[idx], values[idx]);
      next.emplace(cur[idx], std::move(values[idx]));
    }
    prev = std::move(next);
  }
  std::vector<Poly> out;
  out.reserve(targets.size());
  for (Mask m : targets) out.push_back(all_results.at(m));
  return out;
}

Mask to_mask(std::span<const int> support, int n) {
  Mask m = 0;
  for (int i : support) {
    if (i < 0 || i >= n) throw Error(Errc::invalid_argument, "pfaffian support index out of range");
    if (m & (Mask{1} << i)) throw Error(Errc::invalid_argument, "repeated index in pfaffian support");
    m |= Mask{1} << i;
  }
  return m;
}

}  // namespace

Poly pfaffian(const PolyMat& a, std::span<const int> support) {
  if (support.size() % 2) throw Error(Errc::odd_support, "pfaffian support must have even size");
  return pfaffians_of(a, {to_mask(support, a.rows())}).front();
}

std::vector<Poly> principal_pfaffians(const PolyMat& a, int size) {
  if (size % 2) throw Error(Errc::odd_support, "pfaffian size must be even");
  if (size < 0 || size > a.rows()) throw Error(Errc::invalid_argument, "pfaffian size exceeds the matrix");
  std::vector<Mask> targets;
  for (const auto& s : subsets(a.rows(), size)) targets.push_back(to_mask(s, a.rows()));
  return pfaffians_of(a, targets);
}

namespace {

struct MinorKey {
  std::uint64_t rows, cols;
  bool operator==(const MinorKey& o) const { return rows == o.rows && cols == o.cols; }
};
struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const { return k.rows * 0x9E3779B97F4A7C15ull ^ (k.cols + 0x632BE59B); }
};

class MinorEngine {
 public:
  explicit MinorEngine(const PolyMat& m) : m_(m) {}

  // rows and cols given as masks of equal popcount; expansion along the last row
  const Poly& minor(std::uint64_t rows, std::uint64_t cols) {
    MinorKey key{rows, cols};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly result(m_.ring());
    if (rows == 0) {
      result = Poly::constant(m_.ring(), 1);
    } else {
      int last = 63 - std::countl_zero(rows);
      std::uint64_t sub_rows = rows & ~(std::uint64_t{1} << last);
      int k = std::popcount(rows);
      int pos = 0;
      for (std::uint64_t c = cols; c; c &= c - 1, ++pos) {
        int col = std::countr_zero(c);
        const Poly& e = m_.at(last, col);
        if (e.is_zero()) continue;
        const Poly& sub = minor(sub_rows, cols & ~(c & -c));
        if (sub.is_zero()) continue;
        Poly term = e * sub;
        if ((k - 1 + pos) % 2 == 0) result += term;
        else result -= term;
      }
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const PolyMat& m_;
  std::unordered_map<MinorKey, Poly, MinorKeyHash> memo_;
};

}  // namespace

std::vector<Poly> minors_ideal(const PolyMat& m, int size) {
  if (size < 0 || size > std::min(m.rows(), m.cols())) throw Error(Errc::invalid_argument, "minor size out of range");
  if (m.rows() > 64 || m.cols() > 64) throw Error(Errc::unsupported, "minors limited to 64 rows and columns");
  MinorEngine engine(m);
  std::vector<Poly> out;
  auto rs = subsets(m.rows(), size);
  auto cs = subsets(m.cols(), size);
  for (const auto& r : rs) {
    std::uint64_t rm = 0;
    for (int i : r) rm |= std::uint64_t{1} << i;
    for (const auto& c : cs) {
      std::uint64_t cm = 0;
      for (int j : c) cm |= std::uint64_t{1} << j;
      out.push_back(engine.minor(rm, cm));
    }
  }
  return out;
}

Poly determinant(const PolyMat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  if (m.rows() == 0) return Poly::constant(m.ring(), 1);
  return minors_ideal(m, m.rows()).front();
}

PolyMat jacobian(std::span<const Poly> polys, std::span<const int> vars) {
  if (polys.empty()) throw Error(Errc::invalid_argument, "jacobian of an empty list");
  const Ring& ring = polys.front().ring();
  std::vector<int> rt(polys.size()), ct(vars.size(), 0);
  for (std::size_t i = 0; i < polys.size(); ++i) rt[i] = 1 - std::max(polys[i].degree(), 0);
  PolyMat j(ring, rt, ct);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t k = 0; k < vars.size(); ++k)
      j.set(static_cast<int>(i), static_cast<int>(k), polys[i].derivative(vars[k]));
  return j;
}

PolyMat jacobian(std::span<const Poly> polys) {
  if (polys.empty()) throw Error(Errc::invalid_argument, "jacobian of an empty list");
  std::vector<int> vars(polys.front().ring().nvars);
  for (std::size_t k = 0; k < vars.size(); ++k) vars[k] = static_cast<int>(k);
  return jacobian(polys, vars);
}

}  // namespace pfaffcy
