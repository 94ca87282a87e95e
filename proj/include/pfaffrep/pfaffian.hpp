#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfaffrep/intmatrix.hpp"
#include "pfaffrep/sympoly.hpp"

namespace pfaffrep {

inline bool bears_symbols(const RingValue&) { return false; }
inline bool bears_symbols(const SymbolicCoefficient& c) { return c.symbol_degree() > 0; }

// a*x + b*y + c*z.
template <class C>
struct LinearForm {
  C a;
  C b;
  C c;

  static LinearForm zero(const C& z) { return {z, z, z}; }
  static LinearForm along_x(const C& z, const BigInt& k = 1) { return {z.one_like().scaled(k), z, z}; }
  static LinearForm along_y(const C& z, const BigInt& k = 1) { return {z, z.one_like().scaled(k), z}; }
  static LinearForm along_z(const C& z, const BigInt& k = 1) { return {z, z, z.one_like().scaled(k)}; }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
  bool bears_symbols() const {
    return pfaffrep::bears_symbols(a) || pfaffrep::bears_symbols(b) || pfaffrep::bears_symbols(c);
  }

  LinearForm operator-() const { return {-a, -b, -c}; }
  LinearForm operator+(const LinearForm& o) const { return {a + o.a, b + o.b, c + o.c}; }
  LinearForm scaled(const BigInt& k) const { return {a.scaled(k), b.scaled(k), c.scaled(k)}; }

  TriPoly<C> to_poly() const {
    TriPoly<C> p(1, a.zero_like());
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// out += f * p (or -= when `negate`); out must have degree deg(p) + 1.
template <class C>
void add_mul_linear(TriPoly<C>& out, const LinearForm<C>& f, const TriPoly<C>& p, bool negate = false) {
  for (const auto& [m, v] : p.terms()) {
    if (!f.a.is_zero()) out.add_product({m.i + 1, m.j, m.k}, f.a, v, negate);
    if (!f.b.is_zero()) out.add_product({m.i, m.j + 1, m.k}, f.b, v, negate);
    if (!f.c.is_zero()) out.add_product({m.i, m.j, m.k + 1}, f.c, v, negate);
  }
}

template <class C>
TriPoly<C> mul_linear(const LinearForm<C>& f, const TriPoly<C>& p) {
  TriPoly<C> out(p.degree() + 1, p.zero());
  add_mul_linear(out, f, p);
  return out;
}

// Skew-symmetric matrix of linear forms, 1-based. Only the strict upper
// triangle is stored; lookups below the diagonal negate.
template <class C>
class SkewMatrix {
 public:
  using Upper = std::map<std::pair<int, int>, LinearForm<C>>;

  explicit SkewMatrix(int size, C zero = C{}) : size_(size), zero_(std::move(zero)) {
    if (size < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix size");
  }

  int size() const { return size_; }
  const C& zero() const { return zero_; }
  const Upper& upper() const { return upper_; }

  LinearForm<C> at(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return LinearForm<C>::zero(zero_);
    bool swap = i > j;
    auto it = upper_.find(swap ? std::pair{j, i} : std::pair{i, j});
    if (it == upper_.end()) return LinearForm<C>::zero(zero_);
    return swap ? -it->second : it->second;
  }

  void set(int i, int j, const LinearForm<C>& form) {
    check_index(i);
    check_index(j);
    if (i == j) {
      if (!form.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "diagonal of a skew matrix is zero");
      }
      return;
    }
    std::pair key = i < j ? std::pair{i, j} : std::pair{j, i};
    LinearForm<C> stored = i < j ? form : -form;
    if (stored.is_zero()) {
      upper_.erase(key);
    } else {
      upper_.insert_or_assign(key, std::move(stored));
    }
  }

  friend bool operator==(const SkewMatrix& lhs, const SkewMatrix& rhs) {
    return lhs.size_ == rhs.size_ && lhs.upper_ == rhs.upper_;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > size_) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(size_));
    }
  }

  int size_;
  C zero_;
  Upper upper_;
};

// Delete rows and columns p and q, compacting the remaining indices.
template <class C>
SkewMatrix<C> minor(const SkewMatrix<C>& m, int p, int q) {
  if (p == q || p < 1 || q < 1 || p > m.size() || q > m.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "minor {" + std::to_string(p) + "," + std::to_string(q) + "} of a " +
                    std::to_string(m.size()) + "x" + std::to_string(m.size()) + " matrix");
  }
  auto shift = [&](int i) { return i - (i > p) - (i > q); };
  SkewMatrix<C> out(m.size() - 2, m.zero());
  for (const auto& [key, form] : m.upper()) {
    auto [i, j] = key;
    if (i == p || i == q || j == p || j == q) continue;
    out.set(shift(i), shift(j), form);
  }
  return out;
}

namespace detail {

template <class C>
void require_even(const SkewMatrix<C>& m) {
  if (m.size() % 2 != 0) {
    throw Error(ErrorKind::OddSize, "Pfaffian of a " + std::to_string(m.size()) + "x" +
                                        std::to_string(m.size()) + " matrix");
  }
}

template <class C>
TriPoly<C> unit_poly(const C& zero) {
  TriPoly<C> one(0, zero);
  one.add_term({0, 0, 0}, zero.one_like());
  return one;
}

// Row-major dense copy of the full matrix, 0-based.
template <class C>
std::vector<std::optional<LinearForm<C>>> dense(const SkewMatrix<C>& m) {
  const int n = m.size();
  std::vector<std::optional<LinearForm<C>>> out(static_cast<std::size_t>(n) * n);
  for (const auto& [key, form] : m.upper()) {
    auto [i, j] = key;
    out[(i - 1) * n + (j - 1)] = form;
    out[(j - 1) * n + (i - 1)] = -form;
  }
  return out;
}

}  // namespace detail

// Laplace-type expansion along the last row:
//   Pf(M) = sum_{j<n} (-1)^j M[n][j] Pf(M with rows/cols n, j deleted).
// Sub-Pfaffians are memoized on the set of surviving indices, so sparse
// trailing rows (as in the representation templates) stay cheap.
template <class C>
TriPoly<C> pf_laplace(const SkewMatrix<C>& m) {
  detail::require_even(m);
  const int n = m.size();
  if (n > 64) {
    throw Error(ErrorKind::SizeGuardExceeded, "pf_laplace supports sizes up to 64");
  }
  const auto entries = detail::dense(m);
  std::unordered_map<std::uint64_t, TriPoly<C>> memo;

  std::function<const TriPoly<C>&(std::uint64_t)> rec = [&](std::uint64_t mask) -> const TriPoly<C>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int count = std::popcount(mask);
    TriPoly<C> total(count / 2, m.zero());
    if (mask == 0) {
      total = detail::unit_poly(m.zero());
    } else {
      const int last = 63 - std::countl_zero(mask);
      int pos = 0;
      for (int j = 0; j < last; ++j) {
        if (!(mask >> j & 1)) continue;
        ++pos;
        const auto& entry = entries[last * n + j];
        if (!entry || entry->is_zero()) continue;
        const std::uint64_t rest = mask & ~(std::uint64_t{1} << j) & ~(std::uint64_t{1} << last);
        const TriPoly<C>& sub = rec(rest);
        if (sub.is_zero()) continue;
        add_mul_linear(total, *entry, sub, pos % 2 == 1);
      }
    }
    return memo.emplace(mask, std::move(total)).first->second;
  };

  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return rec(full);
}

// Sign of the permutation given as a sequence of distinct integers.
inline int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) inversions += seq[a] > seq[b];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Sum over perfect matchings {(i1<j1),...,(in<jn)} of
// sign(i1 j1 ... in jn) * prod M[i_r][j_r].
template <class C>
TriPoly<C> pf_matchings(const SkewMatrix<C>& m, int size_guard = 12) {
  detail::require_even(m);
  const int n = m.size();
  if (n > size_guard) {
    throw Error(ErrorKind::SizeGuardExceeded,
                "pf_matchings limited to size " + std::to_string(size_guard));
  }
  TriPoly<C> total(n / 2, m.zero());
  std::vector<int> sequence;
  std::vector<bool> used(n + 1, false);

  std::function<void(const TriPoly<C>&)> rec = [&](const TriPoly<C>& partial) {
    int first = 1;
    while (first <= n && used[first]) ++first;
    if (first > n) {
      const int sign = permutation_sign(sequence);
      total += sign > 0 ? partial : -partial;
      return;
    }
    used[first] = true;
    for (int second = first + 1; second <= n; ++second) {
      if (used[second]) continue;
      LinearForm<C> entry = m.at(first, second);
      if (entry.is_zero()) continue;
      used[second] = true;
      sequence.push_back(first);
      sequence.push_back(second);
      rec(mul_linear(entry, partial));
      sequence.resize(sequence.size() - 2);
      used[second] = false;
    }
    used[first] = false;
  };

  rec(detail::unit_poly(m.zero()));
  return total;
}

// Determinant of the full skew matrix by row-by-row cofactor expansion,
// memoized on the set of columns already used.
template <class C>
TriPoly<C> det(const SkewMatrix<C>& m, int size_guard = 12) {
  const int n = m.size();
  if (n > size_guard) {
    throw Error(ErrorKind::SizeGuardExceeded, "det limited to size " + std::to_string(size_guard));
  }
  const auto entries = detail::dense(m);
  std::unordered_map<std::uint64_t, TriPoly<C>> layer;
  layer.emplace(0, detail::unit_poly(m.zero()));
  for (int row = 0; row < n; ++row) {
    std::unordered_map<std::uint64_t, TriPoly<C>> next;
    for (const auto& [used, poly] : layer) {
      for (int col = 0; col < n; ++col) {
        if (used >> col & 1) continue;
        const auto& entry = entries[row * n + col];
        if (!entry || entry->is_zero()) continue;
        // Each previously chosen column to the right is one inversion.
        const int inversions = std::popcount(used >> (col + 1));
        const std::uint64_t key = used | (std::uint64_t{1} << col);
        auto it = next.try_emplace(key, row + 1, m.zero()).first;
        add_mul_linear(it->second, *entry, poly, inversions % 2 == 1);
      }
    }
    layer = std::move(next);
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  auto it = layer.find(full);
  if (it == layer.end()) return TriPoly<C>(n, m.zero());
  return it->second;
}

// X M X^T for an integer matrix X.
template <class C>
SkewMatrix<C> congruence(const SkewMatrix<C>& m, const IntMatrix& x) {
  const int n = m.size();
  if (x.rows() != static_cast<std::size_t>(n) || x.cols() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::InvalidArgument, "congruence needs a square matrix of matching size");
  }
  SkewMatrix<C> out(n, m.zero());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      LinearForm<C> acc = LinearForm<C>::zero(m.zero());
      for (const auto& [key, form] : m.upper()) {
        auto [k, l] = key;
        BigInt w = x(i - 1, k - 1) * x(j - 1, l - 1) - x(i - 1, l - 1) * x(j - 1, k - 1);
        if (w != 0) acc = acc + form.scaled(w);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

// Pfaffian of a 2d x 2d matrix whose trailing rows d+2..2d are "fixed":
// they vanish among themselves and carry only symbol-free entries in
// columns 1..d+1. Expanding along those rows from the bottom leaves a 2x2
// block {p, q} of the leading block, so
//   Pf(M) = sum_{p<q} M[p][q] * C_pq(x, y, z)
// where the integer cofactors C_pq collect the signed products of fixed
// entries. The cofactors are accumulated over the set of consumed leading
// columns. Throws StructureViolation if the shape does not hold or if a
// product of two symbol-bearing factors would be formed.
template <class C>
TriPoly<C> pf_structured(const SkewMatrix<C>& m, int d) {
  detail::require_even(m);
  if (d < 1 || m.size() != 2 * d) {
    throw Error(ErrorKind::StructureViolation,
                "matrix of size " + std::to_string(m.size()) + " is not 2d for d=" + std::to_string(d));
  }
  if (d + 1 > 63) throw Error(ErrorKind::SizeGuardExceeded, "pf_structured supports d <= 62");
  const int lead = d + 1;
  for (const auto& [key, form] : m.upper()) {
    auto [i, j] = key;
    if (i > lead) {
      throw Error(ErrorKind::StructureViolation,
                  "entry (" + std::to_string(i) + "," + std::to_string(j) + ") inside the trailing zero block");
    }
    if (j > lead && form.bears_symbols()) {
      throw Error(ErrorKind::StructureViolation,
                  "symbol-bearing entry (" + std::to_string(i) + "," + std::to_string(j) + ") in a fixed row");
    }
  }

  using Layer = std::map<std::uint64_t, TriPoly<C>>;
  Layer layer;
  layer.emplace(0, detail::unit_poly(m.zero()));
  const std::uint64_t lead_mask = (std::uint64_t{1} << lead) - 1;
  for (int row = 2 * d; row > lead; --row) {
    std::vector<std::pair<int, LinearForm<C>>> nonzero;
    for (int col = 1; col <= lead; ++col) {
      LinearForm<C> e = m.at(row, col);
      if (!e.is_zero()) nonzero.emplace_back(col, std::move(e));
    }
    Layer next;
    for (const auto& [consumed, cofactor] : layer) {
      for (const auto& [col, entry] : nonzero) {
        const std::uint64_t bit = std::uint64_t{1} << (col - 1);
        if (consumed & bit) continue;
        const int pos = 1 + std::popcount(~consumed & lead_mask & (bit - 1));
        auto it = next.try_emplace(consumed | bit, cofactor.degree() + 1, m.zero()).first;
        add_mul_linear(it->second, entry, cofactor, pos % 2 == 1);
      }
    }
    layer = std::move(next);
  }

  TriPoly<C> total(d, m.zero());
  for (const auto& [consumed, cofactor] : layer) {
    if (cofactor.is_zero()) continue;
    const std::uint64_t rest = ~consumed & lead_mask;
    const int p = std::countr_zero(rest) + 1;
    const int q = 63 - std::countl_zero(rest) + 1;
    LinearForm<C> entry = m.at(p, q);
    if (entry.is_zero()) continue;
    if (entry.bears_symbols()) {
      for (const auto& [mono, coeff] : cofactor.terms()) {
        if (bears_symbols(coeff)) {
          throw Error(ErrorKind::StructureViolation,
                      "cofactor of (" + std::to_string(p) + "," + std::to_string(q) +
                          ") carries symbols; the product would be nonlinear");
        }
      }
    }
    add_mul_linear(total, entry, cofactor);
  }
  return total;
}

}  // namespace pfaffrep
