#include "pfaffrep/linsolve.hpp"

#include <algorithm>
#include <map>

namespace pfaffrep {

namespace {

using Column = std::vector<BigInt>;

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// dst -= q * src
void submul(Column& dst, const Column& src, const BigInt& q) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) mpz_submul(dst[i].get_mpz_t(), q.get_mpz_t(), src[i].get_mpz_t());
  }
}

void negate(Column& col) {
  for (auto& v : col) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
}

// Smallest |entry| in row `row` among columns [from, end); -1 if all zero.
long min_abs_column(const std::vector<Column>& cols, std::size_t row, std::size_t from) {
  long best = -1;
  for (std::size_t c = from; c < cols.size(); ++c) {
    const BigInt& v = cols[c][row];
    if (v == 0) continue;
    if (best < 0 || cmpabs(v, cols[best][row]) < 0) best = static_cast<long>(c);
  }
  return best;
}

}  // namespace

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string LinearSystem::equation_text(
    std::size_t row, const std::function<std::string(const SymbolId&)>& namer) const {
  SymbolicCoefficient lhs;
  SymbolicCoefficient rhs;
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    if (A(row, c) != 0) lhs += SymbolicCoefficient::symbol(unknowns[c], A(row, c));
  }
  for (std::size_t c = 0; c < thetas.size(); ++c) {
    if (T(row, c) != 0) rhs += SymbolicCoefficient::symbol(thetas[c], T(row, c));
  }
  return lhs.to_string(namer) + " = " + rhs.to_string(namer);
}

LinearSystem extract_system(const PfaffianTemplate& t) {
  const int d = t.degree;
  const SymPoly pf = pf_structured(t);

  const Monomial3 corners[] = {{d, 0, 0}, {0, d, 0}, {0, 0, d}};
  for (const Monomial3& m : corners) {
    SymbolicCoefficient expected = SymbolicCoefficient::symbol(SymbolId::theta(m.i, m.j, m.k));
    SymbolicCoefficient got = pf.coefficient_of(m);
    if (got != expected) {
      throw Error(ErrorKind::PurePowerViolation,
                  "coefficient of " + m.to_string() + " is " + got.to_string() + ", expected " +
                      expected.to_string());
    }
  }

  LinearSystem sys;
  sys.degree = d;
  sys.unknowns = t.unknowns;
  sys.thetas = t.thetas;
  std::map<SymbolId, std::size_t> unknown_index;
  std::map<SymbolId, std::size_t> theta_index;
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) unknown_index.emplace(sys.unknowns[i], i);
  for (std::size_t i = 0; i < sys.thetas.size(); ++i) theta_index.emplace(sys.thetas[i], i);

  for (const Monomial3& m : monomials_of_degree(d)) {
    if (m.i == d || m.j == d || m.k == d) continue;
    sys.monomials.push_back(m);
  }
  sys.A = IntMatrix(sys.monomials.size(), sys.unknowns.size());
  sys.T = IntMatrix(sys.monomials.size(), sys.thetas.size());

  for (std::size_t r = 0; r < sys.monomials.size(); ++r) {
    const Monomial3& m = sys.monomials[r];
    const SymbolicCoefficient e = pf.coefficient_of(m);
    if (e.symbol_degree() > 1) {
      throw Error(ErrorKind::LinearityViolation,
                  "coefficient of " + m.to_string() + " has symbol degree " +
                      std::to_string(e.symbol_degree()) + ": " + e.to_string());
    }
    sys.T(r, theta_index.at(SymbolId::theta(m.i, m.j, m.k))) += 1;
    for (const auto& [key, c] : e.terms()) {
      if (key.empty()) {
        throw Error(ErrorKind::LinearityViolation,
                    "coefficient of " + m.to_string() + " has a constant term: " + e.to_string());
      }
      const SymbolId& s = key.front();
      if (auto it = unknown_index.find(s); it != unknown_index.end()) {
        sys.A(r, it->second) += c;
      } else if (auto th = theta_index.find(s); th != theta_index.end()) {
        sys.T(r, th->second) -= c;
      } else {
        throw Error(ErrorKind::StructureViolation,
                    "symbol " + s.name() + " in the Pfaffian is not a template symbol");
      }
    }
  }
  return sys;
}

HermiteResult hnf(const IntMatrix& a, bool with_transform) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Column> acol(n, Column(m));
  std::vector<Column> ucol;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) acol[c][r] = a(r, c);
  }
  if (with_transform) {
    ucol.assign(n, Column(n));
    for (std::size_t c = 0; c < n; ++c) ucol[c][c] = 1;
  }

  auto col_submul = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    submul(acol[dst], acol[src], q);
    if (with_transform) submul(ucol[dst], ucol[src], q);
  };

  HermiteResult out;
  std::size_t r = 0;
  BigInt q;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    bool found = false;
    while (true) {
      const long best = min_abs_column(acol, i, r);
      if (best < 0) break;
      std::swap(acol[r], acol[best]);
      if (with_transform) std::swap(ucol[r], ucol[best]);
      bool remaining = false;
      for (std::size_t c = r + 1; c < n; ++c) {
        if (acol[c][i] == 0) continue;
        q = floor_div(acol[c][i], acol[r][i]);
        col_submul(c, r, q);
        remaining = remaining || acol[c][i] != 0;
      }
      if (!remaining) {
        found = true;
        break;
      }
    }
    if (!found) continue;
    if (acol[r][i] < 0) {
      negate(acol[r]);
      if (with_transform) negate(ucol[r]);
    }
    for (std::size_t c = 0; c < r; ++c) {
      q = floor_div(acol[c][i], acol[r][i]);
      if (q != 0) col_submul(c, r, q);
    }
    out.pivot_rows.push_back(i);
    ++r;
  }

  out.rank = r;
  out.H = IntMatrix(m, r);
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t row = 0; row < m; ++row) out.H(row, c) = acol[c][row];
  }
  if (with_transform) {
    out.U = IntMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t row = 0; row < n; ++row) out.U(row, c) = ucol[c][row];
    }
  }
  return out;
}

SmithResult snf(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithResult out;
  BigInt q;

  auto row_submul = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(src, j) != 0) mpz_submul(a(dst, j).get_mpz_t(), k.get_mpz_t(), a(src, j).get_mpz_t());
    }
  };
  auto col_submul = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (a(i, src) != 0) mpz_submul(a(i, dst).get_mpz_t(), k.get_mpz_t(), a(i, src).get_mpz_t());
    }
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    if (x != y) for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x != y) for (std::size_t i = 0; i < m; ++i) std::swap(a(i, x), a(i, y));
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero of the trailing block to (t, t).
    std::size_t bi = m;
    std::size_t bj = n;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) != 0 && (bi == m || cmpabs(a(i, j), a(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        q = floor_div(a(i, t), a(t, t));
        row_submul(i, t, q);
        dirty = dirty || a(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        q = floor_div(a(t, j), a(t, t));
        col_submul(j, t, q);
        dirty = dirty || a(t, j) != 0;
      }
      if (dirty) {
        // A smaller remainder appeared in row or column t; make it the pivot.
        std::size_t best_i = t;
        std::size_t best_j = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a(i, t) != 0 && cmpabs(a(i, t), a(best_i, best_j)) < 0) { best_i = i; best_j = t; }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(t, j) != 0 && cmpabs(a(t, j), a(best_i, best_j)) < 0) { best_i = t; best_j = j; }
        }
        swap_rows(t, best_i);
        swap_cols(t, best_j);
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < n; ++k) a(t, k) += a(i, k);
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    out.invariant_factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

namespace {

std::vector<std::pair<BigInt, std::size_t>> compress(const std::vector<BigInt>& factors) {
  std::vector<std::pair<BigInt, std::size_t>> out;
  for (const auto& f : factors) {
    if (!out.empty() && out.back().first == f) {
      ++out.back().second;
    } else {
      out.emplace_back(f, 1);
    }
  }
  return out;
}

// Sparse copy of a matrix column.
std::vector<std::pair<std::size_t, BigInt>> sparse_column(const IntMatrix& m, std::size_t c) {
  std::vector<std::pair<std::size_t, BigInt>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m(r, c) != 0) out.emplace_back(r, m(r, c));
  }
  return out;
}

}  // namespace

ParametricSolution solve_parametric(const LinearSystem& sys) {
  const IntMatrix& a = sys.A;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t thetas = sys.T.cols();

  const HermiteResult herm = hnf(a, true);
  const std::size_t rank = herm.rank;

  Certificate cert;
  bool unit_pivots = true;
  for (std::size_t k = 0; k < rank; ++k) unit_pivots = unit_pivots && herm.H(herm.pivot_rows[k], k) == 1;
  if (unit_pivots) {
    // The pivot rows of H form a unit lower-triangular block, so every
    // invariant factor is 1.
    if (rank > 0) cert.invariant_factors.emplace_back(1, rank);
  } else {
    cert.invariant_factors = compress(snf(herm.H).invariant_factors);
  }

  // Forward substitution H Y = T, column by column.
  IntMatrix y(rank, thetas);
  BigInt s;
  for (std::size_t tc = 0; tc < thetas && !cert.failure; ++tc) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
      s = sys.T(i, tc);
      for (std::size_t kk = 0; kk < k; ++kk) {
        if (herm.H(i, kk) != 0 && y(kk, tc) != 0) {
          mpz_submul(s.get_mpz_t(), herm.H(i, kk).get_mpz_t(), y(kk, tc).get_mpz_t());
        }
      }
      if (k < rank && herm.pivot_rows[k] == i) {
        const BigInt& pivot = herm.H(i, k);
        if (!mpz_divisible_p(s.get_mpz_t(), pivot.get_mpz_t())) {
          cert.failure = SolveFailure{tc, i, mod_floor(s, pivot), pivot};
          break;
        }
        mpz_divexact(y(k, tc).get_mpz_t(), s.get_mpz_t(), pivot.get_mpz_t());
        ++k;
      } else if (s != 0) {
        cert.failure = SolveFailure{tc, i, s, 0};
        break;
      }
    }
  }
  cert.solvable_over_z = !cert.failure;
  if (!cert.solvable_over_z) {
    const SolveFailure& f = *cert.failure;
    const std::string column = f.theta_column < sys.thetas.size() ? sys.thetas[f.theta_column].name()
                                                                  : std::to_string(f.theta_column);
    throw NotSolvableOverZ(cert, "column " + column +
                                     " is not in the integer span of A (row " +
                                     std::to_string(f.row) + ", residue " + f.residue.get_str() +
                                     (f.pivot == 0 ? ", inconsistent row)" : " mod " + f.pivot.get_str() + ")"));
  }

  ParametricSolution sol;
  sol.degree = sys.degree;
  sol.rank = rank;
  sol.certificate = cert;

  // P = U[:, :rank] Y.
  sol.particular = IntMatrix(n, thetas);
  for (std::size_t k = 0; k < rank; ++k) {
    const auto ucol = sparse_column(herm.U, k);
    for (std::size_t tc = 0; tc < thetas; ++tc) {
      const BigInt& yk = y(k, tc);
      if (yk == 0) continue;
      for (const auto& [row, v] : ucol) {
        mpz_addmul(sol.particular(row, tc).get_mpz_t(), v.get_mpz_t(), yk.get_mpz_t());
      }
    }
  }

  // Canonical kernel basis: the column HNF of U[:, rank:].
  IntMatrix kernel(n, n - rank);
  for (std::size_t c = rank; c < n; ++c) {
    for (std::size_t row = 0; row < n; ++row) kernel(row, c - rank) = herm.U(row, c);
  }
  const HermiteResult kernel_hnf = hnf(kernel, false);
  sol.nullspace = kernel_hnf.H;

  // Reduce each particular column modulo the kernel lattice so the pivot
  // rows of the kernel basis land in [0, pivot).
  BigInt q;
  for (std::size_t c = 0; c < sol.nullspace.cols(); ++c) {
    const std::size_t prow = kernel_hnf.pivot_rows[c];
    const BigInt& pivot = sol.nullspace(prow, c);
    const auto basis = sparse_column(sol.nullspace, c);
    for (std::size_t tc = 0; tc < thetas; ++tc) {
      q = floor_div(sol.particular(prow, tc), pivot);
      if (q == 0) continue;
      for (const auto& [row, v] : basis) {
        mpz_submul(sol.particular(row, tc).get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
      }
    }
  }
  return sol;
}

bool verify_solution(const LinearSystem& sys, const ParametricSolution& sol) {
  if (sys.degree != sol.degree) return false;
  if (sol.particular.rows() != sys.A.cols() || sol.particular.cols() != sys.T.cols()) return false;
  if (sol.nullspace.rows() != sys.A.cols()) return false;
  if (sys.A * sol.particular != sys.T) return false;
  return (sys.A * sol.nullspace).is_zero();
}

}  // namespace pfaffrep
