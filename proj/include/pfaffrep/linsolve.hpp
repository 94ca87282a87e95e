#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfaffrep/intmatrix.hpp"
#include "pfaffrep/template.hpp"

namespace pfaffrep {

// The coefficient-matching system A u = T theta. Row r is the equation of
// monomials[r]; columns of A follow `unknowns`, columns of T follow `thetas`.
struct LinearSystem {
  int degree = 0;
  std::vector<Monomial3> monomials;
  std::vector<SymbolId> unknowns;
  std::vector<SymbolId> thetas;
  IntMatrix A;
  IntMatrix T;

  // `b[1,2] - a[2,6] = Theta[4,1,0]`, optionally with other symbol names.
  std::string equation_text(std::size_t row,
                            const std::function<std::string(const SymbolId&)>& namer = {}) const;
};

// Computes pf_structured(t), checks that the pure powers are exactly the
// Theta corners and that every other coefficient is affine in the symbols,
// then emits one equation per remaining monomial in graded lex order.
// Throws PurePowerViolation / LinearityViolation.
LinearSystem extract_system(const PfaffianTemplate& t);

// Column-style Hermite normal form: A U = [H | 0] with U unimodular, H in
// column echelon form with positive pivots and off-pivot entries of pivot
// rows reduced into [0, pivot).
struct HermiteResult {
  IntMatrix H;  // rows(A) x rank
  IntMatrix U;  // cols(A) x cols(A); empty when the transform was not requested
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of H column k
};

HermiteResult hnf(const IntMatrix& a, bool with_transform = true);

struct SmithResult {
  std::vector<BigInt> invariant_factors;  // nonzero diagonal, s1 | s2 | ...
  std::size_t rank = 0;
};

SmithResult snf(const IntMatrix& a);

struct SolveFailure {
  std::size_t theta_column = 0;
  std::size_t row = 0;
  BigInt residue;  // what remained (or failed to divide) at `row`
  BigInt pivot;    // the pivot it failed to divide; 0 for an inconsistent row
};

struct Certificate {
  bool solvable_over_z = false;
  // (invariant factor, multiplicity), ascending.
  std::vector<std::pair<BigInt, std::size_t>> invariant_factors;
  std::optional<SolveFailure> failure;
};

// u = P theta + N t solves A u = T theta for every integer theta and t.
struct ParametricSolution {
  int degree = 0;
  std::size_t rank = 0;
  IntMatrix particular;  // unknowns x thetas
  IntMatrix nullspace;   // unknowns x free_count, echelon basis of ker A
  Certificate certificate;

  std::size_t free_count() const { return nullspace.cols(); }
  std::size_t unknown_count() const { return particular.rows(); }

  friend bool operator==(const ParametricSolution& a, const ParametricSolution& b) {
    return a.degree == b.degree && a.rank == b.rank && a.particular == b.particular &&
           a.nullspace == b.nullspace &&
           a.certificate.solvable_over_z == b.certificate.solvable_over_z &&
           a.certificate.invariant_factors == b.certificate.invariant_factors;
  }
};

class NotSolvableOverZ : public Error {
 public:
  NotSolvableOverZ(Certificate certificate, const std::string& what)
      : Error(ErrorKind::NotSolvableOverZ, what), certificate_(std::move(certificate)) {}
  const Certificate& certificate() const { return certificate_; }

 private:
  Certificate certificate_;
};

ParametricSolution solve_parametric(const LinearSystem& sys);

// A P == T and A N == 0, recomputed by exact multiplication.
bool verify_solution(const LinearSystem& sys, const ParametricSolution& sol);

}  // namespace pfaffrep
