#pragma once

#include <string>
#include <vector>

#include "pfaffrep/pfaffian.hpp"
#include "pfaffrep/sympoly.hpp"

namespace pfaffrep {

inline constexpr int kMinDegree = 5;
inline constexpr int kDefaultDegreeCap = 25;
// Hard ceiling from the 64-bit index masks used by the Pfaffian engines.
inline constexpr int kMaxSupportedDegree = 32;

struct TemplateOptions {
  int degree_cap = kDefaultDegreeCap;
  // Permit degrees above the cap, where the construction has not been
  // checked.
  bool allow_unverified = false;
};

struct Counts {
  int matrix_size = 0;
  int unknowns = 0;
  int equations = 0;
  int thetas = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

// Throws UnsupportedDegree for d < 5.
Counts counts(int d);

// The 2d x 2d symbolic matrix:
//  - leading (d+1) x (d+1) block: unknown forms a[i,j]x + b[i,j]y + c[i,j]z,
//    except that (1,2), (2,3), (3,4) carry Theta[d,0,0]x, Theta[0,d,0]y,
//    Theta[0,0,d]z in place of one unknown each;
//  - rows 1..d+1 x cols d+2..2d: a fixed staircase of +-x, +-y, +-z;
//  - trailing (d-1) x (d-1) block: zero.
struct PfaffianTemplate {
  int degree = 0;
  SkewMatrix<SymbolicCoefficient> matrix{0};
  std::vector<SymbolId> unknowns;  // ordered by (row, col, axis)
  std::vector<SymbolId> thetas;    // graded lex, x > y > z

  friend bool operator==(const PfaffianTemplate&, const PfaffianTemplate&) = default;
};

PfaffianTemplate build_template(int d, const TemplateOptions& options = {});

// Pfaffian via the fixed-row contraction in pf_structured.
SymPoly pf_structured(const PfaffianTemplate& t);

// Flat row-major numbering of the strict upper triangle of a 2d x 2d
// matrix: (1,2) -> 1, (1,3) -> 2, ..., (2,3) -> 2d.
int m_index(int d, int row, int col);
// Entry coefficients become e.g. `b13`; Theta and t keep their names.
std::string m_index_name(const SymbolId& s, int d);

enum class RenderFormat { Json, Text, Latex };
RenderFormat parse_render_format(const std::string& text);
std::string render(const PfaffianTemplate& t, RenderFormat format);

}  // namespace pfaffrep
