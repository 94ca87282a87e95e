#include "pfaffrep/template.hpp"

#include <sstream>

#include "pfaffrep/serialize.hpp"

namespace pfaffrep {

namespace {

using Form = LinearForm<SymbolicCoefficient>;

void require_degree(int d) {
  if (d < kMinDegree) {
    throw Error(ErrorKind::UnsupportedDegree,
                "degree " + std::to_string(d) + " is below 5; the template method covers d >= 5 only");
  }
}

SymbolicCoefficient sym(const SymbolId& s) { return SymbolicCoefficient::symbol(s); }

Form fixed(int axis, int sign) {
  const SymbolicCoefficient zero;
  switch (axis) {
    case 0: return Form::along_x(zero, sign);
    case 1: return Form::along_y(zero, sign);
    default: return Form::along_z(zero, sign);
  }
}

std::string latex_symbol(const SymbolId& s) {
  const auto& f = s.fields;
  switch (s.kind) {
    case SymbolId::Kind::Theta:
      return "\\Theta_{" + std::to_string(f[0]) + std::to_string(f[1]) + std::to_string(f[2]) + "}";
    case SymbolId::Kind::EntryCoef: {
      static constexpr char kAxis[] = {'a', 'b', 'c'};
      return std::string(1, kAxis[f[2]]) + "_{" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "}";
    }
    case SymbolId::Kind::FreeParam:
      return "t_{" + std::to_string(f[0]) + "}";
  }
  return "?";
}

std::string latex_form(const Form& form) {
  std::string out;
  const SymbolicCoefficient* coeffs[] = {&form.a, &form.b, &form.c};
  const char vars[] = {'x', 'y', 'z'};
  for (int axis = 0; axis < 3; ++axis) {
    const SymbolicCoefficient& c = *coeffs[axis];
    if (c.is_zero()) continue;
    std::string body = c.to_string(latex_symbol);
    bool single = c.terms().size() == 1;
    bool negative = single && c.terms().begin()->second < 0;
    if (single && negative) body = c.scaled(-1).to_string(latex_symbol);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (!single) body = "(" + body + ")";
    if (body == "1") body.clear();
    out += body + vars[axis];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Counts counts(int d) {
  require_degree(d);
  const int pairs_lead = (d + 1) * d / 2;
  const int thetas = (d + 2) * (d + 1) / 2;
  return {2 * d, 3 * pairs_lead - 3, thetas - 3, thetas};
}

PfaffianTemplate build_template(int d, const TemplateOptions& options) {
  require_degree(d);
  if (d > options.degree_cap && !options.allow_unverified) {
    throw Error(ErrorKind::DegreeCapExceeded,
                "degree " + std::to_string(d) + " exceeds the verified cap " +
                    std::to_string(options.degree_cap) + " (pass --allow-unverified to proceed)");
  }
  if (d > kMaxSupportedDegree) {
    throw Error(ErrorKind::SizeGuardExceeded,
                "degree " + std::to_string(d) + " exceeds the engine limit " +
                    std::to_string(kMaxSupportedDegree));
  }

  PfaffianTemplate t;
  t.degree = d;
  t.matrix = SkewMatrix<SymbolicCoefficient>(2 * d);
  const int lead = d + 1;

  for (int i = 1; i <= lead; ++i) {
    for (int j = i + 1; j <= lead; ++j) {
      Form form;
      SymbolicCoefficient* slots[] = {&form.a, &form.b, &form.c};
      // The one slot per Theta-bearing entry that is not an unknown.
      int theta_axis = -1;
      SymbolId theta;
      if (i == 1 && j == 2) { theta_axis = 0; theta = SymbolId::theta(d, 0, 0); }
      if (i == 2 && j == 3) { theta_axis = 1; theta = SymbolId::theta(0, d, 0); }
      if (i == 3 && j == 4) { theta_axis = 2; theta = SymbolId::theta(0, 0, d); }
      for (int axis = 0; axis < 3; ++axis) {
        if (axis == theta_axis) {
          *slots[axis] = sym(theta);
        } else {
          SymbolId u = SymbolId::entry(static_cast<Axis>(axis), i, j);
          *slots[axis] = sym(u);
          t.unknowns.push_back(u);
        }
      }
      t.matrix.set(i, j, form);
    }
  }

  // Staircase block, rows 1..d+1, columns d+2..2d.
  auto put = [&](int row, int col, int axis, int sign) { t.matrix.set(row, col, fixed(axis, sign)); };
  put(1, d + 2, 1, -1);
  put(2, d + 2, 2, -1);
  put(d + 1, d + 2, 0, 1);
  put(1, d + 3, 2, -1);
  put(d, d + 3, 0, 1);
  put(d + 1, d + 3, 1, 1);
  for (int k = 2; k <= d - 2; ++k) {
    const int col = d + 2 + k;
    put(d + 1 - k, col, 0, 1);
    put(d + 2 - k, col, 1, -1);
    put(d + 3 - k, col, 2, k == 2 && d % 2 == 0 ? 1 : -1);
  }

  for (const Monomial3& m : monomials_of_degree(d)) t.thetas.push_back(SymbolId::theta(m.i, m.j, m.k));
  return t;
}

SymPoly pf_structured(const PfaffianTemplate& t) {
  require_degree(t.degree);
  return pf_structured(t.matrix, t.degree);
}

int m_index(int d, int row, int col) {
  int index = 0;
  for (int r = 1; r < row; ++r) index += 2 * d - r;
  return index + (col - row);
}

std::string m_index_name(const SymbolId& s, int d) {
  if (!s.is_entry()) return s.name();
  static constexpr char kAxis[] = {'a', 'b', 'c'};
  return std::string(1, kAxis[s.fields[2]]) + std::to_string(m_index(d, s.row(), s.col()));
}

RenderFormat parse_render_format(const std::string& text) {
  if (text == "json") return RenderFormat::Json;
  if (text == "text") return RenderFormat::Text;
  if (text == "latex") return RenderFormat::Latex;
  throw Error(ErrorKind::InvalidArgument, "unknown format '" + text + "' (json, text, latex)");
}

std::string render(const PfaffianTemplate& t, RenderFormat format) {
  const int d = t.degree;
  const int n = 2 * d;
  std::ostringstream out;
  switch (format) {
    case RenderFormat::Json:
      return template_to_json(t).dump(2);
    case RenderFormat::Text: {
      const Counts c = counts(d);
      out << "degree " << d << ", size " << n << "x" << n << ", " << c.unknowns << " unknowns, "
          << c.equations << " equations\n";
      for (const auto& [key, form] : t.matrix.upper()) {
        out << "(" << key.first << "," << key.second << "): " << to_string(form.to_poly()) << "\n";
      }
      return out.str();
    }
    case RenderFormat::Latex: {
      out << "\\left[\\begin{array}{" << std::string(d + 1, 'c') << "|" << std::string(d - 1, 'c')
          << "}\n";
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i > d + 1 && j > d + 1) {
            if (i == d + 2 && j == d + 2) {
              out << " & \\multicolumn{" << d - 1 << "}{c}{\\mathbf{0}_{" << d - 1 << "}}";
            }
            continue;
          }
          if (j > 1) out << " & ";
          if (i == j) {
            out << "0";
          } else if (i > j) {
            out << "*";
          } else {
            Form form = t.matrix.at(i, j);
            out << (form.is_zero() ? "0" : latex_form(form));
          }
        }
        out << (i == n ? "\n" : " \\\\\n");
        if (i == d + 1) out << "\\hline\n";
      }
      out << "\\end{array}\\right]\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace pfaffrep
