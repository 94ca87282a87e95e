#pragma once

#include <json.hpp>

#include "pfaffrep/linsolve.hpp"
#include "pfaffrep/represent.hpp"
#include "pfaffrep/template.hpp"

namespace pfaffrep {

// nlohmann::json keeps object keys sorted, which gives the stable key
// order the machine output promises.
using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// {size, entries: [{row, col, a, b, c}]}, strict upper triangle only.
// Ring coefficients are strings in the ring's text form; symbolic ones are
// arrays of terms [coef, symbol...].
Json to_json(const SkewMatrix<RingValue>& m);
Json to_json(const SkewMatrix<SymbolicCoefficient>& m);
SkewMatrix<RingValue> ring_matrix_from_json(const Json& j, const RingDescriptor& ring);
SkewMatrix<SymbolicCoefficient> symbolic_matrix_from_json(const Json& j);

Json to_json(const SymbolicCoefficient& c);
SymbolicCoefficient symbolic_from_json(const Json& j);

Json template_to_json(const PfaffianTemplate& t);
PfaffianTemplate template_from_json(const Json& j);

// Sparse: {rows, cols, entries: [[r, c, "v"], ...]}.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const Certificate& c);
Json solution_to_json(const ParametricSolution& sol);
ParametricSolution solution_from_json(const Json& j);
Json solution_summary_json(const ParametricSolution& sol, const Counts& counts);

Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const SweepReport& report);

}  // namespace pfaffrep
