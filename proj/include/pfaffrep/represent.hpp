#pragma once

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pfaffrep/linsolve.hpp"
#include "pfaffrep/template.hpp"

namespace pfaffrep {

// M = x A0 + y A1 + z A2 over a concrete ring, with the free-parameter
// values that selected it from the solution family.
struct Representation {
  int degree = 0;
  RingDescriptor ring = RingDescriptor::integers();
  SkewMatrix<RingValue> matrix{0};
  std::vector<RingValue> free_values;
  std::string provenance;  // solution cache key
  bool verified = false;
};

// Template, extracted system and parametric solution for one degree.
struct DegreeArtifacts {
  PfaffianTemplate tmpl;
  LinearSystem system;
  ParametricSolution solution;
};

// Builds everything for degree d, going through the cache directory when
// one is given.
DegreeArtifacts prepare_degree(int d, const TemplateOptions& options = {},
                               const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

std::string cache_key(int d);

// Unknowns := P theta + N t evaluated in f's ring, where theta are the
// coefficients of f and t the free values (all zero when omitted). Unless
// `verify` is false the Pfaffian is recomputed and compared with f;
// a mismatch throws VerificationFailed.
Representation build_representation(const DegreeArtifacts& artifacts, const RingPoly& f,
                                    const std::optional<std::vector<RingValue>>& free_values = std::nullopt,
                                    bool verify = true);

struct VerifyResult {
  bool ok = false;
  std::optional<Monomial3> witness;  // first mismatching monomial
  std::string reason;
};

// Recomputes Pf(M) with pf_laplace and compares it with f coefficientwise.
VerifyResult verify_representation(const SkewMatrix<RingValue>& matrix, const RingPoly& f);
inline VerifyResult verify_representation(const Representation& rep, const RingPoly& f) {
  return verify_representation(rep.matrix, f);
}

// Image of an integer-coefficient matrix / polynomial under Z -> R.
SkewMatrix<RingValue> map_to_ring(const SkewMatrix<RingValue>& m, const RingDescriptor& target);
RingPoly map_to_ring(const RingPoly& p, const RingDescriptor& target);

// A random degree-d form over `ring`; every coefficient drawn independently.
RingPoly random_form(int d, const RingDescriptor& ring, std::mt19937_64& rng);
std::vector<RingValue> random_ring_values(std::size_t count, const RingDescriptor& ring,
                                          std::mt19937_64& rng);

struct SweepOptions {
  int from = kMinDegree;
  int to = kMinDegree;
  int samples = 1;
  std::vector<RingDescriptor> rings{RingDescriptor::integers()};
  std::uint64_t seed = 1;
  TemplateOptions template_options;
  std::optional<std::filesystem::path> cache_dir;
};

struct SweepRow {
  int degree = 0;
  Counts counts;
  std::size_t rank = 0;
  std::size_t free_count = 0;
  bool solvable_over_z = false;
  bool linearity_ok = false;
  bool pure_powers_ok = false;
  int samples_passed = 0;
  int samples_total = 0;
  double wall_time_s = 0.0;
  std::vector<std::string> failures;

  bool passed() const {
    return solvable_over_z && linearity_ok && pure_powers_ok && samples_passed == samples_total &&
           failures.empty();
  }
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool passed() const {
    for (const auto& r : rows) {
      if (!r.passed()) return false;
    }
    return !rows.empty();
  }
};

// Per degree: template, structured Pfaffian, pure-power and linearity
// checks, integer solve, then `samples` random forms per ring built and
// verified. Failures are recorded in the row; later degrees still run.
SweepReport sweep(const SweepOptions& options);
std::string sweep_table(const SweepReport& report);

// Persisted solutions: <dir>/solution_dNN.json, checksummed and
// re-verified on load.
void cache_store(const std::filesystem::path& dir, const ParametricSolution& sol);
// nullopt if absent; throws CorruptCache on checksum or verification failure.
std::optional<ParametricSolution> cache_load(const std::filesystem::path& dir, const LinearSystem& sys);
// Load, or solve and store. A corrupt file is replaced transparently.
ParametricSolution load_or_solve(const std::filesystem::path& dir, const LinearSystem& sys,
                                 bool* recomputed = nullptr);

}  // namespace pfaffrep
