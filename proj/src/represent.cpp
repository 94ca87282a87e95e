#include "pfaffrep/represent.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "pfaffrep/serialize.hpp"

namespace pfaffrep {

namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InvalidArgument, "sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

fs::path cache_file(const fs::path& dir, int d) { return dir / (cache_key(d) + ".json"); }

}  // namespace

std::string cache_key(int d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "solution_d%02d", d);
  return buf;
}

void cache_store(const fs::path& dir, const ParametricSolution& sol) {
  fs::create_directories(dir);
  const std::string payload = solution_to_json(sol).dump();
  Json doc = {{"format_version", kFormatVersion},
              {"checksum", sha256_hex(payload)},
              {"solution", Json::parse(payload)}};
  const fs::path target = cache_file(dir, sol.degree);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump();
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<ParametricSolution> cache_load(const fs::path& dir, const LinearSystem& sys) {
  const fs::path file = cache_file(dir, sys.degree);
  if (!fs::exists(file)) return std::nullopt;
  auto corrupt = [&](const std::string& why) {
    return Error(ErrorKind::CorruptCache, file.string() + ": " + why);
  };
  ParametricSolution sol;
  try {
    std::ifstream in(file);
    Json doc = Json::parse(in);
    const Json& payload = doc.at("solution");
    if (doc.at("checksum").get<std::string>() != sha256_hex(payload.dump())) {
      throw corrupt("checksum mismatch");
    }
    sol = solution_from_json(payload);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CorruptCache) throw;
    throw corrupt(e.what());
  } catch (const std::exception& e) {
    throw corrupt(e.what());
  }
  if (!verify_solution(sys, sol)) throw corrupt("stored solution does not satisfy the system");
  return sol;
}

ParametricSolution load_or_solve(const fs::path& dir, const LinearSystem& sys, bool* recomputed) {
  try {
    if (auto cached = cache_load(dir, sys)) {
      if (recomputed) *recomputed = false;
      return *cached;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CorruptCache) throw;
  }
  ParametricSolution sol = solve_parametric(sys);
  cache_store(dir, sol);
  if (recomputed) *recomputed = true;
  return sol;
}

DegreeArtifacts prepare_degree(int d, const TemplateOptions& options,
                               const std::optional<fs::path>& cache_dir) {
  DegreeArtifacts out{build_template(d, options), {}, {}};
  out.system = extract_system(out.tmpl);
  out.solution = cache_dir ? load_or_solve(*cache_dir, out.system) : solve_parametric(out.system);
  if (!verify_solution(out.system, out.solution)) {
    throw Error(ErrorKind::VerificationFailed, "A P = T or A N = 0 fails for degree " + std::to_string(d));
  }
  return out;
}

Representation build_representation(const DegreeArtifacts& artifacts, const RingPoly& f,
                                    const std::optional<std::vector<RingValue>>& free_values,
                                    bool verify) {
  const PfaffianTemplate& t = artifacts.tmpl;
  const ParametricSolution& sol = artifacts.solution;
  const int d = t.degree;
  if (f.degree() != d) {
    throw Error(ErrorKind::DegreeMismatch,
                "polynomial has degree " + std::to_string(f.degree()) + ", template has degree " +
                    std::to_string(d));
  }
  const RingValue zero = f.zero().zero_like();
  const RingDescriptor ring = zero.ring();

  std::vector<RingValue> free;
  if (free_values) {
    if (free_values->size() != sol.free_count()) {
      throw Error(ErrorKind::InvalidArgument,
                  "expected " + std::to_string(sol.free_count()) + " free values, got " +
                      std::to_string(free_values->size()));
    }
    for (const auto& v : *free_values) {
      if (!(v.ring() == ring)) throw Error(ErrorKind::MismatchedRing, "free value outside " + ring.to_string());
    }
    free = *free_values;
  } else {
    free.assign(sol.free_count(), zero);
  }

  std::vector<RingValue> theta(t.thetas.size(), zero);
  std::map<SymbolId, std::size_t> theta_index;
  for (std::size_t i = 0; i < t.thetas.size(); ++i) {
    const auto& f3 = t.thetas[i].fields;
    theta[i] = f.coefficient_of({f3[0], f3[1], f3[2]});
    theta_index.emplace(t.thetas[i], i);
  }

  std::map<SymbolId, RingValue> unknown_value;
  for (std::size_t u = 0; u < t.unknowns.size(); ++u) {
    RingValue v = zero;
    for (std::size_t c = 0; c < sol.particular.cols(); ++c) {
      const BigInt& p = sol.particular(u, c);
      if (p != 0 && !theta[c].is_zero()) v += theta[c].scaled(p);
    }
    for (std::size_t c = 0; c < sol.nullspace.cols(); ++c) {
      const BigInt& n = sol.nullspace(u, c);
      if (n != 0 && !free[c].is_zero()) v += free[c].scaled(n);
    }
    unknown_value.emplace(t.unknowns[u], std::move(v));
  }

  auto lookup = [&](const SymbolId& s) -> RingValue {
    if (s.is_theta()) return theta.at(theta_index.at(s));
    return unknown_value.at(s);
  };

  Representation rep;
  rep.degree = d;
  rep.ring = ring;
  rep.matrix = SkewMatrix<RingValue>(2 * d, zero);
  for (const auto& [key, form] : t.matrix.upper()) {
    rep.matrix.set(key.first, key.second,
                   LinearForm<RingValue>{evaluate(form.a, lookup, zero), evaluate(form.b, lookup, zero),
                                         evaluate(form.c, lookup, zero)});
  }
  rep.free_values = std::move(free);
  rep.provenance = cache_key(d);

  if (verify) {
    VerifyResult check = verify_representation(rep.matrix, f);
    if (!check.ok) {
      throw Error(ErrorKind::VerificationFailed,
                  check.reason + "; matrix: " + to_json(rep.matrix).dump());
    }
    rep.verified = true;
  }
  return rep;
}

VerifyResult verify_representation(const SkewMatrix<RingValue>& matrix, const RingPoly& f) {
  VerifyResult out;
  if (matrix.size() != 2 * f.degree()) {
    out.reason = "matrix size " + std::to_string(matrix.size()) + " does not match degree " +
                 std::to_string(f.degree());
    return out;
  }
  const RingPoly pf = pf_laplace(matrix);
  for (const Monomial3& m : monomials_of_degree(f.degree())) {
    const RingValue lhs = pf.coefficient_of(m);
    const RingValue rhs = f.coefficient_of(m);
    if (!(lhs == rhs)) {
      out.witness = m;
      out.reason = "coefficient of " + m.to_string() + ": Pf gives " + lhs.to_string() +
                   ", polynomial has " + rhs.to_string();
      return out;
    }
  }
  out.ok = true;
  return out;
}

SkewMatrix<RingValue> map_to_ring(const SkewMatrix<RingValue>& m, const RingDescriptor& target) {
  auto map = [&](const RingValue& v) { return from_integer(v.as_integer(), target); };
  SkewMatrix<RingValue> out(m.size(), from_integer(0, target));
  for (const auto& [key, form] : m.upper()) {
    out.set(key.first, key.second, LinearForm<RingValue>{map(form.a), map(form.b), map(form.c)});
  }
  return out;
}

RingPoly map_to_ring(const RingPoly& p, const RingDescriptor& target) {
  RingPoly out(p.degree(), from_integer(0, target));
  for (const auto& [m, v] : p.terms()) out.add_term(m, from_integer(v.as_integer(), target));
  return out;
}

std::vector<RingValue> random_ring_values(std::size_t count, const RingDescriptor& ring,
                                          std::mt19937_64& rng) {
  std::vector<RingValue> out;
  out.reserve(count);
  std::uniform_int_distribution<long> small(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  for (std::size_t i = 0; i < count; ++i) {
    switch (ring.kind()) {
      case RingDescriptor::Kind::Integers:
        out.push_back(RingValue::integer(small(rng)));
        break;
      case RingDescriptor::Kind::Rationals:
        out.push_back(RingValue::rational(small(rng), den(rng)));
        break;
      case RingDescriptor::Kind::Modular: {
        std::uniform_int_distribution<unsigned long> any;
        out.push_back(RingValue::modular(BigInt(any(rng)), ring.modulus()));
        break;
      }
    }
  }
  return out;
}

RingPoly random_form(int d, const RingDescriptor& ring, std::mt19937_64& rng) {
  const auto monomials = monomials_of_degree(d);
  const auto values = random_ring_values(monomials.size(), ring, rng);
  RingPoly f(d, from_integer(0, ring));
  for (std::size_t i = 0; i < monomials.size(); ++i) f.add_term(monomials[i], values[i]);
  return f;
}

SweepReport sweep(const SweepOptions& options) {
  if (options.from < kMinDegree || options.from > options.to) {
    throw Error(ErrorKind::InvalidArgument, "sweep range must satisfy 5 <= from <= to");
  }
  SweepReport report;
  for (int d = options.from; d <= options.to; ++d) {
    const auto start = std::chrono::steady_clock::now();
    SweepRow row;
    row.degree = d;
    try {
      row.counts = counts(d);
      DegreeArtifacts art;
      art.tmpl = build_template(d, options.template_options);
      try {
        art.system = extract_system(art.tmpl);
        row.pure_powers_ok = true;
        row.linearity_ok = true;
      } catch (const Error& e) {
        row.pure_powers_ok = e.kind() != ErrorKind::PurePowerViolation;
        row.linearity_ok = e.kind() != ErrorKind::LinearityViolation &&
                           e.kind() != ErrorKind::StructureViolation;
        throw;
      }
      art.solution = options.cache_dir ? load_or_solve(*options.cache_dir, art.system)
                                       : solve_parametric(art.system);
      row.rank = art.solution.rank;
      row.free_count = art.solution.free_count();
      row.solvable_over_z = art.solution.certificate.solvable_over_z;
      if (!verify_solution(art.system, art.solution)) {
        row.solvable_over_z = false;
        row.failures.push_back("A P = T or A N = 0 failed");
      }

      for (std::size_t ri = 0; ri < options.rings.size(); ++ri) {
        const RingDescriptor& ring = options.rings[ri];
        for (int s = 0; s < options.samples; ++s) {
          std::seed_seq seq{static_cast<std::uint64_t>(options.seed), static_cast<std::uint64_t>(d),
                            static_cast<std::uint64_t>(ri), static_cast<std::uint64_t>(s)};
          std::mt19937_64 rng(seq);
          ++row.samples_total;
          const RingPoly f = random_form(d, ring, rng);
          try {
            build_representation(art, f);
            ++row.samples_passed;
          } catch (const Error& e) {
            row.failures.push_back(ring.to_string() + " sample " + std::to_string(s) + ": " +
                                   e.what() + " (f = " + to_string(f) + ")");
          }
        }
      }
    } catch (const NotSolvableOverZ& e) {
      row.solvable_over_z = false;
      row.failures.push_back(e.what());
    } catch (const Error& e) {
      row.failures.push_back(e.what());
    }
    row.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string sweep_table(const SweepReport& report) {
  std::ostringstream out;
  out << " d  size unknowns eqs rank free  Z-solv linear purepow samples   time(s)\n";
  for (const auto& r : report.rows) {
    out << std::setw(2) << r.degree << std::setw(6) << r.counts.matrix_size << std::setw(9)
        << r.counts.unknowns << std::setw(4) << r.counts.equations << std::setw(5) << r.rank
        << std::setw(5) << r.free_count << std::setw(8) << (r.solvable_over_z ? "yes" : "NO")
        << std::setw(7) << (r.linearity_ok ? "yes" : "NO") << std::setw(8)
        << (r.pure_powers_ok ? "yes" : "NO") << std::setw(5) << r.samples_passed << "/"
        << std::left << std::setw(4) << r.samples_total << std::right << std::setw(9)
        << std::fixed << std::setprecision(2) << r.wall_time_s << "\n";
    for (const auto& f : r.failures) out << "    failure: " << f << "\n";
  }
  out << (report.passed() ? "all degrees passed\n" : "SOME DEGREES FAILED\n");
  return out.str();
}

}  // namespace pfaffrep
