#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pfaffrep/linsolve.hpp"
#include "pfaffrep/pfaffian.hpp"
#include "pfaffrep/represent.hpp"
#include "pfaffrep/template.hpp"

namespace testsupport {

using namespace pfaffrep;

inline nlohmann::json load_testdata(const std::string& name) {
  std::ifstream in(std::string(PFAFFREP_TESTDATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  return nlohmann::json::parse(in);
}

// "-2*c11 + b3 - Theta2" -> {c11: -2, b3: 1, Theta2: -1}
using LinearExpr = std::map<std::string, BigInt>;

inline LinearExpr parse_linear(const std::string& text) {
  LinearExpr out;
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    BigInt coef = 1;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      coef = BigInt(text.substr(i, j - i));
      i = j;
      skip();
      if (i < text.size() && text[i] == '*') ++i;
      skip();
    }
    std::size_t j = i;
    while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::runtime_error("bad linear expression: " + text);
    out[text.substr(i, j - i)] += sign * coef;
    i = j;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Theta[i,j,k] -> "ThetaN" through the printed numbering of the d = 5 example.
inline std::map<SymbolId, std::string> d5_theta_names() {
  std::map<SymbolId, std::string> out;
  const nlohmann::json doc = load_testdata("d5_theta_numbering.json");
  for (const auto& item : doc.items()) {
    const auto& e = item.value();
    out[SymbolId::theta(e[0], e[1], e[2])] = item.key();
  }
  return out;
}

inline std::string d5_name(const SymbolId& s) {
  static const auto thetas = d5_theta_names();
  if (s.is_theta()) return thetas.at(s);
  return m_index_name(s, 5);
}

// A symbolic coefficient that is affine in the symbols, as a LinearExpr.
inline LinearExpr as_linear(const SymbolicCoefficient& c) {
  LinearExpr out;
  for (const auto& [key, v] : c.terms()) {
    if (key.size() != 1) throw std::runtime_error("coefficient is not linear: " + c.to_string());
    out[d5_name(key[0])] += v;
  }
  return out;
}

inline RingValue random_value(const RingDescriptor& ring, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  switch (ring.kind()) {
    case RingDescriptor::Kind::Integers:
      return RingValue::integer(dist(rng));
    case RingDescriptor::Kind::Rationals: {
      std::uniform_int_distribution<int> den(1, 5);
      return RingValue::rational(dist(rng), den(rng));
    }
    case RingDescriptor::Kind::Modular:
      return RingValue::modular(dist(rng), ring.modulus());
  }
  return {};
}

// Random skew matrix of linear forms; about `density` of the entries nonzero.
inline SkewMatrix<RingValue> random_skew(int n, const RingDescriptor& ring, std::mt19937_64& rng,
                                         double density = 0.8) {
  const RingValue zero = from_integer(0, ring);
  SkewMatrix<RingValue> m(n, zero);
  std::bernoulli_distribution keep(density);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!keep(rng)) continue;
      m.set(i, j, LinearForm<RingValue>{random_value(ring, rng), random_value(ring, rng),
                                        random_value(ring, rng)});
    }
  }
  return m;
}

inline IntMatrix random_int_matrix(int n, std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x(i, j) = dist(rng);
  }
  return x;
}

// Same recursion but with m_{1j} as the multiplier instead of m_{2d,j}.
// Not the Pfaffian; kept as a regression witness.
template <class C>
TriPoly<C> printed_recursion(const SkewMatrix<C>& m) {
  const int n = m.size();
  if (n == 2) return m.at(1, 2).to_poly();
  TriPoly<C> out(n / 2, m.zero());
  for (int j = 1; j <= n - 1; ++j) {
    TriPoly<C> term = mul_linear(m.at(1, j), printed_recursion(minor(m, n, j)));
    if (j % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

// The generic 4x4 skew matrix with m_ij carried as the symbol a[i,j] times x.
inline SkewMatrix<SymbolicCoefficient> generic_4x4() {
  SkewMatrix<SymbolicCoefficient> m(4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      m.set(i, j, {SymbolicCoefficient::symbol(SymbolId::entry(Axis::A, i, j)), {}, {}});
    }
  }
  return m;
}

// m12 m34 - m13 m24 + m14 m23, times x^2.
inline SymPoly generic_4x4_pfaffian() {
  auto s = [](int i, int j) { return SymbolicCoefficient::symbol(SymbolId::entry(Axis::A, i, j)); };
  SymPoly out(2);
  out.add_term({2, 0, 0}, s(1, 2) * s(3, 4) - s(1, 3) * s(2, 4) + s(1, 4) * s(2, 3));
  return out;
}

}  // namespace testsupport
