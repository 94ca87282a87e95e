#include <gtest/gtest.h>

#include "pfaffrep/serialize.hpp"
#include "support.hpp"

using namespace pfaffrep;
using namespace testsupport;

namespace {

using SymForm = LinearForm<SymbolicCoefficient>;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

SymForm constant_form(int a, int b, int c) {
  return {SymbolicCoefficient::constant(a), SymbolicCoefficient::constant(b), SymbolicCoefficient::constant(c)};
}

using Lookup = std::function<RingValue(const SymbolId&)>;

SkewMatrix<RingValue> instantiate(const SkewMatrix<SymbolicCoefficient>& m, const Lookup& lookup,
                                  const RingValue& zero) {
  SkewMatrix<RingValue> out(m.size(), zero);
  for (const auto& [key, form] : m.upper()) {
    out.set(key.first, key.second,
            {evaluate(form.a, lookup, zero), evaluate(form.b, lookup, zero), evaluate(form.c, lookup, zero)});
  }
  return out;
}

RingPoly instantiate(const SymPoly& p, const Lookup& lookup, const RingValue& zero) {
  RingPoly out(p.degree(), zero);
  for (const auto& [mono, coeff] : p.terms()) out.add_term(mono, evaluate(coeff, lookup, zero));
  return out;
}

Lookup random_lookup(std::mt19937_64& rng, std::map<SymbolId, RingValue>& values) {
  return [&rng, &values](const SymbolId& s) {
    auto it = values.find(s);
    if (it == values.end()) it = values.emplace(s, random_value(RingDescriptor::integers(), rng, 20)).first;
    return it->second;
  };
}

}  // namespace

TEST(Template, Counts) {
  EXPECT_EQ(counts(5), (Counts{10, 42, 18, 21}));
  EXPECT_EQ(counts(6), (Counts{12, 60, 25, 28}));
  EXPECT_EQ(counts(25), (Counts{50, 972, 348, 351}));
  EXPECT_EQ(kind_of([] { counts(4); }), ErrorKind::UnsupportedDegree);
}

// Counts agree with a direct enumeration of the template and of the monomials.
TEST(Template, CountsMatchEnumeration) {
  for (int d = 5; d <= 25; ++d) {
    const PfaffianTemplate t = build_template(d);
    int unknown_slots = 0;
    for (const auto& [key, form] : t.matrix.upper()) {
      for (const auto* c : {&form.a, &form.b, &form.c}) {
        for (const auto& [syms, v] : c->terms()) unknown_slots += syms.size() == 1 && syms[0].is_entry();
      }
    }
    const int thetas = static_cast<int>(monomials_of_degree(d).size());
    EXPECT_EQ(counts(d), (Counts{t.matrix.size(), unknown_slots, thetas - 3, thetas})) << d;
    EXPECT_EQ(static_cast<int>(t.unknowns.size()), unknown_slots);
    EXPECT_EQ(static_cast<int>(t.thetas.size()), thetas);
  }
}

TEST(Template, DegreeGuards) {
  EXPECT_EQ(kind_of([] { build_template(4); }), ErrorKind::UnsupportedDegree);
  EXPECT_EQ(kind_of([] { build_template(26); }), ErrorKind::DegreeCapExceeded);
  EXPECT_EQ(kind_of([] { build_template(8, {7, false}); }), ErrorKind::DegreeCapExceeded);
  EXPECT_EQ(build_template(26, {kDefaultDegreeCap, true}).matrix.size(), 52);
  EXPECT_EQ(kind_of([] { build_template(33, {kDefaultDegreeCap, true}); }), ErrorKind::SizeGuardExceeded);
}

TEST(Template, DegreeFiveLayout) {
  const PfaffianTemplate t = build_template(5);
  ASSERT_EQ(t.matrix.size(), 10);
  const std::map<std::pair<int, int>, SymForm> fixed = {
      {{1, 7}, constant_form(0, -1, 0)},  {{1, 8}, constant_form(0, 0, -1)}, {{2, 7}, constant_form(0, 0, -1)},
      {{6, 7}, constant_form(1, 0, 0)},   {{5, 8}, constant_form(1, 0, 0)},  {{6, 8}, constant_form(0, 1, 0)},
      {{4, 9}, constant_form(1, 0, 0)},   {{5, 9}, constant_form(0, -1, 0)}, {{6, 9}, constant_form(0, 0, -1)},
      {{3, 10}, constant_form(1, 0, 0)},  {{4, 10}, constant_form(0, -1, 0)}, {{5, 10}, constant_form(0, 0, -1)},
  };
  for (int i = 1; i <= 10; ++i) {
    for (int j = 7; j <= 10; ++j) {
      auto it = fixed.find({i, j});
      if (it != fixed.end()) {
        EXPECT_EQ(t.matrix.at(i, j), it->second) << i << "," << j;
      } else if (i < j) {
        EXPECT_TRUE(t.matrix.at(i, j).is_zero()) << i << "," << j;
      }
    }
  }
  EXPECT_EQ(t.unknowns.size(), 42u);
  EXPECT_EQ(t.matrix.at(1, 2).a, SymbolicCoefficient::symbol(SymbolId::theta(5, 0, 0)));
  EXPECT_EQ(t.matrix.at(2, 3).b, SymbolicCoefficient::symbol(SymbolId::theta(0, 5, 0)));
  EXPECT_EQ(t.matrix.at(3, 4).c, SymbolicCoefficient::symbol(SymbolId::theta(0, 0, 5)));
}

TEST(Template, StructuralInvariantsAllDegrees) {
  for (int d = 5; d <= 25; ++d) {
    const PfaffianTemplate t = build_template(d);
    for (const auto& [key, form] : t.matrix.upper()) {
      const auto [i, j] = key;
      ASSERT_LE(i, d + 1) << "trailing block must be zero, d=" << d;
      if (j > d + 1) {
        ASSERT_FALSE(form.bears_symbols()) << d;
        // Exactly one of x, y, z with coefficient +-1.
        int nonzero = 0;
        for (const auto* c : {&form.a, &form.b, &form.c}) {
          if (c->is_zero()) continue;
          ++nonzero;
          ASSERT_EQ(abs(c->constant_term()), 1);
        }
        ASSERT_EQ(nonzero, 1);
      } else {
        for (const auto* c : {&form.a, &form.b, &form.c}) ASSERT_EQ(c->symbol_degree(), 1);
      }
    }
    // Every staircase column is used.
    for (int j = d + 2; j <= 2 * d; ++j) {
      bool any = false;
      for (int i = 1; i <= d + 1; ++i) any = any || !t.matrix.at(i, j).is_zero();
      ASSERT_TRUE(any) << "column " << j << ", d=" << d;
    }
  }
}

TEST(Template, MIndexNaming) {
  EXPECT_EQ(m_index(5, 1, 2), 1);
  EXPECT_EQ(m_index(5, 1, 3), 2);
  EXPECT_EQ(m_index(5, 2, 3), 10);
  EXPECT_EQ(m_index(5, 2, 4), 11);
  EXPECT_EQ(m_index(5, 5, 6), 31);
  EXPECT_EQ(m_index_name(SymbolId::entry(Axis::B, 1, 2), 5), "b1");
  EXPECT_EQ(m_index_name(SymbolId::entry(Axis::A, 2, 6), 5), "a13");
  EXPECT_EQ(m_index_name(SymbolId::theta(0, 5, 0), 5), "Theta[0,5,0]");
}

TEST(Template, Render) {
  const PfaffianTemplate t = build_template(5);
  EXPECT_EQ(template_from_json(Json::parse(render(t, RenderFormat::Json))), t);
  const std::string text = render(t, RenderFormat::Text);
  EXPECT_NE(text.find("(1,2): Theta[5,0,0]*x + b[1,2]*y + c[1,2]*z"), std::string::npos);
  EXPECT_NE(render(t, RenderFormat::Latex).find("\\mathbf{0}_{4}"), std::string::npos);
  EXPECT_EQ(parse_render_format("latex"), RenderFormat::Latex);
  EXPECT_EQ(kind_of([] { parse_render_format("html"); }), ErrorKind::InvalidArgument);
}

TEST(StructuredPfaffian, ZeroUnknownsLeaveCornersAndTheta2) {
  const PfaffianTemplate t = build_template(5);
  const SymPoly pf = pf_structured(t);
  std::map<SymbolId, RingValue> values;
  // Thetas stay symbolic: substitute zero for unknowns only.
  SymPoly reduced(5);
  for (const auto& [mono, coeff] : pf.terms()) {
    SymbolicCoefficient kept;
    for (const auto& [syms, v] : coeff.terms()) {
      if (syms.size() == 1 && syms[0].is_theta()) kept += SymbolicCoefficient::symbol(syms[0], v);
    }
    reduced.add_term(mono, kept);
  }
  const auto theta = [](int i, int j, int k) { return SymbolicCoefficient::symbol(SymbolId::theta(i, j, k)); };
  SymPoly expected(5);
  expected.add_term({5, 0, 0}, theta(5, 0, 0));
  expected.add_term({0, 5, 0}, theta(0, 5, 0));
  expected.add_term({0, 0, 5}, theta(0, 0, 5));
  expected.add_term({1, 3, 1}, -theta(0, 5, 0));
  expected.add_term({2, 1, 2}, -theta(0, 5, 0));
  EXPECT_EQ(reduced, expected);
}

TEST(StructuredPfaffian, CoefficientExamples) {
  const SymPoly pf = pf_structured(build_template(5));
  EXPECT_EQ(as_linear(pf.coefficient_of({4, 1, 0})), parse_linear("b1 - a13"));
  EXPECT_EQ(as_linear(pf.coefficient_of({1, 3, 1})), parse_linear("-b3 + c11 - Theta2 - a2"));
}

// The fixed-row contraction agrees with the generic expansion.
TEST(StructuredPfaffian, AgreesWithLaplaceSymbolic) {
  for (int d = 5; d <= 8; ++d) {
    const PfaffianTemplate t = build_template(d);
    EXPECT_EQ(pf_structured(t), pf_laplace(t.matrix)) << d;
  }
}

TEST(StructuredPfaffian, AgreesWithLaplaceConcrete) {
  std::mt19937_64 rng(31);
  const RingValue zero = RingValue::integer(0);
  for (int d = 5; d <= 12; ++d) {
    const PfaffianTemplate t = build_template(d);
    const SymPoly symbolic = pf_structured(t);
    for (int k = 0; k < 3; ++k) {
      std::map<SymbolId, RingValue> values;
      const Lookup lookup = random_lookup(rng, values);
      const auto concrete = instantiate(t.matrix, lookup, zero);
      const RingPoly laplace = pf_laplace(concrete);
      ASSERT_EQ(pf_structured(concrete, d), laplace) << d;
      ASSERT_EQ(instantiate(symbolic, lookup, zero), laplace) << d;
    }
  }
}

TEST(StructuredPfaffian, LinearWithExactCornersAllDegrees) {
  for (int d = 5; d <= 25; ++d) {
    const PfaffianTemplate t = build_template(d);
    const SymPoly pf = pf_structured(t);
    EXPECT_EQ(pf.coefficient_of({d, 0, 0}), SymbolicCoefficient::symbol(SymbolId::theta(d, 0, 0))) << d;
    EXPECT_EQ(pf.coefficient_of({0, d, 0}), SymbolicCoefficient::symbol(SymbolId::theta(0, d, 0))) << d;
    EXPECT_EQ(pf.coefficient_of({0, 0, d}), SymbolicCoefficient::symbol(SymbolId::theta(0, 0, d))) << d;
    for (const auto& [mono, coeff] : pf.terms()) {
      ASSERT_LE(coeff.symbol_degree(), 1) << mono.to_string() << ", d=" << d;
      ASSERT_EQ(coeff.constant_term(), 0) << mono.to_string() << ", d=" << d;
    }
  }
}
