#include "pfaffrep/sympoly.hpp"

#include <algorithm>
#include <cctype>

namespace pfaffrep {

std::string SymbolId::name() const {
  switch (kind) {
    case Kind::Theta:
      return "Theta[" + std::to_string(fields[0]) + "," + std::to_string(fields[1]) + "," +
             std::to_string(fields[2]) + "]";
    case Kind::EntryCoef: {
      static constexpr char kAxis[] = {'a', 'b', 'c'};
      return std::string(1, kAxis[fields[2]]) + "[" + std::to_string(fields[0]) + "," +
             std::to_string(fields[1]) + "]";
    }
    case Kind::FreeParam:
      return "t[" + std::to_string(fields[0]) + "]";
  }
  return "?";
}

SymbolId SymbolId::parse(std::string_view name) {
  auto bad = [&] {
    return Error(ErrorKind::InvalidArgument, "bad symbol name '" + std::string(name) + "'");
  };
  std::size_t open = name.find('[');
  if (open == std::string_view::npos || name.back() != ']') throw bad();
  std::string_view head = name.substr(0, open);
  std::string_view body = name.substr(open + 1, name.size() - open - 2);
  std::vector<int> nums;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view part =
        body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (part.empty() || !std::all_of(part.begin(), part.end(),
                                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw bad();
    }
    nums.push_back(std::stoi(std::string(part)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (head == "Theta" && nums.size() == 3) return theta(nums[0], nums[1], nums[2]);
  if (head == "t" && nums.size() == 1 && nums[0] >= 1) return free_param(nums[0]);
  if (head.size() == 1 && nums.size() == 2 && head[0] >= 'a' && head[0] <= 'c') {
    if (nums[0] < 1 || nums[0] >= nums[1]) throw bad();
    return entry(static_cast<Axis>(head[0] - 'a'), nums[0], nums[1]);
  }
  throw bad();
}

SymbolicCoefficient SymbolicCoefficient::constant(const BigInt& value) {
  SymbolicCoefficient c;
  c.add_term({}, value);
  return c;
}

SymbolicCoefficient SymbolicCoefficient::symbol(const SymbolId& id, const BigInt& coeff) {
  SymbolicCoefficient c;
  c.add_term({id}, coeff);
  return c;
}

int SymbolicCoefficient::symbol_degree() const {
  std::size_t deg = 0;
  for (const auto& [key, _] : terms_) deg = std::max(deg, key.size());
  return static_cast<int>(deg);
}

BigInt SymbolicCoefficient::constant_term() const {
  auto it = terms_.find(Key{});
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SymbolicCoefficient::linear_coefficient(const SymbolId& id) const {
  auto it = terms_.find(Key{id});
  return it == terms_.end() ? BigInt(0) : it->second;
}

SymbolicCoefficient SymbolicCoefficient::scaled(const BigInt& n) const {
  SymbolicCoefficient out;
  if (n == 0) return out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * n);
  return out;
}

void SymbolicCoefficient::add_term(Key key, const BigInt& coeff) {
  if (coeff == 0) return;
  std::sort(key.begin(), key.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymbolicCoefficient& SymbolicCoefficient::operator+=(const SymbolicCoefficient& rhs) {
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymbolicCoefficient& SymbolicCoefficient::operator-=(const SymbolicCoefficient& rhs) {
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

SymbolicCoefficient SymbolicCoefficient::operator+(const SymbolicCoefficient& rhs) const {
  SymbolicCoefficient out = *this;
  return out += rhs;
}

SymbolicCoefficient SymbolicCoefficient::operator-(const SymbolicCoefficient& rhs) const {
  SymbolicCoefficient out = *this;
  return out -= rhs;
}

SymbolicCoefficient SymbolicCoefficient::operator*(const SymbolicCoefficient& rhs) const {
  SymbolicCoefficient out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : rhs.terms_) {
      Key key;
      key.reserve(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(key));
      BigInt prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(std::move(key), prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

std::string SymbolicCoefficient::to_string(
    const std::function<std::string(const SymbolId&)>& namer) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& term : terms_) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(),
                   [](auto* a, auto* b) { return a->first.size() > b->first.size(); });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [key, c] = *term;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& s : key) {
      if (!factors.empty()) factors += "*";
      factors += namer ? namer(s) : s.name();
    }
    if (key.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += factors;
    } else {
      out += mag.get_str() + "*" + factors;
    }
  }
  return out;
}

SymbolicCoefficient sym_add(const SymbolicCoefficient& lhs, const SymbolicCoefficient& rhs) {
  return lhs + rhs;
}

SymbolicCoefficient sym_mul(const SymbolicCoefficient& lhs, const SymbolicCoefficient& rhs) {
  return lhs * rhs;
}

RingValue evaluate(const SymbolicCoefficient& coeff,
                   const std::function<RingValue(const SymbolId&)>& lookup,
                   const RingValue& zero) {
  RingValue total = zero;
  for (const auto& [key, c] : coeff.terms()) {
    RingValue term = zero.from_integer_like(c);
    for (const auto& s : key) term *= lookup(s);
    total += term;
  }
  return total;
}

std::string Monomial3::to_string() const {
  std::string out;
  auto emit = [&](char var, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  emit('x', i);
  emit('y', j);
  emit('z', k);
  return out.empty() ? "1" : out;
}

std::vector<Monomial3> monomials_of_degree(int d) {
  std::vector<Monomial3> out;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  }
  return out;
}

namespace {

// Sign split for printing: (negative?, magnitude text, magnitude is one).
struct CoeffText {
  bool negative = false;
  std::string magnitude;
  bool unit = false;
  bool compound = false;
};

CoeffText coeff_text(const RingValue& v) {
  CoeffText t;
  if (v.is_integer()) {
    t.negative = v.as_integer() < 0;
    t.magnitude = BigInt(abs(v.as_integer())).get_str();
  } else if (v.is_rational()) {
    t.negative = v.as_rational() < 0;
    t.magnitude = BigRational(abs(v.as_rational())).get_str();
  } else {
    t.magnitude = v.as_modular().value.get_str();
  }
  t.unit = t.magnitude == "1";
  return t;
}

CoeffText coeff_text(const SymbolicCoefficient& c) {
  CoeffText t;
  if (c.terms().size() == 1) {
    const auto& [key, v] = *c.terms().begin();
    t.negative = v < 0;
    t.magnitude = c.scaled(t.negative ? -1 : 1).to_string();
    t.unit = key.empty() && abs(v) == 1;
  } else {
    t.magnitude = c.to_string();
    t.compound = true;
  }
  return t;
}

template <class C>
std::string poly_text(const TriPoly<C>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    CoeffText t = coeff_text(c);
    if (first) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    first = false;
    bool constant_monomial = m.degree() == 0;
    if (t.compound) {
      out += "(" + t.magnitude + ")";
      if (!constant_monomial) out += "*" + m.to_string();
    } else if (t.unit && !constant_monomial) {
      out += m.to_string();
    } else {
      out += t.magnitude;
      if (!constant_monomial) out += "*" + m.to_string();
    }
  }
  return out;
}

class PolyParser {
 public:
  PolyParser(std::string_view text, int degree, const RingDescriptor& ring)
      : text_(text), degree_(degree), ring_(ring) {}

  RingPoly parse() {
    RingPoly out(degree_, from_integer(0, ring_));
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    bool first = true;
    std::string bad_term;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError(pos_, "expected '+' or '-'");
      }
      first = false;
      std::size_t term_start = pos_;
      auto [coeff, mono, has_factor] = parse_term();
      if (negative) coeff = -coeff;
      if (!has_factor && coeff.is_zero() && degree_ != 0) {
        skip_ws();
        continue;  // a bare `0` term contributes nothing
      }
      if (mono.degree() != degree_) {
        // Reported after the whole text parses, so syntax errors win.
        if (bad_term.empty()) {
          bad_term = "term '" + std::string(trim(text_.substr(term_start, pos_ - term_start))) +
                     "' has degree " + std::to_string(mono.degree()) + ", expected " +
                     std::to_string(degree_);
        }
      } else {
        out.add_term(mono, coeff);
      }
      skip_ws();
    }
    if (!bad_term.empty()) throw Error(ErrorKind::NonHomogeneous, bad_term);
    return out;
  }

 private:
  struct Term {
    RingValue coeff;
    Monomial3 mono;
    bool has_factor;
  };

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool is_var(char ch) const { return ch == 'x' || ch == 'y' || ch == 'z'; }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    return digits;
  }

  Term parse_term() {
    Term term{from_integer(1, ring_), {}, false};
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      has_coeff = true;
      std::size_t start = pos_;
      std::string num = read_digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::string den = read_digits();
        if (den.empty()) throw SyntaxError(pos_, "expected denominator");
        if (ring_.kind() != RingDescriptor::Kind::Rationals) {
          throw SyntaxError(start, "rational coefficient in ring " + ring_.to_string());
        }
        if (BigInt(den) == 0) throw SyntaxError(start, "zero denominator");
        term.coeff = RingValue::rational(BigInt(num), BigInt(den));
      } else {
        term.coeff = from_integer(BigInt(num), ring_);
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) throw SyntaxError(pos_, "expected x, y or z after '*'");
      }
    }
    if (!at_end() && is_var(peek())) {
      term.has_factor = true;
      parse_factor(term.mono);
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) throw SyntaxError(pos_, "expected x, y or z after '*'");
        parse_factor(term.mono);
        skip_ws();
      }
    }
    if (!has_coeff && !term.has_factor) throw SyntaxError(pos_, "expected a term");
    return term;
  }

  void parse_factor(Monomial3& mono) {
    char var = text_[pos_++];
    skip_ws();
    int exp = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError(pos_, "expected exponent after '^'");
      if (digits.size() > 6) throw SyntaxError(pos_, "exponent too large");
      exp = std::stoi(digits);
    }
    if (var == 'x') mono.i += exp;
    if (var == 'y') mono.j += exp;
    if (var == 'z') mono.k += exp;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int degree_;
  RingDescriptor ring_;
};

}  // namespace

std::string to_string(const RingPoly& p) { return poly_text(p); }
std::string to_string(const SymPoly& p) { return poly_text(p); }

RingPoly parse_tripoly(std::string_view text, int degree, const RingDescriptor& ring) {
  return PolyParser(text, degree, ring).parse();
}

}  // namespace pfaffrep
