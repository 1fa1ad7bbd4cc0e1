#include "kbracket/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kb {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw error("variable names must be non-empty");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw error("duplicate variable name: " + names_[i]);
  }
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarsPtr make_vars(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return std::make_shared<const VariableSet>(std::move(v));
}

VarsPtr make_vars(const std::vector<std::string>& names) {
  return std::make_shared<const VariableSet>(names);
}

bool LexDescending::operator()(const Exponents& a, const Exponents& b) const {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Laurent::Laurent() : vars_(make_vars({})) {}

Laurent::Laurent(VarsPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw error("null variable set");
}

Laurent Laurent::constant(VarsPtr vars, BigInt c) {
  Laurent p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_->size(), 0), std::move(c));
  return p;
}

Laurent Laurent::monomial(VarsPtr vars, Exponents exps, BigInt c) {
  Laurent p(std::move(vars));
  if (exps.size() != p.vars_->size()) throw error("exponent vector length mismatch");
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

Laurent Laurent::variable(VarsPtr vars, std::size_t index, int power) {
  if (index >= vars->size()) throw error("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = power;
  return monomial(std::move(vars), std::move(e), 1);
}

Laurent Laurent::variable(VarsPtr vars, const std::string& name, int power) {
  auto idx = vars->index_of(name);
  if (!idx) throw error("unknown variable: " + name);
  return variable(std::move(vars), *idx, power);
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && is_constant() && terms_.begin()->second == 1;
}

void Laurent::add_term(const Exponents& exps, const BigInt& c) {
  if (exps.size() != vars_->size()) throw error("exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Laurent::align(Laurent& a, Laurent& b) {
  if (*a.vars_ == *b.vars_) return;
  if (a.is_constant()) {
    BigInt c = a.is_zero() ? BigInt(0) : a.terms_.begin()->second;
    a = Laurent::constant(b.vars_, c);
    return;
  }
  if (b.is_constant()) {
    BigInt c = b.is_zero() ? BigInt(0) : b.terms_.begin()->second;
    b = Laurent::constant(a.vars_, c);
    return;
  }
  throw error("variable-set mismatch");
}

Laurent Laurent::operator-() const {
  Laurent r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& rhs) {
  Laurent b = rhs;
  align(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& rhs) {
  Laurent b = rhs;
  align(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& lhs, const Laurent& rhs) {
  Laurent a = lhs, b = rhs;
  Laurent::align(a, b);
  Laurent r(a.vars_ptr());
  const std::size_t n = a.vars().size();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& rhs) {
  *this = *this * rhs;
  return *this;
}

Laurent Laurent::pow(int n) const {
  if (n == 0) return constant(vars_, 1);
  if (n < 0) {
    if (terms_.size() != 1)
      throw error("negative power of a polynomial with several terms");
    const auto& [e, c] = *terms_.begin();
    if (c != 1 && c != -1)
      throw error("negative power of a non-invertible monomial");
    Exponents inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = e[i] * n;
    BigInt cc = (c == -1 && (n % 2 != 0)) ? BigInt(-1) : BigInt(1);
    return monomial(vars_, std::move(inv), std::move(cc));
  }
  Laurent base = *this;
  Laurent acc = constant(vars_, 1);
  unsigned k = static_cast<unsigned>(n);
  while (k) {
    if (k & 1u) acc *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return acc;
}

Laurent Laurent::divide_exact(const Laurent& divisor) const {
  Laurent d = divisor, r = *this;
  align(r, d);
  if (d.is_zero()) throw error("division by zero polynomial");
  Laurent q(r.vars_ptr());
  const auto& [dlead_e, dlead_c] = *d.terms_.begin();
  // In exact division the lex-minimal quotient exponent is forced, which
  // bounds the search; the step cap catches non-terminating multivariate
  // remainders.
  Exponents min_bound;
  if (!r.is_zero()) {
    Exponents pmin = r.terms_.rbegin()->first;
    const Exponents& dmin = d.terms_.rbegin()->first;
    min_bound.resize(pmin.size());
    for (std::size_t i = 0; i < pmin.size(); ++i) min_bound[i] = pmin[i] - dmin[i];
  }
  LexDescending gt;
  std::size_t steps = 0;
  while (!r.is_zero()) {
    const auto& [rlead_e, rlead_c] = *r.terms_.begin();
    if (rlead_c % dlead_c != 0) throw error("polynomial division is not exact");
    Exponents qe(rlead_e.size());
    for (std::size_t i = 0; i < rlead_e.size(); ++i) qe[i] = rlead_e[i] - dlead_e[i];
    if (gt(min_bound, qe))  // quotient exponent fell below the forced minimum
      throw error("polynomial division is not exact");
    Laurent qt = monomial(r.vars_ptr(), qe, rlead_c / dlead_c);
    q += qt;
    r -= qt * d;
    if (++steps > 200000) throw error("polynomial division is not exact");
  }
  return q;
}

bool Laurent::operator==(const Laurent& rhs) const {
  if (*vars_ == rhs.vars()) return terms_ == rhs.terms_;
  Laurent a = *this, b = rhs;
  align(a, b);
  return a.terms_ == b.terms_;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = vars_->name(i);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "*";
        os << factors[i];
      }
    }
  }
  return os.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::optional<BigInt> integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return BigInt(s.substr(start, pos - start));
  }
  // Longest variable name matching at the cursor.
  std::optional<std::size_t> variable(const VariableSet& vars) {
    skip_ws();
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const std::string& n = vars.name(i);
      if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
        best = i;
        best_len = n.size();
      }
    }
    if (best) pos += best_len;
    return best;
  }
  int exponent() {
    skip_ws();
    bool neg = consume('-');
    auto mag = integer();
    if (!mag) throw error("expected integer exponent after '^'");
    if (*mag > 1000000) throw error("exponent out of range");
    int v = static_cast<int>(*mag);
    return neg ? -v : v;
  }
};

}  // namespace

Laurent Laurent::parse(const std::string& text, VarsPtr vars) {
  Scanner sc{text};
  Laurent result(vars);
  if (sc.eof()) throw error("empty polynomial text");
  bool first = true;
  while (!sc.eof()) {
    int sign = 1;
    if (sc.consume('+')) {
      sign = 1;
    } else if (sc.consume('-')) {
      sign = -1;
    } else if (!first) {
      throw error("expected '+' or '-' between terms");
    }
    first = false;
    BigInt coeff = 1;
    Exponents e(vars->size(), 0);
    bool saw_factor = false;
    if (auto c = sc.integer()) {
      coeff = *c;
      saw_factor = true;
    }
    for (;;) {
      sc.consume('*');
      auto vi = sc.variable(*vars);
      if (!vi) break;
      int p = 1;
      if (sc.consume('^')) p = sc.exponent();
      e[*vi] += p;
      saw_factor = true;
    }
    if (!saw_factor) throw error("expected a term");
    result.add_term(e, sign * coeff);
  }
  return result;
}

Laurent substitute(const Laurent& p, const std::map<std::string, Binding>& bindings,
                   VarsPtr target) {
  const std::size_t n = p.vars().size();
  // Resolve each source variable once.
  struct Resolved {
    enum Kind { kIdentity, kPoly, kInverse } kind;
    std::size_t target_index = 0;  // kIdentity
    const Laurent* poly = nullptr;
    std::size_t inverse_slot = 0;  // kInverse
  };
  std::vector<Resolved> how(n);
  std::vector<const Laurent*> inverses;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = p.vars().name(i);
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      auto ti = target->index_of(name);
      if (!ti) {
        // Unbound variables may only occur with zero exponent.
        for (const auto& [e, c] : p.terms())
          if (e[i] != 0) throw error("unbound variable in substitution: " + name);
        how[i] = {Resolved::kIdentity, 0, nullptr, 0};
        continue;
      }
      how[i] = {Resolved::kIdentity, *ti, nullptr, 0};
    } else if (std::holds_alternative<Laurent>(it->second)) {
      how[i] = {Resolved::kPoly, 0, &std::get<Laurent>(it->second), 0};
    } else {
      const Laurent& inv = std::get<Inverse>(it->second).poly;
      if (inv.is_zero()) throw error("formal inverse of the zero polynomial");
      how[i] = {Resolved::kInverse, 0, &inv, inverses.size()};
      inverses.push_back(&inv);
    }
  }

  // Accumulate partial sums keyed by the outstanding formal-inverse powers.
  std::map<std::vector<int>, Laurent> pending;
  for (const auto& [e, c] : p.terms()) {
    Laurent term = Laurent::constant(target, c);
    std::vector<int> inv_pow(inverses.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      const Resolved& r = how[i];
      switch (r.kind) {
        case Resolved::kIdentity:
          term *= Laurent::variable(target, r.target_index, e[i]);
          break;
        case Resolved::kPoly:
          if (e[i] < 0 && !r.poly->is_monomial())
            throw error("non-invertible substitution into a negative power");
          term *= r.poly->pow(e[i]);
          break;
        case Resolved::kInverse:
          if (e[i] < 0)
            term *= r.poly->pow(-e[i]);
          else
            inv_pow[r.inverse_slot] += e[i];
          break;
      }
    }
    auto it = pending.find(inv_pow);
    if (it == pending.end())
      pending.emplace(std::move(inv_pow), std::move(term));
    else
      it->second += term;
  }

  if (inverses.empty()) {
    Laurent out(target);
    for (auto& [k, v] : pending) out += v;
    return out;
  }

  std::vector<int> max_pow(inverses.size(), 0);
  for (const auto& [k, v] : pending)
    for (std::size_t i = 0; i < k.size(); ++i) max_pow[i] = std::max(max_pow[i], k[i]);

  Laurent total(target);
  for (const auto& [k, v] : pending) {
    Laurent scaled = v;
    for (std::size_t i = 0; i < k.size(); ++i)
      scaled *= inverses[i]->pow(max_pow[i] - k[i]);
    total += scaled;
  }
  for (std::size_t i = 0; i < inverses.size(); ++i)
    total = total.divide_exact(inverses[i]->pow(max_pow[i]));
  return total;
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

}  // namespace kb
