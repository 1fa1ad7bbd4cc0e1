#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kb {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for every violated precondition or invariant; the message names it.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered list of distinct variable names. The order is fixed at creation
/// and defines both exponent-vector layout and the canonical term order.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const VariableSet& other) const { return names_ == other.names_; }
  bool operator!=(const VariableSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr make_vars(std::initializer_list<const char*> names);
VarsPtr make_vars(const std::vector<std::string>& names);

using Exponents = std::vector<int>;

/// Descending lexicographic order on exponent vectors (the canonical order).
struct LexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate Laurent polynomial with exact integer coefficients.
/// Stored coefficients are never zero; every exponent vector has length
/// |vars|. Values are immutable in spirit: arithmetic returns new objects,
/// and the only mutators (add_term, operator+=) keep the representation
/// canonical, so equality is plain term-map equality.
class Laurent {
 public:
  using Terms = std::map<Exponents, BigInt, LexDescending>;

  Laurent();  // zero in the empty variable set
  explicit Laurent(VarsPtr vars);

  static Laurent constant(VarsPtr vars, BigInt c);
  static Laurent monomial(VarsPtr vars, Exponents exps, BigInt c);
  static Laurent variable(VarsPtr vars, std::size_t index, int power = 1);
  static Laurent variable(VarsPtr vars, const std::string& name, int power = 1);

  const VariableSet& vars() const { return *vars_; }
  const VarsPtr& vars_ptr() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  /// Accumulate c * x^exps, erasing the term if the sum vanishes.
  void add_term(const Exponents& exps, const BigInt& c);

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& rhs);
  Laurent& operator-=(const Laurent& rhs);
  friend Laurent operator+(Laurent lhs, const Laurent& rhs) { return lhs += rhs; }
  friend Laurent operator-(Laurent lhs, const Laurent& rhs) { return lhs -= rhs; }
  friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);
  Laurent& operator*=(const Laurent& rhs);

  /// Integer power. Negative exponents are accepted only for monomials with
  /// coefficient +1 or -1 (the invertible elements of the ring).
  Laurent pow(int n) const;

  /// Exact division; throws kb::error when the divisor does not divide *this.
  Laurent divide_exact(const Laurent& divisor) const;

  bool operator==(const Laurent& rhs) const;
  bool operator!=(const Laurent& rhs) const { return !(*this == rhs); }

  /// Canonical text: terms in descending lexicographic exponent order,
  /// "-A^4 - A^-4" style. Round-trips through parse().
  std::string str() const;
  static Laurent parse(const std::string& text, VarsPtr vars);

 private:
  // Promotes constants across variable sets; throws on a genuine mismatch.
  static void align(Laurent& a, Laurent& b);

  VarsPtr vars_;
  Terms terms_;
};

/// A substitution target: either an ordinary polynomial or the formal
/// reciprocal of one. Reciprocals are cleared by multiplying the whole sum
/// with the right power of the polynomial and dividing exactly once, so the
/// result is an honest Laurent polynomial or an error.
struct Inverse {
  Laurent poly;
};
using Binding = std::variant<Laurent, Inverse>;

/// Substitutes bindings into p. Every variable of p that occurs with nonzero
/// exponent must either be bound or exist in `target`. Binding a
/// non-invertible polynomial into a negative exponent is an error.
Laurent substitute(const Laurent& p, const std::map<std::string, Binding>& bindings,
                   VarsPtr target);

std::ostream& operator<<(std::ostream& os, const Laurent& p);

}  // namespace kb
