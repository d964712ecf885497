#ifndef ONEPI_FIELD_HOPF_HPP
#define ONEPI_FIELD_HOPF_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "onepi/rational.hpp"

namespace onepi {

/// Product of field operators phi(x_1)...phi(x_n) in the free commutative
/// algebra S(V), stored as a sorted label multiset. Degree 0 is the unit.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<std::string> labels);
  explicit Monomial(std::vector<std::string> labels);

  std::size_t degree() const { return labels_.size(); }
  bool is_unit() const { return labels_.empty(); }
  const std::vector<std::string> &labels() const { return labels_; }
  bool has_distinct_labels() const;

  /// Commutative product (multiset union).
  friend Monomial operator*(const Monomial &a, const Monomial &b);

  friend auto operator<=>(const Monomial &, const Monomial &) = default;
  friend bool operator==(const Monomial &, const Monomial &) = default;

 private:
  std::vector<std::string> labels_;
};

/// Element of S(V)^{(x)k}: rational combination of k-tuples of monomials.
class TensorSum {
 public:
  using Tuple = std::vector<Monomial>;

  explicit TensorSum(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<Tuple, Rational> &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  Rational coefficient(const Tuple &t) const;

  void add(Tuple t, const Rational &coeff);
  TensorSum &operator+=(const TensorSum &other);

  friend bool operator==(const TensorSum &, const TensorSum &) = default;

 private:
  std::size_t width_;
  std::map<Tuple, Rational> terms_;
};

/// Delta: sum over all 2^n ordered splittings of the label positions.
TensorSum coproduct(const Monomial &m);

/// Delta^k: sum over all (k+1)^n distributions into k+1 slots; Delta^0 = id.
TensorSum kfold_coproduct(const Monomial &m, int k);

/// Delta_{>=1}: coproduct without the terms having a unit factor.
TensorSum truncated_coproduct(const Monomial &m);

Rational counit(const Monomial &m);

struct SignedMonomial {
  int sign;
  Monomial monomial;
};

/// S(phi(x_1)...phi(x_n)) = (-1)^n phi(x_1)...phi(x_n).
SignedMonomial antipode(const Monomial &m);

/// Applies Delta to slot `position` of every tuple (width grows by one).
TensorSum apply_coproduct(const TensorSum &t, std::size_t position);
/// Applies the counit to slot `position` (width shrinks by one).
TensorSum apply_counit(const TensorSum &t, std::size_t position);
/// Applies the antipode to slot `position`.
TensorSum apply_antipode(const TensorSum &t, std::size_t position);
/// Multiplies all slots together (mu^{k-1}); result has width 1.
TensorSum multiply_all(const TensorSum &t);

}  // namespace onepi

#endif  // ONEPI_FIELD_HOPF_HPP
