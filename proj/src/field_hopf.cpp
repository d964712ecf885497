#include "onepi/field_hopf.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <utility>

namespace onepi {

Monomial::Monomial(std::initializer_list<std::string> labels)
    : Monomial(std::vector<std::string>(labels)) {}

Monomial::Monomial(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
}

bool Monomial::has_distinct_labels() const {
  return std::adjacent_find(labels_.begin(), labels_.end()) == labels_.end();
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  std::vector<std::string> out;
  out.reserve(a.degree() + b.degree());
  std::merge(a.labels_.begin(), a.labels_.end(), b.labels_.begin(),
             b.labels_.end(), std::back_inserter(out));
  Monomial m;
  m.labels_ = std::move(out);
  return m;
}

Rational TensorSum::coefficient(const Tuple &t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSum::add(Tuple t, const Rational &coeff) {
  if (t.size() != width_) throw std::invalid_argument("TensorSum: width mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(t), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorSum &TensorSum::operator+=(const TensorSum &other) {
  for (const auto &[t, c] : other) add(t, c);
  return *this;
}

TensorSum kfold_coproduct(const Monomial &m, int k) {
  if (k < 0) throw std::invalid_argument("kfold_coproduct: k must be >= 0");
  const std::size_t slots = static_cast<std::size_t>(k) + 1;
  const auto &labels = m.labels();
  TensorSum out(slots);
  std::vector<std::size_t> choice(labels.size(), 0);
  while (true) {
    std::vector<std::vector<std::string>> parts(slots);
    for (std::size_t p = 0; p < labels.size(); ++p) parts[choice[p]].push_back(labels[p]);
    TensorSum::Tuple tuple;
    tuple.reserve(slots);
    for (auto &part : parts) tuple.emplace_back(std::move(part));
    out.add(std::move(tuple), 1);

    std::size_t p = 0;
    while (p < choice.size() && ++choice[p] == slots) choice[p++] = 0;
    if (p == choice.size()) break;
  }
  return out;
}

TensorSum coproduct(const Monomial &m) { return kfold_coproduct(m, 1); }

TensorSum truncated_coproduct(const Monomial &m) {
  TensorSum out(2);
  for (const auto &[t, c] : coproduct(m))
    if (!t[0].is_unit() && !t[1].is_unit()) out.add(t, c);
  return out;
}

Rational counit(const Monomial &m) { return m.is_unit() ? 1 : 0; }

SignedMonomial antipode(const Monomial &m) {
  return {m.degree() % 2 == 0 ? 1 : -1, m};
}

TensorSum apply_coproduct(const TensorSum &t, std::size_t position) {
  if (position >= t.width()) throw std::out_of_range("apply_coproduct: bad slot");
  TensorSum out(t.width() + 1);
  for (const auto &[tuple, c] : t)
    for (const auto &[split, c2] : coproduct(tuple[position])) {
      TensorSum::Tuple next;
      next.insert(next.end(), tuple.begin(), tuple.begin() + position);
      next.insert(next.end(), split.begin(), split.end());
      next.insert(next.end(), tuple.begin() + position + 1, tuple.end());
      out.add(std::move(next), c * c2);
    }
  return out;
}

TensorSum apply_counit(const TensorSum &t, std::size_t position) {
  if (position >= t.width() || t.width() < 2)
    throw std::out_of_range("apply_counit: bad slot");
  TensorSum out(t.width() - 1);
  for (const auto &[tuple, c] : t) {
    const Rational e = counit(tuple[position]);
    if (e == 0) continue;
    TensorSum::Tuple next = tuple;
    next.erase(next.begin() + position);
    out.add(std::move(next), c * e);
  }
  return out;
}

TensorSum apply_antipode(const TensorSum &t, std::size_t position) {
  if (position >= t.width()) throw std::out_of_range("apply_antipode: bad slot");
  TensorSum out(t.width());
  for (const auto &[tuple, c] : t) {
    auto [sign, m] = antipode(tuple[position]);
    TensorSum::Tuple next = tuple;
    next[position] = std::move(m);
    out.add(std::move(next), c * sign);
  }
  return out;
}

TensorSum multiply_all(const TensorSum &t) {
  TensorSum out(1);
  for (const auto &[tuple, c] : t) {
    Monomial prod;
    for (const auto &m : tuple) prod = prod * m;
    out.add({prod}, c);
  }
  return out;
}

}  // namespace onepi
