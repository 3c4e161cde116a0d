#include "isob/weight.hpp"

#include <algorithm>

#include "isob/errors.hpp"

namespace isob {

std::string to_string(Basis basis) {
  return basis == Basis::Ambient ? "ambient" : "fundamental";
}

Weight Weight::ambient(std::initializer_list<long> values) {
  Weight w;
  w.basis = Basis::Ambient;
  for (long v : values) w.coords.emplace_back(v);
  return w;
}

Weight Weight::fundamental(std::initializer_list<long> values) {
  Weight w = ambient(values);
  w.basis = Basis::Fundamental;
  return w;
}

Weight Weight::from_ints(Basis b, const IntVec& values) {
  Weight w;
  w.basis = b;
  w.coords.reserve(values.size());
  for (auto v : values) w.coords.emplace_back(static_cast<long>(v));
  return w;
}

Weight Weight::zero(Basis b, std::size_t size) {
  return Weight(b, std::vector<Rational>(size, Rational(0)));
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_integer(c); });
}

namespace {

void require_compatible(const Weight& a, const Weight& b) {
  if (a.basis != b.basis || a.coords.size() != b.coords.size())
    throw Error(ErrorKind::BasisMismatch,
                "incompatible weights " + to_string(a) + " and " + to_string(b));
}

}  // namespace

Weight& Weight::operator+=(const Weight& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& scalar) {
  for (auto& c : coords) c *= scalar;
  return *this;
}

bool operator==(const Weight& a, const Weight& b) {
  return a.basis == b.basis && a.coords == b.coords;
}

bool operator<(const Weight& a, const Weight& b) {
  if (a.basis != b.basis) return a.basis < b.basis;
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w.coords[i]);
  }
  return out + ")";
}

void WeightMultiset::add(const Weight& w, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  if (!entries_.empty()) {
    const Weight& first = entries_.begin()->first;
    if (first.basis != w.basis || first.size() != w.size())
      throw Error(ErrorKind::BasisMismatch, "weight " + to_string(w) +
                                                " does not match the multiset's basis");
  }
  entries_[w] += multiplicity;
}

void WeightMultiset::add(const WeightMultiset& other) {
  for (const auto& [w, m] : other) add(w, m);
}

std::uint64_t WeightMultiset::multiplicity(const Weight& w) const {
  const auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

std::uint64_t WeightMultiset::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, m] : entries_) sum += m;
  return sum;
}

bool WeightMultiset::is_negation_closed() const {
  for (const auto& [w, m] : entries_)
    if (multiplicity(-w) != m) return false;
  return true;
}

Weight WeightMultiset::weighted_sum() const {
  if (entries_.empty()) throw Error(ErrorKind::InvalidArgument, "sum of an empty multiset");
  Weight sum = Weight::zero(entries_.begin()->first.basis, entries_.begin()->first.size());
  for (const auto& [w, m] : entries_) sum += Rational(static_cast<unsigned long>(m)) * w;
  return sum;
}

std::string to_string(const WeightMultiset& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, m] : set) {
    if (!first) out += ", ";
    first = false;
    out += to_string(w);
    if (m != 1) out += "x" + std::to_string(m);
  }
  return out + "}";
}

}  // namespace isob
