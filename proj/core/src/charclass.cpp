#include "isob/charclass.hpp"

#include <algorithm>
#include <numeric>

#include "isob/errors.hpp"

namespace isob {

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  const auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

Polynomial Polynomial::linear(const Weight& w) {
  Polynomial p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    Monomial m(w.size(), 0);
    m[i] = 1;
    p.add_term(m, w.coords[i]);
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_) throw Error(ErrorKind::BasisMismatch, "monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.vars_ != vars_) throw Error(ErrorKind::BasisMismatch, "polynomials in different variables");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ != b.vars_) throw Error(ErrorKind::BasisMismatch, "polynomials in different variables");
  Polynomial out(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty() || mag != 1) out += to_string(mag);
    out += mono;
  }
  return out;
}

ChernPolynomial chern_polynomial(const WeightMultiset& weights) {
  const std::size_t vars = weights.empty() ? 0 : weights.begin()->first.size();
  ChernPolynomial c{vars, {Polynomial::constant(vars, 1)}};
  for (const auto& [w, mult] : weights) {
    const Polynomial omega = Polynomial::linear(w);
    for (std::uint64_t r = 0; r < mult; ++r) {
      c.pieces.emplace_back(vars);
      for (std::size_t d = c.pieces.size() - 1; d >= 1; --d) c.pieces[d] += omega * c.pieces[d - 1];
    }
  }
  return c;
}

bool reps_equal_by_chern(const WeightMultiset& a, const WeightMultiset& b) {
  if (!a.empty() && !b.empty()) {
    const Weight& x = a.begin()->first;
    const Weight& y = b.begin()->first;
    if (x.basis != y.basis || x.size() != y.size())
      throw Error(ErrorKind::BasisMismatch, "weight multisets over different spaces");
  }
  if (a.total() != b.total())
    throw Error(ErrorKind::CountMismatch, "multisets of sizes " + std::to_string(a.total()) + " and " +
                                              std::to_string(b.total()));
  const bool by_polynomial = chern_polynomial(a) == chern_polynomial(b);
  const bool by_multiset = a == b;
  if (by_polynomial != by_multiset)
    throw Error(ErrorKind::ConsistencyFault, "Chern polynomial equality disagrees with multiset equality");
  return by_polynomial;
}

bool complexification_vanishing(const WeightMultiset& weights) {
  if (!weights.is_negation_closed()) return false;
  const auto c = chern_polynomial(weights);
  for (std::size_t d = 1; d < c.pieces.size(); d += 2)
    if (!c.pieces[d].is_zero())
      throw Error(ErrorKind::ConsistencyFault,
                  "odd Chern class c_" + std::to_string(d) + " of a negation-closed multiset is nonzero");
  return true;
}

bool is_weyl_invariant(const RootSystem& rs, const WeightMultiset& weights) {
  for (int i = 0; i < rs.rank(); ++i) {
    WeightMultiset image;
    for (const auto& [w, m] : weights) image.add(rs.reflect(w, i), m);
    if (image != weights) return false;
  }
  return true;
}

FlatKernelDescription flat_kernel(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "bundle rank must be positive");
  FlatKernelDescription out;
  out.n = n;
  for (int i = 1; i <= n / 2; ++i) out.kernel_generators.push_back({"p_" + std::to_string(i), 4 * i});
  if (n % 2 == 0) {
    out.euler = CharacteristicClass{"e", n};
    out.euler_square = CharacteristicClass{"e^2", 2 * n};
    out.notes.push_back("e is not in the kernel; e^2 = p_" + std::to_string(n / 2) + " is");
  } else {
    out.notes.push_back("n odd: no Euler class in the rational cohomology of BSO(n)");
  }
  if (n == 1) out.notes.push_back("no Pontryagin classes: the kernel is zero");
  return out;
}

}  // namespace isob
