#include "isob/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <string>

#include "isob/errors.hpp"

namespace isob {

struct RootSystem::Data {
  SimpleType type;
  std::string label;
  int ambient_dim = 0;
  int torus_rank = 0;
  bool quotient = false;

  std::vector<Weight> simple_roots;
  std::vector<Weight> positive_roots;
  std::vector<Weight> fundamental_weights;
  IntMatrix cartan;
  RationalMatrix cartan_inverse;
  Weight weyl_vector;
  Weight highest_root;
  Integer weyl_order;

  std::vector<IntVec> positive_fundamental;
  std::vector<IntVec> positive_simple;
  std::vector<IntVec> positive_coroot_simple;
  RationalMatrix gram;
};

char to_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool SimpleType::is_legal() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

std::string SimpleType::name() const { return std::string(1, to_char(family)) + std::to_string(rank); }

std::string SimpleType::algebra_name() const {
  switch (family) {
    case Family::A: return "sl_" + std::to_string(rank + 1);
    case Family::B: return "so_" + std::to_string(2 * rank + 1);
    case Family::C: return "sp_" + std::to_string(2 * rank);
    case Family::D: return "so_" + std::to_string(2 * rank);
    case Family::E: return "e_" + std::to_string(rank);
    case Family::F: return "f_4";
    case Family::G: return "g_2";
  }
  return "?";
}

SimpleType make_simple_type(std::string_view family, int rank) {
  if (family.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(family) + "'");
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family.front())));
  if (c < 'A' || c > 'G')
    throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(family) + "'");
  SimpleType t{static_cast<Family>(c - 'A'), rank};
  if (!t.is_legal()) throw Error(ErrorKind::IllegalType, "illegal simple type " + t.name());
  return t;
}

SimpleType parse_simple_type(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || !std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw Error(ErrorKind::InvalidArgument, "cannot parse simple type '" + std::string(text) + "'");
  if (s.size() > 4) throw Error(ErrorKind::IllegalType, "rank too large in '" + s + "'");
  return make_simple_type(s.substr(0, 1), std::stoi(s.substr(1)));
}

Integer weyl_group_order(const SimpleType& t) {
  const auto n = static_cast<unsigned long>(t.rank);
  const bool degenerate_orthogonal = (t.family == Family::B && t.rank == 1) ||
                                     (t.family == Family::D && (t.rank == 1 || t.rank == 2));
  if (!t.is_legal() && !degenerate_orthogonal)
    throw Error(ErrorKind::IllegalType, "illegal simple type " + t.name());
  Integer two_pow;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C:
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n);
      return two_pow * factorial(n);
    case Family::D:
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 1);
      return two_pow * factorial(n);
    case Family::E:
      if (t.rank == 6) return Integer(51840);
      if (t.rank == 7) return Integer(2903040);
      return Integer(696729600);
    case Family::F: return Integer(1152);
    case Family::G: return Integer(12);
  }
  return Integer(0);
}

namespace {

Weight unit(int dim, int i, long scale = 1) {
  Weight w = Weight::zero(Basis::Ambient, static_cast<std::size_t>(dim));
  w.coords[static_cast<std::size_t>(i)] = scale;
  return w;
}

Weight from_halves(std::initializer_list<long> twice) {
  Weight w;
  for (long v : twice) w.coords.emplace_back(v, 2);
  for (auto& c : w.coords) c.canonicalize();
  return w;
}

// Bourbaki simple roots; `ambient` receives the realization dimension.
std::vector<Weight> bourbaki_simple_roots(const SimpleType& t, int& ambient) {
  std::vector<Weight> roots;
  const int n = t.rank;
  auto chain = [&](int dim, int count) {
    for (int i = 0; i < count; ++i) roots.push_back(unit(dim, i) - unit(dim, i + 1));
  };
  switch (t.family) {
    case Family::A:
      ambient = n + 1;
      chain(ambient, n);
      break;
    case Family::B:
      ambient = n;
      chain(n, n - 1);
      roots.push_back(unit(n, n - 1));
      break;
    case Family::C:
      ambient = n;
      chain(n, n - 1);
      roots.push_back(unit(n, n - 1, 2));
      break;
    case Family::D:
      ambient = n;
      if (n >= 2) {
        chain(n, n - 1);
        roots.push_back(unit(n, n - 2) + unit(n, n - 1));
      }
      break;
    case Family::E: {
      ambient = 8;
      roots.push_back(from_halves({1, -1, -1, -1, -1, -1, -1, 1}));
      roots.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i < 6; ++i) roots.push_back(unit(8, i + 1) - unit(8, i));
      roots.resize(static_cast<std::size_t>(n));
      break;
    }
    case Family::F:
      ambient = 4;
      roots.push_back(unit(4, 1) - unit(4, 2));
      roots.push_back(unit(4, 2) - unit(4, 3));
      roots.push_back(unit(4, 3));
      roots.push_back(from_halves({1, -1, -1, -1}));
      break;
    case Family::G:
      ambient = 3;
      roots.push_back(unit(3, 0) - unit(3, 1));
      roots.push_back(Weight::ambient({-2, 1, 1}));
      break;
  }
  return roots;
}

}  // namespace

struct RootSystemBuilder {
  static RootSystem build(const SimpleType& type, std::string label, int ambient_dim,
                          int torus_rank, bool quotient, std::vector<Weight> simple) {
    auto d = std::make_shared<RootSystem::Data>();
    d->type = type;
    d->label = std::move(label);
    d->ambient_dim = ambient_dim;
    d->torus_rank = torus_rank;
    d->quotient = quotient;
    d->weyl_order = weyl_group_order(type);
    // Partially built system: enough for inner(), canonical(), reflect().
    RootSystem rs(d);
    for (auto& a : simple) a = rs.canonical(std::move(a));
    d->simple_roots = simple;

    const std::size_t r = simple.size();
    d->cartan.assign(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        d->cartan[i][j] = to_int64(rs.coroot_pairing(simple[i], simple[j]));

    auto inv = inverse(to_rational(d->cartan));
    if (!inv) throw Error(ErrorKind::ConsistencyFault, "singular Cartan matrix for " + type.name());
    d->cartan_inverse = *inv;

    for (std::size_t i = 0; i < r; ++i) {
      Weight w = Weight::zero(Basis::Ambient, static_cast<std::size_t>(ambient_dim));
      for (std::size_t k = 0; k < r; ++k) w += d->cartan_inverse[i][k] * simple[k];
      d->fundamental_weights.push_back(rs.canonical(std::move(w)));
    }

    d->weyl_vector = Weight::zero(Basis::Ambient, static_cast<std::size_t>(ambient_dim));
    for (const auto& w : d->fundamental_weights) d->weyl_vector += w;
    d->weyl_vector = rs.canonical(d->weyl_vector);

    // All roots: closure of the simple roots under simple reflections.
    std::set<Weight> roots(simple.begin(), simple.end());
    std::deque<Weight> queue(simple.begin(), simple.end());
    while (!queue.empty()) {
      const Weight beta = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < r; ++i) {
        Weight image = rs.reflect(beta, static_cast<int>(i));
        if (roots.insert(image).second) queue.push_back(std::move(image));
      }
    }

    struct Positive {
      Weight root;
      IntVec coeffs;
      std::int64_t height;
    };
    std::vector<Positive> positive;
    for (const auto& beta : roots) {
      const auto c = rs.simple_root_coefficients(beta);
      IntVec coeffs;
      bool nonneg = true;
      for (const auto& x : c) {
        coeffs.push_back(to_int64(x));
        nonneg = nonneg && x >= 0;
      }
      if (!nonneg) continue;
      std::int64_t h = 0;
      for (auto x : coeffs) h += x;
      positive.push_back({beta, std::move(coeffs), h});
    }
    std::sort(positive.begin(), positive.end(), [](const Positive& a, const Positive& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.coeffs > b.coeffs;
    });
    if (2 * positive.size() != roots.size())
      throw Error(ErrorKind::ConsistencyFault, "root system " + type.name() + " is not reduced");

    std::vector<Rational> simple_norms;
    for (const auto& a : simple) simple_norms.push_back(rs.inner(a, a));
    for (const auto& p : positive) {
      d->positive_roots.push_back(p.root);
      d->positive_simple.push_back(p.coeffs);
      IntVec fund;
      for (std::size_t j = 0; j < r; ++j) fund.push_back(to_int64(rs.coroot_pairing(p.root, simple[j])));
      d->positive_fundamental.push_back(std::move(fund));
      const Rational norm = rs.inner(p.root, p.root);
      IntVec coroot;
      for (std::size_t k = 0; k < r; ++k)
        coroot.push_back(to_int64(Rational(p.coeffs[k]) * simple_norms[k] / norm));
      d->positive_coroot_simple.push_back(std::move(coroot));
    }
    if (!positive.empty()) d->highest_root = positive.back().root;

    d->gram.assign(r, RationalVector(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        d->gram[i][j] = rs.inner(d->fundamental_weights[i], d->fundamental_weights[j]);
    return rs;
  }
};

RootSystem build_root_system(const SimpleType& type) {
  if (!type.is_legal()) throw Error(ErrorKind::IllegalType, "illegal simple type " + type.name());
  int ambient = 0;
  auto simple = bourbaki_simple_roots(type, ambient);
  return RootSystemBuilder::build(type, type.algebra_name(), ambient, type.rank,
                                  type.family == Family::A, std::move(simple));
}

RootSystem build_orthogonal(int m) {
  if (m < 2) throw Error(ErrorKind::IllegalType, "so_" + std::to_string(m) + " is not defined here");
  const SimpleType type{m % 2 ? Family::B : Family::D, m / 2};
  int ambient = 0;
  auto simple = bourbaki_simple_roots(type, ambient);
  return RootSystemBuilder::build(type, "so_" + std::to_string(m), ambient, m / 2, false,
                                  std::move(simple));
}

const SimpleType& RootSystem::type() const { return data_->type; }
int RootSystem::rank() const { return static_cast<int>(data_->simple_roots.size()); }
int RootSystem::torus_rank() const { return data_->torus_rank; }
int RootSystem::ambient_dim() const { return data_->ambient_dim; }
bool RootSystem::uses_quotient() const { return data_->quotient; }
const std::string& RootSystem::label() const { return data_->label; }
std::span<const Weight> RootSystem::simple_roots() const { return data_->simple_roots; }
std::span<const Weight> RootSystem::positive_roots() const { return data_->positive_roots; }
std::span<const Weight> RootSystem::fundamental_weights() const { return data_->fundamental_weights; }
const IntMatrix& RootSystem::cartan_matrix() const { return data_->cartan; }
const Weight& RootSystem::weyl_vector() const { return data_->weyl_vector; }
const Integer& RootSystem::weyl_group_order() const { return data_->weyl_order; }

const Weight& RootSystem::highest_root() const {
  if (data_->positive_roots.empty())
    throw Error(ErrorKind::IllegalType, data_->label + " has no roots");
  return data_->highest_root;
}

const std::vector<IntVec>& RootSystem::positive_roots_fundamental() const {
  return data_->positive_fundamental;
}
const std::vector<IntVec>& RootSystem::positive_roots_simple() const { return data_->positive_simple; }
const std::vector<IntVec>& RootSystem::positive_coroots_simple() const {
  return data_->positive_coroot_simple;
}
const RationalMatrix& RootSystem::fundamental_gram() const { return data_->gram; }
const RationalMatrix& RootSystem::inverse_cartan() const { return data_->cartan_inverse; }

void RootSystem::check(const Weight& w) const {
  const auto expected = static_cast<std::size_t>(w.basis == Basis::Ambient ? ambient_dim() : rank());
  if (w.size() != expected)
    throw Error(ErrorKind::BasisMismatch, "weight " + to_string(w) + " has " +
                                              std::to_string(w.size()) + " " + to_string(w.basis) +
                                              " coordinates; " + label() + " expects " +
                                              std::to_string(expected));
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
  if (x.basis != Basis::Ambient || y.basis != Basis::Ambient)
    throw Error(ErrorKind::BasisMismatch, "inner product needs ambient coordinates");
  check(x);
  check(y);
  Rational dot = 0, sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x.coords[i] * y.coords[i];
    sx += x.coords[i];
    sy += y.coords[i];
  }
  if (data_->quotient) dot -= sx * sy / data_->ambient_dim;
  return dot;
}

Rational RootSystem::coroot_pairing(const Weight& w, const Weight& root) const {
  return 2 * inner(w, root) / inner(root, root);
}

Weight RootSystem::canonical(Weight w) const {
  if (data_->quotient && w.basis == Basis::Ambient && !w.coords.empty()) {
    const Rational last = w.coords.back();
    if (last != 0)
      for (auto& c : w.coords) c -= last;
  }
  return w;
}

Weight RootSystem::to_fundamental(const Weight& w) const {
  check(w);
  if (w.basis == Basis::Fundamental) return w;
  Weight out(Basis::Fundamental, {});
  for (const auto& a : data_->simple_roots) out.coords.push_back(coroot_pairing(w, a));
  return out;
}

Weight RootSystem::to_ambient(const Weight& w) const {
  check(w);
  if (w.basis == Basis::Ambient) return canonical(w);
  Weight out = Weight::zero(Basis::Ambient, static_cast<std::size_t>(ambient_dim()));
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.coords[i] != 0) out += w.coords[i] * data_->fundamental_weights[i];
  return canonical(std::move(out));
}

Weight RootSystem::in_basis(const Weight& w, Basis basis) const {
  return basis == Basis::Ambient ? to_ambient(w) : to_fundamental(w);
}

IntVec RootSystem::fundamental_ints(const Weight& w) const {
  const Weight f = to_fundamental(w);
  IntVec out;
  out.reserve(f.size());
  for (const auto& c : f.coords) {
    if (!is_integer(c))
      throw Error(ErrorKind::NotIntegral, "weight " + to_string(w) + " is not in the weight lattice of " +
                                              label());
    out.push_back(to_int64(c));
  }
  return out;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  check(w);
  const auto idx = static_cast<std::size_t>(i);
  if (w.basis == Basis::Fundamental) {
    Weight out = w;
    const Rational c = w.coords[idx];
    for (std::size_t j = 0; j < out.size(); ++j) out.coords[j] -= c * Rational(static_cast<long>(data_->cartan[idx][j]));
    return out;
  }
  const auto& alpha = data_->simple_roots[idx];
  return canonical(w - coroot_pairing(w, alpha) * alpha);
}

RationalVector RootSystem::simple_root_coefficients(const Weight& w) const {
  return row_times(to_fundamental(w).coords, data_->cartan_inverse);
}

Integer algebra_dim(const RootSystem& rs) {
  return Integer(2 * static_cast<unsigned long>(rs.positive_roots().size()) +
                 static_cast<unsigned long>(rs.torus_rank()));
}

std::vector<std::vector<int>> dynkin_components(const IntMatrix& cartan, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> components;
  std::set<int> remaining(nodes.begin(), nodes.end());
  while (!remaining.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*remaining.begin()};
    remaining.erase(remaining.begin());
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (auto it = remaining.begin(); it != remaining.end();) {
        if (cartan[static_cast<std::size_t>(v)][static_cast<std::size_t>(*it)] != 0) {
          queue.push_back(*it);
          it = remaining.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

SimpleType classify_cartan(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty Cartan matrix");
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  if (dynkin_components(cartan, all).size() != 1)
    throw Error(ErrorKind::InvalidArgument, "Dynkin diagram is not connected");
  if (n == 1) return {Family::A, 1};

  auto at = [&](int i, int j) { return cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0, double_edges = 0, triple_edges = 0;
  std::pair<int, int> multi{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j) == 0) continue;
      const auto bond = at(i, j) * at(j, i);
      adj[static_cast<std::size_t>(i)].push_back(j);
      adj[static_cast<std::size_t>(j)].push_back(i);
      ++edges;
      if (bond == 2) ++double_edges, multi = {i, j};
      else if (bond == 3) ++triple_edges, multi = {i, j};
      else if (bond != 1) throw Error(ErrorKind::InvalidArgument, "not a finite-type Cartan matrix");
    }
  if (edges != n - 1) throw Error(ErrorKind::InvalidArgument, "Dynkin diagram has a cycle");
  auto degree = [&](int v) { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); };

  if (triple_edges) {
    if (n != 2) throw Error(ErrorKind::InvalidArgument, "triple bond outside G2");
    return {Family::G, 2};
  }
  int branch = -1;
  for (int v = 0; v < n; ++v) {
    if (degree(v) > 3) throw Error(ErrorKind::InvalidArgument, "not a finite-type Dynkin diagram");
    if (degree(v) == 3) {
      if (branch >= 0) throw Error(ErrorKind::InvalidArgument, "two branch nodes");
      branch = v;
    }
  }
  if (double_edges) {
    if (double_edges > 1 || branch >= 0)
      throw Error(ErrorKind::InvalidArgument, "not a finite-type Dynkin diagram");
    if (n == 2) return {Family::B, 2};
    const auto [i, j] = multi;
    if (degree(i) == 1 || degree(j) == 1) {
      const int end = degree(i) == 1 ? i : j;
      const int other = end == i ? j : i;
      // The end node of B_n is short: <alpha_end, alpha_other^vee> = -1.
      return {at(end, other) == -1 ? Family::B : Family::C, n};
    }
    if (n == 4) return {Family::F, 4};
    throw Error(ErrorKind::InvalidArgument, "not a finite-type Dynkin diagram");
  }
  if (branch < 0) return {Family::A, n};

  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    int prev = branch, cur = start, len = 1;
    while (degree(cur) == 2) {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const int next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw Error(ErrorKind::InvalidArgument, "not a finite-type Dynkin diagram");
}

Integer parabolic_order(const RootSystem& rs, const std::vector<int>& nodes) {
  Integer order = 1;
  const auto& cartan = rs.cartan_matrix();
  for (const auto& comp : dynkin_components(cartan, nodes)) {
    IntMatrix sub(comp.size(), IntVec(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b)
        sub[a][b] = cartan[static_cast<std::size_t>(comp[a])][static_cast<std::size_t>(comp[b])];
    order *= weyl_group_order(classify_cartan(sub));
  }
  return order;
}

}  // namespace isob
