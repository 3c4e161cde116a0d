#include "isob/sympair.hpp"

#include <cctype>

#include "isob/errors.hpp"

namespace isob {

namespace {

std::string lower_no_space(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

int parse_parameter(const std::string& digits, std::string_view text) {
  if (digits.empty() || digits.size() > 6 ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "cannot parse pair '" + std::string(text) + "'");
  return std::stoi(digits);
}

Weight ambient_unit(int dim, int i, long value = 1) {
  Weight w = Weight::zero(Basis::Ambient, static_cast<std::size_t>(dim));
  w.coords[static_cast<std::size_t>(i)] = value;
  return w;
}

void require_model(const SymmetricPair& pair) {
  if (pair.id.kind == PairKind::SO_SO || pair.id.kind == PairKind::E6_F4)
    throw Error(ErrorKind::NoWeightModel,
                to_string(pair.id) + " is settled by dimension alone and has no weight model");
}

}  // namespace

PairId parse_pair_id(std::string_view text) {
  const std::string s = lower_no_space(text);
  if (s == "e6-f4") return {PairKind::E6_F4, 0, {}};
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "cannot parse pair '" + std::string(text) + "'");
  const std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
  if (head == "complex") {
    PairId id{PairKind::Complex, 0, parse_simple_type(tail)};
    return id;
  }
  PairKind kind;
  if (head == "sl-so") kind = PairKind::SL_SO;
  else if (head == "sl-sp") kind = PairKind::SL_SP;
  else if (head == "so-so") kind = PairKind::SO_SO;
  else throw Error(ErrorKind::InvalidArgument, "unknown pair family '" + head + "'");
  return {kind, parse_parameter(tail, text), {}};
}

std::string to_string(const PairId& id) {
  switch (id.kind) {
    case PairKind::SL_SO: return "sl-so:" + std::to_string(id.n);
    case PairKind::SL_SP: return "sl-sp:" + std::to_string(id.n);
    case PairKind::SO_SO: return "so-so:" + std::to_string(id.n);
    case PairKind::E6_F4: return "e6-f4";
    case PairKind::Complex: return "complex:" + id.complex_type.name();
  }
  return "?";
}

SymmetricPair make_pair(const PairId& id) {
  auto in_range = [&](int lo) {
    if (id.n < lo)
      throw Error(ErrorKind::IllegalParameter,
                  to_string(id) + ": parameter must be at least " + std::to_string(lo));
  };
  switch (id.kind) {
    case PairKind::SL_SO: {
      in_range(2);
      const int n = id.n, k = n / 2;
      SymmetricPair p{id, build_root_system({Family::A, n - 1}), build_orthogonal(n), {}, 0, {}, {}};
      RationalMatrix r(static_cast<std::size_t>(k), RationalVector(static_cast<std::size_t>(n), Rational(0)));
      for (int i = 0; i < k; ++i) {
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + i)] = -1;
      }
      p.restriction = std::move(r);
      p.isotropy_highest = ambient_unit(k, 0, 2);
      if (n % 2)
        p.notes.push_back("n odd: the isotropy weights also contain +-L'_i and the zero weight has multiplicity k = " +
                          std::to_string(k));
      if (n == 2) p.notes.push_back("so_2 is abelian; k = 1 and there are no L'_i - L'_j weights");
      p.dim_p = algebra_dim(p.g) - algebra_dim(p.k);
      return p;
    }
    case PairKind::SL_SP: {
      in_range(2);
      const int n = id.n;
      SymmetricPair p{id, build_root_system({Family::A, 2 * n - 1}), build_root_system({Family::C, n}), {}, 0, {}, {}};
      RationalMatrix r(static_cast<std::size_t>(n), RationalVector(static_cast<std::size_t>(2 * n), Rational(0)));
      for (int i = 0; i < n; ++i) {
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        r[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = -1;
      }
      p.restriction = std::move(r);
      p.isotropy_highest = ambient_unit(n, 0) + ambient_unit(n, 1);
      p.dim_p = algebra_dim(p.g) - algebra_dim(p.k);
      return p;
    }
    case PairKind::SO_SO: {
      in_range(2);
      SymmetricPair p{id, build_orthogonal(id.n + 1), build_orthogonal(id.n), {}, 0, {}, {}};
      p.dim_p = algebra_dim(p.g) - algebra_dim(p.k);
      return p;
    }
    case PairKind::E6_F4: {
      SymmetricPair p{id, build_root_system({Family::E, 6}), build_root_system({Family::F, 4}), {}, 0, {}, {}};
      p.dim_p = algebra_dim(p.g) - algebra_dim(p.k);
      return p;
    }
    case PairKind::Complex: {
      const RootSystem t = build_root_system(id.complex_type);
      SymmetricPair p{id, t, t, {}, algebra_dim(t), t.highest_root(), {}};
      const auto a = static_cast<std::size_t>(t.ambient_dim());
      RationalMatrix r(a, RationalVector(2 * a, Rational(0)));
      for (std::size_t i = 0; i < a; ++i) r[i][i] = r[i][a + i] = 1;
      p.restriction = std::move(r);
      p.notes.push_back("g is " + t.label() + " + " + t.label() +
                        " with k the diagonal; p is the adjoint representation of k");
      return p;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pair kind");
}

Weight restrict(const SymmetricPair& pair, const Weight& w) {
  if (!pair.restriction)
    throw Error(ErrorKind::NoRestrictionMap, to_string(pair.id) + " has no restriction map");
  Weight amb;
  if (pair.id.kind == PairKind::Complex) {
    const auto a = static_cast<std::size_t>(pair.g.ambient_dim());
    if (w.basis != Basis::Ambient || w.size() != 2 * a)
      throw Error(ErrorKind::BasisMismatch, "a weight of g + g needs " + std::to_string(2 * a) +
                                                " ambient coordinates");
    amb = w;
  } else {
    amb = pair.g.to_ambient(w);
  }
  return pair.k.canonical(Weight(Basis::Ambient, times_column(*pair.restriction, amb.coords)));
}

WeightMultiset isotropy_weights(const SymmetricPair& pair) {
  require_model(pair);
  WeightMultiset out;
  if (pair.id.kind == PairKind::Complex) {
    const RootSystem& t = pair.k;
    for (const auto& a : t.positive_roots()) {
      out.add(a);
      out.add(-a);
    }
    out.add(Weight::zero(Basis::Ambient, static_cast<std::size_t>(t.ambient_dim())),
            static_cast<std::uint64_t>(t.rank()));
    return out;
  }
  const bool orthogonal = pair.id.kind == PairKind::SL_SO;
  const int n = pair.id.n;
  const int k = orthogonal ? n / 2 : n;
  auto e = [&](int i) { return ambient_unit(k, i); };
  for (int i = 0; i < k; ++i) {
    if (orthogonal) {
      out.add(2 * e(i));
      out.add(-2 * e(i));
      if (n % 2) {
        out.add(e(i));
        out.add(-e(i));
      }
    }
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      out.add(e(i) - e(j));
      if (i < j) {
        out.add(e(i) + e(j));
        out.add(-e(i) - e(j));
      }
    }
  }
  const int zeros = orthogonal ? (n % 2 ? k : k - 1) : n - 1;
  out.add(Weight::zero(Basis::Ambient, static_cast<std::size_t>(k)), static_cast<std::uint64_t>(zeros));
  return out;
}

Weight isotropy_highest_weight(const SymmetricPair& pair) {
  require_model(pair);
  return *pair.isotropy_highest;
}

}  // namespace isob
