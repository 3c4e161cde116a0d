#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "isob/errors.hpp"
#include "isob/obstruction.hpp"
#include "isob/repthy.hpp"

namespace isob {

namespace {

struct Irrep {
  IntVec labels;
  Integer dim;
  WeightMultiset restricted;
};

// Dominant weights of rs with dim V_lambda <= bound. Adding a fundamental
// weight strictly raises the dimension, so the search terminates.
std::vector<IntVec> small_dominant(const RootSystem& rs, const Integer& bound) {
  const auto r = static_cast<std::size_t>(rs.rank());
  std::set<IntVec> seen{IntVec(r, 0)};
  std::deque<IntVec> queue{IntVec(r, 0)};
  while (!queue.empty()) {
    const IntVec a = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      IntVec b = a;
      ++b[i];
      if (seen.count(b)) continue;
      if (weyl_dim(rs, Weight::from_ints(Basis::Fundamental, b)) > bound) continue;
      seen.insert(b);
      queue.push_back(std::move(b));
    }
  }
  return {seen.begin(), seen.end()};
}

// so_{2m+1} -> so_{2m}: identity on R^m. so_{2m+2} -> so_{2m+1}: drop the
// last coordinate.
Weight restrict_orthogonal(const RootSystem& k, const Weight& w) {
  Weight out = w;
  out.coords.resize(static_cast<std::size_t>(k.ambient_dim()));
  return out;
}

}  // namespace

ObstructionReport check_orthogonal_by_weights(const SymmetricPair& pair, const Limits& limits) {
  if (pair.id.kind != PairKind::SO_SO)
    throw Error(ErrorKind::InvalidArgument, "restricted-weight search is only defined for so-so pairs");
  const int n = pair.id.n;
  const RootSystem& g = pair.g;
  const RootSystem& k = pair.k;
  ObstructionReport r{pair.id, Verdict::NoExtension, Method::CandidateElimination, pair.dim_p, {}, {}, pair.notes, 0};

  WeightMultiset target;
  for (int i = 0; i < k.ambient_dim(); ++i) {
    Weight e = Weight::zero(Basis::Ambient, static_cast<std::size_t>(k.ambient_dim()));
    e.coords[static_cast<std::size_t>(i)] = 1;
    target.add(e);
    target.add(-e);
  }
  if (n % 2) target.add(Weight::zero(Basis::Ambient, static_cast<std::size_t>(k.ambient_dim())));
  r.constraints_log.push_back("weights of p as a k-module: " + to_string(target));

  std::vector<Irrep> irreps;
  for (const auto& labels : small_dominant(g, pair.dim_p)) {
    const Weight lambda = g.to_ambient(Weight::from_ints(Basis::Fundamental, labels));
    Irrep ir{labels, weyl_dim(g, lambda), {}};
    for (const auto& [w, mult] : freudenthal_multiplicities(HighestWeightRep(g, lambda), limits.freudenthal_cap))
      ir.restricted.add(restrict_orthogonal(k, w), mult);
    r.constraints_log.push_back("irreducible " + to_string(lambda) + " of dim " + to_string(ir.dim) +
                                " restricts to " + to_string(ir.restricted));
    irreps.push_back(std::move(ir));
  }

  // Sums of irreducibles (with repetition) of total dimension dim p.
  std::vector<std::size_t> counts(irreps.size(), 0);
  std::vector<std::vector<std::size_t>> matches;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, Integer)> search = [&](std::size_t from, Integer room) {
    if (room == 0) {
      WeightMultiset sum;
      for (auto i : chosen) sum.add(irreps[i].restricted);
      if (sum == target) matches.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < irreps.size(); ++i) {
      if (irreps[i].dim > room) continue;
      chosen.push_back(i);
      search(i, room - irreps[i].dim);
      chosen.pop_back();
    }
  };
  search(0, pair.dim_p);
  for (const auto& m : matches) {
    std::set<std::size_t> distinct(m.begin(), m.end());
    for (auto i : distinct) ++counts[i];
    std::string text = "surviving sum:";
    for (auto i : m) text += " " + to_string(g.to_ambient(Weight::from_ints(Basis::Fundamental, irreps[i].labels)));
    r.constraints_log.push_back(text);
  }

  for (std::size_t i = 0; i < irreps.size(); ++i) {
    const Weight lambda = g.to_ambient(Weight::from_ints(Basis::Fundamental, irreps[i].labels));
    r.candidates.push_back({lambda, std::nullopt, "dim " + to_string(irreps[i].dim),
                            Evidence{EvidenceKind::RestrictedWeights, Integer(static_cast<unsigned long>(counts[i])),
                                     pair.dim_p},
                            "sums of dimension dim p containing it whose restriction matches p"});
  }

  if (matches.empty()) {
    r.notes.push_back("no sum of irreducibles of " + g.label() + " of dimension " + to_string(pair.dim_p) +
                      " restricts to the weights of p");
    return r;
  }
  if (n == 3) {
    // so(3,1) is sl(2,C) as a real Lie algebra with maximal compact so(3):
    // the pair is the complex case of type A1.
    ObstructionReport c = check_complex_case({Family::A, 1});
    c.pair = pair.id;
    c.constraints_log.insert(c.constraints_log.begin(), r.constraints_log.begin(), r.constraints_log.end());
    c.notes.insert(c.notes.begin(), r.notes.begin(), r.notes.end());
    c.notes.push_back("the complexified search leaves candidates; so(3,1) is isomorphic to sl(2,C) as a real "
                      "Lie algebra, so the pair is the complex case of type A1");
    return c;
  }
  r.verdict = Verdict::Inconclusive;
  r.notes.push_back(std::to_string(matches.size()) + " sums of irreducibles restrict to the weights of p");
  return r;
}

}  // namespace isob
