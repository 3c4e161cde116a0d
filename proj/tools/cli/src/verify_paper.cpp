#include "isob_cli/verify_paper.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "isob/charclass.hpp"
#include "isob/classify.hpp"
#include "isob/errors.hpp"
#include "isob/obstruction.hpp"
#include "isob/repthy.hpp"

namespace isob::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

int parse_small_int(const std::string& s, std::string_view whole) {
  if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "cannot parse pair selection '" + std::string(whole) + "'");
  return std::stoi(s);
}

const Evidence* find_evidence(const ObstructionReport& r, EvidenceKind kind, const Integer& value) {
  for (const auto& c : r.candidates)
    if (c.evidence && c.evidence->kind == kind && c.evidence->value == value) return &*c.evidence;
  return nullptr;
}

bool all_eliminated(const ObstructionReport& r) {
  if (r.candidates.empty()) return false;
  for (const auto& c : r.candidates)
    if (!c.eliminated()) return false;
  return true;
}

std::string evidence_summary(const ObstructionReport& r) {
  std::string out;
  for (const auto& c : r.candidates) {
    if (!c.evidence) continue;
    if (!out.empty()) out += "; ";
    out += to_string(c.evidence->kind) + " " + to_string(c.evidence->value) + " vs " + to_string(c.evidence->dim_p);
  }
  return out;
}

VerifyItem guarded(std::string group, std::string item, const std::function<VerifyItem()>& body) {
  try {
    VerifyItem v = body();
    v.group = std::move(group);
    v.item = std::move(item);
    return v;
  } catch (const std::exception& e) {
    return {std::move(group), std::move(item), false, std::string("error: ") + e.what()};
  }
}

// Rows of the complex table, instantiated at the sampled ranks.
struct TableRow {
  SimpleType type;
  Integer dim;
  Integer d;
};

std::vector<TableRow> table_rows() {
  std::vector<TableRow> rows;
  for (int n = 2; n <= 8; ++n) rows.push_back({{Family::A, n - 1}, n * n - 1, n});
  for (int n = 2; n <= 5; ++n) rows.push_back({{Family::C, n}, n * (2 * n + 1), 2 * n});
  for (int n = 7; n <= 10; ++n)
    rows.push_back({{n % 2 ? Family::B : Family::D, n / 2}, n * (n - 1) / 2, n});
  rows.push_back({{Family::G, 2}, 14, 7});
  rows.push_back({{Family::F, 4}, 52, 26});
  rows.push_back({{Family::E, 6}, 78, 27});
  rows.push_back({{Family::E, 7}, 133, 56});
  rows.push_back({{Family::E, 8}, 248, 248});
  return rows;
}

// Dominant weights with weyl_dim <= bound; the dimension grows with every
// label, so a walk that raises one label at a time reaches all of them.
std::vector<IntVec> dominant_up_to(const RootSystem& rs, const Integer& bound) {
  std::set<IntVec> seen{IntVec(static_cast<std::size_t>(rs.rank()), 0)};
  std::vector<IntVec> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    IntVec cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      IntVec next = cur;
      ++next[i];
      if (seen.count(next)) continue;
      if (weyl_dim(rs, Weight::from_ints(Basis::Fundamental, next)) > bound) continue;
      seen.insert(next);
      todo.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<PairId> parse_pair_selection(std::string_view text) {
  std::vector<PairId> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string part = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                       : comma - start));
    if (part.empty()) throw Error(ErrorKind::InvalidArgument, "empty pair in selection '" + std::string(text) + "'");
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_pair_id(part));
    } else {
      const auto colon = part.find(':');
      if (colon == std::string::npos || colon > dots)
        throw Error(ErrorKind::InvalidArgument, "cannot parse pair range '" + part + "'");
      const int lo = parse_small_int(part.substr(colon + 1, dots - colon - 1), text);
      const int hi = parse_small_int(part.substr(dots + 2), text);
      if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty pair range '" + part + "'");
      for (int n = lo; n <= hi; ++n) out.push_back(parse_pair_id(part.substr(0, colon + 1) + std::to_string(n)));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<PairId> default_pair_batch() {
  std::vector<PairId> out;
  for (int n = 2; n <= 9; ++n) out.push_back({PairKind::SL_SO, n, {}});
  for (int n = 2; n <= 5; ++n) out.push_back({PairKind::SL_SP, n, {}});
  for (int n = 2; n <= 9; ++n) out.push_back({PairKind::SO_SO, n, {}});
  out.push_back({PairKind::E6_F4, 0, {}});
  return out;
}

std::vector<VerifyItem> verify_table() {
  std::vector<VerifyItem> out;
  for (const auto& row : table_rows()) {
    out.push_back(guarded("table", row.type.algebra_name(), [&] {
      const RootSystem rs = build_root_system(row.type);
      const Integer dim = algebra_dim(rs);
      const Integer d = smallest_nontrivial_dim(rs).dim;
      const bool ok = dim == row.dim && d == row.d;
      return VerifyItem{{}, {}, ok, "dim " + to_string(dim) + " (table " + to_string(row.dim) + "), d " + to_string(d) +
                                        " (table " + to_string(row.d) + ")"};
    }));
  }
  // so_5 and so_6 fit the so_n formula for dim, but their spin representations
  // (dim 4) are smaller than the vector representation.
  for (int n : {5, 6}) {
    const SimpleType t{n == 5 ? Family::B : Family::D, n == 5 ? 2 : 3};
    out.push_back(guarded("table", t.algebra_name(), [&] {
      const RootSystem rs = build_root_system(t);
      const Integer dim = algebra_dim(rs);
      const Integer d = smallest_nontrivial_dim(rs).dim;
      const bool ok = dim == n * (n - 1) / 2 && d == 4;
      return VerifyItem{{}, {}, ok,
                        "dim " + to_string(dim) + ", d " + to_string(d) + "; note: the so_n row gives d = " +
                            std::to_string(n) + ", the spin representation is smaller"};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_pairs(const std::vector<PairId>& pairs, const Limits& limits) {
  std::vector<VerifyItem> out;
  for (const auto& id : pairs) {
    out.push_back(guarded("pairs", to_string(id), [&] {
      const SymmetricPair pair = make_pair(id);
      const ObstructionReport r = check_extension(pair, limits);
      bool ok = r.verdict == Verdict::NoExtension && all_eliminated(r);
      std::string detail = to_string(r.verdict) + " by " + to_string(r.method) + ": " + evidence_summary(r);
      const int n = id.n;
      switch (id.kind) {
        case PairKind::SL_SO: {
          ok = ok && pair.dim_p == (n - 1) * (n + 2) / 2;
          ok = ok && find_evidence(r, EvidenceKind::Exact, n * (n + 1) / 2);
          if (n % 2) ok = ok && find_evidence(r, EvidenceKind::LowerBound, n * (n - 1) + n * (n - 1) * (n - 2) / 2);
          break;
        }
        case PairKind::SL_SP: {
          ok = ok && pair.dim_p == (n - 1) * (2 * n + 1);
          ok = ok && find_evidence(r, EvidenceKind::Exact, n * (2 * n - 1));
          const Integer stated = 2 * n * (2 * n - 1);
          detail += "; note: dim of the L1 + L2 representation is n(2n-1) = " + std::to_string(n * (2 * n - 1)) +
                    ", the stated 2n(2n-1) = " + to_string(stated) +
                    (stated == pair.dim_p ? " equals dim p" : " also differs from dim p");
          ok = ok && stated != pair.dim_p;
          break;
        }
        case PairKind::SO_SO:
          ok = ok && pair.dim_p == n;
          break;
        case PairKind::E6_F4:
          ok = ok && pair.dim_p == 26 && find_evidence(r, EvidenceKind::LowerBound, 27);
          break;
        case PairKind::Complex:
          break;
      }
      return VerifyItem{{}, {}, ok, detail};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_complex_rows() {
  std::vector<VerifyItem> out;
  for (const auto& row : table_rows()) {
    out.push_back(guarded("complex", "complex:" + row.type.name(), [&] {
      const ObstructionReport r = check_complex_case(row.type);
      const Integer square = row.d * row.d;
      const bool ok = r.verdict == Verdict::NoExtension && r.dim_p == row.dim &&
                      find_evidence(r, EvidenceKind::LowerBound, square) && square > row.dim;
      return VerifyItem{{}, {}, ok, to_string(square) + " > " + to_string(row.dim)};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_oracles(const Limits& limits) {
  std::vector<VerifyItem> out;
  const std::vector<SimpleType> types{{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::G, 2}};
  for (const auto& t : types) {
    out.push_back(guarded("oracles", t.name(), [&] {
      const RootSystem rs = build_root_system(t);
      std::size_t reps = 0, weights = 0;
      for (const auto& labels : dominant_up_to(rs, 500)) {
        const HighestWeightRep rep(rs, Weight::from_ints(Basis::Fundamental, labels));
        const auto mults = freudenthal_multiplicities(rep, limits.freudenthal_cap);
        if (Integer(static_cast<unsigned long>(mults.total())) != weyl_dim(rep))
          return VerifyItem{{}, {}, false, "Freudenthal total differs from weyl_dim at " + to_string(rep.highest_weight())};
        for (const auto& [w, m] : mults) {
          if (orbit_size(rs, w) != Integer(static_cast<unsigned long>(weyl_orbit(rs, w, limits.orbit_cap).size())))
            return VerifyItem{{}, {}, false, "orbit size mismatch at " + to_string(w)};
          ++weights;
        }
        ++reps;
      }
      return VerifyItem{{}, {}, true, std::to_string(reps) + " representations, " + std::to_string(weights) + " weights"};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_isotropy() {
  std::vector<PairId> ids;
  for (int n = 2; n <= 6; ++n) ids.push_back({PairKind::SL_SO, n, {}});
  for (int n = 2; n <= 6; ++n) ids.push_back({PairKind::SL_SP, n, {}});
  for (int r = 1; r <= 3; ++r) ids.push_back({PairKind::Complex, 0, {Family::A, r}});
  ids.push_back({PairKind::Complex, 0, {Family::G, 2}});
  std::vector<VerifyItem> out;
  for (const auto& id : ids) {
    out.push_back(guarded("isotropy", to_string(id), [&] {
      const SymmetricPair pair = make_pair(id);
      const WeightMultiset ws = isotropy_weights(pair);
      bool ok = ws.is_negation_closed() && ws.weighted_sum().is_zero() &&
                Integer(static_cast<unsigned long>(ws.total())) == pair.dim_p;
      if (id.kind == PairKind::Complex)
        ok = ok && ws == freudenthal_multiplicities(HighestWeightRep(pair.g, pair.g.highest_root()));
      return VerifyItem{{}, {}, ok, std::to_string(ws.total()) + " weights, dim p " + to_string(pair.dim_p)};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_chern() {
  std::vector<VerifyItem> out;
  out.push_back(guarded("chern", "random multisets", [] {
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> coord(-5, 5), count(1, 8), gens(1, 3), coin(0, 1);
    int closed = 0, equal = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const auto m = static_cast<std::size_t>(gens(rng));
      auto random_weight = [&] {
        Weight w = Weight::zero(Basis::Ambient, m);
        for (auto& c : w.coords) c = coord(rng);
        return w;
      };
      WeightMultiset a, b;
      if (coin(rng)) {
        const int half = (count(rng) + 1) / 2;
        for (int i = 0; i < half; ++i) {
          const Weight w = random_weight();
          a.add(w);
          a.add(-w);
        }
        if (!complexification_vanishing(a)) return VerifyItem{{}, {}, false, "odd pieces survive at trial " + std::to_string(trial)};
        ++closed;
      } else {
        for (int i = 0, n = count(rng); i < n; ++i) a.add(random_weight());
      }
      // b is a permutation of a's list half the time, otherwise a perturbation.
      for (const auto& [w, mult] : a) b.add(w, mult);
      if (coin(rng)) {
        const Weight first = b.begin()->first;
        WeightMultiset c;
        for (const auto& [w, mult] : b) c.add(w == first ? w + random_weight() : w, mult);
        b = c;
      }
      const bool same = reps_equal_by_chern(a, b);
      if (same != (a == b)) return VerifyItem{{}, {}, false, "biconditional fails at trial " + std::to_string(trial)};
      equal += same;
    }
    return VerifyItem{{}, {}, true,
                      "1000 trials, " + std::to_string(closed) + " negation-closed, " + std::to_string(equal) + " equal pairs"};
  }));
  for (int n = 1; n <= 8; ++n) {
    out.push_back(guarded("chern", "flat kernel n=" + std::to_string(n), [n] {
      const auto k = flat_kernel(n);
      bool ok = static_cast<int>(k.kernel_generators.size()) == n / 2;
      for (int i = 0; ok && i < n / 2; ++i)
        ok = k.kernel_generators[static_cast<std::size_t>(i)] == CharacteristicClass{"p_" + std::to_string(i + 1), 4 * (i + 1)};
      if (n % 2 == 0)
        ok = ok && k.euler == CharacteristicClass{"e", n} && k.euler_square == CharacteristicClass{"e^2", 2 * n};
      else
        ok = ok && !k.euler && !k.euler_square;
      std::string gens;
      for (const auto& g : k.kernel_generators) gens += (gens.empty() ? "" : ", ") + g.name;
      return VerifyItem{{}, {}, ok, "{" + gens + "}" + (k.euler ? ", e not in kernel, e^2 = p_" + std::to_string(n / 2) : "")};
    }));
  }
  return out;
}

std::vector<VerifyItem> verify_bounds() {
  std::vector<VerifyItem> out;
  out.push_back(guarded("bounds", "milnor-wood k=1", [] {
    bool ok = true;
    for (int g = 2; g <= 6; ++g) ok = ok && milnor_wood_bound({1, Integer(2 - 2 * g)}) == Rational(g - 1);
    return VerifyItem{{}, {}, ok, "|2-2g| / 2 = g-1 for g = 2..6"};
  }));
  out.push_back(guarded("bounds", "smillie k=1", [] {
    const double r = smillie_ratio(1, std::numbers::pi);
    return VerifyItem{{}, {}, std::abs(r - 0.5) <= 1e-12, "ratio " + std::to_string(r)};
  }));
  out.push_back(guarded("bounds", "smillie k=2", [] {
    const double r = smillie_ratio(2, 0.2689);
    return VerifyItem{{}, {}, r > 1.0, "ratio " + std::to_string(r) + " with v_4 = 0.2689"};
  }));
  return out;
}

std::vector<VerifyItem> verify_classify_sample() {
  struct Row {
    std::vector<std::string> groups;
    GroupType type;
  };
  const std::vector<Row> rows{
      {{"SU(1,2)", "SU(2,1)", "SU(3,2)"}, GroupType::Type1},
      {{"SP(4,R)", "SP(6,R)", "SP(8,R)"}, GroupType::Type1},
      {{"SO(2,3)", "SO(3,2)", "SO(4,4)"}, GroupType::Type1},
      {{"SP(1,1)", "SP(1,2)", "SP(2,3)"}, GroupType::Type1},
      {{"SO*(6)", "SO*(8)", "SO*(10)"}, GroupType::Type1},
      {{"G2(2)"}, GroupType::Type1},
      {{"F4(4)"}, GroupType::Type1},
      {{"F4(-20)"}, GroupType::Type1},
      {{"E6(6)"}, GroupType::Type1},
      {{"E6(2)"}, GroupType::Type1},
      {{"E6(-14)"}, GroupType::Type1},
      {{"E7(7)"}, GroupType::Type1},
      {{"E7(-5)"}, GroupType::Type1},
      {{"E7(-25)"}, GroupType::Type1},
      {{"E8(8)"}, GroupType::Type1},
      {{"SL(2,R)", "SL(3,R)", "SL(4,R)"}, GroupType::Type2},
      {{"SO(2,1)", "SO(3,1)", "SO(5,1)"}, GroupType::Type2},
      {{"SU*(4)", "SU*(6)", "SU*(8)"}, GroupType::Type2},
      {{"E6(-26)"}, GroupType::Type2},
      {{"SL(2,C)", "SL(3,C)", "SL(4,C)"}, GroupType::Type2},
      {{"SO(2,C)", "SO(3,C)", "SO(5,C)"}, GroupType::Type2},
      {{"SP(4,C)", "SP(6,C)", "SP(8,C)"}, GroupType::Type2},
      {{"G2(C)"}, GroupType::Type2},
      {{"F4(C)"}, GroupType::Type2},
      {{"E6(C)"}, GroupType::Type2},
      {{"E7(C)"}, GroupType::Type2},
      {{"E8(C)"}, GroupType::Type2},
  };
  std::vector<VerifyItem> out;
  for (const auto& row : rows)
    for (const auto& name : row.groups)
      out.push_back(guarded("classify", name, [&] {
        const GroupDescriptor g = parse_group(name);
        const bool round_trip = parse_group(to_string(g)) == g && to_string(g) == name;
        const GroupType t = lookup_type(g);
        return VerifyItem{{}, {}, round_trip && t == row.type, to_string(t)};
      }));
  out.push_back(guarded("classify", "SL(3,R) x SU(2,1)", [] {
    const GroupType t = product_type({parse_group("SL(3,R)"), parse_group("SU(2,1)")});
    return VerifyItem{{}, {}, t == GroupType::Type1, to_string(t)};
  }));
  return out;
}

std::vector<VerifyItem> verify_all(const Limits& limits) {
  std::vector<VerifyItem> out;
  auto append = [&](std::vector<VerifyItem> part) { out.insert(out.end(), part.begin(), part.end()); };
  append(verify_table());
  append(verify_pairs(default_pair_batch(), limits));
  append(verify_complex_rows());
  append(verify_oracles(limits));
  append(verify_isotropy());
  append(verify_chern());
  append(verify_bounds());
  append(verify_classify_sample());
  return out;
}

}  // namespace isob::cli
