#include "isob/obstruction.hpp"

#include <algorithm>
#include <map>

#include "isob/errors.hpp"
#include "isob/linalg.hpp"
#include "isob/repthy.hpp"

namespace isob {

std::string to_string(Verdict v) {
  return v == Verdict::NoExtension ? "NO_EXTENSION" : "INCONCLUSIVE";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::DimensionGap: return "DIMENSION_GAP";
    case Method::CandidateElimination: return "CANDIDATE_ELIMINATION";
    case Method::ComplexDSquared: return "COMPLEX_D_SQUARED";
  }
  return "?";
}

std::string to_string(EvidenceKind k) {
  switch (k) {
    case EvidenceKind::Exact: return "exact";
    case EvidenceKind::LowerBound: return "lower_bound";
    case EvidenceKind::RestrictedWeights: return "restricted_weights";
  }
  return "?";
}

bool Evidence::eliminates() const {
  switch (kind) {
    case EvidenceKind::Exact: return value != dim_p;
    case EvidenceKind::LowerBound: return value > dim_p;
    case EvidenceKind::RestrictedWeights: return value == 0;
  }
  return false;
}

namespace {

// Affine form in the kernel parameters: f[0] + sum_j f[j] a_j.
using Form = RationalVector;

bool is_zero(const Form& f) {
  return std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; });
}

bool is_constant(const Form& f) {
  return std::all_of(f.begin() + 1, f.end(), [](const Rational& x) { return x == 0; });
}

Form minus(Form a, const Form& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

std::string format_form(const Form& f) {
  std::string out;
  auto term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (name.empty()) out += to_string(mag);
    else out += (mag == 1 ? "" : to_string(mag)) + name;
  };
  for (std::size_t j = 1; j < f.size(); ++j) term(f[j], "a_" + std::to_string(j));
  term(f[0], "");
  return out.empty() ? "0" : out;
}

std::string format_equation(Form f) {
  for (std::size_t j = 1; j < f.size(); ++j) {
    if (f[j] == 0) continue;
    if (f[j] < 0)
      for (auto& x : f) x = -x;
    break;
  }
  return format_form(f) + " = 0";
}

struct KernelModel {
  IntVec lift;
  IntMatrix generators;  // each of ambient length
};

KernelModel kernel_model(const SymmetricPair& pair) {
  const int n = pair.id.n;
  KernelModel m;
  if (pair.id.kind == PairKind::SL_SO) {
    const int k = n / 2;
    m.lift.assign(static_cast<std::size_t>(n), 0);
    m.lift[0] = 2;
    for (int i = 0; i < k; ++i) {
      IntVec u(static_cast<std::size_t>(n), 0);
      u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(k + i)] = 1;
      m.generators.push_back(std::move(u));
    }
    if (n % 2) {
      IntVec u(static_cast<std::size_t>(n), 0);
      u.back() = 1;
      m.generators.push_back(std::move(u));
    }
  } else if (pair.id.kind == PairKind::SL_SP) {
    m.lift.assign(static_cast<std::size_t>(2 * n), 0);
    m.lift[0] = m.lift[1] = 1;
    for (int i = 0; i < n; ++i) {
      IntVec u(static_cast<std::size_t>(2 * n), 0);
      u[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(n + i)] = 1;
      m.generators.push_back(std::move(u));
    }
  } else {
    throw Error(ErrorKind::NoWeightModel, to_string(pair.id) + " has no candidate model");
  }
  // The model must match the restriction map of the pair.
  const Weight image = restrict(pair, Weight::from_ints(Basis::Ambient, m.lift));
  if (image != isotropy_highest_weight(pair))
    throw Error(ErrorKind::ConsistencyFault, "lift does not restrict to the isotropy highest weight");
  for (const auto& u : m.generators)
    if (!restrict(pair, Weight::from_ints(Basis::Ambient, u)).is_zero())
      throw Error(ErrorKind::ConsistencyFault, "kernel generator outside the kernel of r");
  return m;
}

// Substitution a_p = form in the free parameters, from the equations in RREF.
std::map<std::size_t, Form> solve(const std::vector<Form>& equations, std::size_t params, bool& feasible) {
  std::map<std::size_t, Form> subst;
  feasible = true;
  if (equations.empty()) return subst;
  RationalMatrix m;
  for (const auto& e : equations) {
    RationalVector row(e.begin() + 1, e.end());
    row.push_back(e[0]);
    m.push_back(std::move(row));
  }
  const auto pivots = reduce_row_echelon(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t col = pivots[r];
    if (col == params) {
      feasible = false;
      return subst;
    }
    Form value(params + 1, Rational(0));
    value[0] = -m[r][params];
    for (std::size_t j = 0; j < params; ++j)
      if (j != col) value[j + 1] = -m[r][j];
    subst.emplace(col + 1, std::move(value));
  }
  return subst;
}

Form substitute(const Form& f, const std::map<std::size_t, Form>& subst) {
  Form out = f;
  for (const auto& [var, value] : subst) {
    const Rational c = out[var];
    if (c == 0) continue;
    out[var] = 0;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * value[j];
  }
  return out;
}

Integer ceil_div(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer floor_div(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Weight vec_weight(const RationalVector& v) { return Weight(Basis::Ambient, v); }

}  // namespace

CandidateDerivation derive_candidates(const SymmetricPair& pair) {
  const KernelModel model = kernel_model(pair);
  const std::size_t N = model.lift.size();
  const std::size_t m = model.generators.size();
  CandidateDerivation out;
  auto& log = out.log;

  std::vector<Form> coords(N, Form(m + 1, Rational(0)));
  for (std::size_t p = 0; p < N; ++p) {
    coords[p][0] = static_cast<long>(model.lift[p]);
    for (std::size_t j = 0; j < m; ++j) coords[p][j + 1] = static_cast<long>(model.generators[j][p]);
  }
  {
    std::string lift = "lambda = " + to_string(Weight::from_ints(Basis::Ambient, model.lift));
    for (std::size_t j = 0; j < m; ++j)
      lift += " + a_" + std::to_string(j + 1) + " " + to_string(Weight::from_ints(Basis::Ambient, model.generators[j]));
    log.push_back(lift);
    std::string dom = "dominance: c_1 >= c_2 >= ... >= c_" + std::to_string(N) + " with c = (";
    for (std::size_t p = 0; p < N; ++p) dom += (p ? ", " : "") + format_form(coords[p]);
    log.push_back(dom + ")");
  }

  std::vector<Form> equations;
  std::map<std::size_t, Form> subst;
  std::vector<Form> cur = coords;
  bool feasible = true;
  while (feasible) {
    std::vector<Form> fresh;
    for (std::size_t p = 0; p < N && feasible; ++p)
      for (std::size_t q = p + 2; q < N && feasible; ++q) {
        if (!is_zero(minus(cur[p], cur[q]))) continue;
        for (std::size_t r = p + 1; r < q; ++r) {
          const Form diff = minus(cur[r], cur[p]);
          if (is_zero(diff)) continue;
          if (is_constant(diff)) {
            feasible = false;
            break;
          }
          if (std::find(fresh.begin(), fresh.end(), diff) == fresh.end()) {
            log.push_back("c_" + std::to_string(p + 1) + " = c_" + std::to_string(q + 1) + " forces c_" +
                          std::to_string(r + 1) + " = c_" + std::to_string(p + 1) + ": " + format_equation(diff));
            fresh.push_back(diff);
          }
        }
      }
    if (fresh.empty() || !feasible) break;
    equations.insert(equations.end(), fresh.begin(), fresh.end());
    subst = solve(equations, m, feasible);
    for (std::size_t p = 0; p < N; ++p) cur[p] = substitute(coords[p], subst);
  }
  for (std::size_t p = 0; p + 1 < N && feasible; ++p) {
    const Form gap = minus(cur[p], cur[p + 1]);
    if (is_constant(gap) && gap[0] < 0) feasible = false;
  }
  if (!feasible) {
    log.push_back("the dominance constraints have no solution");
    return out;
  }
  if (!subst.empty()) {
    std::string c = "after substitution c = (";
    for (std::size_t p = 0; p < N; ++p) c += (p ? ", " : "") + format_form(cur[p]);
    log.push_back(c + ")");
  }

  // Image modulo (1, ..., 1): subtract the last coordinate.
  RationalVector base(N);
  RationalMatrix dirs(m, RationalVector(N));
  for (std::size_t p = 0; p < N; ++p) {
    base[p] = cur[p][0] - cur[N - 1][0];
    for (std::size_t j = 0; j < m; ++j) dirs[j][p] = cur[p][j + 1] - cur[N - 1][j + 1];
  }
  RationalMatrix nonzero;
  for (const auto& d : dirs)
    if (std::any_of(d.begin(), d.end(), [](const Rational& x) { return x != 0; })) nonzero.push_back(d);
  const std::size_t dim = nonzero.empty() ? 0 : rank(nonzero);

  auto dominant = [&](const RationalVector& v) {
    for (std::size_t p = 0; p + 1 < N; ++p)
      if (v[p] < v[p + 1]) return false;
    return true;
  };

  if (dim == 0) {
    if (!dominant(base)) {
      log.push_back("the only point " + to_string(vec_weight(base)) + " is not dominant");
      return out;
    }
    log.push_back("image: the single weight " + to_string(vec_weight(base)));
    out.families.push_back({vec_weight(base), std::nullopt, log});
    return out;
  }
  if (dim > 1) {
    log.push_back("image has dimension " + std::to_string(dim) + "; not reduced to points and rays");
    out.complete = false;
    return out;
  }

  // Primitive lattice direction of the rank-1 image.
  RationalVector d = nonzero.front();
  {
    Integer den = 1, num = 0;
    for (const auto& x : d) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : d) {
      x *= den;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
    for (auto& x : d) x /= num;
  }
  const std::size_t pivot = static_cast<std::size_t>(
      std::find_if(d.begin(), d.end(), [](const Rational& x) { return x != 0; }) - d.begin());
  Integer gnum = 0, glcm = 1;
  for (const auto& w : nonzero) {
    const Rational mult = w[pivot] / d[pivot];
    mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), mult.get_num_mpz_t());
    mpz_lcm(glcm.get_mpz_t(), glcm.get_mpz_t(), mult.get_den_mpz_t());
  }
  const Rational step(gnum, glcm);
  for (auto& x : d) x *= step;

  std::optional<Integer> lo, hi;
  for (std::size_t p = 0; p + 1 < N; ++p) {
    const Rational alpha = base[p] - base[p + 1], beta = d[p] - d[p + 1];
    if (beta == 0) {
      if (alpha < 0) {
        log.push_back("the dominance constraints have no solution");
        return out;
      }
      continue;
    }
    const Rational t = -alpha / beta;
    if (beta > 0) {
      const Integer b = ceil_div(t);
      if (!lo || b > *lo) lo = b;
    } else {
      const Integer b = floor_div(t);
      if (!hi || b < *hi) hi = b;
    }
  }
  auto at = [&](const Integer& t) {
    RationalVector v(N);
    for (std::size_t p = 0; p < N; ++p) v[p] = base[p] + Rational(t) * d[p];
    return v;
  };
  if (lo && hi) {
    if (*hi < *lo) {
      log.push_back("the dominance constraints have no solution");
      return out;
    }
    if (*hi - *lo > 1000) {
      log.push_back("bounded image with too many points");
      out.complete = false;
      return out;
    }
    log.push_back("image: " + to_string(vec_weight(base)) + " + t " + to_string(vec_weight(d)) + " with " +
                  to_string(*lo) + " <= t <= " + to_string(*hi));
    for (Integer t = *lo; t <= *hi; ++t) out.families.push_back({vec_weight(at(t)), std::nullopt, log});
    return out;
  }
  if (!lo && !hi) {
    log.push_back("image is a full line of dominant weights");
    out.complete = false;
    return out;
  }
  Weight start = vec_weight(at(lo ? *lo : *hi));
  Weight direction = vec_weight(d);
  if (!lo) direction = -direction;
  log.push_back("image: " + to_string(start) + " + c " + to_string(direction) + " with c >= 0");
  out.families.push_back({start, direction, log});
  return out;
}

std::vector<CandidateFamily> candidate_weights(const SymmetricPair& pair) {
  auto d = derive_candidates(pair);
  if (!d.complete)
    throw Error(ErrorKind::ConsistencyFault, "candidate reduction did not close: " + d.log.back());
  return d.families;
}

std::set<Weight> brute_force_candidates(const SymmetricPair& pair, int bound) {
  const KernelModel model = kernel_model(pair);
  const std::size_t N = model.lift.size(), m = model.generators.size();
  std::set<Weight> out;
  IntVec a(m, -bound);
  while (true) {
    IntVec v = model.lift;
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t p = 0; p < N; ++p) v[p] += a[j] * model.generators[j][p];
    const auto last = v.back();
    bool dominant = true;
    for (std::size_t p = 0; p < N; ++p) {
      v[p] -= last;
      if (p && v[p] > v[p - 1]) dominant = false;
    }
    if (dominant) out.insert(Weight::from_ints(Basis::Ambient, v));
    std::size_t j = 0;
    while (j < m && a[j] == bound) a[j++] = -bound;
    if (j == m) break;
    ++a[j];
  }
  return out;
}

bool covered_by(const RootSystem& rs, const std::vector<CandidateFamily>& families, const Weight& w) {
  const Weight x = rs.to_ambient(w);
  for (const auto& f : families) {
    if (!f.direction) {
      if (x == f.base) return true;
      continue;
    }
    const Weight diff = x - f.base;
    std::optional<Rational> t;
    bool ok = true;
    for (std::size_t p = 0; p < diff.size() && ok; ++p) {
      const Rational& dp = f.direction->coords[p];
      if (dp == 0) {
        ok = diff.coords[p] == 0;
      } else {
        const Rational tp = diff.coords[p] / dp;
        if (t && *t != tp) ok = false;
        t = tp;
      }
    }
    if (ok && t && is_integer(*t) && *t >= 0) return true;
  }
  return false;
}

Integer orbit_sum_lower_bound(const RootSystem& rs, const Weight& lambda, const std::vector<Weight>& extras) {
  if (!is_dominant(rs, lambda))
    throw Error(ErrorKind::NotDominant, "weight " + to_string(lambda) + " is not dominant");
  std::set<Weight> orbits{to_dominant(rs, rs.to_fundamental(lambda))};
  for (const auto& e : extras) {
    const Weight dom = to_dominant(rs, rs.to_fundamental(e));
    if (!dominates(rs, lambda, dom))
      throw Error(ErrorKind::NotAWeightOf,
                  to_string(e) + " is not a weight of the representation with highest weight " + to_string(lambda));
    orbits.insert(dom);
  }
  Integer total = 0;
  for (const auto& o : orbits) total += orbit_size(rs, o);
  return total;
}

namespace {

std::string range_text(const Integer& lo) { return "c>=" + to_string(lo); }

// Orbit-sum bound for lambda(c) = base + c*dir, uniform in c >= 1.
CandidateRecord family_tail(const RootSystem& rs, const CandidateFamily& f, const Integer& dim_p) {
  CandidateRecord rec{f.base + *f.direction, f.direction, range_text(1), std::nullopt, {}};
  if (!rs.uses_quotient()) {
    rec.detail = "orbit-size pattern argument needs type A coordinates";
    return rec;
  }
  const auto& b = f.base.coords;
  const auto& d = f.direction->coords;
  const std::size_t N = b.size();
  // x_p(c) = x_q(c) has root c* = -(b_p - b_q)/(d_p - d_q); an integer root
  // c* >= 1 would change the pattern of equal coordinates.
  auto integer_root_at_least_one = [](const Rational& db, const Rational& dd, const Rational& target) {
    if (dd == 0) return false;
    const Rational c = (target - db) / dd;
    return is_integer(c) && c >= 1;
  };
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q)
      if (integer_root_at_least_one(b[p] - b[q], d[p] - d[q], 0)) {
        rec.detail = "equality pattern of coordinates changes at some c >= 1";
        return rec;
      }
  const Rational db12 = b[0] - b[1], dd12 = d[0] - d[1];
  if (dd12 < 0 || db12 + dd12 < 1) {
    rec.detail = "<lambda, alpha_1^vee> >= 1 fails for some c >= 1";
    return rec;
  }
  if ((dd12 == 0 && db12 == 1) || integer_root_at_least_one(db12, dd12, 1)) {
    rec.detail = "lambda and lambda - alpha_1 share an orbit for some c >= 1";
    return rec;
  }
  const Weight lambda = rec.weight;
  const Weight lowered = rs.canonical(lambda - rs.simple_roots()[0]);
  const Integer a = orbit_size(rs, lambda), a2 = orbit_size(rs, lowered);
  const Integer bound = orbit_sum_lower_bound(rs, lambda, {lowered});
  rec.evidence = Evidence{EvidenceKind::LowerBound, bound, dim_p};
  rec.detail = "|W.lambda| + |W.lambda'| = " + to_string(a) + " + " + to_string(a2) +
               " for every c >= 1, lambda' = lambda - alpha_1 = " + to_string(lowered) +
               " (coordinate pattern constant, <lambda, alpha_1^vee> >= 1, distinct orbits)";
  return rec;
}

CandidateRecord exact_record(const RootSystem& rs, const Weight& w, std::string range, const Integer& dim_p) {
  const Integer dim = weyl_dim(rs, w);
  return {w, std::nullopt, std::move(range), Evidence{EvidenceKind::Exact, dim, dim_p},
          "dim V_lambda = " + to_string(dim)};
}

void finish(ObstructionReport& r) {
  const bool all = std::all_of(r.candidates.begin(), r.candidates.end(),
                               [](const CandidateRecord& c) { return c.eliminated(); });
  if (!all) r.verdict = Verdict::Inconclusive;
}

ObstructionReport eliminate(const SymmetricPair& pair, const Limits& limits, bool audit) {
  ObstructionReport r{pair.id, Verdict::NoExtension, Method::CandidateElimination, pair.dim_p, {}, {}, pair.notes, 0};
  const CandidateDerivation deriv = derive_candidates(pair);
  r.constraints_log = deriv.log;
  if (!deriv.complete) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("candidate reduction did not close");
    return r;
  }
  for (const auto& f : deriv.families) {
    if (!f.direction) {
      r.candidates.push_back(exact_record(pair.g, f.base, "point", pair.dim_p));
      continue;
    }
    auto head = exact_record(pair.g, f.base, "c=0", pair.dim_p);
    head.direction = f.direction;
    r.candidates.push_back(std::move(head));
    r.candidates.push_back(family_tail(pair.g, f, pair.dim_p));
  }
  if (deriv.families.empty()) r.notes.push_back("no dominant weight of g restricts to the isotropy highest weight");
  if (audit) {
    const int bound = limits.kernel_search_bound;
    r.search_bound = bound;
    const auto points = brute_force_candidates(pair, bound);
    std::size_t missed = 0;
    for (const auto& w : points)
      if (!covered_by(pair.g, deriv.families, w)) {
        ++missed;
        r.notes.push_back("audit: dominant weight " + to_string(w) + " is not covered by the derived candidates");
      }
    r.notes.push_back("audit: " + std::to_string(points.size()) + " dominant weights with |a_j| <= " +
                      std::to_string(bound) + ", " + std::to_string(missed) + " uncovered");
    if (missed) r.verdict = Verdict::Inconclusive;
  }
  finish(r);
  return r;
}

ObstructionReport dimension_gap(const SymmetricPair& pair) {
  ObstructionReport r{pair.id, Verdict::NoExtension, Method::DimensionGap, pair.dim_p, {}, {}, pair.notes, 0};
  const auto small = smallest_nontrivial_dim(pair.g);
  r.candidates.push_back({small.witness, std::nullopt, "nontrivial",
                          Evidence{EvidenceKind::LowerBound, small.dim, pair.dim_p},
                          "every nontrivial representation of " + pair.g.label() + " has dimension >= " +
                              to_string(small.dim)});
  r.constraints_log.push_back("smallest nontrivial representation of " + pair.g.label() + ": dim " +
                              to_string(small.dim) + " at fundamental weight " + std::to_string(small.index + 1));
  if (pair.id.kind == PairKind::SO_SO && small.dim != pair.id.n + 1)
    r.notes.push_back("smallest nontrivial dimension of " + pair.g.label() + " is " + to_string(small.dim) +
                      ", not " + std::to_string(pair.id.n + 1));
  finish(r);
  return r;
}

}  // namespace

ObstructionReport check_complex_case(const SimpleType& type) {
  const RootSystem rs = build_root_system(type);
  const auto small = smallest_nontrivial_dim(rs);
  const Integer dim_g = algebra_dim(rs);
  ObstructionReport r{{PairKind::Complex, 0, type}, Verdict::NoExtension, Method::ComplexDSquared, dim_g, {}, {}, {}, 0};
  const Integer square = small.dim * small.dim;
  r.candidates.push_back({small.witness, std::nullopt, "V1, V2 nontrivial",
                          Evidence{EvidenceKind::LowerBound, square, dim_g},
                          "dim V1 * dim V2 >= d^2 = " + to_string(small.dim) + "^2"});
  const Weight nu = weyl_involution(rs, small.witness);
  r.constraints_log.push_back("d = " + to_string(small.dim) + " (fundamental weight " +
                              std::to_string(small.index + 1) + "), dim g = " + to_string(dim_g));
  r.constraints_log.push_back("nu(" + to_string(rs.to_fundamental(small.witness)) + ") = " +
                              to_string(rs.to_fundamental(nu)));
  r.notes.push_back("a real structure forces Lambda_2 = nu(Lambda_1), so V1 and V2 are both trivial or both nontrivial");
  r.notes.push_back("both trivial would make the restriction to k trivial, but p is the nontrivial adjoint representation");
  if (type.family == Family::B || type.family == Family::D) {
    const int vector_dim = type.family == Family::B ? 2 * type.rank + 1 : 2 * type.rank;
    if (small.dim < vector_dim)
      r.notes.push_back("smallest representation of " + type.algebra_name() + " is the spin representation (dim " +
                        to_string(small.dim) + "), smaller than the vector representation (dim " +
                        std::to_string(vector_dim) + ")");
  }
  finish(r);
  return r;
}

ObstructionReport check_extension(const SymmetricPair& pair, const Limits& limits, bool audit) {
  switch (pair.id.kind) {
    case PairKind::SL_SO:
    case PairKind::SL_SP: return eliminate(pair, limits, audit);
    case PairKind::E6_F4: return dimension_gap(pair);
    case PairKind::SO_SO: {
      auto r = dimension_gap(pair);
      if (r.verdict == Verdict::NoExtension) return r;
      auto fallback = check_orthogonal_by_weights(pair, limits);
      fallback.notes.insert(fallback.notes.begin(),
                            "dimension gap fails: " + r.candidates.front().detail + ", dim p = " + to_string(pair.dim_p));
      return fallback;
    }
    case PairKind::Complex: {
      auto r = check_complex_case(pair.id.complex_type);
      r.pair = pair.id;
      return r;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown pair kind");
}

}  // namespace isob
