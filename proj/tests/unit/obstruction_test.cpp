#include <gtest/gtest.h>

#include "isob/errors.hpp"
#include "isob/obstruction.hpp"
#include "isob/repthy.hpp"
#include "oracles.hpp"

using namespace isob;

namespace {

SymmetricPair pair(const std::string& spec) { return make_pair(parse_pair_id(spec)); }

std::vector<long> ints(const Weight& w) {
  std::vector<long> out;
  for (const auto& c : w.coords) out.push_back(c.get_num().get_si());
  return out;
}

std::vector<int> shape(const Weight& w) {
  std::vector<int> out;
  for (long c : ints(w))
    if (c) out.push_back(static_cast<int>(c));
  return out;
}

}  // namespace

TEST(Obstruction, CandidateFamilies) {
  const auto even = candidate_weights(pair("sl-so:4"));
  ASSERT_EQ(even.size(), 1u);
  EXPECT_EQ(even[0].base, Weight::ambient({2, 0, 0, 0}));
  EXPECT_FALSE(even[0].direction);

  const auto odd = candidate_weights(pair("sl-so:5"));
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].base, Weight::ambient({2, 0, 0, 0, 0}));
  ASSERT_TRUE(odd[0].direction);
  EXPECT_EQ(*odd[0].direction, Weight::ambient({1, 1, 1, 1, 0}));

  const auto sp3 = candidate_weights(pair("sl-sp:3"));
  ASSERT_EQ(sp3.size(), 1u);
  EXPECT_EQ(sp3[0].base, Weight::ambient({1, 1, 0, 0, 0, 0}));

  try {
    candidate_weights(pair("so-so:4"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoWeightModel);
  }
}

TEST(Obstruction, CandidatesRestrictToIsotropyHighestWeight) {
  for (const std::string s : {"sl-so:3", "sl-so:6", "sl-so:7", "sl-sp:2", "sl-sp:4"}) {
    const auto p = pair(s);
    for (const auto& f : candidate_weights(p))
      for (int c = 0; c <= (f.direction ? 4 : 0); ++c) {
        Weight w = f.base;
        if (f.direction) w += Rational(c) * *f.direction;
        EXPECT_TRUE(is_dominant(p.g, w)) << s;
        EXPECT_EQ(restrict(p, w), isotropy_highest_weight(p)) << s << ' ' << to_string(w);
      }
  }
}

TEST(Obstruction, BruteForceAuditIsCovered) {
  for (const std::string s : {"sl-so:2", "sl-so:3", "sl-so:4", "sl-so:5", "sl-so:6", "sl-sp:2", "sl-sp:3"}) {
    const auto p = pair(s);
    const auto fams = candidate_weights(p);
    const auto points = brute_force_candidates(p, 4);
    EXPECT_FALSE(points.empty()) << s;
    for (const auto& w : points) {
      EXPECT_TRUE(covered_by(p.g, fams, w)) << s << ' ' << to_string(w);
      EXPECT_EQ(restrict(p, w), isotropy_highest_weight(p));
    }
  }
}

TEST(Obstruction, OrbitSumLowerBound) {
  const auto a4 = build_root_system({Family::A, 4});
  EXPECT_EQ(orbit_sum_lower_bound(a4, Weight::ambient({3, 1, 1, 1, 0}), {Weight::ambient({2, 2, 1, 1, 0})}), 50);
  EXPECT_EQ(orbit_sum_lower_bound(a4, Weight::ambient({2, 0, 0, 0, 0}), {}), 5);
  EXPECT_EQ(orbit_sum_lower_bound(a4, Weight::ambient({0, 0, 0, 0, 0}), {}), 1);
  // an extra in the same orbit counts once
  EXPECT_EQ(orbit_sum_lower_bound(a4, Weight::ambient({2, 0, 0, 0, 0}), {Weight::ambient({0, 2, 0, 0, 0})}), 5);
  try {
    orbit_sum_lower_bound(a4, Weight::ambient({2, 0, 0, 0, 0}), {Weight::ambient({3, 0, 0, 0, -1})});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAWeightOf);
  }
  EXPECT_THROW(orbit_sum_lower_bound(a4, Weight::ambient({0, 2, 0, 0, 0}), {}), Error);
}

TEST(Obstruction, SlSoVerdictsAndCertificates) {
  for (int n = 2; n <= 9; ++n) {
    const auto r = check_extension(make_pair({PairKind::SL_SO, n, {}}));
    EXPECT_EQ(r.verdict, Verdict::NoExtension) << n;
    EXPECT_EQ(r.method, Method::CandidateElimination);
    const Integer dim_p = (n - 1) * (n + 2) / 2;
    EXPECT_EQ(r.dim_p, dim_p);
    ASSERT_FALSE(r.candidates.empty());
    const auto& head = r.candidates.front();
    ASSERT_TRUE(head.evidence);
    EXPECT_EQ(head.evidence->kind, EvidenceKind::Exact);
    EXPECT_EQ(head.evidence->value, n * (n + 1) / 2);
    if (n % 2) {
      ASSERT_EQ(r.candidates.size(), 2u) << n;
      const auto& tail = r.candidates[1];
      EXPECT_EQ(tail.parameter_range, "c>=1");
      EXPECT_EQ(tail.evidence->kind, EvidenceKind::LowerBound);
      EXPECT_EQ(tail.evidence->value, n * (n - 1) + n * (n - 1) * (n - 2) / 2) << n;
      EXPECT_GT(tail.evidence->value, dim_p);
    } else {
      EXPECT_EQ(r.candidates.size(), 1u);
    }
  }
}

TEST(Obstruction, CertificateReplay) {
  // Recompute every recorded number with independent formulas.
  for (const std::string s : {"sl-so:4", "sl-so:5", "sl-so:7", "sl-so:9", "sl-sp:2", "sl-sp:3", "sl-sp:5"}) {
    const auto p = pair(s);
    const auto r = check_extension(p);
    const int big_n = p.g.rank() + 1;
    for (const auto& c : r.candidates) {
      ASSERT_TRUE(c.evidence);
      EXPECT_TRUE(c.evidence->kind == EvidenceKind::Exact ? c.evidence->value != c.evidence->dim_p
                                                          : c.evidence->value > c.evidence->dim_p);
      if (c.evidence->kind == EvidenceKind::Exact) {
        EXPECT_EQ(c.evidence->value, oracle::hook_content_dim(shape(c.weight), big_n)) << s;
      } else {
        // lambda and lambda - alpha_1 at c = 1, as permutation orbits
        Weight lowered = c.weight;
        lowered.coords[0] -= 1;
        lowered.coords[1] += 1;
        const auto bound = oracle::permutation_count(ints(c.weight)) + oracle::permutation_count(ints(lowered));
        EXPECT_EQ(c.evidence->value, static_cast<unsigned long>(bound)) << s;
      }
    }
  }
}

TEST(Obstruction, OddFamilySampledPointwise) {
  for (int n : {3, 5, 7, 9}) {
    const auto p = make_pair({PairKind::SL_SO, n, {}});
    const auto fams = candidate_weights(p);
    ASSERT_EQ(fams.size(), 1u);
    for (int c : {0, 1, 2, 5, 10}) {
      const Weight w = fams[0].base + Rational(c) * *fams[0].direction;
      EXPECT_GT(weyl_dim(p.g, w), p.dim_p) << n << ' ' << c;
      EXPECT_EQ(weyl_dim(p.g, w), oracle::hook_content_dim(shape(w), n));
    }
  }
}

TEST(Obstruction, SlSpVerdicts) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = check_extension(make_pair({PairKind::SL_SP, n, {}}));
    EXPECT_EQ(r.verdict, Verdict::NoExtension);
    EXPECT_EQ(r.dim_p, (n - 1) * (2 * n + 1));
    ASSERT_FALSE(r.candidates.empty());
    EXPECT_EQ(r.candidates.front().evidence->value, n * (2 * n - 1));
  }
  // n = 2 leaves the adjoint of sl_4 as a second point
  const auto r2 = check_extension(pair("sl-sp:2"));
  ASSERT_EQ(r2.candidates.size(), 2u);
  EXPECT_EQ(r2.candidates[1].weight, Weight::ambient({2, 1, 1, 0}));
  EXPECT_EQ(r2.candidates[1].evidence->value, 15);
}

TEST(Obstruction, AuditRecordsBound) {
  Limits limits;
  limits.kernel_search_bound = 3;
  const auto r = check_extension(pair("sl-so:5"), limits, true);
  EXPECT_EQ(r.search_bound, 3);
  EXPECT_EQ(r.verdict, Verdict::NoExtension);
}

TEST(Obstruction, OrthogonalAndExceptionalGaps) {
  for (int n = 2; n <= 9; ++n) {
    const auto r = check_extension(make_pair({PairKind::SO_SO, n, {}}));
    EXPECT_EQ(r.verdict, Verdict::NoExtension) << n;
    EXPECT_EQ(r.dim_p, n);
    if (n >= 6) {
      EXPECT_EQ(r.method, Method::DimensionGap);
      EXPECT_EQ(r.candidates.front().evidence->value, n + 1);
    }
  }
  const auto so9 = check_extension(pair("so-so:9"));
  EXPECT_EQ(so9.candidates.front().evidence->value, 10);
  const auto so3 = check_extension(pair("so-so:3"));
  EXPECT_EQ(so3.method, Method::ComplexDSquared);
  for (int n : {2, 4, 5}) {
    const auto r = check_extension(make_pair({PairKind::SO_SO, n, {}}));
    ASSERT_FALSE(r.candidates.empty());
    EXPECT_EQ(r.candidates.front().evidence->kind, EvidenceKind::RestrictedWeights) << n;
    EXPECT_EQ(r.candidates.front().evidence->value, 0);
  }
  const auto e6 = check_extension(pair("e6-f4"));
  EXPECT_EQ(e6.verdict, Verdict::NoExtension);
  EXPECT_EQ(e6.dim_p, 26);
  EXPECT_EQ(e6.candidates.front().evidence->value, 27);
}

TEST(Obstruction, ComplexCase) {
  const auto e8 = check_complex_case({Family::E, 8});
  EXPECT_EQ(e8.verdict, Verdict::NoExtension);
  EXPECT_EQ(e8.candidates.front().evidence->value, 248 * 248);
  EXPECT_EQ(e8.dim_p, 248);
  EXPECT_EQ(check_complex_case({Family::G, 2}).candidates.front().evidence->value, 49);
  EXPECT_EQ(check_complex_case({Family::A, 1}).candidates.front().evidence->value, 4);
  const auto b2 = check_complex_case({Family::B, 2});
  EXPECT_EQ(b2.candidates.front().evidence->value, 16);
  EXPECT_EQ(b2.notes.size(), 3u);
  EXPECT_THROW(check_complex_case({Family::E, 5}), Error);
}

TEST(Obstruction, EvidenceRule) {
  EXPECT_TRUE((Evidence{EvidenceKind::Exact, 15, 14}.eliminates()));
  EXPECT_FALSE((Evidence{EvidenceKind::Exact, 14, 14}.eliminates()));
  EXPECT_TRUE((Evidence{EvidenceKind::LowerBound, 15, 14}.eliminates()));
  EXPECT_FALSE((Evidence{EvidenceKind::LowerBound, 14, 14}.eliminates()));
  EXPECT_TRUE((Evidence{EvidenceKind::RestrictedWeights, 0, 3}.eliminates()));
  EXPECT_FALSE((Evidence{EvidenceKind::RestrictedWeights, 2, 3}.eliminates()));
}
