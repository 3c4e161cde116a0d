#include <gtest/gtest.h>

#include "isob/errors.hpp"
#include "isob/root_system.hpp"
#include "oracles.hpp"

using namespace isob;

namespace {

RootSystem rs(Family f, int n) { return build_root_system({f, n}); }

char letter(Family f) { return to_char(f); }

// Engine roots mapped into the oracle's coordinates. A-type roots are stored
// modulo (1,...,1); the sum-zero representative recovers e_i - e_j.
oracle::Vec lift(const RootSystem& r, const Weight& w) {
  oracle::Vec v(w.coords.begin(), w.coords.end());
  if (r.uses_quotient()) {
    oracle::Q mean = 0;
    for (const auto& x : v) mean += x;
    mean /= static_cast<long>(v.size());
    for (auto& x : v) x -= mean;
  }
  return v;
}

}  // namespace

TEST(RootSystem, SpecExamples) {
  const auto a1 = rs(Family::A, 1);
  EXPECT_EQ(a1.positive_roots().size(), 1u);
  EXPECT_EQ(a1.weyl_group_order(), 2);
  const auto a2 = rs(Family::A, 2);
  EXPECT_EQ(a2.positive_roots().size(), 3u);
  EXPECT_EQ(algebra_dim(a2), 8);
  const auto e8 = rs(Family::E, 8);
  EXPECT_EQ(e8.positive_roots().size(), 120u);
  EXPECT_EQ(algebra_dim(e8), 248);
  EXPECT_EQ(algebra_dim(rs(Family::F, 4)), 52);
  EXPECT_EQ(algebra_dim(rs(Family::E, 6)), 78);
  EXPECT_EQ(algebra_dim(a1), 3);
  EXPECT_EQ(rs(Family::A, 4).weyl_group_order(), 120);
  EXPECT_EQ(rs(Family::G, 2).weyl_group_order(), 12);
  EXPECT_EQ(e8.weyl_group_order(), mpz_class("696729600"));
}

TEST(RootSystem, IllegalTypes) {
  EXPECT_THROW(rs(Family::A, 0), Error);
  EXPECT_THROW(rs(Family::B, 1), Error);
  EXPECT_THROW(rs(Family::D, 2), Error);
  EXPECT_THROW(rs(Family::E, 5), Error);
  EXPECT_THROW(rs(Family::E, 9), Error);
  EXPECT_THROW(rs(Family::F, 3), Error);
  EXPECT_THROW(rs(Family::G, 3), Error);
  try {
    rs(Family::G, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IllegalType);
  }
  EXPECT_THROW(parse_simple_type("X4"), Error);
  EXPECT_EQ(parse_simple_type("e 8"), (SimpleType{Family::E, 8}));
}

TEST(RootSystem, RootsMatchHandWrittenModels) {
  const std::vector<SimpleType> types{{Family::A, 1}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3},
                                      {Family::D, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7}};
  for (const auto& t : types) {
    const auto r = build_root_system(t);
    const auto simple = oracle::simple_roots(letter(t.family), t.rank);
    std::set<oracle::Vec> engine_simple, model_simple(simple.begin(), simple.end());
    for (const auto& a : r.simple_roots()) engine_simple.insert(lift(r, a));
    EXPECT_EQ(engine_simple, model_simple) << t.name();

    std::set<oracle::Vec> engine_pos;
    for (const auto& a : r.positive_roots()) engine_pos.insert(lift(r, a));
    const auto pos = oracle::positive_roots(simple);
    EXPECT_EQ(engine_pos, std::set<oracle::Vec>(pos.begin(), pos.end())) << t.name();
    EXPECT_EQ(2 * pos.size(), oracle::all_roots(simple).size()) << t.name();
  }
}

TEST(RootSystem, CartanMatrixAgainstInnerProducts) {
  for (const auto& t : std::vector<SimpleType>{{Family::B, 4}, {Family::C, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 8}}) {
    const auto r = build_root_system(t);
    const auto simple = oracle::simple_roots(letter(t.family), t.rank);
    for (std::size_t i = 0; i < simple.size(); ++i)
      for (std::size_t j = 0; j < simple.size(); ++j) {
        const oracle::Q expected = 2 * oracle::dot(simple[i], simple[j]) / oracle::dot(simple[j], simple[j]);
        EXPECT_EQ(oracle::Q(r.cartan_matrix()[i][j]), expected) << t.name() << ' ' << i << ' ' << j;
      }
    EXPECT_EQ(classify_cartan(r.cartan_matrix()), t);
  }
}

TEST(RootSystem, WeylOrderByOrbitOfRegularVector) {
  // A generic vector has a free orbit, so the orbit size is |W|.
  for (const auto& t : std::vector<SimpleType>{{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}}) {
    const auto simple = oracle::simple_roots(letter(t.family), t.rank);
    oracle::Vec v(simple.front().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = oracle::Q(static_cast<long>(17 * i * i + 5 * i + 3), 7);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(oracle::orbit(simple, v).size())), weyl_group_order(t)) << t.name();
  }
}

TEST(RootSystem, ExceptionalWeylOrdersByOrbitStabilizerChain) {
  // |E8| = 240 |E7|, |E7| = 56 |E6|, |E6| = 27 |D5|: the stabilizer of the
  // minuscule (or adjoint) weight is the next group down.
  const auto e8 = oracle::simple_roots('E', 8);
  oracle::Vec w8(8, oracle::Q(0));
  w8[6] = w8[7] = 1;
  const auto e7 = oracle::simple_roots('E', 7);
  oracle::Vec w7(8, oracle::Q(0));
  w7[5] = 1;
  w7[6] = oracle::Q(-1, 2);
  w7[7] = oracle::Q(1, 2);
  const auto e6 = oracle::simple_roots('E', 6);
  oracle::Vec w1(8, oracle::Q(0));
  w1[5] = w1[6] = oracle::Q(-2, 3);
  w1[7] = oracle::Q(2, 3);
  // each vector pairs to 1 with the last (resp. first) simple root and 0 elsewhere
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(2 * oracle::dot(w8, e8[i]) / oracle::dot(e8[i], e8[i]), i == 7 ? 1 : 0);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(2 * oracle::dot(w7, e7[i]) / oracle::dot(e7[i], e7[i]), i == 6 ? 1 : 0);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(2 * oracle::dot(w1, e6[i]) / oracle::dot(e6[i], e6[i]), i == 0 ? 1 : 0);

  const auto d5 = oracle::simple_roots('D', 5);
  oracle::Vec regular{9, 7, 4, 2, 1};
  const auto d5_order = oracle::orbit(d5, regular).size();
  EXPECT_EQ(d5_order, 1920u);
  const auto e6_order = 27 * d5_order, e7_order = 56 * e6_order, e8_order = 240 * e7_order;
  EXPECT_EQ(oracle::orbit(e6, w1).size(), 27u);
  EXPECT_EQ(oracle::orbit(e7, w7).size(), 56u);
  EXPECT_EQ(oracle::orbit(e8, w8).size(), 240u);
  EXPECT_EQ(rs(Family::E, 6).weyl_group_order(), static_cast<unsigned long>(e6_order));
  EXPECT_EQ(rs(Family::E, 7).weyl_group_order(), static_cast<unsigned long>(e7_order));
  EXPECT_EQ(rs(Family::E, 8).weyl_group_order(), static_cast<unsigned long>(e8_order));
}

TEST(RootSystem, FundamentalWeightsAreDual) {
  for (const auto& t : std::vector<SimpleType>{{Family::A, 4}, {Family::C, 3}, {Family::D, 5}, {Family::G, 2}, {Family::E, 7}}) {
    const auto r = build_root_system(t);
    for (int i = 0; i < r.rank(); ++i)
      for (int j = 0; j < r.rank(); ++j)
        EXPECT_EQ(r.coroot_pairing(r.fundamental_weights()[static_cast<std::size_t>(i)],
                                   r.simple_roots()[static_cast<std::size_t>(j)]),
                  i == j ? 1 : 0)
            << t.name();
  }
}

TEST(RootSystem, BasisConversionRoundTrip) {
  const auto r = rs(Family::B, 3);
  const Weight w = Weight::fundamental({2, 0, 1});
  const Weight amb = r.to_ambient(w);
  EXPECT_EQ(amb, (Weight(Basis::Ambient, {Rational(5, 2), Rational(1, 2), Rational(1, 2)})));
  EXPECT_EQ(r.to_fundamental(amb), w);
  EXPECT_THROW(r.check(Weight::fundamental({1, 0})), Error);
}

TEST(RootSystem, QuotientCanonicalForm) {
  const auto a3 = rs(Family::A, 3);
  EXPECT_EQ(a3.canonical(Weight::ambient({3, 2, 2, 1})), Weight::ambient({2, 1, 1, 0}));
  EXPECT_EQ(a3.inner(Weight::ambient({1, 1, 1, 1}), Weight::ambient({5, 0, 0, 0})), 0);
}

TEST(RootSystem, DegenerateOrthogonal) {
  const auto so2 = build_orthogonal(2);
  EXPECT_EQ(so2.rank(), 0);
  EXPECT_EQ(so2.torus_rank(), 1);
  EXPECT_EQ(algebra_dim(so2), 1);
  EXPECT_EQ(algebra_dim(build_orthogonal(3)), 3);
  EXPECT_EQ(algebra_dim(build_orthogonal(4)), 6);
  for (int m = 5; m <= 12; ++m) EXPECT_EQ(algebra_dim(build_orthogonal(m)), m * (m - 1) / 2) << m;
  EXPECT_THROW(build_orthogonal(1), Error);
}

TEST(RootSystem, ParabolicOrder) {
  const auto e8 = rs(Family::E, 8);
  EXPECT_EQ(parabolic_order(e8, {0, 1, 2, 3, 4, 5, 6}), mpz_class("2903040"));
  EXPECT_EQ(parabolic_order(e8, {}), 1);
  const auto comps = dynkin_components(rs(Family::A, 5).cartan_matrix(), {0, 1, 3, 4});
  EXPECT_EQ(comps.size(), 2u);
}
