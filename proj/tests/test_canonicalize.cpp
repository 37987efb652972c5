#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "instances.hpp"
#include "permcanon/canonicalize.hpp"
#include "permcanon/notation.hpp"

using namespace permcanon;

namespace {

/// R_{abcd} R_{efgh} slot symmetries on 8 slots, with the two blocks
/// exchangeable, padded with two fixed slots.
StrongGeneratingSet two_riemann_sgs(std::size_t n) {
  std::vector<SignedPermutation> gens;
  for (std::size_t off : {0, 4}) {
    gens.push_back(instances::shifted(cycles("-(1 2)", 4), off, n));
    gens.push_back(instances::shifted(cycles("(1 3)(2 4)", 4), off, n));
  }
  gens.push_back(instances::shifted(cycles("(1 5)(2 6)(3 7)(4 8)", 8), 0, n));
  return schreier_sims({}, GeneratingSet(n, gens));
}

oracle::Answer as_answer(const CanonicalResult& r) {
  if (r.is_zero()) return std::nullopt;
  return r.permutation();
}

SymmetryDescriptor golden_descriptor() {
  SymmetryDescriptor d;
  d.degree = 10;
  d.free_positions = {0, 1};
  d.dummy_sets.push_back({1, {{2, 3}, {4, 5}}, ""});
  d.repeated_sets.push_back({{6, 7}});
  return d;
}

}  // namespace

TEST(Descriptor, Validation) {
  SymmetryDescriptor d = golden_descriptor();
  EXPECT_NO_THROW(d.validate());
  d.free_positions.push_back(2);
  EXPECT_THROW(d.validate(), InvalidArgument);
  d = golden_descriptor();
  d.dummy_sets[0].metric = 2;
  EXPECT_THROW(d.validate(), InvalidArgument);
  d = golden_descriptor();
  d.repeated_sets[0].positions = {9};
  EXPECT_THROW(d.validate(), InvalidArgument);
  d = golden_descriptor();
  d.free_positions = {10};
  EXPECT_THROW(d.validate(), InvalidArgument);
}

TEST(Descriptor, Generators) {
  SymmetryDescriptor d;
  d.degree = 8;
  d.dummy_sets.push_back({1, {{2, 3}, {4, 5}}, ""});
  d.repeated_sets.push_back({{6, 7}});
  const auto gs = d_generators(d);
  ASSERT_EQ(gs.size(), 4u);
  EXPECT_EQ(gs[0], cycles("(3 5)(4 6)", 8));
  EXPECT_EQ(gs[1], cycles("(3 4)", 8));
  EXPECT_EQ(gs[2], cycles("(5 6)", 8));
  EXPECT_EQ(gs[3], cycles("(7 8)", 8));
  d.dummy_sets[0].metric = 0;
  EXPECT_EQ(d_generators(d).size(), 2u);
  d.dummy_sets[0].metric = -1;
  EXPECT_EQ(d_generators(d)[1], cycles("-(3 4)", 8));
}

TEST(Canonicalize, GoldenVector) {
  const auto g = SignedPermutation::from_images({4, 7, 2, 8, 6, 3, 1, 5, 9, 10});
  const auto r = canonical_perm(g, two_riemann_sgs(10), golden_descriptor());
  ASSERT_FALSE(r.is_zero());
  EXPECT_EQ(r.permutation(), SignedPermutation::from_images({1, 3, 4, 5, 2, 7, 6, 8, 9, 10}));
  const auto gs = GeneratingSet(10, two_riemann_sgs(10).generators());
  EXPECT_EQ(as_answer(r), oracle::canonical(g, gs, golden_descriptor()));
}

TEST(Canonicalize, TraceOfRiemannIsZero) {
  // R^a_{abc}: slots 1,2 contracted, antisymmetric in those slots.
  StrongGeneratingSet s = schreier_sims({}, GeneratingSet(4, {cycles("-(1 2)", 4), cycles("(1 3)(2 4)", 4)}));
  SymmetryDescriptor d;
  d.degree = 4;
  d.free_positions = {2, 3};
  d.dummy_sets.push_back({1, {{0, 1}}, ""});
  EXPECT_TRUE(canonical_perm(SignedPermutation::identity(4), s, d).is_zero());
  EXPECT_TRUE(double_coset_rep(SignedPermutation::identity(4), s, d).is_zero());
}

TEST(Canonicalize, IdentityWithoutSymmetriesIsFixed) {
  const auto g = SignedPermutation::from_images({2, 3, 1}, -1);
  SymmetryDescriptor d;
  d.degree = 3;
  d.free_positions = {0, 1, 2};
  const auto r = canonical_perm(g, StrongGeneratingSet::trivial(3), d);
  EXPECT_EQ(r.permutation(), g);
}

TEST(Canonicalize, InputChecks) {
  const auto g = SignedPermutation::identity(4);
  SymmetryDescriptor d;
  d.degree = 5;
  EXPECT_THROW(canonical_perm(g, StrongGeneratingSet::trivial(4), d), InvalidArgument);
  d.degree = 4;
  EXPECT_THROW(canonical_perm(g, StrongGeneratingSet::trivial(5), d), InvalidArgument);
}

TEST(Canonicalize, MemoryLimitThrows) {
  const auto g = SignedPermutation::from_images({4, 7, 2, 8, 6, 3, 1, 5, 9, 10});
  CanonOptions opt;
  opt.memory_limit_bytes = 16;
  EXPECT_THROW(canonical_perm(g, two_riemann_sgs(10), golden_descriptor(), opt), ResourceLimitError);
}

TEST(Canonicalize, MinusIdentityInSlotGroupIsZero) {
  GeneratingSet g(3, {cycles("-(1 2)", 3), cycles("(1 2)", 3)});
  SymmetryDescriptor d;
  d.degree = 3;
  d.free_positions = {0, 1, 2};
  EXPECT_TRUE(canonical_perm(SignedPermutation::identity(3), g, d).is_zero());
}

TEST(Canonicalize, RightCosetRepPlacesFreesFirst) {
  const auto s = two_riemann_sgs(10);
  const auto g = SignedPermutation::from_images({4, 7, 2, 8, 6, 3, 1, 5, 9, 10});
  const auto x = right_coset_rep(g, s, {0, 1});
  EXPECT_TRUE(s.contains(x * inverse(g)));
  EXPECT_EQ(oracle::free_slots(x, {0, 1}),
            oracle::free_slots(oracle::best_free_placements(g, GeneratingSet(10, s.generators()), {0, 1}).front(),
                               {0, 1}));
}

TEST(Canonicalize, DoubleCosetMatchesOracle) {
  std::mt19937_64 rng(2024);
  int checked = 0, zeros = 0;
  while (checked < 300) {
    const std::size_t n = 2 + rng() % 7;
    const auto gs = instances::random_slot_group(n, rng);
    const auto sgs = schreier_sims({}, gs);
    if (sgs.order() > 5000) continue;
    const auto desc = oracle::random_descriptor(n, rng);
    const auto g = oracle::random_perm(n, rng, true);
    const auto expect = oracle::double_coset(g, gs, desc);
    const auto got = as_answer(double_coset_rep(g, sgs, desc));
    ASSERT_EQ(got, expect) << "instance " << checked << " n=" << n << " g=" << to_cycles_string(g);
    zeros += !expect.has_value();
    ++checked;
  }
  EXPECT_GT(zeros, 10);
}

TEST(Canonicalize, TwoStepMatchesOracle) {
  std::mt19937_64 rng(99);
  for (int checked = 0; checked < 300;) {
    const std::size_t n = 2 + rng() % 7;
    const auto gs = instances::random_slot_group(n, rng);
    const auto sgs = schreier_sims({}, gs);
    if (sgs.order() > 5000) continue;
    const auto desc = oracle::random_descriptor(n, rng);
    const auto g = oracle::random_perm(n, rng, true);
    ASSERT_EQ(as_answer(canonical_perm(g, sgs, desc)), oracle::canonical(g, gs, desc))
        << "instance " << checked << " n=" << n << " g=" << to_cycles_string(g);
    ++checked;
  }
}

TEST(Canonicalize, DedupDoesNotChangeResult) {
  std::mt19937_64 rng(5);
  CanonOptions dd;
  dd.dedup = true;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 4 + rng() % 5;
    const auto gs = instances::random_slot_group(n, rng);
    const auto sgs = schreier_sims({}, gs);
    const auto desc = oracle::random_descriptor(n, rng);
    const auto g = oracle::random_perm(n, rng, true);
    EXPECT_EQ(canonical_perm(g, sgs, desc), canonical_perm(g, sgs, desc, dd));
  }
}

// A free stage whose partial base differs from the group's natural base.
TEST(CanonicalPerm, FreeStageStabilizerIsComplete) {
  const std::size_t n = 9;
  const GeneratingSet gs(n, {cycles("-(1 2)", n), cycles("(1 3)(2 4)", n), cycles("-(5 6)", n), cycles("-(8 9)", n),
                             cycles("-(3 5)(4 9 7 6 8)", n)});
  const auto s = schreier_sims({}, gs);
  SymmetryDescriptor d;
  d.degree = n;
  d.free_positions = {6, 7, 8};
  d.dummy_sets.push_back({0, {{0, 1}, {2, 3}, {4, 5}}, "M"});
  const auto expect = cycles("(1 7 4)(2 8 5)(3 9 6)", n);
  for (const char* g : {"-(1 9)(2 3 7 6 5 4 8)", "-(1 2 4 5 8)(6 9)"}) {
    const auto x = cycles(g, n);
    EXPECT_EQ(free_stage(x, s, d.free_positions).stabilizer.order(), GroupOrder(720)) << g;
    EXPECT_EQ(canonical_perm(x, s, d), CanonicalResult(expect)) << g;
    EXPECT_EQ(oracle::canonical(x, gs, d), std::optional<SignedPermutation>(expect)) << g;
  }
}
