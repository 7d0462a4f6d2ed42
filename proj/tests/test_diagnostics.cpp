#include <gtest/gtest.h>

#include "mtransfer/diagnostics.hpp"
#include "support.hpp"

using namespace mtransfer;
using testing_support::Rng;

namespace {
  Alphabet const a_only{"a"};
  Alphabet const b_only{"b"};
  Alphabet const ab{"a", "b"};
  Alphabet const c_only{"c"};

  Word W(char const* text, Alphabet const& alphabet = ab) {
    return parse_compact_word(text, alphabet);
  }

  Morphism thue_morse() {
    return Morphism(ab, ab, {W("ab"), W("ba")});
  }

  Morphism collapse() {
    return Morphism(ab, c_only, {Word{0}, Word{0}});
  }

  using Cert = std::vector<std::vector<Word>>;
}  // namespace

TEST(PeriodPreservation, Examples) {
  Morphism const square(a_only, b_only, {Word{0, 0}});
  auto const     r = check_period_preservation(square, full_language(a_only, 3), 3);
  EXPECT_EQ(r.certificates, (Cert{{Word{0}}}));
  EXPECT_EQ(r.bound, 3u);
  EXPECT_TRUE(recheck(square, r));

  auto const sub = subdivision_morphism(ab, std::vector<std::size_t>{2, 3});
  EXPECT_TRUE(check_period_preservation(sub, full_language(ab, 6), 6).empty());
  EXPECT_TRUE(check_period_preservation(Morphism::identity(ab), full_language(ab, 6), 6)
                  .empty());
  EXPECT_THROW((void) check_period_preservation(square, full_language(a_only, 2), 3),
               DepthError);
}

TEST(OrbitInjectivity, Examples) {
  auto const tm = check_periodic_orbit_injectivity(thue_morse(), full_language(ab, 1), 1);
  EXPECT_EQ(tm.certificates, (Cert{{W("a"), W("b")}}));
  EXPECT_TRUE(recheck(thue_morse(), tm));

  auto const col = check_periodic_orbit_injectivity(collapse(), full_language(ab, 1), 1);
  EXPECT_EQ(col.certificates, (Cert{{W("a"), W("b")}}));

  auto const sub = subdivision_morphism(ab, std::vector<std::size_t>{1, 2});
  EXPECT_TRUE(check_periodic_orbit_injectivity(sub, full_language(ab, 6), 6).empty());
}

TEST(OrbitInjectivity, CollapseAtLargerBound) {
  // a^k and b^k collapse to c^k; every primitive word maps into c's orbit
  auto const r = check_periodic_orbit_injectivity(collapse(), full_language(ab, 3), 3);
  EXPECT_TRUE(recheck(collapse(), r));
  EXPECT_FALSE(r.empty());
  for (auto const& cert : r.certificates) {
    EXPECT_LT(cert[0], cert[1]);
  }
}

TEST(Diagnostics, SubdivisionMorphismsHaveEmptyReports) {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    auto const A = testing_support::letters(testing_support::uniform(rng, 1, 3));
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < A.size(); ++i) {
      lengths.push_back(testing_support::uniform(rng, 1, 3));
    }
    auto const        pi = subdivision_morphism(A, lengths);
    std::size_t const N  = A.size() == 3 ? 6 : 8;
    auto const        L  = full_language(A, N);
    ASSERT_TRUE(check_period_preservation(pi, L, N).empty());
    ASSERT_TRUE(check_periodic_orbit_injectivity(pi, L, N).empty());
  }
}

TEST(Diagnostics, CertificatesRecheckOnRandomMorphisms) {
  Rng rng(109);
  for (int trial = 0; trial < 100; ++trial) {
    auto const A = testing_support::letters(2);
    auto const B = testing_support::letters(2, 'p');
    auto const s = testing_support::random_morphism(rng, A, B, 1, 3);
    auto const L = full_language(A, 5);
    auto const p = check_period_preservation(s, L, 5);
    auto const o = check_periodic_orbit_injectivity(s, L, 5);
    ASSERT_TRUE(recheck(s, p));
    ASSERT_TRUE(recheck(s, o));
    // brute force: every primitive class with a non-primitive image is found
    std::set<Word> flagged;
    for (auto const& c : p.certificates) {
      flagged.insert(least_rotation(c[0]));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
      for_each_word(2, n, [&](Word const& w) {
        if (is_primitive(w)) {
          ASSERT_EQ(flagged.count(least_rotation(w)) == 1,
                    !is_primitive(s.apply(w)));
        }
      });
    }
  }
}

TEST(Diagnostics, RecheckRejectsForgedCertificates) {
  ViolationReport forged{ViolationReport::Kind::orbit_injectivity, 2,
                         {{W("a"), W("ab")}}};
  EXPECT_FALSE(recheck(thue_morse(), forged));
  ViolationReport period{ViolationReport::Kind::period_preservation, 2, {{W("ab")}}};
  EXPECT_FALSE(recheck(thue_morse(), period));
}

// Composite morphisms: a primitive w gets a period certificate under σ2∘σ1
// iff σ1 flags w, or σ1(w) is primitive and σ2 flags σ1(w) on the image
// words.
TEST(Diagnostics, CompositionShadow) {
  Rng rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    auto const A  = testing_support::letters(2);
    auto const B  = testing_support::letters(2, 'k');
    auto const C  = testing_support::letters(2, 'p');
    auto const s1 = testing_support::random_morphism(rng, A, B, 1, 2);
    auto const s2 = testing_support::random_morphism(rng, B, C, 1, 2);
    std::size_t const N = 6;
    auto const L = full_language(A, N);

    std::set<Word> via_composite;
    for (auto const& c : check_period_preservation(compose(s2, s1), L, N).certificates) {
      via_composite.insert(least_rotation(c[0]));
    }
    std::set<Word> via_s1;
    for (auto const& c : check_period_preservation(s1, L, N).certificates) {
      via_s1.insert(least_rotation(c[0]));
    }
    WordSet images;
    std::size_t longest = 1;
    for (std::size_t n = 1; n <= N; ++n) {
      for_each_word(2, n, [&](Word const& w) {
        images.insert(s1.apply(w));
        longest = std::max(longest, s1.apply(w).size());
      });
    }
    auto const LB = factorial_closure(B, images, longest);
    std::set<Word> via_s2;
    for (auto const& c : check_period_preservation(s2, LB, longest).certificates) {
      via_s2.insert(least_rotation(c[0]));
    }
    std::set<Word> expected;
    for (std::size_t n = 1; n <= N; ++n) {
      for_each_word(2, n, [&](Word const& w) {
        if (!is_primitive(w)) {
          return;
        }
        Word const img = s1.apply(w);
        if (via_s1.count(least_rotation(w)) != 0
            || (is_primitive(img) && via_s2.count(least_rotation(img)) != 0)) {
          expected.insert(least_rotation(w));
        }
      });
    }
    ASSERT_EQ(via_composite, expected);
  }
}

TEST(ProlongationSplit, IdentityAndRenaming) {
  auto const L = full_language(ab, 5);
  for (auto const& sigma :
       {Morphism::identity(ab), Morphism(ab, Alphabet{"x", "y"}, {Word{1}, Word{0}})}) {
    auto const s = prolongation_split(sigma, L, W("ab"), 1);
    EXPECT_EQ(s.prolongations.size(), 4u);
    EXPECT_EQ(s.unique, s.prolongations);
    EXPECT_TRUE(s.ambiguous.empty());
  }
}

TEST(ProlongationSplit, CollapseIsFullyAmbiguous) {
  auto const s = prolongation_split(collapse(), full_language(ab, 3), W("a"), 1);
  EXPECT_EQ(s.prolongations.size(), 4u);
  EXPECT_EQ(s.ambiguous, s.prolongations);
  EXPECT_TRUE(s.unique.empty());
}

TEST(ProlongationSplit, PartitionOnRandomInstances) {
  Rng rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    auto const A = testing_support::letters(3);
    auto const B = testing_support::letters(testing_support::uniform(rng, 1, 3), 'p');
    auto const s = testing_support::random_letter_to_letter(rng, A, B);
    WordSet    seeds{testing_support::random_word(rng, 3, 8, 12),
                  testing_support::random_word(rng, 3, 8, 12)};
    auto const L = factorial_closure(A, seeds, 5);
    auto const w = *L.words_of_length(1).begin();
    auto const p = prolongation_split(s, L, w, 2);
    WordSet    joined = p.unique;
    for (auto const& x : p.ambiguous) {
      ASSERT_EQ(p.unique.count(x), 0u);
      joined.insert(x);
    }
    ASSERT_EQ(joined, p.prolongations);
    // brute-force oracle over all same-length words of L
    for (auto const& x : p.prolongations) {
      bool ambiguous = false;
      for (auto const& y : L.words_of_length(x.size())) {
        if (s.apply(y) == s.apply(x) && y.substr(2, 1) != w) {
          ambiguous = true;
        }
      }
      ASSERT_EQ(p.ambiguous.count(x) == 1, ambiguous);
    }
  }
}

TEST(ProlongationSplit, Errors) {
  Morphism const tm = thue_morse();
  EXPECT_THROW((void) prolongation_split(tm, full_language(ab, 3), W("a"), 1),
               InvalidArgument);
  EXPECT_THROW((void) prolongation_split(collapse(), full_language(ab, 2), W("a"), 1),
               DepthError);
  EXPECT_THROW(
      (void) prolongation_split(collapse(), periodic_orbit_language(ab, W("a"), 3),
                                W("b"), 1),
      InvalidArgument);
}
