// Seeded generators and reference oracles shared by the unit and acceptance
// suites. The oracles deliberately avoid the library's own occurrence and
// transfer code: they work on plain std::vector<int> words.

#ifndef MTRANSFER_TESTS_SUPPORT_HPP_
#define MTRANSFER_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mtransfer/mtransfer.hpp"

namespace testing_support {

  using mtransfer::Alphabet;
  using mtransfer::Letter;
  using mtransfer::MeasureTable;
  using mtransfer::Morphism;
  using mtransfer::Rational;
  using mtransfer::Word;

  using Rng = std::mt19937;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  //! Alphabet of `k` single-character symbols starting at `first`.
  inline Alphabet letters(std::size_t k, char first = 'a') {
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < k; ++i) {
      symbols.emplace_back(1, static_cast<char>(first + i));
    }
    return Alphabet(symbols);
  }

  inline Word random_word(Rng& rng, std::size_t k, std::size_t min_len,
                          std::size_t max_len) {
    std::size_t const len = uniform(rng, min_len, max_len);
    Word              w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<Letter>(uniform(rng, 0, k - 1)));
    }
    return w;
  }

  inline Morphism random_morphism(Rng& rng, Alphabet const& domain,
                                  Alphabet const& codomain,
                                  std::size_t min_len, std::size_t max_len) {
    std::vector<Word> images;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      images.push_back(random_word(rng, codomain.size(), min_len, max_len));
    }
    return Morphism(domain, codomain, images);
  }

  inline Morphism random_letter_to_letter(Rng& rng, Alphabet const& domain,
                                          Alphabet const& codomain) {
    return random_morphism(rng, domain, codomain, 1, 1);
  }

  //! A small positive rational p/q with 1 ≤ p ≤ 9, 1 ≤ q ≤ 6.
  inline Rational random_weight(Rng& rng) {
    Rational q(static_cast<long>(uniform(rng, 1, 9)),
               static_cast<long>(uniform(rng, 1, 6)));
    q.canonicalize();
    return q;
  }

  //! A finite nonnegative combination Σ λ_i μ_{w_i} of characteristic
  //! measures, kept symbolically so that oracles can evaluate it directly.
  struct Mixture {
    Alphabet                              alphabet;
    std::vector<std::pair<Rational, Word>> terms;

    [[nodiscard]] MeasureTable table(std::size_t depth) const {
      std::vector<std::pair<Rational, MeasureTable>> parts;
      for (auto const& [lambda, w] : terms) {
        parts.emplace_back(lambda,
                           mtransfer::characteristic_measure(alphabet, w, depth));
      }
      return mtransfer::linear_combination(parts);
    }
  };

  inline Mixture random_mixture(Rng& rng, Alphabet const& alphabet,
                                std::size_t max_terms, std::size_t max_len) {
    Mixture     mix{alphabet, {}};
    std::size_t n = uniform(rng, 1, max_terms);
    for (std::size_t i = 0; i < n; ++i) {
      mix.terms.emplace_back(random_weight(rng),
                             random_word(rng, alphabet.size(), 1, max_len));
    }
    return mix;
  }

  //! Convex version: weights rescaled to sum to one.
  inline Mixture random_convex_mixture(Rng& rng, Alphabet const& alphabet,
                                       std::size_t max_terms,
                                       std::size_t max_len) {
    Mixture  mix = random_mixture(rng, alphabet, max_terms, max_len);
    Rational sum = 0;
    for (auto const& t : mix.terms) {
      sum += t.first;
    }
    for (auto& t : mix.terms) {
      t.first /= sum;
    }
    return mix;
  }

  //! The language of a random subshift: a union of 1 to `max_orbits`
  //! periodic orbits of period ≤ `max_period`, truncated at `maxlen`.
  inline mtransfer::FactorLanguage random_subshift_language(
      Rng& rng, Alphabet const& alphabet, std::size_t max_orbits,
      std::size_t max_period, std::size_t maxlen) {
    mtransfer::FactorLanguage result(alphabet, maxlen);
    std::size_t const         n = uniform(rng, 1, max_orbits);
    for (std::size_t i = 0; i < n; ++i) {
      result = mtransfer::unite(
          result, mtransfer::periodic_orbit_language(
                      alphabet, random_word(rng, alphabet.size(), 1, max_period),
                      maxlen));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles on plain vectors
  ////////////////////////////////////////////////////////////////////////

  using Plain = std::vector<int>;

  inline Plain plain(Word const& w) {
    return Plain(w.begin(), w.end());
  }

  //! Start positions p ∈ [0, |w|) where u occurs in the periodic word w^∞.
  inline std::size_t cyclic_count(Plain const& w, Plain const& u) {
    std::size_t count = 0;
    for (std::size_t p = 0; p < w.size(); ++p) {
      bool match = true;
      for (std::size_t i = 0; i < u.size() && match; ++i) {
        match = w[(p + i) % w.size()] == u[i];
      }
      count += match ? 1 : 0;
    }
    return count;
  }

  //! μ_w(u) straight from the counting definition: the number of shift
  //! translates of w^{±∞} among |w| consecutive ones whose cylinder at 0 is u.
  //! Proper powers need no special case: w = w_0^r counts each translate of
  //! w_0^{±∞} exactly r times.
  inline Rational characteristic_value(Word const& w, Word const& u) {
    if (u.empty()) {
      return Rational(w.size());
    }
    return Rational(cyclic_count(plain(w), plain(u)));
  }

  inline Rational mixture_value(Mixture const& mix, Word const& u) {
    Rational v = 0;
    for (auto const& [lambda, w] : mix.terms) {
      v += lambda * characteristic_value(w, u);
    }
    return v;
  }

  //! The transferred mixture evaluated via σ^M(μ_w) = μ_{σ(w)} on each term.
  inline Rational transferred_mixture_value(Morphism const& sigma,
                                            Mixture const& mix, Word const& u) {
    Rational v = 0;
    for (auto const& [lambda, w] : mix.terms) {
      v += lambda * characteristic_value(sigma.apply(w), u);
    }
    return v;
  }

  inline std::vector<Plain> plain_images(Morphism const& sigma) {
    std::vector<Plain> images;
    for (auto const& img : sigma.images()) {
      images.push_back(plain(img));
    }
    return images;
  }

  //! Essential occurrences following the per-length phrasing:
  //!  |w| = 1: every occurrence;
  //!  |w| = 2: the occurrence contains the junction of σ(x1) and σ(x2);
  //!  |w| ≥ 3: the occurrence contains σ(x2…x_{n−1}) as a factor, but not
  //!           as prefix or suffix (and stays inside σ(w)).
  inline std::size_t essential_by_phrasing(std::vector<Plain> const& images,
                                           Plain const& w, Plain const& target) {
    Plain image;
    for (int x : w) {
      image.insert(image.end(), images[x].begin(), images[x].end());
    }
    std::size_t const first = images[w.front()].size();
    std::size_t const last  = images[w.back()].size();
    std::size_t count = 0;
    for (std::size_t p = 0; p + target.size() <= image.size(); ++p) {
      if (!std::equal(target.begin(), target.end(), image.begin() + p)) {
        continue;
      }
      std::size_t const end = p + target.size();  // one past the occurrence
      if (w.size() == 1) {
        ++count;
      } else if (w.size() == 2) {
        count += (p < first && end > first) ? 1 : 0;
      } else {
        std::size_t const inner_begin = first;
        std::size_t const inner_end   = image.size() - last;
        bool const contains   = p <= inner_begin && end >= inner_end;
        bool const as_prefix  = p == inner_begin;
        bool const as_suffix  = end == inner_end;
        count += (contains && !as_prefix && !as_suffix) ? 1 : 0;
      }
    }
    return count;
  }

}  // namespace testing_support

#endif  // MTRANSFER_TESTS_SUPPORT_HPP_
