// The measure transfer induced by a non-erasing morphism.
//
// Two independent evaluation routes are provided:
//
//  * transfer_eval / transfer_table sum essential occurrences of the target
//    word over the (finite) set of preimage candidates;
//  * transfer_via_decomposition builds the subdivision measure for
//    ℓ_σ(a) = |σ(a)| and pushes it forward along the letter-to-letter part
//    α_σ of the canonical decomposition σ = α_σ ∘ π_σ.
//
// Both must agree exactly.

#ifndef MTRANSFER_TRANSFER_HPP_
#define MTRANSFER_TRANSFER_HPP_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "measure.hpp"
#include "morphism.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace mtransfer {

  namespace detail {
    // Depth needed to evaluate cylinders of length `out_len` when the
    // shortest letter image has length `min_len`.
    inline std::size_t required_depth(std::size_t min_len,
                                      std::size_t out_len) {
      return out_len <= 1 ? 1 : (out_len - 2) / min_len + 2;
    }

    inline void check_domain(Morphism const& sigma, MeasureTable const& m) {
      if (!(m.alphabet() == sigma.domain())) {
        throw InvalidArgument(
            "the measure alphabet differs from the morphism domain");
      }
    }

    inline Rational transferred_mass(Morphism const& sigma,
                                     MeasureTable const& m) {
      Rational mass = 0;
      for (Letter a = 0; a < sigma.domain().size(); ++a) {
        mass += Rational(sigma.image(a).size()) * m.value(Word{a});
      }
      return mass;
    }
  }  // namespace detail

  //! Input depth needed to evaluate the transferred measure on cylinders of
  //! length `out_len`.
  inline std::size_t required_input_depth(Morphism const& sigma,
                                          std::size_t     out_len) {
    return detail::required_depth(norms(sigma).min_len, out_len);
  }

  //! μ^σ([w']) = Σ_u ⌊σ(u)⌋_{w'} μ(u), summed over the stored support of `m`
  //! restricted to the candidate lengths. For w' = ε this is the total
  //! transferred mass Σ_a |σ(a)| μ(a).
  inline Rational transfer_eval(Morphism const&     sigma,
                                MeasureTable const& m,
                                Word const&         target) {
    detail::check_domain(sigma, m);
    check_word_over(target, sigma.codomain(), "cylinder word");
    if (target.empty()) {
      return detail::transferred_mass(sigma, m);
    }
    std::size_t const required = required_input_depth(sigma, target.size());
    if (m.depth() < required) {
      throw DepthError(required, m.depth(),
                       "evaluating the transferred measure");
    }
    LengthInterval const range = target.size() == 1
                                     ? LengthInterval{1, 1}
                                     : candidate_lengths(sigma, target.size());
    Rational sum = 0;
    for (auto const& [u, v] : m.entries()) {
      if (range.contains(u.size())) {
        if (auto n = essential_occurrences(sigma, u, target); n != 0) {
          sum += Rational(n) * v;
        }
      }
    }
    return sum;
  }

  //! The transferred measure on all cylinders of length ≤ `out_depth`.
  //!
  //! Each stored u contributes μ(u) once for every essential occurrence of
  //! every short enough factor of σ(u), which is the same sum as
  //! transfer_eval organized by u instead of by w'.
  inline MeasureTable transfer_table(Morphism const&     sigma,
                                     MeasureTable const& m,
                                     std::size_t         out_depth) {
    detail::check_domain(sigma, m);
    std::size_t const required = required_input_depth(sigma, out_depth);
    if (m.depth() < required) {
      throw DepthError(required, m.depth(), "transferring a measure table");
    }
    MeasureTable result(sigma.codomain(), out_depth,
                        detail::transferred_mass(sigma, m));
    for (auto const& [u, v] : m.entries()) {
      Word const        image       = sigma.apply(u);
      std::size_t const first_block = sigma.image(u.front()).size();
      std::size_t const last_start  = image.size() - sigma.image(u.back()).size();
      for (std::size_t p = 0; p < first_block; ++p) {
        std::size_t const min_len = u.size() == 1 ? 1 : last_start - p + 1;
        std::size_t const max_len = std::min(out_depth, image.size() - p);
        for (std::size_t len = min_len; len <= max_len; ++len) {
          result.add(image.substr(p, len), v);
        }
      }
    }
    return result;
  }

  //! The subdivision measure μ_ℓ on the subdivision alphabet, at depth
  //! `out_depth`: μ_ℓ(u) = μ(û) for the shortest û with u a factor of
  //! π_ℓ(û), and 0 when no such û exists.
  inline MeasureTable subdivision_measure(std::vector<std::size_t> const& lengths,
                                          MeasureTable const&             m,
                                          std::size_t out_depth) {
    Alphabet const& domain = m.alphabet();
    Alphabet        target = subdivision_alphabet(domain, lengths);
    std::size_t const min_len = *std::min_element(lengths.begin(), lengths.end());
    std::size_t const required = detail::required_depth(min_len, out_depth);
    if (m.depth() < required) {
      throw DepthError(required, m.depth(), "building the subdivision measure");
    }

    Rational mass = 0;
    for (Letter a = 0; a < domain.size(); ++a) {
      mass += Rational(lengths[a]) * m.value(Word{a});
    }
    MeasureTable result(target, out_depth, mass);

    std::vector<Letter> offset(domain.size(), 0);
    for (Letter a = 1; a < domain.size(); ++a) {
      offset[a] = offset[a - 1] + static_cast<Letter>(lengths[a - 1]);
    }

    // Walk all factors of π_ℓ-images: (a,k) is followed by (a,k+1) inside a
    // block and by any (b,1) after the last letter of a block. `hat` records
    // the blocks visited so far, i.e. û.
    Word current;
    Word hat;
    auto walk = [&](auto&& self, Letter a, std::size_t k) -> void {
      current.push_back(offset[a] + static_cast<Letter>(k - 1));
      result.set(current, m.value(hat));
      if (current.size() < out_depth) {
        if (k < lengths[a]) {
          self(self, a, k + 1);
        } else {
          for (Letter b = 0; b < domain.size(); ++b) {
            hat.push_back(b);
            self(self, b, 1);
            hat.pop_back();
          }
        }
      }
      current.pop_back();
    };
    for (Letter a = 0; a < domain.size(); ++a) {
      hat.push_back(a);
      for (std::size_t k = 1; k <= lengths[a]; ++k) {
        walk(walk, a, k);
      }
      hat.pop_back();
    }
    return result;
  }

  //! α_*(μ)(w') = Σ_{α(u) = w'} μ(u) for a letter-to-letter morphism α.
  inline MeasureTable pushforward_letter_to_letter(Morphism const&     alpha,
                                                   MeasureTable const& m) {
    if (!alpha.is_letter_to_letter()) {
      throw InvalidArgument("push-forward needs a letter-to-letter morphism");
    }
    detail::check_domain(alpha, m);
    MeasureTable result(alpha.codomain(), m.depth(), m.total_mass());
    for (auto const& [u, v] : m.entries()) {
      result.add(alpha.apply(u), v);
    }
    return result;
  }

  //! (α_σ)_*(μ_{ℓ_σ}), truncated at `out_depth`.
  inline MeasureTable transfer_via_decomposition(Morphism const&     sigma,
                                                 MeasureTable const& m,
                                                 std::size_t out_depth) {
    detail::check_domain(sigma, m);
    auto const dec = canonical_decomposition(sigma);
    return pushforward_letter_to_letter(
        dec.alpha, subdivision_measure(sigma.lengths(), m, out_depth));
  }

}  // namespace mtransfer

#endif  // MTRANSFER_TRANSFER_HPP_
