// Finite-scale checks for shift-period preservation and shift-orbit
// injectivity on periodic orbits, and the prolongation split W = U ⊔ A for
// letter-to-letter morphisms.
//
// The period and orbit checks only inspect periodic orbits whose period is
// at most the bound N. An empty report is a necessary condition at bound N,
// never a proof of the unbounded property.

#ifndef MTRANSFER_DIAGNOSTICS_HPP_
#define MTRANSFER_DIAGNOSTICS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "language.hpp"
#include "morphism.hpp"
#include "words.hpp"

namespace mtransfer {

  struct ViolationReport {
    enum class Kind { period_preservation, orbit_injectivity };

    Kind        kind;
    std::size_t bound;
    // one word per certificate for period preservation, a pair for orbit
    // injectivity; sorted
    std::vector<std::vector<Word>> certificates;

    [[nodiscard]] bool empty() const noexcept { return certificates.empty(); }
  };

  inline std::string to_string(ViolationReport::Kind kind) {
    return kind == ViolationReport::Kind::period_preservation
               ? "period-preservation"
               : "orbit-injectivity";
  }

  namespace detail {
    inline void check_language(Morphism const& sigma,
                               FactorLanguage const& language, std::size_t n) {
      if (!(language.alphabet() == sigma.domain())) {
        throw InvalidArgument(
            "the language alphabet differs from the morphism domain");
      }
      if (n > language.maxlen()) {
        throw DepthError(n, language.maxlen(), "diagnostic bound");
      }
    }

    // One primitive member of `language` per rotation class, length ≤ bound,
    // keyed by the least rotation. The value is the short-lex first member of
    // the class found in the language.
    inline std::map<Word, Word> primitive_classes(FactorLanguage const& language,
                                                  std::size_t bound) {
      std::map<Word, Word> classes;
      for (auto const& w : language.words()) {
        if (w.size() > bound) {
          break;
        }
        if (is_primitive(w)) {
          classes.emplace(least_rotation(w), w);
        }
      }
      return classes;
    }

    // Canonical name of the periodic orbit of w^{±∞}.
    inline Word orbit_key(Word const& w) {
      return least_rotation(primitive_root(w).root);
    }
  }  // namespace detail

  //! Primitive words w ∈ L with |w| ≤ bound, one per rotation class, such
  //! that σ(w) is a proper power.
  inline ViolationReport check_period_preservation(Morphism const& sigma,
                                                   FactorLanguage const& language,
                                                   std::size_t bound) {
    detail::check_language(sigma, language, bound);
    ViolationReport report{ViolationReport::Kind::period_preservation, bound,
                           {}};
    for (auto const& [key, w] : detail::primitive_classes(language, bound)) {
      if (!is_primitive(sigma.apply(w))) {
        report.certificates.push_back({w});
      }
    }
    return report;
  }

  //! Pairs (w1, w2) of primitive, non-rotation-equivalent words of L with
  //! length ≤ bound whose images generate the same periodic orbit.
  inline ViolationReport check_periodic_orbit_injectivity(
      Morphism const& sigma, FactorLanguage const& language,
      std::size_t bound) {
    detail::check_language(sigma, language, bound);
    ViolationReport report{ViolationReport::Kind::orbit_injectivity, bound,
                           {}};
    std::map<Word, std::vector<Word>> by_image;
    for (auto const& [key, w] : detail::primitive_classes(language, bound)) {
      by_image[detail::orbit_key(sigma.apply(w))].push_back(w);
    }
    for (auto const& [key, group] : by_image) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          report.certificates.push_back({group[i], group[j]});
        }
      }
    }
    std::sort(report.certificates.begin(), report.certificates.end());
    return report;
  }

  //! Re-runs the defining check on every certificate of `report`.
  inline bool recheck(Morphism const& sigma, ViolationReport const& report) {
    for (auto const& cert : report.certificates) {
      if (report.kind == ViolationReport::Kind::period_preservation) {
        if (cert.size() != 1 || cert[0].size() > report.bound
            || !is_primitive(cert[0]) || is_primitive(sigma.apply(cert[0]))) {
          return false;
        }
      } else {
        if (cert.size() != 2) {
          return false;
        }
        auto const& x = cert[0];
        auto const& y = cert[1];
        if (x.size() > report.bound || y.size() > report.bound
            || !is_primitive(x) || !is_primitive(y) || is_rotation(x, y)) {
          return false;
        }
        auto const rx = primitive_root(sigma.apply(x)).root;
        auto const ry = primitive_root(sigma.apply(y)).root;
        if (!is_rotation(rx, ry)) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prolongation split
  ////////////////////////////////////////////////////////////////////////

  struct ProlongationSplit {
    WordSet prolongations;  // W_n(w)
    WordSet unique;         // U_n(w)
    WordSet ambiguous;      // A_n(w)
  };

  namespace detail {
    // Calls `f` on every x ∈ L with σ(x) = image, for letter-to-letter σ.
    // Prefixes outside L are pruned, which is sound because L is
    // factor-closed.
    template <typename Func>
    void for_each_preimage(Morphism const& sigma, FactorLanguage const& language,
                           Word const& image, Func&& f) {
      std::vector<std::vector<Letter>> fibres(sigma.codomain().size());
      for (Letter a = 0; a < sigma.domain().size(); ++a) {
        fibres[sigma.image(a)[0]].push_back(a);
      }
      Word prefix;
      auto extend = [&](auto&& self) -> void {
        if (prefix.size() == image.size()) {
          f(prefix);
          return;
        }
        for (Letter a : fibres[image[prefix.size()]]) {
          prefix.push_back(a);
          if (language.contains(prefix)) {
            self(self);
          }
          prefix.pop_back();
        }
      };
      extend(extend);
    }
  }  // namespace detail

  //! For letter-to-letter σ: W = {uwv ∈ L : |u| = |v| = n}, split into U
  //! (every preimage in L of σ(uwv) has w in the middle) and A (some
  //! preimage does not).
  inline ProlongationSplit prolongation_split(Morphism const&       sigma,
                                              FactorLanguage const& language,
                                              Word const& w, std::size_t n) {
    if (!sigma.is_letter_to_letter()) {
      throw InvalidArgument(
          "the prolongation split needs a letter-to-letter morphism");
    }
    std::size_t const len = w.size() + 2 * n;
    detail::check_language(sigma, language, len);
    if (!language.contains(w)) {
      throw InvalidArgument("the word is not in the language");
    }
    ProlongationSplit split;
    for (auto const& x : language.words_of_length(len)) {
      if (x.substr(n, w.size()) == w) {
        split.prolongations.insert(x);
      }
    }
    for (auto const& x : split.prolongations) {
      bool inside = true;
      detail::for_each_preimage(sigma, language, sigma.apply(x),
                                [&](Word const& y) {
                                  if (y.substr(n, w.size()) != w) {
                                    inside = false;
                                  }
                                });
      (inside ? split.unique : split.ambiguous).insert(x);
    }
    return split;
  }

}  // namespace mtransfer

#endif  // MTRANSFER_DIAGNOSTICS_HPP_
