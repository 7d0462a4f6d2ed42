// Factor languages truncated at a maximal length: the finite stand-in for a
// subshift.

#ifndef MTRANSFER_LANGUAGE_HPP_
#define MTRANSFER_LANGUAGE_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "morphism.hpp"
#include "transfer.hpp"
#include "words.hpp"

namespace mtransfer {

  //! A factor-closed set of non-empty words of length ≤ maxlen.
  class FactorLanguage {
   public:
    FactorLanguage(Alphabet alphabet, std::size_t maxlen)
        : _alphabet(std::move(alphabet)), _maxlen(maxlen) {
      if (_maxlen == 0) {
        throw InvalidArgument("a factor language needs maxlen >= 1");
      }
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t    maxlen() const noexcept { return _maxlen; }
    [[nodiscard]] WordSet const& words() const noexcept { return _words; }
    [[nodiscard]] std::size_t    size() const noexcept { return _words.size(); }
    [[nodiscard]] bool           empty() const noexcept { return _words.empty(); }

    [[nodiscard]] bool contains(Word const& w) const {
      return _words.count(w) != 0;
    }

    //! Adds every factor of `w` of length ≤ maxlen.
    void insert_closed(Word const& w) {
      check_word_over(w, _alphabet, "language word");
      for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t len = 1; len <= _maxlen && p + len <= w.size();
             ++len) {
          _words.insert(w.substr(p, len));
        }
      }
    }

    //! Members of length exactly `k`.
    [[nodiscard]] WordSet words_of_length(std::size_t k) const {
      WordSet result;
      auto    first = _words.lower_bound(Word(std::vector<Letter>(k, 0)));
      for (auto it = first; it != _words.end() && it->size() == k; ++it) {
        result.insert(*it);
      }
      return result;
    }

    friend bool operator==(FactorLanguage const&,
                           FactorLanguage const&) = default;

   private:
    Alphabet    _alphabet;
    std::size_t _maxlen;
    WordSet     _words;
  };

  //! All factors of length ≤ n of the given words.
  inline FactorLanguage factorial_closure(Alphabet const& alphabet,
                                          WordSet const&  words,
                                          std::size_t     n) {
    FactorLanguage result(alphabet, n);
    for (auto const& w : words) {
      result.insert_closed(w);
    }
    return result;
  }

  //! Every word of length ≤ n: the language of the full shift.
  inline FactorLanguage full_language(Alphabet const& alphabet, std::size_t n) {
    FactorLanguage result(alphabet, n);
    for (std::size_t len = 1; len <= n; ++len) {
      for_each_word(alphabet.size(), len,
                    [&](Word const& w) { result.insert_closed(w); });
    }
    return result;
  }

  //! Factors of length ≤ n of the periodic word w_0 w_0 w_0 ..., where w_0
  //! is the primitive root of `w`.
  inline FactorLanguage periodic_orbit_language(Alphabet const& alphabet,
                                                Word const&     w,
                                                std::size_t     n) {
    if (w.empty()) {
      throw InvalidArgument("periodic orbit of the empty word");
    }
    check_word_over(w, alphabet, "periodic word");
    Word const     root = primitive_root(w).root;
    FactorLanguage result(alphabet, n);
    for (std::size_t p = 0; p < root.size(); ++p) {
      result.insert_closed(periodic_factor(root, p, n));
    }
    return result;
  }

  //! L ∪ L', truncated at the smaller maxlen.
  inline FactorLanguage unite(FactorLanguage const& x, FactorLanguage const& y) {
    if (!(x.alphabet() == y.alphabet())) {
      throw InvalidArgument("union of languages over different alphabets");
    }
    FactorLanguage result(x.alphabet(), std::min(x.maxlen(), y.maxlen()));
    for (auto const* lang : {&x, &y}) {
      for (auto const& w : lang->words()) {
        if (w.size() <= result.maxlen()) {
          result.insert_closed(w);
        }
      }
    }
    return result;
  }

  //! Factors of length ≤ n of σ(u) for u ∈ L with |u| ≤ required depth; the
  //! language of the image subshift truncated at n.
  inline FactorLanguage image_language(Morphism const&       sigma,
                                       FactorLanguage const& language,
                                       std::size_t           n) {
    if (!(language.alphabet() == sigma.domain())) {
      throw InvalidArgument(
          "the language alphabet differs from the morphism domain");
    }
    std::size_t const required = required_input_depth(sigma, n);
    if (language.maxlen() < required) {
      throw DepthError(required, language.maxlen(), "image language");
    }
    FactorLanguage result(sigma.codomain(), n);
    for (auto const& u : language.words()) {
      if (u.size() > required) {
        break;  // short-lex order: all remaining words are longer
      }
      result.insert_closed(sigma.apply(u));
    }
    return result;
  }

  //! p_L(k): the number of members of length exactly k.
  inline std::size_t complexity(FactorLanguage const& language, std::size_t k) {
    if (k == 0 || k > language.maxlen()) {
      throw InvalidArgument("complexity needs 1 <= k <= maxlen ("
                            + std::to_string(language.maxlen()) + ")");
    }
    return language.words_of_length(k).size();
  }

  //! True iff every factor of every member is a member.
  inline bool is_factor_closed(FactorLanguage const& language) {
    for (auto const& w : language.words()) {
      if (w.empty() || w.size() > language.maxlen()) {
        return false;
      }
      if (w.size() >= 2
          && (!language.contains(w.substr(1, w.size() - 1))
              || !language.contains(w.substr(0, w.size() - 1)))) {
        return false;
      }
    }
    return true;
  }

}  // namespace mtransfer

#endif  // MTRANSFER_LANGUAGE_HPP_
