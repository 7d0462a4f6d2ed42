// Non-erasing free monoid morphisms: application, composition, incidence
// matrices, the subdivision / letter-to-letter decomposition, and essential
// occurrences.

#ifndef MTRANSFER_MORPHISM_HPP_
#define MTRANSFER_MORPHISM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace mtransfer {

  //! A non-erasing morphism from the free monoid over `domain()` to the free
  //! monoid over `codomain()`, given by one image word per domain letter.
  class Morphism {
   public:
    Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
        : _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _images(std::move(images)) {
      if (_images.size() != _domain.size()) {
        throw InvalidArgument("a morphism needs exactly one image per letter");
      }
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if (_images[i].empty()) {
          throw InvalidArgument("erasing morphism: '" + _domain.symbol(i)
                                + "' has an empty image");
        }
        check_word_over(_images[i], _codomain,
                        "image of '" + _domain.symbol(i) + "'");
      }
    }

    static Morphism identity(Alphabet const& alphabet) {
      std::vector<Word> images;
      for (Letter x = 0; x < alphabet.size(); ++x) {
        images.push_back(Word{x});
      }
      return Morphism(alphabet, alphabet, std::move(images));
    }

    [[nodiscard]] Alphabet const& domain() const noexcept { return _domain; }
    [[nodiscard]] Alphabet const& codomain() const noexcept {
      return _codomain;
    }

    [[nodiscard]] Word const& image(Letter x) const { return _images.at(x); }
    [[nodiscard]] std::vector<Word> const& images() const noexcept {
      return _images;
    }

    //! Concatenation of the letter images; the empty word maps to itself.
    [[nodiscard]] Word apply(Word const& w) const {
      Word result;
      for (Letter x : w) {
        if (x >= _images.size()) {
          throw InvalidArgument("word contains a letter outside the domain");
        }
        result += _images[x];
      }
      return result;
    }

    [[nodiscard]] Word operator()(Word const& w) const { return apply(w); }

    //! Image lengths |σ(a)|, in domain order.
    [[nodiscard]] std::vector<std::size_t> lengths() const {
      std::vector<std::size_t> result;
      for (auto const& img : _images) {
        result.push_back(img.size());
      }
      return result;
    }

    [[nodiscard]] bool is_letter_to_letter() const {
      return std::all_of(_images.begin(), _images.end(),
                         [](Word const& w) { return w.size() == 1; });
    }

    friend bool operator==(Morphism const&, Morphism const&) = default;

   private:
    Alphabet          _domain;
    Alphabet          _codomain;
    std::vector<Word> _images;
  };

  //! `outer ∘ inner`, i.e. the morphism a ↦ outer(inner(a)).
  inline Morphism compose(Morphism const& outer, Morphism const& inner) {
    if (!(inner.codomain() == outer.domain())) {
      throw InvalidArgument(
          "cannot compose: codomain of the inner morphism differs from the "
          "domain of the outer morphism");
    }
    std::vector<Word> images;
    for (auto const& img : inner.images()) {
      images.push_back(outer.apply(img));
    }
    return Morphism(inner.domain(), outer.codomain(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Incidence matrix
  ////////////////////////////////////////////////////////////////////////

  //! Dense nonnegative integer matrix; rows are codomain letters, columns
  //! domain letters.
  class IncidenceMatrix {
   public:
    IncidenceMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const noexcept { return _rows; }
    [[nodiscard]] std::size_t cols() const noexcept { return _cols; }

    [[nodiscard]] std::uint64_t operator()(std::size_t i,
                                           std::size_t j) const {
      return _data[i * _cols + j];
    }
    std::uint64_t& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }

    friend IncidenceMatrix operator*(IncidenceMatrix const& x,
                                     IncidenceMatrix const& y) {
      if (x._cols != y._rows) {
        throw InvalidArgument("incidence matrix dimensions do not match");
      }
      IncidenceMatrix result(x._rows, y._cols);
      for (std::size_t i = 0; i < x._rows; ++i) {
        for (std::size_t k = 0; k < x._cols; ++k) {
          for (std::size_t j = 0; j < y._cols; ++j) {
            result(i, j) += x(i, k) * y(k, j);
          }
        }
      }
      return result;
    }

    friend bool operator==(IncidenceMatrix const&,
                           IncidenceMatrix const&) = default;

   private:
    std::size_t                _rows;
    std::size_t                _cols;
    std::vector<std::uint64_t> _data;
  };

  //! Entry (b, a) is the number of occurrences of b in σ(a).
  inline IncidenceMatrix incidence_matrix(Morphism const& sigma) {
    IncidenceMatrix m(sigma.codomain().size(), sigma.domain().size());
    for (Letter a = 0; a < sigma.domain().size(); ++a) {
      for (Letter b : sigma.image(a)) {
        ++m(b, a);
      }
    }
    return m;
  }

  struct Norms {
    std::size_t max_len;  // ‖σ‖
    std::size_t min_len;  // ⟨σ⟩
  };

  inline Norms norms(Morphism const& sigma) {
    auto lens = sigma.lengths();
    auto [lo, hi] = std::minmax_element(lens.begin(), lens.end());
    return {*hi, *lo};
  }

  ////////////////////////////////////////////////////////////////////////
  // Subdivision and canonical decomposition
  ////////////////////////////////////////////////////////////////////////

  //! Token of the k-th (1-based) subdivision letter of `symbol`.
  inline std::string subdivision_token(std::string const& symbol,
                                       std::size_t        k) {
    return symbol + "." + std::to_string(k);
  }

  //! The alphabet of letters (a, k), 1 ≤ k ≤ ℓ(a), ordered by a then k.
  inline Alphabet subdivision_alphabet(Alphabet const&                 domain,
                                       std::vector<std::size_t> const& lengths) {
    if (lengths.size() != domain.size()) {
      throw InvalidArgument("one subdivision length per letter is required");
    }
    std::vector<std::string> symbols;
    for (Letter a = 0; a < domain.size(); ++a) {
      if (lengths[a] == 0) {
        throw InvalidArgument("subdivision length of '" + domain.symbol(a)
                              + "' must be at least 1");
      }
      for (std::size_t k = 1; k <= lengths[a]; ++k) {
        symbols.push_back(subdivision_token(domain.symbol(a), k));
      }
    }
    return Alphabet(std::move(symbols));
  }

  //! π_ℓ : a ↦ (a,1)(a,2)...(a,ℓ(a)).
  inline Morphism subdivision_morphism(Alphabet const&                 domain,
                                       std::vector<std::size_t> const& lengths) {
    Alphabet          target = subdivision_alphabet(domain, lengths);
    std::vector<Word> images;
    Letter            next = 0;
    for (Letter a = 0; a < domain.size(); ++a) {
      Word img;
      for (std::size_t k = 0; k < lengths[a]; ++k) {
        img.push_back(next++);
      }
      images.push_back(std::move(img));
    }
    return Morphism(domain, std::move(target), std::move(images));
  }

  //! Overload accepting signed lengths, so nonpositive values are reported
  //! rather than wrapped.
  inline Morphism subdivision_morphism(Alphabet const&              domain,
                                       std::vector<long long> const& lengths) {
    std::vector<std::size_t> checked;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (lengths[i] <= 0) {
        throw InvalidArgument("subdivision length must be at least 1, got "
                              + std::to_string(lengths[i]));
      }
      checked.push_back(static_cast<std::size_t>(lengths[i]));
    }
    return subdivision_morphism(domain, checked);
  }

  //! σ = α_σ ∘ π_σ with π_σ the subdivision morphism for ℓ_σ(a) = |σ(a)| and
  //! α_σ the letter-to-letter morphism (a,k) ↦ k-th letter of σ(a).
  struct SubdivisionData {
    Alphabet alphabet;
    Morphism pi;
    Morphism alpha;
  };

  inline SubdivisionData canonical_decomposition(Morphism const& sigma) {
    Morphism          pi = subdivision_morphism(sigma.domain(), sigma.lengths());
    std::vector<Word> images;
    for (auto const& img : sigma.images()) {
      for (Letter b : img) {
        images.push_back(Word{b});
      }
    }
    Morphism alpha(pi.codomain(), sigma.codomain(), std::move(images));
    return {pi.codomain(), std::move(pi), std::move(alpha)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Essential occurrences
  ////////////////////////////////////////////////////////////////////////

  //! ⌊σ(w)⌋_{w'}: occurrences of `target` in σ(w) that start inside the
  //! block σ(x_1) and end inside the block σ(x_n).
  inline std::size_t essential_occurrences(Morphism const& sigma,
                                           Word const&     w,
                                           Word const&     target) {
    if (w.empty() || target.empty()) {
      throw InvalidArgument("essential occurrences need non-empty words");
    }
    Word const        image = sigma.apply(w);
    std::size_t const first_block = sigma.image(w.front()).size();
    std::size_t const last_start  = image.size() - sigma.image(w.back()).size();
    std::size_t const len         = target.size();
    if (len > image.size()) {
      return 0;
    }
    // start p < first_block, end p + len - 1 >= last_start
    std::size_t lo = last_start + 1 > len ? last_start + 1 - len : 0;
    std::size_t hi = std::min(first_block, image.size() - len + 1);
    std::size_t count = 0;
    for (std::size_t p = lo; p < hi; ++p) {
      if (std::equal(target.begin(), target.end(), image.begin() + p)) {
        ++count;
      }
    }
    return count;
  }

  struct LengthInterval {
    std::size_t lo;
    std::size_t hi;

    [[nodiscard]] bool contains(std::size_t n) const noexcept {
      return lo <= n && n <= hi;
    }
  };

  //! Lengths |w| for which σ(w) can contain an essential occurrence of a word
  //! of length `target_len` ≥ 2.
  inline LengthInterval candidate_lengths(Morphism const& sigma,
                                          std::size_t     target_len) {
    if (target_len < 2) {
      throw InvalidArgument("candidate lengths need a target of length >= 2");
    }
    auto const [max_len, min_len] = norms(sigma);
    return {(target_len + max_len - 1) / max_len,
            (target_len - 2) / min_len + 2};
  }

}  // namespace mtransfer

#endif  // MTRANSFER_MORPHISM_HPP_
