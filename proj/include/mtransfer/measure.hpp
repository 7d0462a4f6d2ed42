// Finite-depth weight tables representing shift-invariant measures.

#ifndef MTRANSFER_MEASURE_HPP_
#define MTRANSFER_MEASURE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace mtransfer {

  //! The weight function w ↦ μ([w]) of an invariant measure, truncated at
  //! words of length `depth()`.
  //!
  //! Only strictly positive values are stored; an absent word has value 0.
  //! The empty word evaluates to the total mass, which is stored rather
  //! than derived so that depth-1 tables can be checked against it.
  class MeasureTable {
   public:
    using container_type = std::map<Word, Rational>;

    MeasureTable(Alphabet alphabet, std::size_t depth, Rational total_mass = 0)
        : _alphabet(std::move(alphabet)), _depth(depth) {
      if (_depth == 0) {
        throw InvalidArgument("a measure table needs depth >= 1");
      }
      set_total_mass(std::move(total_mass));
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t     depth() const noexcept { return _depth; }
    [[nodiscard]] Rational const& total_mass() const noexcept { return _mass; }

    //! Stored (strictly positive) entries, in short-lex order.
    [[nodiscard]] container_type const& entries() const noexcept {
      return _values;
    }

    [[nodiscard]] Rational value(Word const& w) const {
      if (w.empty()) {
        return _mass;
      }
      if (w.size() > _depth) {
        throw DepthError(w.size(), _depth, "measure table lookup");
      }
      auto it = _values.find(w);
      return it == _values.end() ? Rational(0) : it->second;
    }

    [[nodiscard]] Rational operator()(Word const& w) const { return value(w); }

    void set(Word const& w, Rational v) {
      check_entry(w, v);
      if (v == 0) {
        _values.erase(w);
      } else {
        _values.insert_or_assign(w, std::move(v));
      }
    }

    void add(Word const& w, Rational const& v) {
      set(w, value(w) + v);
    }

    void set_total_mass(Rational mass) {
      if (mass < 0) {
        throw InvalidArgument("total mass must be nonnegative");
      }
      _mass = std::move(mass);
    }

    //! The same table restricted to words of length ≤ `depth`.
    [[nodiscard]] MeasureTable truncated(std::size_t depth) const {
      if (depth > _depth) {
        throw DepthError(depth, _depth, "truncating a measure table");
      }
      MeasureTable result(_alphabet, depth, _mass);
      for (auto const& [w, v] : _values) {
        if (w.size() <= depth) {
          result._values.emplace(w, v);
        }
      }
      return result;
    }

    friend bool operator==(MeasureTable const& x, MeasureTable const& y) {
      return x._alphabet == y._alphabet && x._depth == y._depth
             && x._mass == y._mass && x._values == y._values;
    }

   private:
    void check_entry(Word const& w, Rational const& v) const {
      if (w.empty() || w.size() > _depth) {
        throw InvalidArgument("measure table entries need length 1.."
                              + std::to_string(_depth));
      }
      check_word_over(w, _alphabet, "measure table entry");
      if (v < 0) {
        throw InvalidArgument("measure values must be nonnegative");
      }
    }

    Alphabet       _alphabet;
    std::size_t    _depth;
    Rational       _mass;
    container_type _values;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  struct Violation {
    enum class Kind { left_extension, right_extension, level_sum };

    Kind        kind;
    Word        word;   // the word whose extensions do not sum up; empty for
                        // level sums
    std::size_t level;  // length of the extensions / of the level
    Rational    expected;
    Rational    actual;
  };

  inline std::string to_string(Violation::Kind kind) {
    switch (kind) {
      case Violation::Kind::left_extension:
        return "left-extension";
      case Violation::Kind::right_extension:
        return "right-extension";
      case Violation::Kind::level_sum:
        return "level-sum";
    }
    return "?";
  }

  //! Checks the Kirchhoff equalities Σ_a μ(aw) = Σ_a μ(wa) = μ(w) for all
  //! 1 ≤ |w| < depth, and that every level sums to the total mass. Returns
  //! the violations, empty iff the table is consistent.
  inline std::vector<Violation> validate(MeasureTable const& m) {
    std::vector<Violation> out;
    std::size_t const      depth = m.depth();

    std::vector<Rational> level(depth + 1, 0);
    for (auto const& [w, v] : m.entries()) {
      level[w.size()] += v;
    }
    for (std::size_t k = 1; k <= depth; ++k) {
      if (level[k] != m.total_mass()) {
        out.push_back({Violation::Kind::level_sum, Word{}, k, m.total_mass(),
                       level[k]});
      }
    }

    // A word of value 0 can only fail if one of its extensions is stored, so
    // it suffices to look at stored words and at the shorter words obtained
    // by deleting the first or last letter of a stored word.
    WordSet to_check;
    for (auto const& [w, v] : m.entries()) {
      if (w.size() < depth) {
        to_check.insert(w);
      }
      if (w.size() >= 2) {
        to_check.insert(w.substr(1, w.size() - 1));
        to_check.insert(w.substr(0, w.size() - 1));
      }
    }
    auto const k = static_cast<Letter>(m.alphabet().size());
    for (auto const& w : to_check) {
      Rational const expected = m.value(w);
      Rational       left     = 0;
      Rational       right    = 0;
      for (Letter a = 0; a < k; ++a) {
        left += m.value(Word{a} + w);
        right += m.value(w + Word{a});
      }
      if (left != expected) {
        out.push_back({Violation::Kind::left_extension, w, w.size() + 1,
                       expected, left});
      }
      if (right != expected) {
        out.push_back({Violation::Kind::right_extension, w, w.size() + 1,
                       expected, right});
      }
    }
    return out;
  }

  inline bool is_valid(MeasureTable const& m) {
    return validate(m).empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructors
  ////////////////////////////////////////////////////////////////////////

  //! μ_w truncated at `depth`: r times the counting measure on the periodic
  //! orbit of w_0, where w = w_0^r with w_0 primitive. Total mass |w|.
  inline MeasureTable characteristic_measure(Alphabet const& alphabet,
                                             Word const&     w,
                                             std::size_t     depth) {
    if (w.empty()) {
      throw InvalidArgument("characteristic measure of the empty word");
    }
    check_word_over(w, alphabet, "characteristic word");
    auto const [root, exponent] = primitive_root(w);
    MeasureTable m(alphabet, depth, Rational(w.size()));
    for (std::size_t p = 0; p < root.size(); ++p) {
      for (std::size_t len = 1; len <= depth; ++len) {
        m.add(periodic_factor(root, p, len), Rational(exponent));
      }
    }
    return m;
  }

  //! The zero measure.
  inline MeasureTable zero_measure(Alphabet const& alphabet,
                                   std::size_t     depth) {
    return MeasureTable(alphabet, depth, 0);
  }

  //! Σ λ_i m_i with λ_i ≥ 0, at the smallest depth among the terms.
  inline MeasureTable linear_combination(
      std::vector<std::pair<Rational, MeasureTable>> const& terms) {
    if (terms.empty()) {
      throw InvalidArgument("linear combination of no terms");
    }
    Alphabet const& alphabet = terms.front().second.alphabet();
    std::size_t     depth    = terms.front().second.depth();
    for (auto const& [lambda, m] : terms) {
      if (!(m.alphabet() == alphabet)) {
        throw InvalidArgument("linear combination over different alphabets");
      }
      if (lambda < 0) {
        throw InvalidArgument("linear combination with a negative coefficient");
      }
      depth = std::min(depth, m.depth());
    }
    MeasureTable result(alphabet, depth);
    Rational     mass = 0;
    for (auto const& [lambda, m] : terms) {
      if (lambda == 0) {
        continue;
      }
      mass += lambda * m.total_mass();
      for (auto const& [w, v] : m.entries()) {
        if (w.size() <= depth) {
          result.add(w, lambda * v);
        }
      }
    }
    result.set_total_mass(mass);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived data
  ////////////////////////////////////////////////////////////////////////

  //! (μ([a]))_a in alphabet order.
  inline std::vector<Rational> frequency_vector(MeasureTable const& m) {
    std::vector<Rational> v;
    for (Letter a = 0; a < m.alphabet().size(); ++a) {
      v.push_back(m.value(Word{a}));
    }
    return v;
  }

  //! Words of length ≤ depth with positive value: the support language,
  //! truncated.
  inline WordSet support_words(MeasureTable const& m) {
    WordSet result;
    for (auto const& [w, v] : m.entries()) {
      result.insert(w);
    }
    return result;
  }

}  // namespace mtransfer

#endif  // MTRANSFER_MEASURE_HPP_
