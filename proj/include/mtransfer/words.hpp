// Alphabets, finite words, and the combinatorics on words used throughout
// the library: occurrence counting, primitive roots, rotations and factors.

#ifndef MTRANSFER_WORDS_HPP_
#define MTRANSFER_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mtransfer {

  //! Index of a symbol inside its Alphabet.
  using Letter = std::uint32_t;

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  //! A finite, ordered set of distinct tokens.
  //!
  //! Tokens are arbitrary non-empty strings without whitespace, so composite
  //! names such as `a.2` are ordinary symbols. The declaration order fixes
  //! letter indices, matrix rows and columns, and the canonical word order.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols)
        : _symbols(std::move(symbols)) {
      if (_symbols.empty()) {
        throw InvalidArgument("an alphabet must contain at least one symbol");
      }
      for (std::size_t i = 0; i < _symbols.size(); ++i) {
        auto const& s = _symbols[i];
        if (s.empty()
            || std::any_of(s.begin(), s.end(), [](unsigned char c) {
                 return std::isspace(c) != 0;
               })) {
          throw InvalidArgument("invalid symbol '" + s + "'");
        }
        if (!_index.emplace(s, static_cast<Letter>(i)).second) {
          throw InvalidArgument("duplicate symbol '" + s + "'");
        }
      }
    }

    Alphabet(std::initializer_list<char const*> symbols)
        : Alphabet(std::vector<std::string>(symbols.begin(), symbols.end())) {}

    [[nodiscard]] std::size_t size() const noexcept { return _symbols.size(); }
    [[nodiscard]] bool empty() const noexcept { return _symbols.empty(); }

    [[nodiscard]] std::string const& symbol(Letter x) const {
      return _symbols.at(x);
    }

    [[nodiscard]] std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }

    [[nodiscard]] bool contains(std::string_view token) const {
      return _index.find(std::string(token)) != _index.end();
    }

    //! Throws InvalidArgument for a token outside the alphabet.
    [[nodiscard]] Letter letter(std::string_view token) const {
      auto it = _index.find(std::string(token));
      if (it == _index.end()) {
        throw InvalidArgument("symbol '" + std::string(token)
                              + "' is not in the alphabet");
      }
      return it->second;
    }

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._symbols == y._symbols;
    }

   private:
    std::vector<std::string>                _symbols;
    std::unordered_map<std::string, Letter> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  //! A finite sequence of letters, possibly empty.
  //!
  //! Words do not carry their alphabet; the containers holding them
  //! (morphisms, measure tables, languages) do, and check letters on entry.
  //! The ordering is short-lex: by length first, then lexicographic by letter
  //! index, which is the canonical output order everywhere.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    template <typename It>
    Word(It first, It last) : _letters(first, last) {}

    [[nodiscard]] std::size_t size() const noexcept { return _letters.size(); }
    [[nodiscard]] bool        empty() const noexcept { return _letters.empty(); }

    [[nodiscard]] Letter operator[](std::size_t i) const { return _letters[i]; }
    [[nodiscard]] Letter front() const { return _letters.front(); }
    [[nodiscard]] Letter back() const { return _letters.back(); }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept { return _letters.end(); }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    //! The factor of length `len` starting at `pos`.
    [[nodiscard]] Word substr(std::size_t pos, std::size_t len) const {
      return Word(_letters.begin() + pos, _letters.begin() + pos + len);
    }

    void push_back(Letter x) { _letters.push_back(x); }
    void pop_back() { _letters.pop_back(); }

    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other._letters.begin(),
                      other._letters.end());
      return *this;
    }

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }

    friend bool operator==(Word const&, Word const&) = default;

    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      if (auto c = x.size() <=> y.size(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          x._letters.begin(), x._letters.end(), y._letters.begin(),
          y._letters.end());
    }

   private:
    std::vector<Letter> _letters;
  };

  //! Sorted (short-lex) set of words.
  using WordSet = std::set<Word>;

  //! `w` repeated `k` times.
  inline Word power(Word const& w, std::size_t k) {
    Word result;
    for (std::size_t i = 0; i < k; ++i) {
      result += w;
    }
    return result;
  }

  //! True iff every letter of `w` indexes a symbol of `alphabet`.
  inline bool is_word_over(Word const& w, Alphabet const& alphabet) {
    return std::all_of(w.begin(), w.end(),
                       [&](Letter x) { return x < alphabet.size(); });
  }

  inline void check_word_over(Word const& w, Alphabet const& alphabet,
                              std::string_view what) {
    if (!is_word_over(w, alphabet)) {
      throw InvalidArgument(std::string(what)
                            + " contains a letter outside its alphabet");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Text rendering
  ////////////////////////////////////////////////////////////////////////

  //! Whitespace-separated tokens; the empty word renders as "".
  inline std::string render(Word const& w, Alphabet const& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.symbol(w[i]);
    }
    return out;
  }

  //! Parses whitespace-separated tokens.
  inline Word parse_word(std::string_view text, Alphabet const& alphabet) {
    std::istringstream in{std::string(text)};
    Word               w;
    std::string        token;
    while (in >> token) {
      w.push_back(alphabet.letter(token));
    }
    return w;
  }

  //! Parses one token per non-whitespace character.
  inline Word parse_compact_word(std::string_view text,
                                 Alphabet const&  alphabet) {
    Word w;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) {
        w.push_back(alphabet.letter(std::string_view(&c, 1)));
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Occurrences, roots, rotations
  ////////////////////////////////////////////////////////////////////////

  //! Number of (possibly overlapping) occurrences of `u` in `w`.
  inline std::size_t count_occurrences(Word const& w, Word const& u) {
    if (u.empty()) {
      throw InvalidArgument("cannot count occurrences of the empty word");
    }
    if (u.size() > w.size()) {
      return 0;
    }
    std::size_t count = 0;
    for (std::size_t p = 0; p + u.size() <= w.size(); ++p) {
      if (std::equal(u.begin(), u.end(), w.begin() + p)) {
        ++count;
      }
    }
    return count;
  }

  struct PrimitiveRoot {
    Word        root;
    std::size_t exponent;
  };

  //! The unique primitive `root` with `w == power(root, exponent)`.
  inline PrimitiveRoot primitive_root(Word const& w) {
    if (w.empty()) {
      throw InvalidArgument("the empty word has no primitive root");
    }
    std::size_t const n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = w[i] == w[i - d];
      }
      if (periodic) {
        return {w.substr(0, d), n / d};
      }
    }
    return {w, 1};  // unreachable: d == n always succeeds
  }

  //! True iff `w` is non-empty and not a proper power.
  inline bool is_primitive(Word const& w) {
    return !w.empty() && primitive_root(w).exponent == 1;
  }

  //! The cyclic shift of `w` starting at position `k`.
  inline Word rotate(Word const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    Word result = w.substr(k, w.size() - k);
    result += w.substr(0, k);
    return result;
  }

  //! True iff `y` is a cyclic permutation of `x`.
  inline bool is_rotation(Word const& x, Word const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    if (x.empty()) {
      return true;
    }
    Word doubled = x + x;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (std::equal(y.begin(), y.end(), doubled.begin() + k)) {
        return true;
      }
    }
    return false;
  }

  //! Lexicographically least rotation; canonical representative of the
  //! rotation class of `w`.
  inline Word least_rotation(Word const& w) {
    Word best = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
      Word r = rotate(w, k);
      if (r < best) {
        best = r;
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factors
  ////////////////////////////////////////////////////////////////////////

  //! All distinct non-empty factors of `w` of length at most `n`.
  inline WordSet factors(Word const& w, std::size_t n) {
    WordSet result;
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t len = 1; len <= n && p + len <= w.size(); ++len) {
        result.insert(w.substr(p, len));
      }
    }
    return result;
  }

  //! The factor of length `len` starting at offset `start` of the periodic
  //! word w w w ...
  inline Word periodic_factor(Word const& w, std::size_t start,
                              std::size_t len) {
    Word result;
    for (std::size_t i = 0; i < len; ++i) {
      result.push_back(w[(start + i) % w.size()]);
    }
    return result;
  }

  //! Calls `f` on every word of length `len` over `k` letters, in short-lex
  //! order.
  template <typename Func>
  void for_each_word(std::size_t k, std::size_t len, Func&& f) {
    if (k == 0) {
      if (len == 0) {
        f(Word{});
      }
      return;
    }
    std::vector<Letter> letters(len, 0);
    while (true) {
      f(Word(letters));
      std::size_t i = len;
      while (i > 0 && letters[i - 1] + 1 == k) {
        letters[--i] = 0;
      }
      if (i == 0) {
        return;
      }
      ++letters[i - 1];
    }
  }

}  // namespace mtransfer

template <>
struct std::hash<mtransfer::Word> {
  std::size_t operator()(mtransfer::Word const& w) const noexcept {
    std::size_t h = w.size();
    for (auto x : w) {
      h ^= std::hash<mtransfer::Letter>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }
};

#endif  // MTRANSFER_WORDS_HPP_
