// Text formats for morphisms, measure tables, factor languages and reports.
//
// All formats are line based, UTF-8, with `#` comment lines and blank lines
// ignored. Words are whitespace-separated tokens. With `compact` set, word
// fields are instead read one character per token.
//
//   morphism:  [!domain <tokens>] [!codomain <tokens>]
//              <token> -> <token> <token> ...
//   measure:   !alphabet <tokens>, !depth D, !mass p/q,
//              then <word tokens> TAB <p/q>
//   language:  !alphabet <tokens>, !maxlen n, then one word per line

#ifndef MTRANSFER_IO_HPP_
#define MTRANSFER_IO_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "diagnostics.hpp"
#include "error.hpp"
#include "language.hpp"
#include "measure.hpp"
#include "morphism.hpp"
#include "rational.hpp"
#include "words.hpp"

namespace mtransfer {

  namespace detail {
    inline std::vector<std::string> split_tokens(std::string_view text) {
      std::istringstream       in{std::string(text)};
      std::vector<std::string> tokens;
      std::string              token;
      while (in >> token) {
        tokens.push_back(token);
      }
      return tokens;
    }

    inline std::vector<std::string> split_chars(std::string_view text) {
      std::vector<std::string> tokens;
      for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) == 0) {
          tokens.emplace_back(1, c);
        }
      }
      return tokens;
    }

    inline std::vector<std::string> word_tokens(std::string_view text,
                                                bool             compact) {
      return compact ? split_chars(text) : split_tokens(text);
    }

    inline std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n\f\v";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    }

    // Calls `f(line_number, trimmed_line)` for every non-blank,
    // non-comment line.
    template <typename Func>
    void for_each_line(std::istream& in, Func&& f) {
      std::string line;
      std::size_t number = 0;
      while (std::getline(in, line)) {
        ++number;
        auto t = trim(line);
        if (t.empty() || t.front() == '#') {
          continue;
        }
        f(number, t);
      }
    }

    // Header line `!name rest`; returns nullopt for a non-header line.
    inline std::optional<std::pair<std::string, std::string_view>>
    header(std::string_view line) {
      if (line.front() != '!') {
        return std::nullopt;
      }
      auto sp   = line.find_first_of(" \t");
      auto name = std::string(line.substr(1, sp == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : sp - 1));
      auto rest = sp == std::string_view::npos ? std::string_view{}
                                               : trim(line.substr(sp));
      return std::make_pair(name, rest);
    }

    inline std::size_t parse_count(std::string_view text, std::size_t line,
                                   std::string const& what) {
      std::size_t value = 0;
      if (text.empty()) {
        throw ParseError(line, what + " expects a positive integer");
      }
      for (char c : text) {
        if (c < '0' || c > '9') {
          throw ParseError(line, what + " expects a positive integer, got '"
                                     + std::string(text) + "'");
        }
        value = value * 10 + static_cast<std::size_t>(c - '0');
      }
      if (value == 0) {
        throw ParseError(line, what + " must be at least 1");
      }
      return value;
    }

    template <typename Func>
    auto at_line(std::size_t line, Func&& f) {
      try {
        return f();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(line, e.what());
      }
    }

    inline Word word_from_tokens(std::vector<std::string> const& tokens,
                                 Alphabet const&                 alphabet) {
      Word w;
      for (auto const& t : tokens) {
        w.push_back(alphabet.letter(t));
      }
      return w;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  inline Morphism read_morphism(std::istream& in, bool compact = false) {
    std::optional<Alphabet>  declared_domain;
    std::optional<Alphabet>  declared_codomain;
    std::vector<std::string> domain_order;
    std::vector<std::string> codomain_order;
    std::map<std::string, std::pair<std::vector<std::string>, std::size_t>>
                rules;
    std::size_t last_line = 0;

    detail::for_each_line(in, [&](std::size_t line, std::string_view text) {
      last_line = line;
      if (auto h = detail::header(text)) {
        auto const& [name, rest] = *h;
        if (!rules.empty()) {
          throw ParseError(line, "header lines must precede the rules");
        }
        auto tokens = detail::split_tokens(rest);
        if (name == "domain") {
          declared_domain = detail::at_line(line, [&] { return Alphabet(tokens); });
        } else if (name == "codomain") {
          declared_codomain
              = detail::at_line(line, [&] { return Alphabet(tokens); });
        } else {
          throw ParseError(line, "unknown header '!" + name + "'");
        }
        return;
      }
      auto arrow = text.find("->");
      if (arrow == std::string_view::npos) {
        throw ParseError(line, "expected '<letter> -> <image>'");
      }
      auto lhs = detail::split_tokens(text.substr(0, arrow));
      auto rhs = detail::word_tokens(text.substr(arrow + 2), compact);
      if (lhs.size() != 1) {
        throw ParseError(line, "the left-hand side must be a single letter");
      }
      if (rhs.empty()) {
        throw ParseError(line, "erasing rule: '" + lhs[0]
                                   + "' has an empty image");
      }
      if (declared_domain && !declared_domain->contains(lhs[0])) {
        throw ParseError(line, "'" + lhs[0] + "' is not in the declared domain");
      }
      if (rules.count(lhs[0]) != 0) {
        throw ParseError(line, "duplicate rule for '" + lhs[0] + "'");
      }
      for (auto const& t : rhs) {
        if (declared_codomain) {
          if (!declared_codomain->contains(t)) {
            throw ParseError(line,
                             "'" + t + "' is not in the declared codomain");
          }
        } else if (std::find(codomain_order.begin(), codomain_order.end(), t)
                   == codomain_order.end()) {
          codomain_order.push_back(t);
        }
      }
      domain_order.push_back(lhs[0]);
      rules.emplace(lhs[0], std::make_pair(rhs, line));
    });

    if (rules.empty()) {
      throw ParseError(last_line, "a morphism needs at least one rule");
    }
    Alphabet domain = declared_domain ? *declared_domain : Alphabet(domain_order);
    Alphabet codomain
        = declared_codomain ? *declared_codomain : Alphabet(codomain_order);
    std::vector<Word> images;
    for (auto const& a : domain.symbols()) {
      auto it = rules.find(a);
      if (it == rules.end()) {
        throw ParseError(last_line, "no rule for domain letter '" + a + "'");
      }
      images.push_back(detail::word_from_tokens(it->second.first, codomain));
    }
    return Morphism(std::move(domain), std::move(codomain), std::move(images));
  }

  inline Morphism parse_morphism(std::string_view text, bool compact = false) {
    std::istringstream in{std::string(text)};
    return read_morphism(in, compact);
  }

  inline void write_morphism(std::ostream& out, Morphism const& sigma) {
    out << "!domain";
    for (auto const& s : sigma.domain().symbols()) {
      out << ' ' << s;
    }
    out << "\n!codomain";
    for (auto const& s : sigma.codomain().symbols()) {
      out << ' ' << s;
    }
    out << '\n';
    for (Letter a = 0; a < sigma.domain().size(); ++a) {
      out << sigma.domain().symbol(a) << " -> "
          << render(sigma.image(a), sigma.codomain()) << '\n';
    }
  }

  inline std::string to_string(Morphism const& sigma) {
    std::ostringstream out;
    write_morphism(out, sigma);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Measure tables
  ////////////////////////////////////////////////////////////////////////

  inline MeasureTable read_measure(std::istream& in, bool compact = false) {
    std::optional<Alphabet>     alphabet;
    std::optional<std::size_t>  depth;
    std::optional<Rational>     mass;
    std::optional<MeasureTable> table;
    std::size_t                 last_line = 0;

    auto require_headers = [&](std::size_t line) {
      if (!alphabet || !depth || !mass) {
        throw ParseError(line, "measure files need !alphabet, !depth and "
                               "!mass before the entries");
      }
      if (!table) {
        table.emplace(*alphabet, *depth, *mass);
      }
    };

    detail::for_each_line(in, [&](std::size_t line, std::string_view text) {
      last_line = line;
      if (auto h = detail::header(text)) {
        auto const& [name, rest] = *h;
        if (table) {
          throw ParseError(line, "header lines must precede the entries");
        }
        if (name == "alphabet") {
          auto tokens = detail::split_tokens(rest);
          alphabet = detail::at_line(line, [&] { return Alphabet(tokens); });
        } else if (name == "depth") {
          depth = detail::parse_count(rest, line, "!depth");
        } else if (name == "mass") {
          mass = detail::at_line(line, [&] { return parse_rational(rest); });
          if (*mass < 0) {
            throw ParseError(line, "the total mass must be nonnegative");
          }
        } else {
          throw ParseError(line, "unknown header '!" + name + "'");
        }
        return;
      }
      require_headers(line);
      // the value is after the last TAB, or else the last whitespace field
      auto sep = text.find_last_of('\t');
      if (sep == std::string_view::npos) {
        sep = text.find_last_of(' ');
      }
      if (sep == std::string_view::npos) {
        throw ParseError(line, "expected '<word> TAB <value>'");
      }
      auto word_text  = detail::trim(text.substr(0, sep));
      auto value_text = detail::trim(text.substr(sep + 1));
      Word w = detail::at_line(line, [&] {
        return detail::word_from_tokens(detail::word_tokens(word_text, compact),
                                        *alphabet);
      });
      if (w.empty()) {
        throw ParseError(line, "entry without a word (use !mass for the total)");
      }
      if (w.size() > *depth) {
        throw ParseError(line, "word longer than !depth "
                                   + std::to_string(*depth));
      }
      Rational v = detail::at_line(line, [&] { return parse_rational(value_text); });
      if (v < 0) {
        throw ParseError(line, "measure values must be nonnegative");
      }
      if (table->entries().count(w) != 0) {
        throw ParseError(line, "duplicate entry");
      }
      table->set(w, v);
    });
    require_headers(last_line);
    return *table;
  }

  inline MeasureTable parse_measure(std::string_view text, bool compact = false) {
    std::istringstream in{std::string(text)};
    return read_measure(in, compact);
  }

  //! Canonical rendering: headers, then entries in short-lex order. Only
  //! nonzero entries are listed unless `with_zeros` is set.
  inline void write_measure(std::ostream& out, MeasureTable const& m,
                            bool with_zeros = false) {
    out << "!alphabet";
    for (auto const& s : m.alphabet().symbols()) {
      out << ' ' << s;
    }
    out << "\n!depth " << m.depth() << "\n!mass " << to_string(m.total_mass())
        << '\n';
    if (with_zeros) {
      for (std::size_t len = 1; len <= m.depth(); ++len) {
        for_each_word(m.alphabet().size(), len, [&](Word const& w) {
          out << render(w, m.alphabet()) << '\t' << to_string(m.value(w))
              << '\n';
        });
      }
    } else {
      for (auto const& [w, v] : m.entries()) {
        out << render(w, m.alphabet()) << '\t' << to_string(v) << '\n';
      }
    }
  }

  inline std::string to_string(MeasureTable const& m, bool with_zeros = false) {
    std::ostringstream out;
    write_measure(out, m, with_zeros);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Factor languages
  ////////////////////////////////////////////////////////////////////////

  //! Reads a language file and applies factor closure.
  inline FactorLanguage read_language(std::istream& in, bool compact = false) {
    std::optional<Alphabet>       alphabet;
    std::optional<std::size_t>    maxlen;
    std::optional<FactorLanguage> language;
    std::size_t                   last_line = 0;

    auto require_headers = [&](std::size_t line) {
      if (!alphabet || !maxlen) {
        throw ParseError(line, "language files need !alphabet and !maxlen "
                               "before the words");
      }
      if (!language) {
        language.emplace(*alphabet, *maxlen);
      }
    };

    detail::for_each_line(in, [&](std::size_t line, std::string_view text) {
      last_line = line;
      if (auto h = detail::header(text)) {
        auto const& [name, rest] = *h;
        if (language) {
          throw ParseError(line, "header lines must precede the words");
        }
        if (name == "alphabet") {
          auto tokens = detail::split_tokens(rest);
          alphabet = detail::at_line(line, [&] { return Alphabet(tokens); });
        } else if (name == "maxlen") {
          maxlen = detail::parse_count(rest, line, "!maxlen");
        } else {
          throw ParseError(line, "unknown header '!" + name + "'");
        }
        return;
      }
      require_headers(line);
      Word w = detail::at_line(line, [&] {
        return detail::word_from_tokens(detail::word_tokens(text, compact),
                                        *alphabet);
      });
      language->insert_closed(w);
    });
    require_headers(last_line);
    return *language;
  }

  inline FactorLanguage parse_language(std::string_view text,
                                       bool             compact = false) {
    std::istringstream in{std::string(text)};
    return read_language(in, compact);
  }

  inline void write_language(std::ostream& out, FactorLanguage const& language) {
    out << "!alphabet";
    for (auto const& s : language.alphabet().symbols()) {
      out << ' ' << s;
    }
    out << "\n!maxlen " << language.maxlen() << '\n';
    for (auto const& w : language.words()) {
      out << render(w, language.alphabet()) << '\n';
    }
  }

  inline std::string to_string(FactorLanguage const& language) {
    std::ostringstream out;
    write_language(out, language);
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool single_character_symbols(Alphabet const& alphabet) {
      return std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                         [](std::string const& s) { return s.size() == 1; });
    }
  }  // namespace detail

  //! Witness words: written without separators and separated by spaces when
  //! every symbol is a single character, else tokens separated by spaces and
  //! words by " | ".
  inline std::string render_witnesses(std::vector<Word> const& words,
                                      Alphabet const&          alphabet) {
    bool const  compact = detail::single_character_symbols(alphabet);
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i != 0) {
        out += compact ? " " : " | ";
      }
      for (std::size_t j = 0; j < words[i].size(); ++j) {
        if (j != 0 && !compact) {
          out += ' ';
        }
        out += alphabet.symbol(words[i][j]);
      }
    }
    return out;
  }

  //! A `BOUND N` line, a comment marking the result as a finite-scale
  //! necessary condition, then one `VIOLATION <kind> <witnesses>` line per
  //! certificate. All reports must share the same bound.
  inline void write_report(std::ostream&                       out,
                           std::vector<ViolationReport> const& reports,
                           Alphabet const&                     alphabet) {
    if (reports.empty()) {
      return;
    }
    std::size_t const bound = reports.front().bound;
    out << "BOUND " << bound << '\n';
    out << "# necessary condition only: periodic orbits of period <= " << bound
        << '\n';
    for (auto const& report : reports) {
      if (report.bound != bound) {
        throw InvalidArgument("reports with different bounds");
      }
      for (auto const& cert : report.certificates) {
        out << "VIOLATION " << to_string(report.kind) << ' '
            << render_witnesses(cert, alphabet) << '\n';
      }
    }
  }

  inline void write_report(std::ostream& out, ViolationReport const& report,
                           Alphabet const& alphabet) {
    write_report(out, std::vector<ViolationReport>{report}, alphabet);
  }

  inline void write_violations(std::ostream&                 out,
                               std::vector<Violation> const& violations,
                               Alphabet const&               alphabet) {
    for (auto const& v : violations) {
      out << "VIOLATION " << to_string(v.kind) << ' ';
      if (v.kind == Violation::Kind::level_sum) {
        out << "length " << v.level;
      } else {
        out << (v.word.empty() ? std::string("(empty)")
                               : render(v.word, alphabet));
      }
      out << ": expected " << to_string(v.expected) << ", got "
          << to_string(v.actual) << '\n';
    }
  }

}  // namespace mtransfer

#endif  // MTRANSFER_IO_HPP_
