// The mtransfer command-line front end, as a function so tests can drive it
// without spawning processes.

#ifndef MTRANSFER_TOOLS_CLI_APP_HPP_
#define MTRANSFER_TOOLS_CLI_APP_HPP_

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtransfer/mtransfer.hpp"

namespace mtransfer::cli {

  enum ExitCode : int {
    ok           = 0,
    finding      = 1,
    parse_error  = 2,
    precondition = 3,
  };

  namespace detail {
    // A word argument or file path that cannot be used; reported like a
    // parse error.
    class ArgumentError : public Error {
     public:
      using Error::Error;
    };

    // A file that failed to open or parse, with its path attached.
    class FileError : public ParseError {
     public:
      FileError(std::string const& path, ParseError const& e)
          : ParseError(e.line(), path + ": " + e.message()) {}
    };

    template <typename Reader>
    auto read_file(std::string const& path, Reader&& reader) {
      std::ifstream in(path);
      if (!in) {
        throw ArgumentError("cannot open '" + path + "'");
      }
      try {
        return reader(in);
      } catch (ParseError const& e) {
        throw FileError(path, e);
      }
    }

    // Whitespace separates tokens. A single whitespace-free argument that
    // is not itself a symbol is read one character per token.
    inline std::vector<std::string> argument_tokens(std::string const& text,
                                                    Alphabet const* alphabet,
                                                    bool            compact) {
      if (compact) {
        return mtransfer::detail::split_chars(text);
      }
      auto tokens = mtransfer::detail::split_tokens(text);
      if (tokens.size() == 1
          && (alphabet == nullptr || !alphabet->contains(tokens[0]))) {
        return mtransfer::detail::split_chars(tokens[0]);
      }
      return tokens;
    }

    inline Word argument_word(std::string const& text, Alphabet const& alphabet,
                              bool compact) {
      try {
        return mtransfer::detail::word_from_tokens(
            argument_tokens(text, &alphabet, compact), alphabet);
      } catch (Error const& e) {
        throw ArgumentError(std::string("word argument: ") + e.what());
      }
    }
  }  // namespace detail

  //! Runs one invocation; `args` excludes the program name.
  inline int run_cli(std::vector<std::string> const& args, std::ostream& out,
                     std::ostream& err) {
    CLI::App app{"Measure transfer along non-erasing morphisms"};
    app.require_subcommand(1);
    bool compact = false;
    app.add_flag("--compact", compact,
                 "read words one character per token");

    std::string morphism_path;
    std::string outer_path;
    std::string measure_path;
    std::string language_path;
    std::string word_text;
    std::string alphabet_text;
    std::string out_prefix;
    std::size_t depth  = 0;
    std::size_t maxlen = 0;
    std::size_t bound  = 0;
    std::size_t radius = 0;
    bool        zeros  = false;
    std::function<int()> action;

    auto* transfer = app.add_subcommand("transfer", "transfer a measure table");
    transfer->add_option("morphism", morphism_path)->required();
    transfer->add_option("measure", measure_path)->required();
    transfer->add_option("--depth", depth, "output depth")->required();
    transfer->add_flag("--zeros", zeros, "list zero entries too");

    auto* eval = app.add_subcommand("eval", "evaluate one cylinder");
    eval->add_option("morphism", morphism_path)->required();
    eval->add_option("measure", measure_path)->required();
    eval->add_option("--word", word_text, "target word (\"\" for the empty word)")
        ->required();

    auto* decompose
        = app.add_subcommand("decompose", "canonical decomposition alpha o pi");
    decompose->add_option("morphism", morphism_path)->required();
    decompose->add_option("--out-prefix", out_prefix,
                          "write PREFIX.pi.txt and PREFIX.alpha.txt");

    auto* compose_cmd = app.add_subcommand("compose", "outer o inner");
    compose_cmd->add_option("outer", outer_path)->required();
    compose_cmd->add_option("inner", morphism_path)->required();

    auto* incidence = app.add_subcommand("incidence", "incidence matrix");
    incidence->add_option("morphism", morphism_path)->required();

    auto* characteristic
        = app.add_subcommand("characteristic", "characteristic measure table");
    characteristic->add_option("word,--word", word_text);
    characteristic->add_option("depth,--depth", depth);
    characteristic->add_option("--alphabet", alphabet_text,
                               "alphabet symbols (default: letters of the word)");
    characteristic->add_flag("--zeros", zeros, "list zero entries too");

    auto* image = app.add_subcommand("image-language", "image language");
    image->add_option("morphism", morphism_path)->required();
    image->add_option("language", language_path)->required();
    image->add_option("--maxlen", maxlen)->required();

    auto* check
        = app.add_subcommand("check", "period and orbit diagnostics");
    check->add_option("morphism", morphism_path)->required();
    check->add_option("language", language_path,
                      "language file (default: full language)");
    check->add_option("--bound", bound)->required();

    auto* kirchhoff = app.add_subcommand("kirchhoff", "validate a measure table");
    kirchhoff->add_option("measure", measure_path)->required();

    auto* split = app.add_subcommand("split", "prolongation split U and A");
    split->add_option("morphism", morphism_path)->required();
    split->add_option("language", language_path)->required();
    split->add_option("--word", word_text)->required();
    split->add_option("--n", radius)->required();

    auto morphism = [&](std::string const& path) {
      return detail::read_file(path, [&](std::istream& in) {
        return read_morphism(in, compact);
      });
    };
    auto measure = [&] {
      return detail::read_file(measure_path, [&](std::istream& in) {
        return read_measure(in, compact);
      });
    };
    auto language = [&] {
      return detail::read_file(language_path, [&](std::istream& in) {
        return read_language(in, compact);
      });
    };

    transfer->callback([&] {
      action = [&] {
        auto const sigma = morphism(morphism_path);
        auto const m     = measure();
        write_measure(out, transfer_table(sigma, m, depth), zeros);
        return ok;
      };
    });

    eval->callback([&] {
      action = [&] {
        auto const sigma  = morphism(morphism_path);
        auto const m      = measure();
        auto const target = detail::argument_word(word_text, sigma.codomain(),
                                                  compact);
        out << to_string(transfer_eval(sigma, m, target)) << '\n';
        return ok;
      };
    });

    decompose->callback([&] {
      action = [&] {
        auto const dec = canonical_decomposition(morphism(morphism_path));
        if (out_prefix.empty()) {
          out << "# pi\n";
          write_morphism(out, dec.pi);
          out << "# alpha\n";
          write_morphism(out, dec.alpha);
          return ok;
        }
        for (auto const& [suffix, m] :
             {std::pair{".pi.txt", &dec.pi}, std::pair{".alpha.txt", &dec.alpha}}) {
          std::ofstream file(out_prefix + suffix);
          if (!file) {
            err << "mtransfer: cannot write '" << out_prefix << suffix << "'\n";
            return precondition;
          }
          write_morphism(file, *m);
        }
        return ok;
      };
    });

    compose_cmd->callback([&] {
      action = [&] {
        write_morphism(out, compose(morphism(outer_path), morphism(morphism_path)));
        return ok;
      };
    });

    incidence->callback([&] {
      action = [&] {
        auto const sigma = morphism(morphism_path);
        auto const mat   = incidence_matrix(sigma);
        out << "# columns:";
        for (auto const& s : sigma.domain().symbols()) {
          out << ' ' << s;
        }
        out << '\n';
        for (std::size_t i = 0; i < mat.rows(); ++i) {
          out << sigma.codomain().symbol(static_cast<Letter>(i));
          for (std::size_t j = 0; j < mat.cols(); ++j) {
            out << ' ' << mat(i, j);
          }
          out << '\n';
        }
        return ok;
      };
    });

    characteristic->callback([&] {
      action = [&] {
        if (word_text.empty() || depth == 0) {
          throw InvalidArgument("characteristic needs a word and a depth >= 1");
        }
        std::optional<Alphabet> alphabet;
        if (!alphabet_text.empty()) {
          alphabet = Alphabet(mtransfer::detail::word_tokens(alphabet_text,
                                                             compact));
        } else {
          auto tokens = detail::argument_tokens(word_text, nullptr, compact);
          std::set<std::string> distinct(tokens.begin(), tokens.end());
          alphabet = Alphabet(
              std::vector<std::string>(distinct.begin(), distinct.end()));
        }
        auto const w = detail::argument_word(word_text, *alphabet, compact);
        write_measure(out, characteristic_measure(*alphabet, w, depth), zeros);
        return ok;
      };
    });

    image->callback([&] {
      action = [&] {
        auto const sigma = morphism(morphism_path);
        write_language(out, image_language(sigma, language(), maxlen));
        return ok;
      };
    });

    check->callback([&] {
      action = [&] {
        auto const sigma = morphism(morphism_path);
        auto const lang  = language_path.empty()
                               ? full_language(sigma.domain(), bound)
                               : language();
        auto const period = check_period_preservation(sigma, lang, bound);
        auto const orbit  = check_periodic_orbit_injectivity(sigma, lang, bound);
        write_report(out, {period, orbit}, sigma.domain());
        return period.empty() && orbit.empty() ? ok : finding;
      };
    });

    kirchhoff->callback([&] {
      action = [&] {
        auto const m          = measure();
        auto const violations = validate(m);
        if (violations.empty()) {
          out << "OK\n";
          return ok;
        }
        write_violations(out, violations, m.alphabet());
        return finding;
      };
    });

    split->callback([&] {
      action = [&] {
        auto const sigma = morphism(morphism_path);
        auto const lang  = language();
        auto const w     = detail::argument_word(word_text, sigma.domain(), compact);
        auto const s     = prolongation_split(sigma, lang, w, radius);
        auto emit = [&](char const* label, WordSet const& words) {
          for (auto const& x : words) {
            out << label << ' ' << render(x, sigma.domain()) << '\n';
          }
        };
        emit("U", s.unique);
        emit("A", s.ambiguous);
        return ok;
      };
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "mtransfer: " << e.what() << '\n';
      return parse_error;
    }

    try {
      return action();
    } catch (ParseError const& e) {
      err << "mtransfer: parse error: " << e.what() << '\n';
      return parse_error;
    } catch (detail::ArgumentError const& e) {
      err << "mtransfer: " << e.what() << '\n';
      return parse_error;
    } catch (DepthError const& e) {
      err << "mtransfer: " << e.what() << '\n';
      return precondition;
    } catch (Error const& e) {
      err << "mtransfer: " << e.what() << '\n';
      return precondition;
    }
  }

}  // namespace mtransfer::cli

#endif  // MTRANSFER_TOOLS_CLI_APP_HPP_
