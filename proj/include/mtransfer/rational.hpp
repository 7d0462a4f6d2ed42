// Exact nonnegative rational arithmetic, backed by GMP.

#ifndef MTRANSFER_RATIONAL_HPP_
#define MTRANSFER_RATIONAL_HPP_

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"

namespace mtransfer {

  using Rational = mpq_class;

  //! Renders `p/q` in lowest terms, or just `p` when the denominator is 1.
  inline std::string to_string(Rational const& q) {
    return q.get_str();
  }

  //! Parses an integer or `p/q` literal; throws InvalidArgument otherwise.
  inline Rational parse_rational(std::string_view text) {
    auto valid = [](std::string_view s, bool allow_sign) {
      if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          return false;
        }
      }
      return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view{}
                               : text.substr(slash + 1);
    if (!valid(num, true)
        || (slash != std::string_view::npos && !valid(den, false))) {
      throw InvalidArgument("not a rational number: '" + std::string(text)
                            + "'");
    }
    std::string n(num.front() == '+' ? num.substr(1) : num);
    Rational result;
    if (slash == std::string_view::npos) {
      result = Rational(mpz_class(n));
    } else {
      mpz_class d{std::string(den)};
      if (d == 0) {
        throw InvalidArgument("zero denominator in '" + std::string(text)
                              + "'");
      }
      result = Rational(mpz_class(n), d);
      result.canonicalize();
    }
    return result;
  }

}  // namespace mtransfer

#endif  // MTRANSFER_RATIONAL_HPP_
