#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qme {

using Q = mpq_class;

enum class ErrorKind { Config, Usage, Parse, Range, Integrity, Precondition };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Accepts "p", "-p", "p/q"; the result is canonical.
Q parse_rational(std::string_view text);
std::string to_string(const Q& q);

inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace qme

namespace qme {

inline Q make_q(long num, long den = 1) {
  Q q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace qme
