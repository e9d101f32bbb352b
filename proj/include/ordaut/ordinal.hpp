#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordaut {

using Natural = boost::multiprecision::cpp_int;

struct Term {
  std::size_t exponent = 0;
  Natural coefficient = 1;

  bool operator==(const Term&) const = default;
};

// An ordinal below w^w in Cantor normal form:
//   w^e0 * c0 + w^e1 * c1 + ... with e0 > e1 > ... and every ci >= 1.
// The empty term list is the ordinal 0.
class Cnf {
 public:
  Cnf() = default;

  // Throws std::invalid_argument unless `terms` is already normal.
  explicit Cnf(std::vector<Term> terms);

  static Cnf finite(const Natural& n);
  static Cnf omega_power(std::size_t exponent, const Natural& coefficient = 1);

  // Grammar (whitespace is free):
  //   cnf  := "0" | term ("+" term)*
  //   term := "w" ("^" nat)? ("*" pos)? | pos
  // Terms are summed left to right, so "w + w^2" reads as w^2.
  static Cnf parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;

  // Leading exponent. Throws PreconditionError on 0.
  std::size_t degree() const;

  bool operator==(const Cnf&) const = default;
  std::strong_ordering operator<=>(const Cnf& other) const;

 private:
  std::vector<Term> terms_;
};

// Ordinal sum (not commutative).
Cnf operator+(const Cnf& a, const Cnf& b);
Cnf& operator+=(Cnf& a, const Cnf& b);

// a * w, which is w^(degree(a) + 1) for a != 0.
Cnf times_omega(const Cnf& a);

std::string to_string(const Cnf& a);

}  // namespace ordaut
