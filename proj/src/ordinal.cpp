#include "ordaut/ordinal.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "ordaut/errors.hpp"

namespace ordaut {

Cnf::Cnf(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient < 1)
      throw std::invalid_argument("CNF coefficient must be positive");
    if (i > 0 && terms_[i - 1].exponent <= terms_[i].exponent)
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
  }
}

Cnf Cnf::finite(const Natural& n) {
  if (n == 0) return {};
  return Cnf({Term{0, n}});
}

Cnf Cnf::omega_power(std::size_t exponent, const Natural& coefficient) {
  if (coefficient == 0) return {};
  return Cnf({Term{exponent, coefficient}});
}

bool Cnf::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0);
}

std::size_t Cnf::degree() const {
  if (terms_.empty()) throw PreconditionError("the degree of 0 is undefined");
  return terms_.front().exponent;
}

std::strong_ordering Cnf::operator<=>(const Cnf& other) const {
  const auto& a = terms_;
  const auto& b = other.terms_;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].exponent != b[i].exponent) return a[i].exponent <=> b[i].exponent;
    if (a[i].coefficient != b[i].coefficient)
      return a[i].coefficient < b[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Cnf operator+(const Cnf& a, const Cnf& b) {
  if (b.is_zero()) return a;
  const auto& lhs = a.terms();
  const auto& rhs = b.terms();
  const std::size_t lead = rhs.front().exponent;

  // Terms of a strictly above the leading exponent of b survive; the rest is
  // absorbed, except for a term of equal exponent which merges its coefficient.
  std::vector<Term> out;
  std::size_t i = 0;
  for (; i < lhs.size() && lhs[i].exponent > lead; ++i) out.push_back(lhs[i]);
  if (i < lhs.size() && lhs[i].exponent == lead) {
    out.push_back(Term{lead, lhs[i].coefficient + rhs.front().coefficient});
    out.insert(out.end(), rhs.begin() + 1, rhs.end());
  } else {
    out.insert(out.end(), rhs.begin(), rhs.end());
  }
  return Cnf(std::move(out));
}

Cnf& operator+=(Cnf& a, const Cnf& b) {
  a = a + b;
  return a;
}

Cnf times_omega(const Cnf& a) {
  if (a.is_zero()) return {};
  return Cnf::omega_power(a.degree() + 1);
}

std::string to_string(const Cnf& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const Term& t : a.terms()) {
    if (!out.empty()) out += " + ";
    if (t.exponent == 0) {
      out += t.coefficient.str();
      continue;
    }
    out += 'w';
    if (t.exponent != 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient != 1) out += '*' + t.coefficient.str();
  }
  return out;
}

namespace {

class CnfParser {
 public:
  explicit CnfParser(std::string_view text) : text_(text) {}

  Cnf parse() {
    skip_space();
    if (at_end()) fail("expected an ordinal");
    // A lone "0" is the zero ordinal; "0" is not a valid term otherwise.
    if (peek() == '0') {
      std::size_t start = pos_;
      Natural n = digits();
      skip_space();
      if (n == 0 && at_end()) return {};
      pos_ = start;
    }
    Cnf sum = term();
    skip_space();
    while (!at_end()) {
      expect('+');
      sum += term();
      skip_space();
    }
    return sum;
  }

 private:
  Cnf term() {
    skip_space();
    if (at_end()) fail("expected a term");
    if (peek() == 'w') {
      ++pos_;
      std::size_t exponent = 1;
      Natural coefficient = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        std::size_t start = pos_;
        Natural e = digits();
        if (e > std::numeric_limits<std::size_t>::max()) fail("exponent too large", start);
        exponent = static_cast<std::size_t>(e);
        skip_space();
      }
      if (!at_end() && peek() == '*') {
        ++pos_;
        coefficient = positive();
      }
      return Cnf::omega_power(exponent, coefficient);
    }
    return Cnf::finite(positive());
  }

  Natural positive() {
    skip_space();
    std::size_t start = pos_;
    Natural n = digits();
    if (n == 0) fail("coefficient must be positive", start);
    return n;
  }

  Natural digits() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    Natural n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (peek() - '0');
      ++pos_;
    }
    return n;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw ParseError("ordinal syntax error at position " + std::to_string(at) + ": " + msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Cnf Cnf::parse(std::string_view text) { return CnfParser(text).parse(); }

}  // namespace ordaut
