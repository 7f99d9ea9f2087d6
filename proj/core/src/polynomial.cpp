#include "qwilson/polynomial.hpp"

#include <cassert>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

#include "qwilson/number_theory.hpp"

namespace qwilson {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(BigInt c) {
  Polynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

Polynomial Polynomial::monomial(BigInt c, std::size_t k) {
  Polynomial p;
  if (c != 0) {
    p.coeffs_.resize(k + 1);
    p.coeffs_[k] = std::move(c);
  }
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigInt Polynomial::coefficient(std::size_t k) const {
  if (k >= coeffs_.size()) return 0;
  return coeffs_[k];
}

const BigInt& Polynomial::leading_coefficient() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

BigInt Polynomial::eval_at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

Polynomial Polynomial::substitute_power(unsigned k) const {
  assert(k >= 1);
  if (is_zero() || k == 1) return *this;
  std::vector<BigInt> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(),
                 rhs.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const BigInt a = abs(c);
    if (k == 0) {
      out << a;
    } else {
      if (a != 1) out << a << '*';
      out << 'q';
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::string take_digits(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return std::string(text.substr(start, pos - start));
}

// One term of the grammar: INT | INT '*' MONO | MONO, with MONO one of
// 'q' or 'q^' INT.  Returns (exponent, coefficient magnitude).
std::pair<std::size_t, BigInt> parse_term(std::string_view text, std::size_t& pos) {
  BigInt coeff = 1;
  bool saw_coeff = false;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    coeff = BigInt(take_digits(text, pos), 10);
    saw_coeff = true;
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      skip_ws(text, pos);
    } else {
      return {0, coeff};  // bare integer term
    }
  }
  if (pos >= text.size() || text[pos] != 'q') {
    throw ParseError(saw_coeff ? "polynomial: expected 'q' after '*'"
                               : "polynomial: expected a term");
  }
  ++pos;
  std::size_t exponent = 1;
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    std::string digits = take_digits(text, pos);
    if (digits.empty()) throw ParseError("polynomial: expected exponent after '^'");
    try {
      exponent = std::stoul(digits);
    } catch (const std::out_of_range&) {
      throw ParseError("polynomial: exponent out of range");
    }
  }
  return {exponent, coeff};
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  std::size_t pos = 0;
  skip_ws(text, pos);
  if (pos == text.size()) throw ParseError("polynomial: empty input");

  std::map<std::size_t, BigInt> terms;
  bool negative = false;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
    skip_ws(text, pos);
  }
  while (true) {
    auto [exponent, magnitude] = parse_term(text, pos);
    terms[exponent] += negative ? BigInt(-magnitude) : magnitude;
    skip_ws(text, pos);
    if (pos == text.size()) break;
    if (text[pos] == '+') {
      negative = false;
    } else if (text[pos] == '-') {
      negative = true;
    } else {
      throw ParseError("polynomial: expected '+' or '-' between terms");
    }
    ++pos;
    skip_ws(text, pos);
  }

  std::vector<BigInt> coeffs;
  if (!terms.empty()) coeffs.resize(terms.rbegin()->first + 1);
  for (auto& [exponent, value] : terms) coeffs[exponent] = std::move(value);
  return Polynomial(std::move(coeffs));
}

DivModResult divmod(const Polynomial& a, const Polynomial& m) {
  if (m.is_zero()) throw ZeroModulus("divmod: modulus is zero");
  if (!m.is_monic()) throw NonMonicModulus("divmod: modulus is not monic");

  const std::size_t md = *m.degree();
  if (a.is_zero() || *a.degree() < md) return {Polynomial(), a};

  const std::size_t ad = *a.degree();
  std::vector<BigInt> rem(a.coefficients());
  std::vector<BigInt> quot(ad - md + 1);
  const std::vector<BigInt>& mc = m.coefficients();
  for (std::size_t i = ad + 1; i-- > md;) {
    if (rem[i] == 0) continue;
    BigInt c = std::move(rem[i]);
    rem[i] = 0;
    for (std::size_t j = 0; j < md; ++j) {
      mpz_submul(rem[i - md + j].get_mpz_t(), c.get_mpz_t(), mc[j].get_mpz_t());
    }
    quot[i - md] = std::move(c);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial mod(const Polynomial& a, const Polynomial& m) {
  return divmod(a, m).remainder;
}

Polynomial cyclotomic(unsigned n) {
  assert(n >= 1);
  static std::mutex table_mutex;
  static std::map<unsigned, Polynomial> table;
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table.find(n);
    if (it != table.end()) return it->second;
  }

  Polynomial phi;
  if (n == 1) {
    phi = Polynomial({-1, 1});  // q - 1
  } else {
    // (q^n - 1) / prod of Phi_d over proper divisors d | n.
    Polynomial denominator = Polynomial::constant(1);
    for (std::uint64_t d : divisors(n)) {
      if (d < n) denominator *= cyclotomic(static_cast<unsigned>(d));
    }
    Polynomial numerator = Polynomial::monomial(1, n) - Polynomial::constant(1);
    DivModResult division = divmod(numerator, denominator);
    assert(division.remainder.is_zero());
    phi = std::move(division.quotient);
  }

  std::lock_guard<std::mutex> lock(table_mutex);
  return table.emplace(n, std::move(phi)).first->second;
}

}  // namespace qwilson
