#include "fibsum/polynomial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "fibsum/errors.hpp"

namespace fibsum {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& coefficient, int degree) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, BigInt(0));
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (leading() < 0) g = -g;
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(q));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * BigInt(i));
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval IntPolynomial::operator()(const Interval& x) const {
  Interval acc(0L, x.precision());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Interval(*it, x.precision());
  }
  return acc;
}

ComplexBox IntPolynomial::operator()(const ComplexBox& x) const {
  const Precision p = x.precision();
  ComplexBox acc(p);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Interval(*it, p);
  }
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  return a + BigInt(-1) * b;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const BigInt& c, const IntPolynomial& a) {
  std::vector<BigInt> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial char_poly(int k) {
  if (k < 2) throw DomainError("char_poly requires k >= 2");
  std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(-1));
  c.emplace_back(1);
  return IntPolynomial(std::move(c));
}

std::vector<std::vector<BigInt>> sylvester_matrix(std::span<const BigInt> f,
                                                  std::span<const BigInt> g) {
  if (f.empty() || g.empty()) throw DomainError("sylvester_matrix of an empty coefficient list");
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  }
  return s;
}

BigInt resultant_formal(std::span<const BigInt> f, std::span<const BigInt> g) {
  return bareiss_determinant(sylvester_matrix(f, g));
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  return resultant_formal(f.coefficients(), g.coefficients());
}

namespace {

// deg(result) < deg(b); result = c * a - q * b for some nonzero integer c.
IntPolynomial pseudo_remainder(IntPolynomial r, const IntPolynomial& b) {
  const BigInt& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    IntPolynomial shift = IntPolynomial::monomial(r.leading(), r.degree() - b.degree());
    r = lb * r - shift * b;
  }
  return r;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), r.leading().get_mpz_t(), b.leading().get_mpz_t());
    const int shift = r.degree() - b.degree();
    q[static_cast<std::size_t>(shift)] = c;
    r = r - IntPolynomial::monomial(c, shift) * b;
  }
  if (!r.is_zero()) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() < 1) return p.primitive_part();
  IntPolynomial g = gcd(p, p.derivative());
  auto q = divide_exact(p.primitive_part(), g);
  if (!q) throw DomainError("squarefree_part: inexact division");  // unreachable for valid input
  return q->primitive_part();
}

std::span<const long> small_prime_ladder() {
  static constexpr std::array<long, 25> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                   29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                   67, 71, 73, 79, 83, 89, 97};
  return kPrimes;
}

namespace {

// Dense polynomials over F_q, ascending, trimmed.
using ModPoly = std::vector<long>;

long mod(long a, long q) {
  a %= q;
  return a < 0 ? a + q : a;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long q) {
  long t = 0, nt = 1, r = q, nr = mod(a, q);
  while (nr != 0) {
    long quo = r / nr;
    t -= quo * nt;
    std::swap(t, nt);
    r -= quo * nr;
    std::swap(r, nr);
  }
  return mod(t, q);
}

// a mod m, with m monic.
ModPoly rem(ModPoly a, const ModPoly& m, long q) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const long c = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = mod(a[shift + i] - c * m[i], q);
    trim(a);
    if (!a.empty() && a.size() - 1 < dm) break;
  }
  trim(a);
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, long q) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return rem(std::move(out), m, q);
}

ModPoly powmod(ModPoly base, long e, const ModPoly& m, long q) {
  ModPoly result{1};
  result = rem(result, m, q);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, q);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m, q);
  }
  return result;
}

ModPoly make_monic(ModPoly a, long q) {
  const long inv = inverse_mod(a.back(), q);
  for (auto& c : a) c = (c * inv) % q;
  return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, long q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    b = make_monic(std::move(b), q);
    ModPoly r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(std::move(a), q);
}

// x^(q^times) mod m.
ModPoly frobenius_power(const ModPoly& m, long q, int times) {
  ModPoly h = rem(ModPoly{0, 1}, m, q);
  for (int i = 0; i < times; ++i) h = powmod(h, q, m, q);
  return h;
}

ModPoly subtract_x(ModPoly h, long q) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = mod(h[1] - 1, q);
  trim(h);
  return h;
}

}  // namespace

bool irreducible_mod(const IntPolynomial& p, long q) {
  const int n = p.degree();
  if (n < 1) return false;
  ModPoly f;
  for (const auto& c : p.coefficients()) f.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), q)));
  if (f.back() == 0) return false;
  f = make_monic(std::move(f), q);
  if (n == 1) return true;
  // Prime divisors of n.
  std::vector<int> divisors;
  int rest = n;
  for (int d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      divisors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) divisors.push_back(rest);
  for (int r : divisors) {
    ModPoly g = gcd_mod(subtract_x(frobenius_power(f, q, n / r), q), f, q);
    if (g.size() != 1) return false;
  }
  return subtract_x(frobenius_power(f, q, n), q).empty();
}

std::optional<long> irreducibility_witness(const IntPolynomial& p, std::span<const long> primes) {
  for (long q : primes) {
    if (irreducible_mod(p, q)) return q;
  }
  return std::nullopt;
}

IntPolynomial parse_polynomial(const std::string& csv) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    BigInt c;
    if (item.empty() || c.set_str(item, 10) != 0) {
      throw DomainError("bad polynomial coefficient '" + item + "'");
    }
    coeffs.push_back(c);
  }
  if (coeffs.empty()) throw DomainError("empty polynomial");
  return IntPolynomial(std::move(coeffs));
}

}  // namespace fibsum
