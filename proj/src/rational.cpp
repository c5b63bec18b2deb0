#include "rcb/rational.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "rcb/error.hpp"

namespace rcb {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view token) {
  const std::string shown(token);
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1")
                                                              : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error("ParseError", "malformed rational '" + shown + "'");
  }
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (den == 0) throw Error("ParseError", "zero denominator in '" + shown + "'");
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1 && !(num == 0 && den == 1)) {
    throw Error("ParseError", "non-canonical rational '" + shown + "'");
  }
  if (negative) num = -num;
  Rat out(num, den);
  return out;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rat& value) { return sgn(value); }

Rat midpoint(const Rat& a, const Rat& b) { return Rat((a + b) / 2); }

namespace {

std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

struct Gauss {
  Int re, im;
};

Gauss mul(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// p prime, p = 1 mod 4. Cornacchia's reduction on a square root of -1.
Gauss prime_two_squares(const Int& p) {
  const Int exponent = (p - 1) / 4;
  Int t;
  for (Int a = 2;; ++a) {
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
    Int sq = (t * t) % p;
    if (sq == p - 1) break;
  }
  Int r0 = p, r1 = t;
  while (r1 * r1 > p) {
    Int next = r0 % r1;
    r0 = r1;
    r1 = next;
  }
  auto rest = exact_isqrt(p - r1 * r1);
  return {r1, *rest};
}

constexpr unsigned long kTrialBound = 1u << 16;

}  // namespace

std::optional<Rat> exact_sqrt(const Rat& value) {
  auto n = exact_isqrt(value.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(value.get_den());
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

std::optional<std::pair<Rat, Rat>> two_squares(const Rat& value) {
  if (value < 0) return std::nullopt;
  if (value == 0) return std::make_pair(Rat(0), Rat(0));
  const Int den = value.get_den();
  Int n = value.get_num() * den;
  Gauss acc{1, 0};
  Int scale = 1;
  for (unsigned long p = 2; p < kTrialBound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p == 2) {
      for (unsigned i = 0; i < e; ++i) acc = mul(acc, {1, 1});
    } else if (p % 4 == 3) {
      if (e % 2 != 0) return std::nullopt;
      for (unsigned i = 0; i < e / 2; ++i) scale *= p;
    } else {
      const Gauss g = prime_two_squares(Int(p));
      for (unsigned i = 0; i < e; ++i) acc = mul(acc, g);
    }
  }
  if (n != 1) {
    if (auto root = exact_isqrt(n)) {
      scale *= *root;
    } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
      if (n == 2) {
        acc = mul(acc, {1, 1});
      } else if (n % 4 == 1) {
        acc = mul(acc, prime_two_squares(n));
      } else {
        return std::nullopt;
      }
    } else {
      return std::nullopt;
    }
  }
  Int y = abs(acc.re) * scale;
  Int z = abs(acc.im) * scale;
  return std::make_pair(make_rat(y, den), make_rat(z, den));
}

namespace {

using Factors = std::vector<std::pair<Int, unsigned>>;

// Factors |n| > 0; nullopt when the cofactor after trial division is not
// 1, a prime or the square of a prime.
std::optional<Factors> factor(Int n) {
  n = abs(n);
  Factors out;
  for (unsigned long p = 2; p < kTrialBound && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  }
  if (n == 1) return out;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.emplace_back(n, 1);
    return out;
  }
  if (auto root = exact_isqrt(n); root && mpz_probab_prime_p(root->get_mpz_t(), 30) > 0) {
    out.emplace_back(*root, 2);
    return out;
  }
  return std::nullopt;
}

// n = core * scale^2 with core squarefree.
struct Squarefree {
  Int core, scale;
};

std::optional<Squarefree> squarefree(const Int& n) {
  const auto f = factor(n);
  if (!f) return std::nullopt;
  Squarefree out{Int(sgn(n)), Int(1)};
  for (const auto& [p, e] : *f) {
    if (e % 2 != 0) out.core *= p;
    for (unsigned i = 0; i < e / 2; ++i) out.scale *= p;
  }
  return out;
}

Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int powm(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks; p prime.
std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& p) {
  const Int a = mod(a0, p);
  if (p == 2 || a == 0) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  Int q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  Int c = powm(z, q, p), t = powm(a, q, p), r = powm(a, Int((q + 1) / 2), p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    for (Int u = t; u != 1; u = Int(u * u % p)) ++i;
    Int b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  return r;
}

// A square root of a modulo the squarefree modulus n, by CRT.
std::optional<Int> sqrt_mod(const Int& a, const Int& n) {
  const auto f = factor(n);
  if (!f) return std::nullopt;
  Int root = 0, modulus = 1;
  for (const auto& [p, e] : *f) {
    const auto r = sqrt_mod_prime(a, p);
    if (!r) return std::nullopt;
    Int inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    root += modulus * mod(Int((*r - root) * inv), p);
    modulus *= p;
  }
  return root;
}

// a X^2 + b Y^2 = Z^2 for squarefree nonzero a, b; (X, Y, Z) != 0.
std::optional<std::array<Rat, 3>> legendre(const Int& a, const Int& b) {
  if (a == 1) return std::array<Rat, 3>{Rat(1), Rat(0), Rat(1)};
  if (b == 1) return std::array<Rat, 3>{Rat(0), Rat(1), Rat(1)};
  if (a == -b) return std::array<Rat, 3>{Rat(1), Rat(1), Rat(0)};
  if (a < 0 && b < 0) return std::nullopt;
  if (abs(a) > abs(b)) {
    auto s = legendre(b, a);
    if (!s) return std::nullopt;
    return std::array<Rat, 3>{(*s)[1], (*s)[0], (*s)[2]};
  }
  const Int n = abs(b);
  auto root = sqrt_mod(a, n);
  if (!root) return std::nullopt;
  Int t = *root;
  if (2 * t > n) t -= n;
  const Int k = (t * t - a) / b;
  if (k == 0) return std::array<Rat, 3>{Rat(1), Rat(0), Rat(t)};
  const auto sk = squarefree(k);
  if (!sk) return std::nullopt;
  const auto inner = legendre(a, sk->core);
  if (!inner) return std::nullopt;
  const Rat& X = (*inner)[0];
  const Rat& Z = (*inner)[2];
  const Rat Y = (*inner)[1] / sk->scale;
  return std::array<Rat, 3>{Rat(t * X + Z), Rat(k * Y), Rat(t * Z + a * X)};
}

}  // namespace

std::optional<std::array<Rat, 3>> solve_diagonal_conic(const Rat& a, const Rat& b, const Rat& c) {
  const std::array<Rat, 3> coeffs{a, b, c};
  for (std::size_t j = 0; j < 3; ++j) {
    if (coeffs[j] == 0) {
      std::array<Rat, 3> e{Rat(0), Rat(0), Rat(0)};
      e[j] = 1;
      return e;
    }
  }
  // a x^2 + b y^2 = -c z^2 becomes (-ac) x^2 + (-bc) y^2 = (c z)^2.
  const Rat alpha = -a * c, beta = -b * c;
  const Int den = alpha.get_den() * beta.get_den();
  // Multiplying through by den^2 keeps the right side a square.
  const auto sa = squarefree(Int(alpha.get_num() * (den / alpha.get_den()) * den));
  const auto sb = squarefree(Int(beta.get_num() * (den / beta.get_den()) * den));
  if (!sa || !sb) return std::nullopt;
  const auto s = legendre(sa->core, sb->core);
  if (!s) return std::nullopt;
  // core_a (scale_a x)^2 + core_b (scale_b y)^2 = (den c z)^2.
  const Rat x = (*s)[0] / sa->scale;
  const Rat y = (*s)[1] / sb->scale;
  const Rat z = (*s)[2] / (den * c);
  return std::array<Rat, 3>{x, y, z};
}

}  // namespace rcb
