#include "adhm/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adhm {

namespace {

using Integer = mpz_class;

// --- integer factoring -----------------------------------------------------
//
// Needed only to enumerate divisors of char-poly constant terms. Trial
// division clears small primes; Pollard rho (Brent variant) splits whatever
// larger composite cofactor remains alive.

Integer mulmod(const Integer& a, const Integer& b, const Integer& n) { return a * b % n; }

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer pollard_rho(const Integer& n, unsigned long seed_c) {
  // Brent's cycle-finding variant with batched gcds.
  Integer y = Integer(2 + seed_c), c = Integer(1 + seed_c), m = 128;
  Integer g = 1, r = 1, q = 1, x, ys;
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      const Integer remaining = r - k;
      const Integer bound = remaining < m ? remaining : m;
      for (Integer i = 0; i < bound; ++i) {
        y = (mulmod(y, y, n) + c) % n;
        q = mulmod(q, abs(x - y), n);
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (mulmod(ys, ys, n) + c) % n;
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void split_hard_part(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1; c < 64; ++c) {
    const Integer d = pollard_rho(n, c);
    if (d > 1 && d < n) {
      split_hard_part(d, out);
      split_hard_part(Integer(n / d), out);
      return;
    }
  }
  throw std::runtime_error("integer factorization failed");
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n <= 1) return;
  while (n % 2 == 0) {
    ++out[Integer(2)];
    n /= 2;
  }
  for (unsigned long trial = 3; trial < 100000 && n > 1; trial += 2) {
    while (n % trial == 0) {
      ++out[Integer(trial)];
      n /= trial;
    }
    // Once trial^2 exceeds n the remaining cofactor is prime.
    if (Integer(trial) * trial > n) break;
  }
  split_hard_part(n, out);
}

std::vector<Integer> divisors(const Integer& n) {
  std::map<Integer, unsigned> primes;
  factor_into(abs(n), primes);
  std::vector<Integer> result{Integer(1)};
  for (const auto& [p, e] : primes) {
    const std::size_t base = result.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

Poly make_monic(Poly p) {
  const Rational lead = p.leading();
  for (Rational& c : p.coef) c /= lead;
  return p;
}

// Exact division by (t - root); remainder must vanish.
Poly deflate(const Poly& p, const Rational& root) {
  Poly quotient;
  quotient.coef.assign(p.coef.size() - 1, Rational(0));
  Rational carry = 0;
  for (int k = p.degree(); k >= 1; --k) {
    carry = p.coef[static_cast<std::size_t>(k)] + carry * root;
    quotient.coef[static_cast<std::size_t>(k - 1)] = carry;
  }
  quotient.normalize();
  return quotient;
}

}  // namespace

Poly Poly::constant(const Rational& value) {
  Poly p;
  if (value != 0) p.coef.push_back(value);
  return p;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void Poly::normalize() {
  while (!coef.empty() && coef.back() == 0) coef.pop_back();
}

Poly operator+(const Poly& lhs, const Poly& rhs) {
  Poly out;
  out.coef.assign(std::max(lhs.coef.size(), rhs.coef.size()), Rational(0));
  for (std::size_t k = 0; k < lhs.coef.size(); ++k) out.coef[k] += lhs.coef[k];
  for (std::size_t k = 0; k < rhs.coef.size(); ++k) out.coef[k] += rhs.coef[k];
  out.normalize();
  return out;
}

Poly operator-(const Poly& lhs, const Poly& rhs) {
  Poly negated = rhs;
  for (Rational& c : negated.coef) c = -c;
  return lhs + negated;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly::zero();
  Poly out;
  out.coef.assign(lhs.coef.size() + rhs.coef.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coef.size(); ++i) {
    if (lhs.coef[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coef.size(); ++j) {
      out.coef[i + j] += lhs.coef[i] * rhs.coef[j];
    }
  }
  out.normalize();
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  Poly remainder = numerator;
  Poly quotient;
  if (numerator.degree() >= divisor.degree()) {
    quotient.coef.assign(static_cast<std::size_t>(numerator.degree() - divisor.degree()) + 1,
                         Rational(0));
  }
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    const std::size_t shift =
        static_cast<std::size_t>(remainder.degree() - divisor.degree());
    const Rational factor = remainder.leading() / divisor.leading();
    quotient.coef[shift] = factor;
    for (std::size_t k = 0; k < divisor.coef.size(); ++k) {
      remainder.coef[k + shift] -= factor * divisor.coef[k];
    }
    remainder.normalize();
  }
  quotient.normalize();
  return {quotient, remainder};
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.coef.size(); ++k) {
    out.coef.push_back(Rational(static_cast<long>(k)) * p.coef[k]);
  }
  out.normalize();
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return make_monic(std::move(a));
}

std::string format_poly(const Poly& p, const std::string& variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coef[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool leading_term = out.empty();
    const Rational magnitude = abs(c);
    if (c < 0) {
      out += leading_term ? "-" : " - ";
    } else if (!leading_term) {
      out += " + ";
    }
    const bool unit = magnitude == 1;
    if (k == 0 || !unit) out += format_rational(magnitude);
    if (k > 0) {
      if (!unit) out += "*";
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: square matrix required");
  const std::size_t n = m.rows();
  Poly p;
  p.coef.assign(n + 1, Rational(0));
  p.coef[n] = 1;
  Matrix aux = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const Matrix mk = m * aux;
    const Rational ck = -trace(mk) / Rational(static_cast<long>(k));
    p.coef[n - k] = ck;
    aux = mk + ck * Matrix::identity(n);
  }
  return p;
}

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  RationalRoots out;
  Poly f = make_monic(p);

  // Pull out the root at zero first so the constant term is nonzero.
  std::size_t zero_mult = 0;
  while (!f.is_zero() && f.degree() >= 1 && f.coef[0] == 0) {
    f = deflate(f, Rational(0));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);

  if (f.degree() >= 1) {
    // Substitute t = u/d, d = lcm of coefficient denominators: g(u) =
    // d^n f(u/d) is monic with integer coefficients, and every rational
    // root of f is an integer root of g divided by d.
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Integer d = 1;
    for (const Rational& c : f.coef) d = lcm(d, c.get_den());
    std::vector<Integer> g(n + 1);
    Integer d_power = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      const std::size_t idx = n - k;
      const Rational scaled = f.coef[idx] * Rational(d_power);
      g[idx] = scaled.get_num();  // exact: den divides d^k
      d_power *= d;
    }

    // Cauchy bound: every root u satisfies |u| <= 1 + max |g_k|.
    Integer bound = 0;
    for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, Integer(abs(g[k])));
    bound += 1;

    std::vector<Rational> candidates;
    for (const Integer& u : divisors(g[0])) {
      if (u > bound) break;
      candidates.push_back(Rational(u) / Rational(d));
      candidates.push_back(Rational(-u) / Rational(d));
    }
    std::sort(candidates.begin(), candidates.end());

    for (const Rational& candidate : candidates) {
      if (f.degree() < 1) break;
      std::size_t mult = 0;
      while (f.degree() >= 1 && f.eval(candidate) == 0) {
        f = deflate(f, candidate);
        ++mult;
      }
      if (mult > 0) out.roots.emplace_back(candidate, mult);
    }
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  out.residue = f.degree() >= 1 ? f : Poly::constant(Rational(1));
  return out;
}

std::vector<std::pair<Poly, std::size_t>> squarefree_factors(const Poly& p) {
  std::vector<std::pair<Poly, std::size_t>> out;
  if (p.is_zero() || p.degree() < 1) return out;

  // Yun's algorithm over Q.
  Poly f = make_monic(p);
  Poly g = poly_gcd(f, derivative(f));
  Poly w = divmod(f, g).first;
  std::size_t multiplicity = 1;
  while (w.degree() >= 1) {
    const Poly y = poly_gcd(w, g);
    const Poly factor = divmod(w, y).first;
    if (factor.degree() >= 1) out.emplace_back(factor, multiplicity);
    g = divmod(g, y).first;
    w = y;
    ++multiplicity;
  }
  return out;
}

}  // namespace adhm
