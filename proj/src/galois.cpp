#include "turan/galois.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace turan {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power_decompose(int n, int& p, int& k) {
  if (n < 2) return false;
  int base = n;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  int m = n, e = 0;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1) return false;
  p = base;
  k = e;
  return true;
}

namespace {

constexpr int kMaxQ = 1 << 16;

// Polynomials over GF(p) as coefficient vectors, constant term first,
// no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo m (m monic).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  while (a.size() >= m.size()) {
    const long long lead = a.back();
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = static_cast<int>((a[shift + i] - lead * m[i] % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
  }
  return r;
}

Poly poly_from_code(long long code, int p) {
  Poly a;
  while (code > 0) {
    a.push_back(static_cast<int>(code % p));
    code /= p;
  }
  return a;
}

long long poly_to_code(const Poly& a, int p) {
  long long code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// Divisibility test for monic divisor candidates: irreducible iff no monic
// divisor of degree 1..k/2 exists.
bool is_irreducible(const Poly& m, int p) {
  const int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
      Poly div = poly_from_code(low, p);
      div.resize(d + 1, 0);
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> fs;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (k < 1) throw std::invalid_argument("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) {
      throw InfeasibleError("field size " + std::to_string(p) + "^" + std::to_string(k) +
                            " exceeds the 2^16 cap");
    }
  }
  q_ = static_cast<int>(q);

  // Scan moduli by the code of their non-leading coefficients; the first
  // irreducible hit is the canonical choice.
  Poly modulus;
  for (long long low = 0;; ++low) {
    Poly cand = poly_from_code(low, p);
    cand.resize(k + 1, 0);
    cand[k] = 1;
    if (is_irreducible(cand, p)) {
      modulus = cand;
      break;
    }
  }
  modulus_ = modulus;

  // Find the primitive element g: smallest code whose order is q-1, testing
  // via prime factors of q-1 with slow polynomial arithmetic.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](Elem a, long long e) {
    Poly base = poly_from_code(a, p);
    Poly acc{1};
    while (e > 0) {
      if (e & 1) acc = poly_mod(poly_mul(acc, base, p), modulus, p);
      base = poly_mod(poly_mul(base, base, p), modulus, p);
      e >>= 1;
    }
    return static_cast<Elem>(poly_to_code(acc, p));
  };
  Elem g = 0;
  for (Elem a = 1; a < static_cast<Elem>(q_); ++a) {
    if (q_ == 2) {  // trivial group
      g = 1;
      break;
    }
    bool primitive = true;
    for (int f : factors) {
      if (slow_pow(a, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = a;
      break;
    }
  }
  if (g == 0) throw ConsistencyError("no primitive element found");
  g_ = g;

  exp_.resize(q_ - 1);
  log_.assign(q_, -1);
  Poly acc{1};
  const Poly gp = poly_from_code(g, p);
  for (int i = 0; i < q_ - 1; ++i) {
    const Elem code = static_cast<Elem>(poly_to_code(acc, p));
    exp_[i] = code;
    if (log_[code] != -1) throw ConsistencyError("primitive element order too small");
    log_[code] = i;
    acc = poly_mod(poly_mul(acc, gp, p), modulus, p);
  }
  if (poly_to_code(acc, p) != 1) throw ConsistencyError("primitive element order mismatch");
}

void GaloisField::check(Elem a) const {
  if (a >= static_cast<Elem>(q_)) {
    throw std::invalid_argument("element code " + std::to_string(a) + " out of range [0, " +
                                std::to_string(q_) + ")");
  }
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  check(a);
  check(b);
  Elem r = 0, place = 1;
  while (a > 0 || b > 0) {
    r += place * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  check(a);
  Elem r = 0, place = 1;
  while (a > 0) {
    r += place * ((p_ - a % p_) % p_);
    a /= p_;
    place *= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  check(a);
  check(b);
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, long long e) const {
  check(a);
  if (a == 0) {
    if (e <= 0) throw std::invalid_argument("0 has no non-positive powers");
    return 0;
  }
  const long long m = q_ - 1;
  long long r = (log_[a] * (e % m)) % m;
  if (r < 0) r += m;
  return exp_[r];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  check(a);
  if (a == 0) throw std::invalid_argument("0 is not invertible");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GaloisField::element_order(Elem a) const {
  check(a);
  if (a == 0) throw std::invalid_argument("0 has no multiplicative order");
  return (q_ - 1) / std::gcd(q_ - 1, log_[a]);
}

GaloisField::Elem GaloisField::element_of_order(int d) const {
  if (d <= 0) throw std::invalid_argument("order must be positive");
  if ((q_ - 1) % d != 0) {
    throw InfeasibleError("no element of order " + std::to_string(d) + ": it does not divide " +
                          std::to_string(q_ - 1));
  }
  return pow(primitive_element(), (q_ - 1) / d);
}

}  // namespace turan
