#pragma once

#include "turan/common.hpp"

#include <cstdint>
#include <vector>

namespace turan {

// Finite field GF(p^k) for prime p and p^k <= 2^16.  Elements are canonical
// integer codes in [0, q): the code of a residue polynomial sum c_i x^i is
// sum c_i p^i, so 0 and 1 are the additive and multiplicative identities.
// The modulus is the lexicographically smallest monic irreducible polynomial
// of degree k (ordered by the code of its non-leading coefficients);
// irreducibility is established by trial division.  Multiplication runs on
// log/exp tables over a fixed primitive element.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }

  // Monic modulus as k+1 coefficients, constant term first.
  const std::vector<int>& modulus() const { return modulus_; }

  // Smallest code with multiplicative order q-1.
  Elem primitive_element() const { return g_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, long long e) const;
  Elem inv(Elem a) const;

  // Least d >= 1 with a^d = 1; rejects a = 0.
  int element_order(Elem a) const;

  // g^((q-1)/d) for the fixed primitive element g; rejects d not dividing q-1.
  Elem element_of_order(int d) const;

 private:
  void check(Elem a) const;
  Elem slow_mul(Elem a, Elem b) const;

  int p_ = 0;
  int k_ = 0;
  int q_ = 0;
  Elem g_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;   // exp_[i] = g^i, i in [0, q-1)
  std::vector<int> log_;    // inverse of exp_ on nonzero codes
};

bool is_prime(int n);

// Writes the prime p and exponent k with n = p^k; false when n is not a
// prime power (or n < 2).
bool prime_power_decompose(int n, int& p, int& k);

}  // namespace turan
