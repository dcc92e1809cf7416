#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigverify/bignum.hpp"

namespace trigverify::modular {

// A residue class representative in [0, modulus).
class Residue {
 public:
  // Reduces `value` into [0, modulus). Throws std::invalid_argument if
  // modulus < 2.
  Residue(const Integer& value, const Integer& modulus);

  const Integer& value() const { return value_; }
  const Integer& modulus() const { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Integer value_;
  Integer modulus_;
};

struct CongruenceReport {
  std::string claim_id;
  Integer parameter;
  Residue lhs;
  Residue rhs;

  bool pass() const { return lhs == rhs; }
};

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_below(std::uint64_t bound);

// a^(p-1) == 1 (mod p). Throws InvalidPrime, NotCoprime.
CongruenceReport verify_fermat(const Integer& a, std::uint64_t p);

// S_p == 15 - 30p + 60p^2 (mod p^3) for odd primes p. Throws InvalidPrime.
CongruenceReport verify_sp_congruence(std::uint64_t p);
// Same comparison for an arbitrary candidate value of S_p.
CongruenceReport sp_congruence_for_value(const Integer& s_value, std::uint64_t p);

// T_p == -2 (mod p). Throws InvalidPrime.
CongruenceReport verify_tp_congruence(std::uint64_t p);

// 3 S_n == 0 (mod 2n+3), n >= 1.
CongruenceReport verify_guo(unsigned long n);

// C(3p-2, p-1) / p == -2 (mod p). Throws InvalidPrime and
// DivisibilityFailure when p does not divide the binomial.
CongruenceReport verify_lemma32(std::uint64_t p);

// C(3p-2, p-1) / p == 2 prod_{j=1}^{p-2} (3p/(j+1) - 1) over the rationals.
// Requires an odd prime; throws InvalidPrime otherwise.
bool lemma32_product_identity(std::uint64_t p);

// Sweeps. Reports come back in ascending parameter order; `jobs` workers
// share the work.
std::vector<CongruenceReport> sweep_sp_congruence(std::uint64_t prime_bound, unsigned jobs = 1);
std::vector<CongruenceReport> sweep_tp_congruence(std::uint64_t prime_bound, unsigned jobs = 1);
std::vector<CongruenceReport> sweep_lemma32(std::uint64_t prime_bound, unsigned jobs = 1);
std::vector<CongruenceReport> sweep_guo(unsigned long n_max, unsigned jobs = 1);

}  // namespace trigverify::modular
