#include "trigverify/modular.hpp"

#include <stdexcept>
#include <string>

#include "trigverify/errors.hpp"
#include "trigverify/exact_seq.hpp"
#include "trigverify/parallel.hpp"

namespace trigverify::modular {

Residue::Residue(const Integer& value, const Integer& modulus) : modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2, got " + modulus.get_str());
  mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  for (; exp; exp >>= 1) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
  }
  return r;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

void require_prime(u64 p, const char* op) {
  if (!is_prime(p)) throw InvalidPrime(std::string(op) + ": " + std::to_string(p) + " is not prime");
}

Integer big(u64 v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return z;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // These bases make Miller-Rabin deterministic below 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == a) return true;
    if (n % a == 0) return false;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n < bound; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

CongruenceReport verify_fermat(const Integer& a, std::uint64_t p) {
  require_prime(p, "verify_fermat");
  const Integer m = big(p);
  if (mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()))
    throw NotCoprime("verify_fermat: " + std::to_string(p) + " divides " + a.get_str());
  Integer power;
  const Integer reduced = Residue(a, m).value();
  mpz_powm_ui(power.get_mpz_t(), reduced.get_mpz_t(), p - 1, m.get_mpz_t());
  return {"fermat", big(p), Residue(power, m), Residue(1, m)};
}

CongruenceReport sp_congruence_for_value(const Integer& s_value, std::uint64_t p) {
  const Integer q = big(p);
  const Integer m = q * q * q;
  return {"sp-mod-p3", q, Residue(s_value, m), Residue(15 - 30 * q + 60 * q * q, m)};
}

CongruenceReport verify_sp_congruence(std::uint64_t p) {
  require_prime(p, "verify_sp_congruence");
  if (p == 2) throw InvalidPrime("verify_sp_congruence: p must be odd");
  const Rational s = exact_seq::s_binomial_def(p);
  if (!is_integral(s)) throw NonInteger("S_" + std::to_string(p) + " = " + s.get_str());
  return sp_congruence_for_value(s.get_num(), p);
}

CongruenceReport verify_tp_congruence(std::uint64_t p) {
  require_prime(p, "verify_tp_congruence");
  const Integer m = big(p);
  return {"tp-mod-p", m, Residue(exact_seq::t_closed_form(p), m), Residue(-2, m)};
}

CongruenceReport verify_guo(unsigned long n) {
  if (n == 0) throw std::invalid_argument("verify_guo: n must be >= 1");
  const Rational s = exact_seq::s_binomial_def(n);
  if (!is_integral(s)) throw NonInteger("S_" + std::to_string(n) + " = " + s.get_str());
  const Integer m = 2 * Integer(n) + 3;
  return {"guo", Integer(n), Residue(3 * s.get_num(), m), Residue(0, m)};
}

CongruenceReport verify_lemma32(std::uint64_t p) {
  require_prime(p, "verify_lemma32");
  const Integer m = big(p);
  Integer b = exact_seq::binomial(3 * p - 2, p - 1);
  if (!mpz_divisible_p(b.get_mpz_t(), m.get_mpz_t()))
    throw DivisibilityFailure(std::to_string(p) + " does not divide C(3p-2, p-1)");
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
  return {"lemma32", m, Residue(b, m), Residue(-2, m)};
}

bool lemma32_product_identity(std::uint64_t p) {
  require_prime(p, "lemma32_product_identity");
  if (p == 2) throw InvalidPrime("lemma32_product_identity: p must be odd");
  const Integer q = big(p);
  const Rational lhs = make_rational(exact_seq::binomial(3 * p - 2, p - 1), q);
  Rational rhs = 2;
  for (std::uint64_t j = 1; j + 2 <= p; ++j) rhs *= make_rational(3 * q, big(j + 1)) - 1;
  return lhs == rhs;
}

std::vector<CongruenceReport> sweep_sp_congruence(std::uint64_t prime_bound, unsigned jobs) {
  std::vector<std::uint64_t> odd;
  for (auto p : primes_below(prime_bound))
    if (p != 2) odd.push_back(p);
  return ordered_parallel_map(odd, jobs, [](std::uint64_t p) { return verify_sp_congruence(p); });
}

std::vector<CongruenceReport> sweep_tp_congruence(std::uint64_t prime_bound, unsigned jobs) {
  return ordered_parallel_map(primes_below(prime_bound), jobs,
                              [](std::uint64_t p) { return verify_tp_congruence(p); });
}

std::vector<CongruenceReport> sweep_lemma32(std::uint64_t prime_bound, unsigned jobs) {
  return ordered_parallel_map(primes_below(prime_bound), jobs,
                              [](std::uint64_t p) { return verify_lemma32(p); });
}

std::vector<CongruenceReport> sweep_guo(unsigned long n_max, unsigned jobs) {
  std::vector<unsigned long> ns;
  for (unsigned long n = 1; n <= n_max; ++n) ns.push_back(n);
  return ordered_parallel_map(ns, jobs, [](unsigned long n) { return verify_guo(n); });
}

}  // namespace trigverify::modular
