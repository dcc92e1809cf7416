#pragma once

#include <optional>
#include <vector>

#include "trigverify/bignum.hpp"

// Exact evaluation of S_n = C(6n,3n) C(3n,n) / (2 (2n+1) C(2n,n)) and
// T_n = 16^n C(3n,n) / (24 (3n-1)), with the divisibility and integrality
// claims attached to them.
namespace trigverify::exact_seq {

struct SequenceRecord {
  unsigned long index = 0;
  Rational s_value;
  std::optional<Integer> t_value;  // absent at n = 0

  friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

using SequenceRows = std::vector<SequenceRecord>;

// C(m, k); zero when k > m.
Integer binomial(unsigned long m, unsigned long k);

// S_n from the binomial definition. S_0 = 1/2.
Rational s_binomial_def(unsigned long n);

// S_n = 12^n prod_{i<n} (6i+1)(6i+5) / (2 (2n+1)!).
Rational s_product_formula(unsigned long n);

// Exact ratio S_{n+1} / S_n = 12 (6n+1)(6n+5) / ((2n+2)(2n+3)).
Rational s_ratio(unsigned long n);

// Exact ratio T_{n+1} / T_n = 48 (3n-1)(3n+1) / ((2n+1)(2n+2)), n >= 1.
Rational t_ratio(unsigned long n);

// T_n = 16^n C(3n,n) / (24 (3n-1)). Throws NonInteger if the reduced
// value is not an integer, std::invalid_argument for n = 0.
Integer t_closed_form(unsigned long n);

// 16^(n-1) (2 C(3n-2, n-1) - C(3n-2, n)), n >= 1.
Integer t_integer_identity(unsigned long n);

// Whether 2 (2n+1) C(2n,n) divides C(6n,3n) C(3n,n).
bool check_divisibility(unsigned long n);

SequenceRows sequence_table(unsigned long n_min, unsigned long n_max);

// Walks S_1, S_2, ... or T_1, T_2, ... one exact integer step at a time.
class IntegerStream {
 public:
  enum class Kind { S, T };

  explicit IntegerStream(Kind kind);

  unsigned long index() const { return index_; }
  const Integer& value() const { return value_; }
  // Moves to the next index. Throws NonInteger if the step does not
  // divide exactly.
  void advance();

 private:
  Kind kind_;
  unsigned long index_ = 1;
  Integer value_;
};

// S_1..S_count as integers, generated by the exact ratio recurrence.
// Throws NonInteger if a step does not divide exactly.
std::vector<Integer> s_sequence(unsigned long count);
// T_1..T_count, same scheme.
std::vector<Integer> t_sequence(unsigned long count);

}  // namespace trigverify::exact_seq
