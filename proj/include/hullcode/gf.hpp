#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hullcode {

// Exact arithmetic in GF(p^m), p prime, p^m <= 2^16.
//
// Elements are integer codes in [0, q): the base-p digits of a code are the
// coefficients of the residue polynomial, constant term first. Multiplication
// runs on exp/log tables built over a verified primitive element; addition is
// digit-wise mod p (XOR in characteristic 2). In the text grammar, "w" always
// denotes the field's primitive element.
class Field {
 public:
  int p() const { return p_; }
  int m() const { return m_; }
  uint32_t q() const { return q_; }
  // Modulus polynomial, m+1 coefficients from the constant term upward.
  const std::vector<int>& modulus() const { return poly_; }
  uint16_t primitive() const { return primitive_; }
  bool char2() const { return p_ == 2; }

  uint16_t add(uint16_t x, uint16_t y) const;
  uint16_t sub(uint16_t x, uint16_t y) const;
  uint16_t neg(uint16_t x) const;
  uint16_t mul(uint16_t x, uint16_t y) const;
  uint16_t inv(uint16_t x) const;  // x != 0
  uint16_t pow(uint16_t x, long long e) const;
  uint16_t sqrt(uint16_t x) const;       // characteristic 2 only; r with r*r == x
  uint16_t frobenius(uint16_t x) const;  // x^p

  // Discrete log base the primitive element (x != 0), and its inverse.
  int plog(uint16_t x) const;
  uint16_t ppow(long long e) const;  // primitive^e, exponent reduced mod q-1

  // All q elements in integer-code order: 0, 1, 2, ...
  std::vector<uint16_t> elements() const;
  // The q-1 nonzero elements in primitive-power order: 1, w, w^2, ...
  std::vector<uint16_t> nonzero_elements() const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  friend std::shared_ptr<const Field> make_field(int, int, std::vector<int>, int);

  int p_ = 0, m_ = 0;
  uint32_t q_ = 0;
  std::vector<int> poly_;
  uint16_t primitive_ = 0;
  std::vector<uint16_t> exp_;   // q-1 entries: exp_[i] = primitive^i
  std::vector<int32_t> log_;    // q entries; log_[0] = -1
};

using FieldPtr = std::shared_ptr<const Field>;

// Builds a field after verifying primality of p, irreducibility of the
// modulus (trial division by every monic polynomial of degree <= m/2), and
// primitivity of the designated generator (order checked against the prime
// factors of q-1).
//
// poly empty selects the built-in modulus for GF(4) x^2+x+1, GF(8) x^3+x+1,
// GF(16) x^4+x+1, the canonical degree-1 modulus for m=1, and otherwise the
// first monic irreducible polynomial in constant-first lexicographic order
// for which x is primitive. primitive < 0 designates x itself when x
// generates the multiplicative group, else the smallest generating code.
FieldPtr make_field(int p, int m, std::vector<int> poly = {}, int primitive = -1);

// Two Field handles denote the same field when they agree on (p, m, modulus,
// primitive). Operations across different fields are precondition errors.
bool same_field(const Field& a, const Field& b);

// Element text grammar: 0 | 1 | w | w^<k>. Rendering uses the lowest
// nonnegative exponent; parsing reduces exponents mod q-1.
std::string render_elem(const Field& f, uint16_t x);
uint16_t parse_elem(const Field& f, const std::string& text);

}  // namespace hullcode
