#include "hullcode/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "hullcode/errors.hpp"

namespace hullcode {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(uint32_t n) {
  std::vector<int> fs;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(static_cast<int>(n));
  return fs;
}

// Dense polynomial arithmetic over GF(p), coefficients constant-first.
// Used only while constructing a field's tables.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

Poly poly_mod(Poly a, const Poly& mod, int p) {
  a = trim(a);
  const int dm = static_cast<int>(mod.size()) - 1;
  const int lead_inv = [&] {
    for (int t = 1; t < p; ++t)
      if (t * mod[dm] % p == 1) return t;
    return 1;  // mod is monic in all call sites
  }();
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int da = static_cast<int>(a.size()) - 1;
    const int c = a[da] * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      int& t = a[da - dm + i];
      t = ((t - c * mod[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

uint32_t poly_to_code(const Poly& a, int p) {
  uint32_t code = 0, mult = 1;
  for (int digit : a) {
    code += static_cast<uint32_t>(digit) * mult;
    mult *= static_cast<uint32_t>(p);
  }
  return code;
}

Poly code_to_poly(uint32_t code, int p) {
  Poly a;
  while (code) {
    a.push_back(static_cast<int>(code % static_cast<uint32_t>(p)));
    code /= static_cast<uint32_t>(p);
  }
  return a;
}

bool poly_divides(const Poly& d, const Poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

bool is_irreducible(const Poly& poly, int p) {
  const int m = static_cast<int>(poly.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  if (poly[0] == 0) return false;  // divisible by x
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<uint64_t>(p);
    for (uint64_t low = 0; low < count; ++low) {
      Poly cand = code_to_poly(static_cast<uint32_t>(low), p);
      cand.resize(d + 1, 0);
      cand[d] = 1;
      if (poly_divides(cand, poly, p)) return false;
    }
  }
  return true;
}

// Iterates monic degree-m polynomials in constant-first lexicographic order
// of (c0, ..., c_{m-1}): c0 is the most significant comparison position.
Poly lex_monic(int p, int m, uint64_t index) {
  Poly a(m + 1, 0);
  a[m] = 1;
  // c_{m-1} takes the least significant part of index, so c0 varies slowest:
  // ascending index enumerates (c0, ..., c_{m-1}) in lexicographic order.
  for (int i = m - 1; i >= 0; --i) {
    a[i] = static_cast<int>(index % static_cast<uint64_t>(p));
    index /= static_cast<uint64_t>(p);
  }
  return a;
}

}  // namespace

uint16_t Field::add(uint16_t x, uint16_t y) const {
  if (p_ == 2) return x ^ y;
  uint32_t r = 0, mult = 1, a = x, b = y;
  for (int i = 0; i < m_; ++i) {
    const uint32_t da = a % static_cast<uint32_t>(p_), db = b % static_cast<uint32_t>(p_);
    r += ((da + db) % static_cast<uint32_t>(p_)) * mult;
    a /= static_cast<uint32_t>(p_);
    b /= static_cast<uint32_t>(p_);
    mult *= static_cast<uint32_t>(p_);
  }
  return static_cast<uint16_t>(r);
}

uint16_t Field::neg(uint16_t x) const {
  if (p_ == 2) return x;
  uint32_t r = 0, mult = 1, a = x;
  for (int i = 0; i < m_; ++i) {
    const uint32_t da = a % static_cast<uint32_t>(p_);
    r += ((static_cast<uint32_t>(p_) - da) % static_cast<uint32_t>(p_)) * mult;
    a /= static_cast<uint32_t>(p_);
    mult *= static_cast<uint32_t>(p_);
  }
  return static_cast<uint16_t>(r);
}

uint16_t Field::sub(uint16_t x, uint16_t y) const { return add(x, neg(y)); }

uint16_t Field::mul(uint16_t x, uint16_t y) const {
  if (x == 0 || y == 0) return 0;
  const uint32_t e = (static_cast<uint32_t>(log_[x]) + static_cast<uint32_t>(log_[y])) %
                     (q_ - 1);
  return exp_[e];
}

uint16_t Field::inv(uint16_t x) const {
  if (x == 0) throw PreconditionError("inverse of zero");
  const uint32_t e = (q_ - 1 - static_cast<uint32_t>(log_[x])) % (q_ - 1);
  return exp_[e];
}

uint16_t Field::pow(uint16_t x, long long e) const {
  if (x == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw PreconditionError("negative power of zero");
  }
  const long long ord = static_cast<long long>(q_) - 1;
  long long r = e % ord;
  if (r < 0) r += ord;
  const uint64_t idx = static_cast<uint64_t>(log_[x]) * static_cast<uint64_t>(r) %
                       static_cast<uint64_t>(ord);
  return exp_[idx];
}

uint16_t Field::sqrt(uint16_t x) const {
  if (p_ != 2)
    throw PreconditionError("square root implemented for characteristic 2 only");
  if (x == 0) return 0;
  return pow(x, static_cast<long long>(q_) / 2);
}

uint16_t Field::frobenius(uint16_t x) const { return pow(x, p_); }

int Field::plog(uint16_t x) const {
  if (x == 0) throw PreconditionError("log of zero");
  return static_cast<int>(log_[x]);
}

uint16_t Field::ppow(long long e) const {
  const long long ord = static_cast<long long>(q_) - 1;
  long long r = e % ord;
  if (r < 0) r += ord;
  return exp_[r];
}

std::vector<uint16_t> Field::elements() const {
  std::vector<uint16_t> out(q_);
  for (uint32_t i = 0; i < q_; ++i) out[i] = static_cast<uint16_t>(i);
  return out;
}

std::vector<uint16_t> Field::nonzero_elements() const {
  return {exp_.begin(), exp_.end()};
}

FieldPtr make_field(int p, int m, std::vector<int> poly, int primitive) {
  if (!is_prime(p)) throw PreconditionError("p must be prime, got " + std::to_string(p));
  if (m < 1) throw PreconditionError("extension degree must be >= 1");
  uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<uint64_t>(p);
    if (q > 65536) throw PreconditionError("field size p^m exceeds 2^16");
  }

  static const std::map<std::pair<int, int>, std::vector<int>> kDefaults = {
      {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
  };

  auto normalize = [&](std::vector<int> c) {
    for (int& v : c) {
      v %= p;
      if (v < 0) v += p;
    }
    return c;
  };

  auto try_build = [&](const std::vector<int>& mod_poly,
                       int prim) -> FieldPtr {
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<uint32_t>(q);
    f->poly_ = mod_poly;

    // Determine the generator candidate list.
    std::vector<uint32_t> candidates;
    if (prim >= 0) {
      candidates.push_back(static_cast<uint32_t>(prim));
    } else {
      // x first (code p), then every element by ascending code.
      if (m > 1) candidates.push_back(static_cast<uint32_t>(p));
      for (uint32_t c = 1; c < f->q_; ++c) candidates.push_back(c);
    }

    const auto factors = prime_factors(f->q_ - 1);
    for (uint32_t g : candidates) {
      if (g == 0 || g >= f->q_) {
        if (prim >= 0)
          throw PreconditionError("designated primitive element out of range");
        continue;
      }
      // Build exp table by repeated multiplication with g in the residue ring.
      std::vector<uint16_t> exp(f->q_ - 1);
      std::vector<int32_t> log(f->q_, -1);
      const Poly gp = code_to_poly(g, p);
      Poly acc = {1};
      bool full_period = true;
      for (uint32_t i = 0; i < f->q_ - 1; ++i) {
        const uint32_t code = poly_to_code(acc, p);
        if (i > 0 && code == 1) {
          full_period = false;  // g's order divides i < q-1
          break;
        }
        exp[i] = static_cast<uint16_t>(code);
        log[code] = static_cast<int32_t>(i);
        acc = poly_mod(poly_mul(acc, gp, p), mod_poly, p);
      }
      if (!full_period || poly_to_code(acc, p) != 1) {
        if (prim >= 0)
          throw PreconditionError("designated element is not primitive: " +
                                  std::to_string(g));
        continue;
      }
      // Independent primitivity certificate: g^((q-1)/r) != 1 for primes r | q-1.
      bool certified = true;
      for (int r : factors) {
        const uint32_t e = (f->q_ - 1) / static_cast<uint32_t>(r);
        if (exp[e % (f->q_ - 1)] == 1 && f->q_ - 1 > 1) {
          certified = false;
          break;
        }
      }
      if (!certified) {
        if (prim >= 0)
          throw PreconditionError("designated element fails the primitivity certificate");
        continue;
      }
      f->primitive_ = static_cast<uint16_t>(g);
      f->exp_ = std::move(exp);
      f->log_ = std::move(log);
      return f;
    }
    return nullptr;  // no primitive generator found (caller treats as failure)
  };

  if (!poly.empty()) {
    poly = normalize(std::move(poly));
    if (static_cast<int>(poly.size()) != m + 1 || poly[m] != 1)
      throw PreconditionError("modulus must be monic of degree m, constant term first");
    if (m > 1 && !is_irreducible(poly, p))
      throw PreconditionError("modulus polynomial is reducible");
    auto f = try_build(poly, primitive);
    if (!f) throw PreconditionError("no primitive element found (internal)");
    return f;
  }

  if (m == 1) {
    auto f = try_build({0, 1}, primitive);  // residue ring F_p[x]/(x) = F_p
    if (!f) throw PreconditionError("no primitive element found (internal)");
    return f;
  }

  if (auto it = kDefaults.find({p, m}); it != kDefaults.end()) {
    auto f = try_build(it->second, primitive);
    if (!f) throw PreconditionError("no primitive element found (internal)");
    return f;
  }

  // No built-in default: first lexicographic monic irreducible with x primitive.
  uint64_t count = 1;
  for (int i = 0; i < m; ++i) count *= static_cast<uint64_t>(p);
  for (uint64_t idx = 0; idx < count; ++idx) {
    Poly cand = lex_monic(p, m, idx);
    if (!is_irreducible(cand, p)) continue;
    if (primitive >= 0) return try_build(cand, primitive);  // throws if unsuitable
    try {
      if (auto f = try_build(cand, p /* x */)) return f;
    } catch (const PreconditionError&) {
      // x is not primitive for this modulus; keep searching.
    }
  }
  throw PreconditionError("no suitable modulus found for GF(" + std::to_string(p) +
                          "^" + std::to_string(m) + ")");
}

bool same_field(const Field& a, const Field& b) {
  if (&a == &b) return true;
  return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus() &&
         a.primitive() == b.primitive();
}

std::string render_elem(const Field& f, uint16_t x) {
  if (x == 0) return "0";
  const int e = f.plog(x);
  if (e == 0) return "1";
  if (e == 1) return "w";
  return "w^" + std::to_string(e);
}

uint16_t parse_elem(const Field& f, const std::string& text) {
  if (text == "0") return 0;
  if (text == "1") return f.ppow(0);
  if (text == "w") return f.primitive();
  if (text.rfind("w^", 0) == 0) {
    const std::string es = text.substr(2);
    if (es.empty()) throw ParseError("malformed element '" + text + "'");
    size_t pos = 0;
    long long e = 0;
    try {
      e = std::stoll(es, &pos);
    } catch (const std::exception&) {
      throw ParseError("malformed element '" + text + "'");
    }
    if (pos != es.size()) throw ParseError("malformed element '" + text + "'");
    return f.ppow(e);
  }
  throw ParseError("malformed element '" + text + "'");
}

}  // namespace hullcode
