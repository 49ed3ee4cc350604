// Copyright 2026 The vjpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vjpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "vjpoly/errors.hpp"

namespace vjpoly {

namespace {

using ConstSpan = std::span<const Integer>;
using MutSpan = std::span<Integer>;

// out[i + j] += a[i] * b[j]
void schoolbook_accumulate(ConstSpan a, ConstSpan b, MutSpan out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_srcptr ai = a[i].get_mpz_t();
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
  }
}

// out += a * b, where out has room for a.size() + b.size() - 1 terms.
void karatsuba_accumulate(ConstSpan a, ConstSpan b, MutSpan out,
                          std::size_t threshold) {
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = b.size();
  if (n == 0) return;
  if (n < threshold) {
    schoolbook_accumulate(a, b, out);
    return;
  }
  if (a.size() != n) {
    // Unbalanced: slice the long operand into blocks of the short length.
    for (std::size_t off = 0; off < a.size(); off += n) {
      const std::size_t len = std::min(n, a.size() - off);
      karatsuba_accumulate(a.subspan(off, len), b, out.subspan(off),
                           threshold);
    }
    return;
  }

  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;  // hi >= lo
  ConstSpan a0 = a.first(lo), a1 = a.subspan(lo);
  ConstSpan b0 = b.first(lo), b1 = b.subspan(lo);

  std::vector<Integer> z0(2 * lo - 1);
  std::vector<Integer> z2(2 * hi - 1);
  karatsuba_accumulate(a0, b0, z0, threshold);
  karatsuba_accumulate(a1, b1, z2, threshold);

  std::vector<Integer> sa(a1.begin(), a1.end());
  std::vector<Integer> sb(b1.begin(), b1.end());
  for (std::size_t i = 0; i < lo; ++i) {
    sa[i] += a0[i];
    sb[i] += b0[i];
  }
  std::vector<Integer> z1(2 * hi - 1);
  karatsuba_accumulate(sa, sb, z1, threshold);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[lo + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * lo + i] += z2[i];
}

std::size_t max_bits(ConstSpan a) {
  std::size_t bits = 0;
  for (const Integer& x : a) {
    if (sgn(x) != 0) bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  }
  return bits;
}

// sum_i a[i] * 2^(64 * slot * i), built limb-wise from the positive and
// negative coefficients separately.
Integer kronecker_pack(ConstSpan a, std::size_t slot) {
  const std::size_t total = a.size() * slot;
  Integer pos;
  Integer neg;
  mp_limb_t* pl = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* nl = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill_n(pl, total, mp_limb_t{0});
  std::fill_n(nl, total, mp_limb_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_srcptr x = a[i].get_mpz_t();
    if (mpz_sgn(x) == 0) continue;
    const mp_limb_t* src = mpz_limbs_read(x);
    std::copy_n(src, mpz_size(x), (mpz_sgn(x) > 0 ? pl : nl) + i * slot);
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  pos -= neg;
  return pos;
}

// Inverse of kronecker_pack for `count` signed slots, each known to lie in
// (-2^(64*slot-1), 2^(64*slot-1)).
std::vector<Integer> kronecker_unpack(const Integer& packed, std::size_t slot,
                                      std::size_t count) {
  std::vector<Integer> out(count);
  const bool negative = sgn(packed) < 0;
  const std::size_t size = mpz_size(packed.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(packed.get_mpz_t());
  const std::size_t slot_bits = 64 * slot;
  Integer wrap;
  mpz_setbit(wrap.get_mpz_t(), slot_bits);
  Integer half;
  mpz_setbit(half.get_mpz_t(), slot_bits - 1);
  bool carry = false;
  for (std::size_t k = 0; k < count; ++k) {
    Integer& v = out[k];
    const std::size_t begin = std::min(size, k * slot);
    const std::size_t end = std::min(size, (k + 1) * slot);
    if (end > begin) {
      mp_limb_t* dst = mpz_limbs_write(v.get_mpz_t(), static_cast<mp_size_t>(end - begin));
      std::copy(src + begin, src + end, dst);
      mpz_limbs_finish(v.get_mpz_t(), static_cast<mp_size_t>(end - begin));
    }
    // The borrow can lift an all-ones slot to exactly 2^slot_bits.
    if (carry) v += 1;
    carry = v >= half;
    if (carry) v -= wrap;
    if (negative) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
  }
  return out;
}

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

IntPoly IntPoly::constant(const Integer& c) {
  return IntPoly(std::vector<Integer>{c});
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  if (sgn(c) == 0) return {};
  std::vector<Integer> coeffs(k + 1);
  coeffs[k] = c;
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::t_minus(long root) { return IntPoly{-root, 1}; }

std::optional<std::size_t> IntPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

void IntPoly::canonicalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  canonicalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size());
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  canonicalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = mul(*this, other);
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> coeffs(k + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), coeffs.begin() + k);
  return IntPoly(std::move(coeffs));
}

IntPoly IntPoly::scaled(const Integer& c) const {
  std::vector<Integer> coeffs(coeffs_);
  for (auto& x : coeffs) x *= c;
  return IntPoly(std::move(coeffs));
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  IntPoly out = p;
  out += q;
  return out;
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  IntPoly out = p;
  out -= q;
  return out;
}

IntPoly mul_schoolbook(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> out(p.size() + q.size() - 1);
  // Reserve once instead of growing on every addmul.
  const std::size_t bits = max_bits(p.coeffs()) + max_bits(q.coeffs()) + 64;
  if (bits > 256) {
    for (auto& c : out) mpz_realloc2(c.get_mpz_t(), bits);
  }
  schoolbook_accumulate(p.coeffs(), q.coeffs(), out);
  return IntPoly(std::move(out));
}

IntPoly mul_karatsuba(const IntPoly& p, const IntPoly& q,
                      std::size_t threshold) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Integer> out(p.size() + q.size() - 1);
  karatsuba_accumulate(p.coeffs(), q.coeffs(), out,
                       std::max<std::size_t>(threshold, 2));
  return IntPoly(std::move(out));
}

IntPoly mul_kronecker(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t shortest = std::min(p.size(), q.size());
  std::size_t log_len = 0;
  while ((std::size_t{1} << log_len) < shortest) ++log_len;
  // Every product coefficient is below 2^(bits_p + bits_q + log_len).
  const std::size_t need =
      max_bits(p.coeffs()) + max_bits(q.coeffs()) + log_len + 1;
  const std::size_t slot = (need + 63) / 64;
  Integer packed = kronecker_pack(p.coeffs(), slot);
  if (&p == &q) {
    packed *= packed;
  } else {
    packed *= kronecker_pack(q.coeffs(), slot);
  }
  return IntPoly(kronecker_unpack(packed, slot, p.size() + q.size() - 1));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  if (std::min(p.size(), q.size()) >= kKroneckerThreshold) {
    return mul_kronecker(p, q);
  }
  return mul_schoolbook(p, q);
}

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::kInvalidSize, "division by zero");
  if (p.is_zero()) return {};
  const std::size_t dp = p.size() - 1;
  const std::size_t dd = d.size() - 1;
  if (dp < dd) {
    throw Error(ErrorCode::kNonExactDivision,
                "dividend degree below divisor degree");
  }

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dd; ++j) {
    if (sgn(d.coeffs()[j]) != 0) support.push_back(j);
  }
  const Integer& lead = d.leading();
  const bool unit_lead = abs(lead) == 1;

  std::vector<Integer> rem = p.coeffs();
  std::vector<Integer> quot(dp - dd + 1);
  for (std::size_t i = dp - dd + 1; i-- > 0;) {
    Integer& top = rem[i + dd];
    if (sgn(top) == 0) continue;
    Integer& q = quot[i];
    if (unit_lead) {
      q = sgn(lead) > 0 ? top : Integer(-top);
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
        throw Error(ErrorCode::kNonExactDivision,
                    "leading coefficient does not divide");
      }
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    }
    for (std::size_t j : support) {
      mpz_submul(rem[i + j].get_mpz_t(), q.get_mpz_t(),
                 d.coeffs()[j].get_mpz_t());
    }
    top = 0;
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (sgn(rem[j]) != 0) {
      throw Error(ErrorCode::kNonExactDivision,
                  "nonzero remainder in exact division");
    }
  }
  return IntPoly(std::move(quot));
}

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += p.coeffs()[i];
  }
  return acc;
}

IntPoly pow(const IntPoly& base, std::size_t exponent) {
  IntPoly result{1};
  IntPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, square);
    exponent >>= 1;
    if (exponent > 0) square = mul(square, square);
  }
  return result;
}

IntPoly product(std::vector<IntPoly> factors) {
  if (factors.empty()) return IntPoly{1};
  auto longer = [](const IntPoly& a, const IntPoly& b) { return a.size() > b.size(); };
  std::make_heap(factors.begin(), factors.end(), longer);
  while (factors.size() > 1) {
    std::pop_heap(factors.begin(), factors.end(), longer);
    IntPoly a = std::move(factors.back());
    factors.pop_back();
    std::pop_heap(factors.begin(), factors.end(), longer);
    factors.back() = mul(a, factors.back());
    std::push_heap(factors.begin(), factors.end(), longer);
  }
  return std::move(factors.front());
}

IntPoly chromatic_complete(long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "complete graph needs n >= 1");
  std::vector<IntPoly> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) factors.push_back(IntPoly::t_minus(i));
  return product(std::move(factors));
}

IntPoly chromatic_cycle(long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "cycle needs n >= 1");
  const IntPoly t_minus_one = IntPoly::t_minus(1);
  IntPoly out = pow(t_minus_one, static_cast<std::size_t>(n));
  if (n % 2 == 0) {
    out += t_minus_one;
  } else {
    out -= t_minus_one;
  }
  return out;
}

IntPoly chromatic_tree(long n) {
  if (n < 1) throw Error(ErrorCode::kInvalidSize, "tree needs n >= 1");
  return pow(IntPoly::t_minus(1), static_cast<std::size_t>(n - 1)).shifted(1);
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p.coeffs()[i];
    if (sgn(c) == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace vjpoly
