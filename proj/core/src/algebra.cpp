#include "circsep/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circsep {

bool is_prime(int d) {
  if (d < 2) return false;
  for (int q = 2; static_cast<long long>(q) * q <= d; ++q) {
    if (d % q == 0) return false;
  }
  return true;
}

ModRing::ModRing(int d) : d_(d), prime_(circsep::is_prime(d)) {
  if (d < 2) throw validation_error("ModRing: dimension must be >= 2, got " + std::to_string(d));
}

int ModRing::reduce(long long x) const {
  long long r = x % d_;
  if (r < 0) r += d_;
  return static_cast<int>(r);
}

int ModRing::pow(int a, long long e) const {
  if (e < 0) throw validation_error("ModRing::pow: negative exponent");
  long long base = reduce(a);
  long long acc = 1;
  while (e > 0) {
    if (e & 1) acc = (acc * base) % d_;
    base = (base * base) % d_;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

int ModRing::inverse(int a) const {
  if (!prime_) throw validation_error("ModRing::inverse: modulus " + std::to_string(d_) + " is not prime");
  if (reduce(a) == 0) throw validation_error("ModRing::inverse: zero has no inverse");
  return pow(a, d_ - 2);
}

cxd eta_pow(int d, long long e) {
  if (d < 2) throw validation_error("eta_pow: dimension must be >= 2, got " + std::to_string(d));
  long long r = e % d;
  if (r < 0) r += d;
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

PermutationZd::PermutationZd(std::vector<int> values) : v_(std::move(values)) {
  const int d = static_cast<int>(v_.size());
  if (d < 1) throw validation_error("PermutationZd: empty value list");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (int x : v_) {
    if (x < 0 || x >= d || seen[static_cast<std::size_t>(x)])
      throw validation_error("PermutationZd: values are not a bijection on {0..d-1}");
    seen[static_cast<std::size_t>(x)] = true;
  }
  if (v_[0] != 0) throw validation_error("PermutationZd: p(0) must be 0");
}

PermutationZd PermutationZd::identity(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = i;
  return PermutationZd(std::move(v));
}

bool PermutationZd::is_identity() const {
  for (int i = 0; i < d(); ++i)
    if (v_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

PermutationZd PermutationZd::inverse() const {
  std::vector<int> inv(v_.size());
  for (int x = 0; x < d(); ++x) inv[static_cast<std::size_t>(v_[static_cast<std::size_t>(x)])] = x;
  return PermutationZd(std::move(inv));
}

PermutationZd PermutationZd::negated() const {
  std::vector<int> out(v_.size());
  for (int x = 0; x < d(); ++x) {
    int px = v_[static_cast<std::size_t>(x)];
    out[static_cast<std::size_t>(x)] = px == 0 ? 0 : d() - px;
  }
  return PermutationZd(std::move(out));
}

namespace {

// GF(2^n): elements are bit vectors over GF(2), addition is XOR.
std::vector<int> xor_table(int q) {
  std::vector<int> t(static_cast<std::size_t>(q * q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[static_cast<std::size_t>(a * q + b)] = a ^ b;
  return t;
}

// GF(9) = GF(3)[x]/(x^2+1): element index 3*hi + lo with (lo, hi) in Z_3^2,
// addition componentwise mod 3.
std::vector<int> gf9_table() {
  std::vector<int> t(81);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      int lo = ((a % 3) + (b % 3)) % 3;
      int hi = ((a / 3) + (b / 3)) % 3;
      t[static_cast<std::size_t>(a * 9 + b)] = 3 * hi + lo;
    }
  return t;
}

}  // namespace

GfAddTable GfAddTable::of(int q) {
  switch (q) {
    case 4:
      return GfAddTable(4, xor_table(4));
    case 8:
      return GfAddTable(8, xor_table(8));
    case 9:
      return GfAddTable(9, gf9_table());
    default:
      throw validation_error("GfAddTable: unsupported field order " + std::to_string(q) +
                             " (supported: 4, 8, 9)");
  }
}

int GfAddTable::neg(int a) const {
  for (int b = 0; b < q_; ++b)
    if (add(a, b) == 0) return b;
  throw numeric_error("GfAddTable: no additive inverse found (corrupt table)");
}

}  // namespace circsep
