#pragma once

#include <vector>

#include "circsep/types.hpp"

namespace circsep {

/// Arithmetic in Z_d, the integers modulo d (d >= 2).
///
/// Values are kept in [0, d). The primality flag drives the operations that
/// need multiplicative inverses (Fermat exponentiation), which only exist
/// for prime d.
class ModRing {
 public:
  explicit ModRing(int d);

  int d() const { return d_; }
  bool is_prime() const { return prime_; }

  int reduce(long long x) const;
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return reduce(-static_cast<long long>(a)); }

  /// a^e mod d by repeated squaring, e >= 0.
  int pow(int a, long long e) const;
  /// Multiplicative inverse via Fermat (a^{d-2}); requires prime d, a != 0.
  int inverse(int a) const;

 private:
  int d_;
  bool prime_;
};

bool is_prime(int d);

/// eta^e with eta = e^{2*pi*i/d}. The exponent is reduced mod d before the
/// sin/cos evaluation so small roots stay exactly representable where the
/// library functions allow it.
cxd eta_pow(int d, long long e);

/// A permutation p of Z_d with the standing proviso p(0) = 0.
/// Bijectivity and p(0)=0 are checked at construction and trusted afterwards.
class PermutationZd {
 public:
  /// Empty placeholder (d() == 0); every consumer validates sizes anyway.
  PermutationZd() = default;
  explicit PermutationZd(std::vector<int> values);
  static PermutationZd identity(int d);

  int d() const { return static_cast<int>(v_.size()); }
  int operator()(int x) const { return v_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& values() const { return v_; }
  bool is_identity() const;

  /// The inverse permutation sigma = p^{-1} (sigma(p(x)) = x).
  PermutationZd inverse() const;
  /// x -> (d - p(x)) mod d; again a permutation fixing 0.
  PermutationZd negated() const;

  friend bool operator==(const PermutationZd& a, const PermutationZd& b) {
    return a.v_ == b.v_;
  }

 private:
  std::vector<int> v_;
};

/// Addition table of a small Galois field GF(q), q in {4, 8, 9}, in a fixed
/// polynomial basis. Only addition is exposed: the support-pattern
/// construction never multiplies field elements.
class GfAddTable {
 public:
  static GfAddTable of(int q);

  int q() const { return q_; }
  int add(int a, int b) const { return t_[static_cast<std::size_t>(a * q_ + b)]; }
  /// Additive inverse (equals `a` itself in characteristic two).
  int neg(int a) const;

 private:
  GfAddTable(int q, std::vector<int> t) : q_(q), t_(std::move(t)) {}
  int q_;
  std::vector<int> t_;
};

}  // namespace circsep
