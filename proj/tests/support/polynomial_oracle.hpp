#pragma once

// Brute-force multivariate polynomials over Q in Chern roots t_1..t_n.
// Test-only: an independent check of the symmetric-function shortcuts.

#include <map>
#include <vector>

#include "chern/arith.hpp"

namespace oracle {

using chern::ExactRat;

class Poly {
 public:
  explicit Poly(int vars) : vars_(vars) {}

  static Poly constant(int vars, const ExactRat& c) {
    Poly p(vars);
    p.add_term(std::vector<int>(vars, 0), c);
    return p;
  }
  static Poly variable(int vars, int i) {
    Poly p(vars);
    std::vector<int> e(vars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
  }

  int vars() const { return vars_; }
  const std::map<std::vector<int>, ExactRat>& terms() const { return terms_; }

  void add_term(const std::vector<int>& e, const ExactRat& c) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator*(const ExactRat& s, const Poly& a) {
    Poly out(a.vars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + ExactRat(-1) * b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Homogeneous part of total degree d.
  Poly degree_part(int d) const {
    Poly out(vars_);
    for (const auto& [e, c] : terms_) {
      int total = 0;
      for (int x : e) total += x;
      if (total == d) out.add_term(e, c);
    }
    return out;
  }

  /// Imposes t_1 + ... + t_n = 0 by substituting t_n = -(t_1 + ... + t_{n-1}).
  /// The result lives in n - 1 variables.
  Poly eliminate_last() const {
    const int m = vars_ - 1;
    Poly minus_sum(m);
    for (int i = 0; i < m; ++i) minus_sum += ExactRat(-1) * variable(m, i);
    Poly out(m);
    for (const auto& [e, c] : terms_) {
      Poly term = constant(m, c);
      std::vector<int> head(e.begin(), e.end() - 1);
      Poly mono(m);
      mono.add_term(head, 1);
      term = term * mono;
      for (int k = 0; k < e.back(); ++k) term = term * minus_sum;
      out += term;
    }
    return out;
  }

 private:
  int vars_;
  std::map<std::vector<int>, ExactRat> terms_;
};

/// Calls f on every strictly increasing index tuple of length r from 0..n-1.
template <class F>
void for_each_subset(int n, int r, F&& f) {
  std::vector<int> idx(r);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == r) {
      f(idx);
      return;
    }
    for (int i = start; i < n; ++i) {
      idx[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

inline Poly elementary(int n, int r) {
  Poly out(n);
  for_each_subset(n, r, [&](const std::vector<int>& idx) {
    std::vector<int> e(n, 0);
    for (int i : idx) e[i] = 1;
    out.add_term(e, 1);
  });
  return out;
}

/// Sum over monomials t_a^{shape[0]} t_b^{shape[1]} ... with a, b, ... distinct,
/// each monomial counted once.
inline Poly monomial_symmetric(int n, const std::vector<int>& shape) {
  Poly out(n);
  std::vector<int> idx(shape.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == shape.size()) {
      std::vector<int> e(n, 0);
      for (std::size_t i = 0; i < shape.size(); ++i) e[idx[i]] += shape[i];
      out.add_term(e, 1);
      return;
    }
    for (int i = 0; i < n; ++i) {
      bool used = false;
      for (std::size_t j = 0; j < pos; ++j) used = used || idx[j] == i;
      if (used) continue;
      idx[pos] = i;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  // Each monomial was produced once per permutation of equal exponents.
  ExactRat repeats = 1;
  std::map<int, int> counts;
  for (int s : shape) ++counts[s];
  for (const auto& [s, c] : counts)
    for (int i = 2; i <= c; ++i) repeats *= i;
  return ExactRat(1 / repeats) * out;
}

/// Degree <= 3 truncation of sum over i-subsets of exp(t_{l1} + ... + t_{li}).
inline Poly ch_elementary_by_splitting(int n, int i) {
  Poly out(n);
  for_each_subset(n, i, [&](const std::vector<int>& idx) {
    Poly lin(n);
    for (int a : idx) lin += Poly::variable(n, a);
    const Poly sq = lin * lin;
    out += Poly::constant(n, 1);
    out += lin;
    out += ExactRat(1, 2) * sq;
    out += ExactRat(1, 6) * (sq * lin);
  });
  return out;
}

}  // namespace oracle
