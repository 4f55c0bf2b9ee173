#include "chern/reps.hpp"

#include <algorithm>
#include <numeric>

namespace chern {

GroupParams::GroupParams(const PrimeParam& ell, long k) : ell_(ell), k_(k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const long l = static_cast<long>(ell_.ulong());
  if (k > 100000 || l > 100000) throw PreconditionError("group parameters out of supported range");
  n_ = k * l;
  ell_prime_ = l == 2 ? 4 : l;
}

BasisElement::BasisElement(const GroupParams& params, std::vector<int> parts)
    : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
  long sum = 0;
  for (int a : parts_) {
    if (a < 1 || a > params.n() - 1)
      throw DescentError("part " + std::to_string(a) + " outside 1.." + std::to_string(params.n() - 1));
    sum += a;
  }
  if (sum % params.ell() != 0)
    throw DescentError("e-monomial " + to_string() + " has degree " + std::to_string(sum) +
                       ", not divisible by " + std::to_string(params.ell()));
}

BasisElement BasisElement::trusted(std::vector<int> sorted_parts) {
  BasisElement out;
  out.parts_ = std::move(sorted_parts);
  return out;
}

std::string BasisElement::to_string() const {
  if (parts_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    out += "e" + std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b) {
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

VirtualRep& VirtualRep::add(const BasisElement& s, const ExactInt& mult) {
  if (mult == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(s, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

VirtualRep& VirtualRep::add_power_sum(long j, const ExactInt& mult) {
  if (j < 1) throw PreconditionError("power sum index must be at least 1");
  if (mult == 0) return *this;
  auto [it, inserted] = power_sums_.try_emplace(j, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) power_sums_.erase(it);
  }
  return *this;
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& o) {
  for (const auto& [s, m] : o.terms_) add(s, m);
  for (const auto& [j, m] : o.power_sums_) add_power_sum(j, m);
  return *this;
}

VirtualRep operator*(const ExactInt& s, const VirtualRep& v) {
  VirtualRep out;
  for (const auto& [b, m] : v.terms_) out.add(b, s * m);
  for (const auto& [j, m] : v.power_sums_) out.add_power_sum(j, s * m);
  return out;
}

namespace {

void append_term(std::string& out, const ExactInt& mult, const std::string& name) {
  const bool negative = mult < 0;
  const ExactInt mag = abs(mult);
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  if (name.empty())
    out += mag.get_str();
  else
    out += (mag == 1 ? std::string() : mag.get_str()) + name;
}

}  // namespace

std::string VirtualRep::to_string() const {
  std::string out;
  for (const auto& [j, m] : power_sums_) append_term(out, m, "p" + std::to_string(j));
  for (const auto& [s, m] : terms_)
    if (!s.empty()) append_term(out, m, s.to_string());
  if (auto it = terms_.find(BasisElement()); it != terms_.end()) append_term(out, it->second, "");
  return out.empty() ? "0" : out;
}

ExactInt rank_of(const GroupParams& params, const BasisElement& s) {
  ExactInt r = 1;
  for (int a : s.parts()) r *= binomial(params.n(), a);
  return r;
}

namespace {

ExactInt rank_without(const GroupParams& params, const BasisElement& s, std::size_t skip) {
  ExactInt r = 1;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != skip) r *= binomial(params.n(), s.parts()[i]);
  return r;
}

}  // namespace

ExactInt c2_of(const GroupParams& params, const BasisElement& s) {
  const long n = params.n();
  ExactInt total = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    total += binomial(n - 2, s.parts()[i] - 1) * rank_without(params, s, i);
  return total;
}

ExactInt c3_of(const GroupParams& params, const BasisElement& s) {
  const long n = params.n();
  if (n <= 2) return chern_via_engine(params, s).c3;
  const ExactInt denom = n - 2;
  ExactInt integral = 0;
  ExactInt leftover = 0;  // numerators of non-integral terms, over denom
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int a = s.parts()[i];
    const ExactInt num = binomial(n - 2, a - 1) * (n - 2L * a);
    const ExactInt rest = rank_without(params, s, i);
    if (mpz_divisible_p(num.get_mpz_t(), denom.get_mpz_t())) {
      integral += (num / denom) * rest;
    } else {
      leftover += num * rest;
    }
  }
  if (leftover != 0) integral += require_integral(make_rat(leftover, denom), "C3 closed form");
  return integral;
}

ChernData chern_via_engine(const GroupParams& params, const BasisElement& s) {
  ChCoefficients acc = ChCoefficients::unit();
  for (int a : s.parts()) acc = ch_product(acc, ch_of_elementary(params.n(), a));
  return to_chern(acc);
}

ChernData chern_of_virtual(const GroupParams& params, const VirtualRep& v) {
  ChernData total{0, 0, 0};
  for (const auto& [s, m] : v.terms()) {
    // Re-validate: the element may have been built for different params.
    BasisElement checked(params, s.parts());
    total += m * ChernData{rank_of(params, checked), c2_of(params, checked), c3_of(params, checked)};
  }
  for (const auto& [j, m] : v.power_sums()) {
    if (j % params.ell() != 0)
      throw DescentError("p" + std::to_string(j) + " does not descend: " + std::to_string(params.ell()) +
                         " does not divide " + std::to_string(j));
    const ExactInt jj = j;
    total += m * ChernData{params.n(), jj * jj, jj * jj * jj};
  }
  return total;
}

namespace {

void extend(const GroupParams& params, std::size_t size, std::vector<int>& prefix, long sum,
            std::vector<BasisElement>& out) {
  const long n = params.n();
  const long ell = params.ell();
  const int lo = prefix.empty() ? 1 : prefix.back();
  if (prefix.size() + 1 == size) {
    for (long a = lo; a <= n - 1; ++a) {
      if ((sum + a) % ell != 0) continue;
      prefix.push_back(static_cast<int>(a));
      out.push_back(BasisElement::trusted(prefix));
      prefix.pop_back();
    }
    return;
  }
  for (long a = lo; a <= n - 1; ++a) {
    prefix.push_back(static_cast<int>(a));
    extend(params, size, prefix, sum + a, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BasisElement> enumerate_basis(const GroupParams& params, long max_size) {
  if (max_size < 0) throw PreconditionError("max_size must be non-negative");
  std::vector<BasisElement> out{BasisElement()};
  std::vector<int> prefix;
  for (long size = 1; size <= max_size; ++size) extend(params, static_cast<std::size_t>(size), prefix, 0, out);
  return out;
}

ElementaryTable::ElementaryTable(const GroupParams& params)
    : params_(params), rank_(params.n()), c2_(params.n()), c3_(params.n()) {
  const long n = params.n();
  for (long a = 1; a <= n - 1; ++a) {
    rank_[a] = binomial(n, a);
    c2_[a] = binomial(n - 2, a - 1);
    if (n <= 2) {
      c3_[a] = to_chern(ch_of_elementary(n, a)).c3;
    } else {
      c3_[a] = require_integral(make_rat(binomial(n - 2, a - 1) * (n - 2 * a), n - 2), "C3(e_a)");
    }
  }
}

ChernData ElementaryTable::chern_of(const BasisElement& s) const {
  const auto& parts = s.parts();
  const std::size_t m = parts.size();
  // suffix[i] = prod_{j >= i} rank(parts[j])
  std::vector<ExactInt> suffix(m + 1);
  suffix[m] = 1;
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * rank_[parts[i]];
  ChernData out{suffix[0], 0, 0};
  ExactInt prefix = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const ExactInt others = prefix * suffix[i + 1];
    out.c2 += c2_[parts[i]] * others;
    out.c3 += c3_[parts[i]] * others;
    prefix *= rank_[parts[i]];
  }
  return out;
}

}  // namespace chern
