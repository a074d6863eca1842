#include "symdeg/sympoly.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace symdeg {

namespace {

Partition nonzero_partition(std::span<const int> counts) {
  std::vector<int> parts;
  for (int c : counts) {
    if (c < 0) throw std::invalid_argument("FrequencyVector: negative frequency");
    if (c > 0) parts.push_back(c);
  }
  return Partition(std::move(parts));
}

mpz_class factorial(long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

// Groups of equal parts as (value, multiplicity), largest value first.
std::vector<std::pair<int, int>> part_groups(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> groups;
  for (int p : parts) {
    if (!groups.empty() && groups.back().first == p) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p, 1);
    }
  }
  return groups;
}

// Sum over assignments of each group to a disjoint *set* of coordinates, so
// every distinct monomial is produced exactly once.
class MsymEvaluator {
 public:
  MsymEvaluator(const std::vector<std::pair<int, int>>& groups, const std::vector<int>& coords)
      : groups_(groups), coords_(coords), used_(coords.size(), false) {}

  mpz_class run() { return group(0); }

 private:
  mpz_class group(std::size_t g) {
    if (g == groups_.size()) return 1;
    return choose(g, groups_[g].second, 0);
  }

  mpz_class choose(std::size_t g, int left, std::size_t start) {
    if (left == 0) return group(g + 1);
    mpz_class total = 0;
    const auto exponent = static_cast<unsigned long>(groups_[g].first);
    for (std::size_t c = start; c < coords_.size(); ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(coords_[c]), exponent);
      total += power * choose(g, left - 1, c + 1);
      used_[c] = false;
    }
    return total;
  }

  const std::vector<std::pair<int, int>>& groups_;
  const std::vector<int>& coords_;
  std::vector<bool> used_;
};

}  // namespace

FrequencyVector::FrequencyVector(int m, std::span<const int> counts) : m_(m), nonzero_(nonzero_partition(counts)) {
  if (counts.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("FrequencyVector: expected " + std::to_string(m) + " coordinates");
  }
}

FrequencyVector::FrequencyVector(int m, Partition nonzero) : m_(m), nonzero_(std::move(nonzero)) {
  if (m < 1) throw std::invalid_argument("FrequencyVector: m must be positive");
  if (nonzero_.length() > static_cast<std::size_t>(m)) {
    throw std::invalid_argument("FrequencyVector: class " + to_string(nonzero_) + " needs more than m=" +
                                std::to_string(m) + " coordinates");
  }
}

FrequencyVector FrequencyVector::of(const FunctionTable& f) {
  const auto z = f.counts();
  return FrequencyVector(f.m(), z);
}

std::vector<int> FrequencyVector::padded() const {
  std::vector<int> out(nonzero_.parts());
  out.resize(static_cast<std::size_t>(m_), 0);
  return out;
}

mpz_class eval_msym(const Partition& lambda, const FrequencyVector& z) {
  if (lambda.length() > static_cast<std::size_t>(z.m())) return 0;
  // Zero coordinates contribute nothing since every part is >= 1.
  const auto groups = part_groups(lambda.parts());
  return MsymEvaluator(groups, z.nonzero().parts()).run();
}

SymPolynomial::SymPolynomial(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("SymPolynomial: m must be positive");
}

SymPolynomial SymPolynomial::constant(int m, const Rational& c) { return basis(m, Partition{}, c); }

SymPolynomial SymPolynomial::basis(int m, const Partition& lambda, const Rational& c) {
  SymPolynomial q(m);
  q.add_term(lambda, c);
  return q;
}

Degree SymPolynomial::degree() const {
  if (coeffs_.empty()) return kNoDegree;
  std::size_t d = 0;
  for (const auto& [lambda, c] : coeffs_) d = std::max(d, static_cast<std::size_t>(lambda.weight()));
  return d;
}

Rational SymPolynomial::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Rational() : it->second;
}

void SymPolynomial::add_term(const Partition& lambda, const Rational& c) {
  if (lambda.length() > static_cast<std::size_t>(m_) || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& rhs) {
  if (rhs.m_ != m_) throw std::invalid_argument("SymPolynomial: variable count mismatch");
  for (const auto& [lambda, c] : rhs.coeffs_) add_term(lambda, c);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : coeffs_) coeff *= c;
  return *this;
}

Rational eval_sym(const SymPolynomial& q, const FrequencyVector& z) {
  if (q.m() != z.m()) throw std::invalid_argument("eval_sym: polynomial and frequency vector disagree on m");
  Rational sum;
  for (const auto& [lambda, c] : q.coeffs()) sum += c * Rational(eval_msym(lambda, z));
  return sum;
}

ZPolynomial::ZPolynomial(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("ZPolynomial: m must be positive");
}

ZPolynomial ZPolynomial::constant(int m, const Rational& c) {
  ZPolynomial q(m);
  q.add_term(Exponents(static_cast<std::size_t>(m), 0), c);
  return q;
}

ZPolynomial ZPolynomial::affine(int m, int j, const Rational& c) {
  if (j < 1 || j > m) throw std::out_of_range("ZPolynomial::affine: variable index out of range");
  ZPolynomial q = constant(m, c);
  Exponents e(static_cast<std::size_t>(m), 0);
  e[static_cast<std::size_t>(j - 1)] = 1;
  q.add_term(std::move(e), Rational(1));
  return q;
}

Degree ZPolynomial::degree() const {
  if (terms_.empty()) return kNoDegree;
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::size_t total = 0;
    for (int x : e) total += static_cast<std::size_t>(x);
    d = std::max(d, total);
  }
  return d;
}

void ZPolynomial::add_term(Exponents exps, const Rational& c) {
  if (exps.size() != static_cast<std::size_t>(m_)) throw std::invalid_argument("ZPolynomial: exponent length != m");
  if (std::any_of(exps.begin(), exps.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("ZPolynomial: negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& rhs) {
  if (rhs.m_ != m_) throw std::invalid_argument("ZPolynomial: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("ZPolynomial: variable count mismatch");
  ZPolynomial out(a.m_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ZPolynomial::Exponents e(ea);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

Rational ZPolynomial::eval(std::span<const int> z) const {
  if (z.size() != static_cast<std::size_t>(m_)) throw std::invalid_argument("ZPolynomial::eval: expected m coordinates");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    mpz_class term = 1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), mpz_class(z[k]).get_mpz_t(), static_cast<unsigned long>(e[k]));
      term *= power;
    }
    sum += c * Rational(term);
  }
  return sum;
}

SymPolynomial symmetrize_over_variables(const ZPolynomial& q) {
  SymPolynomial out(q.m());
  const mpz_class m_fact = factorial(q.m());
  for (const auto& [e, c] : q.terms()) {
    std::vector<int> parts;
    for (int x : e) {
      if (x > 0) parts.push_back(x);
    }
    Partition lambda(std::move(parts));
    // The S_m orbit of z^e has m! / ((m - l)! * prod(mult!)) elements, each
    // one a distinct monomial of m_lambda, so the average is m_lambda / |orbit|.
    mpz_class stabilizer = factorial(q.m() - static_cast<long>(lambda.length()));
    for (const auto& [value, mult] : part_groups(lambda.parts())) stabilizer *= factorial(mult);
    const mpz_class orbit = m_fact / stabilizer;
    out.add_term(lambda, c / Rational(orbit));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymPolynomial& q) {
  if (q.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [lambda, c] : q.coeffs()) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    const Rational mag = c.sign() < 0 ? -c : c;
    if (lambda.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << 'm' << lambda;
    }
    first = false;
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const FrequencyVector& z) {
  const auto v = z.padded();
  os << '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) os << ',';
    os << v[k];
  }
  return os << ']';
}

}  // namespace symdeg
