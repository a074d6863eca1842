#include "symdeg/andor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "symdeg/properties.hpp"

namespace symdeg {

BoolAssignment::BoolAssignment(int n, std::vector<bool> bits) : n_(n), bits_(std::move(bits)) {
  if (n < 1) throw std::invalid_argument("BoolAssignment: n must be positive");
  if (bits_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw std::invalid_argument("BoolAssignment: expected n^2 bits");
  }
}

bool andor_value(const BoolAssignment& x) {
  const int n = x.n();
  for (int i = 1; i <= n; ++i) {
    bool any = false;
    for (int j = 1; j <= n && !any; ++j) any = x[(i - 1) * n + j];
    if (!any) return false;
  }
  return true;
}

XMonomial::XMonomial(std::initializer_list<int> vars) : XMonomial(std::vector<int>(vars)) {}

XMonomial::XMonomial(std::vector<int> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

XPolynomial::XPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("XPolynomial: n must be positive");
}

Degree XPolynomial::degree() const {
  if (terms_.empty()) return kNoDegree;
  std::size_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.size());
  return d;
}

void XPolynomial::add_term(const XMonomial& mono, const Rational& c) {
  for (int k : mono.vars()) {
    if (k < 1 || k > n_ * n_) throw std::out_of_range("x_" + std::to_string(k) + " outside 1..n^2");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational eval_x(const XPolynomial& p, const BoolAssignment& x) {
  if (p.n() != x.n()) throw std::invalid_argument("eval_x: n mismatch");
  Rational sum;
  for (const auto& [mono, c] : p.terms()) {
    if (std::all_of(mono.vars().begin(), mono.vars().end(), [&](int k) { return x[k]; })) sum += c;
  }
  return sum;
}

YPolynomial substitute(const XPolynomial& p) {
  const int n = p.n();
  YPolynomial out({n, n});
  for (const auto& [mono, c] : p.terms()) {
    std::vector<Factor> factors;
    factors.reserve(mono.size());
    for (int k : mono.vars()) {
      const int group = (k - 1) / n + 1;
      const int pos = (k - 1) % n + 1;
      factors.push_back({pos, group});
    }
    if (auto y = normalize(factors)) out.add_term(*y, c);
  }
  return out;
}

BoolAssignment f_to_assignment(const FunctionTable& f) {
  if (f.m() != f.n()) throw std::invalid_argument("f_to_assignment: requires m == n");
  const int n = f.n();
  std::vector<bool> bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  for (int j = 1; j <= n; ++j) {
    const int i = f(j);
    bits[static_cast<std::size_t>((i - 1) * n + j - 1)] = true;
  }
  return BoolAssignment(n, std::move(bits));
}

AndOrBound andor_degree_bound(int n, const Rational& eps) {
  const DegreeCertificate cert = approx_degree(PropertySpec::element_distinctness(), n, n, eps);
  return {n, n * n, eps, cert.degree, cert.degree};
}

}  // namespace symdeg
