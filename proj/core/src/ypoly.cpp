#include "symdeg/ypoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace symdeg {

YMonomial::YMonomial(std::initializer_list<Factor> factors) : YMonomial(std::vector<Factor>(factors)) {}

YMonomial::YMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  factors_.erase(std::unique(factors_.begin(), factors_.end()), factors_.end());
}

bool YMonomial::is_normal() const {
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    if (factors_[k].row == factors_[k - 1].row) return false;
  }
  return true;
}

std::optional<YMonomial> normalize(std::span<const Factor> factors) {
  YMonomial mono(std::vector<Factor>(factors.begin(), factors.end()));
  if (!mono.is_normal()) return std::nullopt;
  return mono;
}

std::optional<YMonomial> normalize(const YMonomial& mono) {
  if (!mono.is_normal()) return std::nullopt;
  return mono;
}

FunctionTable::FunctionTable(int n, int m, std::vector<int> values) : n_(n), m_(m), values_(std::move(values)) {
  if (n < 0 || m < 1) throw std::invalid_argument("FunctionTable: need n >= 0 and m >= 1");
  if (values_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("FunctionTable: expected " + std::to_string(n) + " values");
  }
  for (int v : values_) {
    if (v < 1 || v > m) throw std::invalid_argument("FunctionTable: value out of range [1, m]");
  }
}

std::vector<int> FunctionTable::counts() const {
  std::vector<int> z(static_cast<std::size_t>(m_), 0);
  for (int v : values_) ++z[static_cast<std::size_t>(v - 1)];
  return z;
}

YPolynomial::YPolynomial(Dims dims) : dims_(dims) {
  if (dims.n < 0 || dims.m < 1) throw std::invalid_argument("YPolynomial: need n >= 0 and m >= 1");
}

YPolynomial YPolynomial::constant(Dims dims, const Rational& c) {
  YPolynomial p(dims);
  p.add_term(YMonomial{}, c);
  return p;
}

void YPolynomial::add_term(const YMonomial& mono, const Rational& c) {
  for (const Factor& y : mono.factors()) {
    if (y.row < 1 || y.row > dims_.n || y.col < 1 || y.col > dims_.m) {
      std::ostringstream msg;
      msg << "factor y_{" << y.row << ',' << y.col << "} outside dims (" << dims_.n << ", " << dims_.m << ')';
      throw std::out_of_range(msg.str());
    }
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& rhs) {
  if (rhs.dims_ != dims_) throw std::invalid_argument("YPolynomial: dims mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& rhs) {
  if (rhs.dims_ != dims_) throw std::invalid_argument("YPolynomial: dims mismatch");
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

YPolynomial& YPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

YPolynomial normalize(const YPolynomial& p) {
  YPolynomial out(p.dims());
  for (const auto& [mono, c] : p.terms()) {
    if (auto reduced = normalize(mono)) out.add_term(*reduced, c);
  }
  return out;
}

YPolynomial multiply(const YPolynomial& a, const YPolynomial& b) {
  if (a.dims() != b.dims()) throw std::invalid_argument("multiply: dims mismatch");
  YPolynomial out(a.dims());
  std::vector<Factor> merged;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      merged.assign(ma.factors().begin(), ma.factors().end());
      merged.insert(merged.end(), mb.factors().begin(), mb.factors().end());
      if (auto mono = normalize(merged)) out.add_term(*mono, ca * cb);
    }
  }
  return out;
}

Rational eval_y(const YPolynomial& p, const FunctionTable& f) {
  if (p.dims() != f.dims()) throw std::invalid_argument("eval_y: polynomial and function dims differ");
  Rational sum;
  for (const auto& [mono, c] : p.terms()) {
    const bool fires = std::all_of(mono.factors().begin(), mono.factors().end(),
                                   [&](const Factor& y) { return f.indicator(y); });
    if (fires) sum += c;
  }
  return sum;
}

Degree degree_y(const YPolynomial& p) {
  if (p.is_zero()) return kNoDegree;
  std::size_t d = 0;
  for (const auto& [mono, c] : p.terms()) d = std::max(d, mono.size());
  return d;
}

std::ostream& operator<<(std::ostream& os, const YMonomial& mono) {
  if (mono.empty()) return os << '1';
  bool first = true;
  for (const Factor& y : mono.factors()) {
    if (!first) os << '*';
    os << "y" << y.row << '_' << y.col;
    first = false;
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const YPolynomial& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    const Rational mag = c.sign() < 0 ? -c : c;
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << '*';
      os << mono;
    }
    first = false;
  }
  return os;
}

std::string to_string(Degree d) { return d ? std::to_string(*d) : std::string("none"); }

}  // namespace symdeg
