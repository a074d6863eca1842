#include "symdeg/symmetrize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace symdeg {

namespace {

mpz_class factorial(long k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

mpz_class multinomial(int n, std::span<const int> parts) {
  mpz_class out = factorial(n);
  for (int p : parts) out /= factorial(p);
  return out;
}

void validate_counts(Dims dims, std::span<const int> z) {
  if (z.size() != static_cast<std::size_t>(dims.m)) {
    throw std::invalid_argument("frequency vector must have m coordinates");
  }
  if (std::any_of(z.begin(), z.end(), [](int c) { return c < 0; })) {
    throw std::invalid_argument("frequency vector has a negative entry");
  }
  if (std::accumulate(z.begin(), z.end(), 0) != dims.n) {
    throw std::invalid_argument("frequency vector does not sum to n");
  }
}

// Calls visit(f) for each function with ordered counts z.
template <typename Visit>
void for_each_function_with_counts(Dims dims, std::span<const int> z, Visit&& visit) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(dims.n));
  for (int j = 0; j < dims.m; ++j) values.insert(values.end(), static_cast<std::size_t>(z[j]), j + 1);
  do {
    visit(FunctionTable(dims.n, dims.m, values));
  } while (std::next_permutation(values.begin(), values.end()));
}

// (Sum_i y_{i,col})^e, multilinearized. Cached per (col, e).
class ColumnPowers {
 public:
  explicit ColumnPowers(Dims dims) : dims_(dims) {}

  const YPolynomial& get(int col, int e) {
    auto key = std::make_pair(col, e);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    YPolynomial value(dims_);
    if (e == 1) {
      for (int i = 1; i <= dims_.n; ++i) value.add_term(YMonomial{{i, col}}, Rational(1));
    } else {
      value = multiply(get(col, e - 1), get(col, 1));
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  Dims dims_;
  std::map<std::pair<int, int>, YPolynomial> cache_;
};

// Expands m_lambda over columns 1..m, calling emit(product) for each distinct monomial.
class MonomialExpander {
 public:
  MonomialExpander(Dims dims, const Partition& lambda, ColumnPowers& powers) : dims_(dims), powers_(powers) {
    for (int p : lambda.parts()) {
      if (!groups_.empty() && groups_.back().first == p) {
        ++groups_.back().second;
      } else {
        groups_.emplace_back(p, 1);
      }
    }
    used_.assign(static_cast<std::size_t>(dims.m) + 1, false);
  }

  YPolynomial expand() {
    YPolynomial total(dims_);
    expand_group(0, YPolynomial::constant(dims_, Rational(1)), total);
    return total;
  }

 private:
  void expand_group(std::size_t g, const YPolynomial& acc, YPolynomial& total) {
    if (g == groups_.size()) {
      total += acc;
      return;
    }
    choose(g, groups_[g].second, 1, acc, total);
  }

  void choose(std::size_t g, int left, int start, const YPolynomial& acc, YPolynomial& total) {
    if (left == 0) {
      expand_group(g + 1, acc, total);
      return;
    }
    for (int col = start; col <= dims_.m; ++col) {
      if (used_[static_cast<std::size_t>(col)]) continue;
      YPolynomial next = multiply(acc, powers_.get(col, groups_[g].first));
      if (next.is_zero()) continue;
      used_[static_cast<std::size_t>(col)] = true;
      choose(g, left - 1, col + 1, next, total);
      used_[static_cast<std::size_t>(col)] = false;
    }
  }

  Dims dims_;
  ColumnPowers& powers_;
  std::vector<std::pair<int, int>> groups_;
  std::vector<bool> used_;
};

}  // namespace

ZPolynomial expectation_polynomial(const YMonomial& mono, Dims dims) {
  if (!mono.is_normal()) throw std::invalid_argument("expectation_polynomial: monomial is not normalized");
  for (const Factor& y : mono.factors()) {
    if (y.row < 1 || y.row > dims.n || y.col < 1 || y.col > dims.m) {
      throw std::invalid_argument("expectation_polynomial: factor outside dims");
    }
  }
  ZPolynomial result = ZPolynomial::constant(dims.m, Rational(1));
  std::map<int, int> seen_in_column;
  int l = 0;
  for (const Factor& y : mono.factors()) {
    ++l;
    const int s = seen_in_column[y.col]++;
    result = result * ZPolynomial::affine(dims.m, y.col, Rational(-s));
    result *= Rational(1, dims.n - l + 1);
  }
  return result;
}

SymPolynomial symmetrize_monomial(const YMonomial& mono, Dims dims) {
  return symmetrize_over_variables(expectation_polynomial(mono, dims));
}

SymPolynomial symmetrize(const YPolynomial& p) {
  const YPolynomial reduced = normalize(p);
  SymPolynomial q(p.dims().m);
  for (const auto& [mono, c] : reduced.terms()) q += symmetrize_monomial(mono, p.dims()) * c;
  return q;
}

YPolynomial desymmetrize(const SymPolynomial& q, Dims dims) {
  if (q.m() != dims.m) throw std::invalid_argument("desymmetrize: polynomial has " + std::to_string(q.m()) +
                                                   " variables but dims.m = " + std::to_string(dims.m));
  YPolynomial out(dims);
  ColumnPowers powers(dims);
  for (const auto& [lambda, c] : q.coeffs()) {
    out += MonomialExpander(dims, lambda, powers).expand() * c;
  }
  return out;
}

Rational average_oracle(const YPolynomial& p, std::span<const int> z, std::uint64_t budget) {
  const Dims dims = p.dims();
  validate_counts(dims, z);
  check_budget("average_oracle", multinomial(dims.n, z), budget);
  Rational sum;
  long count = 0;
  for_each_function_with_counts(dims, z, [&](const FunctionTable& f) {
    sum += eval_y(p, f);
    ++count;
  });
  return sum / Rational(count);
}

Rational class_average_oracle(const YPolynomial& p, const FrequencyVector& z, std::uint64_t budget) {
  const Dims dims = p.dims();
  if (z.m() != dims.m || z.n() != dims.n) throw std::invalid_argument("class_average_oracle: class does not match dims");
  std::vector<int> arrangement = z.padded();
  std::sort(arrangement.begin(), arrangement.end());

  // Number of distinct coordinate arrangements times functions per arrangement.
  std::map<int, int> mult;
  for (int c : arrangement) ++mult[c];
  mpz_class arrangements = factorial(dims.m);
  for (const auto& [value, k] : mult) arrangements /= factorial(k);
  check_budget("class_average_oracle", arrangements * multinomial(dims.n, arrangement), budget);

  Rational sum;
  long count = 0;
  do {
    for_each_function_with_counts(dims, arrangement, [&](const FunctionTable& f) {
      sum += eval_y(p, f);
      ++count;
    });
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return sum / Rational(count);
}

}  // namespace symdeg
