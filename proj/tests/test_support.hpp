#pragma once

// Independent brute-force oracles and generators shared by the unit and
// acceptance suites. Nothing here calls the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "symdeg/andor.hpp"
#include "symdeg/partition.hpp"
#include "symdeg/rational.hpp"
#include "symdeg/sympoly.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg::testing {

/// m_lambda(z) by listing every ordered tuple of distinct indices and
/// collecting the distinct exponent vectors they produce.
inline mpz_class brute_msym(const Partition& lambda, const std::vector<int>& z) {
  const std::size_t m = z.size();
  const std::size_t l = lambda.length();
  if (l > m) return 0;
  std::set<std::vector<int>> monomials;
  std::vector<std::size_t> idx(l, 0);
  // Odometer over [0, m)^l, keeping tuples with distinct indices.
  for (;;) {
    std::set<std::size_t> distinct(idx.begin(), idx.end());
    if (distinct.size() == l) {
      std::vector<int> e(m, 0);
      for (std::size_t k = 0; k < l; ++k) e[idx[k]] = lambda.parts()[k];
      monomials.insert(e);
    }
    std::size_t k = 0;
    while (k < l && ++idx[k] == m) idx[k++] = 0;
    if (k == l) break;
  }
  mpz_class total = 0;
  for (const auto& e : monomials) {
    mpz_class term = 1;
    for (std::size_t k = 0; k < m; ++k) {
      for (int r = 0; r < e[k]; ++r) term *= z[k];
    }
    total += term;
  }
  return total;
}

/// Average of q(z_sigma(1), ..., z_sigma(m)) over all m! permutations sigma.
inline Rational permutation_average(const ZPolynomial& q, std::vector<int> z) {
  std::vector<std::size_t> perm(z.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational sum;
  long count = 0;
  std::vector<int> permuted(z.size());
  do {
    for (std::size_t k = 0; k < z.size(); ++k) permuted[k] = z[perm[k]];
    sum += q.eval(permuted);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / Rational(count);
}

/// Every ordered vector of m non-negative counts summing to n.
inline std::vector<std::vector<int>> compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// All functions [n] -> [m] by odometer, independent of the library enumerator.
inline std::vector<FunctionTable> all_functions(int n, int m) {
  std::vector<FunctionTable> out;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  for (;;) {
    out.emplace_back(n, m, v);
    int k = n - 1;
    while (k >= 0 && v[static_cast<std::size_t>(k)] == m) v[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++v[static_cast<std::size_t>(k)];
  }
  return out;
}

/// Largest number of preimages of any value of f.
inline int max_multiplicity(const FunctionTable& f) {
  std::map<int, int> hits;
  int best = 0;
  for (int v : f.values()) best = std::max(best, ++hits[v]);
  return best;
}

inline bool is_one_to_one(const FunctionTable& f) { return max_multiplicity(f) <= 1; }

inline bool is_two_to_one(const FunctionTable& f) {
  std::map<int, int> hits;
  for (int v : f.values()) ++hits[v];
  return std::all_of(hits.begin(), hits.end(), [](const auto& kv) { return kv.second == 2; });
}

/// Rational with numerator in [-range, range] and denominator in [1, max_den].
inline Rational random_rational(std::mt19937& rng, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Partition random_partition(std::mt19937& rng, int max_weight, int max_parts) {
  std::uniform_int_distribution<int> weight(0, max_weight);
  const auto options = partitions_of(weight(rng), max_parts);
  if (options.empty()) return Partition{};
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng)];
}

inline SymPolynomial random_sym_polynomial(std::mt19937& rng, int m, int max_weight, int terms) {
  SymPolynomial q(m);
  for (int t = 0; t < terms; ++t) q.add_term(random_partition(rng, max_weight, m), random_rational(rng));
  return q;
}

inline XPolynomial random_x_polynomial(std::mt19937& rng, int n, int max_degree, int terms) {
  XPolynomial p(n);
  std::uniform_int_distribution<int> var(1, n * n);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> vars;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) vars.push_back(var(rng));
    p.add_term(XMonomial(std::move(vars)), random_rational(rng));
  }
  return p;
}

}  // namespace symdeg::testing
