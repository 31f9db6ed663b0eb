// Copyright 2026 The smlt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smlt/generators.hpp"

#include <algorithm>
#include <numeric>

namespace smlt {

namespace {

void check_scale(bool ok, const std::string& what) {
  if (!ok) throw ceiling_error("ScaleExceeded", what);
}

void check_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) {
    throw validation_error("BadOrder", "permutation must list [1.." +
                                           std::to_string(n) + "]");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw validation_error("BadOrder",
                             "not a permutation of [1.." + std::to_string(n) +
                                 "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Circuit permanent_like(int n, PrimeField field, bool signed_terms) {
  check_scale(n >= 1 && n <= 6, "matrix side must be in [1,6]");
  Circuit c(VariablePartition::uniform(n, n), field);
  std::vector<std::vector<int>> input(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      input[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          c.add_input(Variable{i, j});
    }
  }
  int minus_one = signed_terms ? c.add_constant(field.element(-1)) : -1;

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> terms;
  do {
    int comb = input[0][static_cast<std::size_t>(perm[0] - 1)];
    for (int i = 2; i <= n; ++i) {
      comb = c.add_product(
          comb, input[static_cast<std::size_t>(i - 1)]
                     [static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)]);
    }
    if (signed_terms) {
      int inversions = 0;
      for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
          if (perm[a] > perm[b]) ++inversions;
        }
      }
      if (inversions % 2 == 1) comb = c.add_product(minus_one, comb);
    }
    terms.push_back(comb);
  } while (std::next_permutation(perm.begin(), perm.end()));

  c.set_output(c.add_sum(std::move(terms)));
  return c;
}

}  // namespace

Circuit gen_permanent(int n, PrimeField field) {
  return permanent_like(n, field, false);
}

Circuit gen_determinant(int n, PrimeField field) {
  return permanent_like(n, field, true);
}

Abp gen_permanent_roabp(int n, PrimeField field) {
  check_scale(n >= 1 && n <= 6, "matrix side must be in [1,6]");
  Abp abp(VariablePartition::uniform(n, n), field);
  // Node per (layer k, k-subset of used columns); masks in ascending order.
  std::vector<int> node_of(std::size_t{1} << n, -1);
  std::vector<std::vector<std::uint32_t>> masks_by_layer(
      static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    masks_by_layer[static_cast<std::size_t>(__builtin_popcount(mask))]
        .push_back(mask);
  }
  for (int k = 0; k <= n; ++k) {
    for (std::uint32_t mask : masks_by_layer[static_cast<std::size_t>(k)]) {
      node_of[mask] = abp.add_node(k, IndexSet::full(k));
    }
  }
  for (int k = 0; k < n; ++k) {
    for (std::uint32_t mask : masks_by_layer[static_cast<std::size_t>(k)]) {
      for (int j = 1; j <= n; ++j) {
        std::uint32_t bit = std::uint32_t{1} << (j - 1);
        if (mask & bit) continue;
        abp.add_edge(node_of[mask], node_of[mask | bit],
                     LinearForm{k + 1, {{j, field.one()}}});
      }
    }
  }
  return abp;
}

Polynomial gen_sigma_p(int d, const std::vector<int>& sigma,
                       PrimeField field) {
  check_scale(d >= 1 && d <= 12, "half-degree must be in [1,12]");
  check_permutation(sigma, 2 * d);
  Polynomial p(field, IndexSet::full(2 * d));
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << d); ++bits) {
    std::vector<Variable> vars;
    vars.reserve(static_cast<std::size_t>(2 * d));
    for (int i = 1; i <= d; ++i) {
      int column = ((bits >> (i - 1)) & 1) + 1;
      vars.push_back(Variable{sigma[static_cast<std::size_t>(i - 1)], column});
      vars.push_back(
          Variable{sigma[static_cast<std::size_t>(d + i - 1)], column});
    }
    p.set_coefficient(Monomial(std::move(vars)), field.one());
  }
  return p;
}

Abp gen_sigma_p_abp(int d, const std::vector<int>& sigma, PrimeField field) {
  check_scale(d >= 1 && d <= 12, "half-degree must be in [1,12]");
  check_permutation(sigma, 2 * d);
  Abp abp(VariablePartition::uniform(2 * d, 2), field);
  IndexSet type;
  int prev = abp.add_node(0, type);
  for (int i = 1; i <= d; ++i) {
    int first = sigma[static_cast<std::size_t>(i - 1)];
    int second = sigma[static_cast<std::size_t>(d + i - 1)];
    IndexSet mid_type = type.with(first);
    type = mid_type.with(second);
    int next = abp.add_node(2 * i, type);
    for (int bit = 0; bit <= 1; ++bit) {
      int branch = abp.add_node(2 * i - 1, mid_type);
      abp.add_edge(prev, branch, LinearForm{first, {{bit + 1, field.one()}}});
      abp.add_edge(branch, next, LinearForm{second, {{bit + 1, field.one()}}});
    }
    prev = next;
  }
  return abp;
}

Abp gen_interpolated_f(int d, const std::vector<std::vector<int>>& sigmas,
                       PrimeField field) {
  if (d < 1 || (d & (d - 1)) != 0) {
    throw validation_error("NotPowerOfTwo",
                           "d must be a power of two, got " +
                               std::to_string(d));
  }
  check_scale(d <= 8, "interpolation scale is d <= 8");
  if (static_cast<int>(sigmas.size()) != d) {
    throw validation_error("BadOrder",
                           "need exactly d = " + std::to_string(d) +
                               " permutations");
  }
  int log_d = 0;
  while ((1 << log_d) < d) ++log_d;
  for (const auto& sigma : sigmas) check_permutation(sigma, 2 * d);

  Abp abp(VariablePartition::uniform(2 * d + log_d, 2), field);
  IndexSet selector_set;
  for (int j = 1; j <= log_d; ++j) selector_set = selector_set.with(2 * d + j);

  int source = abp.add_node(0, IndexSet());
  int sink = abp.add_node(log_d + 2 * d,
                          IndexSet::full(2 * d) | selector_set);
  for (int c = 0; c < d; ++c) {
    // Selector path reading buckets 2d+1 .. 2d+log d, most significant
    // bit of c first.
    int prev = source;
    IndexSet type;
    for (int j = 1; j <= log_d; ++j) {
      type = type.with(2 * d + j);
      int next = abp.add_node(j, type);
      int bit = (c >> (log_d - j)) & 1;
      abp.add_edge(prev, next,
                   LinearForm{2 * d + j, {{bit + 1, field.one()}}});
      prev = next;
    }
    // Body: the sigma_c(P) ladder shifted below the selector prefix.
    const std::vector<int>& sigma = sigmas[static_cast<std::size_t>(c)];
    for (int i = 1; i <= d; ++i) {
      int first = sigma[static_cast<std::size_t>(i - 1)];
      int second = sigma[static_cast<std::size_t>(d + i - 1)];
      IndexSet mid_type = type.with(first);
      type = mid_type.with(second);
      int next = i == d ? sink : abp.add_node(log_d + 2 * i, type);
      for (int bit = 0; bit <= 1; ++bit) {
        int branch = abp.add_node(log_d + 2 * i - 1, mid_type);
        abp.add_edge(prev, branch,
                     LinearForm{first, {{bit + 1, field.one()}}});
        abp.add_edge(branch, next,
                     LinearForm{second, {{bit + 1, field.one()}}});
      }
      prev = next;
    }
  }
  return abp;
}

BlockDiagonalRestriction gen_block_diagonal_restriction(int n, int nu,
                                                        PrimeField field) {
  check_scale(n >= 1 && n <= 6, "matrix side must be in [1,6]");
  if (nu < 0 || 2 * nu > n) {
    throw validation_error("ScaleExceeded",
                           "need 0 <= 2 nu <= n, got nu = " +
                               std::to_string(nu));
  }
  BlockDiagonalRestriction r;
  r.n = n;
  r.nu = nu;
  for (int s = 1; s <= nu; ++s) {
    r.y.push_back(s);
    r.z.push_back(nu + s);
  }
  for (int i = 1; i <= n; ++i) {
    bool in_y = i >= 1 && i <= nu;
    bool in_z = i > nu && i <= 2 * nu;
    for (int j = 1; j <= n; ++j) {
      Variable v{i, j};
      if (!in_y && !in_z) {
        r.assignment.emplace(v, i == j ? field.one() : field.zero());
      } else if (in_y) {
        int s = i;
        if (j != s && j != nu + s) r.assignment.emplace(v, field.zero());
      } else {
        int s = i - nu;
        if (j != i && j != s) r.assignment.emplace(v, field.zero());
      }
    }
  }
  return r;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  auto uniform_below = [&rng](std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(
        uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

GoodPairStats good_pair_stats(int d, std::uint64_t samples,
                              std::uint64_t seed) {
  if (d < 8 || d % 8 != 0) {
    throw validation_error("BadDivisibility",
                           "d must be a positive multiple of 8, got " +
                               std::to_string(d));
  }
  if (samples < 1) {
    throw validation_error("BadDivisibility", "need at least one sample");
  }

  GoodPairStats stats;
  stats.d = d;
  stats.samples = samples;
  stats.seed = seed;
  int pairs = d / 8;
  stats.e1_counts.assign(static_cast<std::size_t>(pairs), 0);
  stats.e2_counts.assign(static_cast<std::size_t>(pairs), 0);

  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<int> sigma = random_permutation(2 * d, rng);
    auto sigma_at = [&sigma](int pos) {
      return sigma[static_cast<std::size_t>(pos - 1)];
    };
    std::uint64_t f = 0;
    std::uint64_t f_prime = 0;
    for (int i = 1; i <= pairs; ++i) {
      // Quartiles I1..I4 of [2d]; (i, d+i) is good when sigma lands the
      // pair in I1 x I3, (d/2+i, 3d/2+i) when it lands in I2 x I4.
      bool good1 = sigma_at(i) <= d / 2 && sigma_at(d + i) > d &&
                   sigma_at(d + i) <= 3 * d / 2;
      bool good2 = sigma_at(d / 2 + i) > d / 2 && sigma_at(d / 2 + i) <= d &&
                   sigma_at(3 * d / 2 + i) > 3 * d / 2;
      if (good1) {
        ++stats.e1_counts[static_cast<std::size_t>(i - 1)];
        ++f;
      }
      if (good2) {
        ++stats.e2_counts[static_cast<std::size_t>(i - 1)];
        ++f_prime;
      }
    }
    stats.f_sum += f;
    stats.f_sq_sum += f * f;
    stats.f_prime_sum += f_prime;
    stats.f_prime_sq_sum += f_prime * f_prime;
    if (1024 * f < static_cast<std::uint64_t>(d)) ++stats.f_low_count;
  }
  stats.mean_f =
      static_cast<double>(stats.f_sum) / static_cast<double>(samples);
  stats.mean_f_prime =
      static_cast<double>(stats.f_prime_sum) / static_cast<double>(samples);
  stats.prob_f_low =
      static_cast<double>(stats.f_low_count) / static_cast<double>(samples);
  return stats;
}

}  // namespace smlt
