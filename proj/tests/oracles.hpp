// Test-only oracles: brute-force enumeration over column subsets, kept
// independent of the closed-form implementation they check.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "vcs/matrix.hpp"
#include "vcs/prob.hpp"
#include "vcs/rational.hpp"
#include "vcs/util.hpp"

namespace oracles {

// Exact distribution of the stacked weight over every s-column subset of M,
// restricted to the given rows. Counts subsets directly; no binomials.
inline vcs::DistributionTable enumerate_weight_distribution(const vcs::BooleanMatrix& M,
                                                            const std::vector<int>& rows,
                                                            long s) {
  auto stacked = vcs::or_rows(M, rows);
  std::vector<long> counts(static_cast<std::size_t>(s) + 1, 0);
  long total = 0;
  vcs::for_each_combination(M.cols(), static_cast<int>(s), [&](const std::vector<int>& cols) {
    long weight = 0;
    for (int c : cols) weight += stacked[static_cast<std::size_t>(c)];
    ++counts[static_cast<std::size_t>(weight)];
    ++total;
  });
  vcs::DistributionTable table;
  table.s = s;
  vcs::Rational h_bar(0);
  for (long j = 0; j <= s; ++j) {
    vcs::Rational p(counts[static_cast<std::size_t>(j)], total);
    p.canonicalize();
    h_bar += vcs::Rational(j) * p;
    table.p.push_back(p);
  }
  table.h_bar = h_bar;
  table.beta_bar = h_bar / vcs::Rational(s);
  table.beta_bar.canonicalize();
  return table;
}

// Multiset of restricted s-column patterns (columns sorted into canonical
// order) seen across every column subset — what a coalition of the given
// rows can observe.
template <typename M>
std::map<std::string, long> restricted_pattern_multiset(const M& matrix,
                                                        const std::vector<int>& rows, long s) {
  auto restricted = vcs::restrict_rows(matrix, rows);
  std::map<std::string, long> multiset;
  vcs::for_each_combination(matrix.cols(), static_cast<int>(s), [&](const std::vector<int>& cols) {
    std::vector<std::string> pattern_cols;
    for (int c : cols) {
      std::string col;
      for (int r = 0; r < restricted.rows(); ++r)
        col.push_back(static_cast<char>('0' + restricted.row(r)[static_cast<std::size_t>(c)]));
      pattern_cols.push_back(std::move(col));
    }
    std::sort(pattern_cols.begin(), pattern_cols.end());
    std::string key;
    for (const auto& col : pattern_cols) key += col + "|";
    ++multiset[key];
  });
  return multiset;
}

// Average own-symbol fraction over all s-subsets of a 0/1 profile with `a`
// ones, via direct mask enumeration bucketed by subset size. beta[s-1] is
// the average for subset size s.
inline std::vector<vcs::Rational> enumerate_beta_by_mask(int a, int m) {
  const unsigned long long ones_mask = (a == 0) ? 0ull : ((1ull << a) - 1ull);
  std::vector<long> weight_sum(static_cast<std::size_t>(m) + 1, 0);
  std::vector<long> subsets(static_cast<std::size_t>(m) + 1, 0);
  for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
    int size = __builtin_popcountll(mask);
    weight_sum[static_cast<std::size_t>(size)] +=
        __builtin_popcountll(mask & ones_mask);
    ++subsets[static_cast<std::size_t>(size)];
  }
  std::vector<vcs::Rational> beta;
  for (int s = 1; s <= m; ++s) {
    vcs::Rational avg(weight_sum[static_cast<std::size_t>(s)],
                      static_cast<long>(s) * subsets[static_cast<std::size_t>(s)]);
    avg.canonicalize();
    beta.push_back(avg);
  }
  return beta;
}

inline vcs::Rational frac(const std::string& text) { return vcs::parse_rational(text); }

}  // namespace oracles
