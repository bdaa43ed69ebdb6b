// Copyright 2026 The PDL Authors.
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

// Brute-force LCS reference used to check lcs_align. It shares no code with
// the dynamic-programming table: lengths come from enumerating every
// subsequence of the shorter prefix.

#ifndef PDL_TESTS_SUPPORT_LCS_ORACLE_HPP_
#define PDL_TESTS_SUPPORT_LCS_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace pdl::testing {

using Seq = std::vector<std::string>;
using Alignment = std::vector<std::pair<std::size_t, std::size_t>>;

inline bool is_subsequence(const Seq& needle, const Seq& hay) {
  std::size_t k = 0;
  for (const auto& h : hay) {
    if (k < needle.size() && needle[k] == h) ++k;
  }
  return k == needle.size();
}

// Longest common subsequence length of a[0,i) and b[0,j) by enumeration.
inline std::size_t brute_lcs_length(const Seq& a, std::size_t i, const Seq& b,
                                    std::size_t j) {
  std::size_t best = 0;
  const Seq hay(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
  for (unsigned mask = 0; mask < (1u << i); ++mask) {
    Seq pick;
    for (std::size_t k = 0; k < i; ++k) {
      if (mask & (1u << k)) pick.push_back(a[k]);
    }
    if (pick.size() > best && is_subsequence(pick, hay)) best = pick.size();
  }
  return best;
}

// Every maximum-length common-subsequence alignment (index pairs).
inline std::vector<Alignment> all_max_alignments(const Seq& a, const Seq& b) {
  std::vector<Alignment> all;
  std::size_t best = 0;
  Alignment current;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (current.size() > best) {
      best = current.size();
      all.clear();
    }
    if (current.size() == best) all.push_back(current);
    for (std::size_t x = i; x < a.size(); ++x) {
      for (std::size_t y = j; y < b.size(); ++y) {
        if (a[x] != b[y]) continue;
        current.emplace_back(x, y);
        self(self, x + 1, y + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return all;
}

// Applies the documented tie-break (walk back from the ends: match on equal
// elements, otherwise drop from `a` if that keeps the optimum, else drop
// from `b`) with brute-force lengths.
inline Alignment oracle_alignment(const Seq& a, const Seq& b) {
  Alignment out;
  std::size_t i = a.size();
  std::size_t j = b.size();
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      out.emplace_back(i - 1, j - 1);
      --i;
      --j;
    } else if (brute_lcs_length(a, i - 1, b, j) >=
               brute_lcs_length(a, i, b, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  return Alignment(out.rbegin(), out.rend());
}

}  // namespace pdl::testing

#endif  // PDL_TESTS_SUPPORT_LCS_ORACLE_HPP_
