// Copyright 2026 The Shapely Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace shapely {

/// A permutation of {0, ..., n-1} stored as its image table: p[i] is the
/// image of i. Products follow function composition, (p * q)(i) = p(q(i)).
using Perm = std::vector<std::uint32_t>;

Perm identity_perm(std::size_t n);
bool is_perm(std::span<const std::uint32_t> p);
bool is_identity(std::span<const std::uint32_t> p);
Perm compose(std::span<const std::uint32_t> outer, std::span<const std::uint32_t> inner);
Perm inverse(std::span<const std::uint32_t> p);

/// Every permutation of n letters in lexicographic order of image tables.
std::vector<Perm> all_perms(std::size_t n);

/// The transposition of a and b on n letters.
Perm transposition(std::size_t n, std::uint32_t a, std::uint32_t b);

/// Returns the list (xs[p[0]], ..., xs[p[n-1]]): the reindexing written
/// x_p elsewhere in this library.
template <typename T>
std::vector<T> permute_list(std::span<const T> xs, std::span<const std::uint32_t> p) {
  std::vector<T> out;
  out.reserve(p.size());
  for (auto i : p) out.push_back(xs[i]);
  return out;
}

/// Solves list_p = target for p, where both lists consist of pairwise
/// distinct tokens. Returns an empty vector if target is not a
/// rearrangement of list.
Perm solve_reindexing(std::span<const std::uint64_t> list,
                      std::span<const std::uint64_t> target);

}  // namespace shapely
