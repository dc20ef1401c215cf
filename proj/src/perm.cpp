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

#include "shapely/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "shapely/error.hpp"

namespace shapely {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

bool is_perm(std::span<const std::uint32_t> p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool is_identity(std::span<const std::uint32_t> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm compose(std::span<const std::uint32_t> outer, std::span<const std::uint32_t> inner) {
  if (outer.size() != inner.size())
    throw Error(ErrorCode::kArityMismatch, "composing permutations of different degree");
  Perm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Perm inverse(std::span<const std::uint32_t> p) {
  Perm out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm transposition(std::size_t n, std::uint32_t a, std::uint32_t b) {
  Perm p = identity_perm(n);
  std::swap(p[a], p[b]);
  return p;
}

Perm solve_reindexing(std::span<const std::uint64_t> list,
                      std::span<const std::uint64_t> target) {
  if (list.size() != target.size()) return {};
  std::unordered_map<std::uint64_t, std::uint32_t> position;
  for (std::size_t i = 0; i < list.size(); ++i)
    position.emplace(list[i], static_cast<std::uint32_t>(i));
  Perm p(target.size());
  for (std::size_t k = 0; k < target.size(); ++k) {
    auto it = position.find(target[k]);
    if (it == position.end()) return {};
    p[k] = it->second;
  }
  return is_perm(p) ? p : Perm{};
}

}  // namespace shapely
