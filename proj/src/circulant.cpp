// Copyright 2026 The circov Authors
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

#include "circov/circulant.hpp"

#include <algorithm>
#include <string>

#include "circov/error.hpp"

namespace circov {

IndexSet::IndexSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSet IndexSet::checked(std::vector<int> members, int n) {
  for (int i : members) {
    if (i < 1 || i > n) {
      throw InputError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
  }
  return IndexSet(std::move(members));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Circulant::Circulant(int n, int k) : n_(n), k_(k) {
  if (k < 2 || k > n - 2) {
    throw InputError("circulant C_" + std::to_string(n) + "^" + std::to_string(k) +
                     " requires 2 <= k <= n-2");
  }
}

IndexSet row_support(const Circulant& c, int i) {
  if (i < 1 || i > c.n()) throw InputError("row index " + std::to_string(i) + " out of range");
  std::vector<int> out;
  out.reserve(c.k());
  for (int t = 0; t < c.k(); ++t) out.push_back(wrap(i + t, c.n()));
  return IndexSet(std::move(out));
}

BinMatrix contract(const Circulant& c, const IndexSet& contracted) {
  const int n = c.n();
  IndexSet::checked(contracted.members(), n);
  if (static_cast<int>(contracted.size()) > n - 2) {
    throw InputError("contract: |N| = " + std::to_string(contracted.size()) + " exceeds n-2");
  }

  BinMatrix out;
  std::vector<int> position(n + 1, -1);
  for (int j = 1; j <= n; ++j) {
    if (contracted.contains(j)) continue;
    position[j] = static_cast<int>(out.col_labels.size());
    out.col_labels.push_back(j);
  }
  out.n_cols = static_cast<int>(out.col_labels.size());

  std::vector<Bitset> all(n, Bitset(out.n_cols));
  for (int i = 1; i <= n; ++i) {
    for (int t = 0; t < c.k(); ++t) {
      const int j = wrap(i + t, n);
      if (position[j] >= 0) all[i - 1].set(position[j]);
    }
  }

  for (int i = 0; i < n; ++i) {
    bool drop = false;
    std::vector<int> twins;  // rows identical to row i, as residues
    for (int j = 0; j < n && !drop; ++j) {
      if (j == i) continue;
      if (all[j] == all[i]) {
        twins.push_back(j + 1);
      } else if (all[j].is_subset_of(all[i])) {
        drop = true;
      }
    }
    if (drop) continue;
    if (!twins.empty()) {
      twins.push_back(i + 1);
      const IndexSet group(twins);
      int keep = group.members().front();
      for (int g : group) {
        if (!group.contains(wrap(g - 1, n))) {
          keep = g;
          break;
        }
      }
      if (keep != i + 1) continue;
    }
    out.row_labels.push_back(i + 1);
    out.rows.push_back(all[i]);
  }
  return out;
}

std::optional<std::pair<int, int>> is_isomorphic_circulant(const BinMatrix& m) {
  const int size = m.n_cols;
  if (static_cast<int>(m.n_rows()) != size) {
    throw InputError("is_isomorphic_circulant: matrix is " + std::to_string(m.n_rows()) + "x" +
                     std::to_string(size) + ", not square");
  }
  if (size == 0) return std::nullopt;

  const auto ones = static_cast<int>(m.rows.front().count());
  for (const Bitset& row : m.rows) {
    if (static_cast<int>(row.count()) != ones) return std::nullopt;
  }
  for (int a = 0; a < size; ++a) {
    for (int b = a + 1; b < size; ++b) {
      if (m.rows[a] == m.rows[b]) return std::nullopt;
    }
  }
  if (ones == 0) return std::nullopt;
  // Rows are distinct with equal support; for k' in {1, n'-1, n'} every such
  // family is a row permutation of the circulant (n' distinct rows only exist
  // for k' = n' when n' = 1).
  if (ones == 1 || ones >= size - 1) return std::make_pair(size, ones);

  // 2 <= k' <= n'-2: in C_{n'}^{k'} two columns share k'-1 rows exactly when
  // they are cyclically adjacent, so that relation recovers the column cycle.
  std::vector<Bitset> col_rows(size, Bitset(size));
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      if (m.rows[r].test(c)) col_rows[c].set(r);
    }
  }
  std::vector<std::vector<int>> adjacent(size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a != b && static_cast<int>((col_rows[a] & col_rows[b]).count()) == ones - 1) {
        adjacent[a].push_back(b);
      }
    }
    if (adjacent[a].size() != 2) return std::nullopt;
  }

  std::vector<int> position(size, -1);
  int prev = -1;
  int cur = 0;
  for (int step = 0; step < size; ++step) {
    if (position[cur] >= 0) return std::nullopt;
    position[cur] = step;
    const int next = adjacent[cur][0] != prev ? adjacent[cur][0] : adjacent[cur][1];
    prev = cur;
    cur = next;
  }
  if (cur != 0) return std::nullopt;

  // Every row must be a cyclic interval of length k' in this order.
  for (const Bitset& row : m.rows) {
    std::vector<bool> on(size, false);
    for (int c = 0; c < size; ++c) {
      if (row.test(c)) on[position[c]] = true;
    }
    int starts = 0;
    for (int p = 0; p < size; ++p) {
      if (on[p] && !on[(p + size - 1) % size]) ++starts;
    }
    if (starts != 1) return std::nullopt;
  }
  return std::make_pair(size, ones);
}

}  // namespace circov
