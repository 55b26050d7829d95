#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace corr {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long max_linalg_dim() {
  if (const char* env = std::getenv("CORRELATOR_MAX_DIM")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 200000;
}

// Row space over Q with incremental exact elimination.  Rows are sparse maps
// from column index to coefficient; inserted rows are reduced against the
// current echelon basis (each basis row has a unique pivot column, scaled to
// pivot 1 and reduced against later pivots as they appear).
class RowSpace {
 public:
  using Row = std::map<size_t, Rat>;

  // Reduce r against the basis in place; returns the residue.  Each basis row
  // has its pivot as leading column, so eliminating pivot columns of r in
  // increasing order only ever touches columns beyond the current one.
  Row reduce(Row r) const {
    auto it = r.begin();
    while (it != r.end()) {
      auto pit = pivots_.find(it->first);
      if (pit == pivots_.end()) {
        ++it;
        continue;
      }
      size_t col = it->first;
      subtract_scaled(r, rows_[pit->second], it->second);
      it = r.upper_bound(col);
    }
    return r;
  }

  // Insert a row; returns true if it increased the rank.
  bool insert(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return false;
    if (long(rows_.size()) >= max_linalg_dim())
      throw ResourceLimitError("linear algebra dimension cap exceeded (CORRELATOR_MAX_DIM)");
    Rat lead = r.begin()->second;
    for (auto& [c, v] : r) const_cast<Rat&>(v) /= lead;
    size_t piv = r.begin()->first;
    rows_.push_back(std::move(r));
    pivots_[piv] = rows_.size() - 1;
    return true;
  }

  bool contains(Row r) const { return reduce(std::move(r)).empty(); }

  size_t rank() const { return rows_.size(); }

 private:
  static void subtract_scaled(Row& r, const Row& basis, Rat factor) {
    // r -= factor * basis  (basis has pivot coefficient 1)
    for (auto& [col, v] : basis) {
      auto it = r.find(col);
      if (it == r.end()) {
        Rat nv = -factor * v;
        if (nv != 0) r.emplace(col, nv);
      } else {
        it->second -= factor * v;
        if (it->second == 0) r.erase(it);
      }
    }
  }

  std::vector<Row> rows_;
  std::map<size_t, size_t> pivots_;
};

// Assigns stable dense indices to arbitrary ordered keys.
template <class Key>
class Indexer {
 public:
  size_t index(const Key& k) {
    auto [it, fresh] = map_.emplace(k, map_.size());
    if (fresh && long(map_.size()) > max_linalg_dim())
      throw ResourceLimitError("basis dimension cap exceeded (CORRELATOR_MAX_DIM)");
    return it->second;
  }
  const Key* lookup(size_t idx) const {
    for (auto& [k, v] : map_)
      if (v == idx) return &k;
    return nullptr;
  }
  size_t size() const { return map_.size(); }

 private:
  std::map<Key, size_t> map_;
};

}  // namespace corr
