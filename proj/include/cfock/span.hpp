#pragma once

// Exact sparse row reduction over the rationals, keyed by an arbitrary
// ordered basis-label type. Rows are kept fully reduced (pivot coefficient 1,
// pivot absent from every other row), so membership tests are exact and the
// basis is canonical for a given set of inserted vectors.

#include "cfock/scalar.hpp"

#include <cstddef>
#include <map>

namespace cfock {

template <class Key>
class SpanBasis {
  public:
    using Vec = std::map<Key, Scalar>;

    // Reduces v against the current rows; the remainder has no pivot key of
    // any stored row.
    Vec reduce(Vec v) const {
        for (auto it = rows_.begin(); it != rows_.end() && !v.empty(); ++it) {
            auto hit = v.find(it->first);
            if (hit == v.end()) continue;
            Scalar c = hit->second;
            axpy(v, Scalar(-c), it->second);
        }
        return v;
    }

    // Returns true when v enlarges the span.
    bool insert(const Vec& v) {
        Vec r = reduce(v);
        if (r.empty()) return false;
        auto pivot = r.begin()->first;
        Scalar lead = r.begin()->second;
        Vec row;
        for (const auto& [k, c] : r) row.emplace(k, Scalar(c / lead));
        // keep full reduction: eliminate the new pivot from existing rows
        for (auto& [p, existing] : rows_) {
            auto hit = existing.find(pivot);
            if (hit == existing.end()) continue;
            Scalar c = hit->second;
            axpy(existing, Scalar(-c), row);
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }

    std::size_t dimension() const { return rows_.size(); }

    const std::map<Key, Vec>& rows() const { return rows_; }

  private:
    std::map<Key, Vec> rows_;  // pivot -> reduced row
};

}  // namespace cfock
