#pragma once

#include <vector>

#include "hypertoric/matrix.hpp"

namespace ht_test {

using hypertoric::Int;
using hypertoric::IntMatrix;
using hypertoric::Rat;

inline IntMatrix column(const std::vector<long>& entries) {
    IntMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

inline IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    return m;
}

inline std::vector<Rat> rat_vec(const std::vector<long>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

inline std::vector<Int> int_vec(const std::vector<long>& v) {
    std::vector<Int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace ht_test
