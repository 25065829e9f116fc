#pragma once

#include "ncg/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

namespace ncg::test {

/// Table of the group on `elems` with product `mul`, labelled by index.
template <typename T>
GroupTable table_from(const std::vector<T>& elems, const std::function<T(const T&, const T&)>& mul, GroupSpec spec) {
  const auto n = elems.size();
  std::vector<Elem> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("e" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = mul(elems[i], elems[j]);
      t[i * n + j] = static_cast<Elem>(std::find(elems.begin(), elems.end(), prod) - elems.begin());
    }
  }
  return GroupTable(std::move(t), std::move(labels), std::move(spec));
}

/// (Z4 x Z2) x| Z2 where the top generator sends (i, j) to (i, j + i).
inline GroupTable sg16_3_model() {
  using E = std::array<int, 3>;
  std::vector<E> elems;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) elems.push_back({i, j, k});
  std::function<E(const E&, const E&)> mul = [](const E& x, const E& y) {
    const int t = x[2] ? (y[1] + y[0]) % 2 : y[1];
    return E{(x[0] + y[0]) % 4, (x[1] + t) % 2, (x[2] + y[2]) % 2};
  };
  return table_from(elems, mul, GroupSpec::make(Family::SG16_3));
}

}  // namespace ncg::test
