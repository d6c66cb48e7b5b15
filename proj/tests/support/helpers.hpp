#pragma once

#include "dkit/parse.hpp"
#include "dkit/ring.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace dkit::testing {

inline RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> vars,
                         Ordering ordering = Ordering::local_degree()) {
  return Ring::make(Field::from_characteristic(characteristic), std::move(vars), ordering);
}

inline Poly P(const RingPtr& r, const std::string& text) { return parse_poly(text, r); }

inline MatrixSeries M(const RingPtr& r, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Poly> entries;
  std::size_t cols = 0;
  for (const auto& row : rows) {
    cols = row.size();
    for (const char* e : row) entries.push_back(parse_poly(e, r));
  }
  return MatrixSeries(r, rows.size(), cols, std::move(entries));
}

inline std::vector<std::string> rendered(const std::vector<Vect>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(render(v));
  return out;
}

}  // namespace dkit::testing
