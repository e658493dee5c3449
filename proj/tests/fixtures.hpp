#pragma once

#include "waring/poly.hpp"

#include <vector>

namespace waring::testing {

// Identifiable 12-point configuration, all weights 1.
inline const std::vector<std::vector<long>> kIdentifiable12 = {
    {-1960, 7185, 2948, 1986, -7270},     {8416, -14232, 8567, 14988, -12297}, {4210, -11055, -6249, 530, 6066},
    {-6981, 1313, 6692, 12883, 4597},     {8211, -5857, 6853, -5758, -1890},   {8633, 6895, 14963, 14147, -405},
    {12697, -10281, 10647, 1414, 11296},  {-15107, 4696, -6212, 6064, 8777},   {-14194, -13431, -2768, 6063, -1066},
    {-687, 7327, 9904, 11696, 10323},     {-262, -14530, 5673, 10210, 5157},   {-5397, 6232, -7867, -10827, -653},
};

inline std::vector<ProjectivePoint> to_points(const std::vector<std::vector<long>>& rows) {
  std::vector<ProjectivePoint> out;
  for (const auto& r : rows) {
    std::vector<Rational> c;
    for (long x : r) c.emplace_back(x);
    out.emplace_back(c);
  }
  return out;
}

}  // namespace waring::testing
