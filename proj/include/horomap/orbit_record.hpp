// JSON-lines serialization of orbit steps. Exact mode writes rationals as
// "p/q" strings, float mode writes shortest round-trip decimals.
#pragma once

#include "horomap/horocycle_flow.hpp"
#include "horomap/wpoint.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace horomap {

inline nlohmann::json scalar_to_json(const Rational& x) { return to_fraction_string(x); }
inline nlohmann::json scalar_to_json(double x) { return x; }

// One step of an orbit: the point, the branch taken, the matrix applied,
// and the return time spent reaching the next point.
template <typename S>
nlohmann::json orbit_record(std::size_t step_index, const WPoint<S>& point,
                            const HoroStep<S>& st, double s_h) {
  nlohmann::json rec;
  rec["step_index"] = step_index;
  rec["gamma"] = scalar_to_json(point.gamma);
  rec["r"] = scalar_to_json(point.r);
  rec["eps"] = eps_value(point.eps);
  rec["branch"] = branch_name(st.branch);
  rec["matrix"] = {st.matrix.a.convert_to<std::int64_t>(),
                   st.matrix.b.convert_to<std::int64_t>(),
                   st.matrix.c.convert_to<std::int64_t>(),
                   st.matrix.d.convert_to<std::int64_t>()};
  rec["s_h"] = s_h;
  if (st.boundary) rec["boundary"] = true;
  return rec;
}

}  // namespace horomap
