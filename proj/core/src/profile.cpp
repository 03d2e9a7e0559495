#include "colnum/profile.hpp"

#include <sstream>

#include "colnum/reach.hpp"

namespace colnum {

int OrderProfile::col_at(Radius r) const {
  if (r.is_infinite()) return col_inf;
  if (r.value() < 1 || r.value() > r_max) throw Error("radius outside profile range");
  return col[r.value() - 1];
}

int OrderProfile::wcol_at(Radius r) const {
  if (r.is_infinite()) return wcol_inf;
  if (r.value() < 1 || r.value() > r_max) throw Error("radius outside profile range");
  return wcol[r.value() - 1];
}

std::string OrderProfile::to_json() const {
  std::ostringstream out;
  auto column = [&](const std::string& name, const std::vector<int>& vals, int inf_row) {
    out << "\"" << name << "\":{";
    for (int i = 0; i < r_max; ++i) out << "\"" << i + 1 << "\":" << vals[i] << ",";
    out << "\"inf\":" << inf_row << "}";
  };
  out << "{";
  column("col", col, col_inf);
  out << ",";
  column("wcol", wcol, wcol_inf);
  for (size_t j = 0; j < hop_ells.size(); ++j) {
    out << ",\"gcol_" << hop_ells[j] << "\":{";
    for (int i = 0; i < r_max; ++i) {
      if (i) out << ",";
      out << "\"" << i + 1 << "\":" << gcol[j][i];
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

OrderProfile order_profile(const Graph& g, const VertexOrder& pi, int r_max,
                           const std::vector<int>& hop_ells) {
  if (r_max < 1) throw Error("r_max must be >= 1");
  OrderProfile p;
  p.r_max = r_max;
  for (int r = 1; r <= r_max; ++r) {
    p.col.push_back(col_of_order(g, pi, r));
    p.wcol.push_back(wcol_of_order(g, pi, r));
  }
  p.hop_ells = hop_ells;
  for (int ell : hop_ells) {
    std::vector<int> row;
    for (int r = 1; r <= r_max; ++r) row.push_back(gcol_of_order(g, pi, r, ell));
    p.gcol.push_back(std::move(row));
  }
  p.col_inf = col_of_order(g, pi, Radius::infinity());
  p.wcol_inf = wcol_of_order(g, pi, Radius::infinity());
  return p;
}

}  // namespace colnum
