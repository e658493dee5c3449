#include "waring/pointsets.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

PointSet::PointSet(std::vector<ProjectivePoint> pts) : pts_(std::move(pts)) {
  std::vector<const ProjectivePoint*> sorted;
  for (const auto& p : pts_) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return *a < *b; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (*sorted[i] == *sorted[i - 1]) throw std::invalid_argument("repeated point in point set");
}

PointSet PointSet::without(std::size_t i) const {
  auto v = pts_;
  v.erase(v.begin() + static_cast<long>(i));
  return PointSet(std::move(v));
}

PointSet PointSet::subset(const std::vector<std::size_t>& idx) const {
  std::vector<ProjectivePoint> v;
  for (auto i : idx) v.push_back(pts_.at(i));
  return PointSet(std::move(v));
}

PointSet PointSet::united(const PointSet& o) const {
  auto v = pts_;
  v.insert(v.end(), o.pts_.begin(), o.pts_.end());
  return PointSet(std::move(v));
}

std::vector<long> difference(const std::vector<std::size_t>& h) {
  std::vector<long> dh(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) dh[i] = static_cast<long>(h[i]) - (i ? static_cast<long>(h[i - 1]) : 0);
  return dh;
}

HilbertData hilbert_from_values(std::vector<std::size_t> values) {
  HilbertData out;
  out.values = std::move(values);
  out.first_difference = difference(out.values);
  for (long x : out.first_difference) {
    if (x == 0) break;
    out.h_vector.push_back(x);
  }
  return out;
}

HilbertData hilbert_data(const PointSet& a, int d_max, const FieldPolicy& policy) {
  if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
  std::vector<std::size_t> values;
  std::vector<std::string> methods;
  RationalField q;
  for (int d = 0; d <= d_max; ++d) {
    auto c = certified_rank(evaluation_matrix(q, a, d), std::min(a.size(), dim_graded(d)), policy);
    values.push_back(c.rank);
    methods.push_back(c.method);
  }
  auto out = hilbert_from_values(std::move(values));
  out.methods = std::move(methods);
  return out;
}

bool cb_inequality(const HilbertData& h, int i, int j) {
  if (j < 0 || j > i + 1) throw std::invalid_argument("need 0 <= j <= i + 1");
  if (static_cast<std::size_t>(i + 1) >= h.first_difference.size()) throw std::invalid_argument("Hilbert data too short");
  long lhs = 0, rhs = 0;
  for (int k = 0; k <= j; ++k) lhs += h.first_difference[k];
  for (int k = i + 1 - j; k <= i + 1; ++k) rhs += h.first_difference[k];
  return lhs <= rhs;
}

std::string BaseLocusReport::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Finite:
      os << "finite(" << length << ")";
      break;
    case Kind::Curve:
      os << "curve(" << curve_degree << ", " << curve_degree << "t" << (constant < 0 ? "" : "+") << constant << ")";
      break;
    case Kind::Undetermined:
      os << "undetermined";
      break;
  }
  return os.str();
}

BaseLocusReport base_locus(const PrimeField& f, const std::vector<FormP>& quadrics, int lo, int hi) {
  if (quadrics.empty()) throw std::invalid_argument("empty quadric system");
  TruncatedGroebner gb(f, quadrics, hi);
  BaseLocusReport r;
  r.window_start = lo;
  for (int d = lo; d <= hi; ++d) r.window.push_back(gb.hilbert(d));
  r.method = "groebner mod " + std::to_string(f.modulus()) + ", " + std::to_string(gb.size()) + " elements";
  bool constant = true, linear = true;
  long step = static_cast<long>(r.window[1]) - static_cast<long>(r.window[0]);
  for (std::size_t i = 1; i < r.window.size(); ++i) {
    long s = static_cast<long>(r.window[i]) - static_cast<long>(r.window[i - 1]);
    constant = constant && s == 0;
    linear = linear && s == step;
  }
  if (constant) {
    r.kind = BaseLocusReport::Kind::Finite;
    r.length = r.window[0];
  } else if (linear && step > 0) {
    r.kind = BaseLocusReport::Kind::Curve;
    r.curve_degree = step;
    r.constant = static_cast<long>(r.window[0]) - step * lo;
  }
  return r;
}

IdealPieceP colon_piece(const PrimeField& f, const TruncatedGroebner& z, const std::vector<FormP>& a_gens, int d) {
  MatP stacked;
  std::size_t n = dim_graded(d);
  for (const auto& g : a_gens) {
    auto nf = z.normal_form_matrix(d + g.degree);
    auto block = multiply(f, nf, multiplication_matrix(f, g, d));
    for (std::size_t i = 0; i < block.rows(); ++i) stacked.append_row(block.row(i));
  }
  if (stacked.rows() == 0) stacked = MatP(0, n);
  return {d, kernel(f, stacked)};
}

IdealPieceP colon_piece(const PrimeField& f, const std::vector<FormP>& z_gens, const std::vector<FormP>& a_gens, int d) {
  int top = 0;
  for (const auto& g : a_gens) top = std::max(top, g.degree);
  TruncatedGroebner gb(f, z_gens, d + top);
  return colon_piece(f, gb, a_gens, d);
}

IdealPieceP colon_piece(const PrimeField& f, const std::vector<FormP>& z_gens, const PointSet& a, int d) {
  std::vector<FormP> a_gens;
  for (int e = 1; e <= 4; ++e) {
    auto piece = ideal_piece(f, a, e);
    auto forms = piece.forms();
    a_gens.insert(a_gens.end(), forms.begin(), forms.end());
  }
  if (a_gens.empty()) throw std::invalid_argument("no forms of degree <= 4 vanish on the point set");
  return colon_piece(f, z_gens, a_gens, d);
}

std::vector<long> koszul_hvector(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("empty degree list");
  std::vector<long> h = {1};
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    std::vector<long> next(h.size() + d - 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int k = 0; k < d; ++k) next[i + k] += h[i];
    h = std::move(next);
  }
  return h;
}

std::vector<long> linkage_hvector(const std::vector<long>& z_hvec, const std::vector<long>& a_dh, int socle) {
  std::vector<long> out;
  for (int i = 0; i <= socle; ++i) {
    long z = i < static_cast<int>(z_hvec.size()) ? z_hvec[i] : 0;
    int k = socle - i;
    long a = k >= 0 && k < static_cast<int>(a_dh.size()) ? a_dh[k] : 0;
    if (z - a < 0) throw std::invalid_argument("inconsistent linkage data at degree " + std::to_string(i));
    out.push_back(z - a);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace waring
