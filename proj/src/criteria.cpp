#include "waring/criteria.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

const char* to_string(CriterionVerdict v) { return v == CriterionVerdict::Identifiable ? "IDENTIFIABLE" : "INCONCLUSIVE"; }

KruskalResult kruskal_rank(const PointSet& a, int d) {
  if (d < 1) throw std::invalid_argument("Kruskal rank needs d >= 1");
  RationalField q;
  auto v = evaluation_matrix(q, a, d);
  std::size_t l = a.size(), n = std::min(l, dim_graded(d));
  KruskalResult out;
  if (l <= dim_graded(d)) {
    out.subsets_checked = 1;
    if (rank(q, v) == l) {
      out.k = l;
      return out;
    }
  } else {
    auto scan = all_maximal_minors_nonzero(q, v);
    out.subsets_checked = scan.checked;
    if (scan.all_nonzero) {
      out.k = n;
      return out;
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    bool all_independent = true;
    for_each_subset(l, k, [&](const std::vector<std::size_t>& idx) {
      ++out.subsets_checked;
      if (rank(q, v.select_rows(idx)) < k) {
        all_independent = false;
        out.witness = idx;
        return false;
      }
      return true;
    });
    if (!all_independent) {
      out.k = k - 1;
      return out;
    }
  }
  out.k = n;
  return out;
}

std::optional<std::size_t> redundant_point(const Decomposition& dec, const FieldPolicy& policy) {
  RationalField q;
  auto t = dec.form();
  auto v = evaluation_matrix(q, dec.points, dec.degree);
  for (std::size_t i = 0; i < dec.size(); ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < dec.size(); ++j)
      if (j != i) rest.push_back(j);
    auto sub = v.select_rows(rest);
    std::size_t base = certified_rank(sub, rest.size(), policy).rank;
    sub.append_row(t.coeffs);
    std::size_t aug = certified_rank(sub, base + 1, policy).rank;
    if (aug == base) return i;
  }
  return std::nullopt;
}

ReshapedKruskalResult reshaped_kruskal(const Decomposition& dec, int d) {
  if (d < 3) throw std::invalid_argument("reshaped Kruskal criterion needs d >= 3");
  if (d != dec.degree) throw std::invalid_argument("degree differs from the decomposition degree");
  if (auto r = redundant_point(dec)) throw std::invalid_argument("point " + std::to_string(*r + 1) + " is redundant");
  ReshapedKruskalResult out;
  Rational l(static_cast<long>(dec.size()));
  bool first = true;
  for (int d1 = d - 2; d1 >= 1; --d1)
    for (int d2 = std::min(d1, d - d1 - 1); d2 >= 1; --d2) {
      int d3 = d - d1 - d2;
      if (d3 < 1 || d3 > d2) continue;
      for (int e : {d1, d2, d3})
        if (!out.kruskal.count(e)) out.kruskal[e] = kruskal_rank(dec.points, e).k;
      Rational bound(static_cast<long>(out.kruskal[d1] + out.kruskal[d2] + out.kruskal[d3]) - 2, 2);
      bound.canonicalize();
      if (first || bound > out.best_bound) {
        out.best_bound = bound;
        out.best_partition = {d1, d2, d3};
        first = false;
      }
    }
  if (!first && l <= out.best_bound) out.verdict = CriterionVerdict::Identifiable;
  return out;
}

MatQ terracini_matrix(const PointSet& a, int d) {
  RationalField q;
  MatQ m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    FormQ lpow{d - 1, veronese(q, a[i].raw(), d - 1)};
    for (int j = 0; j < kVars; ++j) m.append_row(multiply(q, lpow, variable(q, j)).coeffs);
  }
  if (m.rows() == 0) m = MatQ(0, dim_graded(d));
  return m;
}

RankCertificate terracini_dim(const PointSet& a, int d, const FieldPolicy& policy) {
  auto m = terracini_matrix(a, d);
  return certified_rank(m, std::min(m.rows(), m.cols()), policy);
}

Quartic2n1Result quartic_2n1_criterion(const Decomposition& dec, const FieldPolicy& policy) {
  if (dec.size() != 9 || dec.degree != 4) throw std::invalid_argument("criterion applies to 9-term quartic decompositions");
  RationalField q;
  Quartic2n1Result out;
  out.veronese_rank = certified_rank(evaluation_matrix(q, dec.points, 4), 9, policy).rank;
  out.k1 = kruskal_rank(dec.points, 1).k;
  out.terracini_rank = terracini_dim(dec.points, 4, policy).rank;
  if (out.veronese_rank == 9 && out.k1 == 5 && out.terracini_rank == 45) out.verdict = CriterionVerdict::Identifiable;
  return out;
}

std::string canonical_key(const PointSet& a) {
  std::vector<std::string> rows;
  for (const auto& p : a.points()) {
    std::string s;
    for (const auto& x : p.canonical()) s += to_string(x) + ",";
    rows.push_back(s);
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) key += r + ";";
  return key;
}

BaseLocusReport LocusCache::get(const PointSet& a, const PrimeField& f) {
  std::string key = std::to_string(f.modulus()) + "|" + canonical_key(a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  BaseLocusReport rep;
  auto ev = monomial_evaluation_matrix(f, a, 2);
  std::size_t expected = std::min<std::size_t>(a.size(), 15);
  if (rank(f, ev) != expected) {
    rep.method = "evaluation rank drops mod " + std::to_string(f.modulus());
  } else if (expected == 15) {
    rep.method = "no quadrics through the points";
  } else {
    rep = base_locus(f, IdealPieceP{2, kernel(f, ev)}.forms());
  }
  std::lock_guard<std::mutex> lock(mu_);
  ++computed_;
  map_.emplace(key, rep);
  return rep;
}

namespace {

FormP form_determinant(const PrimeField& f, const std::vector<std::vector<FormP>>& m, std::vector<std::size_t> cols) {
  std::size_t row = m.size() - cols.size();
  if (cols.size() == 1) return m[row][cols[0]];
  FormP acc;
  bool first = true;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    auto rest = cols;
    rest.erase(rest.begin() + static_cast<long>(i));
    auto term = multiply(f, m[row][cols[i]], form_determinant(f, m, rest));
    if (i % 2 == 1) term = scale(f, f.neg(1), term);
    acc = first ? term : add(f, acc, term);
    first = false;
  }
  return acc;
}

}  // namespace

std::vector<FormP> jacobian_maximal_minors(const PrimeField& f, const std::vector<FormP>& forms) {
  std::size_t k = forms.size();
  if (k == 0 || k > 4) throw std::invalid_argument("Jacobian minors need 1 to 4 forms");
  std::vector<std::vector<FormP>> jac(k);
  for (std::size_t i = 0; i < k; ++i)
    for (int j = 0; j < kVars; ++j) jac[i].push_back(derivative(f, forms[i], j));
  std::vector<FormP> out;
  for_each_subset(kVars, k, [&](const std::vector<std::size_t>& c) {
    out.push_back(form_determinant(f, jac, c));
    return true;
  });
  return out;
}

SmoothnessReport smoothness_certificate(const PrimeField& f, const std::vector<FormP>& quadrics) {
  if (quadrics.size() != 3) throw std::invalid_argument("smoothness certificate expects three quadrics");
  std::vector<FormP> gens = quadrics;
  for (auto& m : jacobian_maximal_minors(f, quadrics)) gens.push_back(std::move(m));
  TruncatedGroebner gb(f, gens, 6);
  SmoothnessReport out;
  out.h6 = gb.hilbert(6);
  out.smooth = out.h6 == 0;
  out.method = "groebner mod " + std::to_string(f.modulus()) + " of quadrics and 10 Jacobian minors";
  return out;
}

bool ConditionReport::all_evaluated_ok() const {
  for (const Flag* fl : {&non_redundant, &kruskal1, &kruskal2, &base_locus, &base_locus_prime, &curve})
    if (fl->evaluated && !fl->ok) return false;
  return true;
}

namespace {

std::string join(const std::vector<std::size_t>& v, std::size_t offset = 1) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + offset);
  return s;
}

}  // namespace

Flag subset_closed_base_locus(const PointSet& a, std::size_t min_size, std::size_t max_size, const PrimeField& f,
                              LocusCache& cache, std::vector<EvidenceItem>& evidence) {
  Flag flag{true, true, ""};
  std::size_t checked = 0;
  for (std::size_t k = std::min(max_size, a.size()); k >= min_size && k >= 1; --k) {
    for_each_subset(a.size(), k, [&](const std::vector<std::size_t>& idx) {
      auto rep = cache.get(a.subset(idx), f);
      ++checked;
      if (rep.kind != BaseLocusReport::Kind::Finite) {
        flag.ok = false;
        flag.detail = "base locus of subset {" + join(idx) + "} is " + rep.describe();
        return false;
      }
      return true;
    });
    if (!flag.ok) break;
  }
  if (flag.ok) flag.detail = std::to_string(checked) + " subsets with finite base locus";
  evidence.push_back({"base_locus.subsets_checked", std::to_string(checked), "groebner mod " + std::to_string(f.modulus()), 0});
  return flag;
}

ConditionReport condition_battery(const Decomposition& dec, BatteryLevel level, const FieldPolicy& policy, LocusCache* cache) {
  std::size_t r = dec.size();
  if (r < 9 || r > 13) throw std::invalid_argument("condition battery applies to 9 <= r <= 13");
  RationalField q;
  PrimeField f(policy.prime);
  LocusCache local;
  LocusCache& loci = cache ? *cache : local;
  ConditionReport rep;
  auto& ev = rep.evidence;

  // (i)
  auto v4 = evaluation_matrix(q, dec.points, 4);
  auto v4rank = certified_rank(v4, r, policy);
  ev.push_back({"veronese4.rank", std::to_string(v4rank.rank), v4rank.method, v4rank.hash});
  rep.non_redundant.evaluated = true;
  if (v4rank.rank == r) {
    auto w = recover_weights(dec.form(), dec.points);
    rep.weights = w.weights;
    auto red = redundant_point(dec, policy);
    bool nonzero = w.in_span;
    for (const auto& x : w.weights) nonzero = nonzero && sgn(x) != 0;
    rep.non_redundant.ok = nonzero && !red;
    rep.non_redundant.detail = rep.non_redundant.ok ? "T outside the span of every v4(A minus P_i)"
                                                    : "point " + std::to_string(red ? *red + 1 : 0) + " is redundant";
  } else {
    rep.non_redundant.detail = "v4(A) has rank " + std::to_string(v4rank.rank);
  }

  // (ii)
  auto k1 = kruskal_rank(dec.points, 1);
  rep.kruskal1 = {true, k1.k == 5, "k1 = " + std::to_string(k1.k)};
  if (!k1.witness.empty()) rep.kruskal1.detail += ", dependent subset {" + join(k1.witness) + "}";
  ev.push_back({"kruskal1", std::to_string(k1.k), "rational, " + std::to_string(k1.subsets_checked) + " maximal minors", 0});

  // (iii)
  auto k2 = kruskal_rank(dec.points, 2);
  rep.kruskal2 = {true, k2.k == r, "k2 = " + std::to_string(k2.k)};
  ev.push_back({"kruskal2", std::to_string(k2.k), "rational", 0});
  if (rep.kruskal2.ok) {
    auto v2 = evaluation_matrix(q, dec.points, 2);
    auto scan = all_maximal_minors_nonzero(q, v2);
    ev.push_back({"veronese2.maximal_minors", std::to_string(scan.checked) + "/" + std::to_string(scan.total) +
                                                  (scan.all_nonzero ? " nonzero" : " (zero minor found)"),
                  "rational", matrix_hash(v2)});
  }

  // (iv) / (iv')
  if (r <= 11) {
    auto bl = loci.get(dec.points, f);
    rep.base_locus = {true, bl.kind == BaseLocusReport::Kind::Finite, bl.describe()};
    ev.push_back({"base_locus", bl.describe(), bl.method, 0});
  }
  if (level != BatteryLevel::IV) {
    if (r <= 11) {
      rep.base_locus_prime = rep.base_locus;
    } else {
      rep.base_locus_prime = subset_closed_base_locus(dec.points, 11, 11, f, loci, ev);
    }
  }

  // (v)
  if (level == BatteryLevel::V && r == 12) {
    auto bl = loci.get(dec.points, f);
    ev.push_back({"base_locus", bl.describe(), bl.method, 0});
    bool curve = bl.kind == BaseLocusReport::Kind::Curve && bl.curve_degree == 8 && bl.constant == -4;
    rep.curve.evaluated = true;
    if (!curve) {
      rep.curve.detail = "base locus is " + bl.describe();
    } else {
      auto quadrics = ideal_piece(f, dec.points, 2).forms();
      auto sm = smoothness_certificate(f, quadrics);
      ev.push_back({"singular_locus.h6", std::to_string(sm.h6), sm.method, 0});
      rep.curve.ok = sm.smooth;
      rep.curve.detail = sm.smooth ? "smooth complete intersection curve(8, 8t-4)" : "Jacobian locus nonempty";
    }
  }
  return rep;
}

}  // namespace waring
