#include "waring/groebner.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace waring {

namespace {

bool grevlex_greater(const Exponents& a, const Exponents& b) {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  for (int v = kVars - 1; v >= 0; --v)
    if (a[v] != b[v]) return a[v] < b[v];
  return false;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (int v = 0; v < kVars; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents c;
  for (int v = 0; v < kVars; ++v) c[v] = std::max(a[v], b[v]);
  return c;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents c;
  for (int v = 0; v < kVars; ++v) c[v] = a[v] - b[v];
  return c;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (int v = 0; v < kVars; ++v)
    if (a[v] > 0 && b[v] > 0) return false;
  return true;
}

}  // namespace

const std::vector<std::uint32_t>& grevlex_order(int d) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<std::uint32_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[d];
  if (!slot) {
    const auto& mons = monomials(d);
    slot = std::make_unique<std::vector<std::uint32_t>>(mons.size());
    for (std::uint32_t i = 0; i < mons.size(); ++i) (*slot)[i] = i;
    std::sort(slot->begin(), slot->end(), [&](std::uint32_t a, std::uint32_t b) { return grevlex_greater(mons[a], mons[b]); });
  }
  return *slot;
}

TruncatedGroebner::TruncatedGroebner(const PrimeField& f, const std::vector<FormP>& gens, int max_degree)
    : f_(f), max_degree_(max_degree), reducers_(max_degree + 1) {
  for (int d = 0; d <= max_degree; ++d) reducers_[d].assign(dim_graded(d), Reducer{});
  std::vector<const FormP*> sorted;
  for (const auto& g : gens)
    if (g.degree <= max_degree) sorted.push_back(&g);
  std::stable_sort(sorted.begin(), sorted.end(), [](const FormP* a, const FormP* b) { return a->degree < b->degree; });
  std::size_t next_gen = 0;
  for (int d = 0; d <= max_degree; ++d) {
    while (next_gen < sorted.size() && sorted[next_gen]->degree == d) {
      add_element(sorted[next_gen]->coeffs, d);
      ++next_gen;
    }
    // S-pairs of this degree; new elements only create pairs of higher degree
    std::vector<Pair> now;
    std::vector<Pair> later;
    for (const auto& p : pairs_) (p.degree == d ? now : later).push_back(p);
    pairs_ = std::move(later);
    for (const auto& p : now) {
      const auto& gi = basis_[p.i];
      const auto& gj = basis_[p.j];
      VecP dense(dim_graded(d), 0);
      const auto& tabi = product_table(d - gi.degree, gi.degree);
      const auto& tabj = product_table(d - gj.degree, gj.degree);
      std::size_t mi = monomial_index(quotient(p.lcm, gi.lead));
      std::size_t mj = monomial_index(quotient(p.lcm, gj.lead));
      std::size_t ni = dim_graded(gi.degree), nj = dim_graded(gj.degree);
      for (auto [idx, c] : gi.terms) dense[tabi[mi * ni + idx]] = f_.add(dense[tabi[mi * ni + idx]], c);
      for (auto [idx, c] : gj.terms) dense[tabj[mj * nj + idx]] = f_.sub(dense[tabj[mj * nj + idx]], c);
      ++pairs_reduced_;
      add_element(std::move(dense), d);
    }
  }
}

void TruncatedGroebner::reduce_dense(int d, VecP& v) const {
  const auto& order = grevlex_order(d);
  for (std::uint32_t idx : order) {
    std::uint32_t c = v[idx];
    if (c == 0) continue;
    const Reducer& r = reducers_[d][idx];
    if (r.g < 0) continue;
    const Poly& g = basis_[r.g];
    const auto& tab = product_table(d - g.degree, g.degree);
    std::size_t ng = dim_graded(g.degree);
    std::uint64_t neg = f_.modulus() - c;
    for (auto [t, gc] : g.terms) {
      auto& slot = v[tab[r.multiplier * ng + t]];
      slot = static_cast<std::uint32_t>(f_.reduce(neg * gc + slot));
    }
  }
}

void TruncatedGroebner::add_element(VecP dense, int d) {
  if (d > max_degree_) return;
  reduce_dense(d, dense);
  const auto& order = grevlex_order(d);
  const auto& mons = monomials(d);
  Poly p{d, {}, {}};
  std::uint32_t inv = 0;
  for (std::uint32_t idx : order) {
    if (dense[idx] == 0) continue;
    if (p.terms.empty()) {
      inv = *f_.inv(dense[idx]);
      p.lead = mons[idx];
    }
    p.terms.emplace_back(idx, f_.mul(dense[idx], inv));
  }
  if (p.terms.empty()) return;
  basis_.push_back(std::move(p));
  std::size_t h = basis_.size() - 1;
  const Exponents& lead = basis_[h].lead;
  for (int e = d; e <= max_degree_; ++e) {
    const auto& me = monomials(e);
    for (std::size_t m = 0; m < me.size(); ++m) {
      if (reducers_[e][m].g >= 0 || !divides(lead, me[m])) continue;
      reducers_[e][m] = Reducer{static_cast<int>(h), static_cast<std::uint32_t>(monomial_index(quotient(me[m], lead)))};
    }
  }
  update_pairs(h);
}

// Gebauer-Moeller installation of the pairs created by basis element h.
void TruncatedGroebner::update_pairs(std::size_t h) {
  const Exponents& lh = basis_[h].lead;
  std::vector<Pair> c;
  for (std::size_t g = 0; g < h; ++g) {
    Exponents l = lcm_of(lh, basis_[g].lead);
    c.push_back({g, h, l, degree_of(l)});
  }
  std::vector<Pair> d;
  for (std::size_t a = 0; a < c.size(); ++a) {
    bool keep = coprime(lh, basis_[c[a].i].lead);
    if (!keep) {
      keep = true;
      for (std::size_t b = a + 1; b < c.size() && keep; ++b)
        if (divides(c[b].lcm, c[a].lcm)) keep = false;
      for (std::size_t b = 0; b < d.size() && keep; ++b)
        if (divides(d[b].lcm, c[a].lcm)) keep = false;
    }
    if (keep) d.push_back(c[a]);
  }
  std::vector<Pair> kept;
  for (const auto& p : pairs_) {
    bool drop = divides(lh, p.lcm) && lcm_of(basis_[p.i].lead, lh) != p.lcm && lcm_of(basis_[p.j].lead, lh) != p.lcm;
    if (!drop) kept.push_back(p);
  }
  for (const auto& p : d)
    if (!coprime(lh, basis_[p.i].lead) && p.degree <= max_degree_) kept.push_back(p);
  pairs_ = std::move(kept);
}

std::size_t TruncatedGroebner::hilbert(int d) const {
  if (d < 0) return 0;
  if (d > max_degree_) throw std::out_of_range("degree beyond truncation");
  std::size_t n = 0;
  for (const auto& r : reducers_[d])
    if (r.g < 0) ++n;
  return n;
}

VecP TruncatedGroebner::normal_form(const FormP& g) const {
  if (g.degree > max_degree_) throw std::out_of_range("degree beyond truncation");
  VecP v = g.coeffs;
  reduce_dense(g.degree, v);
  return v;
}

bool TruncatedGroebner::contains(const FormP& g) const {
  for (auto x : normal_form(g))
    if (x != 0) return false;
  return true;
}

MatP TruncatedGroebner::normal_form_matrix(int d) const {
  auto std_mons = standard_monomials(d);
  std::vector<std::size_t> row_of(dim_graded(d), 0);
  for (std::size_t r = 0; r < std_mons.size(); ++r) row_of[std_mons[r]] = r;
  MatP m(std_mons.size(), dim_graded(d), 0);
  for (std::size_t j = 0; j < dim_graded(d); ++j) {
    VecP v(dim_graded(d), 0);
    v[j] = 1;
    reduce_dense(d, v);
    for (std::size_t r = 0; r < std_mons.size(); ++r) m(r, j) = v[std_mons[r]];
  }
  return m;
}

std::vector<std::size_t> TruncatedGroebner::standard_monomials(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < reducers_[d].size(); ++m)
    if (reducers_[d][m].g < 0) out.push_back(m);
  return out;
}

}  // namespace waring
