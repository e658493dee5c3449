#include "waring/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace waring {

namespace {

constexpr int kMaxCachedDegree = 24;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

void enumerate(int var, int rem, Exponents& e, std::vector<Exponents>& out) {
  if (var == kVars - 1) {
    e[var] = rem;
    out.push_back(e);
    return;
  }
  for (int k = rem; k >= 0; --k) {
    e[var] = k;
    enumerate(var + 1, rem - k, e, out);
  }
}

}  // namespace

std::size_t dim_graded(int d) {
  if (d < 0) return 0;
  return binomial(static_cast<unsigned>(d + kVars - 1), kVars - 1);
}

const std::vector<Exponents>& monomials(int d) {
  if (d < 0 || d > kMaxCachedDegree) throw std::out_of_range("monomial degree out of range");
  static std::vector<std::unique_ptr<std::vector<Exponents>>> cache(kMaxCachedDegree + 1);
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (!cache[d]) {
    auto v = std::make_unique<std::vector<Exponents>>();
    Exponents e{};
    enumerate(0, d, e, *v);
    cache[d] = std::move(v);
  }
  return *cache[d];
}

int degree_of(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

std::size_t monomial_index(const Exponents& e) {
  int rem = degree_of(e);
  std::size_t idx = 0;
  for (int v = 0; v < kVars - 1; ++v) {
    int left = kVars - v - 1;  // variables after v
    // monomials with a larger exponent at v come first
    for (int k = rem; k > e[v]; --k) idx += binomial(static_cast<unsigned>(rem - k + left - 1), left - 1);
    rem -= e[v];
  }
  return idx;
}

const std::vector<std::uint32_t>& product_table(int a, int b) {
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::uint32_t>>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({a, b});
    if (it != cache.end()) return *it->second;
  }
  const auto& ma = monomials(a);
  const auto& mb = monomials(b);
  auto tab = std::make_unique<std::vector<std::uint32_t>>(ma.size() * mb.size());
  for (std::size_t i = 0; i < ma.size(); ++i)
    for (std::size_t j = 0; j < mb.size(); ++j) {
      Exponents e;
      for (int v = 0; v < kVars; ++v) e[v] = ma[i][v] + mb[j][v];
      (*tab)[i * mb.size() + j] = static_cast<std::uint32_t>(monomial_index(e));
    }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& slot = cache[{a, b}];
  if (!slot) slot = std::move(tab);
  return *slot;
}

Integer factorial_weight(const Exponents& e) {
  Integer w = 1;
  for (int x : e) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(x));
    w *= f;
  }
  return w;
}

Integer multinomial(const Exponents& e) {
  Integer n;
  mpz_fac_ui(n.get_mpz_t(), static_cast<unsigned long>(degree_of(e)));
  return n / factorial_weight(e);
}

std::string monomial_name(const Exponents& e) {
  std::string s;
  for (int v = 0; v < kVars; ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : raw_(std::move(coords)) {
  if (raw_.size() != kVars) throw std::invalid_argument("point must have 5 coordinates");
  std::size_t lead = 0;
  while (lead < raw_.size() && sgn(raw_[lead]) == 0) ++lead;
  if (lead == raw_.size()) throw std::invalid_argument("zero point");
  canon_ = raw_;
  Rational s = raw_[lead];
  for (auto& x : canon_) x /= s;
}

bool ProjectivePoint::operator<(const ProjectivePoint& o) const {
  for (std::size_t i = 0; i < canon_.size(); ++i) {
    int c = cmp(canon_[i], o.canon_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string form_to_string(const FormQ& g) {
  std::ostringstream os;
  const auto& mons = monomials(g.degree);
  bool first = true;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (sgn(g.coeffs[i]) == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(g.coeffs[i]) << ")*" << monomial_name(mons[i]);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace waring
