#include "waring/instance_io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace waring {

using nlohmann::ordered_json;

namespace {

std::string line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

Rational parse_rational(const ordered_json& j, const std::string& where) {
  std::string s;
  if (j.is_string()) s = j.get<std::string>();
  else if (j.is_number_integer()) s = j.dump();
  else throw ParseError(where + ": expected a rational as a string");
  if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
    throw ParseError(where + ": malformed rational \"" + s + "\"");
  Rational q;
  try {
    q = Rational(s.front() == '+' ? s.substr(1) : s, 10);
  } catch (const std::invalid_argument&) {
    throw ParseError(where + ": malformed rational \"" + s + "\"");
  }
  if (q.get_den() == 0) throw ParseError(where + ": zero denominator");
  q.canonicalize();
  return q;
}

ordered_json rational_array(const std::vector<Rational>& v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json integer_array(const std::vector<Integer>& v) {
  auto a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

ordered_json flag_json(const Flag& f) {
  ordered_json j;
  j["evaluated"] = f.evaluated;
  j["ok"] = f.ok;
  j["detail"] = f.detail;
  return j;
}

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(10) << std::fixed;
  double re = std::abs(z.real()) < 5e-11 ? 0.0 : z.real();
  double im = std::abs(z.imag()) < 5e-11 ? 0.0 : z.imag();
  os << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + line_of(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (doc.contains("format") && doc["format"] != kInstanceFormat)
    throw ParseError("format: unsupported version " + doc["format"].dump());
  if (!doc.contains("variables") || doc["variables"] != 5) throw ParseError("variables: must be 5");
  if (!doc.contains("degree") || doc["degree"] != 4) throw ParseError("degree: must be 4");
  if (!doc.contains("points") || !doc["points"].is_array()) throw ParseError("points: expected an array");
  if (!doc.contains("weights") || !doc["weights"].is_array()) throw ParseError("weights: expected an array");

  std::vector<ProjectivePoint> pts;
  const auto& jp = doc["points"];
  for (std::size_t i = 0; i < jp.size(); ++i) {
    std::string where = "points[" + std::to_string(i) + "]";
    if (!jp[i].is_array() || jp[i].size() != kVars) throw ParseError(where + ": expected 5 coordinates");
    std::vector<Rational> c;
    for (std::size_t k = 0; k < jp[i].size(); ++k) c.push_back(parse_rational(jp[i][k], where + "[" + std::to_string(k) + "]"));
    try {
      pts.emplace_back(c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  std::vector<Rational> w;
  const auto& jw = doc["weights"];
  for (std::size_t i = 0; i < jw.size(); ++i) {
    auto q = parse_rational(jw[i], "weights[" + std::to_string(i) + "]");
    if (q == 0) throw ParseError("weights[" + std::to_string(i) + "]: zero weight");
    w.push_back(q);
  }
  if (w.size() != pts.size()) throw ParseError("weights: " + std::to_string(w.size()) + " weights for " + std::to_string(pts.size()) + " points");

  Instance inst;
  try {
    inst.decomposition = Decomposition(PointSet(pts), w);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("points: ") + e.what());
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ParseError("seed: expected a nonnegative integer");
    inst.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) throw ParseError("provenance: expected a string");
    inst.provenance = doc["provenance"].get<std::string>();
  }
  if (doc.contains("form")) {
    const auto& jf = doc["form"];
    if (!jf.is_array() || jf.size() != dim_graded(4)) throw ParseError("form: expected 70 coefficients");
    auto t = inst.decomposition.form();
    for (std::size_t i = 0; i < jf.size(); ++i) {
      std::string where = "form[" + std::to_string(i) + "]";
      if (parse_rational(jf[i], where) != t.coeffs[i]) throw ParseError(where + ": differs from the weighted Veronese sum");
    }
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst, bool with_form) {
  ordered_json j;
  j["format"] = kInstanceFormat;
  j["variables"] = kVars;
  j["degree"] = 4;
  auto pts = ordered_json::array();
  for (const auto& p : inst.decomposition.points.points()) pts.push_back(rational_array(p.raw()));
  j["points"] = pts;
  j["weights"] = rational_array(inst.decomposition.weights);
  if (with_form) j["form"] = rational_array(inst.decomposition.form().coeffs);
  if (inst.seed) j["seed"] = *inst.seed;
  if (!inst.provenance.empty()) j["provenance"] = inst.provenance;
  return j.dump(2) + "\n";
}

std::string verdict_json(const Verdict& v) {
  ordered_json j;
  j["format"] = kVerdictFormat;
  j["r"] = v.r;
  j["rank_status"] = to_string(v.rank_status);
  if (v.rank_status == RankStatus::Certified) j["rank"] = v.r;
  j["identifiability"] = to_string(v.identifiability);
  j["reason"] = v.reason;
  if (v.conditions) {
    ordered_json c;
    c["i"] = flag_json(v.conditions->non_redundant);
    c["ii"] = flag_json(v.conditions->kruskal1);
    c["iii"] = flag_json(v.conditions->kruskal2);
    c["iv"] = flag_json(v.conditions->base_locus);
    c["iv_prime"] = flag_json(v.conditions->base_locus_prime);
    c["v"] = flag_json(v.conditions->curve);
    j["conditions"] = c;
  }
  auto ev = ordered_json::array();
  for (const auto& e : v.evidence) {
    ordered_json item;
    item["key"] = e.key;
    item["value"] = e.value;
    item["method"] = e.method;
    if (e.hash) {
      char buf[17];
      std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(e.hash));
      item["hash"] = buf;
    }
    ev.push_back(item);
  }
  j["evidence"] = ev;
  if (!v.subproblems.empty()) {
    auto subs = ordered_json::array();
    for (const auto& s : v.subproblems) {
      ordered_json item;
      item["removed"] = s.removed + 1;
      item["identifiability"] = to_string(s.identifiability);
      item["reason"] = s.reason;
      subs.push_back(item);
    }
    j["subproblems"] = subs;
  }
  if (v.witness) {
    const auto& w = *v.witness;
    ordered_json wj;
    if (w.shared_point != Witness::kNone) wj["shared_point"] = w.shared_point + 1;
    wj["lambda"] = integer_array(w.lambda);
    auto link = ordered_json::array();
    for (const auto& g : w.linking) {
      ordered_json f;
      f["degree"] = g.degree;
      f["coefficients"] = rational_array(g.coeffs);
      link.push_back(f);
    }
    wj["linking"] = link;
    wj["prime"] = w.prime;
    wj["b_hvector"] = w.b_hvector;
    auto gens = ordered_json::array();
    for (const auto& g : w.b_generators) {
      ordered_json f;
      f["degree"] = g.degree;
      f["coefficients"] = g.coeffs;
      gens.push_back(f);
    }
    wj["b_generators_mod_prime"] = gens;
    j["witness"] = wj;
  }
  return j.dump(2) + "\n";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "r = " << v.r << "\n";
  os << "rank: " << to_string(v.rank_status);
  if (v.rank_status == RankStatus::Certified) os << "(" << v.r << ")";
  os << "\nidentifiability: " << to_string(v.identifiability) << "\n";
  if (!v.reason.empty()) os << "reason: " << v.reason << "\n";
  os << "evidence:\n";
  for (const auto& e : v.evidence) os << "  " << e.key << " = " << e.value << "  [" << e.method << "]\n";
  if (v.witness) {
    const auto& w = *v.witness;
    os << "witness:\n";
    if (w.shared_point != Witness::kNone) os << "  shared point: " << w.shared_point + 1 << "\n";
    os << "  lambda:";
    for (const auto& x : w.lambda) os << " " << x;
    os << "\n  linking cubic: " << form_to_string(w.linking.back()) << "\n";
    os << "  h-vector of B:";
    for (auto h : w.b_hvector) os << " " << h;
    os << "\n  generators of I_B mod " << w.prime << ": " << w.b_generators.size() << "\n";
  }
  return os.str();
}

std::string numeric_decomposition_text(const NumericDecomposition& nd) {
  std::ostringstream os;
  os << "second decomposition (" << nd.points.size() << " points, " << nd.real_points << " real, " << nd.conjugate_pairs
     << " conjugate pairs)\n";
  for (std::size_t i = 0; i < nd.points.size(); ++i) {
    os << "  B" << i + 1 << " = [";
    for (int j = 0; j < kVars; ++j) os << (j ? ", " : "") << format_complex(nd.points[i][j]);
    os << "]  weight " << format_complex(nd.weights[i]) << "\n";
  }
  std::ostringstream res;
  res << std::scientific << std::setprecision(2) << nd.generator_residual << " / " << nd.weight_residual;
  os << "residuals (generators / weights): " << res.str() << "\n";
  return os.str();
}

}  // namespace waring
