#include "waring/certifier.hpp"

#include <future>
#include <sstream>

namespace waring {

const char* to_string(RankStatus s) {
  return s == RankStatus::Certified ? "RANK_CERTIFIED" : "INCONCLUSIVE";
}

const char* to_string(Identifiability s) {
  switch (s) {
    case Identifiability::Identifiable:
      return "IDENTIFIABLE";
    case Identifiability::NotIdentifiable:
      return "NOT_IDENTIFIABLE";
    case Identifiability::Undetermined:
      return "UNDETERMINED";
    case Identifiability::CannotHandle:
      return "CANNOT_HANDLE";
  }
  return "?";
}

namespace {

Verdict cannot(Verdict v, std::string reason) {
  v.identifiability = Identifiability::CannotHandle;
  v.reason = std::move(reason);
  return v;
}

std::string flag_failure(const ConditionReport& rep, bool with_iv, bool with_iv_prime, bool with_v) {
  struct Item {
    const Flag* flag;
    const char* name;
    bool wanted;
  };
  const Item items[] = {{&rep.non_redundant, "(i)", true},
                        {&rep.kruskal1, "(ii)", true},
                        {&rep.kruskal2, "(iii)", true},
                        {&rep.base_locus, "(iv)", with_iv},
                        {&rep.base_locus_prime, "(iv')", with_iv_prime},
                        {&rep.curve, "(v)", with_v}};
  for (const auto& it : items) {
    if (!it.wanted) continue;
    if (!it.flag->evaluated) return std::string("condition ") + it.name + " not evaluated";
    if (!it.flag->ok) return std::string("condition ") + it.name + " fails: " + it.flag->detail;
  }
  return {};
}

bool rank_conditions(const ConditionReport& rep) {
  return rep.non_redundant.ok && rep.kruskal1.ok && rep.kruskal2.ok;
}

std::string vector_text(const std::vector<Integer>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::vector<long> hvector_of_pieces(const std::vector<IdealPieceP>& pieces) {
  std::vector<std::size_t> h;
  for (const auto& p : pieces) h.push_back(dim_graded(p.degree) - p.dim());
  auto dh = difference(h);
  while (!dh.empty() && dh.back() == 0) dh.pop_back();
  return dh;
}

bool proportional(const PrimeField& f, const VecP& a, const VecP& b) {
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  if (i == a.size() || b[i] == 0) return false;
  auto s = f.mul(b[i], *f.inv(a[i]));
  for (std::size_t k = 0; k < a.size(); ++k)
    if (f.mul(a[k], s) != b[k]) return false;
  return true;
}

Verdict certify_small(const Decomposition& dec) {
  Verdict v;
  v.r = dec.size();
  ReshapedKruskalResult kr;
  try {
    kr = reshaped_kruskal(dec, 4);
  } catch (const std::invalid_argument& e) {
    return cannot(v, e.what());
  }
  std::ostringstream part;
  for (std::size_t i = 0; i < kr.best_partition.size(); ++i) part << (i ? "+" : "") << kr.best_partition[i];
  v.evidence.push_back({"reshaped_kruskal.partition", part.str(), "rational", 0});
  v.evidence.push_back({"reshaped_kruskal.bound", to_string(kr.best_bound), "rational", 0});
  for (const auto& [d, k] : kr.kruskal) v.evidence.push_back({"kruskal" + std::to_string(d), std::to_string(k), "rational", 0});
  if (kr.verdict != CriterionVerdict::Identifiable)
    return cannot(v, "reshaped Kruskal bound " + to_string(kr.best_bound) + " is below r");
  v.rank_status = RankStatus::Certified;
  v.identifiability = Identifiability::Identifiable;
  v.reason = "reshaped Kruskal criterion";
  return v;
}

Verdict certify_nine(const Decomposition& dec, const CertifyOptions& opts) {
  Verdict v;
  v.r = 9;
  if (auto red = redundant_point(dec, opts.policy)) return cannot(v, "point " + std::to_string(*red + 1) + " is redundant");
  auto res = quartic_2n1_criterion(dec, opts.policy);
  v.evidence.push_back({"veronese4.rank", std::to_string(res.veronese_rank), "certified", 0});
  v.evidence.push_back({"kruskal1", std::to_string(res.k1), "rational", 0});
  v.evidence.push_back({"terracini.rank", std::to_string(res.terracini_rank), "certified", 0});
  if (res.verdict != CriterionVerdict::Identifiable) return cannot(v, "2n+1 criterion does not apply");
  v.rank_status = RankStatus::Certified;
  v.identifiability = Identifiability::Identifiable;
  v.reason = "2n+1 criterion for quartics";
  return v;
}

Verdict certify_ten_eleven(const Decomposition& dec, const CertifyOptions& opts) {
  Verdict v;
  v.r = dec.size();
  LocusCache cache;
  auto rep = condition_battery(dec, BatteryLevel::IV, opts.policy, &cache);
  v.evidence = rep.evidence;
  if (rank_conditions(rep)) v.rank_status = RankStatus::Certified;
  auto fail = flag_failure(rep, true, false, false);
  v.conditions = rep;
  if (!fail.empty()) return cannot(v, fail);
  PrimeField f(opts.policy.prime);
  auto closed = subset_closed_base_locus(dec.points, 9, dec.size(), f, cache, v.evidence);
  if (!closed.ok) return cannot(v, "condition (iv) on subsets fails: " + closed.detail);
  v.identifiability = Identifiability::Identifiable;
  v.reason = "conditions (i)-(iv) on A and on all subsets of size >= 9";
  return v;
}

// Step 8 when MatEqns has rank 7: exact parameter from the Euler-Jacobi system, then the
// complete intersection, its reducedness and the colon oracle at that parameter.
Verdict confirm_second_decomposition(Verdict v, const Decomposition& dec, const ResidueFamily& fam,
                                     const FinalTestSystem& sys, const MatQ& ej) {
  RationalField q;
  const auto f = fam.field();
  auto ker = kernel(q, ej);
  v.evidence.push_back({"euler_jacobi.kernel_dim", std::to_string(ker.dim()), "rational", matrix_hash(ej)});
  if (ker.dim() != 1) return cannot(v, "MatEqns kernel is not matched by the exact Euler-Jacobi system");
  auto lambda = primitive_integer_row(ker.basis[0]);
  VecP lp;
  for (const auto& x : lambda) lp.push_back(f.from_integer(x));
  if (!proportional(f, sys.kernel.basis[0], lp)) return cannot(v, "exact parameter disagrees with the MatEqns kernel");

  FormQ cubic{3, std::vector<Rational>(dim_graded(3), Rational(0))};
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (std::size_t i = 0; i < cubic.coeffs.size(); ++i) cubic.coeffs[i] += Rational(lambda[k]) * fam.cubics_q[k].coeffs[i];
  auto linking = fam.quadrics_q;
  linking.push_back(cubic);
  std::vector<FormP> gens;
  for (const auto& g : linking) gens.push_back(to_field(f, g));

  CompleteIntersection ci;
  try {
    ci = certify_ci(f, gens);
  } catch (const NotProper& e) {
    return cannot(v, std::string("linking cubic gives no complete intersection: ") + e.what());
  }
  v.evidence.push_back({"linking.hilbert4", std::to_string(ci.hilbert[4]), "koszul mod " + std::to_string(f.modulus()), 0});
  auto red = reducedness_certificate(f, gens);
  v.evidence.push_back({"linking.reduced", red.reduced ? "yes" : "no", red.method, 0});
  if (!red.reduced) return cannot(v, "linking complete intersection is not reduced");

  // w proportional to the Euler-Jacobi weights of A in Z
  Rational ratio;
  for (std::size_t i = 0; i < dec.size(); ++i) {
    auto c = euler_jacobi_weight(linking, dec.points[i].raw());
    if (c == 0) return cannot(v, "vanishing Euler-Jacobi weight");
    Rational t = dec.weights[i] / c;
    t.canonicalize();
    if (i == 0) ratio = t;
    else if (t != ratio) return cannot(v, "weights are not proportional to the Euler-Jacobi weights");
  }
  v.evidence.push_back({"euler_jacobi.proportional", "yes", "rational", 0});

  auto pieces = residue_points_ideal(f, ci, dec.points, 4);
  auto tp = to_field(f, dec.form());
  for (const auto& g : pieces[4].forms())
    if (apolar_pair(f, g, tp) != 0) return cannot(v, "colon oracle refutes the MatEqns kernel");
  v.evidence.push_back({"oracle.orthogonal", "T orthogonal to (I_B)_4, dim " + std::to_string(pieces[4].dim()),
                        "colon mod " + std::to_string(f.modulus()), 0});

  Witness w;
  w.lambda = lambda;
  w.linking = linking;
  w.prime = f.modulus();
  w.b_hvector = hvector_of_pieces(pieces);
  w.b_generators = minimal_generators(f, pieces);
  v.evidence.push_back({"witness.lambda", vector_text(lambda), "rational", 0});
  v.witness = std::move(w);
  v.identifiability = Identifiability::NotIdentifiable;
  v.reason = "second decomposition linked to A by CI(2,2,2,3)";
  return v;
}

Verdict certify_thirteen(const Decomposition& dec, const CertifyOptions& opts) {
  Verdict v;
  v.r = 13;
  LocusCache cache;
  auto rep = condition_battery(dec, BatteryLevel::IVPrime, opts.policy, &cache);
  v.evidence = rep.evidence;
  v.conditions = rep;
  auto fail = flag_failure(rep, false, true, false);
  if (!fail.empty()) return cannot(v, fail);
  v.rank_status = RankStatus::Certified;

  std::vector<Verdict> subs(13);
  auto run = [&](std::size_t i) {
    std::vector<Rational> w;
    for (std::size_t k = 0; k < 13; ++k)
      if (k != i) w.push_back(dec.weights[k]);
    try {
      return certify_twelve(Decomposition(dec.points.without(i), w), opts, cache);
    } catch (const std::exception& e) {
      Verdict s;
      s.r = 12;
      return cannot(s, e.what());
    }
  };
  if (opts.parallel) {
    std::vector<std::future<Verdict>> jobs;
    for (std::size_t i = 0; i < 13; ++i) jobs.push_back(std::async(std::launch::async, run, i));
    for (std::size_t i = 0; i < 13; ++i) subs[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < 13; ++i) subs[i] = run(i);
  }

  std::optional<std::size_t> bad, unhandled;
  for (std::size_t i = 0; i < 13; ++i) {
    v.subproblems.push_back({i, subs[i].identifiability, subs[i].reason});
    v.evidence.push_back({"subproblem." + std::to_string(i + 1), to_string(subs[i].identifiability), subs[i].reason, 0});
    if (subs[i].identifiability == Identifiability::NotIdentifiable && !bad) bad = i;
    if (subs[i].identifiability != Identifiability::Identifiable && !unhandled) unhandled = i;
  }
  if (bad) {
    v.identifiability = Identifiability::NotIdentifiable;
    v.witness = subs[*bad].witness;
    v.witness->shared_point = *bad;
    v.reason = "T minus the term of point " + std::to_string(*bad + 1) + " has a second decomposition";
    return v;
  }
  if (unhandled) return cannot(v, "subproblem " + std::to_string(*unhandled + 1) + ": " + subs[*unhandled].reason);
  v.identifiability = Identifiability::Undetermined;
  v.reason = "no second decomposition meets A; the disjoint family test is not implemented";
  return v;
}

}  // namespace

Verdict certify_twelve(const Decomposition& dec, const CertifyOptions& opts, LocusCache& cache) {
  Verdict v;
  v.r = 12;
  auto rep = condition_battery(dec, BatteryLevel::V, opts.policy, &cache);
  v.evidence = rep.evidence;
  v.conditions = rep;
  if (rank_conditions(rep)) v.rank_status = RankStatus::Certified;
  if (auto fail = flag_failure(rep, false, false, false); !fail.empty()) return cannot(v, fail);

  auto terr = terracini_dim(dec.points, 4, opts.policy);
  v.evidence.push_back({"terracini.rank", std::to_string(terr.rank), terr.method, terr.hash});
  if (terr.rank != 60) return cannot(v, "tangent spaces span dimension " + std::to_string(terr.rank));
  if (auto fail = flag_failure(rep, false, true, true); !fail.empty()) return cannot(v, fail);

  const PrimeField f(opts.policy.prime);
  ResidueFamily fam, alt;
  FinalTestSystem sys, sys2;
  try {
    fam = make_residue_family(dec.points, f);
    alt = make_residue_family(dec.points, f, opts.second_splitting);
    auto t = dec.form();
    sys = build_mateqns(t, dec.points, fam);
    sys2 = build_mateqns(t, dec.points, alt);
  } catch (const LiftingError& e) {
    return cannot(v, std::string("lifting failed: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return cannot(v, e.what());
  }
  v.evidence.push_back({"mateqns.raw_rows", std::to_string(sys.raw_rows), "mod " + std::to_string(f.modulus()), 0});
  v.evidence.push_back({"mateqns.selected_rows", std::to_string(sys.selected_rows), "mod " + std::to_string(f.modulus()), 0});
  v.evidence.push_back({"mateqns.rank", std::to_string(sys.rank), "mod " + std::to_string(f.modulus()), sys.hash});
  v.evidence.push_back({"mateqns.kernel_dim", std::to_string(sys.kernel.dim()), "mod " + std::to_string(f.modulus()), 0});
  bool invariant = sys.kernel == sys2.kernel;
  v.evidence.push_back({"mateqns.kernel_invariant", invariant ? "yes" : "no", "second splitting", sys2.hash});
  if (!invariant) return cannot(v, "MatEqns kernel depends on the lifting splitting");

  RationalField q;
  auto ej = euler_jacobi_system(dec.points, dec.weights, fam.quadrics_q, fam.cubics_q);
  auto ej_rank = rank(q, ej);
  v.evidence.push_back({"euler_jacobi.rank", std::to_string(ej_rank), "rational", matrix_hash(ej)});

  if (sys.rank == 8) {
    if (ej_rank != 8) return cannot(v, "exact Euler-Jacobi system is rank deficient");
    v.identifiability = Identifiability::Identifiable;
    v.reason = "final test: MatEqns has full rank 8";
    return v;
  }
  if (sys.rank == 7) return confirm_second_decomposition(std::move(v), dec, fam, sys, ej);
  return cannot(v, "MatEqns has rank " + std::to_string(sys.rank));
}

Verdict certify(const Decomposition& dec, const CertifyOptions& opts) {
  std::size_t r = dec.size();
  if (r >= 14) throw InputError(kExcludedMessage);
  if (r == 0) throw InputError("empty decomposition");
  if (dec.degree != 4) throw InputError("only quartic forms are supported");
  if (dec.weights.size() != r) throw InputError("number of weights differs from number of points");
  for (const auto& w : dec.weights)
    if (w == 0) throw InputError("zero weight");
  if (r <= 8) return certify_small(dec);
  if (r == 9) return certify_nine(dec, opts);
  if (r <= 11) return certify_ten_eleven(dec, opts);
  if (r == 12) {
    LocusCache cache;
    return certify_twelve(dec, opts, cache);
  }
  return certify_thirteen(dec, opts);
}

}  // namespace waring
