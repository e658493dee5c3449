#include "CLI11.hpp"
#include "waring/constructor.hpp"
#include "waring/instance_io.hpp"

#include <fstream>
#include <iostream>

using namespace waring;

namespace {

constexpr int kRejected = 2;
constexpr int kInternal = 1;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << text;
}

Instance load_checked(const std::string& path) {
  auto inst = load_instance(path);
  if (inst.decomposition.size() >= 14) throw InputError(kExcludedMessage);
  return inst;
}

FieldPolicy make_policy(const std::string& field, std::uint32_t prime) {
  FieldPolicy p;
  p.modular = field == "modp";
  if (!is_prime_u32(prime) || prime < (1u << 30)) throw InputError("--prime must be a prime above 2^30");
  p.prime = prime;
  return p;
}

std::string table_row(const std::vector<std::string>& cells) {
  std::string s;
  for (const auto& c : cells) {
    s += c;
    s.append(c.size() < 10 ? 10 - c.size() : 1, ' ');
  }
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s + "\n";
}

std::string inspect(const Decomposition& dec, bool hilbert, bool locus, bool kruskal, bool terracini, const FieldPolicy& policy) {
  std::string out = "r = " + std::to_string(dec.size()) + "\n";
  if (hilbert) {
    auto h = hilbert_data(dec.points, 5, policy);
    out += "\nHilbert function\n" + table_row({"d", "h(d)", "Dh(d)"});
    for (std::size_t d = 0; d < h.values.size(); ++d)
      out += table_row({std::to_string(d), std::to_string(h.values[d]), std::to_string(h.first_difference[d])});
    out += "h-vector:";
    for (auto x : h.h_vector) out += " " + std::to_string(x);
    out += "\n";
  }
  if (locus) {
    PrimeField f(policy.prime);
    LocusCache cache;
    auto rep = cache.get(dec.points, f);
    out += "\nbase locus of the quadrics through A: " + rep.describe() + "  [" + rep.method + "]\n";
  }
  if (kruskal) {
    out += "\nKruskal ranks\n" + table_row({"d", "k_d"});
    for (int d : {1, 2}) out += table_row({std::to_string(d), std::to_string(kruskal_rank(dec.points, d).k)});
  }
  if (terracini) {
    auto t = terracini_dim(dec.points, 4, policy);
    std::size_t expected = std::min<std::size_t>(5 * dec.size(), dim_graded(4));
    out += "\nTerracini rank: " + std::to_string(t.rank) + " (expected " + std::to_string(expected) + ")  [" + t.method + "]\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify minimality and uniqueness of Waring expressions of quartics in five variables"};
  app.require_subcommand(1);

  std::string file, out_path, field = "modp", kind = "generic";
  std::uint32_t prime = kDefaultPrime;
  bool json = false;
  std::size_t r = 0;
  std::uint64_t seed = 1;
  bool want_hilbert = false, want_locus = false, want_kruskal = false, want_terracini = false;
  ExtractOptions xo;

  auto* cert = app.add_subcommand("certify", "certify an instance file");
  cert->add_option("instance", file, "instance file")->required();
  cert->add_option("--field", field, "rank computations: rational or modp")->check(CLI::IsMember({"rational", "modp"}));
  cert->add_option("--prime", prime, "working prime");
  cert->add_flag("--json", json, "print the verdict as JSON");
  cert->add_option("-o,--output", out_path, "write the JSON verdict to a file");

  auto* gen = app.add_subcommand("generate", "write an instance file");
  gen->add_option("--kind", kind)->check(CLI::IsMember({"generic", "nonid12", "nonid13", "nondisjoint13"}));
  gen->add_option("--r", r, "number of terms (generic only)");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path)->required();

  auto* ins = app.add_subcommand("inspect", "print diagnostic tables");
  ins->add_option("instance", file)->required();
  ins->add_flag("--hilbert", want_hilbert);
  ins->add_flag("--baselocus", want_locus);
  ins->add_flag("--kruskal", want_kruskal);
  ins->add_flag("--terracini", want_terracini);
  ins->add_option("--prime", prime);

  auto* ext = app.add_subcommand("extract", "certify and print a numeric second decomposition");
  ext->add_option("instance", file)->required();
  ext->add_option("--residual", xo.residual, "generator residual tolerance");
  ext->add_option("--cluster-gap", xo.cluster_gap, "relative eigenvalue separation");
  ext->add_option("--prime", prime);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kRejected;
  }

  try {
    if (*cert) {
      auto inst = load_checked(file);
      CertifyOptions opts;
      opts.policy = make_policy(field, prime);
      auto v = certify(inst.decomposition, opts);
      if (!out_path.empty()) write_output(out_path, verdict_json(v));
      std::cout << (json ? verdict_json(v) : verdict_text(v));
    } else if (*gen) {
      Instance inst;
      inst.seed = seed;
      if (kind == "generic") {
        if (r < 1 || r > 13) throw InputError(r >= 14 ? kExcludedMessage : "--r must be in 1..13");
        inst.decomposition = random_decomposition(r, seed);
      } else {
        std::size_t fixed = kind == "nonid12" ? 12 : 13;
        if (r != 0 && r != fixed) throw InputError("--kind " + kind + " has r = " + std::to_string(fixed));
        if (kind == "nonid12") inst.decomposition = make_nonidentifiable_12(seed).decomposition;
        else if (kind == "nonid13") inst.decomposition = make_nonidentifiable_13(seed).decomposition;
        else inst.decomposition = make_nondisjoint_13(seed).decomposition;
      }
      inst.provenance = "generate --kind " + kind + " --r " + std::to_string(inst.decomposition.size()) + " --seed " +
                        std::to_string(seed);
      write_output(out_path, serialize_instance(inst, false));
    } else if (*ins) {
      auto inst = load_instance(file);
      bool all = !(want_hilbert || want_locus || want_kruskal || want_terracini);
      std::cout << inspect(inst.decomposition, all || want_hilbert, all || want_locus, all || want_kruskal,
                           all || want_terracini, make_policy("modp", prime));
    } else if (*ext) {
      auto inst = load_checked(file);
      CertifyOptions opts;
      opts.policy = make_policy("modp", prime);
      auto v = certify(inst.decomposition, opts);
      std::cout << verdict_text(v);
      if (v.identifiability == Identifiability::NotIdentifiable && v.witness)
        std::cout << numeric_decomposition_text(extract_second_decomposition(inst.decomposition, *v.witness, xo));
      else
        std::cout << "no second decomposition to extract\n";
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kRejected;
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return 0;
}
