#pragma once

#include "waring/criteria.hpp"
#include "waring/liaison.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace waring {

// Rejected input: r outside 1..13, zero weights, repeated points, wrong degree.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr const char* kExcludedMessage = "identifiability is excluded for r ≥ 14";

enum class RankStatus { Certified, Inconclusive };
enum class Identifiability { Identifiable, NotIdentifiable, Undetermined, CannotHandle };

const char* to_string(RankStatus s);
const char* to_string(Identifiability s);

// Second decomposition B of length 12, the residue of A in CI(Q1, Q2, Q3, F).
struct Witness {
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t shared_point = kNone;  // r = 13: the point of A that B also contains
  std::vector<Integer> lambda;       // F = sum lambda_k F_k, primitive
  std::vector<FormQ> linking;        // Q1, Q2, Q3, F
  std::uint32_t prime = 0;
  std::vector<long> b_hvector;
  std::vector<FormP> b_generators;   // minimal generators of I_B mod prime, degrees <= 4
};

struct SubVerdict {
  std::size_t removed = 0;
  Identifiability identifiability = Identifiability::CannotHandle;
  std::string reason;
};

struct Verdict {
  std::size_t r = 0;
  RankStatus rank_status = RankStatus::Inconclusive;
  Identifiability identifiability = Identifiability::CannotHandle;
  std::string reason;
  std::optional<Witness> witness;
  std::optional<ConditionReport> conditions;
  std::vector<EvidenceItem> evidence;
  std::vector<SubVerdict> subproblems;  // r = 13
};

struct CertifyOptions {
  FieldPolicy policy;
  std::uint64_t second_splitting = 0x9e3779b97f4a7c15ULL;
  bool parallel = true;
};

// Throws InputError on bad input; every other failure becomes CANNOT_HANDLE with a reason.
Verdict certify(const Decomposition& dec, const CertifyOptions& opts = {});

// The r = 12 pipeline on its own; the cache is shared across the r = 13 subproblems.
Verdict certify_twelve(const Decomposition& dec, const CertifyOptions& opts, LocusCache& cache);

}  // namespace waring
