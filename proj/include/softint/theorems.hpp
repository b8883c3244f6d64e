#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "softint/enumerate.hpp"
#include "softint/int_group.hpp"

namespace softint {

enum class Verdict { Holds, Violated, PreconditionUnmet };
const char* to_string(Verdict v);

/// Group each soft set of an instance lives over.
enum class Carrier { Group, Domain, Codomain };

/// A concrete input to one theorem checker. Reproducible from serialize():
///   group <spec>
///   universe m l_0 ... l_{m-1}
///   hom <spec>                  (optional)
///   seed <n>                    (optional)
///   soft group|domain|codomain  then one soft-set file body, repeated
struct Instance {
  std::string group_spec;
  GroupPtr group;
  UniversePtr universe;
  std::optional<std::string> hom_spec;
  std::optional<Homomorphism> hom;
  std::optional<std::uint64_t> seed;
  Carrier carrier = Carrier::Group;
  std::vector<SoftSet> soft_sets;

  std::string serialize() const;
  /// 16 hex digits of FNV-1a over serialize().
  std::string digest() const;
  /// Throws ParseError.
  static Instance parse(std::string_view text);
};

enum class Input {
  Any,       // arbitrary soft set
  IntGroup,  // soft int-group
  Normal,    // normal soft int-group
};

struct TheoremInfo {
  std::string id;
  std::string statement;
  /// One entry per soft set the checker takes. Empty for statements about
  /// G alone or about all soft sets over (G, U) at once.
  std::vector<Input> inputs;
  bool needs_universe = true;
  Carrier carrier = Carrier::Group;
  bool needs_hom = false;
  /// Probe of a statement known to be false as written; never fails a run.
  bool informational = false;
};

const std::vector<TheoremInfo>& theorem_catalog();
/// Throws UnknownTheorem.
const TheoremInfo& theorem_info(std::string_view id);

struct Outcome {
  Verdict verdict = Verdict::Holds;
  std::string witness;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::string instance_digest;
  Verdict verdict = Verdict::Holds;
  std::string witness;
  bool informational = false;
  std::int64_t micros = 0;
};

/// Runs one checker on one instance. Pure apart from `micros`. Throws
/// UnknownTheorem.
TheoremReport check_theorem(std::string_view id, const Instance& inst);

/// Checker entry point without an Instance wrapper; `hom` may be null.
Outcome evaluate(const TheoremInfo& t, const GroupPtr& g, const UniversePtr& u,
                 const Homomorphism* hom, std::span<const SoftSet> sets);

// ---------------------------------------------------------------------------
// Suite

struct SuiteConfig {
  std::vector<std::string> groups;
  std::vector<std::size_t> universe_sizes;
  enum class Mode { Exhaustive, Random } mode = Mode::Exhaustive;
  /// Random mode: instances per (theorem, group, |U|, hom).
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  /// Cap on pairs/triples per record in exhaustive mode; beyond it a seeded
  /// sample of this many combinations is drawn.
  std::uint64_t combination_budget = std::uint64_t{1} << 16;
  /// Restrict to these theorem ids; empty means all.
  std::vector<std::string> theorems;
  bool timings = false;

  static SuiteConfig desk();
};

struct SuiteRecord {
  std::string id;
  std::string group;
  std::size_t universe_size = 0;
  std::string hom;  // empty when not a homomorphism theorem
  std::string mode;  // exhaustive | sampled | random
  std::uint64_t cases = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t unmet = 0;
  bool informational = false;
  /// First violating instance, if any.
  std::optional<Instance> counterexample;
  std::string witness;
  std::int64_t micros = 0;

  Verdict verdict() const;
};

struct Probe {
  std::string id;
  std::string fixture;
  std::vector<std::pair<std::string, std::string>> values;
};

struct SuiteReport {
  std::vector<SuiteRecord> records;
  std::vector<Probe> probes;
  bool timings = false;

  /// 1 iff some non-informational record has a violated case.
  int exit_code() const;
  std::string text() const;
  std::string structured() const;
};

SuiteReport run_suite(const SuiteConfig& config);

/// Computed values for the informational probes on the fixtures.
std::vector<Probe> informational_probes();

/// Homomorphisms the suite uses for a catalog group: inclusions of every
/// subgroup, projections onto every quotient, plus mod:4:2 and sign:n where
/// they apply. Each entry is (spec, hom).
std::vector<std::pair<std::string, Homomorphism>> catalog_homomorphisms(
    const std::string& group_spec, const GroupPtr& g);

}  // namespace softint
