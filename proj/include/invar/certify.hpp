#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invar/molien.hpp"
#include "invar/perm_group.hpp"
#include "invar/poly.hpp"

namespace invar {

/// Group-theoretic facts feeding the rule engine, together with the
/// canonical Hilbert numerator.
struct StructureReport {
  int n = 0;
  std::size_t group_order = 0;
  bool has_odd_permutation = false;
  std::optional<Permutation> odd_witness;         // first odd element in element order
  std::vector<Permutation> transpositions;        // in element order
  std::vector<Permutation> pseudoreflections;     // equals transpositions
  bool in_sl_char0 = false;                       // all signs +1
  bool in_sl_char2 = true;                        // always, since 1 == -1 at p = 2
  IntPoly numerator;
  DenomDegrees denominator;                       // {1..n}
  bool palindromic = false;
  std::optional<long> stanley_offset;             // recorded, carries no further meaning
  BigInt h_at_one;
};

enum class Conclusion { NotCohenMacaulayAtP2, Inconclusive };

struct CertificateStep {
  std::string rule; // one name from the rule table
  std::string statement;
  nlohmann::ordered_json evidence;
};

struct Certificate {
  Conclusion conclusion = Conclusion::Inconclusive;
  std::vector<CertificateStep> steps;
  std::string reason_if_inconclusive; // empty on NotCohenMacaulayAtP2
};

enum class GorensteinVerdict { Gorenstein, NotGorenstein };
enum class GorensteinRule { StanleyPalindromic, WatanabeSL, WatanabeConverse };

struct CrossCheck {
  std::string rule;
  bool applicable = false;
  bool agrees = false; // meaningful only when applicable
};

struct GorensteinStatus {
  GorensteinVerdict status = GorensteinVerdict::Gorenstein;
  GorensteinRule via = GorensteinRule::StanleyPalindromic;
  std::vector<CrossCheck> cross_checks;
};

// Fixed rule names (also the JSON identifiers).
inline constexpr const char* kRuleHochsterEagonCM = "hochster_eagon_cm";
inline constexpr const char* kRuleLemmaPseudoreflectionTransposition =
    "lemma_pseudoreflection_transposition";
inline constexpr const char* kRuleWatanabeConverse = "watanabe_converse";
inline constexpr const char* kRuleWatanabeSL = "watanabe_sl";
inline constexpr const char* kRuleStanleyPalindromic = "stanley_palindromic";
inline constexpr const char* kRuleHilbertCharIndependent = "hilbert_char_independent";
inline constexpr const char* kRuleBraunTheoremB = "braun_theorem_b";

/// Full census of the group: sign/parity facts, the pseudoreflection list
/// computed by two detectors that must agree, SL membership per
/// characteristic, and the canonical Molien numerator.
StructureReport analyze(const PermGroup& g);

/// Characteristic-0 Gorenstein status: Stanley's palindromicity criterion
/// decides (the invariant ring is a Cohen-Macaulay domain there), and each
/// applicable Watanabe direction is cross-checked against the verdict.
/// Disagreement of an applicable cross-check throws RuleContradiction.
GorensteinStatus gorenstein_status_char0(const StructureReport& report);
GorensteinStatus gorenstein_status_char0(const PermGroup& g);

/// Certifies non-Cohen-Macaulayness at p = 2 when the group contains an odd
/// permutation and no transposition; otherwise Inconclusive naming the first
/// failed hypothesis. A palindromic numerator despite satisfied hypotheses
/// throws RuleContradiction.
Certificate certify_non_cm_char2(const PermGroup& g);
Certificate certify_non_cm_char2(const StructureReport& report);

std::string to_string(Conclusion c);
std::string to_string(GorensteinVerdict v);
std::string to_string(GorensteinRule r);

} // namespace invar
