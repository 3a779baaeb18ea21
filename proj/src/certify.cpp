#include "invar/certify.hpp"

#include <algorithm>

#include "invar/errors.hpp"

namespace invar {

// Rule table
// ----------
//   hochster_eagon_cm      nonmodular invariant rings are Cohen-Macaulay
//   lemma_pseudoreflection_transposition
//                          in a permutation group, pseudoreflection <=>
//                          transposition; sign census decides SL membership
//   watanabe_sl            (|G|,p) = 1 and G in SL(V)  =>  Gorenstein
//   watanabe_converse      (|G|,p) = 1, no pseudoreflections, G not in
//                          SL(V)  =>  not Gorenstein
//   stanley_palindromic    a graded Cohen-Macaulay domain is Gorenstein iff
//                          its Hilbert numerator is palindromic
//   hilbert_char_independent
//                          permutation invariant rings have the same Hilbert
//                          series in every characteristic (orbit-sum basis)
//   braun_theorem_b        G in SL(V) without transvections: Cohen-Macaulay
//                          implies Gorenstein
//   braun_theorem_c        no pseudoreflection of any type and Gorenstein
//                          implies G in SL(V); never invoked here: at p = 2
//                          a permutation group has det == 1 throughout, so
//                          the conclusion is vacuous.

namespace {

nlohmann::ordered_json coefficients_json(const IntPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

// Transposition moving the smallest point pair, for witness text.
const Permutation& first_transposition(const std::vector<Permutation>& transpositions) {
  const Permutation* best = &transpositions.front();
  for (const auto& t : transpositions)
    if (disjoint_cycles(t) < disjoint_cycles(*best)) best = &t;
  return *best;
}

} // namespace

StructureReport analyze(const PermGroup& g) {
  StructureReport r;
  r.n = g.degree();
  r.group_order = g.order();

  std::vector<Permutation> by_rank;
  for (const auto& p : g.elements()) {
    if (sign(p) < 0 && !r.has_odd_permutation) {
      r.has_odd_permutation = true;
      r.odd_witness = p;
    }
    CycleType t = cycle_type(p);
    const bool single_swap =
        t.cycle_count() == r.n - 1 && t.lengths.back() == 2; // {1,...,1,2} ascending
    if (single_swap) r.transpositions.push_back(p);
    if (rank_id_minus(p) == 1) by_rank.push_back(p);
  }
  if (by_rank != r.transpositions)
    throw RuleContradiction("pseudoreflection detectors disagree (cycle type vs rank)");
  r.pseudoreflections = std::move(by_rank);
  r.in_sl_char0 = !r.has_odd_permutation;
  r.in_sl_char2 = true;

  const MolienResult m = molien_series(g);
  r.numerator = m.canonical.numerator;
  r.denominator = m.canonical.denominator;
  r.palindromic = is_palindromic(r.numerator);
  r.stanley_offset = palindromic_offset(r.numerator);
  r.h_at_one = m.h_at_one;
  return r;
}

GorensteinStatus gorenstein_status_char0(const StructureReport& report) {
  GorensteinStatus s;
  s.status = report.palindromic ? GorensteinVerdict::Gorenstein : GorensteinVerdict::NotGorenstein;
  s.via = GorensteinRule::StanleyPalindromic;

  CrossCheck sl{kRuleWatanabeSL, report.in_sl_char0, false};
  if (sl.applicable) sl.agrees = s.status == GorensteinVerdict::Gorenstein;
  CrossCheck converse{kRuleWatanabeConverse,
                      !report.in_sl_char0 && report.pseudoreflections.empty(), false};
  if (converse.applicable) converse.agrees = s.status == GorensteinVerdict::NotGorenstein;

  for (const auto& check : {sl, converse})
    if (check.applicable && !check.agrees)
      throw RuleContradiction("Stanley verdict contradicts applicable rule " + check.rule);
  s.cross_checks = {sl, converse};
  return s;
}

GorensteinStatus gorenstein_status_char0(const PermGroup& g) {
  return gorenstein_status_char0(analyze(g));
}

Certificate certify_non_cm_char2(const StructureReport& r) {
  Certificate cert;

  cert.steps.push_back(
      {kRuleHochsterEagonCM,
       "In characteristic 0 the invariant ring of a finite group is Cohen-Macaulay, and as a "
       "subring of a polynomial ring it is a domain.",
       {{"n", r.n}, {"order", r.group_order}}});

  nlohmann::ordered_json census_evidence{
      {"odd_permutation", r.odd_witness ? nlohmann::ordered_json(to_cycle_string(*r.odd_witness))
                                        : nlohmann::ordered_json(nullptr)},
      {"transposition_count", r.transpositions.size()},
      {"pseudoreflection_count", r.pseudoreflections.size()}};
  cert.steps.push_back(
      {kRuleLemmaPseudoreflectionTransposition,
       "In a permutation group the pseudoreflections are exactly the transpositions, and the "
       "determinant of an element is its sign; an odd permutation puts the group outside SL(V) "
       "in characteristic 0.",
       census_evidence});

  if (!r.has_odd_permutation) {
    cert.conclusion = Conclusion::Inconclusive;
    cert.reason_if_inconclusive = "contains no odd permutation";
    return cert;
  }
  if (!r.transpositions.empty()) {
    cert.conclusion = Conclusion::Inconclusive;
    cert.reason_if_inconclusive =
        "contains transposition " + to_cycle_string(first_transposition(r.transpositions));
    return cert;
  }

  cert.steps.push_back({kRuleWatanabeConverse,
                        "The group lies outside SL(V) in characteristic 0 and has no "
                        "pseudoreflection, so the invariant ring is not Gorenstein there.",
                        {{"in_sl_char0", r.in_sl_char0},
                         {"pseudoreflection_count", r.pseudoreflections.size()}}});

  // The theorem forces non-palindromicity here; a palindromic numerator
  // would mean a computation bug, not a property of the group.
  if (r.palindromic)
    throw RuleContradiction(
        "numerator is palindromic although the group is odd and transposition-free");
  cert.steps.push_back({kRuleStanleyPalindromic,
                        "A graded Cohen-Macaulay domain is Gorenstein exactly when its Hilbert "
                        "numerator is palindromic; not Gorenstein here forces a non-palindromic "
                        "numerator, which the computed numerator confirms.",
                        {{"numerator", coefficients_json(r.numerator)}, {"palindromic", false}}});

  cert.steps.push_back({kRuleHilbertCharIndependent,
                        "The invariant ring of a permutation representation has the same Hilbert "
                        "series in every characteristic, so the numerator carries over to p = 2.",
                        {{"numerator", coefficients_json(r.numerator)}}});

  cert.steps.push_back(
      {kRuleBraunTheoremB,
       "At p = 2 every sign equals 1, so the group lies in SL(V); a transvection would be a "
       "pseudoreflection, hence a transposition, and there is none. Were the ring "
       "Cohen-Macaulay at p = 2 it would be Gorenstein with a palindromic numerator, "
       "contradicting the computed numerator. The ring is not Cohen-Macaulay at p = 2.",
       {{"in_sl_char2", r.in_sl_char2},
        {"transvection_free", true},
        {"palindromic", r.palindromic}}});

  cert.conclusion = Conclusion::NotCohenMacaulayAtP2;
  return cert;
}

Certificate certify_non_cm_char2(const PermGroup& g) { return certify_non_cm_char2(analyze(g)); }

std::string to_string(Conclusion c) {
  return c == Conclusion::NotCohenMacaulayAtP2 ? "not_cm_at_p2" : "inconclusive";
}

std::string to_string(GorensteinVerdict v) {
  return v == GorensteinVerdict::Gorenstein ? "gorenstein" : "not_gorenstein";
}

std::string to_string(GorensteinRule r) {
  switch (r) {
    case GorensteinRule::StanleyPalindromic: return kRuleStanleyPalindromic;
    case GorensteinRule::WatanabeSL: return kRuleWatanabeSL;
    case GorensteinRule::WatanabeConverse: return kRuleWatanabeConverse;
  }
  return "";
}

} // namespace invar
