#include "invar/report.hpp"

#include <map>
#include <sstream>

namespace invar {

namespace {

Json coefficients_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

Json coefficients_json(const std::vector<BigRat>& coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

Json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json permutations_json(const std::vector<Permutation>& perms) {
  Json arr = Json::array();
  for (const auto& p : perms) arr.push_back(to_cycle_string(p));
  return arr;
}

Json cross_checks_json(const std::vector<CrossCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json entry{{"rule", c.rule}, {"applicable", c.applicable}};
    entry["agrees"] = c.applicable ? Json(c.agrees) : Json(nullptr);
    arr.push_back(std::move(entry));
  }
  return arr;
}

// "1/(1-l)^4", "2/(1-l^4)"
std::string raw_term_text(const RawTerm& term) {
  std::map<int, int> multiplicity;
  for (int d : term.degrees.degrees()) ++multiplicity[d];
  std::ostringstream os;
  os << term.multiplicity << '/';
  for (const auto& [d, m] : multiplicity) {
    os << "(1-l";
    if (d > 1) os << '^' << d;
    os << ')';
    if (m > 1) os << '^' << m;
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string gorenstein_summary(const GorensteinStatus& status) {
  std::ostringstream os;
  os << (status.status == GorensteinVerdict::Gorenstein ? "yes" : "no") << " [via "
     << to_string(status.via);
  for (const auto& c : status.cross_checks)
    os << "; " << c.rule << (c.applicable ? (c.agrees ? " agrees" : " DISAGREES") : " skipped");
  os << ']';
  return os.str();
}

} // namespace

Json analyze_json(const StructureReport& r, const GorensteinStatus& status) {
  Json j;
  j["n"] = r.n;
  j["order"] = r.group_order;
  j["has_odd_permutation"] = r.has_odd_permutation;
  j["odd_witness"] =
      r.odd_witness ? Json(to_cycle_string(*r.odd_witness)) : Json(nullptr);
  j["transpositions"] = permutations_json(r.transpositions);
  j["pseudoreflections"] = permutations_json(r.pseudoreflections);
  j["in_sl_char0"] = r.in_sl_char0;
  j["in_sl_char2"] = r.in_sl_char2;
  j["numerator"] = coefficients_json(r.numerator);
  j["denominator_degrees"] = r.denominator.degrees();
  j["palindromic"] = r.palindromic;
  j["stanley_offset"] = r.stanley_offset ? Json(*r.stanley_offset) : Json(nullptr);
  j["h_at_one"] = bigint_json(r.h_at_one);
  j["gorenstein_char0"] = {{"status", to_string(status.status)},
                           {"via", to_string(status.via)},
                           {"cross_checks", cross_checks_json(status.cross_checks)}};
  return j;
}

Json molien_json(const MolienResult& m) {
  Json terms = Json::array();
  for (const auto& t : m.raw_terms)
    terms.push_back({{"multiplicity", t.multiplicity}, {"cycle_type", t.degrees.degrees()}});
  Json j;
  j["order"] = m.group_order;
  j["raw_terms"] = std::move(terms);
  j["numerator"] = coefficients_json(m.canonical.numerator);
  j["denominator_degrees"] = m.canonical.denominator.degrees();
  j["h_at_one"] = bigint_json(m.h_at_one);
  return j;
}

Json hilbert_json(int n, std::size_t order, const std::vector<BigRat>& coefficients) {
  Json j;
  j["n"] = n;
  j["order"] = order;
  j["max_degree"] = coefficients.empty() ? 0 : coefficients.size() - 1;
  j["coefficients"] = coefficients_json(coefficients);
  return j;
}

Json gobel_json(int n, std::size_t order, const std::vector<MonomialOrbit>& generators) {
  Json arr = Json::array();
  for (const auto& o : generators)
    arr.push_back({{"degree", o.representative.degree()},
                   {"representative", o.representative.exponents()},
                   {"orbit_size", o.size()}});
  Json j;
  j["n"] = n;
  j["order"] = order;
  j["count"] = generators.size();
  j["generators"] = std::move(arr);
  return j;
}

Json orbit_dim_json(int n, std::size_t order, const std::vector<std::size_t>& dimensions) {
  Json arr = Json::array();
  for (std::size_t d = 0; d < dimensions.size(); ++d)
    arr.push_back({{"degree", d}, {"dimension", dimensions[d]}});
  Json j;
  j["n"] = n;
  j["order"] = order;
  j["dimensions"] = std::move(arr);
  return j;
}

Json certificate_json(const Certificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps)
    steps.push_back({{"rule", s.rule}, {"statement", s.statement}, {"evidence", s.evidence}});
  Json j;
  j["conclusion"] = to_string(cert.conclusion);
  j["steps"] = std::move(steps);
  if (cert.conclusion == Conclusion::Inconclusive) j["reason"] = cert.reason_if_inconclusive;
  return j;
}

Json gorenstein_json(const GorensteinStatus& status, const StructureReport& report) {
  Json j;
  j["characteristic"] = 0;
  j["status"] = to_string(status.status);
  j["via"] = to_string(status.via);
  j["cross_checks"] = cross_checks_json(status.cross_checks);
  j["numerator"] = coefficients_json(report.numerator);
  j["palindromic"] = report.palindromic;
  return j;
}

std::string analyze_text(const StructureReport& r, const GorensteinStatus& status) {
  std::ostringstream os;
  os << "group: degree " << r.n << ", order " << r.group_order << '\n';
  os << "odd permutation: "
     << (r.has_odd_permutation ? "yes (" + to_cycle_string(*r.odd_witness) + ")" : "no") << '\n';
  os << "transpositions: ";
  if (r.transpositions.empty())
    os << "none";
  else
    for (std::size_t i = 0; i < r.transpositions.size(); ++i)
      os << (i ? " " : "") << to_cycle_string(r.transpositions[i]);
  os << '\n';
  os << "pseudoreflections: " << r.pseudoreflections.size()
     << " (equal to the transpositions)" << '\n';
  os << "in SL(V) at char 0: " << yes_no(r.in_sl_char0) << '\n';
  os << "in SL(V) at char 2: " << yes_no(r.in_sl_char2) << '\n';
  os << "Hilbert numerator: " << to_string(r.numerator) << '\n';
  os << "denominator: " << to_string(r.denominator) << '\n';
  os << "palindromic: " << (r.palindromic ? "true" : "false");
  if (r.stanley_offset) os << " (offset " << *r.stanley_offset << ")";
  os << '\n';
  os << "h(1): " << r.h_at_one.get_str() << '\n';
  os << "Gorenstein at char 0: " << gorenstein_summary(status) << '\n';
  return os.str();
}

std::string molien_text(const MolienResult& m, int n) {
  std::ostringstream os;
  os << "group: degree " << n << ", order " << m.group_order << '\n';
  os << "Molien sum: (1/" << m.group_order << ") [ ";
  for (std::size_t i = 0; i < m.raw_terms.size(); ++i)
    os << (i ? " + " : "") << raw_term_text(m.raw_terms[i]);
  os << " ]\n";
  os << "canonical: (" << to_string(m.canonical.numerator) << ") / "
     << to_string(m.canonical.denominator) << '\n';
  os << "h(1): " << m.h_at_one.get_str() << '\n';
  return os.str();
}

std::string hilbert_text(int n, std::size_t order, const std::vector<BigRat>& coefficients) {
  std::ostringstream os;
  os << "group: degree " << n << ", order " << order << '\n';
  os << "dim of the invariant component by degree:\n";
  for (std::size_t d = 0; d < coefficients.size(); ++d)
    os << "  " << d << ": " << coefficients[d].get_str() << '\n';
  return os.str();
}

std::string gobel_text(int n, std::size_t order, const std::vector<MonomialOrbit>& generators) {
  std::ostringstream os;
  os << "group: degree " << n << ", order " << order << '\n';
  os << generators.size() << " generators (orbit sums of gap-free monomials plus x1*...*x" << n
     << "):\n";
  for (const auto& o : generators)
    os << "  deg " << o.representative.degree() << "  " << o.representative.to_text()
       << "  (orbit size " << o.size() << ")\n";
  return os.str();
}

std::string orbit_dim_text(int n, std::size_t order, const std::vector<std::size_t>& dimensions) {
  std::ostringstream os;
  os << "group: degree " << n << ", order " << order << '\n';
  os << "orbit counts (invariant dimensions) by degree:\n";
  for (std::size_t d = 0; d < dimensions.size(); ++d)
    os << "  " << d << ": " << dimensions[d] << '\n';
  return os.str();
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  os << "conclusion: "
     << (cert.conclusion == Conclusion::NotCohenMacaulayAtP2
             ? "not Cohen-Macaulay at p = 2"
             : "inconclusive")
     << '\n';
  if (cert.conclusion == Conclusion::Inconclusive)
    os << "reason: " << cert.reason_if_inconclusive << '\n';
  os << "steps:\n";
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    os << "  " << (i + 1) << ". [" << s.rule << "] " << s.statement << '\n';
    os << "     evidence: " << s.evidence.dump() << '\n';
  }
  return os.str();
}

std::string gorenstein_text(const GorensteinStatus& status, const StructureReport& report) {
  std::ostringstream os;
  os << "characteristic: 0\n";
  os << "Gorenstein: " << gorenstein_summary(status) << '\n';
  os << "numerator: " << to_string(report.numerator) << '\n';
  os << "palindromic: " << (report.palindromic ? "true" : "false") << '\n';
  return os.str();
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

} // namespace invar
