#include "invar/orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

namespace {

// Calls fn(buffer) for every composition of d into n nonnegative parts, in
// lexicographically decreasing order of the buffer.
void for_each_composition(int d, int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> buffer(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == n - 1) {
      buffer[static_cast<std::size_t>(idx)] = remaining;
      fn(buffer);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      buffer[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  if (n >= 1) rec(0, d);
}

void check_monomial_count(int d, int n, std::size_t enum_cap, const char* where) {
  BigInt count;
  mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(d + n - 1),
               static_cast<unsigned long>(n - 1));
  if (count > static_cast<unsigned long>(enum_cap))
    throw EnumerationCapExceeded(std::string(where) + ": C(" + std::to_string(d + n - 1) + "," +
                                 std::to_string(n - 1) + ") degree-" + std::to_string(d) +
                                 " monomials exceed cap " + std::to_string(enum_cap));
}

std::vector<int> apply_raw(const Permutation& p, const std::vector<int>& a) {
  std::vector<int> b(a.size());
  for (int i = 1; i <= p.degree(); ++i)
    b[static_cast<std::size_t>(p.apply(i) - 1)] = a[static_cast<std::size_t>(i - 1)];
  return b;
}

bool is_orbit_representative(const PermGroup& g, const std::vector<int>& a) {
  for (const auto& p : g.elements())
    if (apply_raw(p, a) > a) return false;
  return true;
}

// Exact rational row reduction holding normalized pivot rows; rank grows as
// rows are fed in.
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns true when the row enlarged the span.
  bool insert(std::vector<BigRat> row) {
    for (const auto& [pivot_col, pivot_row] : rows_) {
      if (row[pivot_col] == 0) continue;
      const BigRat factor = row[pivot_col];
      for (std::size_t j = pivot_col; j < cols_; ++j) row[j] -= factor * pivot_row[j];
    }
    std::size_t lead = 0;
    while (lead < cols_ && row[lead] == 0) ++lead;
    if (lead == cols_) return false;
    const BigRat inv = row[lead];
    for (std::size_t j = lead; j < cols_; ++j) row[j] /= inv;
    rows_.emplace_back(lead, std::move(row));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<BigRat>>> rows_;
};

} // namespace

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_)
    if (x < 0) throw UsageError("monomial exponent must be nonnegative, got " + std::to_string(x));
}

int Monomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

int Monomial::height() const { return e_.empty() ? 0 : *std::max_element(e_.begin(), e_.end()); }

std::set<int> Monomial::exponent_set() const { return std::set<int>(e_.begin(), e_.end()); }

std::string Monomial::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (e_[i] > 1) os << '^' << e_[i];
  }
  return first ? "1" : os.str();
}

Monomial apply(const Permutation& p, const Monomial& a) {
  if (p.degree() != a.size())
    throw DimensionMismatch("permutation degree " + std::to_string(p.degree()) +
                            " vs monomial on " + std::to_string(a.size()) + " variables");
  return Monomial(apply_raw(p, a.exponents()));
}

MultiPoly MultiPoly::constant(int variables, const BigRat& c) {
  MultiPoly f(variables);
  f.add_term(std::vector<int>(static_cast<std::size_t>(variables), 0), c);
  return f;
}

MultiPoly MultiPoly::from_monomial(const Monomial& m, const BigRat& c) {
  MultiPoly f(m.size());
  f.add_term(m.exponents(), c);
  return f;
}

BigRat MultiPoly::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigRat(0) : it->second;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = Monomial(terms_.begin()->first).degree();
  for (const auto& [e, c] : terms_)
    if (Monomial(e).degree() != d) return false;
  return true;
}

int MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  return Monomial(terms_.begin()->first).degree();
}

void MultiPoly::add_term(const std::vector<int>& exponents, const BigRat& c) {
  if (static_cast<int>(exponents.size()) != n_)
    throw DimensionMismatch("term on " + std::to_string(exponents.size()) +
                            " variables in a polynomial on " + std::to_string(n_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (n_ != o.n_) throw DimensionMismatch("adding polynomials on different variable counts");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (n_ != o.n_) throw DimensionMismatch("subtracting polynomials on different variable counts");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, BigRat(-c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (n_ != o.n_) throw DimensionMismatch("multiplying polynomials on different variable counts");
  MultiPoly r(n_);
  std::vector<int> e(static_cast<std::size_t>(n_));
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const BigRat& a) const {
  MultiPoly r(n_);
  if (a == 0) return r;
  for (const auto& [e, c] : terms_) r.add_term(e, c * a);
  return r;
}

std::string MultiPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string mono = Monomial(e).to_text();
    if (c == 1 && mono != "1")
      os << mono;
    else if (mono == "1")
      os << c.get_str();
    else
      os << c.get_str() << '*' << mono;
  }
  return os.str();
}

MultiPoly apply(const Permutation& p, const MultiPoly& f) {
  if (p.degree() != f.variables())
    throw DimensionMismatch("permutation degree " + std::to_string(p.degree()) +
                            " vs polynomial on " + std::to_string(f.variables()) + " variables");
  MultiPoly r(f.variables());
  for (const auto& [e, c] : f.terms()) r.add_term(apply_raw(p, e), c);
  return r;
}

bool is_invariant(const MultiPoly& f, const PermGroup& g) {
  for (const auto& p : g.generators())
    if (apply(p, f) != f) return false;
  return true;
}

MonomialOrbit orbit(const PermGroup& g, const Monomial& a) {
  if (a.size() != g.degree())
    throw DimensionMismatch("monomial on " + std::to_string(a.size()) +
                            " variables under a group of degree " + std::to_string(g.degree()));
  std::set<std::vector<int>> members;
  for (const auto& p : g.elements()) members.insert(apply_raw(p, a.exponents()));
  MonomialOrbit o;
  o.representative = Monomial(*members.rbegin());
  o.members.reserve(members.size());
  for (const auto& m : members) o.members.push_back(Monomial(m));
  return o;
}

MultiPoly orbit_sum(const PermGroup& g, const Monomial& a) {
  MultiPoly f(g.degree());
  for (const auto& m : orbit(g, a).members) f.add_term(m.exponents(), BigRat(1));
  return f;
}

std::size_t orbit_count(const PermGroup& g, int d, std::size_t enum_cap) {
  if (d < 0) return 0;
  check_monomial_count(d, g.degree(), enum_cap, "orbit_count");
  std::size_t count = 0;
  for_each_composition(d, g.degree(), [&](const std::vector<int>& a) {
    if (is_orbit_representative(g, a)) ++count;
  });
  return count;
}

bool has_gap(const Monomial& a) {
  const auto values = a.exponent_set();
  const int ht = a.height();
  for (int r = 0; r < ht; ++r)
    if (!values.count(r)) return true;
  return false;
}

std::vector<MonomialOrbit> gobel_generators(const PermGroup& g, std::size_t enum_cap) {
  const int n = g.degree();
  std::set<std::vector<int>> seen;
  std::vector<MonomialOrbit> out;

  const int max_degree = n * (n - 1) / 2;
  for (int d = 1; d <= max_degree; ++d) {
    check_monomial_count(d, n, enum_cap, "gobel_generators");
    for_each_composition(d, n, [&](const std::vector<int>& a) {
      const Monomial m(a);
      if (has_gap(m)) return;
      MonomialOrbit o = orbit(g, m);
      if (seen.insert(o.representative.exponents()).second) out.push_back(std::move(o));
    });
  }

  MonomialOrbit all_ones = orbit(g, Monomial(std::vector<int>(static_cast<std::size_t>(n), 1)));
  if (seen.insert(all_ones.representative.exponents()).second) out.push_back(std::move(all_ones));

  std::sort(out.begin(), out.end(), [](const MonomialOrbit& a, const MonomialOrbit& b) {
    const int da = a.representative.degree(), db = b.representative.degree();
    return da != db ? da < db : a.representative < b.representative;
  });
  return out;
}

AnOrbitClass classify_an_orbit(const Monomial& a, int n) {
  if (a.size() != n || n < 2)
    throw DimensionMismatch("classify_an_orbit needs a monomial on n >= 2 variables");
  std::set<int> distinct(a.exponents().begin(), a.exponents().end());
  return static_cast<int>(distinct.size()) == n ? AnOrbitClass::Split : AnOrbitClass::Symmetric;
}

bool spans_degree(const std::vector<MultiPoly>& generators, const PermGroup& g, int d,
                  std::size_t enum_cap) {
  if (d < 0) throw UsageError("spans_degree needs d >= 0");
  const int n = g.degree();
  for (const auto& f : generators) {
    if (f.variables() != n)
      throw DimensionMismatch("generator on " + std::to_string(f.variables()) +
                              " variables under a group of degree " + std::to_string(n));
    if (!f.is_homogeneous()) throw NotHomogeneous("spans_degree needs homogeneous generators");
    if (!is_invariant(f, g)) throw NotInvariant("generator " + f.to_text() + " is not invariant");
  }

  // Basis of the degree-d invariant component: orbit sums, indexed by their
  // representatives. An invariant is determined by its coefficients there.
  check_monomial_count(d, n, enum_cap, "spans_degree");
  std::vector<std::vector<int>> reps;
  for_each_composition(d, n, [&](const std::vector<int>& a) {
    if (is_orbit_representative(g, a)) reps.push_back(a);
  });
  const std::size_t dim = reps.size();
  if (dim > kSpanDimensionCap)
    throw EnumerationCapExceeded("spans_degree: invariant dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(kSpanDimensionCap));
  if (dim == 0) return true;

  std::map<std::vector<int>, std::size_t> rep_index;
  for (std::size_t i = 0; i < reps.size(); ++i) rep_index.emplace(reps[i], i);

  // Positive-degree generators only; constants rescale products without
  // changing the span.
  std::vector<const MultiPoly*> gens;
  for (const auto& f : generators)
    if (f.homogeneous_degree() > 0) gens.push_back(&f);

  RowSpace space(dim);
  bool done = false;
  std::function<void(std::size_t, int, const MultiPoly&)> rec = [&](std::size_t idx, int remaining,
                                                                    const MultiPoly& product) {
    if (done) return;
    if (remaining == 0) {
      std::vector<BigRat> row(dim, BigRat(0));
      for (const auto& [e, c] : product.terms()) {
        auto it = rep_index.find(e);
        if (it != rep_index.end()) row[it->second] = c;
      }
      space.insert(std::move(row));
      if (space.rank() == dim) done = true;
      return;
    }
    if (idx == gens.size()) return;
    const int gd = gens[idx]->homogeneous_degree();
    MultiPoly power = product;
    for (int k = 0; k * gd <= remaining && !done; ++k) {
      if (k > 0) power = power * *gens[idx];
      rec(idx + 1, remaining - k * gd, power);
    }
  };
  rec(0, d, MultiPoly::constant(n, BigRat(1)));
  return space.rank() == dim;
}

} // namespace invar
