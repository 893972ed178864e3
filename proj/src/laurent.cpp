#include "fbc/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace fbc {

AbelianGroup AbelianGroup::with_deck(int rank) {
  AbelianGroup g;
  g.rank = rank;
  if (rank <= 0) throw ValidationError("BadRank", "abelian group rank must be positive");
  if (rank == 2) {
    g.names = {"a", "z"};
  } else {
    for (int i = 1; i < rank; ++i) g.names.push_back("a" + std::to_string(i));
    g.names.push_back("z");
  }
  return g;
}

int64_t CohomClass::operator()(const ExpVec& e) const {
  assert(e.size() == functional.size());
  int64_t s = 0;
  for (size_t i = 0; i < e.size(); ++i) s += functional[i] * e[i];
  return s;
}

bool CohomClass::is_primitive() const {
  int64_t g = 0;
  for (int64_t v : functional) g = std::gcd(g, v < 0 ? -v : v);
  return g == 1;
}

LaurentPoly LaurentPoly::constant(int rank, Integer c) {
  LaurentPoly p(rank);
  if (!c.is_zero()) p.terms_.emplace(ExpVec(rank, 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(ExpVec e, Integer c) {
  LaurentPoly p(static_cast<int>(e.size()));
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::deck(int rank) {
  ExpVec e(rank, 0);
  e[rank - 1] = 1;
  return monomial(std::move(e), 1);
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 &&
         (terms_.begin()->second.is_one() || (-terms_.begin()->second).is_one());
}

Integer LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer() : it->second;
}

void LaurentPoly::set_coeff(const ExpVec& e, Integer c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

void LaurentPoly::add_term(const ExpVec& e, const Integer& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<ExpVec> LaurentPoly::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

void LaurentPoly::promote(int rank) {
  if (rank_ == rank) return;
  if (rank_ > rank) throw std::logic_error("LaurentPoly: cannot demote rank");
  for (const auto& [e, c] : terms_) {
    for (int64_t v : e) {
      if (v != 0) throw std::logic_error("LaurentPoly: rank mismatch on non-constant");
    }
  }
  std::map<ExpVec, Integer> out;
  for (auto& [e, c] : terms_) out.emplace(ExpVec(rank, 0), c);
  terms_ = std::move(out);
  rank_ = rank;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(rank_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.rank_ != rank_) {
    if (rank_ < o.rank_) promote(o.rank_);
    else {
      LaurentPoly t = o;
      t.promote(rank_);
      return *this += t;
    }
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank_ != b.rank_) {
    LaurentPoly aa = a, bb = b;
    int r = std::max(a.rank_, b.rank_);
    aa.promote(r);
    bb.promote(r);
    return aa * bb;
  }
  LaurentPoly p(a.rank_);
  ExpVec e(a.rank_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.rank_; ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& s) const {
  LaurentPoly p(rank_);
  ExpVec e(rank_, 0);
  for (const auto& [ea, c] : terms_) {
    for (int i = 0; i < rank_; ++i) e[i] = ea[i] + s[i];
    p.terms_.emplace(e, c);
  }
  return p;
}

std::pair<ExpVec, Integer> LaurentPoly::min_term() const {
  if (terms_.empty()) throw ValidationError("ZeroPolynomial", "min_term of zero polynomial");
  return *terms_.begin();
}

std::pair<ExpVec, Integer> LaurentPoly::max_term() const {
  if (terms_.empty()) throw ValidationError("ZeroPolynomial", "max_term of zero polynomial");
  return *terms_.rbegin();
}

std::optional<int64_t> LaurentPoly::z_degree() const {
  if (terms_.empty()) return std::nullopt;
  int64_t d = terms_.begin()->first[rank_ - 1];
  for (const auto& [e, c] : terms_) d = std::max(d, e[rank_ - 1]);
  return d;
}

// --- division ---------------------------------------------------------------

std::optional<LaurentPoly> div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ValidationError("ZeroPolynomial", "division by zero polynomial");
  int rank = std::max(a.rank(), b.rank());
  LaurentPoly p = a, q = b;
  p += LaurentPoly::zero(rank);
  q += LaurentPoly::zero(rank);
  LaurentPoly h(rank);
  if (p.is_zero()) return h;

  // Every exponent of an exact quotient lies in the componentwise box
  // [min(a)-min(b), max(a)-max(b)]; leaving it proves inexactness.
  ExpVec lo(rank), hi(rank);
  {
    ExpVec amin(rank, 0), amax(rank, 0), bmin(rank, 0), bmax(rank, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      for (int i = 0; i < rank; ++i) {
        amin[i] = first ? e[i] : std::min(amin[i], e[i]);
        amax[i] = first ? e[i] : std::max(amax[i], e[i]);
      }
      first = false;
    }
    first = true;
    for (const auto& [e, c] : q.terms()) {
      for (int i = 0; i < rank; ++i) {
        bmin[i] = first ? e[i] : std::min(bmin[i], e[i]);
        bmax[i] = first ? e[i] : std::max(bmax[i], e[i]);
      }
      first = false;
    }
    for (int i = 0; i < rank; ++i) {
      lo[i] = amin[i] - bmin[i];
      hi[i] = amax[i] - bmax[i];
    }
  }

  const auto [qe, qc] = q.max_term();
  ExpVec e(rank, 0);
  while (!p.is_zero()) {
    const auto [pe, pc] = p.max_term();
    Integer c;
    if (!Integer::div_exact(pc, qc, c)) return std::nullopt;
    for (int i = 0; i < rank; ++i) {
      e[i] = pe[i] - qe[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    LaurentPoly t = LaurentPoly::monomial(e, c);
    h += t;
    p -= t * q;
  }
  return h;
}

LaurentPoly monic_div_in_z(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ValidationError("ZeroPolynomial", "monic_div_in_z by zero");
  int rank = std::max(num.rank(), den.rank());
  LaurentPoly p = num, q = den;
  p += LaurentPoly::zero(rank);
  q += LaurentPoly::zero(rank);

  const int zi = rank - 1;
  const int64_t dz = *q.z_degree();
  // Leading z-coefficient of the divisor, which must be a unit of Z[K].
  LaurentPoly lead(rank);
  for (const auto& [e, c] : q.terms()) {
    if (e[zi] == dz) lead.add_term(e, c);
  }
  if (!lead.is_unit())
    throw ValidationError("NotMonic", "divisor is not monic in z up to a unit");
  const auto [le, lc] = lead.min_term();

  LaurentPoly h(rank);
  while (!p.is_zero()) {
    int64_t pz = *p.z_degree();
    if (pz < dz) break;
    // Highest z-slice term of p with lex-max exponent, divided by the unit lead.
    ExpVec best;
    Integer bc;
    for (const auto& [e, c] : p.terms()) {
      if (e[zi] == pz && (best.empty() || e > best)) {
        best = e;
        bc = c;
      }
    }
    ExpVec e(rank);
    for (int i = 0; i < rank; ++i) e[i] = best[i] - le[i];
    Integer c = lc.is_one() ? bc : -bc;
    LaurentPoly t = LaurentPoly::monomial(e, c);
    h += t;
    p -= t * q;
  }
  if (!p.is_zero())
    throw TheoryError("NonexactDivision", "monic_div_in_z: nonzero remainder");
  return h;
}

LaurentPoly unit_normal_form(const LaurentPoly& p) {
  if (p.is_zero()) throw ValidationError("ZeroPolynomial", "unit_normal_form of zero");
  auto [e, c] = p.min_term();
  ExpVec neg(e.size());
  for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
  LaurentPoly r = p.shifted(neg);
  if (c.sgn() < 0) r = -r;
  return r;
}

LaurentPoly display_form(const LaurentPoly& p) {
  if (p.is_zero()) throw ValidationError("ZeroPolynomial", "display_form of zero");
  // Translate so the componentwise minimal exponent is zero, then make the
  // lexicographically maximal term positive.
  ExpVec shift(p.rank(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.rank(); ++i)
      shift[i] = first ? -e[i] : std::max(shift[i], -e[i]);
    first = false;
  }
  LaurentPoly r = p.shifted(shift);
  // Sign chosen so the leading z-term (ties broken lexicographically) is
  // positive.
  const int zi = r.rank() - 1;
  const std::pair<const ExpVec, Integer>* lead = nullptr;
  for (const auto& term : r.terms()) {
    if (!lead || term.first[zi] > lead->first[zi] ||
        (term.first[zi] == lead->first[zi] && term.first > lead->first))
      lead = &term;
  }
  if (lead->second.sgn() < 0) r = -r;
  return r;
}

LaurentPoly apply_involution(const LaurentPoly& p, const CohomClass& eps) {
  LaurentPoly r(p.rank());
  for (const auto& [e, c] : p.terms()) r.set_coeff(e, (eps(e) & 1) ? -c : c);
  return r;
}

LaurentPoly apply_inv(const LaurentPoly& p) {
  LaurentPoly r(p.rank());
  ExpVec neg(p.rank());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.rank(); ++i) neg[i] = -e[i];
    r.set_coeff(neg, c);
  }
  return r;
}

Laurent1 specialize(const LaurentPoly& p, const CohomClass& u) {
  Laurent1 r(1);
  for (const auto& [e, c] : p.terms()) r.add_term(ExpVec{u(e)}, c);
  return r;
}

bool mod2_equivalent(const LaurentPoly& p, const LaurentPoly& q) {
  auto reduce = [](const LaurentPoly& x) {
    LaurentPoly r(x.rank());
    for (const auto& [e, c] : x.terms()) {
      if (c.odd()) r.set_coeff(e, 1);
    }
    return r;
  };
  LaurentPoly a = reduce(p), b = reduce(q);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return unit_normal_form(a) == unit_normal_form(b);
}

// --- determinants -----------------------------------------------------------

PolyMat poly_mat_zero(int n, int m, int rank) {
  PolyMat out(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out(i, j) = LaurentPoly::zero(rank);
  return out;
}

static LaurentPoly det_cofactor(const PolyMat& m) {
  const int n = static_cast<int>(m.rows());
  int rank = m(0, 0).rank();
  if (n == 1) return m(0, 0);
  LaurentPoly det(rank);
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    PolyMat minor_(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor_(i - 1, cc++) = m(i, c);
      }
    }
    LaurentPoly t = m(0, j) * det_cofactor(minor_);
    if (j & 1)
      det -= t;
    else
      det += t;
  }
  return det;
}

LaurentPoly laurent_det(const PolyMat& m) {
  if (m.rows() != m.cols()) throw std::logic_error("laurent_det: square matrix required");
  const int n = static_cast<int>(m.rows());
  if (n == 0) return LaurentPoly::constant(1, 1);
  int rank = m(0, 0).rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rank = std::max(rank, m(i, j).rank());
  if (n <= 4) {
    PolyMat w = m;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) += LaurentPoly::zero(rank);
    return det_cofactor(w);
  }

  PolyMat w = m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) += LaurentPoly::zero(rank);
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(rank, 1);
  for (int k = 0; k + 1 < n; ++k) {
    // Pivot with the fewest monomials to bound intermediate blow-up.
    int pick = -1;
    for (int i = k; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      if (pick < 0 || w(i, k).term_count() < w(pick, k).term_count()) pick = i;
    }
    if (pick < 0) return LaurentPoly::zero(rank);
    if (pick != k) {
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(pick, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly t = w(k, k) * w(i, j) - w(i, k) * w(k, j);
        auto q = div_exact(t, prev);
        if (!q) throw TheoryError("NonexactDivision", "Bareiss division failed");
        w(i, j) = std::move(*q);
      }
      w(i, k) = LaurentPoly::zero(rank);
    }
    prev = w(k, k);
  }
  LaurentPoly det = w(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

LaurentPoly det_z_minus(const PolyMat& m) {
  const int n = static_cast<int>(m.rows());
  int rank = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rank = std::max(rank, m(i, j).rank());
  PolyMat w = poly_mat_zero(n, n, rank);
  LaurentPoly z = LaurentPoly::deck(rank);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w(i, j) = -m(i, j);
      w(i, j) += LaurentPoly::zero(rank);
    }
    w(i, i) += z;
  }
  return laurent_det(w);
}

// --- single-variable helpers -------------------------------------------------

Laurent1 laurent1_from_coeffs(const std::vector<Integer>& ascending, int64_t min_exp) {
  Laurent1 p(1);
  for (size_t i = 0; i < ascending.size(); ++i)
    p.add_term(ExpVec{min_exp + static_cast<int64_t>(i)}, ascending[i]);
  return p;
}

std::vector<Integer> laurent1_coeffs(const Laurent1& p, int64_t& min_exp) {
  if (p.is_zero()) {
    min_exp = 0;
    return {};
  }
  min_exp = p.min_term().first[0];
  int64_t max_exp = p.max_term().first[0];
  std::vector<Integer> out(static_cast<size_t>(max_exp - min_exp + 1), Integer());
  for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e[0] - min_exp)] = c;
  return out;
}

Laurent1 laurent1_negate_var(const Laurent1& p) {
  Laurent1 r(1);
  for (const auto& [e, c] : p.terms()) r.set_coeff(e, (e[0] & 1) ? -c : c);
  return r;
}

// --- rendering ---------------------------------------------------------------

static std::string render_var_power(const std::string& name, int64_t k) {
  if (k == 1) return name;
  return name + "^" + std::to_string(k);
}

std::string render_exp(const ExpVec& e, const AbelianGroup& group) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) out += render_var_power(group.names[i], e[i]);
  }
  return out;
}

// One term without a leading sign, e.g. "7a^2z" or "1".
static std::string render_term_abs(const ExpVec& e, const Integer& c, const AbelianGroup& group) {
  std::string vars = render_exp(e, group);
  Integer a = c.abs();
  if (vars.empty()) return a.to_string();
  if (a.is_one()) return vars;
  return a.to_string() + vars;
}

std::string render_poly(const LaurentPoly& p, const AbelianGroup& group) {
  if (p.is_zero()) return "0";
  const int zi = p.rank() - 1;
  // Group terms by z-exponent, descending.
  std::map<int64_t, std::vector<std::pair<ExpVec, Integer>>, std::greater<>> groups;
  for (const auto& [e, c] : p.terms()) groups[e[zi]].push_back({e, c});

  std::string out;
  for (auto& [zk, terms] : groups) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    bool composite = terms.size() > 1 && zk != 0;
    std::string chunk;
    if (composite) {
      // K-part in parentheses, z-power outside.
      std::string inner;
      for (auto& [e, c] : terms) {
        ExpVec ke = e;
        ke[zi] = 0;
        std::string t = render_term_abs(ke, c, group);
        if (inner.empty()) {
          inner = (c.sgn() < 0 ? "-" : "") + t;
        } else {
          inner += (c.sgn() < 0 ? "-" : "+") + t;
        }
      }
      chunk = "(" + inner + ")" + render_var_power(group.names[zi], zk);
      out += out.empty() ? chunk : "+" + chunk;
    } else {
      for (auto& [e, c] : terms) {
        std::string t = render_term_abs(e, c, group);
        if (out.empty()) {
          out += (c.sgn() < 0 ? "-" : "") + t;
        } else {
          out += (c.sgn() < 0 ? "-" : "+") + t;
        }
      }
    }
  }
  return out;
}

}  // namespace fbc
