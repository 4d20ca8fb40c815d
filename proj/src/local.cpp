#include "peq/local.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "peq/error.hpp"

namespace peq::local {

namespace {

std::string key_str(const TermKey& t) {
  return "E" + std::to_string(t.i + 1) + std::to_string(t.j + 1) + " k=" + std::to_string(t.k);
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// N beta as an integer; throws NonIntegralGauge otherwise.
long scaled_beta(const FractionalWeight& beta, long n) {
  Rational x = Rational(n) * beta.value();
  if (!x.is_integer())
    throw Error(Errc::NonIntegralGauge, "N*beta = " + x.str() + " is not an integer");
  return x.num_long();
}

void require_gauge(const GradedSeries& s) {
  if (!s.alpha().interior())
    throw Error(Errc::WeightOnWall, "alpha is not in the interior of the alcove");
  for (const auto& e : s.alpha().entries)
    if (!(Rational(s.order()) * e.value()).is_integer())
      throw Error(Errc::NonIntegralGauge, "N*alpha is not integral");
}

/// Every beta occurring on a cell of the m^C mask.
std::vector<long> scaled_betas(const lie::WeightVector& alpha, long n) {
  const lie::SubspaceMask m = lie::m_mask(alpha.model);
  std::set<long> out;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j)) out.insert(scaled_beta(alpha.beta(i, j), n));
  return {out.begin(), out.end()};
}

}  // namespace

GradedSeries::GradedSeries(lie::WeightVector alpha, long n, Variable variable, long trunc,
                           std::map<TermKey, Cyclotomic> terms)
    : alpha_(std::move(alpha)), n_(n), variable_(variable), trunc_(trunc) {
  if (n_ < 1) throw Error(Errc::BadSeries, "N must be positive");
  const lie::SubspaceMask m = lie::m_mask(alpha_.model);
  const long lowest = variable_ == Variable::Upstairs_z ? 0 : -1;
  std::map<long, Cyclotomic> diag_trace;
  for (auto& [key, coeff] : terms) {
    if (key.i < 0 || key.j < 0 || key.i >= m.n || key.j >= m.n || !m.at(key.i, key.j))
      throw Error(Errc::BadSeries, key_str(key) + " is not in m^C");
    if (key.k < lowest)
      throw Error(Errc::BadSeries, key_str(key) + " has a forbidden exponent");
    if (key.k > trunc_)
      throw Error(Errc::BadSeries, key_str(key) + " lies beyond trunc " + std::to_string(trunc_));
    if (coeff.is_zero()) continue;
    if (key.i == key.j) diag_trace[key.k] += coeff;
    terms_.emplace(key, coeff);
  }
  if (m.traceless)
    for (const auto& [k, tr] : diag_trace)
      if (!tr.is_zero())
        throw Error(Errc::BadSeries, "diagonal is not traceless at k=" + std::to_string(k));
}

GradedSeries GradedSeries::truncated(long t) const {
  std::map<TermKey, Cyclotomic> kept;
  for (const auto& [key, c] : terms_)
    if (key.k <= t) kept.emplace(key, c);
  return GradedSeries(alpha_, n_, variable_, std::min(trunc_, t), std::move(kept));
}

GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
  if (!(a.alpha_ == b.alpha_) || a.n_ != b.n_ || a.variable_ != b.variable_)
    throw Error(Errc::BadSeries, "adding series over different local data");
  const long t = std::min(a.trunc_, b.trunc_);
  std::map<TermKey, Cyclotomic> sum;
  for (const auto* s : {&a, &b})
    for (const auto& [key, c] : s->terms_)
      if (key.k <= t) sum[key] += c;
  return GradedSeries(a.alpha_, a.n_, a.variable_, t, std::move(sum));
}

GradedSeries operator*(const Cyclotomic& s, const GradedSeries& a) {
  std::map<TermKey, Cyclotomic> out;
  for (const auto& [key, c] : a.terms_) out.emplace(key, s * c);
  return GradedSeries(a.alpha_, a.n_, a.variable_, a.trunc_, std::move(out));
}

std::map<FractionalWeight, GradedSeries> decompose_by_beta(const GradedSeries& series) {
  std::map<FractionalWeight, std::map<TermKey, Cyclotomic>> parts;
  for (const auto& [key, c] : series.terms()) parts[series.beta(key)].emplace(key, c);
  std::map<FractionalWeight, GradedSeries> out;
  for (auto& [b, terms] : parts)
    out.emplace(b, GradedSeries(series.alpha(), series.order(), series.variable(), series.trunc(),
                                std::move(terms)));
  return out;
}

bool index_criterion(const Rational& beta, long k, long n, const Rational& twist) {
  Rational nb = Rational(n) * beta;
  Rational nt = Rational(n) * twist;
  if (!nb.is_integer() || !nt.is_integer()) return false;
  long r = (k + 1 + nb.num_long() - nt.num_long()) % n;
  return r == 0;
}

bool substitution_criterion(const lie::WeightVector& alpha, int i, int j, long k, long n,
                            const Rational& twist, const Cyclotomic& coeff) {
  const Cyclotomic ad = root_of_unity(alpha.entries[i].value()) *
                        root_of_unity(alpha.entries[j].value()).inverse();
  const Cyclotomic zeta = Cyclotomic::zeta_power(n, 1);
  const Cyclotomic lhs = ad * zeta.pow(k) * zeta * coeff;
  const Cyclotomic rhs = root_of_unity(twist) * coeff;
  return lhs == rhs;
}

InvarianceVerdict check_invariance(const GradedSeries& series, const std::optional<Rational>& twist) {
  if (series.variable() != Variable::Upstairs_z)
    throw Error(Errc::BadSeries, "invariance is checked on z-series");
  const Rational tau = twist.value_or(Rational(0));
  if (!(Rational(series.order()) * tau).is_integer())
    throw Error(Errc::TwistDenominator, "N*twist = " + (Rational(series.order()) * tau).str() +
                                            " is not an integer");
  InvarianceVerdict v;
  for (const auto& [key, c] : series.terms()) {
    const FractionalWeight b = series.beta(key);
    const bool by_index = index_criterion(b.value(), key.k, series.order(), tau);
    const bool by_substitution =
        substitution_criterion(series.alpha(), key.i, key.j, key.k, series.order(), tau, c);
    if (by_index != by_substitution)
      throw std::logic_error("invariance criteria disagree at " + key_str(key));
    if (!by_index) v.violations.push_back(Violation{b, key});
  }
  std::sort(v.violations.begin(), v.violations.end());
  v.invariant = v.violations.empty();
  return v;
}

ResidueReport residue_report(const GradedSeries& series) {
  const auto n = static_cast<std::size_t>(series.model().size());
  ResidueReport r{CMatrix(n), std::nullopt, CMatrix(n), true};
  for (const auto& [key, c] : series.terms()) {
    if (key.k != -1) continue;
    r.residue(key.i, key.j) = c;
    if (series.beta(key).value().sign() >= 0) r.support_negative_beta = false;
  }

  CMatrix power = r.residue;
  for (std::size_t p = 1; p <= n; ++p) {
    if (power.is_zero()) {
      r.vanishing_power = static_cast<int>(p);
      break;
    }
    power = power * r.residue;
  }

  std::vector<Rational> s;
  for (const auto& e : series.alpha().entries) s.push_back(e.value());
  const lie::ParabolicData levi = lie::parabolic_from_s(series.model(), s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (levi.m_s0.at(static_cast<int>(i), static_cast<int>(j)))
        r.levi_projection(i, j) = r.residue(i, j);
  return r;
}

long descended_trunc(const lie::WeightVector& alpha, long n, long trunc) {
  long best = std::numeric_limits<long>::max();
  for (long nb : scaled_betas(alpha, n)) best = std::min(best, floor_div(trunc + 1 + nb, n) - 1);
  return best;
}

long ascended_trunc(const lie::WeightVector& alpha, long n, long trunc) {
  long best = std::numeric_limits<long>::max();
  for (long nb : scaled_betas(alpha, n)) best = std::min(best, n * (trunc + 2) - 2 - nb);
  return best;
}

Descent descend(const GradedSeries& series) {
  if (series.variable() != Variable::Upstairs_z)
    throw Error(Errc::BadSeries, "descend expects a z-series");
  require_gauge(series);
  const InvarianceVerdict v = check_invariance(series);
  if (!v.invariant)
    throw Error(Errc::NotInvariant, "term " + key_str(v.violations.front().term) +
                                        " violates the isotropy condition");
  const long n = series.order();
  const long t = descended_trunc(series.alpha(), n, series.trunc());
  const Rational inv_n = Rational(1, n);
  std::map<TermKey, Cyclotomic> out;
  for (const auto& [key, c] : series.terms()) {
    const long shifted = key.k + 1 + scaled_beta(series.beta(key), n);
    if (shifted % n != 0) throw std::logic_error("invariant term with non-integral w-exponent");
    const long kw = shifted / n - 1;
    if (kw < -1) throw std::logic_error("descended exponent below -1");
    if (kw > t) continue;
    out.emplace(TermKey{key.i, key.j, kw}, inv_n * c);
  }
  GradedSeries down(series.alpha(), n, Variable::Downstairs_w, t, std::move(out));
  ResidueReport report = residue_report(down);
  if (!report.in_descended_image())
    throw std::logic_error("descended residue violates the residue contract");
  return Descent{std::move(down), std::move(report)};
}

GradedSeries ascend(const GradedSeries& series) {
  if (series.variable() != Variable::Downstairs_w)
    throw Error(Errc::BadSeries, "ascend expects a w-series");
  require_gauge(series);
  const long n = series.order();
  for (const auto& [key, c] : series.terms())
    if (key.k == -1 && series.beta(key).value().sign() >= 0)
      throw Error(Errc::BadResidueSupport,
                  "pole coefficient at " + key_str(key) + " has beta " +
                      series.beta(key).value().str() + " >= 0");
  const long t = ascended_trunc(series.alpha(), n, series.trunc());
  std::map<TermKey, Cyclotomic> out;
  for (const auto& [key, c] : series.terms()) {
    const long kz = n * (key.k + 1) - 1 - scaled_beta(series.beta(key), n);
    if (kz < 0) throw std::logic_error("ascended exponent is negative");
    if (kz > t) continue;
    out.emplace(TermKey{key.i, key.j, kz}, Rational(n) * c);
  }
  GradedSeries up(series.alpha(), n, Variable::Upstairs_z, std::max<long>(t, -1), std::move(out));
  if (!check_invariance(up).invariant) throw std::logic_error("ascended series is not invariant");
  return up;
}

}  // namespace peq::local
