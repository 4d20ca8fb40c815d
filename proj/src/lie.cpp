#include "peq/lie.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "peq/error.hpp"

namespace peq::lie {

GroupModel GroupModel::gl(int r) {
  if (r < 1) throw Error(Errc::RankMismatch, "GL rank must be positive");
  return GroupModel(ModelKind::GL, r, 0);
}

GroupModel GroupModel::sl(int r) {
  if (r < 1) throw Error(Errc::RankMismatch, "SL rank must be positive");
  return GroupModel(ModelKind::SL, r, 0);
}

GroupModel GroupModel::upq(int p, int q) {
  if (p < 1 || q < 1) throw Error(Errc::RankMismatch, "U(p,q) needs p, q >= 1");
  return GroupModel(ModelKind::UPQ, p, q);
}

std::vector<int> GroupModel::blocks() const {
  if (kind_ == ModelKind::UPQ) return {p_, q_};
  return {p_};
}

bool GroupModel::in_h(int i, int j) const { return block_of(i) == block_of(j); }

bool GroupModel::in_m(int i, int j) const {
  if (kind_ == ModelKind::UPQ) return block_of(i) != block_of(j);
  return true;
}

std::string GroupModel::describe() const {
  switch (kind_) {
    case ModelKind::GL: return "GL(" + std::to_string(p_) + ")";
    case ModelKind::SL: return "SL(" + std::to_string(p_) + ")";
    case ModelKind::UPQ: return "U(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }
  return "?";
}

IntMatrix bracket(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      long xik = x.at(i, k);
      long yik = y.at(i, k);
      if (xik == 0 && yik == 0) continue;
      for (int j = 0; j < x.n; ++j) out.at(i, j) += xik * y.at(k, j) - yik * x.at(k, j);
    }
  return out;
}

namespace {

std::vector<int> masked_diagonal(const SubspaceMask& m) {
  std::vector<int> d;
  for (int i = 0; i < m.n; ++i)
    if (m.at(i, i)) d.push_back(i);
  return d;
}

}  // namespace

int SubspaceMask::dim() const {
  int count = static_cast<int>(std::count(cells.begin(), cells.end(), char{1}));
  if (traceless && !masked_diagonal(*this).empty()) --count;
  return count;
}

std::vector<IntMatrix> SubspaceMask::basis() const {
  std::vector<IntMatrix> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && at(i, j)) {
        IntMatrix e(n);
        e.at(i, j) = 1;
        out.push_back(std::move(e));
      }
  auto d = masked_diagonal(*this);
  if (traceless) {
    for (std::size_t t = 0; t + 1 < d.size(); ++t) {
      IntMatrix e(n);
      e.at(d[t], d[t]) = 1;
      e.at(d[t + 1], d[t + 1]) = -1;
      out.push_back(std::move(e));
    }
  } else {
    for (int i : d) {
      IntMatrix e(n);
      e.at(i, i) = 1;
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool SubspaceMask::contains(const IntMatrix& x) const {
  long tr = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (x.at(i, j) != 0 && !at(i, j)) return false;
      if (i == j) tr += x.at(i, i);
    }
  return !traceless || tr == 0;
}

SubspaceMask intersect(const SubspaceMask& a, const SubspaceMask& b) {
  SubspaceMask out = SubspaceMask::empty(a.n);
  for (std::size_t t = 0; t < a.cells.size(); ++t) out.cells[t] = a.cells[t] && b.cells[t];
  out.traceless = a.traceless || b.traceless;
  return out;
}

SubspaceMask h_mask(const GroupModel& model) {
  SubspaceMask m = SubspaceMask::empty(model.size());
  for (int i = 0; i < model.size(); ++i)
    for (int j = 0; j < model.size(); ++j) m.set(i, j, model.in_h(i, j));
  m.traceless = model.kind() == ModelKind::SL;
  return m;
}

SubspaceMask m_mask(const GroupModel& model) {
  SubspaceMask m = SubspaceMask::empty(model.size());
  for (int i = 0; i < model.size(); ++i)
    for (int j = 0; j < model.size(); ++j) m.set(i, j, model.in_m(i, j));
  m.traceless = model.kind() == ModelKind::SL;
  return m;
}

bool bracket_contained(const SubspaceMask& a, const SubspaceMask& b, const SubspaceMask& c) {
  auto ba = a.basis();
  auto bb = b.basis();
  for (const auto& x : ba)
    for (const auto& y : bb)
      if (!c.contains(bracket(x, y))) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool WeightVector::interior() const {
  const auto n = static_cast<int>(entries.size());
  if (model.kind() == ModelKind::SL) {
    for (int i = 0; i + 1 < n; ++i)
      if (!(entries[i].value() > entries[i + 1].value())) return false;
    return n == 0 || entries.front().value() - entries.back().value() < Rational(1);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (model.block_of(i) == model.block_of(i + 1) &&
        !(entries[i].value() > entries[i + 1].value()))
      return false;
  return true;
}

FractionalWeight WeightVector::beta(int i, int j) const {
  return normalize_weight(entries[i].value() - entries[j].value(),
                          WeightConvention::SignedRepresentative);
}

long WeightVector::denominator() const {
  long d = 1;
  for (const auto& e : entries) d = lcm_long(d, e.value().den_long());
  return d;
}

namespace {

void check_rank(const GroupModel& model, std::size_t n) {
  if (static_cast<int>(n) != model.size())
    throw Error(Errc::RankMismatch, "expected " + std::to_string(model.size()) + " entries for " +
                                        model.describe() + ", got " + std::to_string(n));
}

bool descending_in_blocks(const GroupModel& model, const std::vector<Rational>& e) {
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (model.block_of(static_cast<int>(i)) == model.block_of(static_cast<int>(i + 1)) &&
        e[i] < e[i + 1])
      return false;
  return true;
}

}  // namespace

bool is_alcove_form(const GroupModel& model, const std::vector<Rational>& entries) {
  if (static_cast<int>(entries.size()) != model.size()) return false;
  if (!descending_in_blocks(model, entries)) return false;
  if (model.kind() == ModelKind::SL) {
    Rational sum(0);
    for (const auto& x : entries) {
      if (!(x > Rational(-1) && x < Rational(1))) return false;
      sum += x;
    }
    if (!sum.is_zero()) return false;
    return entries.front() - entries.back() <= Rational(1);
  }
  for (const auto& x : entries)
    if (x < Rational(0) || x >= Rational(1)) return false;
  return true;
}

WeightVector make_weight_vector(const GroupModel& model, const std::vector<Rational>& entries) {
  check_rank(model, entries.size());
  if (!is_alcove_form(model, entries))
    throw Error(Errc::NotAlcoveForm, "weight is not in alcove form for " + model.describe());
  WeightVector w;
  w.model = model;
  auto conv = model.kind() == ModelKind::SL ? WeightConvention::SignedRepresentative
                                            : WeightConvention::ResidueInZeroOne;
  for (const auto& x : entries) w.entries.push_back(normalize_weight(x, conv));
  if (model.kind() == ModelKind::SL)
    for (const auto& x : entries)
      if (x.sign() < 0) ++w.shift;
  return w;
}

WeightVector alcove_normalize(const GroupModel& model, const std::vector<Rational>& exponents) {
  check_rank(model, exponents.size());
  std::vector<Rational> r;
  r.reserve(exponents.size());
  for (const auto& x : exponents)
    r.push_back(normalize_weight(x, WeightConvention::ResidueInZeroOne).value());

  int shift = 0;
  if (model.kind() == ModelKind::SL) {
    Rational sum(0);
    for (const auto& x : exponents) sum += x;
    if (!sum.is_integer())
      throw Error(Errc::NotSpecialLinear, "exponent sum " + sum.str() + " is not an integer");
    Rational rsum(0);
    for (const auto& x : r) rsum += x;
    std::sort(r.begin(), r.end(), std::greater<>());
    shift = static_cast<int>(rsum.floor());
    for (int i = 0; i < shift; ++i) r[i] -= Rational(1);
    std::sort(r.begin(), r.end(), std::greater<>());
  } else {
    std::size_t start = 0;
    for (int b : model.blocks()) {
      std::sort(r.begin() + static_cast<long>(start), r.begin() + static_cast<long>(start + b),
                std::greater<>());
      start += static_cast<std::size_t>(b);
    }
  }
  WeightVector w = make_weight_vector(model, r);
  w.shift = shift;
  return w;
}

std::vector<EigenPiece> isotropy_eigenspaces(const WeightVector& alpha) {
  const int n = alpha.model.size();
  const SubspaceMask ambient = m_mask(alpha.model);
  std::map<FractionalWeight, SubspaceMask> pieces;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!ambient.at(i, j)) continue;
      FractionalWeight b = alpha.beta(i, j);
      auto it = pieces.find(b);
      if (it == pieces.end()) {
        SubspaceMask m = SubspaceMask::empty(n);
        m.traceless = ambient.traceless;
        it = pieces.emplace(b, m).first;
      }
      it->second.set(i, j);
    }

  const long order = alpha.denominator();
  std::vector<Cyclotomic> d;
  for (const auto& e : alpha.entries) d.push_back(root_of_unity(e, order));

  std::vector<EigenPiece> out;
  for (auto& [b, mask] : pieces) {
    const Cyclotomic scale = root_of_unity(b, order);
    for (const auto& e : mask.basis())
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (e.at(i, j) == 0) continue;
          if (!(d[i] * d[j].inverse() == scale))
            throw std::logic_error("eigenspace verification failed");
        }
    int dim = mask.dim();
    if (dim == 0) continue;
    out.push_back(EigenPiece{b, mask, dim});
  }
  return out;
}

ParabolicData parabolic_from_s(const GroupModel& model, const std::vector<Rational>& s) {
  if (static_cast<int>(s.size()) != model.size())
    throw Error(Errc::NotInIH, "s must have " + std::to_string(model.size()) + " diagonal entries");
  if (model.kind() == ModelKind::SL) {
    Rational sum(0);
    for (const auto& x : s) sum += x;
    if (!sum.is_zero()) throw Error(Errc::NotInIH, "s is not traceless");
  }
  const int n = model.size();
  SubspaceMask le = SubspaceMask::empty(n);
  SubspaceMask eq = SubspaceMask::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      le.set(i, j, s[i] <= s[j]);
      eq.set(i, j, s[i] == s[j]);
    }
  const SubspaceMask h = h_mask(model);
  const SubspaceMask m = m_mask(model);
  return ParabolicData{model, s, intersect(h, le), intersect(h, eq), intersect(m, le),
                       intersect(m, eq)};
}

ParabolicChecks check_parabolic(const ParabolicData& data) {
  std::vector<Rational> neg;
  for (const auto& x : data.s) neg.push_back(-x);
  ParabolicData opposite = parabolic_from_s(data.model, neg);
  ParabolicChecks c;
  c.levi_is_intersection = intersect(data.p, opposite.p) == data.l;
  c.p_closed = bracket_contained(data.p, data.p, data.p);
  c.p_preserves_m = bracket_contained(data.p, data.m_s, data.m_s);
  c.l_preserves_m0 = bracket_contained(data.l, data.m_s0, data.m_s0);
  return c;
}

}  // namespace peq::lie
