#pragma once

#include <string>
#include <vector>

#include "peq/cyclotomic.hpp"
#include "peq/rational.hpp"
#include "peq/weight.hpp"

namespace peq::lie {

enum class ModelKind { GL, SL, UPQ };

/// Matrix model of (H^C, m^C).
///
/// GL(r), SL(r): complex groups, m^C = gl(r) resp. sl(r) (equal to h^C).
/// UPQ(p, q): h^C = gl(p) + gl(q) block diagonal, m^C = the off-diagonal blocks.
class GroupModel {
 public:
  static GroupModel gl(int r);
  static GroupModel sl(int r);
  static GroupModel upq(int p, int q);

  ModelKind kind() const { return kind_; }
  int size() const { return p_ + q_; }
  int p() const { return p_; }
  int q() const { return q_; }
  /// Diagonal block sizes of h^C: {r} or {p, q}.
  std::vector<int> blocks() const;
  int block_of(int i) const { return kind_ == ModelKind::UPQ && i >= p_ ? 1 : 0; }

  bool in_h(int i, int j) const;
  bool in_m(int i, int j) const;

  std::string describe() const;

  friend bool operator==(const GroupModel&, const GroupModel&) = default;

 private:
  GroupModel(ModelKind k, int p, int q) : kind_(k), p_(p), q_(q) {}
  ModelKind kind_ = ModelKind::GL;
  int p_ = 1;
  int q_ = 0;
};

/// Integer matrix, used for basis elements of the subspaces below.
struct IntMatrix {
  int n = 0;
  std::vector<long> a;

  explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  long& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  long at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  friend IntMatrix bracket(const IntMatrix& x, const IntMatrix& y);
};

/// Subspace of gl(n) spanned by the matrix units in `cells`, intersected with
/// the traceless matrices when `traceless` is set.
struct SubspaceMask {
  int n = 0;
  std::vector<char> cells;
  bool traceless = false;

  static SubspaceMask empty(int size) {
    return SubspaceMask{size, std::vector<char>(static_cast<std::size_t>(size) * size, 0), false};
  }

  bool at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j] != 0; }
  void set(int i, int j, bool v = true) { cells[static_cast<std::size_t>(i) * n + j] = v; }

  int dim() const;
  std::vector<IntMatrix> basis() const;
  bool contains(const IntMatrix& x) const;

  friend SubspaceMask intersect(const SubspaceMask& a, const SubspaceMask& b);
  friend bool operator==(const SubspaceMask&, const SubspaceMask&) = default;
};

SubspaceMask h_mask(const GroupModel& model);
SubspaceMask m_mask(const GroupModel& model);

/// [a, b] is contained in c on every pair of basis elements.
bool bracket_contained(const SubspaceMask& a, const SubspaceMask& b, const SubspaceMask& c);

/// Diagonal torus weight in alcove form.
///
/// GL and UPQ: residues in [0, 1), descending within each block.
/// SL: the zero-sum representative, descending, signed entries in (-1, 1);
/// `shift` records how many entries were lowered by one from the [0,1) form.
struct WeightVector {
  GroupModel model = GroupModel::gl(1);
  std::vector<FractionalWeight> entries;
  int shift = 0;

  bool interior() const;
  /// Literal difference alpha_i - alpha_j, as a signed representative.
  FractionalWeight beta(int i, int j) const;
  /// lcm of the entry denominators.
  long denominator() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

bool is_alcove_form(const GroupModel& model, const std::vector<Rational>& entries);

/// Validates alcove form (throws NotAlcoveForm, RankMismatch).
WeightVector make_weight_vector(const GroupModel& model, const std::vector<Rational>& entries);

/// Unique alcove representative of a multiset of exponents. Throws RankMismatch,
/// and NotSpecialLinear when an SL exponent sum is not an integer.
WeightVector alcove_normalize(const GroupModel& model, const std::vector<Rational>& exponents);

struct EigenPiece {
  FractionalWeight beta;
  SubspaceMask mask;
  int dim = 0;
};

/// Decomposition of m^C under Ad(e^{2 pi i alpha}), sorted by beta. Each piece is
/// checked exactly: D E D^{-1} = e^{2 pi i beta} E for every basis element E.
std::vector<EigenPiece> isotropy_eigenspaces(const WeightVector& alpha);

struct ParabolicData {
  GroupModel model = GroupModel::gl(1);
  std::vector<Rational> s;
  SubspaceMask p, l, m_s, m_s0;
};

/// Masks from the criterion e^{t(s_i - s_j)} bounded as t -> infinity, i.e. s_i <= s_j.
/// Throws NotInIH when s has the wrong length or (SL) is not traceless.
ParabolicData parabolic_from_s(const GroupModel& model, const std::vector<Rational>& s);

/// Every structural identity of the parabolic data, evaluated on basis pairs.
struct ParabolicChecks {
  bool levi_is_intersection = false;  ///< l_s = p_s cap p_{-s}
  bool p_closed = false;              ///< [p_s, p_s] in p_s
  bool p_preserves_m = false;         ///< [p_s, m_s] in m_s
  bool l_preserves_m0 = false;        ///< [l_s, m_s^0] in m_s^0
  bool all() const { return levi_is_intersection && p_closed && p_preserves_m && l_preserves_m0; }
};
ParabolicChecks check_parabolic(const ParabolicData& data);

}  // namespace peq::lie
