#include "peq/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "peq/error.hpp"

namespace peq {

ScaleBounds ScaleBounds::from_env() {
  ScaleBounds b;
  if (const char* env = std::getenv("PEQ_SCALE_BOUND")) {
    try {
      b.max_search = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("PEQ_SCALE_BOUND must be a positive integer");
    }
  }
  return b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace peq

namespace peq::cohomology {

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

int mod(long a, int m) { return static_cast<int>(((a % m) + m) % m); }

void check_search_scale(const FiniteAbelianGroup& g, int m, const ScaleBounds& bounds,
                        const char* what) {
  const std::uint64_t space =
      saturating_pow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(g.order() - 1));
  if (g.order() > bounds.max_group_order || space > bounds.max_search) {
    throw Error(Errc::ScaleExceeded, std::string(what) + ": search space " +
                                         std::to_string(m) + "^" + std::to_string(g.order() - 1) +
                                         " exceeds bound " + std::to_string(bounds.max_search));
  }
}

void check_h2_scale(const FiniteAbelianGroup& g, int m, const ScaleBounds& bounds) {
  if (g.order() > bounds.max_h2_group_order || m > bounds.max_coeff_order) {
    throw Error(Errc::ScaleExceeded, "cocycle enumeration limited to |Gamma| <= " +
                                         std::to_string(bounds.max_h2_group_order) + ", m <= " +
                                         std::to_string(bounds.max_coeff_order));
  }
  check_search_scale(g, m, bounds, "cocycle enumeration");
}

// Calls visit(f) for every normalized f: Gamma -> Z/m in lexicographic order;
// stops early when visit returns false.
void for_each_normalized_function(int order, int m,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> f(static_cast<std::size_t>(order), 0);
  while (true) {
    if (!visit(f)) return;
    int i = order - 1;
    while (i >= 1 && f[static_cast<std::size_t>(i)] == m - 1) {
      f[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 1) return;
    ++f[static_cast<std::size_t>(i)];
  }
}

// Linear constraint sum coeff_i * x_i = 0 mod m over table cells.
struct Equation {
  std::vector<std::pair<int, int>> terms;  // (cell, coefficient)
};

class CocycleSolver {
 public:
  CocycleSolver(const FiniteAbelianGroup& g, int m) : g_(g), n_(g.order()), m_(m) {
    watch_.resize(static_cast<std::size_t>(n_) * n_);
    for (Element a = 1; a < n_; ++a)
      for (Element b = 1; b < n_; ++b)
        for (Element c = 1; c < n_; ++c) {
          std::vector<std::pair<int, int>> raw = {{cell(g.multiply(a, b), c), 1},
                                                  {cell(a, b), 1},
                                                  {cell(a, g.multiply(b, c)), -1},
                                                  {cell(b, c), -1}};
          Equation eq;
          for (auto [cl, k] : raw) {
            if (is_fixed(cl)) continue;
            auto it = std::find_if(eq.terms.begin(), eq.terms.end(),
                                   [cl = cl](const auto& t) { return t.first == cl; });
            if (it == eq.terms.end()) eq.terms.push_back({cl, k});
            else it->second += k;
          }
          std::erase_if(eq.terms, [m](const auto& t) { return mod(t.second, m) == 0; });
          if (eq.terms.empty()) continue;
          const int id = static_cast<int>(eqs_.size());
          for (auto [cl, k] : eq.terms) watch_[static_cast<std::size_t>(cl)].push_back(id);
          eqs_.push_back(std::move(eq));
        }
  }

  void solve(const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> table(static_cast<std::size_t>(n_) * n_, -1);
    for (int cl = 0; cl < n_ * n_; ++cl)
      if (is_fixed(cl)) table[static_cast<std::size_t>(cl)] = 0;
    // Cells that appear in no equation are still free; search handles them.
    std::vector<int> queue;
    for (int e = 0; e < static_cast<int>(eqs_.size()); ++e) queue.push_back(e);
    if (!propagate(table, queue)) return;
    search(table, emit);
  }

 private:
  int cell(Element a, Element b) const { return a * n_ + b; }
  bool is_fixed(int cl) const { return cl / n_ == 0 || cl % n_ == 0; }

  void search(std::vector<int>& table, const std::function<void(const std::vector<int>&)>& emit) {
    auto it = std::find(table.begin(), table.end(), -1);
    if (it == table.end()) {
      emit(table);
      return;
    }
    const int cl = static_cast<int>(it - table.begin());
    for (int v = 0; v < m_; ++v) {
      std::vector<int> next = table;
      next[static_cast<std::size_t>(cl)] = v;
      std::vector<int> queue = watch_[static_cast<std::size_t>(cl)];
      if (propagate(next, queue)) search(next, emit);
    }
  }

  bool propagate(std::vector<int>& table, std::vector<int>& queue) const {
    while (!queue.empty()) {
      const int e = queue.back();
      queue.pop_back();
      const Equation& eq = eqs_[static_cast<std::size_t>(e)];
      long known = 0;
      int unknown_cell = -1, unknown_coeff = 0, unknowns = 0;
      for (auto [cl, k] : eq.terms) {
        const int v = table[static_cast<std::size_t>(cl)];
        if (v < 0) {
          ++unknowns;
          unknown_cell = cl;
          unknown_coeff = k;
        } else {
          known += static_cast<long>(k) * v;
        }
      }
      if (unknowns == 0) {
        if (mod(known, m_) != 0) return false;
      } else if (unknowns == 1) {
        const int k = mod(unknown_coeff, m_);
        if (std::gcd(k, m_) != 1) continue;
        // k * x = -known (mod m)
        int inv = 1;
        while (mod(static_cast<long>(inv) * k, m_) != 1 % m_) ++inv;
        table[static_cast<std::size_t>(unknown_cell)] = mod(-known * inv, m_);
        for (int w : watch_[static_cast<std::size_t>(unknown_cell)]) queue.push_back(w);
      }
    }
    return true;
  }

  const FiniteAbelianGroup& g_;
  int n_;
  int m_;
  std::vector<Equation> eqs_;
  std::vector<std::vector<int>> watch_;
};

}  // namespace

Cochain2::Cochain2(FiniteAbelianGroup group, int coeff_order, std::vector<int> table)
    : group_(std::move(group)), m_(coeff_order), table_(std::move(table)) {
  const int n = group_.order();
  if (m_ < 1) throw std::invalid_argument("coefficient order must be positive");
  if (table_.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("cochain table must have |Gamma|^2 entries");
  }
  for (auto& v : table_) v = mod(v, m_);
  for (Element g = 0; g < n; ++g) {
    if ((*this)(g, 0) != 0 || (*this)(0, g) != 0) {
      throw Error(Errc::NotNormalized,
                  "c(g,1) or c(1,g) differs from 1 at g = " + std::to_string(g));
    }
  }
}

Cochain2 Cochain2::trivial(const FiniteAbelianGroup& group, int coeff_order) {
  return Cochain2(group, coeff_order,
                  std::vector<int>(static_cast<std::size_t>(group.order()) * group.order(), 0));
}

bool Cochain2::is_trivial() const {
  return std::all_of(table_.begin(), table_.end(), [](int v) { return v == 0; });
}

Cochain2 operator*(const Cochain2& a, const Cochain2& b) {
  if (!(a.group_ == b.group_) || a.m_ != b.m_) {
    throw std::invalid_argument("cochains over different groups");
  }
  std::vector<int> t(a.table_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = (a.table_[i] + b.table_[i]) % a.m_;
  return Cochain2(a.group_, a.m_, std::move(t));
}

CocycleVerdict is_cocycle(const Cochain2& c) {
  const auto& g = c.group();
  const int n = g.order();
  const int m = c.coeff_order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element d = 0; d < n; ++d) {
        const int lhs = c(g.multiply(a, b), d) + c(a, b);
        const int rhs = c(a, g.multiply(b, d)) + c(b, d);
        if ((lhs - rhs) % m != 0) return {false, std::array<Element, 3>{a, b, d}};
      }
  return {true, std::nullopt};
}

Cochain2 coboundary(const FiniteAbelianGroup& group, int coeff_order, const std::vector<int>& f) {
  const int n = group.order();
  if (f.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("coboundary: f must have one value per group element");
  }
  if (mod(f[0], coeff_order) != 0) throw Error(Errc::NotNormalized, "coboundary needs f(1) = 1");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] =
          mod(static_cast<long>(f[static_cast<std::size_t>(group.multiply(a, b))]) -
                  f[static_cast<std::size_t>(a)] - f[static_cast<std::size_t>(b)],
              coeff_order);
  return Cochain2(group, coeff_order, std::move(t));
}

CohomologyWitness are_cohomologous(const Cochain2& c, const Cochain2& c_prime,
                                   const ScaleBounds& bounds) {
  if (!(c.group() == c_prime.group()) || c.coeff_order() != c_prime.coeff_order()) {
    throw std::invalid_argument("are_cohomologous: cochains over different (Gamma, Z')");
  }
  check_search_scale(c.group(), c.coeff_order(), bounds, "are_cohomologous");
  CohomologyWitness out;
  for_each_normalized_function(c.group().order(), c.coeff_order(), [&](const std::vector<int>& f) {
    if (coboundary(c.group(), c.coeff_order(), f) * c == c_prime) {
      out.cohomologous = true;
      out.f = f;
      return false;
    }
    return true;
  });
  return out;
}

std::vector<Cochain2> all_cocycles(const FiniteAbelianGroup& group, int coeff_order,
                                   const ScaleBounds& bounds) {
  check_h2_scale(group, coeff_order, bounds);
  std::vector<Cochain2> out;
  CocycleSolver solver(group, coeff_order);
  solver.solve([&](const std::vector<int>& t) { out.emplace_back(group, coeff_order, t); });
  return out;
}

namespace {

std::vector<std::vector<int>> coboundary_tables(const FiniteAbelianGroup& group, int m) {
  std::set<std::vector<int>> seen;
  for_each_normalized_function(group.order(), m, [&](const std::vector<int>& f) {
    seen.insert(coboundary(group, m, f).table());
    return true;
  });
  return {seen.begin(), seen.end()};
}

std::vector<int> add_tables(const std::vector<int>& a, const std::vector<int>& b, int m) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % m;
  return r;
}

}  // namespace

std::vector<Cochain2> h2_classes(const FiniteAbelianGroup& group, int coeff_order,
                                 const ScaleBounds& bounds) {
  const auto cocycles = all_cocycles(group, coeff_order, bounds);
  const auto boundaries = coboundary_tables(group, coeff_order);
  std::unordered_set<std::vector<int>, TableHash> seen;
  std::vector<Cochain2> reps;
  for (const auto& z : cocycles) {
    if (seen.contains(z.table())) continue;
    std::vector<int> least = z.table();
    for (const auto& b : boundaries) {
      auto t = add_tables(z.table(), b, coeff_order);
      if (t < least) least = t;
      seen.insert(std::move(t));
    }
    reps.emplace_back(group, coeff_order, std::move(least));
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

Cochain2 canonical_representative(const Cochain2& c, const ScaleBounds& bounds) {
  check_search_scale(c.group(), c.coeff_order(), bounds, "canonical_representative");
  std::vector<int> least = c.table();
  for (const auto& b : coboundary_tables(c.group(), c.coeff_order())) {
    auto t = add_tables(c.table(), b, c.coeff_order());
    if (t < least) least = std::move(t);
  }
  return Cochain2(c.group(), c.coeff_order(), std::move(least));
}

ExtensionGroup::ExtensionGroup(const Cochain2& c)
    : order_(c.group().order() * c.coeff_order()), m_(c.coeff_order()), gamma_(c.group()) {
  table_.resize(static_cast<std::size_t>(order_) * order_);
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y) {
      const Element g = quotient_part(x), h = quotient_part(y);
      const int z = (kernel_part(x) + kernel_part(y) + c(g, h)) % m_;
      table_[static_cast<std::size_t>(x) * order_ + y] = encode(z, gamma_.multiply(g, h));
    }
}

bool ExtensionGroup::is_associative() const {
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y) {
      const int xy = multiply(x, y);
      for (int z = 0; z < order_; ++z)
        if (multiply(xy, z) != multiply(x, multiply(y, z))) return false;
    }
  return true;
}

bool ExtensionGroup::has_identity_and_inverses() const {
  for (int x = 0; x < order_; ++x) {
    if (multiply(0, x) != x || multiply(x, 0) != x) return false;
    bool found = false;
    for (int y = 0; y < order_ && !found; ++y) found = multiply(x, y) == 0 && multiply(y, x) == 0;
    if (!found) return false;
  }
  return true;
}

bool ExtensionGroup::kernel_is_central() const {
  for (int z = 0; z < m_; ++z) {
    const int k = encode(z, 0);
    for (int x = 0; x < order_; ++x)
      if (multiply(k, x) != multiply(x, k)) return false;
  }
  return true;
}

bool ExtensionGroup::quotient_is_gamma() const {
  for (int x = 0; x < order_; ++x)
    for (int y = 0; y < order_; ++y)
      if (quotient_part(multiply(x, y)) != gamma_.multiply(quotient_part(x), quotient_part(y)))
        return false;
  int kernel = 0;
  for (int x = 0; x < order_; ++x) kernel += quotient_part(x) == 0;
  return kernel == m_;
}

int ExtensionGroup::element_order(int x) const {
  int k = 1;
  for (int y = x; y != 0; y = multiply(y, x)) {
    ++k;
    if (k > order_) return 0;  // not a group
  }
  return k;
}

std::vector<int> ExtensionGroup::sorted_element_orders() const {
  std::vector<int> out;
  for (int x = 0; x < order_; ++x) out.push_back(element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

bool ExtensionGroup::is_abelian() const {
  for (int x = 0; x < order_; ++x)
    for (int y = x + 1; y < order_; ++y)
      if (multiply(x, y) != multiply(y, x)) return false;
  return true;
}

ExtensionGroup central_extension(const Cochain2& c) {
  ExtensionGroup ext(c);
  const bool associative = ext.is_associative();
  const auto verdict = is_cocycle(c);
  if (associative != verdict.holds) {
    throw std::logic_error("extension associativity disagrees with the cocycle identity");
  }
  if (!verdict.holds) {
    const auto& w = *verdict.witness;
    throw Error(Errc::NotACocycle, "cocycle identity fails at (" + std::to_string(w[0]) + ", " +
                                       std::to_string(w[1]) + ", " + std::to_string(w[2]) + ")");
  }
  if (!ext.has_identity_and_inverses() || !ext.kernel_is_central() || !ext.quotient_is_gamma()) {
    throw std::logic_error("extension of a cocycle fails the group axioms");
  }
  return ext;
}

namespace {

std::vector<int> closure(const ExtensionGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      const int y = g.multiply(out[i], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  return out;
}

}  // namespace

bool isomorphic(const ExtensionGroup& a, const ExtensionGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.sorted_element_orders() != b.sorted_element_orders()) return false;
  const int n = a.order();

  // Greedy generating set of a, preferring elements of large order.
  std::vector<int> by_order(static_cast<std::size_t>(n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return a.element_order(x) > a.element_order(y); });
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x : by_order) {
    if (static_cast<int>(span.size()) == n) break;
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = closure(a, gens);
  }

  // Words: each element of a as (parent, generator index) in a BFS tree.
  std::vector<std::pair<int, int>> parent(static_cast<std::size_t>(n), {-1, -1});
  std::vector<int> bfs{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = a.multiply(bfs[i], gens[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = {bfs[i], static_cast<int>(k)};
        bfs.push_back(y);
      }
    }

  std::vector<int> images(gens.size(), 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<int> phi(static_cast<std::size_t>(n), -1);
      phi[0] = 0;
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        const int x = bfs[i];
        const auto [p, gi] = parent[static_cast<std::size_t>(x)];
        phi[static_cast<std::size_t>(x)] =
            b.multiply(phi[static_cast<std::size_t>(p)], images[static_cast<std::size_t>(gi)]);
      }
      std::vector<char> hit(static_cast<std::size_t>(n), 0);
      for (int v : phi) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = 1;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (phi[static_cast<std::size_t>(a.multiply(x, y))] !=
              b.multiply(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
            return false;
      return true;
    }
    const int want = a.element_order(gens[k]);
    for (int y = 0; y < n; ++y) {
      if (b.element_order(y) != want) continue;
      images[k] = y;
      if (assign(k + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

std::vector<Element> embedding_map(const FiniteAbelianGroup& ambient, const SubgroupEmbedding& e) {
  const auto& sub = e.sub;
  if (e.generator_images.size() != sub.factors().size()) {
    throw Error(Errc::NotASubgroup, "one image per cyclic factor is required");
  }
  for (std::size_t i = 0; i < sub.factors().size(); ++i) {
    const Element img = e.generator_images[i];
    if (img < 0 || img >= ambient.order()) {
      throw Error(Errc::NotASubgroup, "generator image outside the ambient group");
    }
    if (sub.factors()[i] % ambient.element_order(img) != 0) {
      throw Error(Errc::NotASubgroup, "generator image order does not divide the factor order");
    }
  }
  std::vector<Element> map(static_cast<std::size_t>(sub.order()));
  std::vector<char> hit(static_cast<std::size_t>(ambient.order()), 0);
  for (Element x = 0; x < sub.order(); ++x) {
    const auto t = sub.to_tuple(x);
    Element img = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
      img = ambient.multiply(img, ambient.power(e.generator_images[i], t[i]));
    if (hit[static_cast<std::size_t>(img)]) throw Error(Errc::NotASubgroup, "map is not injective");
    hit[static_cast<std::size_t>(img)] = 1;
    map[static_cast<std::size_t>(x)] = img;
  }
  return map;
}

Cochain2 restrict(const Cochain2& c, const SubgroupEmbedding& e) {
  const auto map = embedding_map(c.group(), e);
  const int n = e.sub.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a) * n + b] =
          c(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
  return Cochain2(e.sub, c.coeff_order(), std::move(t));
}

int zeta(const Cochain2& c, Element g) {
  const auto& grp = c.group();
  const int n = grp.element_order(g);
  long sum = 0;
  Element gi = g;
  for (int i = 1; i <= n - 1; ++i) {
    sum += c(g, gi);
    gi = grp.multiply(gi, g);
  }
  return mod(sum, c.coeff_order());
}

}  // namespace peq::cohomology
