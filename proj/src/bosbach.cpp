#include "peqa/bosbach.hpp"

#include <algorithm>
#include <map>

namespace peqa {

namespace {

void require_pointed(const PointedEqAlgebra& p) {
  if (p.point == p.base.top())
    fail(Errc::point_is_top, "the point must differ from top");
}

void push_eq(LinearSystem& sys, std::vector<Rational> coeff, Rational rhs) {
  // Drop trivial equations and normalize the sign so duplicates collapse.
  int first = -1;
  for (int i = 0; i < sys.nvars; ++i)
    if (!coeff[static_cast<size_t>(i)].is_zero()) {
      first = i;
      break;
    }
  if (first < 0) {
    if (!rhs.is_zero()) sys.eqs.push_back({std::move(coeff), rhs});  // inconsistent row
    return;
  }
  if (coeff[static_cast<size_t>(first)] < Rational(0)) {
    for (auto& c : coeff) c = -c;
    rhs = -rhs;
  }
  LinEq eq{std::move(coeff), rhs};
  if (std::find(sys.eqs.begin(), sys.eqs.end(), eq) == sys.eqs.end())
    sys.eqs.push_back(std::move(eq));
}

}  // namespace

LinearSystem bosbach_system(const PointedEqAlgebra& p) {
  require_pointed(p);
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  LinearSystem sys{n, {}};

  auto pair_eq = [&](int t1, int x, int t2, int y) {
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    c[static_cast<size_t>(x)] += Rational(1);
    c[static_cast<size_t>(t1)] += Rational(1);
    c[static_cast<size_t>(y)] -= Rational(1);
    c[static_cast<size_t>(t2)] -= Rational(1);
    push_eq(sys, std::move(c), Rational(0));
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const int w = a.meet(x, y);
      pair_eq(a.tilde(w, x), x, a.tilde(w, y), y);    // exchange for tilde
      pair_eq(a.btilde(x, w), x, a.btilde(y, w), y);  // exchange for btilde
    }
  std::vector<Rational> c1(static_cast<size_t>(n), Rational(0));
  c1[static_cast<size_t>(a.top())] = Rational(1);
  push_eq(sys, std::move(c1), Rational(1));
  std::vector<Rational> c0(static_cast<size_t>(n), Rational(0));
  c0[static_cast<size_t>(p.point)] = Rational(1);
  push_eq(sys, std::move(c0), Rational(0));
  return sys;
}

LinearSystem bosbach_system_comparable(const PointedEqAlgebra& p) {
  require_pointed(p);
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  LinearSystem sys{n, {}};
  // For y <= x: s(y ~ x) - s(y) + s(x) = 1, and the same with x backsim y.
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (!a.leq(y, x)) continue;
      for (int term : {a.tilde(y, x), a.btilde(x, y)}) {
        std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
        c[static_cast<size_t>(term)] += Rational(1);
        c[static_cast<size_t>(x)] += Rational(1);
        c[static_cast<size_t>(y)] -= Rational(1);
        push_eq(sys, std::move(c), Rational(1));
      }
    }
  std::vector<Rational> c0(static_cast<size_t>(n), Rational(0));
  c0[static_cast<size_t>(p.point)] = Rational(1);
  push_eq(sys, std::move(c0), Rational(0));
  return sys;
}

LinearSystem bosbach_bck_system(const PointedEqAlgebra& p) {
  require_pointed(p);
  const FiniteBckMs b = psi(p.base);
  const int n = b.n();
  LinearSystem sys{n, {}};
  auto pair_eq = [&](int t1, int x, int t2, int y) {
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    c[static_cast<size_t>(x)] += Rational(1);
    c[static_cast<size_t>(t1)] += Rational(1);
    c[static_cast<size_t>(y)] -= Rational(1);
    c[static_cast<size_t>(t2)] -= Rational(1);
    push_eq(sys, std::move(c), Rational(0));
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      pair_eq(b.arrow(x, y), x, b.arrow(y, x), y);
      pair_eq(b.squig(x, y), x, b.squig(y, x), y);
    }
  std::vector<Rational> c1(static_cast<size_t>(n), Rational(0));
  c1[static_cast<size_t>(b.top())] = Rational(1);
  push_eq(sys, std::move(c1), Rational(1));
  std::vector<Rational> c0(static_cast<size_t>(n), Rational(0));
  c0[static_cast<size_t>(p.point)] = Rational(1);
  push_eq(sys, std::move(c0), Rational(0));
  return sys;
}

namespace {

struct Rref {
  bool consistent = true;
  std::vector<std::vector<Rational>> rows;  // coeff | rhs appended
  std::vector<int> pivot_col;               // per kept row
  std::vector<int> free_cols;
};

Rref reduce(const LinearSystem& sys) {
  const int n = sys.nvars;
  Rref r;
  for (const LinEq& e : sys.eqs) {
    std::vector<Rational> row = e.coeff;
    row.push_back(e.rhs);
    r.rows.push_back(std::move(row));
  }
  size_t rank = 0;
  for (int col = 0; col < n; ++col) {
    size_t sel = SIZE_MAX;
    for (size_t i = rank; i < r.rows.size(); ++i)
      if (!r.rows[i][static_cast<size_t>(col)].is_zero()) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX) {
      r.free_cols.push_back(col);
      continue;
    }
    std::swap(r.rows[rank], r.rows[sel]);
    const Rational inv = Rational(1) / r.rows[rank][static_cast<size_t>(col)];
    for (auto& v : r.rows[rank]) v *= inv;
    for (size_t i = 0; i < r.rows.size(); ++i) {
      if (i == rank) continue;
      const Rational f = r.rows[i][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < r.rows[i].size(); ++j)
        r.rows[i][j] -= f * r.rows[rank][j];
    }
    r.pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < r.rows.size(); ++i)
    if (!r.rows[i].back().is_zero()) r.consistent = false;
  r.rows.resize(rank);
  return r;
}

void normalize_basis(std::vector<std::vector<Rational>>& basis) {
  for (auto& v : basis) {
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        const Rational inv = Rational(1) / v[i];
        for (auto& e : v) e *= inv;
        break;
      }
  }
  std::sort(basis.begin(), basis.end(),
            [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end());
            });
}

// One linear inequality over the affine parameters: coeff . u + cst >= 0.
struct Ineq {
  std::vector<Rational> coeff;
  Rational cst;
};

void normalize_ineq(Ineq& q) {
  for (const auto& c : q.coeff)
    if (!c.is_zero()) {
      Rational scale = c;
      if (scale < Rational(0)) scale = -scale;
      const Rational inv = Rational(1) / scale;
      for (auto& e : q.coeff) e *= inv;
      q.cst *= inv;
      return;
    }
}

// Eliminates parameter k; returns false on a contradictory constant row.
bool fm_eliminate(std::vector<Ineq>& qs, int k) {
  std::vector<Ineq> pos, neg, zero;
  for (auto& q : qs) {
    const Rational c = q.coeff[static_cast<size_t>(k)];
    if (c.is_zero())
      zero.push_back(std::move(q));
    else if (c > Rational(0))
      pos.push_back(std::move(q));
    else
      neg.push_back(std::move(q));
  }
  std::vector<Ineq> out = std::move(zero);
  for (const Ineq& pq : pos)
    for (const Ineq& nq : neg) {
      const Rational pc = pq.coeff[static_cast<size_t>(k)];
      const Rational nc = -nq.coeff[static_cast<size_t>(k)];
      Ineq combined;
      combined.coeff.resize(pq.coeff.size());
      for (size_t j = 0; j < pq.coeff.size(); ++j)
        combined.coeff[j] = pq.coeff[j] * nc + nq.coeff[j] * pc;
      combined.cst = pq.cst * nc + nq.cst * pc;
      combined.coeff[static_cast<size_t>(k)] = Rational(0);
      normalize_ineq(combined);
      out.push_back(std::move(combined));
    }
  // Dominance prune: for identical directions only the tightest bound binds.
  std::map<std::vector<std::pair<long long, long long>>, Rational> best;
  std::vector<Ineq> pruned;
  for (Ineq& q : out) {
    bool all_zero = true;
    for (const auto& c : q.coeff)
      if (!c.is_zero()) all_zero = false;
    if (all_zero) {
      if (q.cst < Rational(0)) return false;
      continue;
    }
    std::vector<std::pair<long long, long long>> key;
    for (const auto& c : q.coeff) key.emplace_back(c.num(), c.den());
    auto it = best.find(key);
    if (it == best.end())
      best.emplace(std::move(key), q.cst);
    else if (q.cst < it->second)
      it->second = q.cst;
  }
  for (auto& [key, cst] : best) {
    Ineq q;
    for (auto& [num, den] : key) q.coeff.emplace_back(num, den);
    q.cst = cst;
    pruned.push_back(std::move(q));
  }
  qs = std::move(pruned);
  return true;
}

}  // namespace

namespace {

// Exact projection of the box-constrained region onto each parameter.
std::vector<ParamInterval> project_boxes(const BosbachSolutionSpace& space) {
  const int n = space.nvars;
  const int d = static_cast<int>(space.basis.size());
  std::vector<Ineq> box;
  for (int i = 0; i < n; ++i) {
    Ineq low, high;
    low.coeff.resize(static_cast<size_t>(d));
    high.coeff.resize(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
      low.coeff[static_cast<size_t>(j)] =
          space.basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
      high.coeff[static_cast<size_t>(j)] =
          -space.basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
    low.cst = space.particular[static_cast<size_t>(i)];
    high.cst = Rational(1) - space.particular[static_cast<size_t>(i)];
    normalize_ineq(low);
    normalize_ineq(high);
    box.push_back(std::move(low));
    box.push_back(std::move(high));
  }

  std::vector<ParamInterval> out(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) {
    std::vector<Ineq> qs = box;
    bool ok = true;
    for (int j = 0; j < d && ok; ++j)
      if (j != k) ok = fm_eliminate(qs, j);
    ParamInterval iv;
    if (ok) {
      bool has_lo = false, has_hi = false;
      Rational lo, hi;
      for (const Ineq& q : qs) {
        const Rational c = q.coeff[static_cast<size_t>(k)];
        if (c.is_zero()) {
          if (q.cst < Rational(0)) ok = false;
          continue;
        }
        const Rational bound = -q.cst / c;
        if (c > Rational(0)) {
          if (!has_lo || lo < bound) lo = bound;
          has_lo = true;
        } else {
          if (!has_hi || bound < hi) hi = bound;
          has_hi = true;
        }
      }
      if (ok && has_lo && has_hi && lo <= hi) {
        iv.empty = false;
        iv.lo = lo;
        iv.hi = hi;
      }
    }
    out[static_cast<size_t>(k)] = iv;
  }
  return out;
}

}  // namespace

BosbachSolutionSpace solve_system(const LinearSystem& sys) {
  const int n = sys.nvars;
  BosbachSolutionSpace space;
  space.nvars = n;
  Rref r = reduce(sys);
  space.consistent = r.consistent;
  if (!space.consistent) return space;

  space.particular.assign(static_cast<size_t>(n), Rational(0));
  for (size_t i = 0; i < r.pivot_col.size(); ++i)
    space.particular[static_cast<size_t>(r.pivot_col[i])] = r.rows[i].back();

  for (int f : r.free_cols) {
    std::vector<Rational> v(static_cast<size_t>(n), Rational(0));
    v[static_cast<size_t>(f)] = Rational(1);
    for (size_t i = 0; i < r.pivot_col.size(); ++i)
      v[static_cast<size_t>(r.pivot_col[i])] = -r.rows[i][static_cast<size_t>(f)];
    space.basis.push_back(std::move(v));
  }
  normalize_basis(space.basis);

  // Parameters whose projection is a single point are substituted back, so
  // the reported dimension is that of the feasible family itself.
  while (!space.basis.empty()) {
    std::vector<ParamInterval> boxes = project_boxes(space);
    size_t pinned = SIZE_MAX;
    for (size_t k = 0; k < boxes.size(); ++k)
      if (!boxes[k].empty && boxes[k].lo == boxes[k].hi) {
        pinned = k;
        break;
      }
    if (pinned == SIZE_MAX) {
      // Anchor the particular solution at the lower corner of the box, so
      // parameters run over [0, hi-lo]. Each shift only moves its own
      // parameter's interval.
      for (size_t k = 0; k < boxes.size(); ++k) {
        if (boxes[k].empty || boxes[k].lo.is_zero()) continue;
        for (int i = 0; i < n; ++i)
          space.particular[static_cast<size_t>(i)] +=
              space.basis[k][static_cast<size_t>(i)] * boxes[k].lo;
        boxes[k].hi = boxes[k].hi - boxes[k].lo;
        boxes[k].lo = Rational(0);
      }
      space.param_box = std::move(boxes);
      break;
    }
    const Rational u = boxes[pinned].lo;
    for (int i = 0; i < n; ++i)
      space.particular[static_cast<size_t>(i)] +=
          space.basis[pinned][static_cast<size_t>(i)] * u;
    space.basis.erase(space.basis.begin() + static_cast<long>(pinned));
    normalize_basis(space.basis);
  }
  space.dimension = static_cast<int>(space.basis.size());

  if (space.dimension == 0) {
    space.param_box.clear();
    space.feasible = true;
    for (const Rational& v : space.particular)
      if (v < Rational(0) || Rational(1) < v) space.feasible = false;
    return space;
  }
  space.feasible = !space.param_box[0].empty;
  return space;
}

bool space_satisfies(const BosbachSolutionSpace& space, const LinearSystem& sys) {
  if (!space.consistent) return true;  // empty set is contained in anything
  for (const LinEq& e : sys.eqs) {
    Rational acc(0);
    for (int i = 0; i < sys.nvars; ++i)
      acc += e.coeff[static_cast<size_t>(i)] * space.particular[static_cast<size_t>(i)];
    if (!(acc == e.rhs)) return false;
    for (const auto& b : space.basis) {
      Rational dir(0);
      for (int i = 0; i < sys.nvars; ++i)
        dir += e.coeff[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
      if (!dir.is_zero()) return false;
    }
  }
  return true;
}

BosbachSolutionSpace solve_bosbach(const PointedEqAlgebra& p) {
  const LinearSystem sys = bosbach_system(p);
  BosbachSolutionSpace space = solve_system(sys);
  const LinearSystem alt = bosbach_system_comparable(p);
  BosbachSolutionSpace alt_space = solve_system(alt);
  space.alt_formulation_agrees =
      space_satisfies(space, alt) && space_satisfies(alt_space, sys);
  return space;
}

BosbachCheck is_bosbach(const PointedEqAlgebra& p, const std::vector<Rational>& s) {
  require_pointed(p);
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  if (static_cast<int>(s.size()) != n)
    fail(Errc::bad_length, "expected " + std::to_string(n) + " values, got " +
                               std::to_string(s.size()));
  for (const Rational& v : s)
    if (v < Rational(0) || Rational(1) < v)
      fail(Errc::out_of_box, "value " + v.str() + " outside [0,1]");

  BosbachCheck c;
  auto at = [&](int i) { return s[static_cast<size_t>(i)]; };
  if (!(at(a.top()) == Rational(1))) {
    c.axiom = "BS3";
    c.x = a.top();
    c.lhs = at(a.top());
    c.rhs = Rational(1);
    return c;
  }
  if (!at(p.point).is_zero()) {
    c.axiom = "BS3";
    c.x = p.point;
    c.lhs = at(p.point);
    c.rhs = Rational(0);
    return c;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int w = a.meet(x, y);
      const Rational l1 = at(x) + at(a.tilde(w, x));
      const Rational r1 = at(y) + at(a.tilde(w, y));
      if (!(l1 == r1)) {
        c.axiom = "BS1";
        c.x = x;
        c.y = y;
        c.lhs = l1;
        c.rhs = r1;
        return c;
      }
      const Rational l2 = at(x) + at(a.btilde(x, w));
      const Rational r2 = at(y) + at(a.btilde(y, w));
      if (!(l2 == r2)) {
        c.axiom = "BS2";
        c.x = x;
        c.y = y;
        c.lhs = l2;
        c.rhs = r2;
        return c;
      }
    }
  // Consequences that must hold on a passing state.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!a.leq(x, y)) continue;
      if (at(y) < at(x)) throw std::logic_error("Bosbach state not monotone");
      const Rational expect = Rational(1) + at(x) - at(y);
      if (!(at(a.tilde(x, y)) == expect) || !(at(a.btilde(y, x)) == expect))
        throw std::logic_error("comparable-pair identity fails on a passing state");
    }
  c.ok = true;
  return c;
}

std::vector<Rational> compose_with_morphism(const PointedEqAlgebra& p,
                                            const std::vector<Rational>& s,
                                            const UnaryOperator& sigma) {
  require_pointed(p);
  if (!check_morphism(p.base, sigma).all_pass())
    fail(Errc::not_a_morphism, "operator is not a state-morphism");
  if (sigma(p.point) != p.point)
    fail(Errc::point_not_fixed, "morphism does not fix the point");
  if (!is_bosbach(p, s).ok)
    throw std::invalid_argument("values are not a Bosbach state");
  std::vector<Rational> out(s.size());
  for (int x = 0; x < p.base.n(); ++x)
    out[static_cast<size_t>(x)] = s[static_cast<size_t>(sigma(x))];
  if (!is_bosbach(p, out).ok)
    throw std::logic_error("composed state is not a Bosbach state");
  return out;
}

BckCompareReport bosbach_bck_compare(const PointedEqAlgebra& p) {
  BckCompareReport r;
  const LinearSystem eqa_sys = bosbach_system(p);
  const LinearSystem bck_sys = bosbach_bck_system(p);
  r.eqa = solve_bosbach(p);
  r.bck = solve_system(bck_sys);
  r.eqa_subset_of_bck = space_satisfies(r.eqa, bck_sys);
  r.spaces_equal = r.eqa_subset_of_bck && space_satisfies(r.bck, eqa_sys);
  r.equality_asserted = classify(p.base).invariant;
  return r;
}

}  // namespace peqa
