#include "peqa/states.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

namespace peqa {

PointedEqAlgebra make_pointed(FiniteEqAlgebra base, std::string_view point_token) {
  const int p = base.carrier.index_of(point_token);
  if (p < 0)
    fail(Errc::unknown_token, "point token '" + std::string(point_token) + "' not declared");
  return PointedEqAlgebra{std::move(base), p};
}

namespace {

// a ~ x then backsim a: the equality double negation used everywhere below.
int dneg_sim(const FiniteEqAlgebra& a, int point, int x) {
  return a.btilde(a.tilde(point, x), point);
}
int dneg_sim_rev(const FiniteEqAlgebra& a, int point, int x) {
  return a.tilde(point, a.btilde(x, point));
}

}  // namespace

NegationTables negations(const PointedEqAlgebra& p) {
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  ImplicationTables imp = implications(a);
  NegationTables t;
  t.tilde_neg.resize(static_cast<size_t>(n));
  t.btilde_neg.resize(static_cast<size_t>(n));
  t.arrow_neg.resize(static_cast<size_t>(n));
  t.squig_neg.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    t.tilde_neg[static_cast<size_t>(x)] = a.tilde(p.point, x);
    t.btilde_neg[static_cast<size_t>(x)] = a.btilde(x, p.point);
    t.arrow_neg[static_cast<size_t>(x)] = imp.arrow(x, p.point);
    t.squig_neg[static_cast<size_t>(x)] = imp.squig(x, p.point);
  }
  // Sanity on verified input: x below its double negation, and the triple
  // arrow negation collapses.
  for (int x = 0; x < n; ++x) {
    if (!a.leq(x, a.btilde(t.tilde_neg[static_cast<size_t>(x)], p.point)))
      throw std::logic_error("double negation not extensive");
    const int na = t.arrow_neg[static_cast<size_t>(x)];
    if (imp.arrow(imp.squig(na, p.point), p.point) != na)
      throw std::logic_error("triple arrow negation does not collapse");
  }
  return t;
}

PointedClass pointed_class(const PointedEqAlgebra& p) {
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  const int pt = p.point;
  ImplicationTables imp = implications(a);
  auto dn = [&](int x) { return dneg_sim(a, pt, x); };
  auto dnr = [&](int x) { return dneg_sim_rev(a, pt, x); };

  PointedClass c;
  c.good_sim = true;
  c.involutive_sim = true;
  c.good_arrow = true;
  c.involutive_arrow = true;
  for (int x = 0; x < n; ++x) {
    if (dn(x) != dnr(x)) c.good_sim = false;
    if (dn(x) != x || dnr(x) != x) c.involutive_sim = false;
    const int fa = imp.squig(imp.arrow(x, pt), pt);
    const int fb = imp.arrow(imp.squig(x, pt), pt);
    if (fa != fb) c.good_arrow = false;
    if (fa != x || fb != x) c.involutive_arrow = false;
  }

  c.compatible = c.good_sim;
  for (int x = 0; x < n && c.compatible; ++x) {
    // C4 is per element.
    if (a.tilde(pt, dn(x)) != a.tilde(pt, x) ||
        a.btilde(dnr(x), pt) != a.btilde(x, pt)) {
      c.compatible = false;
      c.compat_witness = Witness{{x, -1, -1}, 1, -1, -1, 4};
      break;
    }
    for (int y = 0; y < n && c.compatible; ++y) {
      if (dn(a.tilde(x, y)) != a.tilde(dn(x), dn(y))) {
        c.compatible = false;
        c.compat_witness =
            Witness{{x, y, -1}, 2, dn(a.tilde(x, y)), a.tilde(dn(x), dn(y)), 1};
      } else if (dn(a.btilde(x, y)) != a.btilde(dn(x), dn(y))) {
        c.compatible = false;
        c.compat_witness =
            Witness{{x, y, -1}, 2, dn(a.btilde(x, y)), a.btilde(dn(x), dn(y)), 2};
      } else if (dn(a.meet(x, y)) != a.meet(dn(x), dn(y))) {
        c.compatible = false;
        c.compat_witness =
            Witness{{x, y, -1}, 2, dn(a.meet(x, y)), a.meet(dn(x), dn(y)), 3};
      }
    }
  }
  return c;
}

ClosureResult gamma_closure(const PointedEqAlgebra& p) {
  PointedClass cls = pointed_class(p);
  if (!cls.compatible)
    fail(Errc::not_compatible, "pointed algebra is not compatible at '" +
                                   p.base.carrier.name(p.point) + "'");
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  ClosureResult r;
  r.gamma.map.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    r.gamma.map[static_cast<size_t>(x)] = dneg_sim(a, p.point, x);
  r.extensive = r.monotone = r.idempotent = true;
  for (int x = 0; x < n; ++x) {
    if (!a.leq(x, r.gamma(x))) r.extensive = false;
    if (r.gamma(r.gamma(x)) != r.gamma(x)) r.idempotent = false;
    for (int y = 0; y < n; ++y)
      if (a.leq(x, y) && !a.leq(r.gamma(x), r.gamma(y))) r.monotone = false;
  }
  return r;
}

SubsetMask regular_elements(const PointedEqAlgebra& p) {
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  SubsetMask reg = SubsetMask::empty(n);
  for (int x = 0; x < n; ++x)
    if (dneg_sim(a, p.point, x) == x && dneg_sim_rev(a, p.point, x) == x)
      reg.insert(x);
  return reg;
}

std::pair<int, int> state_axiom_sides(const FiniteEqAlgebra& a,
                                      const UnaryOperator& sg, StateKind kind,
                                      int x, int y, int part) {
  const int w = a.meet(x, y);
  if (kind == StateKind::type_i) {
    if (part == 0)
      return {sg(a.tilde(w, x)),
              a.tilde(sg(y), sg(a.btilde(a.tilde(w, x), y)))};
    return {sg(a.btilde(x, w)),
            a.btilde(sg(a.tilde(y, a.btilde(x, w))), sg(y))};
  }
  if (part == 0)
    return {sg(a.tilde(w, x)), a.tilde(sg(y), sg(a.btilde(a.tilde(w, y), x)))};
  return {sg(a.btilde(x, w)), a.btilde(sg(a.tilde(x, a.btilde(y, w))), sg(y))};
}

StateReport check_state(const FiniteEqAlgebra& a, const UnaryOperator& sg,
                        StateKind kind, bool strong) {
  const int n = a.n();
  StateReport report;

  {
    CheckEntry e{"IS1", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (a.leq(x, y) && !a.leq(sg(x), sg(y))) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, sg(x), sg(y), 0};
        }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{kind == StateKind::type_i ? "IS2" : "IS2'", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        for (int part = 0; part < 2 && e.pass; ++part) {
          auto [l, r] = state_axiom_sides(a, sg, kind, x, y, part);
          if (l != r) {
            e.pass = false;
            e.witness = Witness{{x, y, -1}, 2, l, r, part};
          }
        }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{"IS3", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        const int t = a.tilde(sg(x), sg(y));
        const int b = a.btilde(sg(x), sg(y));
        if (sg(t) != t) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, sg(t), t, 0};
        } else if (sg(b) != b) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, sg(b), b, 1};
        }
      }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{"IS4", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        const int w = a.meet(sg(x), sg(y));
        if (sg(w) != w) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, sg(w), w, 0};
        }
      }
    report.entries.push_back(std::move(e));
  }
  if (strong) {
    CheckEntry e{"IS5", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (sg(a.tilde(x, y)) != sg(a.btilde(x, y))) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, sg(a.tilde(x, y)), sg(a.btilde(x, y)), 0};
        }
    report.entries.push_back(std::move(e));
  }
  return report;
}

StateReport check_morphism(const FiniteEqAlgebra& a, const UnaryOperator& sg) {
  const int n = a.n();
  StateReport report;
  auto sweep = [&](const std::string& name, auto lhs, auto rhs) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (lhs(x, y) != rhs(x, y)) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, lhs(x, y), rhs(x, y), 0};
        }
    report.entries.push_back(std::move(e));
  };
  sweep(
      "SM1", [&](int x, int y) { return sg(a.tilde(x, y)); },
      [&](int x, int y) { return a.tilde(sg(x), sg(y)); });
  sweep(
      "SM2", [&](int x, int y) { return sg(a.btilde(x, y)); },
      [&](int x, int y) { return a.btilde(sg(x), sg(y)); });
  sweep(
      "SM3", [&](int x, int y) { return sg(a.meet(x, y)); },
      [&](int x, int y) { return a.meet(sg(x), sg(y)); });
  {
    CheckEntry e{"SM4", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      if (sg(sg(x)) != sg(x)) {
        e.pass = false;
        e.witness = Witness{{x, -1, -1}, 1, sg(sg(x)), sg(x), 0};
      }
    report.entries.push_back(std::move(e));
  }
  return report;
}

namespace {

// DFS over candidate self-maps. sigma(top)=top and idempotence are forced by
// the axioms of every family enumerated here; monotonicity is a pre-filter
// that full checks re-establish. Cross-checked against the unpruned sweep in
// tests at small sizes.
template <typename Leq, typename Accept>
void enumerate_operators(int n, int top, const Leq& leq, const Accept& accept,
                         std::vector<UnaryOperator>& out, int first_value) {
  std::vector<int> map(static_cast<size_t>(n), -1);
  map[static_cast<size_t>(top)] = top;

  std::vector<int> order;
  for (int i = 0; i < n; ++i)
    if (i != top) order.push_back(i);

  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      UnaryOperator sg{map};
      bool idem = true;
      for (int i = 0; i < n && idem; ++i)
        if (sg(sg(i)) != sg(i)) idem = false;
      if (idem && accept(sg)) out.push_back(std::move(sg));
      return;
    }
    const int i = order[k];
    const int lo = (static_cast<int>(k) == 0 && first_value >= 0) ? first_value : 0;
    const int hi = (static_cast<int>(k) == 0 && first_value >= 0) ? first_value : n - 1;
    for (int v = lo; v <= hi; ++v) {
      map[static_cast<size_t>(i)] = v;
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        if (map[static_cast<size_t>(j)] < 0 || j == i) continue;
        if (leq(i, j) && !leq(v, map[static_cast<size_t>(j)])) ok = false;
        if (leq(j, i) && !leq(map[static_cast<size_t>(j)], v)) ok = false;
      }
      // Partial idempotence: assigned images must already be fixed.
      if (ok && map[static_cast<size_t>(v)] >= 0 && map[static_cast<size_t>(v)] != v)
        ok = false;
      if (ok)
        for (int j = 0; j < n && ok; ++j)
          if (map[static_cast<size_t>(j)] == i && v != i) ok = false;
      if (ok) rec(k + 1);
      map[static_cast<size_t>(i)] = -1;
    }
  };
  rec(0);
}

template <typename Leq, typename Accept>
std::vector<UnaryOperator> enumerate_parallel(int n, int top, const Leq& leq,
                                              const Accept& accept, int jobs) {
  std::vector<UnaryOperator> out;
  if (n == 1) {
    UnaryOperator id = UnaryOperator::identity(1);
    if (accept(id)) out.push_back(id);
    return out;
  }
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    enumerate_operators(n, top, leq, accept, out, -1);
  } else {
    // Jobs are split by the image of the first non-top element.
    std::vector<std::vector<UnaryOperator>> parts(static_cast<size_t>(n));
    std::vector<std::thread> threads;
    std::atomic<int> next{0};
    for (int w = 0; w < jobs; ++w)
      threads.emplace_back([&] {
        for (int v = next.fetch_add(1); v < n; v = next.fetch_add(1))
          enumerate_operators(n, top, leq, accept, parts[static_cast<size_t>(v)], v);
      });
    for (auto& t : threads) t.join();
    for (auto& p : parts)
      out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<UnaryOperator> enumerate_states(const FiniteEqAlgebra& a,
                                            StateKind kind, int jobs) {
  if (a.n() > max_carrier_size())
    fail(Errc::size_bound_exceeded, "carrier too large for state enumeration");
  auto leq = [&](int x, int y) { return a.leq(x, y); };
  auto accept = [&](const UnaryOperator& sg) {
    return check_state(a, sg, kind).all_pass();
  };
  return enumerate_parallel(a.n(), a.top(), leq, accept, jobs);
}

std::vector<UnaryOperator> enumerate_morphisms(const FiniteEqAlgebra& a, int jobs) {
  if (a.n() > max_carrier_size())
    fail(Errc::size_bound_exceeded, "carrier too large for morphism enumeration");
  auto leq = [&](int x, int y) { return a.leq(x, y); };
  auto accept = [&](const UnaryOperator& sg) {
    return check_morphism(a, sg).all_pass();
  };
  return enumerate_parallel(a.n(), a.top(), leq, accept, jobs);
}

bool is_extensive(const FiniteEqAlgebra& a, const UnaryOperator& sigma) {
  for (int x = 0; x < a.n(); ++x)
    if (!a.leq(x, sigma(x))) return false;
  return true;
}

KernelInfo kernel(const FiniteEqAlgebra& a, const UnaryOperator& sg) {
  const int n = a.n();
  KernelInfo info;
  info.state_i = check_state(a, sg, StateKind::type_i).all_pass();
  info.state_ii = check_state(a, sg, StateKind::type_ii).all_pass();
  info.morphism = check_morphism(a, sg).all_pass();
  if (!info.state_i && !info.state_ii && !info.morphism)
    fail(Errc::not_a_morphism,
         "operator is neither an internal state nor a state-morphism");
  info.strong = true;
  for (int x = 0; x < n && info.strong; ++x)
    for (int y = 0; y < n && info.strong; ++y)
      if (sg(a.tilde(x, y)) != sg(a.btilde(x, y))) info.strong = false;

  info.kernel = SubsetMask::empty(n);
  for (int x = 0; x < n; ++x)
    if (sg(x) == a.top()) info.kernel.insert(x);
  info.status = ds_status(a, info.kernel);

  if (!info.status.is_ds) throw std::logic_error("kernel is not a deductive system");
  if (info.strong && (info.state_i || info.state_ii) && !info.status.is_normal)
    throw std::logic_error("strong state kernel is not normal");
  if (info.morphism && !info.status.is_normal)
    throw std::logic_error("morphism kernel is not normal");
  // Kernel and image meet only in the top element.
  for (int x = 0; x < n; ++x)
    if (info.kernel.contains(x) && sg(x) == x && x != a.top())
      throw std::logic_error("kernel and image overlap below top");
  if (info.morphism) {
    SubsetMask k1 = SubsetMask::empty(n), k2 = SubsetMask::empty(n);
    for (int x = 0; x < n; ++x) {
      k1.insert(a.tilde(x, sg(x)));
      k2.insert(a.btilde(sg(x), x));
    }
    if (!(k1 == info.kernel) || !(k2 == info.kernel))
      throw std::logic_error("morphism kernel identities fail");
  }
  return info;
}

FiniteEqAlgebra subalgebra(const FiniteEqAlgebra& a, const SubsetMask& s) {
  std::vector<int> elems = s.indices();
  const int k = static_cast<int>(elems.size());
  if (k == 0) fail(Errc::bad_table_shape, "empty subuniverse");
  std::vector<int> pos(static_cast<size_t>(a.n()), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<size_t>(elems[static_cast<size_t>(i)])] = i;
  if (!s.contains(a.top())) fail(Errc::bad_table_shape, "subuniverse misses top");

  BinTable meet(k), tilde(k), btilde(k);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(a.carrier.name(elems[static_cast<size_t>(i)]));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int x = elems[static_cast<size_t>(i)], y = elems[static_cast<size_t>(j)];
      const int m = a.meet(x, y), t = a.tilde(x, y), b = a.btilde(x, y);
      if (!s.contains(m) || !s.contains(t) || !s.contains(b))
        fail(Errc::bad_table_shape, "subset is not closed under the operations");
      meet.at(i, j) = pos[static_cast<size_t>(m)];
      tilde.at(i, j) = pos[static_cast<size_t>(t)];
      btilde.at(i, j) = pos[static_cast<size_t>(b)];
    }
  Carrier c;
  c.names = std::move(names);
  c.top = pos[static_cast<size_t>(a.top())];
  return assemble_algebra(std::move(c), std::move(meet), std::move(tilde),
                          std::move(btilde));
}

UnaryOperator extend_morphism(const PointedEqAlgebra& p,
                              const PartialOperator& sigma_on_reg) {
  const FiniteEqAlgebra& a = p.base;
  const int n = a.n();
  PointedClass cls = pointed_class(p);
  if (!cls.compatible)
    fail(Errc::not_compatible, "pointed algebra is not compatible");

  const SubsetMask reg = regular_elements(p);
  if (!(sigma_on_reg.domain == reg))
    fail(Errc::not_a_morphism_on_reg,
         "operator domain differs from the regular element set");
  const UnaryOperator& sg = sigma_on_reg.table;
  for (int x : reg.indices())
    if (!reg.contains(sg(x)))
      fail(Errc::not_a_morphism_on_reg, "operator leaves the regular elements");
  if (sg(p.point) != p.point)
    fail(Errc::point_not_fixed, "operator does not fix the point");

  // Must be a state-morphism of the regular subalgebra.
  {
    FiniteEqAlgebra sub = subalgebra(a, reg);
    std::vector<int> elems = reg.indices();
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[static_cast<size_t>(elems[i])] = static_cast<int>(i);
    UnaryOperator sub_sigma;
    sub_sigma.map.resize(elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
      sub_sigma.map[i] = pos[static_cast<size_t>(sg(elems[i]))];
    if (!check_morphism(sub, sub_sigma).all_pass())
      fail(Errc::not_a_morphism_on_reg,
           "operator is not a state-morphism of the regular subalgebra");
  }

  UnaryOperator ext;
  ext.map.resize(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    ext.map[static_cast<size_t>(x)] = sg(dneg_sim(a, p.point, x));

  if (!check_morphism(a, ext).all_pass())
    throw std::logic_error("extension is not a state-morphism");
  for (int x : reg.indices())
    if (ext(x) != sg(x)) throw std::logic_error("extension does not restrict to input");
  return ext;
}

StateReport check_bck_state(const FiniteBckMs& b, const UnaryOperator& mu,
                            StateKind kind) {
  const int n = b.n();
  auto ar = [&](int x, int y) { return b.arrow(x, y); };
  auto sq = [&](int x, int y) { return b.squig(x, y); };
  StateReport report;
  {
    CheckEntry e{"SB1", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (b.leq(x, y) && !b.leq(mu(x), mu(y))) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, mu(x), mu(y), 0};
        }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{kind == StateKind::type_i ? "SB2" : "SB2'", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        int l0, r0, l1, r1;
        if (kind == StateKind::type_i) {
          l0 = mu(ar(x, y));
          r0 = ar(mu(sq(ar(x, y), y)), mu(y));
          l1 = mu(sq(x, y));
          r1 = sq(mu(ar(sq(x, y), y)), mu(y));
        } else {
          l0 = mu(ar(x, y));
          r0 = ar(mu(sq(ar(y, x), x)), mu(y));
          l1 = mu(sq(x, y));
          r1 = sq(mu(ar(sq(y, x), x)), mu(y));
        }
        if (l0 != r0) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, l0, r0, 0};
        } else if (l1 != r1) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, l1, r1, 1};
        }
      }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{"SB3", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        const int u = ar(mu(x), mu(y));
        const int v = sq(mu(x), mu(y));
        if (mu(u) != u) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, mu(u), u, 0};
        } else if (mu(v) != v) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, mu(v), v, 1};
        }
      }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{"SB4", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        const int w = b.meet(mu(x), mu(y));
        if (mu(w) != w) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, mu(w), w, 0};
        }
      }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::vector<UnaryOperator> enumerate_bck_states(const FiniteBckMs& b, StateKind kind) {
  auto leq = [&](int x, int y) { return b.leq(x, y); };
  auto accept = [&](const UnaryOperator& mu) {
    return check_bck_state(b, mu, kind).all_pass();
  };
  return enumerate_parallel(b.n(), b.top(), leq, accept, 1);
}

StateReport check_bck_morphism(const FiniteBckMs& b, const UnaryOperator& mu) {
  const int n = b.n();
  StateReport report;
  auto sweep = [&](const std::string& name, auto lhs, auto rhs) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (lhs(x, y) != rhs(x, y)) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, lhs(x, y), rhs(x, y), 0};
        }
    report.entries.push_back(std::move(e));
  };
  sweep(
      "hom-arrow", [&](int x, int y) { return mu(b.arrow(x, y)); },
      [&](int x, int y) { return b.arrow(mu(x), mu(y)); });
  sweep(
      "hom-squig", [&](int x, int y) { return mu(b.squig(x, y)); },
      [&](int x, int y) { return b.squig(mu(x), mu(y)); });
  sweep(
      "hom-meet", [&](int x, int y) { return mu(b.meet(x, y)); },
      [&](int x, int y) { return b.meet(mu(x), mu(y)); });
  {
    CheckEntry e{"idempotent", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      if (mu(mu(x)) != mu(x)) {
        e.pass = false;
        e.witness = Witness{{x, -1, -1}, 1, mu(mu(x)), mu(x), 0};
      }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::vector<UnaryOperator> enumerate_bck_morphisms(const FiniteBckMs& b) {
  auto leq = [&](int x, int y) { return b.leq(x, y); };
  auto accept = [&](const UnaryOperator& mu) {
    return check_bck_morphism(b, mu).all_pass();
  };
  return enumerate_parallel(b.n(), b.top(), leq, accept, 1);
}

CorrespondenceReport state_correspondence(const FiniteEqAlgebra& a, int jobs) {
  CorrespondenceReport r;
  const FiniteBckMs b = psi(a);
  r.is_i_eqa = enumerate_states(a, StateKind::type_i, jobs);
  r.is_ii_eqa = enumerate_states(a, StateKind::type_ii, jobs);
  r.sm_eqa = enumerate_morphisms(a, jobs);
  r.is_i_bck = enumerate_bck_states(b, StateKind::type_i);
  r.is_ii_bck = enumerate_bck_states(b, StateKind::type_ii);
  r.sm_bck = enumerate_bck_morphisms(b);

  PropertyFlags f = classify(a);
  r.linear = f.linear;
  r.symmetric = f.symmetric;
  r.invariant = f.invariant;
  const bool backward = (f.linear && f.symmetric) || f.invariant;

  auto subset = [](const std::vector<UnaryOperator>& xs,
                   const std::vector<UnaryOperator>& ys)
      -> std::pair<bool, std::optional<UnaryOperator>> {
    for (const auto& x : xs)
      if (!std::binary_search(ys.begin(), ys.end(), x)) return {false, x};
    return {true, std::nullopt};
  };
  auto add = [&](const std::string& name, const std::vector<UnaryOperator>& xs,
                 const std::vector<UnaryOperator>& ys, bool asserted) {
    auto [holds, viol] = subset(xs, ys);
    r.inclusions.push_back({name, holds, asserted, viol});
  };

  add("SM_EQA subset IS_I_EQA", r.sm_eqa, r.is_i_eqa, true);
  add("IS_I_EQA subset IS_I_BCK", r.is_i_eqa, r.is_i_bck, true);
  add("IS_II_EQA subset IS_II_BCK", r.is_ii_eqa, r.is_ii_bck, true);
  add("SM_EQA subset SM_BCK", r.sm_eqa, r.sm_bck, true);
  add("IS_I_BCK subset IS_I_EQA", r.is_i_bck, r.is_i_eqa, backward);
  add("IS_II_BCK subset IS_II_EQA", r.is_ii_bck, r.is_ii_eqa, backward);
  add("SM_BCK subset SM_EQA", r.sm_bck, r.sm_eqa, backward);
  return r;
}

}  // namespace peqa
