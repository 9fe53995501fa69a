#include "peqa/search.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "peqa/bck.hpp"
#include "peqa/deduction.hpp"
#include "peqa/states.hpp"

namespace peqa {

namespace {
std::atomic<int> g_max_search{5};
}

int max_search_size() { return g_max_search.load(); }
void set_max_search_size(int n) { g_max_search.store(n); }

namespace {

bool known_property(const std::string& p) {
  static const char* names[] = {"pseudo-eq", "equality", "invariant",
                                "commutative", "symmetric", "linear",
                                "bounded", "simple", "pC", "pc",
                                "pD", "pd", "pP", "pp"};
  for (const char* n : names)
    if (p == n) return true;
  return false;
}

}  // namespace

bool eval_property(const FiniteEqAlgebra& a, const std::string& prop) {
  if (prop == "pseudo-eq") return verify_axioms(a).all_pass();
  if (prop == "equality") return classify(a).equality;
  if (prop == "invariant") return classify(a).invariant;
  if (prop == "commutative") return classify(a).commutative;
  if (prop == "symmetric") return classify(a).symmetric;
  if (prop == "linear") return classify(a).linear;
  if (prop == "bounded") return classify(a).bounded;
  if (prop == "simple") return is_simple(a);
  if (prop == "pC" || prop == "pc") return check_conditions(psi(a)).pC;
  if (prop == "pD" || prop == "pd") return check_conditions(psi(a)).pD;
  if (prop == "pP" || prop == "pp") return check_conditions(psi(a)).pP;
  fail(Errc::unknown_property, "unknown property '" + prop + "'");
}

namespace {

std::vector<int> apply_perm(const std::vector<int>& perm, const BinTable& t) {
  const int n = t.n();
  std::vector<int> out(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out[static_cast<size_t>(perm[static_cast<size_t>(x)]) * n +
          perm[static_cast<size_t>(y)]] = perm[static_cast<size_t>(t(x, y))];
  return out;
}

}  // namespace

std::vector<int> canonical_form(const FiniteEqAlgebra& a) {
  const int n = a.n();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  // Stage 1: the least relabeled meet table; stage 2: among its relabelings,
  // the least (tilde, btilde). Only order automorphisms survive stage 1.
  std::vector<int> best_meet;
  std::vector<std::vector<int>> stage2;
  do {
    std::vector<int> m = apply_perm(perm, a.meet);
    if (best_meet.empty() || m < best_meet) {
      best_meet = m;
      stage2.clear();
      stage2.push_back(perm);
    } else if (m == best_meet) {
      stage2.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> best_rest;
  for (const auto& p : stage2) {
    std::vector<int> rest = apply_perm(p, a.tilde);
    std::vector<int> bt = apply_perm(p, a.btilde);
    rest.insert(rest.end(), bt.begin(), bt.end());
    if (best_rest.empty() || rest < best_rest) best_rest = std::move(rest);
  }

  std::vector<int> form = std::move(best_meet);
  form.insert(form.end(), best_rest.begin(), best_rest.end());
  return form;
}

FiniteEqAlgebra algebra_from_canonical(const std::vector<int>& form, int n) {
  const size_t nn = static_cast<size_t>(n) * n;
  BinTable meet(n), tilde(n), btilde(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const size_t i = static_cast<size_t>(x) * n + y;
      meet.at(x, y) = form[i];
      tilde.at(x, y) = form[nn + i];
      btilde.at(x, y) = form[2 * nn + i];
    }
  int top = -1;
  for (int t = 0; t < n && top < 0; ++t) {
    bool greatest = true;
    for (int x = 0; x < n; ++x)
      if (meet(x, t) != x) greatest = false;
    if (greatest) top = t;
  }
  Carrier c;
  for (int i = 0; i < n; ++i) c.names.push_back("e" + std::to_string(i));
  c.top = top;
  return assemble_algebra(std::move(c), std::move(meet), std::move(tilde),
                          std::move(btilde));
}

std::vector<BinTable> enumerate_semilattices(int n) {
  // Strict relations on index pairs i<j (a linear extension labeling exists
  // for every poset, so this is complete up to isomorphism).
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int bits = static_cast<int>(pairs.size());

  std::set<std::vector<int>> canon;
  for (uint32_t rel = 0; rel < (1u << bits); ++rel) {
    std::vector<char> lt(static_cast<size_t>(n) * n, 0);
    for (int k = 0; k < bits; ++k)
      if ((rel >> k) & 1u)
        lt[static_cast<size_t>(pairs[static_cast<size_t>(k)].first) * n +
           pairs[static_cast<size_t>(k)].second] = 1;
    auto leq = [&](int x, int y) {
      return x == y || lt[static_cast<size_t>(x) * n + y];
    };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (leq(i, j) && leq(j, k) && !leq(i, k)) ok = false;
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      if (!leq(i, n - 1)) ok = false;  // top is the last index
    if (!ok) continue;

    BinTable meet(n);
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        int glb = -1;
        for (int k = 0; k < n; ++k) {
          if (!leq(k, i) || !leq(k, j)) continue;
          if (glb < 0 || leq(glb, k)) glb = k;
        }
        if (glb < 0) {
          ok = false;
          break;
        }
        for (int k = 0; k < n; ++k)
          if (leq(k, i) && leq(k, j) && !leq(k, glb)) ok = false;
        meet.at(i, j) = glb;
      }
    if (!ok) continue;

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> m = apply_perm(perm, meet);
      if (best.empty() || m < best) best = std::move(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }

  std::vector<BinTable> out;
  for (const auto& flat : canon) {
    BinTable m(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) m.at(x, y) = flat[static_cast<size_t>(x) * n + y];
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Shared state of one table-filling search over a fixed semilattice.
struct TableSearch {
  int n = 0;
  int top = 0;
  const BinTable* meet = nullptr;
  std::vector<char> leq;                    // n*n
  std::vector<int> t, b;                    // flattened tables, -1 = unknown
  std::vector<std::pair<char, int>> slots;  // (table id 0=t/1=b, cell) per slot;
                                            // the linked top cells share a slot
  std::vector<int> linked;                  // slot -> second cell or -1
  std::vector<uint32_t> domain;             // slot -> allowed-value bitmask

  bool le(int x, int y) const { return leq[static_cast<size_t>(x) * n + y]; }
  int tv(int x, int y) const { return t[static_cast<size_t>(x) * n + y]; }
  int bv(int x, int y) const { return b[static_cast<size_t>(x) * n + y]; }

  void init(const BinTable& m) {
    meet = &m;
    n = m.n();
    leq.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        leq[static_cast<size_t>(x) * n + y] = (m(x, y) == x) ? 1 : 0;
    top = -1;
    for (int c = 0; c < n && top < 0; ++c) {
      bool greatest = true;
      for (int x = 0; x < n; ++x)
        if (!le(x, c)) greatest = false;
      if (greatest) top = c;
    }

    t.assign(static_cast<size_t>(n) * n, -1);
    b.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) {
      t[static_cast<size_t>(x) * n + x] = top;
      b[static_cast<size_t>(x) * n + x] = top;
      t[static_cast<size_t>(x) * n + top] = x;   // x ~ 1 = x
      b[static_cast<size_t>(top) * n + x] = x;   // 1 backsim x = x
    }

    // Remaining cells; t(top,y) and b(y,top) always agree, so they share a slot.
    slots.clear();
    linked.clear();
    domain.clear();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        if (y != top && tv(x, y) < 0) {
          const int cell = x * n + y;
          slots.emplace_back(0, cell);
          linked.push_back(x == top ? (y * n + top) : -1);
        }
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y || x == top || y == top) continue;
        slots.emplace_back(1, x * n + y);
        linked.push_back(-1);
      }

    for (size_t s = 0; s < slots.size(); ++s) domain.push_back(domain_of(s));
  }

  uint32_t domain_of(size_t s) const {
    const auto [tab, cell] = slots[s];
    const int x = cell / n, y = cell % n;
    uint32_t dom = (n >= 32) ? ~0u : ((1u << n) - 1u);
    auto restrict_ge = [&](int lo) {
      for (int v = 0; v < n; ++v)
        if (!le(lo, v)) dom &= ~(1u << v);
    };
    if (tab == 0) {
      // t(x,y): value bounds from (x/\y')~x >= y' instances with x/\y' = ...
      // here the cell is t(u, z) with u = x, z = y: for every w with
      // z /\ w = u the value must dominate w.
      for (int w = 0; w < n; ++w)
        if ((*meet)(y, w) == x) restrict_ge(w);
      // t(y,x) = top would force x <= y.
      if (!le(y, x)) dom &= ~(1u << top);
    } else {
      for (int w = 0; w < n; ++w)
        if ((*meet)(x, w) == y) restrict_ge(w);
      if (!le(x, y)) dom &= ~(1u << top);
    }
    if (linked[s] >= 0) {
      // Mirror constraints of the linked b(y,top) cell.
      const int lx = linked[s] / n;
      for (int w = 0; w < n; ++w)
        if ((*meet)(lx, w) == top) restrict_ge(w);
    }
    return dom;
  }

  void assign(size_t s, int v) {
    const auto [tab, cell] = slots[s];
    (tab == 0 ? t : b)[static_cast<size_t>(cell)] = v;
    if (linked[s] >= 0) b[static_cast<size_t>(linked[s])] = v;
  }
  void unassign(size_t s) {
    const auto [tab, cell] = slots[s];
    (tab == 0 ? t : b)[static_cast<size_t>(cell)] = -1;
    if (linked[s] >= 0) b[static_cast<size_t>(linked[s])] = -1;
  }

  // Definite violation check over all axiom instances; unknown cells make an
  // instance inconclusive, never failing.
  bool violation() const {
    auto le2 = [&](int u, int v) { return u < 0 || v < 0 || le(u, v); };
    const BinTable& m = *meet;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (le(x, y) && le(y, z)) {  // A4
            if (!le2(tv(x, z), tv(y, z))) return true;
            if (!le2(tv(x, z), tv(x, y))) return true;
            if (!le2(bv(z, x), bv(z, y))) return true;
            if (!le2(bv(z, x), bv(y, x))) return true;
          }
          if (!le2(tv(x, y), tv(m(x, z), m(y, z)))) return true;  // A5
          if (!le2(bv(x, y), bv(m(x, z), m(y, z)))) return true;
          {
            const int u = tv(z, x), v = tv(z, y);  // A6 left
            if (u >= 0 && v >= 0 && !le2(tv(x, y), bv(u, v))) return true;
          }
          {
            const int u = bv(x, z), v = bv(y, z);  // A6 right
            if (u >= 0 && v >= 0 && !le2(bv(x, y), tv(u, v))) return true;
          }
          {
            const int u = tv(x, z), v = tv(y, z);  // A7 left
            if (u >= 0 && v >= 0 && !le2(tv(x, y), tv(u, v))) return true;
          }
          {
            const int u = bv(z, x), v = bv(z, y);  // A7 right
            if (u >= 0 && v >= 0 && !le2(bv(x, y), bv(u, v))) return true;
          }
        }
      }
    return false;
  }

  template <typename Emit>
  void dfs(size_t s, const Emit& emit) {
    if (s == slots.size()) {
      emit(*this);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!((domain[s] >> v) & 1u)) continue;
      assign(s, v);
      if (!violation()) dfs(s + 1, emit);
      unassign(s);
    }
  }

  FiniteEqAlgebra to_algebra() const {
    Carrier c;
    for (int i = 0; i < n; ++i) c.names.push_back("e" + std::to_string(i));
    c.top = top;
    BinTable tt(n), bb(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        tt.at(x, y) = tv(x, y);
        bb.at(x, y) = bv(x, y);
      }
    return assemble_algebra(std::move(c), *meet, std::move(tt), std::move(bb));
  }
};

std::vector<FiniteEqAlgebra> collect_models(int size, int jobs) {
  std::vector<BinTable> lattices = enumerate_semilattices(size);
  std::set<std::vector<int>> forms;
  std::mutex mu;

  // Jobs split by (semilattice, first slot value).
  struct Job {
    const BinTable* meet;
    int first_value;  // -1 = whole space (no slots)
  };
  std::vector<Job> jobs_list;
  for (const BinTable& m : lattices) {
    TableSearch probe;
    probe.init(m);
    if (probe.slots.empty())
      jobs_list.push_back({&m, -1});
    else
      for (int v = 0; v < size; ++v) jobs_list.push_back({&m, v});
  }

  auto run_job = [&](const Job& job) {
    TableSearch ts;
    ts.init(*job.meet);
    auto emit = [&](const TableSearch& done) {
      FiniteEqAlgebra a = done.to_algebra();
      if (!verify_axioms(a).all_pass()) return;
      std::vector<int> form = canonical_form(a);
      std::lock_guard<std::mutex> lock(mu);
      forms.insert(std::move(form));
    };
    if (job.first_value < 0) {
      ts.dfs(0, emit);
      return;
    }
    if (!((ts.domain[0] >> job.first_value) & 1u)) return;
    ts.assign(0, job.first_value);
    if (!ts.violation()) ts.dfs(1, emit);
    ts.unassign(0);
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (const Job& j : jobs_list) run_job(j);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < jobs_list.size();
             i = next.fetch_add(1))
          run_job(jobs_list[i]);
      });
    for (auto& w : workers) w.join();
  }

  std::vector<FiniteEqAlgebra> out;
  for (const auto& form : forms) out.push_back(algebra_from_canonical(form, size));
  return out;
}

}  // namespace

std::vector<FiniteEqAlgebra> enumerate_models(const SearchSpec& spec) {
  if (spec.size < 1 || spec.size > max_search_size())
    fail(Errc::size_bound_exceeded,
         "search size " + std::to_string(spec.size) + " outside 1.." +
             std::to_string(max_search_size()));
  for (const auto& p : spec.require)
    if (!known_property(p)) fail(Errc::unknown_property, "unknown property '" + p + "'");
  for (const auto& p : spec.forbid)
    if (!known_property(p)) fail(Errc::unknown_property, "unknown property '" + p + "'");

  std::vector<FiniteEqAlgebra> models = collect_models(spec.size, spec.jobs);
  std::vector<FiniteEqAlgebra> out;
  for (FiniteEqAlgebra& a : models) {
    bool keep = true;
    for (const auto& p : spec.require)
      if (!eval_property(a, p)) keep = false;
    for (const auto& p : spec.forbid)
      if (keep && eval_property(a, p)) keep = false;
    if (keep) out.push_back(std::move(a));
    if (spec.limit > 0 && static_cast<int>(out.size()) >= spec.limit) break;
  }
  return out;
}

std::vector<FiniteEqAlgebra> enumerate_models_unpruned(int size) {
  if (size < 1 || size > 3)
    fail(Errc::size_bound_exceeded, "unpruned oracle only runs at sizes 1..3");
  std::set<std::vector<int>> forms;
  for (const BinTable& meet : enumerate_semilattices(size)) {
    const int n = size;
    std::vector<int> cells;  // free cells of both tables, raw
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x != y) cells.push_back(x * n + y);  // tilde
      }
    std::vector<int> tilde_flat(static_cast<size_t>(n) * n), btilde_flat(tilde_flat);
    // Only the diagonal is pre-filled here; A3 cells are searched too, so the
    // oracle is as raw as possible while staying finite.
    int top = -1;
    for (int c = 0; c < n; ++c) {
      bool g = true;
      for (int x = 0; x < n; ++x)
        if (meet(x, c) != x) g = false;
      if (g) top = c;
    }
    std::function<void(size_t, bool)> rec = [&](size_t k, bool on_btilde) {
      if (k == cells.size()) {
        if (!on_btilde) {
          // Unit-law filter applied as soon as the tilde table is complete.
          for (int x = 0; x < n; ++x)
            if (x != top && tilde_flat[static_cast<size_t>(x) * n + top] != x) return;
          rec(0, true);
          return;
        }
        for (int x = 0; x < n; ++x)
          if (x != top && btilde_flat[static_cast<size_t>(top) * n + x] != x) return;
        BinTable t(n), b(n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            t.at(x, y) = x == y ? top : tilde_flat[static_cast<size_t>(x) * n + y];
            b.at(x, y) = x == y ? top : btilde_flat[static_cast<size_t>(x) * n + y];
          }
        Carrier c;
        for (int i = 0; i < n; ++i) c.names.push_back("e" + std::to_string(i));
        c.top = top;
        FiniteEqAlgebra a =
            assemble_algebra(std::move(c), meet, std::move(t), std::move(b));
        if (verify_axioms(a).all_pass()) forms.insert(canonical_form(a));
        return;
      }
      for (int v = 0; v < n; ++v) {
        (on_btilde ? btilde_flat : tilde_flat)[static_cast<size_t>(cells[k])] = v;
        rec(k + 1, on_btilde);
      }
    };
    rec(0, false);
  }
  std::vector<FiniteEqAlgebra> out;
  for (const auto& form : forms) out.push_back(algebra_from_canonical(form, size));
  return out;
}

namespace {

std::string normalize_claim(std::string s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '-')
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::optional<FiniteEqAlgebra> find_counterexample(const SearchSpec& spec,
                                                   const std::string& claim) {
  const std::string key = normalize_claim(claim);
  std::function<bool(const FiniteEqAlgebra&)> pred;
  if (key == "isi!=isii" || key == "isi≠isii") {
    pred = [](const FiniteEqAlgebra& a) {
      return enumerate_states(a, StateKind::type_i) !=
             enumerate_states(a, StateKind::type_ii);
    };
  } else if (key == "notinvariant") {
    pred = [](const FiniteEqAlgebra& a) { return !classify(a).invariant; };
  } else if (key == "phinotequality") {
    pred = [](const FiniteEqAlgebra& a) {
      return a.n() >= 2 && !classify(phi(psi(a))).equality;
    };
  } else {
    fail(Errc::unknown_claim, "unknown claim '" + claim + "'");
  }

  SearchSpec sub = spec;
  sub.limit = 0;
  for (const FiniteEqAlgebra& a : enumerate_models(sub))
    if (pred(a)) return a;
  return std::nullopt;
}

}  // namespace peqa
