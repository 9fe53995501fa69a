#include "peqa/deduction.hpp"

#include <algorithm>
#include <functional>

namespace peqa {

namespace {

// DS1-DS3 with the first failing witness; also evaluates DS3'.
struct DsCore {
  bool ds1 = false, ds2 = false, ds3 = false, ds3p = false;
  std::optional<Witness> witness;
};

DsCore ds_core(const FiniteEqAlgebra& a, const SubsetMask& d) {
  const int n = a.n();
  DsCore c;
  c.ds1 = d.contains(a.top());
  if (!c.ds1) {
    c.witness = Witness{{a.top(), -1, -1}, 1, -1, -1, 1};
  }
  c.ds2 = true;
  for (int x = 0; x < n && c.ds2; ++x) {
    if (!d.contains(x)) continue;
    for (int y = 0; y < n && c.ds2; ++y)
      if (a.leq(x, y) && !d.contains(y)) {
        c.ds2 = false;
        if (!c.witness) c.witness = Witness{{x, y, -1}, 2, -1, -1, 2};
      }
  }
  c.ds3 = true;
  for (int x = 0; x < n; ++x) {
    if (!d.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (d.contains(a.tilde(y, x)) && !d.contains(y)) {
        if (c.ds3 && !c.witness) c.witness = Witness{{x, y, -1}, 2, a.tilde(y, x), -1, 3};
        c.ds3 = false;
      }
  }
  c.ds3p = true;
  for (int x = 0; x < n; ++x) {
    if (!d.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (d.contains(a.btilde(x, y)) && !d.contains(y)) c.ds3p = false;
  }
  return c;
}

}  // namespace

DsStatus ds_status(const FiniteEqAlgebra& a, const SubsetMask& d,
                   bool skip_maximality) {
  const int n = a.n();
  DsStatus s;
  DsCore core = ds_core(a, d);
  s.is_ds = core.ds1 && core.ds2 && core.ds3;
  const bool ds_via_prime = core.ds1 && core.ds2 && core.ds3p;
  s.ds3_prime_agrees = (s.is_ds == ds_via_prime);
  s.ds_witness = core.witness;

  s.is_proper = (d.popcount() != n);

  s.is_normal = s.is_ds;
  for (int x = 0; x < n && s.is_normal; ++x)
    for (int y = 0; y < n && s.is_normal; ++y) {
      const bool tpair = d.contains(a.tilde(x, y)) && d.contains(a.tilde(y, x));
      const bool bpair = d.contains(a.btilde(y, x)) && d.contains(a.btilde(x, y));
      if (tpair != bpair) {
        s.is_normal = false;
        s.normal_witness = Witness{{x, y, -1}, 2, tpair ? 1 : 0, bpair ? 1 : 0, 0};
      }
    }

  s.is_closed = true;
  for (int x = 0; x < n && s.is_closed; ++x) {
    if (!d.contains(x)) continue;
    for (int y = 0; y < n && s.is_closed; ++y) {
      if (!d.contains(y)) continue;
      if (!d.contains(a.tilde(x, y)) || !d.contains(a.btilde(x, y))) {
        s.is_closed = false;
        s.closed_witness = Witness{{x, y, -1}, 2, a.tilde(x, y), a.btilde(x, y), 0};
      }
    }
  }

  s.is_maximal = false;
  if (!skip_maximality && s.is_ds && s.is_proper) {
    s.is_maximal = true;
    for (const SubsetMask& other : enumerate_ds(a)) {
      if (other.popcount() == n || other == d) continue;
      if (d.subset_of(other)) {
        s.is_maximal = false;
        break;
      }
    }
  }
  return s;
}

std::vector<SubsetMask> enumerate_ds(const FiniteEqAlgebra& a, bool normal_only) {
  const int n = a.n();
  if (n > max_carrier_size())
    fail(Errc::size_bound_exceeded, "carrier too large for enumeration");
  std::vector<SubsetMask> out;
  const uint32_t limit = 1u << n;
  for (uint32_t bits = 0; bits < limit; ++bits) {
    SubsetMask d{bits, n};
    if (!d.contains(a.top())) continue;
    // Upward-closure first: cheap rejection before the detachment sweep.
    bool up = true;
    for (int x = 0; x < n && up; ++x) {
      if (!d.contains(x)) continue;
      for (int y = 0; y < n && up; ++y)
        if (a.leq(x, y) && !d.contains(y)) up = false;
    }
    if (!up) continue;
    DsStatus st = ds_status(a, d, /*skip_maximality=*/true);
    if (!st.is_ds) continue;
    if (normal_only && !st.is_normal) continue;
    out.push_back(d);
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

SubsetMask generated_ds(const FiniteEqAlgebra& a, const SubsetMask& x) {
  const int n = a.n();
  SubsetMask s = x;
  s.n = n;
  s.insert(a.top());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int u = 0; u < n; ++u) {
      if (!s.contains(u)) continue;
      for (int v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        if (a.leq(u, v) || s.contains(a.tilde(v, u))) {
          s.insert(v);
          grew = true;
        }
      }
    }
  }
  return s;
}

bool is_simple(const FiniteEqAlgebra& a) {
  std::vector<SubsetMask> ds = enumerate_ds(a);
  if (a.n() == 1) return ds.size() == 1;
  return ds.size() == 2;
}

int CongruenceRelation::classes() const {
  int m = 0;
  for (int c : class_of) m = std::max(m, c + 1);
  return m;
}

std::vector<std::vector<int>> CongruenceRelation::blocks() const {
  std::vector<std::vector<int>> b(static_cast<size_t>(classes()));
  for (int i = 0; i < static_cast<int>(class_of.size()); ++i)
    b[static_cast<size_t>(class_of[static_cast<size_t>(i)])].push_back(i);
  return b;
}

namespace {

bool is_congruence(const FiniteEqAlgebra& a, const std::vector<int>& cls) {
  const int n = a.n();
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < n; ++y1) {
      if (cls[static_cast<size_t>(x1)] != cls[static_cast<size_t>(y1)]) continue;
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
          if (cls[static_cast<size_t>(x2)] != cls[static_cast<size_t>(y2)]) continue;
          auto same = [&](int u, int v) {
            return cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)];
          };
          if (!same(a.meet(x1, x2), a.meet(y1, y2))) return false;
          if (!same(a.tilde(x1, x2), a.tilde(y1, y2))) return false;
          if (!same(a.btilde(x1, x2), a.btilde(y1, y2))) return false;
        }
    }
  return true;
}

}  // namespace

CongruenceRelation congruence_of_ds(const FiniteEqAlgebra& a, const SubsetMask& h) {
  DsStatus st = ds_status(a, h, /*skip_maximality=*/true);
  if (!st.is_normal)
    fail(Errc::not_normal, "subset is not a normal deductive system");
  const int n = a.n();
  auto related = [&](int x, int y) {
    return h.contains(a.tilde(x, y)) && h.contains(a.tilde(y, x));
  };
  // The pair relation of a normal DS is an equivalence; verified here.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (related(x, y) != related(y, x))
        throw std::logic_error("Theta_H relation not symmetric");
      for (int z = 0; z < n; ++z)
        if (related(x, y) && related(y, z) && !related(x, z))
          throw std::logic_error("Theta_H relation not transitive");
    }
  std::vector<int> cls(static_cast<size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[static_cast<size_t>(x)] >= 0) continue;
    cls[static_cast<size_t>(x)] = next;
    for (int y = x + 1; y < n; ++y)
      if (related(x, y)) cls[static_cast<size_t>(y)] = next;
    ++next;
  }
  return CongruenceRelation{std::move(cls)};
}

CongruenceScan congruences(const FiniteEqAlgebra& a) {
  const int n = a.n();
  CongruenceScan scan;

  for (const SubsetMask& h : enumerate_ds(a, /*normal_only=*/true))
    scan.from_normal_ds.emplace_back(h, congruence_of_ds(a, h));

  if (n <= 6) {
    scan.exhaustive = true;
    // Restricted growth strings enumerate all set partitions.
    std::vector<int> cls(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int maxc) {
      if (i == n) {
        if (is_congruence(a, cls)) scan.all.push_back(CongruenceRelation{cls});
        return;
      }
      for (int c = 0; c <= maxc; ++c) {
        cls[static_cast<size_t>(i)] = c;
        rec(i + 1, c == maxc ? maxc + 1 : maxc);
      }
    };
    rec(0, 0);
  } else {
    for (const auto& [h, rel] : scan.from_normal_ds) scan.all.push_back(rel);
  }
  std::sort(scan.all.begin(), scan.all.end());
  scan.all.erase(std::unique(scan.all.begin(), scan.all.end()), scan.all.end());

  // The normal-DS map is a bijection exactly when every congruence arises
  // from a normal DS and distinct DSs give distinct congruences.
  scan.bijection_holds = scan.from_normal_ds.size() == scan.all.size();
  if (scan.bijection_holds) {
    std::vector<CongruenceRelation> image;
    for (const auto& [h, rel] : scan.from_normal_ds) image.push_back(rel);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    scan.bijection_holds = (image == scan.all);
    // Round trip: the top class of Theta_H must recover H.
    for (const auto& [h, rel] : scan.from_normal_ds) {
      SubsetMask back = SubsetMask::empty(n);
      const int top_cls = rel.class_of[static_cast<size_t>(a.top())];
      for (int x = 0; x < n; ++x)
        if (rel.class_of[static_cast<size_t>(x)] == top_cls) back.insert(x);
      if (!(back == h)) scan.bijection_holds = false;
    }
  }
  return scan;
}

Quotient quotient(const FiniteEqAlgebra& a, const SubsetMask& h) {
  CongruenceRelation rel = congruence_of_ds(a, h);  // throws NotNormal
  const int n = a.n();
  const int k = rel.classes();

  std::vector<int> rep(static_cast<size_t>(k), -1);
  for (int x = 0; x < n; ++x) {
    int& r = rep[static_cast<size_t>(rel.class_of[static_cast<size_t>(x)])];
    if (r < 0) r = x;
  }

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(k));
  for (int c = 0; c < k; ++c)
    names.push_back(a.carrier.name(rep[static_cast<size_t>(c)]) + "/H");

  auto cls = [&](int x) { return rel.class_of[static_cast<size_t>(x)]; };
  BinTable meet(k), tilde(k), btilde(k);
  for (int ci = 0; ci < k; ++ci)
    for (int cj = 0; cj < k; ++cj) {
      const int x = rep[static_cast<size_t>(ci)];
      const int y = rep[static_cast<size_t>(cj)];
      meet.at(ci, cj) = cls(a.meet(x, y));
      tilde.at(ci, cj) = cls(a.tilde(x, y));
      btilde.at(ci, cj) = cls(a.btilde(x, y));
    }
  // Well-definedness: the induced tables may not depend on representatives.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (cls(a.meet(x, y)) != meet(cls(x), cls(y)) ||
          cls(a.tilde(x, y)) != tilde(cls(x), cls(y)) ||
          cls(a.btilde(x, y)) != btilde(cls(x), cls(y)))
        throw std::logic_error("quotient operations not well-defined");
    }

  Carrier qc;
  qc.names = std::move(names);
  qc.top = cls(a.top());
  Quotient q{assemble_algebra(std::move(qc), std::move(meet), std::move(tilde),
                              std::move(btilde)),
             rel.class_of};
  return q;
}

}  // namespace peqa
