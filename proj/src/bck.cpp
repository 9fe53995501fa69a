#include "peqa/bck.hpp"

namespace peqa {

void FiniteBckMs::rebuild_order() {
  const int nn = n();
  leq_.assign(static_cast<size_t>(nn) * nn, 0);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y)
      leq_[static_cast<size_t>(x) * nn + y] = (meet(x, y) == x) ? 1 : 0;
}

FiniteBckMs assemble_bck(Carrier carrier, BinTable meet, BinTable arrow,
                         BinTable squig) {
  const int n = carrier.size();
  if (meet.n() != n || arrow.n() != n || squig.n() != n)
    fail(Errc::bad_table_shape, "tables do not match carrier size");
  // The semilattice part is validated the same way as for equality algebras.
  for (int x = 0; x < n; ++x) {
    if (meet(x, x) != x) fail(Errc::not_a_semilattice, "meet not idempotent");
    if (meet(x, carrier.top) != x)
      fail(Errc::top_not_greatest, "element " + carrier.name(x) + " not below top");
    for (int y = 0; y < n; ++y) {
      if (meet(x, y) != meet(y, x))
        fail(Errc::not_a_semilattice, "meet not commutative");
      for (int z = 0; z < n; ++z)
        if (meet(meet(x, y), z) != meet(x, meet(y, z)))
          fail(Errc::not_a_semilattice, "meet not associative");
    }
  }
  FiniteBckMs b;
  b.carrier = std::move(carrier);
  b.meet = std::move(meet);
  b.arrow = std::move(arrow);
  b.squig = std::move(squig);
  b.rebuild_order();
  return b;
}

AxiomReport verify_bck(const FiniteBckMs& b) {
  const int n = b.n();
  const int top = b.top();
  auto a = [&](int x, int y) { return b.arrow(x, y); };
  auto s = [&](int x, int y) { return b.squig(x, y); };

  AxiomReport report;
  auto sweep2 = [&](const std::string& name, auto ok, auto sides) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (!ok(x, y)) {
          auto [l, r] = sides(x, y);
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, l, r, 0};
        }
    report.entries.push_back(std::move(e));
  };
  auto sweep3 = [&](const std::string& name, auto ok, auto sides) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        for (int z = 0; z < n && e.pass; ++z)
          if (!ok(x, y, z)) {
            auto [l, r] = sides(x, y, z);
            e.pass = false;
            e.witness = Witness{{x, y, z}, 3, l, r, 0};
          }
    report.entries.push_back(std::move(e));
  };

  sweep3(
      "B1'", [&](int x, int y, int z) { return s(a(x, y), s(a(y, z), a(x, z))) == top; },
      [&](int x, int y, int z) {
        return std::pair{s(a(x, y), s(a(y, z), a(x, z))), top};
      });
  sweep3(
      "B2'", [&](int x, int y, int z) { return a(s(x, y), a(s(y, z), s(x, z))) == top; },
      [&](int x, int y, int z) {
        return std::pair{a(s(x, y), a(s(y, z), s(x, z))), top};
      });
  {
    CheckEntry e3{"B3'", true, std::nullopt};
    CheckEntry e4{"B4'", true, std::nullopt};
    CheckEntry e5{"B5'", true, std::nullopt};
    for (int x = 0; x < n; ++x) {
      if (e3.pass && a(top, x) != x) {
        e3.pass = false;
        e3.witness = Witness{{x, -1, -1}, 1, a(top, x), x, 0};
      }
      if (e4.pass && s(top, x) != x) {
        e4.pass = false;
        e4.witness = Witness{{x, -1, -1}, 1, s(top, x), x, 0};
      }
      if (e5.pass && (a(x, top) != top || s(x, top) != top)) {
        e5.pass = false;
        e5.witness = Witness{{x, -1, -1}, 1, a(x, top), s(x, top), 0};
      }
    }
    report.entries.push_back(std::move(e3));
    report.entries.push_back(std::move(e4));
    report.entries.push_back(std::move(e5));
  }
  sweep2(
      "B6'",
      [&](int x, int y) { return !(a(x, y) == top && a(y, x) == top) || x == y; },
      [&](int x, int y) { return std::pair{x, y}; });
  sweep2(
      "order-agreement",
      [&](int x, int y) {
        const bool mle = b.leq(x, y);
        return (a(x, y) == top) == mle && (s(x, y) == top) == mle;
      },
      [&](int x, int y) { return std::pair{a(x, y), s(x, y)}; });

  return report;
}

BckConditionReport check_conditions(const FiniteBckMs& b) {
  const int n = b.n();
  auto a = [&](int x, int y) { return b.arrow(x, y); };
  auto s = [&](int x, int y) { return b.squig(x, y); };
  auto m = [&](int x, int y) { return b.meet(x, y); };
  auto le = [&](int x, int y) { return b.leq(x, y); };

  BckConditionReport r;

  r.pC = true;
  for (int x = 0; x < n && r.pC; ++x)
    for (int y = 0; y < n && r.pC; ++y)
      for (int z = 0; z < n && r.pC; ++z)
        if (!le(a(x, y), a(m(x, z), m(y, z))) || !le(s(x, y), s(m(x, z), m(y, z)))) {
          r.pC = false;
          r.pC_witness = Witness{{x, y, z}, 3, a(x, y), a(m(x, z), m(y, z)), 0};
        }

  r.pD = true;
  for (int x = 0; x < n && r.pD; ++x)
    for (int y = 0; y < n && r.pD; ++y)
      for (int z = 0; z < n && r.pD; ++z)
        if (a(x, m(y, z)) != m(a(x, y), a(x, z)) ||
            s(x, m(y, z)) != m(s(x, y), s(x, z))) {
          r.pD = false;
          r.pD_witness = Witness{{x, y, z}, 3, a(x, m(y, z)), m(a(x, y), a(x, z)), 0};
        }

  // (pP): both minimum sets must have a least element and the two must agree.
  r.pP = true;
  BinTable prod(n);
  for (int x = 0; x < n && r.pP; ++x)
    for (int y = 0; y < n && r.pP; ++y) {
      auto least_of = [&](auto member) -> int {
        int best = -1;
        for (int z = 0; z < n; ++z) {
          if (!member(z)) continue;
          if (best < 0 || le(z, best)) best = z;
        }
        if (best < 0) return -1;
        for (int z = 0; z < n; ++z)
          if (member(z) && !le(best, z)) return -1;
        return best;
      };
      const int m1 = least_of([&](int z) { return le(x, a(y, z)); });
      const int m2 = least_of([&](int z) { return le(y, s(x, z)); });
      if (m1 < 0 || m2 < 0 || m1 != m2) {
        r.pP = false;
        r.pP_witness = Witness{{x, y, -1}, 2, m1, m2, 0};
      } else {
        prod.at(x, y) = m1;
      }
    }
  if (r.pP) r.prod = prod;

  r.commutative = true;
  for (int x = 0; x < n && r.commutative; ++x)
    for (int y = 0; y < n && r.commutative; ++y)
      if (s(a(x, y), y) != s(a(y, x), x) || a(s(x, y), y) != a(s(y, x), x))
        r.commutative = false;

  r.linear = true;
  for (int x = 0; x < n && r.linear; ++x)
    for (int y = 0; y < n && r.linear; ++y)
      if (!le(x, y) && !le(y, x)) r.linear = false;

  return r;
}

FiniteBckMs psi(const FiniteEqAlgebra& a) {
  ImplicationTables imp = implications(a);
  return assemble_bck(a.carrier, a.meet, std::move(imp.arrow), std::move(imp.squig));
}

FiniteEqAlgebra phi(const FiniteBckMs& b) {
  BckConditionReport cond = check_conditions(b);
  if (!cond.pC) {
    const Witness& w = *cond.pC_witness;
    fail(Errc::precondition_pc_failed,
         "pC fails at (" + b.carrier.name(w.xyz[0]) + "," + b.carrier.name(w.xyz[1]) +
             "," + b.carrier.name(w.xyz[2]) + ")");
  }
  const int n = b.n();
  BinTable tilde(n), btilde(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      tilde.at(x, y) = b.arrow(y, x);
      btilde.at(x, y) = b.squig(x, y);
    }
  return assemble_algebra(b.carrier, b.meet, std::move(tilde), std::move(btilde));
}

RoundtripReport roundtrip_report(const FiniteEqAlgebra& a) {
  RoundtripReport r;
  const FiniteBckMs b = psi(a);
  const FiniteEqAlgebra back = phi(b);
  r.phi_psi_equal = (back == a);
  r.psi_phi_psi_equal = (psi(back) == b);
  r.invariant_flag = classify(a).invariant;
  return r;
}

AxiomReport verify_pseudo_hoop(const FinitePseudoHoop& h) {
  const int n = h.n();
  const int top = h.top();
  auto p = [&](int x, int y) { return h.prod(x, y); };
  auto a = [&](int x, int y) { return h.arrow(x, y); };
  auto s = [&](int x, int y) { return h.squig(x, y); };

  AxiomReport report;
  {
    CheckEntry e{"PH1", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      if (p(x, top) != x || p(top, x) != x) {
        e.pass = false;
        e.witness = Witness{{x, -1, -1}, 1, p(x, top), p(top, x), 0};
      }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e{"PH2", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      if (a(x, x) != top || s(x, x) != top) {
        e.pass = false;
        e.witness = Witness{{x, -1, -1}, 1, a(x, x), s(x, x), 0};
      }
    report.entries.push_back(std::move(e));
  }
  {
    CheckEntry e3{"PH3", true, std::nullopt};
    CheckEntry e4{"PH4", true, std::nullopt};
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (e3.pass && a(p(x, y), z) != a(x, a(y, z))) {
            e3.pass = false;
            e3.witness = Witness{{x, y, z}, 3, a(p(x, y), z), a(x, a(y, z)), 0};
          }
          if (e4.pass && s(p(x, y), z) != s(y, s(x, z))) {
            e4.pass = false;
            e4.witness = Witness{{x, y, z}, 3, s(p(x, y), z), s(y, s(x, z)), 0};
          }
        }
    report.entries.push_back(std::move(e3));
    report.entries.push_back(std::move(e4));
  }
  {
    CheckEntry e{"PH5", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        const int v1 = p(a(x, y), x);
        const int v2 = p(a(y, x), y);
        const int v3 = p(x, s(x, y));
        const int v4 = p(y, s(y, x));
        if (v1 != v2 || v1 != v3 || v1 != v4) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, v1, v2 != v1 ? v2 : (v3 != v1 ? v3 : v4), 0};
        }
      }
    report.entries.push_back(std::move(e));
  }
  {
    // The arrow relation must be a partial order whose glb is the PH5 meet.
    CheckEntry anti{"order-antisymmetry", true, std::nullopt};
    CheckEntry glb{"meet-glb", true, std::nullopt};
    auto le = [&](int x, int y) { return a(x, y) == top; };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (anti.pass && le(x, y) && le(y, x) && x != y) {
          anti.pass = false;
          anti.witness = Witness{{x, y, -1}, 2, x, y, 0};
        }
        const int w = p(a(x, y), x);
        if (glb.pass) {
          bool ok = le(w, x) && le(w, y);
          for (int z = 0; z < n && ok; ++z)
            if (le(z, x) && le(z, y) && !le(z, w)) ok = false;
          if (!ok) {
            glb.pass = false;
            glb.witness = Witness{{x, y, -1}, 2, w, -1, 0};
          }
        }
      }
    report.entries.push_back(std::move(anti));
    report.entries.push_back(std::move(glb));
  }
  return report;
}

BinTable hoop_meet(const FinitePseudoHoop& h) {
  const int n = h.n();
  BinTable m(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v1 = h.prod(h.arrow(x, y), x);
      const int v2 = h.prod(h.arrow(y, x), y);
      const int v3 = h.prod(x, h.squig(x, y));
      const int v4 = h.prod(y, h.squig(y, x));
      if (v1 != v2 || v1 != v3 || v1 != v4)
        fail(Errc::meet_ill_defined,
             "PH5 expressions disagree at (" + h.carrier.name(x) + "," +
                 h.carrier.name(y) + ")");
      m.at(x, y) = v1;
    }
  return m;
}

FiniteEqAlgebra hoop_to_eq(const FinitePseudoHoop& h) {
  const int n = h.n();
  BinTable meet = hoop_meet(h);
  BinTable tilde(n), btilde(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      tilde.at(x, y) = h.arrow(y, x);
      btilde.at(x, y) = h.squig(x, y);
    }
  return assemble_algebra(h.carrier, std::move(meet), std::move(tilde),
                          std::move(btilde));
}

}  // namespace peqa
