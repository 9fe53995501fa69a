#include "peqa/algebra.hpp"

#include <functional>

namespace peqa {

void FiniteEqAlgebra::rebuild_order() {
  const int nn = n();
  leq_.assign(static_cast<size_t>(nn) * nn, 0);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nn; ++y)
      leq_[static_cast<size_t>(x) * nn + y] = (meet(x, y) == x) ? 1 : 0;
}

namespace {

void check_semilattice(const Carrier& c, const BinTable& m) {
  const int n = c.size();
  auto cell = [&](int x, int y) {
    return "(" + c.name(x) + "," + c.name(y) + ")";
  };
  for (int x = 0; x < n; ++x) {
    if (m(x, x) != x)
      fail(Errc::not_a_semilattice, "meet not idempotent at " + cell(x, x));
    for (int y = 0; y < n; ++y) {
      if (m(x, y) != m(y, x))
        fail(Errc::not_a_semilattice, "meet not commutative at " + cell(x, y));
      for (int z = 0; z < n; ++z)
        if (m(m(x, y), z) != m(x, m(y, z)))
          fail(Errc::not_a_semilattice,
               "meet not associative at (" + c.name(x) + "," + c.name(y) + "," +
                   c.name(z) + ")");
    }
  }
  for (int x = 0; x < n; ++x)
    if (m(x, c.top) != x)
      fail(Errc::top_not_greatest,
           "element " + c.name(x) + " is not below top " + c.name(c.top));
}

// Scans tuples in ascending lexicographic order and keeps the least witness.
struct Sweep {
  CheckReport& report;

  void unary(const std::string& name, int n, const std::function<bool(int)>& ok,
             const std::function<std::pair<int, int>(int)>& sides) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      if (!ok(x)) {
        auto [l, r] = sides(x);
        e.pass = false;
        e.witness = Witness{{x, -1, -1}, 1, l, r, 0};
      }
    report.entries.push_back(std::move(e));
  }

  void binary(const std::string& name, int n, const std::function<bool(int, int)>& ok,
              const std::function<std::pair<int, int>(int, int)>& sides) {
    CheckEntry e{name, true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y)
        if (!ok(x, y)) {
          auto [l, r] = sides(x, y);
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, l, r, 0};
        }
    report.entries.push_back(std::move(e));
  }

  void ternary(const std::string& name, int n,
               const std::function<bool(int, int, int)>& ok,
               const std::function<std::pair<int, int>(int, int, int)>& sides) {
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
  }
};

}  // namespace

FiniteEqAlgebra assemble_algebra(Carrier carrier, BinTable meet, BinTable tilde,
                                 BinTable btilde) {
  const int n = carrier.size();
  if (meet.n() != n || tilde.n() != n || btilde.n() != n)
    fail(Errc::bad_table_shape, "tables do not match carrier size");
  check_semilattice(carrier, meet);
  FiniteEqAlgebra a;
  a.carrier = std::move(carrier);
  a.meet = std::move(meet);
  a.tilde = std::move(tilde);
  a.btilde = std::move(btilde);
  a.rebuild_order();
  return a;
}

FiniteEqAlgebra build_algebra(const std::vector<std::string>& names,
                              const std::vector<std::vector<int>>& meet_rows,
                              const std::vector<std::vector<int>>& tilde_rows,
                              const std::vector<std::vector<int>>& btilde_rows,
                              std::string_view top_token) {
  Carrier c = make_carrier(names, top_token);
  const int n = c.size();
  auto shape = [&](const std::vector<std::vector<int>>& rows, const char* which) {
    if (static_cast<int>(rows.size()) != n)
      fail(Errc::bad_table_shape,
           std::string(which) + " table has " + std::to_string(rows.size()) +
               " rows, expected " + std::to_string(n));
  };
  shape(meet_rows, "meet");
  shape(tilde_rows, "tilde");
  shape(btilde_rows, "btilde");
  return assemble_algebra(std::move(c), BinTable::from_rows(meet_rows),
                          BinTable::from_rows(tilde_rows),
                          BinTable::from_rows(btilde_rows));
}

AxiomReport verify_axioms(const FiniteEqAlgebra& a) {
  const int n = a.n();
  const int top = a.top();
  auto m = [&](int x, int y) { return a.meet(x, y); };
  auto t = [&](int x, int y) { return a.tilde(x, y); };
  auto b = [&](int x, int y) { return a.btilde(x, y); };
  auto le = [&](int x, int y) { return a.leq(x, y); };

  AxiomReport report;
  Sweep sw{report};

  // A1 was validated structurally at build time; re-checked here so the
  // report covers the full axiom list.
  {
    CheckEntry e{"A1", true, std::nullopt};
    for (int x = 0; x < n && e.pass; ++x)
      for (int y = 0; y < n && e.pass; ++y) {
        if (m(x, y) != m(y, x) || m(x, x) != x || m(x, top) != x) {
          e.pass = false;
          e.witness = Witness{{x, y, -1}, 2, m(x, y), m(y, x), 0};
        }
        for (int z = 0; z < n && e.pass; ++z)
          if (m(m(x, y), z) != m(x, m(y, z))) {
            e.pass = false;
            e.witness = Witness{{x, y, z}, 3, m(m(x, y), z), m(x, m(y, z)), 0};
          }
      }
    report.entries.push_back(std::move(e));
  }

  sw.unary(
      "A2", n, [&](int x) { return t(x, x) == top && b(x, x) == top; },
      [&](int x) { return std::pair{t(x, x), b(x, x)}; });
  sw.unary(
      "A3", n, [&](int x) { return t(x, top) == x && b(top, x) == x; },
      [&](int x) { return std::pair{t(x, top), b(top, x)}; });

  // A4 quantifies over chains x <= y <= z only.
  auto chain = [&](int x, int y, int z) { return le(x, y) && le(y, z); };
  sw.ternary(
      "A4a", n,
      [&](int x, int y, int z) { return !chain(x, y, z) || le(t(x, z), t(y, z)); },
      [&](int x, int y, int z) { return std::pair{t(x, z), t(y, z)}; });
  sw.ternary(
      "A4b", n,
      [&](int x, int y, int z) { return !chain(x, y, z) || le(t(x, z), t(x, y)); },
      [&](int x, int y, int z) { return std::pair{t(x, z), t(x, y)}; });
  sw.ternary(
      "A4c", n,
      [&](int x, int y, int z) { return !chain(x, y, z) || le(b(z, x), b(z, y)); },
      [&](int x, int y, int z) { return std::pair{b(z, x), b(z, y)}; });
  sw.ternary(
      "A4d", n,
      [&](int x, int y, int z) { return !chain(x, y, z) || le(b(z, x), b(y, x)); },
      [&](int x, int y, int z) { return std::pair{b(z, x), b(y, x)}; });

  sw.ternary(
      "A5a", n,
      [&](int x, int y, int z) { return le(t(x, y), t(m(x, z), m(y, z))); },
      [&](int x, int y, int z) { return std::pair{t(x, y), t(m(x, z), m(y, z))}; });
  sw.ternary(
      "A5b", n,
      [&](int x, int y, int z) { return le(b(x, y), b(m(x, z), m(y, z))); },
      [&](int x, int y, int z) { return std::pair{b(x, y), b(m(x, z), m(y, z))}; });

  sw.ternary(
      "A6a", n,
      [&](int x, int y, int z) { return le(t(x, y), b(t(z, x), t(z, y))); },
      [&](int x, int y, int z) { return std::pair{t(x, y), b(t(z, x), t(z, y))}; });
  sw.ternary(
      "A6b", n,
      [&](int x, int y, int z) { return le(b(x, y), t(b(x, z), b(y, z))); },
      [&](int x, int y, int z) { return std::pair{b(x, y), t(b(x, z), b(y, z))}; });

  sw.ternary(
      "A7a", n,
      [&](int x, int y, int z) { return le(t(x, y), t(t(x, z), t(y, z))); },
      [&](int x, int y, int z) { return std::pair{t(x, y), t(t(x, z), t(y, z))}; });
  sw.ternary(
      "A7b", n,
      [&](int x, int y, int z) { return le(b(x, y), b(b(z, x), b(z, y))); },
      [&](int x, int y, int z) { return std::pair{b(x, y), b(b(z, x), b(z, y))}; });

  return report;
}

ImplicationTables implications(const FiniteEqAlgebra& a) {
  const int n = a.n();
  ImplicationTables imp{BinTable(n), BinTable(n)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int w = a.meet(x, y);
      imp.arrow.at(x, y) = a.tilde(w, x);
      imp.squig.at(x, y) = a.btilde(x, w);
    }
  return imp;
}

PropertyFlags classify(const FiniteEqAlgebra& a) {
  const int n = a.n();
  PropertyFlags f;

  int bot = 0;
  for (int x = 1; x < n; ++x) bot = a.meet(bot, x);
  f.bounded = true;
  for (int x = 0; x < n; ++x)
    if (!a.leq(bot, x)) f.bounded = false;
  f.bottom = f.bounded ? bot : -1;

  f.linear = true;
  for (int x = 0; x < n && f.linear; ++x)
    for (int y = 0; y < n && f.linear; ++y)
      if (!a.leq(x, y) && !a.leq(y, x)) f.linear = false;

  f.symmetric = true;
  f.invariant = true;
  f.commutative = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int w = a.meet(x, y);
      if (a.btilde(x, y) != a.tilde(y, x)) f.symmetric = false;
      if (a.tilde(w, y) != a.tilde(x, y) || a.btilde(x, w) != a.btilde(x, y))
        f.invariant = false;
      if (a.btilde(a.tilde(w, x), y) != a.btilde(a.tilde(w, y), x) ||
          a.tilde(y, a.btilde(x, w)) != a.tilde(x, a.btilde(y, w)))
        f.commutative = false;
    }

  f.equality = (a.tilde == a.btilde);
  return f;
}

LawReport derived_law_suite(const FiniteEqAlgebra& a) {
  const int n = a.n();
  const int top = a.top();
  auto m = [&](int x, int y) { return a.meet(x, y); };
  auto t = [&](int x, int y) { return a.tilde(x, y); };
  auto b = [&](int x, int y) { return a.btilde(x, y); };
  auto le = [&](int x, int y) { return a.leq(x, y); };
  auto arr = [&](int x, int y) { return t(m(x, y), x); };
  auto sq = [&](int x, int y) { return b(x, m(x, y)); };

  LawReport report;
  Sweep sw{report};

  sw.ternary(
      "meet-tilde-restrict", n,
      [&](int x, int y, int z) { return le(t(m(x, y), x), t(m(m(x, y), z), m(x, z))); },
      [&](int x, int y, int z) {
        return std::pair{t(m(x, y), x), t(m(m(x, y), z), m(x, z))};
      });
  sw.ternary(
      "arrow-meet-premise", n,
      [&](int x, int y, int z) { return le(arr(x, y), arr(m(x, z), y)); },
      [&](int x, int y, int z) { return std::pair{arr(x, y), arr(m(x, z), y)}; });
  sw.ternary(
      "meet-btilde-restrict", n,
      [&](int x, int y, int z) { return le(b(x, m(x, y)), b(m(x, z), m(m(x, y), z))); },
      [&](int x, int y, int z) {
        return std::pair{b(x, m(x, y)), b(m(x, z), m(m(x, y), z))};
      });
  sw.ternary(
      "squig-meet-premise", n,
      [&](int x, int y, int z) { return le(sq(x, y), sq(m(x, z), y)); },
      [&](int x, int y, int z) { return std::pair{sq(x, y), sq(m(x, z), y)}; });

  sw.binary(
      "tilde-below-arrow", n, [&](int x, int y) { return le(t(x, y), arr(y, x)); },
      [&](int x, int y) { return std::pair{t(x, y), arr(y, x)}; });
  sw.binary(
      "btilde-below-squig", n, [&](int x, int y) { return le(b(x, y), sq(x, y)); },
      [&](int x, int y) { return std::pair{b(x, y), sq(x, y)}; });
  sw.binary(
      "below-cross-btilde", n, [&](int x, int y) { return le(x, b(t(y, x), y)); },
      [&](int x, int y) { return std::pair{x, b(t(y, x), y)}; });
  sw.binary(
      "below-cross-tilde", n, [&](int x, int y) { return le(x, t(y, b(x, y))); },
      [&](int x, int y) { return std::pair{x, t(y, b(x, y))}; });
  sw.binary(
      "unit-implies-leq", n,
      [&](int x, int y) {
        return (b(x, y) != top && t(y, x) != top) || le(x, y);
      },
      [&](int x, int y) { return std::pair{b(x, y), t(y, x)}; });
  sw.ternary(
      "tilde-unit-monotone", n,
      [&](int x, int y, int z) { return t(x, y) != top || le(t(z, x), t(z, y)); },
      [&](int x, int y, int z) { return std::pair{t(z, x), t(z, y)}; });
  sw.ternary(
      "btilde-unit-antitone", n,
      [&](int x, int y, int z) { return b(x, y) != top || le(b(y, z), b(x, z)); },
      [&](int x, int y, int z) { return std::pair{b(y, z), b(x, z)}; });
  sw.binary(
      "order-iff-arrow-unit", n,
      [&](int x, int y) { return le(x, y) == (arr(x, y) == top); },
      [&](int x, int y) { return std::pair{le(x, y) ? top : -1, arr(x, y)}; });
  sw.binary(
      "order-iff-squig-unit", n,
      [&](int x, int y) { return le(x, y) == (sq(x, y) == top); },
      [&](int x, int y) { return std::pair{le(x, y) ? top : -1, sq(x, y)}; });
  sw.unary(
      "arrow-unit-laws", n,
      [&](int x) {
        return arr(top, x) == x && sq(top, x) == x && arr(x, top) == top &&
               sq(x, top) == top && arr(x, x) == top && sq(x, x) == top;
      },
      [&](int x) { return std::pair{arr(top, x), sq(top, x)}; });
  sw.binary(
      "below-arrow-constant", n,
      [&](int x, int y) { return le(x, arr(y, x)) && le(x, sq(y, x)); },
      [&](int x, int y) { return std::pair{arr(y, x), sq(y, x)}; });
  sw.binary(
      "double-negation-bound", n,
      [&](int x, int y) { return le(x, sq(arr(x, y), y)) && le(x, arr(sq(x, y), y)); },
      [&](int x, int y) { return std::pair{sq(arr(x, y), y), arr(sq(x, y), y)}; });
  sw.ternary(
      "arrow-exchange-bound", n,
      [&](int x, int y, int z) {
        return le(arr(x, y), sq(arr(y, z), arr(x, z))) &&
               le(sq(x, y), arr(sq(y, z), sq(x, z)));
      },
      [&](int x, int y, int z) {
        return std::pair{arr(x, y), sq(arr(y, z), arr(x, z))};
      });
  sw.ternary(
      "galois-swap", n,
      [&](int x, int y, int z) { return le(x, arr(y, z)) == le(y, sq(x, z)); },
      [&](int x, int y, int z) { return std::pair{arr(y, z), sq(x, z)}; });
  sw.ternary(
      "arrow-squig-commute", n,
      [&](int x, int y, int z) { return arr(x, sq(y, z)) == sq(y, arr(x, z)); },
      [&](int x, int y, int z) { return std::pair{arr(x, sq(y, z)), sq(y, arr(x, z))}; });
  sw.ternary(
      "arrow-meet-compat", n,
      [&](int x, int y, int z) {
        return le(arr(x, y), arr(m(x, z), m(y, z))) &&
               le(sq(x, y), sq(m(x, z), m(y, z)));
      },
      [&](int x, int y, int z) {
        return std::pair{arr(x, y), arr(m(x, z), m(y, z))};
      });
  sw.binary(
      "arrow-meet-absorb", n,
      [&](int x, int y) { return arr(x, y) == arr(x, m(x, y)) && sq(x, y) == sq(x, m(x, y)); },
      [&](int x, int y) { return std::pair{arr(x, y), arr(x, m(x, y))}; });
  sw.unary(
      "top-tilde-flip", n, [&](int x) { return t(top, x) == b(x, top); },
      [&](int x) { return std::pair{t(top, x), b(x, top)}; });
  sw.binary(
      "below-own-equalities", n,
      [&](int x, int y) { return !le(x, y) || (le(x, t(x, y)) && le(x, b(y, x))); },
      [&](int x, int y) { return std::pair{t(x, y), b(y, x)}; });
  sw.binary(
      "tilde-top-reflect", n,
      [&](int x, int y) {
        return le(t(x, y), t(top, t(y, x))) && le(b(x, y), t(top, b(y, x)));
      },
      [&](int x, int y) { return std::pair{t(x, y), t(top, t(y, x))}; });
  sw.binary(
      "below-meet-equalities", n,
      [&](int x, int y) { return le(y, t(m(x, y), x)) && le(y, b(x, m(x, y))); },
      [&](int x, int y) { return std::pair{t(m(x, y), x), b(x, m(x, y))}; });
  sw.binary(
      "left-below-cross", n,
      [&](int x, int y) {
        return le(x, b(t(m(x, y), x), y)) && le(x, t(y, b(x, m(x, y))));
      },
      [&](int x, int y) { return std::pair{b(t(m(x, y), x), y), t(y, b(x, m(x, y)))}; });
  sw.binary(
      "right-below-cross", n,
      [&](int x, int y) {
        return le(y, b(t(m(x, y), x), y)) && le(y, t(y, b(x, m(x, y))));
      },
      [&](int x, int y) { return std::pair{b(t(m(x, y), x), y), t(y, b(x, m(x, y)))}; });
  sw.binary(
      "tilde-meet-tighten", n,
      [&](int x, int y) { return le(t(x, y), t(m(x, y), y)) && le(b(x, y), b(x, m(x, y))); },
      [&](int x, int y) { return std::pair{t(x, y), t(m(x, y), y)}; });
  sw.ternary(
      "upper-restrict-antitone", n,
      [&](int x, int y, int z) {
        if (!le(x, y)) return true;
        return le(t(m(y, z), y), t(m(x, z), x)) && le(b(y, m(y, z)), b(x, m(x, z)));
      },
      [&](int x, int y, int z) {
        return std::pair{t(m(y, z), y), t(m(x, z), x)};
      });
  sw.ternary(
      "lower-restrict-monotone", n,
      [&](int x, int y, int z) {
        if (!le(x, y)) return true;
        return le(t(m(z, x), z), t(m(z, y), z)) && le(b(z, m(z, x)), b(z, m(z, y)));
      },
      [&](int x, int y, int z) {
        return std::pair{t(m(z, x), z), t(m(z, y), z)};
      });
  sw.binary(
      "tilde-cross-identity", n,
      [&](int x, int y) { return t(y, b(t(m(x, y), x), y)) == t(m(x, y), x); },
      [&](int x, int y) { return std::pair{t(y, b(t(m(x, y), x), y)), t(m(x, y), x)}; });
  sw.binary(
      "btilde-cross-identity", n,
      [&](int x, int y) { return b(t(y, b(x, m(x, y))), y) == b(x, m(x, y)); },
      [&](int x, int y) { return std::pair{b(t(y, b(x, m(x, y))), y), b(x, m(x, y))}; });

  return report;
}

FiniteEqAlgebra product(const FiniteEqAlgebra& a1, const FiniteEqAlgebra& a2) {
  const int n1 = a1.n(), n2 = a2.n();
  if (n1 * n2 > max_carrier_size())
    fail(Errc::size_bound_exceeded,
         "product has " + std::to_string(n1 * n2) + " elements, bound is " +
             std::to_string(max_carrier_size()));

  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n1) * n2);
  for (int x = 0; x < n1; ++x)
    for (int y = 0; y < n2; ++y)
      names.push_back(a1.carrier.name(x) + "|" + a2.carrier.name(y));

  auto pack = [&](int x, int y) { return x * n2 + y; };
  const int n = n1 * n2;
  BinTable meet(n), tilde(n), btilde(n);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 = 0; y1 < n1; ++y1)
        for (int y2 = 0; y2 < n2; ++y2) {
          const int p = pack(x1, x2), q = pack(y1, y2);
          meet.at(p, q) = pack(a1.meet(x1, y1), a2.meet(x2, y2));
          tilde.at(p, q) = pack(a1.tilde(x1, y1), a2.tilde(x2, y2));
          btilde.at(p, q) = pack(a1.btilde(x1, y1), a2.btilde(x2, y2));
        }

  Carrier c;
  c.names = std::move(names);
  c.top = pack(a1.top(), a2.top());
  return assemble_algebra(std::move(c), std::move(meet), std::move(tilde),
                          std::move(btilde));
}

}  // namespace peqa
