// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Usage: peqa_acceptance <fixtures-dir> <cli-binary>.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "peqa/bosbach.hpp"
#include "peqa/render.hpp"

using namespace peqa;

namespace {

std::string g_fixtures;
std::string g_cli;
int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    res.output.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<FiniteEqAlgebra> all_models_upto(int max_size) {
  std::vector<FiniteEqAlgebra> out;
  for (int size = 1; size <= max_size; ++size) {
    SearchSpec spec{size, {"pseudo-eq"}, {}, 0, 2};
    for (FiniteEqAlgebra& a : enumerate_models(spec)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: peqa_acceptance <fixtures-dir> <cli-binary>\n";
    return 2;
  }
  g_fixtures = argv[1];
  g_cli = argv[2];

  const std::string b_file = g_fixtures + "/B.eqa";
  const std::string a_file = g_fixtures + "/A.eqa";
  const std::string c_file = g_fixtures + "/C.eqa";

  criterion(1, "diamond validates, classifies and round-trips", [&](std::string& why) {
    FiniteEqAlgebra b = fixtures::diamond_b();
    if (!verify_axioms(b).all_pass()) {
      why = "axioms fail";
      return false;
    }
    PropertyFlags f = classify(b);
    if (!(f.bounded && f.invariant && f.commutative && f.symmetric)) {
      why = "flags wrong";
      return false;
    }
    RoundtripReport r = roundtrip_report(b);
    if (!(r.psi_phi_psi_equal && r.phi_psi_equal)) {
      why = "roundtrip wrong";
      return false;
    }
    CliResult v = run_cli("validate " + b_file);
    if (v.exit_code != 0 || v.output.find("A1-A7: pass") == std::string::npos) {
      why = "cli validate: exit " + std::to_string(v.exit_code);
      return false;
    }
    CliResult pr = run_cli("props " + b_file);
    for (const char* want :
         {"bounded: true", "invariant: true", "commutative: true",
          "symmetric: true"})
      if (pr.output.find(want) == std::string::npos) {
        why = std::string("props missing '") + want + "'";
        return false;
      }
    CliResult rt = run_cli("roundtrip " + b_file);
    return rt.exit_code == 0 &&
           rt.output.find("phi-psi equals input: true") != std::string::npos;
  });

  criterion(2, "diamond deductive systems are {1},{a,1},{b,1},B, all normal",
            [&](std::string& why) {
    FiniteEqAlgebra b = fixtures::diamond_b();
    std::vector<SubsetMask> ds = enumerate_ds(b);
    const std::vector<SubsetMask> expect = {
        SubsetMask::of({3}, 4), SubsetMask::of({1, 3}, 4),
        SubsetMask::of({2, 3}, 4), SubsetMask::full(4)};
    if (ds != expect) {
      why = "wrong system list";
      return false;
    }
    if (enumerate_ds(b, true) != expect) {
      why = "not all normal";
      return false;
    }
    CliResult r = run_cli("ds " + b_file);
    if (r.exit_code != 0 || r.output.find("count: 4") == std::string::npos) {
      why = "cli ds count";
      return false;
    }
    for (const char* line : {"{1}: ds normal", "{a,1}: ds normal",
                             "{b,1}: ds normal", "{0,a,b,1}: ds normal"})
      if (r.output.find(line) == std::string::npos) {
        why = std::string("cli ds missing '") + line + "'";
        return false;
      }
    return true;
  });

  criterion(3, "diamond state sets are the six operators, byte-stable",
            [&](std::string& why) {
    const std::vector<UnaryOperator> expect = {
        UnaryOperator{{0, 0, 3, 3}}, UnaryOperator{{0, 1, 2, 3}},
        UnaryOperator{{0, 3, 0, 3}}, UnaryOperator{{1, 1, 3, 3}},
        UnaryOperator{{2, 3, 2, 3}}, UnaryOperator{{3, 3, 3, 3}}};
    FiniteEqAlgebra b = fixtures::diamond_b();
    if (enumerate_states(b, StateKind::type_i) != expect ||
        enumerate_states(b, StateKind::type_ii) != expect ||
        enumerate_morphisms(b) != expect) {
      why = "library sets differ";
      return false;
    }
    const std::string first = run_cli("states " + b_file + " --kind I").output;
    if (first.find("count: 6") == std::string::npos) {
      why = "cli count wrong";
      return false;
    }
    for (const std::string& args :
         {std::string("states ") + b_file + " --kind I",
          std::string("--jobs 2 states ") + b_file + " --kind I",
          std::string("--jobs 4 states ") + b_file + " --kind I"}) {
      if (run_cli(args).output != first) {
        why = "output not byte-identical across jobs";
        return false;
      }
    }
    const std::string ii = run_cli("states " + b_file + " --kind II").output;
    const std::string sm = run_cli("morphisms " + b_file).output;
    if (ii.find("count: 6") == std::string::npos ||
        sm.find("count: 6") == std::string::npos) {
      why = "cli kind II / morphisms wrong";
      return false;
    }
    return run_cli("states " + b_file + " --kind II").output == ii &&
           run_cli("morphisms " + b_file).output == sm;
  });

  criterion(4, "self-inverse diamond: equality, not invariant, same psi image",
            [&](std::string& why) {
    FiniteEqAlgebra a = fixtures::diamond_a();
    PropertyFlags f = classify(a);
    if (!f.equality || f.invariant) {
      why = "flags wrong";
      return false;
    }
    RoundtripReport r = roundtrip_report(a);
    if (!r.psi_phi_psi_equal || r.phi_psi_equal) {
      why = "roundtrip wrong";
      return false;
    }
    if (!(psi(a) == psi(fixtures::diamond_b()))) {
      why = "psi images differ";
      return false;
    }
    CliResult pr = run_cli("props " + a_file);
    if (pr.output.find("equality: true") == std::string::npos ||
        pr.output.find("invariant: false") == std::string::npos) {
      why = "cli props wrong";
      return false;
    }
    CliResult rt = run_cli("roundtrip " + a_file);
    return rt.output.find("phi-psi equals input: false") != std::string::npos;
  });

  criterion(5, "identity on the chain: type I passes, type II fails at (a,b) with 1 vs b",
            [&](std::string& why) {
    FiniteEqAlgebra c = fixtures::chain_c();
    UnaryOperator id = UnaryOperator::identity(4);
    if (!check_state(c, id, StateKind::type_i).all_pass()) {
      why = "type I fails";
      return false;
    }
    StateReport r = check_state(c, id, StateKind::type_ii);
    if (r.all_pass()) {
      why = "type II passes";
      return false;
    }
    // the exhibited violation: pair (a,b), sides 1 and b
    auto [lhs, rhs] = state_axiom_sides(c, id, StateKind::type_ii, 1, 2, 0);
    if (lhs != 3 || rhs != 2) {
      why = "sides at (a,b) are not 1 vs b";
      return false;
    }
    CliResult ok = run_cli("check-state " + c_file + " --op-file " + g_fixtures +
                           "/identity.op --kind I");
    CliResult bad = run_cli("check-state " + c_file + " --op-file " + g_fixtures +
                            "/identity.op --kind II");
    return ok.exit_code == 0 && bad.exit_code == 1 &&
           bad.output.find("IS2': FAIL") != std::string::npos;
  });

  criterion(6, "exact Bosbach solutions at the three points, with BCK equality",
            [&](std::string& why) {
    FiniteEqAlgebra b = fixtures::diamond_b();
    {
      BosbachSolutionSpace s = solve_bosbach({b, 0});
      const Rational zero(0), one(1);
      if (s.dimension != 1 || !s.feasible) {
        why = "point 0 dimension";
        return false;
      }
      if (!(s.particular[0] == zero) || !(s.basis[0][0] == zero) ||
          !(s.particular[3] == one) || !(s.basis[0][3] == zero)) {
        why = "point 0 forced values";
        return false;
      }
      if (!((s.particular[1] + s.particular[2]) == one) ||
          !((s.basis[0][1] + s.basis[0][2]) == zero)) {
        why = "point 0 relation s(b) = 1 - s(a)";
        return false;
      }
      if (!(s.param_box[0].lo == zero) || !(s.param_box[0].hi == one)) {
        why = "point 0 box";
        return false;
      }
    }
    {
      BosbachSolutionSpace s = solve_bosbach({b, 1});
      if (s.dimension != 0 ||
          !(s.particular ==
            std::vector<Rational>{Rational(0), Rational(0), Rational(1), Rational(1)})) {
        why = "point a solution";
        return false;
      }
    }
    {
      BosbachSolutionSpace s = solve_bosbach({b, 2});
      if (s.dimension != 0 ||
          !(s.particular ==
            std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(1)})) {
        why = "point b solution";
        return false;
      }
    }
    for (int pt : {0, 1, 2}) {
      BckCompareReport r = bosbach_bck_compare({b, pt});
      if (!r.eqa_subset_of_bck || !r.spaces_equal) {
        why = "BCK spaces differ at point " + b.carrier.name(pt);
        return false;
      }
    }
    CliResult r = run_cli("bosbach " + b_file + " --point 0");
    if (r.output.find("dimension: 1") == std::string::npos ||
        r.output.find("s(b) = 1 - u1") == std::string::npos ||
        r.output.find("box: u1 in [0, 1]") == std::string::npos) {
      why = "cli bosbach rendering";
      return false;
    }
    CliResult cmp = run_cli("bosbach " + b_file + " --point 0 --compare-bck");
    return cmp.exit_code == 0 &&
           cmp.output.find("spaces equal: true") != std::string::npos;
  });

  criterion(7, "theorem sweep over every model of size <= 4", [&](std::string& why) {
    std::vector<FiniteEqAlgebra> models = all_models_upto(4);
    if (models.empty()) {
      why = "no models";
      return false;
    }
    for (const FiniteEqAlgebra& a : models) {
      if (!derived_law_suite(a).all_pass()) {
        why = "law suite violation";
        return false;
      }
      FiniteBckMs bm = psi(a);
      if (!verify_bck(bm).all_pass()) {
        why = "psi image fails";
        return false;
      }
      BckConditionReport cond = check_conditions(bm);
      if (!cond.pC) {
        why = "psi image lacks pC";
        return false;
      }
      if (cond.pD && !cond.pC) {
        why = "pD without pC";
        return false;
      }
      std::vector<UnaryOperator> st_i = enumerate_states(a, StateKind::type_i);
      std::vector<UnaryOperator> st_ii = enumerate_states(a, StateKind::type_ii);
      for (const UnaryOperator& sg : enumerate_morphisms(a))
        if (!check_state(a, sg, StateKind::type_i).all_pass()) {
          why = "morphism not a type I state";
          return false;
        }
      for (const std::vector<UnaryOperator>* set : {&st_i, &st_ii})
        for (const UnaryOperator& sg : *set) {
          KernelInfo info = kernel(a, sg);
          if (!info.status.is_ds) {
            why = "kernel not a deductive system";
            return false;
          }
          if (info.strong && !info.status.is_normal) {
            why = "strong kernel not normal";
            return false;
          }
        }
      for (const UnaryOperator& sg : st_i)
        if (!check_bck_state(bm, sg, StateKind::type_i).all_pass()) {
          why = "type I state fails SB on the psi image";
          return false;
        }
      for (const UnaryOperator& sg : st_ii)
        if (!check_bck_state(bm, sg, StateKind::type_ii).all_pass()) {
          why = "type II state fails SB' on the psi image";
          return false;
        }
      if (classify(a).commutative && st_i != st_ii) {
        why = "commutative model with different state types";
        return false;
      }
    }
    return true;
  });

  criterion(8, "search sanity: counts, claim witnesses", [&](std::string& why) {
    if (enumerate_models({1, {}, {}, 0, 1}).size() != 1) {
      why = "size 1 count";
      return false;
    }
    const size_t n2 = enumerate_models({2, {}, {}, 0, 1}).size();
    const size_t n3 = enumerate_models({3, {}, {}, 0, 1}).size();
    if (n2 != enumerate_models_unpruned(2).size() ||
        n3 != enumerate_models_unpruned(3).size()) {
      why = "pruned vs oracle mismatch";
      return false;
    }
    if (n2 != 2 || n3 != 9) {  // frozen regression constants
      why = "frozen counts changed: n2=" + std::to_string(n2) +
            " n3=" + std::to_string(n3);
      return false;
    }
    for (int size : {1, 2}) {
      SearchSpec s{size, {}, {}, 0, 1};
      if (find_counterexample(s, "IS_I != IS_II")) {
        why = "unexpected witness at size " + std::to_string(size);
        return false;
      }
    }
    SearchSpec s4{4, {}, {}, 0, 2};
    std::optional<FiniteEqAlgebra> w = find_counterexample(s4, "IS_I != IS_II");
    if (!w || w->n() != 4) {
      why = "no 4-element witness for the state-type claim";
      return false;
    }
    if (enumerate_states(*w, StateKind::type_i) ==
        enumerate_states(*w, StateKind::type_ii)) {
      why = "witness does not separate the state types";
      return false;
    }
    CliResult r = run_cli("search --size 4 --claim \"IS_I != IS_II\"");
    if (r.exit_code != 0 || r.output.find("witness:") == std::string::npos ||
        r.output.find("elements e0 e1 e2 e3") == std::string::npos) {
      why = "cli claim search failed";
      return false;
    }
    for (int size : {1, 2}) {
      CliResult none = run_cli("search --size " + std::to_string(size) +
                               " --claim \"IS_I != IS_II\"");
      if (none.exit_code != 0 ||
          none.output.find("witness: none") == std::string::npos) {
        why = "cli claim search not empty at size " + std::to_string(size);
        return false;
      }
    }
    return true;
  });

  criterion(9, "extension theorem sweep over all compatible pointed models <= 4",
            [&](std::string& why) {
    int checked = 0;
    for (const FiniteEqAlgebra& a : all_models_upto(4)) {
      for (int pt = 0; pt < a.n(); ++pt) {
        PointedEqAlgebra p{a, pt};
        if (!pointed_class(p).compatible) continue;
        SubsetMask reg = regular_elements(p);
        FiniteEqAlgebra sub = subalgebra(a, reg);
        std::vector<int> elems = reg.indices();
        std::vector<int> pos(static_cast<size_t>(a.n()), -1);
        for (size_t i = 0; i < elems.size(); ++i)
          pos[static_cast<size_t>(elems[i])] = static_cast<int>(i);
        for (const UnaryOperator& sub_sigma : enumerate_morphisms(sub)) {
          if (sub_sigma(pos[static_cast<size_t>(pt)]) != pos[static_cast<size_t>(pt)])
            continue;
          PartialOperator part;
          part.domain = reg;
          part.table.map.assign(static_cast<size_t>(a.n()), 0);
          for (size_t i = 0; i < elems.size(); ++i)
            part.table.map[static_cast<size_t>(elems[i])] =
                elems[static_cast<size_t>(sub_sigma(static_cast<int>(i)))];
          UnaryOperator ext = extend_morphism(p, part);
          if (!check_morphism(a, ext).all_pass()) {
            why = "extension is not a morphism";
            return false;
          }
          for (int x : elems)
            if (ext(x) != part.table.map[static_cast<size_t>(x)]) {
              why = "extension does not restrict to the input";
              return false;
            }
          ++checked;
        }
      }
    }
    if (checked == 0) {
      why = "no compatible pointed models found";
      return false;
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT")
            << " (" << (9 - g_failures) << "/9)\n";
  return g_failures == 0 ? 0 : 1;
}
