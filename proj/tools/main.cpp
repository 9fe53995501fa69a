#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "peqa/render.hpp"

using namespace peqa;

namespace {

struct Options {
  bool json = false;
  int jobs = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) fail(Errc::syntax_error, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraDocument load_document(const std::string& path) {
  return parse_document(slurp(path));
}

FiniteEqAlgebra load_eq(const std::string& path) {
  return eq_from_document(load_document(path));
}

UnaryOperator load_operator(const std::string& path, const Carrier& c) {
  return operator_from_document(parse_operator_document(slurp(path)), c);
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

SubsetMask mask_from_tokens(const std::string& csv, const Carrier& c) {
  SubsetMask m = SubsetMask::empty(c.size());
  for (const std::string& tok : split_csv(csv)) {
    const int i = c.index_of(tok);
    if (i < 0) fail(Errc::unknown_token, "undeclared token '" + tok + "'");
    m.insert(i);
  }
  return m;
}

void emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_normal:
    case Errc::not_compatible:
    case Errc::not_a_morphism_on_reg:
    case Errc::point_not_fixed:
    case Errc::not_a_morphism:
    case Errc::point_is_top:
    case Errc::precondition_pc_failed:
    case Errc::meet_ill_defined:
    case Errc::not_a_semilattice:
    case Errc::top_not_greatest:
      return 1;  // well-formed input failing a checked property
    default:
      return 2;  // unusable input
  }
}

int cmd_validate(const Options& opt, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  CheckReport report;
  Carrier carrier;
  std::string summary;
  switch (doc.kind) {
    case DocKind::eq: {
      FiniteEqAlgebra a = eq_from_document(doc);
      carrier = a.carrier;
      report = verify_axioms(a);
      summary = "A1-A7";
      break;
    }
    case DocKind::bck: {
      FiniteBckMs b = bck_from_document(doc);
      carrier = b.carrier;
      report = verify_bck(b);
      summary = "B1'-B6'";
      break;
    }
    case DocKind::hoop: {
      FinitePseudoHoop h = hoop_from_document(doc);
      carrier = h.carrier;
      report = verify_pseudo_hoop(h);
      summary = "PH1-PH5";
      break;
    }
  }
  Json j = check_report_json(report, carrier);
  j["summary"] = summary;
  emit(opt, j, check_report_text(report, carrier, summary));
  return report.all_pass() ? 0 : 1;
}

int cmd_props(const Options& opt, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  if (doc.kind == DocKind::eq) {
    FiniteEqAlgebra a = eq_from_document(doc);
    PropertyFlags f = classify(a);
    const bool simple = is_simple(a);
    emit(opt, props_json(f, simple, a.carrier), props_text(f, simple, a.carrier));
    return 0;
  }
  if (doc.kind == DocKind::bck) {
    FiniteBckMs b = bck_from_document(doc);
    BckConditionReport r = check_conditions(b);
    emit(opt, conditions_json(r, b.carrier), conditions_text(r, b.carrier));
    return 0;
  }
  fail(Errc::shape_error, "props expects an eq or bck document");
}

int cmd_laws(const Options& opt, const std::string& file) {
  FiniteEqAlgebra a = load_eq(file);
  LawReport r = derived_law_suite(a);
  emit(opt, check_report_json(r, a.carrier),
       check_report_text(r, a.carrier, "laws"));
  return r.all_pass() ? 0 : 1;
}

int cmd_psi(const Options& opt, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  FiniteBckMs b = psi(eq_from_document(doc));
  AlgebraDocument out = document_from_bck(b, doc.name, doc.point);
  emit(opt, document_json(out), render_document(out));
  return 0;
}

int cmd_phi(const Options& opt, const std::string& file) {
  AlgebraDocument doc = load_document(file);
  FiniteEqAlgebra a = phi(bck_from_document(doc));
  AlgebraDocument out = document_from_eq(a, doc.name, doc.point);
  emit(opt, document_json(out), render_document(out));
  return 0;
}

int cmd_roundtrip(const Options& opt, const std::string& file) {
  FiniteEqAlgebra a = load_eq(file);
  RoundtripReport r = roundtrip_report(a);
  emit(opt, roundtrip_json(r), roundtrip_text(r));
  return r.psi_phi_psi_equal && r.phi_psi_equal == r.invariant_flag ? 0 : 1;
}

int cmd_ds(const Options& opt, const std::string& file, bool normal_only) {
  FiniteEqAlgebra a = load_eq(file);
  std::vector<SubsetMask> ds = enumerate_ds(a, normal_only);
  Json arr = Json::array();
  std::ostringstream text;
  text << "count: " << ds.size() << "\n";
  for (const SubsetMask& d : ds) {
    DsStatus s = ds_status(a, d);
    Json j;
    j["set"] = mask_json(d, a.carrier);
    j["status"] = ds_status_json(s, a.carrier);
    arr.push_back(j);
    text << mask_text(d, a.carrier) << ": " << ds_status_text(s) << "\n";
  }
  Json j;
  j["count"] = ds.size();
  j["systems"] = arr;
  emit(opt, j, text.str());
  return 0;
}

int cmd_gen_ds(const Options& opt, const std::string& file, const std::string& from) {
  FiniteEqAlgebra a = load_eq(file);
  SubsetMask gen = generated_ds(a, mask_from_tokens(from, a.carrier));
  Json j;
  j["generated"] = mask_json(gen, a.carrier);
  emit(opt, j, mask_text(gen, a.carrier) + "\n");
  return 0;
}

int cmd_quotient(const Options& opt, const std::string& file, const std::string& ds) {
  AlgebraDocument doc = load_document(file);
  FiniteEqAlgebra a = eq_from_document(doc);
  Quotient q = quotient(a, mask_from_tokens(ds, a.carrier));
  AlgebraDocument out = document_from_eq(q.algebra, doc.name + "_quot");
  Json j = document_json(out);
  Json proj = Json::object();
  std::ostringstream text;
  text << render_document(out);
  for (int x = 0; x < a.n(); ++x) {
    const std::string to =
        q.algebra.carrier.name(q.projection[static_cast<size_t>(x)]);
    proj[a.carrier.name(x)] = to;
    text << a.carrier.name(x) << " -> " << to << "\n";
  }
  j["projection"] = proj;
  emit(opt, j, text.str());
  return 0;
}

int cmd_congruences(const Options& opt, const std::string& file) {
  FiniteEqAlgebra a = load_eq(file);
  CongruenceScan scan = congruences(a);
  Json arr = Json::array();
  std::ostringstream text;
  text << "count: " << scan.all.size() << "\n";
  for (const CongruenceRelation& rel : scan.all) {
    text << "partition: " << partition_text(rel, a.carrier) << "\n";
    Json blocks = Json::array();
    for (const auto& block : rel.blocks()) {
      Json bj = Json::array();
      for (int x : block) bj.push_back(a.carrier.name(x));
      blocks.push_back(bj);
    }
    arr.push_back(blocks);
  }
  text << "exhaustive: " << (scan.exhaustive ? "true" : "false") << "\n";
  text << "normal-ds bijection: " << (scan.bijection_holds ? "true" : "false")
       << "\n";
  Json j;
  j["count"] = scan.all.size();
  j["congruences"] = arr;
  j["exhaustive"] = scan.exhaustive;
  j["normal_ds_bijection"] = scan.bijection_holds;
  emit(opt, j, text.str());
  return 0;
}

int cmd_pointed(const Options& opt, const std::string& file, const std::string& point) {
  FiniteEqAlgebra a = load_eq(file);
  PointedEqAlgebra p = make_pointed(a, point);
  NegationTables t = negations(p);
  PointedClass cls = pointed_class(p);
  SubsetMask reg = regular_elements(p);

  std::ostringstream text;
  Json j;
  j["point"] = point;
  text << "point: " << point << "\n";
  auto table_line = [&](const char* name, const std::vector<int>& v) {
    std::ostringstream line;
    for (int x = 0; x < a.n(); ++x)
      line << (x ? " " : "") << a.carrier.name(x) << "->"
           << a.carrier.name(v[static_cast<size_t>(x)]);
    text << name << ": " << line.str() << "\n";
    Json tj = Json::object();
    for (int x = 0; x < a.n(); ++x)
      tj[a.carrier.name(x)] = a.carrier.name(v[static_cast<size_t>(x)]);
    j[name] = tj;
  };
  table_line("neg-tilde", t.tilde_neg);
  table_line("neg-btilde", t.btilde_neg);
  table_line("neg-arrow", t.arrow_neg);
  table_line("neg-squig", t.squig_neg);

  j["good_sim"] = cls.good_sim;
  j["good_arrow"] = cls.good_arrow;
  j["involutive_sim"] = cls.involutive_sim;
  j["involutive_arrow"] = cls.involutive_arrow;
  j["compatible"] = cls.compatible;
  text << "good-sim: " << (cls.good_sim ? "true" : "false") << "\n";
  text << "good-arrow: " << (cls.good_arrow ? "true" : "false") << "\n";
  text << "involutive-sim: " << (cls.involutive_sim ? "true" : "false") << "\n";
  text << "involutive-arrow: " << (cls.involutive_arrow ? "true" : "false") << "\n";
  text << "compatible: " << (cls.compatible ? "true" : "false") << "\n";

  if (cls.compatible) {
    ClosureResult g = gamma_closure(p);
    table_line("gamma", g.gamma.map);
    j["gamma_closure"] = g.extensive && g.monotone && g.idempotent;
    text << "gamma closure: "
         << ((g.extensive && g.monotone && g.idempotent) ? "true" : "false")
         << "\n";
  }
  j["regular"] = mask_json(reg, a.carrier);
  text << "regular: " << mask_text(reg, a.carrier) << "\n";
  emit(opt, j, text.str());
  return 0;
}

int cmd_states(const Options& opt, const std::string& file, const std::string& kind,
               bool strong) {
  FiniteEqAlgebra a = load_eq(file);
  if (kind != "I" && kind != "II")
    fail(Errc::syntax_error, "--kind must be I or II");
  const StateKind k = kind == "II" ? StateKind::type_ii : StateKind::type_i;
  std::vector<UnaryOperator> states = enumerate_states(a, k, opt.jobs);
  if (strong) {
    std::vector<UnaryOperator> kept;
    for (const UnaryOperator& sg : states)
      if (check_state(a, sg, k, /*strong=*/true).all_pass()) kept.push_back(sg);
    states = std::move(kept);
  }
  Json arr = Json::array();
  std::ostringstream text;
  text << "count: " << states.size() << "\n";
  for (const UnaryOperator& sg : states) {
    arr.push_back(operator_json(sg, a.carrier));
    text << "op: " << operator_text(sg, a.carrier) << "\n";
  }
  Json j;
  j["count"] = states.size();
  j["operators"] = arr;
  emit(opt, j, text.str());
  return 0;
}

int cmd_morphisms(const Options& opt, const std::string& file) {
  FiniteEqAlgebra a = load_eq(file);
  std::vector<UnaryOperator> ms = enumerate_morphisms(a, opt.jobs);
  Json arr = Json::array();
  std::ostringstream text;
  text << "count: " << ms.size() << "\n";
  for (const UnaryOperator& sg : ms) {
    arr.push_back(operator_json(sg, a.carrier));
    text << "op: " << operator_text(sg, a.carrier) << "\n";
  }
  Json j;
  j["count"] = ms.size();
  j["operators"] = arr;
  emit(opt, j, text.str());
  return 0;
}

int cmd_check_state(const Options& opt, const std::string& file,
                    const std::string& op_file, const std::string& kind,
                    bool strong) {
  FiniteEqAlgebra a = load_eq(file);
  if (kind != "I" && kind != "II")
    fail(Errc::syntax_error, "--kind must be I or II");
  UnaryOperator sg = load_operator(op_file, a.carrier);
  StateReport r = check_state(
      a, sg, kind == "II" ? StateKind::type_ii : StateKind::type_i, strong);
  emit(opt, check_report_json(r, a.carrier),
       check_report_text(r, a.carrier, "state"));
  return r.all_pass() ? 0 : 1;
}

int cmd_kernel(const Options& opt, const std::string& file,
               const std::string& op_file) {
  FiniteEqAlgebra a = load_eq(file);
  UnaryOperator sg = load_operator(op_file, a.carrier);
  KernelInfo info = kernel(a, sg);
  const bool extensive = is_extensive(a, sg);
  Json j;
  j["state_i"] = info.state_i;
  j["state_ii"] = info.state_ii;
  j["morphism"] = info.morphism;
  j["strong"] = info.strong;
  j["extensive"] = extensive;
  j["kernel"] = mask_json(info.kernel, a.carrier);
  j["status"] = ds_status_json(info.status, a.carrier);
  std::ostringstream text;
  text << "state-I: " << (info.state_i ? "true" : "false") << "\n";
  text << "state-II: " << (info.state_ii ? "true" : "false") << "\n";
  text << "morphism: " << (info.morphism ? "true" : "false") << "\n";
  text << "strong: " << (info.strong ? "true" : "false") << "\n";
  text << "extensive: " << (extensive ? "true" : "false") << "\n";
  text << "kernel: " << mask_text(info.kernel, a.carrier) << "\n";
  text << "kernel status: " << ds_status_text(info.status) << "\n";
  emit(opt, j, text.str());
  return 0;
}

int cmd_extend(const Options& opt, const std::string& file, const std::string& point,
               const std::string& op_file) {
  FiniteEqAlgebra a = load_eq(file);
  PointedEqAlgebra p = make_pointed(a, point);
  PartialOperator part =
      partial_operator_from_document(parse_operator_document(slurp(op_file)),
                                     a.carrier);
  UnaryOperator ext = extend_morphism(p, part);
  OperatorDocument out = document_from_operator(ext, a.carrier, "extended");
  Json j;
  j["operator"] = operator_json(ext, a.carrier);
  emit(opt, j, render_operator_document(out));
  return 0;
}

int cmd_bosbach(const Options& opt, const std::string& file, const std::string& point,
                bool compare_bck) {
  FiniteEqAlgebra a = load_eq(file);
  PointedEqAlgebra p = make_pointed(a, point);
  if (compare_bck) {
    BckCompareReport r = bosbach_bck_compare(p);
    Json j;
    j["eqa"] = bosbach_json(r.eqa, a.carrier);
    j["bck"] = bosbach_json(r.bck, a.carrier);
    j["eqa_subset_of_bck"] = r.eqa_subset_of_bck;
    j["spaces_equal"] = r.spaces_equal;
    j["equality_asserted"] = r.equality_asserted;
    std::ostringstream text;
    text << bosbach_text(r.eqa, a.carrier);
    text << "eqa subset of bck: " << (r.eqa_subset_of_bck ? "true" : "false")
         << "\n";
    text << "spaces equal: " << (r.spaces_equal ? "true" : "false") << "\n";
    text << "equality guaranteed: " << (r.equality_asserted ? "true" : "false")
         << "\n";
    emit(opt, j, text.str());
    return r.eqa_subset_of_bck && (!r.equality_asserted || r.spaces_equal) ? 0 : 1;
  }
  BosbachSolutionSpace s = solve_bosbach(p);
  emit(opt, bosbach_json(s, a.carrier), bosbach_text(s, a.carrier));
  return 0;
}

int cmd_check_bosbach(const Options& opt, const std::string& file,
                      const std::string& point, const std::string& values) {
  FiniteEqAlgebra a = load_eq(file);
  PointedEqAlgebra p = make_pointed(a, point);
  std::vector<Rational> v;
  for (const std::string& r : split_csv(values)) v.push_back(Rational::parse(r));
  BosbachCheck c = is_bosbach(p, v);
  Json j;
  j["ok"] = c.ok;
  std::ostringstream text;
  if (c.ok) {
    text << "bosbach: pass\n";
  } else {
    j["axiom"] = c.axiom;
    j["x"] = c.x >= 0 ? a.carrier.name(c.x) : "-";
    j["y"] = c.y >= 0 ? a.carrier.name(c.y) : "-";
    j["lhs"] = c.lhs.str();
    j["rhs"] = c.rhs.str();
    text << "bosbach: FAIL " << c.axiom << " at ("
         << (c.x >= 0 ? a.carrier.name(c.x) : "-") << ","
         << (c.y >= 0 ? a.carrier.name(c.y) : "-") << "): lhs=" << c.lhs.str()
         << " rhs=" << c.rhs.str() << "\n";
  }
  emit(opt, j, text.str());
  return c.ok ? 0 : 1;
}

int cmd_search(const Options& opt, int size, const std::vector<std::string>& require,
               const std::vector<std::string>& forbid, const std::string& claim,
               int limit) {
  SearchSpec spec{size, require, forbid, limit, opt.jobs};
  if (!claim.empty()) {
    std::optional<FiniteEqAlgebra> w = find_counterexample(spec, claim);
    Json j;
    std::ostringstream text;
    if (w) {
      AlgebraDocument doc = document_from_eq(*w, "witness");
      j["witness"] = document_json(doc);
      text << "witness:\n" << render_document(doc);
    } else {
      j["witness"] = nullptr;
      text << "witness: none\n";
    }
    emit(opt, j, text.str());
    return 0;
  }
  std::vector<FiniteEqAlgebra> models = enumerate_models(spec);
  Json arr = Json::array();
  std::ostringstream text;
  text << "count: " << models.size() << "\n";
  int i = 0;
  for (const FiniteEqAlgebra& a : models) {
    AlgebraDocument doc =
        document_from_eq(a, "m" + std::to_string(size) + "-" + std::to_string(++i));
    arr.push_back(document_json(doc));
    text << render_document(doc);
  }
  Json j;
  j["count"] = models.size();
  j["models"] = arr;
  emit(opt, j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pseudo equality algebra workbench"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--jobs", opt.jobs, "worker threads for enumerations")
      ->check(CLI::Range(1, 64));

  std::string file, point, op_file, kind = "I", from, ds_tokens, values, claim;
  bool normal_only = false, strong = false, compare_bck = false;
  int size = 0, limit = 0;

  auto* validate = app.add_subcommand("validate", "check the axiom system");
  validate->add_option("file", file)->required();

  auto* props = app.add_subcommand("props", "structural property flags");
  props->add_option("file", file)->required();

  auto* laws = app.add_subcommand("laws", "derived-law suite");
  laws->add_option("file", file)->required();

  auto* psi_cmd = app.add_subcommand("psi", "implication structure of an eq algebra");
  psi_cmd->add_option("file", file)->required();

  auto* phi_cmd = app.add_subcommand("phi", "equality structure of a pC bck algebra");
  phi_cmd->add_option("file", file)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "psi/phi round-trip report");
  roundtrip->add_option("file", file)->required();

  auto* ds = app.add_subcommand("ds", "enumerate deductive systems");
  ds->add_option("file", file)->required();
  ds->add_flag("--normal", normal_only, "normal systems only");

  auto* gen_ds = app.add_subcommand("gen-ds", "deductive system generated by a set");
  gen_ds->add_option("file", file)->required();
  gen_ds->add_option("--from", from, "comma-separated tokens")->required();

  auto* quot = app.add_subcommand("quotient", "quotient by a normal deductive system");
  quot->add_option("file", file)->required();
  quot->add_option("--ds", ds_tokens, "comma-separated tokens")->required();

  auto* cong = app.add_subcommand("congruences", "enumerate congruences");
  cong->add_option("file", file)->required();

  auto* pointed = app.add_subcommand("pointed", "point-relative structure");
  pointed->add_option("file", file)->required();
  pointed->add_option("--point", point)->required();

  auto* states = app.add_subcommand("states", "enumerate internal states");
  states->add_option("file", file)->required();
  states->add_option("--kind", kind, "I or II");
  states->add_flag("--strong", strong, "strong states only");

  auto* morphisms = app.add_subcommand("morphisms", "enumerate state-morphisms");
  morphisms->add_option("file", file)->required();

  auto* check_state_cmd = app.add_subcommand("check-state", "check one operator");
  check_state_cmd->add_option("file", file)->required();
  check_state_cmd->add_option("--op-file", op_file)->required();
  check_state_cmd->add_option("--kind", kind, "I or II");
  check_state_cmd->add_flag("--strong", strong);

  auto* kern = app.add_subcommand("kernel", "kernel of a state or morphism");
  kern->add_option("file", file)->required();
  kern->add_option("--op-file", op_file)->required();

  auto* extend = app.add_subcommand("extend", "extend a morphism of the regular part");
  extend->add_option("file", file)->required();
  extend->add_option("--point", point)->required();
  extend->add_option("--op-file", op_file)->required();

  auto* bosbach = app.add_subcommand("bosbach", "solve the state system exactly");
  bosbach->add_option("file", file)->required();
  bosbach->add_option("--point", point)->required();
  bosbach->add_flag("--compare-bck", compare_bck);

  auto* check_bosbach = app.add_subcommand("check-bosbach", "check one value vector");
  check_bosbach->add_option("file", file)->required();
  check_bosbach->add_option("--point", point)->required();
  check_bosbach->add_option("--values", values, "comma-separated rationals")
      ->required();

  std::vector<std::string> require, forbid;
  auto* search = app.add_subcommand("search", "enumerate models up to isomorphism");
  search->add_option("--size", size)->required();
  search->add_option("--require", require)->allow_extra_args(false);
  search->add_option("--forbid", forbid)->allow_extra_args(false);
  search->add_option("--claim", claim);
  search->add_option("--limit", limit);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt, file);
    if (props->parsed()) return cmd_props(opt, file);
    if (laws->parsed()) return cmd_laws(opt, file);
    if (psi_cmd->parsed()) return cmd_psi(opt, file);
    if (phi_cmd->parsed()) return cmd_phi(opt, file);
    if (roundtrip->parsed()) return cmd_roundtrip(opt, file);
    if (ds->parsed()) return cmd_ds(opt, file, normal_only);
    if (gen_ds->parsed()) return cmd_gen_ds(opt, file, from);
    if (quot->parsed()) return cmd_quotient(opt, file, ds_tokens);
    if (cong->parsed()) return cmd_congruences(opt, file);
    if (pointed->parsed()) return cmd_pointed(opt, file, point);
    if (states->parsed()) return cmd_states(opt, file, kind, strong);
    if (morphisms->parsed()) return cmd_morphisms(opt, file);
    if (check_state_cmd->parsed())
      return cmd_check_state(opt, file, op_file, kind, strong);
    if (kern->parsed()) return cmd_kernel(opt, file, op_file);
    if (extend->parsed()) return cmd_extend(opt, file, point, op_file);
    if (bosbach->parsed()) return cmd_bosbach(opt, file, point, compare_bck);
    if (check_bosbach->parsed())
      return cmd_check_bosbach(opt, file, point, values);
    if (search->parsed())
      return cmd_search(opt, size, require, forbid, claim, limit);
  } catch (const Error& e) {
    std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
