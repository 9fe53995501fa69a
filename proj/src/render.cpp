#include "peqa/render.hpp"

#include <sstream>

namespace peqa {

std::string token_or_dash(const Carrier& c, int idx) {
  if (idx < 0 || idx >= c.size()) return "-";
  return c.name(idx);
}

std::string witness_text(const Carrier& c, const Witness& w) {
  std::ostringstream out;
  out << "(";
  const char* vars[] = {"x", "y", "z"};
  for (int i = 0; i < w.arity; ++i) {
    if (i) out << ",";
    out << vars[i] << "=" << token_or_dash(c, w.xyz[static_cast<size_t>(i)]);
  }
  out << ")";
  if (w.part) out << " [part " << w.part << "]";
  out << ": lhs=" << token_or_dash(c, w.lhs) << " rhs=" << token_or_dash(c, w.rhs);
  return out.str();
}

std::string check_report_text(const CheckReport& r, const Carrier& c,
                              const std::string& summary) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << e.name << ": " << (e.pass ? "pass" : "FAIL");
    if (!e.pass && e.witness) out << " at " << witness_text(c, *e.witness);
    out << "\n";
  }
  out << summary << ": " << (r.all_pass() ? "pass" : "FAIL") << "\n";
  return out.str();
}

Json check_report_json(const CheckReport& r, const Carrier& c) {
  Json checks = Json::array();
  for (const auto& e : r.entries) {
    Json j;
    j["name"] = e.name;
    j["pass"] = e.pass;
    if (!e.pass && e.witness) {
      const Witness& w = *e.witness;
      Json wit;
      Json tuple = Json::array();
      for (int i = 0; i < w.arity; ++i)
        tuple.push_back(token_or_dash(c, w.xyz[static_cast<size_t>(i)]));
      wit["at"] = tuple;
      wit["part"] = w.part;
      wit["lhs"] = token_or_dash(c, w.lhs);
      wit["rhs"] = token_or_dash(c, w.rhs);
      j["witness"] = wit;
    }
    checks.push_back(j);
  }
  Json out;
  out["checks"] = checks;
  out["all_pass"] = r.all_pass();
  return out;
}

std::string mask_text(const SubsetMask& m, const Carrier& c) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i : m.indices()) {
    if (!first) out << ",";
    out << c.name(i);
    first = false;
  }
  out << "}";
  return out.str();
}

Json mask_json(const SubsetMask& m, const Carrier& c) {
  Json arr = Json::array();
  for (int i : m.indices()) arr.push_back(c.name(i));
  return arr;
}

std::string operator_text(const UnaryOperator& op, const Carrier& c) {
  std::ostringstream out;
  for (int i = 0; i < op.n(); ++i) {
    if (i) out << " ";
    out << c.name(i) << "->" << c.name(op(i));
  }
  return out.str();
}

Json operator_json(const UnaryOperator& op, const Carrier& c) {
  Json j = Json::object();
  for (int i = 0; i < op.n(); ++i) j[c.name(i)] = c.name(op(i));
  return j;
}

std::string props_text(const PropertyFlags& f, bool simple, const Carrier& c) {
  std::ostringstream out;
  out << "bounded: " << (f.bounded ? "true" : "false");
  if (f.bounded) out << " (bottom = " << c.name(f.bottom) << ")";
  out << "\n";
  out << "linear: " << (f.linear ? "true" : "false") << "\n";
  out << "symmetric: " << (f.symmetric ? "true" : "false") << "\n";
  out << "invariant: " << (f.invariant ? "true" : "false") << "\n";
  out << "commutative: " << (f.commutative ? "true" : "false") << "\n";
  out << "equality: " << (f.equality ? "true" : "false") << "\n";
  out << "simple: " << (simple ? "true" : "false") << "\n";
  return out.str();
}

Json props_json(const PropertyFlags& f, bool simple, const Carrier& c) {
  Json j;
  j["bounded"] = f.bounded;
  if (f.bounded) j["bottom"] = c.name(f.bottom);
  j["linear"] = f.linear;
  j["symmetric"] = f.symmetric;
  j["invariant"] = f.invariant;
  j["commutative"] = f.commutative;
  j["equality"] = f.equality;
  j["simple"] = simple;
  return j;
}

std::string ds_status_text(const DsStatus& s) {
  std::ostringstream out;
  out << (s.is_ds ? "ds" : "not-ds");
  if (s.is_ds) {
    if (s.is_normal) out << " normal";
    if (s.is_closed) out << " closed";
    if (s.is_proper) out << " proper";
    if (s.is_maximal) out << " maximal";
  }
  if (!s.ds3_prime_agrees) out << " [detachment-variant-disagrees]";
  return out.str();
}

Json ds_status_json(const DsStatus& s, const Carrier& c) {
  (void)c;
  Json j;
  j["is_ds"] = s.is_ds;
  j["is_normal"] = s.is_normal;
  j["is_closed"] = s.is_closed;
  j["is_proper"] = s.is_proper;
  j["is_maximal"] = s.is_maximal;
  j["ds3_prime_agrees"] = s.ds3_prime_agrees;
  return j;
}

std::string partition_text(const CongruenceRelation& rel, const Carrier& c) {
  std::ostringstream out;
  bool first_block = true;
  for (const auto& block : rel.blocks()) {
    if (!first_block) out << " ";
    out << "{";
    for (size_t i = 0; i < block.size(); ++i)
      out << (i ? "," : "") << c.name(block[i]);
    out << "}";
    first_block = false;
  }
  return out.str();
}

std::string conditions_text(const BckConditionReport& r, const Carrier& c) {
  std::ostringstream out;
  out << "pC: " << (r.pC ? "holds" : "fails");
  if (!r.pC && r.pC_witness) out << " at " << witness_text(c, *r.pC_witness);
  out << "\n";
  out << "pD: " << (r.pD ? "holds" : "fails") << "\n";
  out << "pP: " << (r.pP ? "holds" : "fails") << "\n";
  if (r.pP && r.prod) {
    out << "prod\n";
    for (int x = 0; x < r.prod->n(); ++x) {
      for (int y = 0; y < r.prod->n(); ++y)
        out << (y ? " " : "") << c.name((*r.prod)(x, y));
      out << "\n";
    }
  }
  out << "commutative: " << (r.commutative ? "true" : "false") << "\n";
  out << "linear: " << (r.linear ? "true" : "false") << "\n";
  return out.str();
}

Json conditions_json(const BckConditionReport& r, const Carrier& c) {
  Json j;
  j["pC"] = r.pC;
  j["pD"] = r.pD;
  j["pP"] = r.pP;
  if (r.pP && r.prod) {
    Json rows = Json::array();
    for (int x = 0; x < r.prod->n(); ++x) {
      Json row = Json::array();
      for (int y = 0; y < r.prod->n(); ++y) row.push_back(c.name((*r.prod)(x, y)));
      rows.push_back(row);
    }
    j["prod"] = rows;
  }
  j["commutative"] = r.commutative;
  j["linear"] = r.linear;
  return j;
}

std::string roundtrip_text(const RoundtripReport& r) {
  std::ostringstream out;
  out << "psi-phi-psi fixed: " << (r.psi_phi_psi_equal ? "true" : "false") << "\n";
  out << "phi-psi equals input: " << (r.phi_psi_equal ? "true" : "false") << "\n";
  out << "invariant: " << (r.invariant_flag ? "true" : "false") << "\n";
  return out.str();
}

Json roundtrip_json(const RoundtripReport& r) {
  Json j;
  j["psi_phi_psi_equal"] = r.psi_phi_psi_equal;
  j["phi_psi_equal"] = r.phi_psi_equal;
  j["invariant"] = r.invariant_flag;
  return j;
}

std::string affine_coordinate_text(const BosbachSolutionSpace& s, int coordinate) {
  std::ostringstream out;
  const Rational& cst = s.particular[static_cast<size_t>(coordinate)];
  bool emitted = false;
  if (!cst.is_zero()) {
    out << cst.str();
    emitted = true;
  }
  for (size_t j = 0; j < s.basis.size(); ++j) {
    const Rational& q = s.basis[j][static_cast<size_t>(coordinate)];
    if (q.is_zero()) continue;
    Rational mag = q;
    const bool neg = q < Rational(0);
    if (neg) mag = -q;
    if (emitted)
      out << (neg ? " - " : " + ");
    else if (neg)
      out << "-";
    if (!(mag == Rational(1))) out << mag.str() << " ";
    out << "u" << (j + 1);
    emitted = true;
  }
  if (!emitted) out << "0";
  return out.str();
}

std::string bosbach_text(const BosbachSolutionSpace& s, const Carrier& c) {
  std::ostringstream out;
  if (!s.consistent) {
    out << "no solutions (inconsistent system)\n";
    return out.str();
  }
  out << "dimension: " << s.dimension << "\n";
  for (int i = 0; i < s.nvars; ++i)
    out << "s(" << c.name(i) << ") = " << affine_coordinate_text(s, i) << "\n";
  for (size_t k = 0; k < s.param_box.size(); ++k) {
    const ParamInterval& iv = s.param_box[k];
    out << "box: u" << (k + 1) << " in ";
    if (iv.empty)
      out << "(empty)";
    else
      out << "[" << iv.lo.str() << ", " << iv.hi.str() << "]";
    out << "\n";
  }
  out << "feasible: " << (s.feasible ? "true" : "false") << "\n";
  return out.str();
}

Json bosbach_json(const BosbachSolutionSpace& s, const Carrier& c) {
  Json j;
  j["consistent"] = s.consistent;
  if (!s.consistent) return j;
  j["dimension"] = s.dimension;
  Json values = Json::object();
  for (int i = 0; i < s.nvars; ++i) {
    Json v;
    v["const"] = s.particular[static_cast<size_t>(i)].str();
    Json coeffs = Json::array();
    for (const auto& b : s.basis) coeffs.push_back(b[static_cast<size_t>(i)].str());
    v["coeffs"] = coeffs;
    v["text"] = affine_coordinate_text(s, i);
    values[c.name(i)] = v;
  }
  j["values"] = values;
  Json box = Json::array();
  for (const ParamInterval& iv : s.param_box) {
    Json b;
    b["empty"] = iv.empty;
    if (!iv.empty) {
      b["lo"] = iv.lo.str();
      b["hi"] = iv.hi.str();
    }
    box.push_back(b);
  }
  j["box"] = box;
  j["feasible"] = s.feasible;
  return j;
}

std::string correspondence_text(const CorrespondenceReport& r, const Carrier& c) {
  std::ostringstream out;
  auto set_line = [&](const char* name, const std::vector<UnaryOperator>& ops) {
    out << name << ": " << ops.size() << "\n";
    for (const auto& op : ops) out << "  " << operator_text(op, c) << "\n";
  };
  set_line("IS_I_EQA", r.is_i_eqa);
  set_line("IS_II_EQA", r.is_ii_eqa);
  set_line("SM_EQA", r.sm_eqa);
  set_line("IS_I_BCK", r.is_i_bck);
  set_line("IS_II_BCK", r.is_ii_bck);
  set_line("SM_BCK", r.sm_bck);
  for (const auto& inc : r.inclusions) {
    out << inc.name << ": " << (inc.holds ? "holds" : "FAILS")
        << (inc.asserted ? " (guaranteed)" : " (measured)");
    if (!inc.holds && inc.violator)
      out << " violator: " << operator_text(*inc.violator, c);
    out << "\n";
  }
  return out.str();
}

Json correspondence_json(const CorrespondenceReport& r, const Carrier& c) {
  Json j;
  auto set_json = [&](const std::vector<UnaryOperator>& ops) {
    Json arr = Json::array();
    for (const auto& op : ops) arr.push_back(operator_json(op, c));
    return arr;
  };
  j["IS_I_EQA"] = set_json(r.is_i_eqa);
  j["IS_II_EQA"] = set_json(r.is_ii_eqa);
  j["SM_EQA"] = set_json(r.sm_eqa);
  j["IS_I_BCK"] = set_json(r.is_i_bck);
  j["IS_II_BCK"] = set_json(r.is_ii_bck);
  j["SM_BCK"] = set_json(r.sm_bck);
  j["linear"] = r.linear;
  j["symmetric"] = r.symmetric;
  j["invariant"] = r.invariant;
  Json incs = Json::array();
  for (const auto& inc : r.inclusions) {
    Json i;
    i["name"] = inc.name;
    i["holds"] = inc.holds;
    i["asserted"] = inc.asserted;
    if (!inc.holds && inc.violator) i["violator"] = operator_json(*inc.violator, c);
    incs.push_back(i);
  }
  j["inclusions"] = incs;
  return j;
}

Json document_json(const AlgebraDocument& doc) {
  Json j;
  j["name"] = doc.name;
  j["kind"] = kind_name(doc.kind);
  j["elements"] = doc.elements;
  j["top"] = doc.top;
  if (doc.point) j["point"] = *doc.point;
  Json tables = Json::object();
  for (const char* t : {"meet", "tilde", "btilde", "arrow", "squig", "prod"}) {
    auto it = doc.tables.find(t);
    if (it == doc.tables.end()) continue;
    Json rows = Json::array();
    for (const auto& row : it->second) rows.push_back(row);
    tables[t] = rows;
  }
  j["tables"] = tables;
  return j;
}

}  // namespace peqa
