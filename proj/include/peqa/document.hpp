#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "peqa/bck.hpp"
#include "peqa/states.hpp"

namespace peqa {

enum class DocKind { eq, bck, hoop };

const char* kind_name(DocKind k);

// One textual format for all three structure kinds; which tables must be
// present depends on the kind (eq: meet+tilde+btilde, bck: meet+arrow+squig,
// hoop: prod+arrow+squig).
struct AlgebraDocument {
  std::string name;
  DocKind kind = DocKind::eq;
  std::vector<std::string> elements;
  std::string top;
  std::optional<std::string> point;
  std::map<std::string, std::vector<std::vector<std::string>>> tables;

  bool operator==(const AlgebraDocument&) const = default;
};

AlgebraDocument parse_document(const std::string& text);
std::string render_document(const AlgebraDocument& doc);

FiniteEqAlgebra eq_from_document(const AlgebraDocument& doc);
FiniteBckMs bck_from_document(const AlgebraDocument& doc);
FinitePseudoHoop hoop_from_document(const AlgebraDocument& doc);

AlgebraDocument document_from_eq(const FiniteEqAlgebra& a, const std::string& name,
                                 const std::optional<std::string>& point = {});
AlgebraDocument document_from_bck(const FiniteBckMs& b, const std::string& name,
                                  const std::optional<std::string>& point = {});

struct OperatorDocument {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;
};

OperatorDocument parse_operator_document(const std::string& text);
std::string render_operator_document(const OperatorDocument& doc);

// Resolves tokens against the carrier; every element must be mapped exactly once.
UnaryOperator operator_from_document(const OperatorDocument& doc, const Carrier& c);
OperatorDocument document_from_operator(const UnaryOperator& op, const Carrier& c,
                                        const std::string& name);

// Same, but entries may cover only part of the carrier; the domain mask
// records which elements were mapped.
PartialOperator partial_operator_from_document(const OperatorDocument& doc,
                                               const Carrier& c);

}  // namespace peqa
