#pragma once

#include <string>

#include "json.hpp"
#include "peqa/bosbach.hpp"
#include "peqa/document.hpp"
#include "peqa/search.hpp"

namespace peqa {

using Json = nlohmann::ordered_json;

std::string token_or_dash(const Carrier& c, int idx);
std::string witness_text(const Carrier& c, const Witness& w);

// "<name>: pass" / "<name>: FAIL at (...): lhs=.. rhs=.." lines plus a
// summary line "<summary>: pass|FAIL".
std::string check_report_text(const CheckReport& r, const Carrier& c,
                              const std::string& summary);
Json check_report_json(const CheckReport& r, const Carrier& c);

std::string mask_text(const SubsetMask& m, const Carrier& c);
Json mask_json(const SubsetMask& m, const Carrier& c);

std::string operator_text(const UnaryOperator& op, const Carrier& c);
Json operator_json(const UnaryOperator& op, const Carrier& c);

std::string props_text(const PropertyFlags& f, bool simple, const Carrier& c);
Json props_json(const PropertyFlags& f, bool simple, const Carrier& c);

std::string ds_status_text(const DsStatus& s);
Json ds_status_json(const DsStatus& s, const Carrier& c);

std::string partition_text(const CongruenceRelation& rel, const Carrier& c);

std::string conditions_text(const BckConditionReport& r, const Carrier& c);
Json conditions_json(const BckConditionReport& r, const Carrier& c);

std::string roundtrip_text(const RoundtripReport& r);
Json roundtrip_json(const RoundtripReport& r);

// Affine rendering of one coordinate: "c", "u1", "1 - u1", "1/2 + u2", ...
std::string affine_coordinate_text(const BosbachSolutionSpace& s, int coordinate);
std::string bosbach_text(const BosbachSolutionSpace& s, const Carrier& c);
Json bosbach_json(const BosbachSolutionSpace& s, const Carrier& c);

std::string correspondence_text(const CorrespondenceReport& r, const Carrier& c);
Json correspondence_json(const CorrespondenceReport& r, const Carrier& c);

Json document_json(const AlgebraDocument& doc);

}  // namespace peqa
