#include "peqa/carrier.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace peqa {

namespace {
std::atomic<int> g_max_carrier{12};
}

int max_carrier_size() { return g_max_carrier.load(); }
void set_max_carrier_size(int n) { g_max_carrier.store(n); }

int Carrier::index_of(std::string_view token) const {
  for (int i = 0; i < size(); ++i)
    if (names[static_cast<size_t>(i)] == token) return i;
  return -1;
}

Carrier make_carrier(std::vector<std::string> names, std::string_view top_token) {
  if (names.empty()) fail(Errc::bad_table_shape, "carrier must be nonempty");
  if (static_cast<int>(names.size()) > max_carrier_size())
    fail(Errc::size_bound_exceeded,
         "carrier has " + std::to_string(names.size()) + " elements, bound is " +
             std::to_string(max_carrier_size()));
  for (const auto& t : names) {
    if (t.empty()) fail(Errc::unknown_token, "empty element token");
    for (char c : t)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '#')
        fail(Errc::unknown_token, "token '" + t + "' contains whitespace or '#'");
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        fail(Errc::duplicate_element, "duplicate element token '" + names[i] + "'");

  Carrier c;
  c.names = std::move(names);
  c.top = c.index_of(top_token);
  if (c.top < 0)
    fail(Errc::unknown_token, "top token '" + std::string(top_token) + "' not declared");
  return c;
}

BinTable BinTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  BinTable t(n);
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[static_cast<size_t>(x)].size()) != n)
      fail(Errc::bad_table_shape, "table row " + std::to_string(x) + " has " +
                                      std::to_string(rows[static_cast<size_t>(x)].size()) +
                                      " entries, expected " + std::to_string(n));
    for (int y = 0; y < n; ++y) {
      const int v = rows[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (v < 0 || v >= n)
        fail(Errc::bad_table_shape, "table entry out of range at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
      t.at(x, y) = v;
    }
  }
  return t;
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool mask_less(const SubsetMask& a, const SubsetMask& b) {
  const int pa = a.popcount(), pb = b.popcount();
  if (pa != pb) return pa < pb;
  return a.indices() < b.indices();
}

UnaryOperator UnaryOperator::identity(int n) {
  UnaryOperator u;
  u.map.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) u.map[static_cast<size_t>(i)] = i;
  return u;
}

UnaryOperator UnaryOperator::constant(int n, int value) {
  UnaryOperator u;
  u.map.assign(static_cast<size_t>(n), value);
  return u;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::bad_table_shape: return "BadTableShape";
    case Errc::unknown_token: return "UnknownToken";
    case Errc::not_a_semilattice: return "NotASemilattice";
    case Errc::top_not_greatest: return "TopNotGreatest";
    case Errc::size_bound_exceeded: return "SizeBoundExceeded";
    case Errc::precondition_pc_failed: return "PreconditionPCFailed";
    case Errc::meet_ill_defined: return "MeetIllDefined";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_compatible: return "NotCompatible";
    case Errc::not_a_morphism_on_reg: return "NotAMorphismOnReg";
    case Errc::point_not_fixed: return "PointNotFixed";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::point_is_top: return "PointIsTop";
    case Errc::bad_length: return "BadLength";
    case Errc::out_of_box: return "OutOfBox";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::unknown_property: return "UnknownProperty";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::shape_error: return "ShapeError";
  }
  return "Error";
}

}  // namespace peqa
