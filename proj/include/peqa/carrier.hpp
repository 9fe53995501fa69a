#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peqa/error.hpp"

namespace peqa {

// Carrier sizes are capped so exhaustive sweeps stay trivially fast.
int max_carrier_size();
void set_max_carrier_size(int n);

// Ordered list of element tokens plus the index of the top element.
// Element indices follow input order; every report that names a "first"
// witness means the lexicographically least index tuple.
struct Carrier {
  std::vector<std::string> names;
  int top = 0;

  int size() const { return static_cast<int>(names.size()); }
  const std::string& name(int i) const { return names[static_cast<size_t>(i)]; }
  int index_of(std::string_view token) const;

  bool operator==(const Carrier&) const = default;
};

// Validates tokens (distinct, nonempty, no whitespace/'#') and the top token.
Carrier make_carrier(std::vector<std::string> names, std::string_view top_token);

// n x n table of element indices; row = left argument, column = right argument.
class BinTable {
public:
  BinTable() = default;
  explicit BinTable(int n, int fill = 0)
      : n_(n), cells_(static_cast<size_t>(n) * static_cast<size_t>(n), fill) {}

  static BinTable from_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int operator()(int x, int y) const {
    return cells_[static_cast<size_t>(x) * n_ + static_cast<size_t>(y)];
  }
  int& at(int x, int y) {
    return cells_[static_cast<size_t>(x) * n_ + static_cast<size_t>(y)];
  }
  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const BinTable&) const = default;

private:
  int n_ = 0;
  std::vector<int> cells_;
};

// Subset of a carrier as a bitmask. Carriers are capped well below 32.
struct SubsetMask {
  uint32_t bits = 0;
  int n = 0;

  static SubsetMask empty(int n) { return SubsetMask{0, n}; }
  static SubsetMask full(int n) {
    return SubsetMask{n >= 32 ? ~0u : ((1u << n) - 1u), n};
  }
  static SubsetMask of(std::initializer_list<int> xs, int n_) {
    SubsetMask m{0, n_};
    for (int x : xs) m.insert(x);
    return m;
  }

  bool contains(int i) const { return (bits >> i) & 1u; }
  void insert(int i) { bits |= 1u << i; }
  void erase(int i) { bits &= ~(1u << i); }
  int popcount() const { return __builtin_popcount(bits); }
  bool subset_of(const SubsetMask& other) const {
    return (bits & ~other.bits) == 0;
  }
  std::vector<int> indices() const;

  bool operator==(const SubsetMask&) const = default;
};

// Orders masks by (popcount, lexicographic index list).
bool mask_less(const SubsetMask& a, const SubsetMask& b);

// Total self-map of the carrier as a table.
struct UnaryOperator {
  std::vector<int> map;

  static UnaryOperator identity(int n);
  static UnaryOperator constant(int n, int value);

  int n() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[static_cast<size_t>(i)]; }

  bool operator==(const UnaryOperator&) const = default;
  bool operator<(const UnaryOperator& o) const { return map < o.map; }
};

// Shared shape for axiom/law/state reports: one entry per named check,
// carrying the least witness tuple and the two side values on failure.
struct Witness {
  std::array<int, 3> xyz{-1, -1, -1};
  int arity = 0;
  int lhs = -1;
  int rhs = -1;
  int part = 0;  // which sub-equation of the check fired
};

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  const CheckEntry* find(std::string_view name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
};

}  // namespace peqa
