#pragma once

#include <stdexcept>
#include <string>

namespace peqa {

// Failure categories surfaced to callers. The CLI maps parse/shape problems
// to exit code 2 and semantic precondition failures to exit code 1.
enum class Errc {
  duplicate_element,
  bad_table_shape,
  unknown_token,
  not_a_semilattice,
  top_not_greatest,
  size_bound_exceeded,
  precondition_pc_failed,
  meet_ill_defined,
  not_normal,
  not_compatible,
  not_a_morphism_on_reg,
  point_not_fixed,
  not_a_morphism,
  point_is_top,
  bad_length,
  out_of_box,
  unknown_claim,
  unknown_property,
  syntax_error,
  shape_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace peqa
