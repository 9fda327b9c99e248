#pragma once

#include <stdexcept>
#include <string>

namespace latcuts {

// Failure conditions surfaced by the library. Every throwing operation
// documents which of these it can raise.
enum class Errc {
  duplicate_element,
  unknown_element,
  cyclic_covers,
  carrier_too_large,
  not_a_lattice,
  size_out_of_range,
  family_not_closed,
  not_in_s,
  witness_verification_failed,
  search_space_too_large,
  parse_error,
  unknown_member,
  duplicate_set,
  invalid_argument,
  internal_invariant,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace latcuts
