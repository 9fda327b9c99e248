#include "latcuts/errors.hpp"

namespace latcuts {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_element: return "duplicate element";
    case Errc::unknown_element: return "unknown element";
    case Errc::cyclic_covers: return "cyclic covers";
    case Errc::carrier_too_large: return "carrier too large";
    case Errc::not_a_lattice: return "not a lattice";
    case Errc::size_out_of_range: return "size out of range";
    case Errc::family_not_closed: return "family not closed";
    case Errc::not_in_s: return "not a representing sublattice";
    case Errc::witness_verification_failed: return "witness verification failed";
    case Errc::search_space_too_large: return "search space too large";
    case Errc::parse_error: return "parse error";
    case Errc::unknown_member: return "unknown member";
    case Errc::duplicate_set: return "duplicate set";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::internal_invariant: return "internal invariant violation";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace latcuts
