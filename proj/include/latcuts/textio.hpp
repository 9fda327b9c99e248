#pragma once

#include <string>
#include <string_view>

#include "latcuts/fuzzy.hpp"

namespace latcuts {

// Line-based text formats. '#' starts a comment, blank lines are
// skipped, tokens are [A-Za-z0-9_]+.
//
//   lattice   elements: <tok> <tok> ...        exactly once, first
//             cover: <tok> <tok>               zero or more, lower upper
//
//   family    universe: <tok> ...              exactly once, first
//             set: <tok> ...                   one per member; bare
//                                              "set:" is the empty set
//
//   fuzzy     domain: <tok> ...                exactly once, first
//             map: <x> -> <p>                  exactly once per domain
//                                              element
//
// Parsing validates all the way down: a lattice document must pass
// complete-lattice validation, family members must live inside the
// universe, grades must name carrier elements.

Lattice parse_lattice(std::string_view text,
                      std::size_t carrier_cap = kDefaultCarrierCap);
SetFamily parse_family(std::string_view text);
FuzzySet parse_fuzzy(std::string_view text, const Lattice& lattice);

std::string render_lattice(const Lattice& l);
std::string render_family(const SetFamily& f);
std::string render_fuzzy(const FuzzySet& mu);

}  // namespace latcuts
