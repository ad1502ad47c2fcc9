#pragma once

#include <string>
#include <string_view>

#include "smp/core.hpp"

namespace smp {

/// Parses the canonical profile text format:
///
///   n=3
///   m 1: 1 2 3
///   ...
///   w 3: 2 1 3
///
/// "#" starts a comment line; indices are 1-based, most preferred first.
/// A JSON mirror {"n":..., "men":[[...]], "women":[[...]]} is accepted as
/// well (detected by a leading '{'). Throws ParseError with a line number.
Profile parse_profile(std::string_view text);

std::string serialize_profile(const Profile& p);
std::string profile_to_json(const Profile& p);

/// Text rendering "(m1,w1) (m2,w2) ..." in man-index order.
std::string format_matching(const Matching& mu);
std::string matching_to_json(const Matching& mu);
Matching matching_from_json(std::string_view text);

}  // namespace smp
