// Canonical JSON documents for every command. Exact integers and rationals
// are serialized as decimal / "p/q" strings so nothing is rounded; floating
// values carry 17 significant digits. Layout and ordering are fixed, so a
// given input always produces byte-identical output.
#pragma once

#include <string>

#include "bounds.hpp"
#include "ci.hpp"
#include "identities.hpp"
#include "verify.hpp"

namespace folis::reports {

std::string chi_json(const CompleteIntersectionSpec& spec);
std::string polar_json(const CompleteIntersectionSpec& spec);
// forms_agree receives whether the three count forms coincided.
std::string count_json(const CompleteIntersectionSpec& spec, FoliationDegree d,
                       bool* forms_agree);
std::string bound_json(const CompleteIntersectionSpec& spec);
std::string identities_json(const identities::IdentitiesReport& report);
std::string verify_json(const verifier::VerifyOutcome& outcome, const std::string& source);

std::string format_double(double v);

}  // namespace folis::reports
