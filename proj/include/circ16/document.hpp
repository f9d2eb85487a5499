#pragma once

#include "circ16/circulant.hpp"
#include "circ16/classifier.hpp"
#include "circ16/oracle.hpp"
#include "circ16/properties.hpp"
#include "circ16/witness_plan.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace circ16 {

/// Output documents use JSON with deterministic key order; every integer is
/// carried as an exact decimal string so arbitrary precision survives the
/// round trip, and identical inputs render byte-identically.
using Json = nlohmann::ordered_json;

std::string int_str(const Int& v);
Int parse_int(const std::string& s);  // throws std::invalid_argument

Json json_vector(std::span<const Int> v);
Json json_vector(const Vec16& v);
Json json_gaussian(const GaussianInt& g);
Json json_norms(const NormFactorization& nf);
Json json_verdict(const MembershipVerdict& verdict);
Json json_plan(const WitnessPlan& plan);
Json json_witness_certificate(const MembershipVerdict& verdict, const Vec16& vec);
Json json_spectrum(const SpectrumReport& report);
Json json_suites(const std::vector<SuiteResult>& suites);

/// Envelope shared by every command: schema_version, command, echoed inputs,
/// payload.
Json make_document(const std::string& command, Json inputs, Json result);

/// Re-check a witness certificate document: the vector's determinant must
/// equal the claimed value, and an attached plan must claim the same value.
/// Returns an empty string when valid, otherwise the failure description.
std::string check_witness_certificate(const Json& doc);

std::string render(const Json& doc, bool pretty);

}  // namespace circ16
