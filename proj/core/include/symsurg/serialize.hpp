#pragma once

#include "symsurg/lagrangian.hpp"
#include "symsurg/obstruction.hpp"
#include "symsurg/seifert.hpp"
#include "symsurg/surgery.hpp"

#include <string>

namespace symsurg {

// JSON manifests. Every document carries "schema": 1 and a "kind" tag.
// Integers travel as decimal strings and rationals as "n/d" strings, so
// nothing is clipped to 53 bits on the way through. Emission is
// deterministic: sorted keys, two-space indent, trailing newline. Parsers
// throw input_error on anything malformed.

std::string manifold_manifest(const ManifoldModel& m);
ManifoldModel manifold_from_json(const std::string& text);

std::string homology_manifest(const HomologyReport& r);

// Accepts a bare homology manifest, or any report that embeds one under a
// "results" or "homology" key. conditions/reasons may be omitted on input.
HomologyReport homology_from_json(const std::string& text);

std::string local_model_manifest(const LocalModel& lm);

std::string twist_manifest(const TwistResult& t);

std::string certificate_manifest(const KContactCertificate& c);

std::string verdict_manifest(const ObstructionVerdict& v);

std::string lagrangian_manifest(const LagrangianConfigReport& r);

} // namespace symsurg
