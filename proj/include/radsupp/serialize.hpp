#pragma once

// JSON records for verdicts and certificates (schema "radsupp/v1", see
// docs/schemas.md) and the replay routines that re-check them.

#include <string>

#include <json.hpp>

#include "radsupp/certify.hpp"

namespace radsupp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "radsupp/v1";

Json to_json(const Support& support);
Json to_json(const LabeledCycle& cycle);
Json to_json(const Support& support, const SupportVerdict& verdict);
Json to_json(const RingSpec& ring);
Json to_json(const RingSpec& ring, const TermOrder& order);
Json to_json(const IntPoly& k);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const WitnessVerification& v);
Json to_json(const NonRadicalWitness& w);
Json to_json(const RegularSequenceCert& cert);
Json to_json(const CSCertificate& cert);
Json to_json(const SupportTrial& trial);

Support support_from_json(const Json& j);
RingSpec ring_from_json(const Json& j);
TermOrder order_from_json(const RingSpec& ring, const Json& j);

/// Outcome of re-checking a serialized record.
struct ReplayReport {
  std::string kind;
  bool reproduced = false;
  std::string detail;
};

/// Dispatches on the record's "kind": recomputes the certificate from the
/// data it embeds (support, seeds, generators) and compares the result
/// byte-for-byte with the stored record.
ReplayReport replay(const Json& record);

}  // namespace radsupp
