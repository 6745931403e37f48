#pragma once

#include "rado/conditions.hpp"
#include "rado/functional.hpp"
#include "rado/search.hpp"

#include <json.hpp>

#include <string>

namespace rado {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "rado-lab/report-v1";
inline constexpr const char* kToolVersion = "1.0.0";

/// Integers become JSON numbers when they fit in 64 bits, strings otherwise;
/// non-integral rationals become "p/q" strings.
Json to_json(const mpz_class& z);
Json to_json(const mpq_class& q);

Json to_json(const MultiIndex& alpha);
Json to_json(const Cell& cell);
Json to_json(const OrderedPartition& p);
Json to_json(const BrauerCertificate& c);
Json to_json(const CandidateFunctional& c);
Json to_json(const FilterResult& f);
Json to_json(const MonovariatePoly& q);
Json to_json(const PadicApprox& a);
Json to_json(const MaximalEntry& e);
Json to_json(const MinimalEntry& e);
Json to_json(const FamilyResult& f);
Json to_json(const AnalysisConfig& c);
Json to_json(const Verdict& v);
Json to_json(const Coloring& c);
Json to_json(const SolutionInstance& s);
Json to_json(const ConfigWitness& w);

/// Inverse of to_json(Coloring). Throws std::invalid_argument on bad rules.
Coloring coloring_from_json(const Json& j);

/// Top-level envelope: schema, tool, command, input.
Json report_envelope(const std::string& command, const std::string& source, const IntPolynomial* p);

}  // namespace rado
