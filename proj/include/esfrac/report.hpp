#pragma once

// JSON and CSV renderings of the library's result types. Key order is fixed
// (ordered_json) so identical inputs give byte-identical documents.

#include <span>
#include <string>

#include "json.hpp"

#include "esfrac/bounds.hpp"
#include "esfrac/decompose.hpp"
#include "esfrac/ntheory.hpp"
#include "esfrac/parametric.hpp"
#include "esfrac/sieve.hpp"

namespace esfrac::report {

using Json = nlohmann::ordered_json;

// Integers beyond 64 bits are written as decimal strings.
Json integer(u128 v);

Json to_json(const decompose::Decomposition& d);
Json to_json(const parametric::TypeIWitness& w);
Json to_json(const parametric::TypeIIWitness& w);
Json to_json(const ntheory::DivisorProfile& p);

// {"m": int, "limit": int, "count": int, "exceptions": [int...]}
Json to_json(const sieve::ExceptionList& list);
Json to_json(const sieve::CoverageReport& report);
Json to_json(const sieve::FinalThoughtsRow& row);

// Field names exactly m, N, Q, T, T1_coarse, T2_coarse, T1_precise,
// T2_precise, prime_lower, verdict.
Json to_json(const bounds::BoundReport& report);
Json to_json(const bounds::ScanRow& row);
Json to_json(const bounds::DivisorBoundTable& table);
Json to_json(const bounds::PrimeCountCheck& check);
Json to_json(const bounds::PartialSumAudit& audit);

// "m,limit,count,e1;e2;...".
std::string csv_row(const sieve::ExceptionList& list);
inline constexpr const char* kExceptionCsvHeader = "m,limit,count,exceptions";

// Parses rows written by csv_row (header lines are skipped by the caller).
sieve::ExceptionList parse_csv_row(const std::string& line);

std::string join(std::span<const u128> values, char sep);

}  // namespace esfrac::report
