#ifndef HOLO_REPORT_HPP
#define HOLO_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace holo {

// One row of an element-order census: how many elements of a given order a
// named group has. These are inputs carried alongside the computations,
// typically transcribed from character-table references.
struct OrderCountRecord {
  std::string group;
  std::size_t element_order = 0;
  std::uint64_t count = 0;

  friend bool operator==(const OrderCountRecord&,
                         const OrderCountRecord&) = default;
};

// CSV with the exact header `group,element_order,count`. Malformed lines
// and duplicate (group, order) keys raise UsageError with a line number.
std::vector<OrderCountRecord> ingest_order_counts(std::istream& in);
std::vector<OrderCountRecord> ingest_order_counts(const std::string& path);

// The twelve sporadic automorphism-group rows whose published count of
// regular copies is 2 * (1 + involutions in the simple group). Only the
// published totals ship here; involution counts are user inputs.
struct SporadicFixtureRow {
  std::string group;
  std::uint64_t expected;
};
const std::vector<SporadicFixtureRow>& sporadic_fixture();

struct SporadicTableRow {
  std::string group;
  bool have_data = false;
  std::uint64_t involutions = 0;  // ingested order-2 census value
  std::uint64_t computed = 0;     // 2 * (1 + involutions)
  std::uint64_t expected = 0;     // published total
  bool match = false;
};

struct SporadicTableComparison {
  std::vector<SporadicTableRow> rows;
  std::size_t with_data = 0;
  std::size_t matched = 0;
  bool all_match = false;  // every fixture row has data and matches
};

SporadicTableComparison reproduce_sporadic_table(
    const std::vector<OrderCountRecord>& records);

// Machine-readable outcome of a verification run: one claim per checked
// equality, stored so pass/fail can be re-derived from the values alone.
struct Claim {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct VerificationReport {
  std::string group;
  std::vector<Claim> claims;
  double timing_ms = 0.0;
  std::uint64_t budget = 0;

  bool all_pass() const;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

nlohmann::json report_to_json(const VerificationReport& rep);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace holo

#endif
