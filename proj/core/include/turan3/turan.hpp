#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan3/search.hpp"

namespace turan3 {

// Known exact values from the literature on loose-path Turán numbers,
// kept as case-split formulas with descriptive tags. A computed value that
// matches a table row is cross-checked against it; disagreement throws.
enum class KnownTable {
    PathTuran,            // ex_3(n; P)
    CycleTuran,           // ex_3(n; C)
    MatchingTuran,        // ex_3(n; M)
    MatchingSecondOrder,  // ex^(2)_3(n; M), nontrivial intersecting families
    PathSecondOrder,      // ex^(2)_3(n; P)
    PathThirdOrder,       // ex^(3)_3(12; P)
    PathGivenCycle,       // ex_3(n; P | C)
    PathGivenMatching,    // ex_3(n; P | M)
    PathCycleGivenMatching,    // ex_3(n; {P,C} | M)
    PathCycleTwoPairGivenMatching, // ex_3(n; {P,C,P2uK3} | M)
};

std::optional<long long> known_value(KnownTable table, int n);
const char* known_tag(KnownTable table);

struct TuranQuery {
    int n = 0;
    std::vector<PatternId> forbidden;
    int order = 1;                        // s >= 2 excludes lower-order extremal graphs
    std::optional<RequiredSpec> conditional; // mutually exclusive with order >= 2
};

enum class ValueSource { Computed, Cited };

struct CertifiedValue {
    TuranQuery query;
    SearchStatus status = SearchStatus::NotDefined;
    long long value = -1;               // meaningful unless NotDefined/Infeasible
    ValueSource source = ValueSource::Computed;
    std::string citation;               // known-table tag when Cited
    std::vector<Hypergraph3> witnesses; // canonical, for Computed Exact
    bool witnesses_complete = false;    // enumerate_all succeeded untruncated
    long long nodes = 0;
    double elapsed_s = 0;
    std::optional<long long> cited_companion; // matching known value, if any
};

// Thrown when a computed exact value contradicts a known-table row.
struct CertifiedMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

CertifiedValue turan_number(int n, const std::vector<PatternId>& forbidden,
                            const SearchConfig& config = {});
CertifiedValue turan_number_order(int n, const std::vector<PatternId>& forbidden, int order,
                                  const SearchConfig& config = {});
CertifiedValue conditional_turan(int n, const std::vector<PatternId>& forbidden,
                                 const RequiredSpec& required, const SearchConfig& config = {});
CertifiedValue run_query(const TuranQuery& query, const SearchConfig& config = {});

// Cited-only lookup for the Ramsey deduction: value plus formula consistency.
std::optional<CertifiedValue> cited_value(KnownTable table, int n);

// ---- reproduction tables ---------------------------------------------------

enum class TableName { Ex1, Ex2, Ex3, Coro, PM, PCM, Pcppm, Nti };

std::optional<TableName> table_by_name(std::string_view name);
const char* to_string(TableName name);

struct TableRow {
    int n = 0;
    std::optional<long long> paper_value;       // known-table formula
    std::optional<long long> construction_value; // certified catalog construction
    std::string construction;
    std::optional<long long> search_value;
    SearchStatus search_status = SearchStatus::NotDefined;
    bool searched = false;
    bool agree = true;
};

struct TableReport {
    TableName name;
    std::vector<TableRow> rows;
    bool all_agree = true;
};

struct TableConfig {
    int n_min = 0;          // 0: table default
    int n_max = 0;          // 0: table default
    int search_n_max = 0;   // rows with n <= this are searched; 0: table default
    SearchConfig search;
};

TableReport reproduce_table(TableName name, const TableConfig& config = {});

} // namespace turan3
