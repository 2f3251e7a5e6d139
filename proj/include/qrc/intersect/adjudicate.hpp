#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrc/exactcore/integer.hpp"
#include "qrc/intersect/ledger.hpp"

namespace qrc {

enum class Verdict { AllAgree, VariantResolved, Unresolved };
const char* verdict_name(Verdict v);

// Side-by-side comparison of every route to one case's count.  The stored
// table value is never overwritten; the oracle field stays empty when the
// numerical count failed at every attempted precision.
struct AdjudicationRecord {
  CaseId id;
  std::optional<Int> paper;  // frozen table value; absent for IV cases
  Int closedFormPaper, closedFormMarkov;
  Int ledgerClosedFormPaper, ledgerClosedFormMarkov, ledgerExactLocal;
  std::optional<Int> oracle;
  Verdict verdict = Verdict::Unresolved;
};

// Raised when the oracle fails after retries; carries the partial record
// (everything except the oracle count) for reporting.
class AdjudicationError : public std::runtime_error {
 public:
  AdjudicationError(const std::string& what, AdjudicationRecord partial)
      : std::runtime_error(what), record(std::move(partial)) {}
  AdjudicationRecord record;
};

// Populates the full record for one case: the frozen table value (when one
// exists), both variant closed forms, all three ledger residuals, and the
// oracle count in the region away from d = 0.  Verdicts: AllAgree when
// every populated field coincides; VariantResolved when the oracle matches
// the exact-local ledger and exactly one variant's (closed form == ledger)
// value; Unresolved otherwise.  Cases with degree product above the budget
// are rejected.  Numerical failures retry at doubled precision (twice)
// before raising AdjudicationError.
AdjudicationRecord adjudicate(const CaseId& id, long precisionBits = 256,
                              long productBudget = 200);

// Exact JSON line for one record; integers are unquoted and exact, the
// paper and oracle fields render null when absent.
std::string adjudication_json(const AdjudicationRecord& rec);

// Every case the frozen tables cover: all II(m, j) with 3 <= m <= 8 and
// 1 <= j < m, then the IV(n, m) pairs with degree product <= the oracle
// budget (200), ordered lexicographically within each kind.
std::vector<CaseId> all_table_cases();

}  // namespace qrc
