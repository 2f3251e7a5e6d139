#include "qrc/intersect/adjudicate.hpp"

#include <sstream>

#include "qrc/counts/counts.hpp"
#include "qrc/counts/degrees.hpp"
#include "qrc/intersect/golden.hpp"
#include "qrc/intersect/intersections.hpp"

namespace qrc {

namespace {

Int caseProduct(const CaseId& id) {
  if (id.kind == CaseId::Kind::IV) return family_p_degree(id.a) * family_g_degree(id.b);
  return family_cp2dq_degree(id.b) * family_r_degree(id.a - id.b);
}

void appendOptional(std::ostringstream& os, const std::optional<Int>& v) {
  if (v)
    os << v->toString();
  else
    os << "null";
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AllAgree: return "AllAgree";
    case Verdict::VariantResolved: return "VariantResolved";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "Unresolved";
}

AdjudicationRecord adjudicate(const CaseId& id, long precisionBits, long productBudget) {
  AdjudicationRecord rec;
  rec.id = id;
  const bool iv = id.kind == CaseId::Kind::IV;

  if (!iv) rec.paper = golden::eta_ii_table(id.a, id.b);

  if (iv) {
    rec.closedFormPaper = curve_pair_residual(id.a, id.b);
    rec.closedFormMarkov = rec.closedFormPaper;
  } else {
    rec.closedFormPaper = eta_ii_mj(id.a, id.b, Variant::PaperDisplay);
    rec.closedFormMarkov = eta_ii_mj(id.a, id.b, Variant::MarkovRecurrence);
  }

  rec.ledgerClosedFormPaper =
      bezout_ledger(id, Variant::PaperDisplay, MultiplicitySource::ClosedForm).residual;
  rec.ledgerClosedFormMarkov =
      bezout_ledger(id, Variant::MarkovRecurrence, MultiplicitySource::ClosedForm).residual;
  rec.ledgerExactLocal =
      bezout_ledger(id, Variant::PaperDisplay, MultiplicitySource::ExactLocal).residual;

  if (Int(productBudget) < caseProduct(id))
    throw std::domain_error("adjudicate: " + case_name(id) + " exceeds the oracle budget");

  std::string lastError;
  long prec = precisionBits;
  for (int attempt = 0; attempt < 3 && !rec.oracle; ++attempt, prec *= 2) {
    try {
      const auto [A, B] = case_polys(id);
      const IntersectionResult r = affine_intersections(A, B, /*excludeDZero=*/true, prec);
      rec.oracle = Int(r.count);
    } catch (const std::runtime_error& e) {
      lastError = e.what();
    }
  }
  if (!rec.oracle) {
    rec.verdict = Verdict::Unresolved;
    throw AdjudicationError("adjudicate: " + case_name(id) + ": oracle failed: " + lastError, rec);
  }

  const Int& o = *rec.oracle;
  const bool paperOk = !rec.paper || *rec.paper == o;
  if (paperOk && rec.closedFormPaper == o && rec.closedFormMarkov == o &&
      rec.ledgerClosedFormPaper == o && rec.ledgerClosedFormMarkov == o &&
      rec.ledgerExactLocal == o) {
    rec.verdict = Verdict::AllAgree;
  } else if (rec.ledgerExactLocal == o) {
    const bool paperSide = rec.closedFormPaper == o && rec.ledgerClosedFormPaper == o;
    const bool markovSide = rec.closedFormMarkov == o && rec.ledgerClosedFormMarkov == o;
    rec.verdict = (paperSide != markovSide) ? Verdict::VariantResolved : Verdict::Unresolved;
  } else {
    rec.verdict = Verdict::Unresolved;
  }
  return rec;
}

std::string adjudication_json(const AdjudicationRecord& rec) {
  std::ostringstream os;
  os << "{\"case\":\"" << case_name(rec.id) << "\",\"paper\":";
  appendOptional(os, rec.paper);
  os << ",\"closed_form\":{\"paper_variant\":" << rec.closedFormPaper.toString()
     << ",\"markov_variant\":" << rec.closedFormMarkov.toString() << "}"
     << ",\"ledger\":{\"closed_form_paper\":" << rec.ledgerClosedFormPaper.toString()
     << ",\"closed_form_markov\":" << rec.ledgerClosedFormMarkov.toString()
     << ",\"exact_local\":" << rec.ledgerExactLocal.toString() << "}"
     << ",\"oracle\":";
  appendOptional(os, rec.oracle);
  os << ",\"verdict\":\"" << verdict_name(rec.verdict) << "\"}";
  return os.str();
}

std::vector<CaseId> all_table_cases() {
  std::vector<CaseId> out;
  for (long m = 3; m <= 8; ++m)
    for (long j = 1; j < m; ++j) out.push_back({CaseId::Kind::II, m, j});
  for (long n = 3; n <= 8; ++n)
    for (long m = n; m <= 8; ++m) {
      const CaseId id{CaseId::Kind::IV, n, m};
      if (caseProduct(id) <= Int(200)) out.push_back(id);
    }
  return out;
}

}  // namespace qrc
