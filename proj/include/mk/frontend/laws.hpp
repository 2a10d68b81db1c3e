#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mk/frontend/document.hpp"

namespace mk::frontend {

// Single-instance law checks. All comparisons are exact.

/// xi o (eta o kappa) == (xi o eta) o kappa.
bool associativityHolds(const Kernel& xi, const Kernel& eta, const Kernel& kappa);
/// id o kappa == kappa == kappa o id.
bool unitLawsHold(const Kernel& kappa);
/// snd(kappa (x) eta) == eta o (id x kappa).
bool compProdSndHolds(const Kernel& kappa, const Kernel& eta);
/// prod(kappa, eta) == (kappa || eta) o copy.
bool prodViaCopyHolds(const Kernel& kappa, const Kernel& eta);
/// compProd agrees with its string-diagram definition.
bool compProdCompositeHolds(const Kernel& kappa, const Kernel& eta);
/// For kappa : X ~> Y, eta : X*Y ~> Z and xi : X*(Y*Z) ~> W:
/// (kappa (x) eta) (x) xi == assoc o (kappa (x) (eta (x) xi')),
/// with xi' = xi o assocInv on (X*Y)*Z.
bool compProdAssociativityHolds(const Kernel& kappa, const Kernel& eta, const Kernel& xi);
/// discard o kappa == discard for Markov kappa.
bool discardLawHolds(const Kernel& kappa);
/// fst o copy == id and swap o copy == copy.
bool copyDiscardCoherent(const Space& space);
/// fst(kappa) (x) condKernel(kappa) == kappa and the conditional is Markov.
bool disintegrationHolds(const Kernel& kappa);
/// withDensity(eta, d) + singular == kappa, and the singular part lives
/// where eta has no mass.
bool rnReconstructionHolds(const Kernel& kappa, const Kernel& eta);

struct LawResult {
  std::string law;
  std::string subject;
  bool holds;
  /// Set when the law could not be evaluated (the error message).
  std::string note;
};

enum class LawSuite { Algebra, Disintegration, Bayes, All };

/// Parses "algebra", "disintegration", "bayes" or "all".
LawSuite parseLawSuite(std::string_view name);

/// Runs a suite over every applicable combination of declared objects. A
/// law whose evaluation raises an Error is reported as not holding.
std::vector<LawResult> checkLaws(const Document& doc, LawSuite suite);

}  // namespace mk::frontend
