#include "mk/frontend/laws.hpp"

#include <functional>

#include "mk/algebra.hpp"
#include "mk/bayes.hpp"
#include "mk/disintegration.hpp"
#include "mk/error.hpp"

namespace mk::frontend {

bool associativityHolds(const Kernel& xi, const Kernel& eta, const Kernel& kappa) {
  return compose(xi, compose(eta, kappa)) == compose(compose(xi, eta), kappa);
}

bool unitLawsHold(const Kernel& kappa) {
  return compose(identityKernel(kappa.codomain()), kappa) == kappa &&
         compose(kappa, identityKernel(kappa.domain())) == kappa;
}

bool compProdSndHolds(const Kernel& kappa, const Kernel& eta) {
  return snd(compProd(kappa, eta)) == compose(eta, prod(identityKernel(kappa.domain()), kappa));
}

bool prodViaCopyHolds(const Kernel& kappa, const Kernel& eta) {
  return prod(kappa, eta) == prodViaCopy(kappa, eta);
}

bool compProdCompositeHolds(const Kernel& kappa, const Kernel& eta) {
  return compProd(kappa, eta) == compProdViaComposite(kappa, eta);
}

bool compProdAssociativityHolds(const Kernel& kappa, const Kernel& eta, const Kernel& xi) {
  const Space& x = kappa.domain();
  const Space& y = kappa.codomain();
  const Space& z = eta.codomain();
  const Kernel lhs = compProd(compProd(kappa, eta), xi);
  const Kernel xiLift = precompose(xi, assocInvMap(x, y, z));
  const Kernel inner = compProd(kappa, compProd(eta, xiLift));
  return lhs == pushforward(inner, assocMap(y, z, xi.codomain()));
}

bool discardLawHolds(const Kernel& kappa) {
  return compose(discardKernel(kappa.codomain()), kappa) == discardKernel(kappa.domain());
}

bool copyDiscardCoherent(const Space& space) {
  const Kernel copy = copyKernel(space);
  return compose(fstProjKernel(space, space), copy) == identityKernel(space) &&
         compose(swapKernel(space, space), copy) == copy;
}

bool disintegrationHolds(const Kernel& kappa) {
  const Kernel cond = condKernel(kappa);
  return cond.isMarkov() && isCondKernel(kappa, cond);
}

bool rnReconstructionHolds(const Kernel& kappa, const Kernel& eta) {
  const RNDecomposition d = rnDecompose(kappa, eta);
  if (addKernels(withDensity(eta, d.density), d.singular) != kappa) return false;
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    for (std::size_t y = 0; y < kappa.codomain().size(); ++y) {
      if (!d.singular.at(x, y).isZero() && !eta.at(x, y).isZero()) return false;
    }
  }
  return true;
}

LawSuite parseLawSuite(std::string_view name) {
  if (name == "algebra") return LawSuite::Algebra;
  if (name == "disintegration") return LawSuite::Disintegration;
  if (name == "bayes") return LawSuite::Bayes;
  if (name == "all") return LawSuite::All;
  throw Error(ErrorCode::InvalidArgument, "unknown law suite '" + std::string(name) + "'");
}

namespace {

void record(std::vector<LawResult>& out, std::string law, std::string subject,
            const std::function<bool()>& check) {
  bool holds = false;
  std::string note;
  try {
    holds = check();
  } catch (const Error& e) {
    note = e.what();
  }
  out.push_back({std::move(law), std::move(subject), holds, std::move(note)});
}

struct Named {
  const std::string* name;
  const Kernel* kernel;
};

std::string join(std::initializer_list<std::string> names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

void algebraSuite(const Document& doc, const std::vector<Named>& ks,
                  std::vector<LawResult>& out) {
  for (const auto& [sort, name] : doc.order()) {
    if (sort == Sort::Space) {
      record(out, "copy-discard coherence", name, [&] { return copyDiscardCoherent(*doc.findSpace(name)); });
    }
  }
  for (const auto& k : ks) {
    record(out, "unit laws", *k.name, [&] { return unitLawsHold(*k.kernel); });
    if (k.kernel->isMarkov()) {
      record(out, "discard law", *k.name, [&] { return discardLawHolds(*k.kernel); });
    }
  }
  for (const auto& a : ks) {
    for (const auto& b : ks) {
      const Kernel& ka = *a.kernel;
      const Kernel& kb = *b.kernel;
      const std::string pair = join({*a.name, *b.name});
      if (ka.domain() == kb.domain()) {
        record(out, "prod via copy", pair, [&] { return prodViaCopyHolds(ka, kb); });
      }
      if (kb.domain() == Space::product(ka.domain(), ka.codomain())) {
        record(out, "compProd composite", pair, [&] { return compProdCompositeHolds(ka, kb); });
        record(out, "compProd snd marginal", pair, [&] { return compProdSndHolds(ka, kb); });
        if (ka.isMarkov() && kb.isMarkov()) {
          record(out, "Markov closure", pair, [&] { return compProd(ka, kb).isMarkov(); });
        }
        for (const auto& c : ks) {
          const Space target =
              Space::product(ka.domain(), Space::product(ka.codomain(), kb.codomain()));
          if (c.kernel->domain() == target) {
            record(out, "compProd associativity", join({*a.name, *b.name, *c.name}),
                   [&] { return compProdAssociativityHolds(ka, kb, *c.kernel); });
          }
        }
      }
      if (kb.codomain() == ka.domain()) {
        if (ka.isMarkov() && kb.isMarkov()) {
          record(out, "Markov closure", pair, [&] { return compose(ka, kb).isMarkov(); });
        }
        for (const auto& c : ks) {
          if (c.kernel->codomain() == kb.domain()) {
            record(out, "associativity", join({*a.name, *b.name, *c.name}),
                   [&] { return associativityHolds(ka, kb, *c.kernel); });
          }
        }
      }
    }
  }
}

void disintegrationSuite(const std::vector<Named>& ks, std::vector<LawResult>& out) {
  for (const auto& k : ks) {
    if (k.kernel->codomain().isProduct()) {
      record(out, "disintegration", *k.name, [&] { return disintegrationHolds(*k.kernel); });
    }
  }
  for (const auto& a : ks) {
    for (const auto& b : ks) {
      if (a.kernel->domain() == b.kernel->domain() &&
          a.kernel->codomain() == b.kernel->codomain()) {
        record(out, "Radon-Nikodym reconstruction", join({*a.name, *b.name}),
               [&] { return rnReconstructionHolds(*a.kernel, *b.kernel); });
      }
    }
  }
}

void bayesSuite(const Document& doc, const std::vector<Named>& ks,
                std::vector<LawResult>& out) {
  for (const auto& k : ks) {
    for (const auto& [sort, name] : doc.order()) {
      if (sort != Sort::Measure) continue;
      const Measure& mu = *doc.findMeasure(name);
      if (mu.space() != k.kernel->domain()) continue;
      const std::string pair = join({*k.name, name});
      record(out, "posterior identity", pair, [&] { return posteriorIdentityHolds(*k.kernel, mu); });
      record(out, "Bayes formula", pair, [&] { return bayesCheck(*k.kernel, mu).holds; });
      if (k.kernel->isMarkov()) {
        record(out, "posterior involution", pair, [&] { return posteriorInvolutionHolds(*k.kernel, mu); });
      }
    }
  }
}

}  // namespace

std::vector<LawResult> checkLaws(const Document& doc, LawSuite suite) {
  std::vector<Named> ks;
  for (const auto& [sort, name] : doc.order()) {
    if (sort == Sort::Kernel) ks.push_back({&name, doc.findKernel(name)});
  }
  std::vector<LawResult> out;
  if (suite == LawSuite::Algebra || suite == LawSuite::All) algebraSuite(doc, ks, out);
  if (suite == LawSuite::Disintegration || suite == LawSuite::All) disintegrationSuite(ks, out);
  if (suite == LawSuite::Bayes || suite == LawSuite::All) bayesSuite(doc, ks, out);
  return out;
}

}  // namespace mk::frontend
