#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mk/measure.hpp"
#include "mk/random_variable.hpp"
#include "mk/sequential.hpp"

namespace mk::frontend {

enum class Sort { Space, Measure, Kernel, RV, RealRV, Partition, Chain };

std::string_view sortName(Sort sort);

/// How a chain was declared; kept so that documents serialise back to the
/// same text.
struct ChainDecl {
  enum class Form { Markov, Steps };
  Form form = Form::Markov;
  // Markov form: initial measure, step kernel, length.
  std::string initial;
  std::string step;
  std::size_t length = 0;
  // Steps form: start space, optional initial measure, step kernels.
  Space start;
  std::vector<std::string> steps;

  std::optional<KernelChain> chain;

  friend bool operator==(const ChainDecl& a, const ChainDecl& b) {
    return a.form == b.form && a.initial == b.initial && a.step == b.step &&
           a.length == b.length && a.start == b.start && a.steps == b.steps;
  }
};

/// An ordered set of named declarations of the `.kd` format. Names are
/// unique per sort; every object is validated when declared.
class Document {
 public:
  void addSpace(const std::string& name, Space space);
  void addMeasure(const std::string& name, Measure measure);
  void addKernel(const std::string& name, Kernel kernel);
  void addRV(const std::string& name, RandomVariable rv);
  void addRealRV(const std::string& name, RealRV rv);
  void addPartition(const std::string& name, PartitionSigma partition);
  void addChain(const std::string& name, ChainDecl chain);

  /// "Unit" always resolves to the unit space.
  const Space* findSpace(std::string_view name) const;
  const Measure* findMeasure(std::string_view name) const;
  const Kernel* findKernel(std::string_view name) const;
  const RandomVariable* findRV(std::string_view name) const;
  const RealRV* findRealRV(std::string_view name) const;
  const PartitionSigma* findPartition(std::string_view name) const;
  const ChainDecl* findChain(std::string_view name) const;

  /// Sorts under which `name` is declared.
  std::vector<Sort> sortsOf(std::string_view name) const;

  const std::vector<std::pair<Sort, std::string>>& order() const noexcept { return order_; }
  const std::map<std::string, Kernel, std::less<>>& kernels() const noexcept { return kernels_; }
  const std::map<std::string, Measure, std::less<>>& measures() const noexcept {
    return measures_;
  }

  friend bool operator==(const Document& a, const Document& b) = default;

 private:
  void claim(Sort sort, const std::string& name, bool taken);

  std::vector<std::pair<Sort, std::string>> order_;
  std::map<std::string, Space, std::less<>> spaces_;
  std::map<std::string, Measure, std::less<>> measures_;
  std::map<std::string, Kernel, std::less<>> kernels_;
  std::map<std::string, RandomVariable, std::less<>> rvs_;
  std::map<std::string, RealRV, std::less<>> realrvs_;
  std::map<std::string, PartitionSigma, std::less<>> partitions_;
  std::map<std::string, ChainDecl, std::less<>> chains_;
};

/// Parses a `.kd` document. Errors carry line and column.
///
///   space Name { atom atom ... }
///   measure m on S = { atom: p/q, ... }
///   kernel k : S -> T = { atom: { atom: p/q, ... } ... }
///   rv X : S -> T = { atom -> atom, ... }
///   realrv F on S = { atom: -p/q, ... }
///   partition G on S = { { atom ... } ... }
///   chain C = markov(mu, k, n)
///   chain C : S [init mu] = { k0, k1, ... }
///
/// Space expressions are names, Unit, or binary products `A * B`; nested
/// products must be parenthesised. Product atoms are written `(a,b)`.
Document parseDocument(std::string_view text);

/// Canonical text; parseDocument(serializeDocument(d)) == d.
std::string serializeDocument(const Document& doc);

/// Canonical text of single objects (used for evaluation output).
std::string formatMeasure(const std::string& name, const Measure& mu);
std::string formatKernel(const std::string& name, const Kernel& kappa);

}  // namespace mk::frontend
