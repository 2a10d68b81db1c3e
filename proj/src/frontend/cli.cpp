#include "mk/frontend/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mk/analytics.hpp"
#include "mk/error.hpp"
#include "mk/frontend/document.hpp"
#include "mk/frontend/expr.hpp"
#include "mk/frontend/json_emit.hpp"
#include "mk/frontend/laws.hpp"
#include "mk/sequential.hpp"

namespace mk::frontend {
namespace {

// Thrown for failed checks, as opposed to malformed input.
struct CheckFailed {
  std::string message;
};

Document loadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parseDocument(text.str());
}

template <typename T>
const T& lookup(const T* found, const std::string& what, const std::string& name) {
  if (found == nullptr) throw Error(ErrorCode::UnknownName, "unknown " + what + " '" + name + "'");
  return *found;
}

struct Options {
  std::string file;
  std::string expr;
  bool json = false;
  std::string laws = "all";
  std::string chain;
  std::size_t steps = 0;
  std::uint64_t seed = 5489;
  std::size_t count = 1;
  std::string rv;
  std::string measure;
  std::string method = "bounded";
  std::string gridT = "10";
  std::string gridStep = "1/100";
  std::string constant;
  std::size_t n = 1;
  std::string t;
};

int runEval(const Options& o, std::ostream& out) {
  const Document doc = loadDocument(o.file);
  const Expr e = parseExpr(o.expr, doc);
  const Value v = evalExpr(e, doc);
  out << (o.json ? dumpJson(valueToJson(v)) : formatValue(v));
  return kExitOk;
}

int runCheck(const Options& o, std::ostream& out) {
  const Document doc = loadDocument(o.file);
  const auto results = checkLaws(doc, parseLawSuite(o.laws));
  bool all = true;
  Json rows = Json::array();
  for (const auto& r : results) {
    all = all && r.holds;
    if (o.json) {
      Json row = {{"law", r.law}, {"subject", r.subject}, {"holds", r.holds}};
      if (!r.note.empty()) row["note"] = r.note;
      rows.push_back(row);
    } else {
      out << (r.holds ? "PASS " : "FAIL ") << r.law << " [" << r.subject << "]";
      if (!r.note.empty()) out << ": " << r.note;
      out << '\n';
    }
  }
  if (o.json) {
    out << dumpJson({{"suite", o.laws}, {"results", rows}, {"holds", all}});
  } else {
    out << results.size() << " checks, " << (all ? "all hold" : "some failed") << "\n";
  }
  return all ? kExitOk : kExitCheckFailed;
}

int runSimulate(const Options& o, std::ostream& out) {
  const Document doc = loadDocument(o.file);
  const ChainDecl& decl = lookup(doc.findChain(o.chain), "chain", o.chain);
  const KernelChain& chain = *decl.chain;
  const auto paths = sample(chain, o.steps, o.seed, o.count);
  if (o.json) {
    Json rows = Json::array();
    for (const auto& path : paths) {
      Json row = Json::array();
      for (std::size_t k = 0; k < path.size(); ++k) {
        row.push_back(chain.stateSpace(k + 1).atomLabel(path[k]));
      }
      rows.push_back(row);
    }
    out << dumpJson({{"chain", o.chain},
                     {"algorithm", SampleStream::kAlgorithm},
                     {"seed", o.seed},
                     {"trajectories", rows}});
    return kExitOk;
  }
  for (const auto& path : paths) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      out << (k == 0 ? "" : " → ") << chain.stateSpace(k + 1).atomLabel(path[k]);
    }
    out << '\n';
  }
  return kExitOk;
}

SubgaussianCertificate certify(const Options& o, const RealRV& x, const Measure& mu) {
  const SubgaussianScope scope = PlainScope{mu};
  try {
    if (o.method == "bounded") return certifyBoundedRange(x, scope);
    if (o.method == "grid") {
      const GridSpec grid{parseRational(o.gridT), parseRational(o.gridStep)};
      Rational c;
      if (!o.constant.empty()) {
        c = parseRational(o.constant);
      } else {
        const Rational width = x.max() - x.min();
        c = width * width / 4;
      }
      return certifyOnGrid(x, scope, c, grid);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GridViolation || e.code() == ErrorCode::NonzeroMean) {
      throw CheckFailed{e.what()};
    }
    throw;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + o.method + "'");
}

int runCertify(const Options& o, std::ostream& out) {
  const Document doc = loadDocument(o.file);
  const RealRV& x = lookup(doc.findRealRV(o.rv), "realrv", o.rv);
  const Measure& mu = lookup(doc.findMeasure(o.measure), "measure", o.measure);
  const SubgaussianCertificate cert = certify(o, x, mu);
  const bool grid = cert.method == SubgaussianCertificate::Method::GridCheck;
  if (o.json) {
    Json j = {{"variable", o.rv},
              {"measure", o.measure},
              {"method", grid ? "grid" : "bounded"},
              {"constant", jsonRational(cert.constant)},
              {"verified", cert.verified}};
    if (cert.grid) {
      j["grid"] = {{"T", jsonRational(cert.grid->halfWidth)},
                   {"step", jsonRational(cert.grid->step)}};
    }
    out << dumpJson(j);
  } else {
    out << o.rv << " is sub-Gaussian with c = " << rationalToString(cert.constant) << " under "
        << o.measure;
    if (cert.grid) {
      out << " (checked on [-" << rationalToString(cert.grid->halfWidth) << ", "
          << rationalToString(cert.grid->halfWidth) << "] step "
          << rationalToString(cert.grid->step) << ")";
    } else {
      out << " (bounded range)";
    }
    out << '\n';
  }
  return kExitOk;
}

int runHoeffding(const Options& o, std::ostream& out) {
  const Document doc = loadDocument(o.file);
  const RealRV& x = lookup(doc.findRealRV(o.rv), "realrv", o.rv);
  const Measure& mu = lookup(doc.findMeasure(o.measure), "measure", o.measure);
  Options bounded = o;
  bounded.method = "bounded";
  const SubgaussianCertificate cert = certify(bounded, x, mu);
  const HoeffdingReport r = hoeffdingCheck(cert, o.n, parseRational(o.t));
  if (o.json) {
    out << dumpJson({{"exactTail", jsonRational(r.exactTail)},
                     {"bound", jsonReal(r.bound)},
                     {"holds", r.holds}});
  } else {
    out << "P(S_" << o.n << " >= " << o.t << ") = " << rationalToString(r.exactTail) << " ~ "
        << jsonReal(r.exactTail.get_d()).dump() << "\n"
        << "bound exp(-t^2/(2nc)) = " << jsonReal(r.bound).dump() << "\n"
        << (r.holds ? "holds" : "violated") << '\n';
  }
  return r.holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite kernel algebra", "kd"};
  app.require_subcommand(1);
  Options o;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression over a .kd document");
  eval->add_option("file", o.file, ".kd document")->required();
  eval->add_option("--expr", o.expr, "expression")->required();
  eval->add_flag("--json", o.json, "emit JSON");

  auto* check = app.add_subcommand("check", "Check algebraic laws on declared objects");
  check->add_option("file", o.file, ".kd document")->required();
  check->add_option("--laws", o.laws, "algebra | disintegration | bayes | all")
      ->check(CLI::IsMember({"algebra", "disintegration", "bayes", "all"}));
  check->add_flag("--json", o.json, "emit JSON");

  auto* simulate = app.add_subcommand("simulate", "Sample trajectories of a chain");
  simulate->add_option("file", o.file, ".kd document")->required();
  simulate->add_option("--chain", o.chain, "chain name")->required();
  simulate->add_option("-n", o.steps, "trajectory length")->required();
  simulate->add_option("--seed", o.seed, "mt19937_64 seed");
  simulate->add_option("--count", o.count, "number of trajectories");
  simulate->add_flag("--json", o.json, "emit JSON");

  auto* certifyCmd = app.add_subcommand("certify", "Certify a sub-Gaussian constant");
  certifyCmd->add_option("file", o.file, ".kd document")->required();
  certifyCmd->add_option("--rv", o.rv, "realrv name")->required();
  certifyCmd->add_option("--measure", o.measure, "measure name")->required();
  certifyCmd->add_option("--method", o.method, "bounded | grid")
      ->check(CLI::IsMember({"bounded", "grid"}));
  certifyCmd->add_option("--grid-T", o.gridT, "grid half-width (rational)");
  certifyCmd->add_option("--grid-step", o.gridStep, "grid step (rational)");
  certifyCmd->add_option("--c", o.constant, "constant to check on the grid (rational)");
  certifyCmd->add_flag("--json", o.json, "emit JSON");

  auto* hoeffding = app.add_subcommand("hoeffding", "Compare an exact tail with Hoeffding");
  hoeffding->add_option("file", o.file, ".kd document")->required();
  hoeffding->add_option("--rv", o.rv, "realrv name")->required();
  hoeffding->add_option("--measure", o.measure, "measure name")->required();
  hoeffding->add_option("-n", o.n, "number of i.i.d. copies")->required();
  hoeffding->add_option("-t", o.t, "threshold (rational)")->required();
  hoeffding->add_flag("--json", o.json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kd: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval) return runEval(o, out);
    if (*check) return runCheck(o, out);
    if (*simulate) return runSimulate(o, out);
    if (*certifyCmd) return runCertify(o, out);
    if (*hoeffding) return runHoeffding(o, out);
  } catch (const CheckFailed& f) {
    err << "kd: " << f.message << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "kd: " << (o.file.empty() ? "" : o.file + ": ") << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mk::frontend
