#include "mk/frontend/json_emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mk::frontend {

Json jsonRational(const Rational& q) { return rationalToString(q); }

Json jsonReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json jsonExtReal(const ExtReal& v) { return v.infinite ? Json("inf") : jsonReal(v.value); }

namespace {

Json weightsJson(const Measure& mu) {
  Json out = Json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) out[mu.space().atomLabel(i)] = mu[i].toString();
  return out;
}

}  // namespace

Json valueToJson(const Value& value) {
  struct Visitor {
    Json operator()(const Space& s) const {
      Json atoms = Json::array();
      for (std::size_t i = 0; i < s.size(); ++i) atoms.push_back(s.atomLabel(i));
      return {{"kind", "space"}, {"space", s.describe()}, {"atoms", atoms}};
    }
    Json operator()(const Measure& m) const {
      return {{"kind", "measure"}, {"space", m.space().describe()}, {"weights", weightsJson(m)}};
    }
    Json operator()(const Kernel& k) const {
      Json rows = Json::object();
      for (std::size_t x = 0; x < k.domain().size(); ++x) {
        rows[k.domain().atomLabel(x)] = weightsJson(k.row(x));
      }
      return {{"kind", "kernel"},
              {"domain", k.domain().describe()},
              {"codomain", k.codomain().describe()},
              {"rows", rows}};
    }
    Json operator()(const RandomVariable& f) const {
      Json table = Json::object();
      for (std::size_t i = 0; i < f.domain().size(); ++i) {
        table[f.domain().atomLabel(i)] = f.codomain().atomLabel(f(i));
      }
      return {{"kind", "rv"},
              {"domain", f.domain().describe()},
              {"codomain", f.codomain().describe()},
              {"table", table}};
    }
    Json operator()(const RealRV& f) const {
      Json values = Json::object();
      for (std::size_t i = 0; i < f.domain().size(); ++i) {
        values[f.domain().atomLabel(i)] = jsonRational(f[i]);
      }
      return {{"kind", "realrv"}, {"space", f.domain().describe()}, {"values", values}};
    }
    Json operator()(const PartitionSigma& g) const {
      Json blocks = Json::array();
      for (const auto& block : g.blocks()) {
        Json b = Json::array();
        for (std::size_t a : block) b.push_back(g.space().atomLabel(a));
        blocks.push_back(b);
      }
      return {{"kind", "partition"}, {"space", g.space().describe()}, {"blocks", blocks}};
    }
    Json operator()(const KernelChain* c) const {
      return {{"kind", "chain"}, {"start", c->start().describe()}, {"length", c->length()}};
    }
    Json operator()(const Rational& q) const {
      return {{"kind", "number"}, {"value", jsonRational(q)}};
    }
    Json operator()(double v) const { return {{"kind", "real"}, {"value", jsonReal(v)}}; }
    Json operator()(const ExtReal& v) const {
      return {{"kind", "extreal"}, {"value", jsonExtReal(v)}};
    }
    Json operator()(bool b) const { return {{"kind", "bool"}, {"value", b}}; }
    Json operator()(const DensityTable& d) const {
      Json values = Json::object();
      for (std::size_t i = 0; i < d.space().size(); ++i) {
        values[d.space().atomLabel(i)] = d[i].toString();
      }
      return {{"kind", "density"}, {"space", d.space().describe()}, {"values", values}};
    }
  };
  return std::visit(Visitor{}, value);
}

std::string dumpJson(const Json& json) { return json.dump() + "\n"; }

}  // namespace mk::frontend
