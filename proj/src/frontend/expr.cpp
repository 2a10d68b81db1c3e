#include "mk/frontend/expr.hpp"

#include <cctype>
#include <cstdio>
#include <functional>
#include <map>

#include "mk/algebra.hpp"
#include "mk/bayes.hpp"
#include "mk/conditioning.hpp"
#include "mk/error.hpp"
#include "mk/frontend/lexer.hpp"
#include "mk/sequential.hpp"

namespace mk::frontend {

std::string_view valueKindName(ValueKind kind) {
  switch (kind) {
    case ValueKind::Space: return "space";
    case ValueKind::Measure: return "measure";
    case ValueKind::Kernel: return "kernel";
    case ValueKind::RV: return "rv";
    case ValueKind::RealRV: return "realrv";
    case ValueKind::Partition: return "partition";
    case ValueKind::Chain: return "chain";
    case ValueKind::Number: return "number";
    case ValueKind::Real: return "real";
    case ValueKind::ExtReal: return "extended real";
    case ValueKind::Bool: return "bool";
    case ValueKind::Density: return "density";
  }
  return "?";
}

std::string describeType(const Type& t) {
  switch (t.kind) {
    case ValueKind::Kernel: return "kernel " + t.dom.describe() + " -> " + t.cod.describe();
    case ValueKind::RV: return "rv " + t.dom.describe() + " -> " + t.cod.describe();
    case ValueKind::Space:
    case ValueKind::Measure:
    case ValueKind::RealRV:
    case ValueKind::Partition:
    case ValueKind::Density:
      return std::string(valueKindName(t.kind)) + " on " + t.dom.describe();
    case ValueKind::Chain: return "chain from " + t.dom.describe();
    default: return std::string(valueKindName(t.kind));
  }
}

namespace {

using VK = ValueKind;

Type kernelType(Space dom, Space cod) { return {VK::Kernel, std::move(dom), std::move(cod)}; }
Type onType(VK kind, Space space) { return {kind, std::move(space), Space::unit()}; }
Type plainType(VK kind) { return {kind, Space::unit(), Space::unit()}; }

[[noreturn]] void failExpr(ErrorCode code, const Expr& at, const std::string& message) {
  Token t;
  t.line = at.line;
  t.column = at.column;
  failAt(code, t, message);
}

// ---------------------------------------------------------------- parsing

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : ts_(tokenize(text)) {}

  Expr run() {
    Expr e = expr();
    if (!ts_.atEnd()) {
      failAt(ErrorCode::SyntaxError, ts_.peek(),
             "unexpected '" + ts_.peek().text + "' after the expression");
    }
    return e;
  }

 private:
  using K = Token::Kind;

  Expr expr() {
    Expr left = term();
    if (ts_.peek().kind != K::Star) return left;
    const Token star = ts_.next();
    Expr right = term();
    if (ts_.peek().kind == K::Star) {
      failAt(ErrorCode::SyntaxError, ts_.peek(),
             "products are not associative; parenthesise A * B * C");
    }
    Expr p;
    p.kind = Expr::Kind::Product;
    p.line = star.line;
    p.column = star.column;
    p.args.push_back(std::move(left));
    p.args.push_back(std::move(right));
    return p;
  }

  Expr term() {
    if (ts_.accept(K::LParen)) {
      Expr e = expr();
      ts_.expect(K::RParen, "to close the parenthesis");
      return e;
    }
    const Token w = ts_.expectWord("in an expression");
    Expr e;
    e.line = w.line;
    e.column = w.column;
    e.text = w.text;
    if (std::isdigit(static_cast<unsigned char>(w.text[0]))) {
      std::string literal = w.text;
      if (ts_.accept(K::Slash)) literal += "/" + ts_.expectWord("as a denominator").text;
      e.kind = Expr::Kind::Number;
      try {
        e.number = parseRational(literal);
      } catch (const Error& err) {
        failAt(err.code(), w, err.what());
      }
      e.text = literal;
      return e;
    }
    if (ts_.accept(K::LParen)) {
      e.kind = Expr::Kind::Call;
      if (!ts_.accept(K::RParen)) {
        do {
          e.args.push_back(expr());
        } while (ts_.accept(K::Comma));
        ts_.expect(K::RParen, "to close the argument list");
      }
      return e;
    }
    e.kind = Expr::Kind::Name;
    return e;
  }

  TokenStream ts_;
};

// ------------------------------------------------------------ builtins

struct Builtin {
  std::vector<VK> params;
  std::function<Type(const std::vector<Expr>&, const Expr&, const Document&)> type;
  std::function<Value(const std::vector<Value>&, const Expr&, const Document&)> eval;
};

template <typename T>
const T& as(const Value& v) {
  return std::get<T>(v);
}

void requireSame(const Expr& call, const std::string& what, const Space& expected,
                 const Space& found) {
  if (expected == found) return;
  failExpr(ErrorCode::TypeError, call,
           call.text + ": " + what + " must be " + expected.describe() + ", found " +
               found.describe());
}

const Space& leftOf(const Expr& call, const Space& s, const std::string& what) {
  if (!s.isProduct()) {
    failExpr(ErrorCode::TypeError, call,
             call.text + ": " + what + " must be a product space, found " + s.describe());
  }
  return s.left();
}

std::size_t horizon(const Expr& arg) {
  if (arg.number < 0 || arg.number.get_den() != 1 || arg.number > 1000000) {
    failExpr(ErrorCode::TypeError, arg, "expected a nonnegative integer, found " + arg.text);
  }
  return arg.number.get_num().get_ui();
}

const KernelChain& chainOf(const Expr& arg, const Document& doc) {
  return *doc.findChain(arg.text)->chain;
}

Space trajSpace(const Expr& call, const Document& doc) {
  const KernelChain& chain = chainOf(call.args[0], doc);
  const std::size_t n = horizon(call.args[1]);
  if (n < 1 || n > chain.length()) {
    failExpr(ErrorCode::HorizonOutOfRange, call.args[1],
             call.text + ": horizon " + std::to_string(n) + " outside 1.." +
                 std::to_string(chain.length()));
  }
  return chain.trajectorySpace(n);
}

const std::map<std::string, Builtin, std::less<>>& builtins() {
  static const std::map<std::string, Builtin, std::less<>> table = [] {
    std::map<std::string, Builtin, std::less<>> b;
    const auto K = VK::Kernel;
    const auto M = VK::Measure;
    const auto S = VK::Space;
    const auto R = VK::RV;

    b["comp"] = {{K, K},
                 [](const auto& a, const auto& c, const auto&) {
                   requireSame(c, "the first kernel's domain", a[1].type.cod, a[0].type.dom);
                   return kernelType(a[1].type.dom, a[0].type.cod);
                 },
                 [](const auto& v, const auto&, const auto&) -> Value {
                   return compose(as<Kernel>(v[0]), as<Kernel>(v[1]));
                 }};
    b["parallel"] = {{K, K},
                     [](const auto& a, const auto&, const auto&) {
                       return kernelType(Space::product(a[0].type.dom, a[1].type.dom),
                                         Space::product(a[0].type.cod, a[1].type.cod));
                     },
                     [](const auto& v, const auto&, const auto&) -> Value {
                       return parallel(as<Kernel>(v[0]), as<Kernel>(v[1]));
                     }};
    b["prod"] = {{K, K},
                 [](const auto& a, const auto& c, const auto&) {
                   requireSame(c, "the second kernel's domain", a[0].type.dom, a[1].type.dom);
                   return kernelType(a[0].type.dom, Space::product(a[0].type.cod, a[1].type.cod));
                 },
                 [](const auto& v, const auto&, const auto&) -> Value {
                   return prod(as<Kernel>(v[0]), as<Kernel>(v[1]));
                 }};
    b["compProd"] = {{K, K},
                     [](const auto& a, const auto& c, const auto&) {
                       requireSame(c, "the second kernel's domain",
                                   Space::product(a[0].type.dom, a[0].type.cod), a[1].type.dom);
                       return kernelType(a[0].type.dom,
                                         Space::product(a[0].type.cod, a[1].type.cod));
                     },
                     [](const auto& v, const auto&, const auto&) -> Value {
                       return compProd(as<Kernel>(v[0]), as<Kernel>(v[1]));
                     }};
    b["add"] = {{K, K},
                [](const auto& a, const auto& c, const auto&) {
                  requireSame(c, "the second kernel's domain", a[0].type.dom, a[1].type.dom);
                  requireSame(c, "the second kernel's codomain", a[0].type.cod, a[1].type.cod);
                  return a[0].type;
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return addKernels(as<Kernel>(v[0]), as<Kernel>(v[1]));
                }};
    b["condKernel"] = {{K},
                       [](const auto& a, const auto& c, const auto&) {
                         const Space& y = leftOf(c, a[0].type.cod, "the codomain");
                         return kernelType(Space::product(a[0].type.dom, y),
                                           a[0].type.cod.right());
                       },
                       [](const auto& v, const auto&, const auto&) -> Value {
                         return condKernel(as<Kernel>(v[0]));
                       }};
    b["posterior"] = {{K, M},
                      [](const auto& a, const auto& c, const auto&) {
                        requireSame(c, "the prior's space", a[0].type.dom, a[1].type.dom);
                        return kernelType(a[0].type.cod, a[0].type.dom);
                      },
                      [](const auto& v, const auto&, const auto&) -> Value {
                        return posterior(as<Kernel>(v[0]), as<Measure>(v[1]));
                      }};
    b["mcomp"] = {{K, M},
                  [](const auto& a, const auto& c, const auto&) {
                    requireSame(c, "the measure's space", a[0].type.dom, a[1].type.dom);
                    return onType(VK::Measure, a[0].type.cod);
                  },
                  [](const auto& v, const auto&, const auto&) -> Value {
                    return measureComp(as<Kernel>(v[0]), as<Measure>(v[1]));
                  }};
    b["mcompProd"] = {{M, K},
                      [](const auto& a, const auto& c, const auto&) {
                        requireSame(c, "the kernel's domain", a[0].type.dom, a[1].type.dom);
                        return onType(VK::Measure, Space::product(a[0].type.dom, a[1].type.cod));
                      },
                      [](const auto& v, const auto&, const auto&) -> Value {
                        return measureCompProd(as<Measure>(v[0]), as<Kernel>(v[1]));
                      }};
    b["map"] = {{M, R},
                [](const auto& a, const auto& c, const auto&) {
                  requireSame(c, "the variable's domain", a[0].type.dom, a[1].type.dom);
                  return onType(VK::Measure, a[1].type.cod);
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return map(as<Measure>(v[0]), as<RandomVariable>(v[1]));
                }};
    b["fst"] = {{K},
                [](const auto& a, const auto& c, const auto&) {
                  return kernelType(a[0].type.dom, leftOf(c, a[0].type.cod, "the codomain"));
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return fst(as<Kernel>(v[0]));
                }};
    b["snd"] = {{K},
                [](const auto& a, const auto& c, const auto&) {
                  leftOf(c, a[0].type.cod, "the codomain");
                  return kernelType(a[0].type.dom, a[0].type.cod.right());
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return snd(as<Kernel>(v[0]));
                }};
    b["swapOn"] = {{S, S},
                   [](const auto& a, const auto&, const auto&) {
                     return kernelType(Space::product(a[0].type.dom, a[1].type.dom),
                                       Space::product(a[1].type.dom, a[0].type.dom));
                   },
                   [](const auto& v, const auto&, const auto&) -> Value {
                     return swapKernel(as<Space>(v[0]), as<Space>(v[1]));
                   }};
    b["assocOn"] = {{S, S, S},
                    [](const auto& a, const auto&, const auto&) {
                      const Space &x = a[0].type.dom, &y = a[1].type.dom, &z = a[2].type.dom;
                      return kernelType(Space::product(x, Space::product(y, z)),
                                        Space::product(Space::product(x, y), z));
                    },
                    [](const auto& v, const auto&, const auto&) -> Value {
                      return assocKernel(as<Space>(v[0]), as<Space>(v[1]), as<Space>(v[2]));
                    }};
    b["assocInvOn"] = {{S, S, S},
                       [](const auto& a, const auto&, const auto&) {
                         const Space &x = a[0].type.dom, &y = a[1].type.dom, &z = a[2].type.dom;
                         return kernelType(Space::product(Space::product(x, y), z),
                                           Space::product(x, Space::product(y, z)));
                       },
                       [](const auto& v, const auto&, const auto&) -> Value {
                         return assocInvKernel(as<Space>(v[0]), as<Space>(v[1]),
                                               as<Space>(v[2]));
                       }};
    b["det"] = {{R},
                [](const auto& a, const auto&, const auto&) {
                  return kernelType(a[0].type.dom, a[0].type.cod);
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return deterministic(as<RandomVariable>(v[0]));
                }};
    b["const"] = {{S, M},
                  [](const auto& a, const auto&, const auto&) {
                    return kernelType(a[0].type.dom, a[1].type.dom);
                  },
                  [](const auto& v, const auto&, const auto&) -> Value {
                    return constantKernel(as<Space>(v[0]), as<Measure>(v[1]));
                  }};
    b["copy"] = {{S},
                 [](const auto& a, const auto&, const auto&) {
                   return kernelType(a[0].type.dom, Space::product(a[0].type.dom, a[0].type.dom));
                 },
                 [](const auto& v, const auto&, const auto&) -> Value {
                   return copyKernel(as<Space>(v[0]));
                 }};
    b["discard"] = {{S},
                    [](const auto& a, const auto&, const auto&) {
                      return kernelType(a[0].type.dom, Space::unit());
                    },
                    [](const auto& v, const auto&, const auto&) -> Value {
                      return discardKernel(as<Space>(v[0]));
                    }};
    b["idk"] = {{S},
                [](const auto& a, const auto&, const auto&) {
                  return kernelType(a[0].type.dom, a[0].type.dom);
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return identityKernel(as<Space>(v[0]));
                }};
    auto sameKernels = [](const std::vector<Expr>& a, const Expr& c) {
      requireSame(c, "the second kernel's domain", a[0].type.dom, a[1].type.dom);
      requireSame(c, "the second kernel's codomain", a[0].type.cod, a[1].type.cod);
    };
    b["rnDeriv"] = {{K, K},
                    [sameKernels](const auto& a, const auto& c, const auto&) {
                      sameKernels(a, c);
                      return onType(VK::Density, Space::product(a[0].type.dom, a[0].type.cod));
                    },
                    [](const auto& v, const auto&, const auto&) -> Value {
                      return rnDeriv(as<Kernel>(v[0]), as<Kernel>(v[1]));
                    }};
    b["singular"] = {{K, K},
                     [sameKernels](const auto& a, const auto& c, const auto&) {
                       sameKernels(a, c);
                       return a[0].type;
                     },
                     [](const auto& v, const auto&, const auto&) -> Value {
                       return singularPart(as<Kernel>(v[0]), as<Kernel>(v[1]));
                     }};
    b["condDistrib"] = {{R, R, M},
                        [](const auto& a, const auto& c, const auto&) {
                          requireSame(c, "the second variable's domain", a[0].type.dom,
                                      a[1].type.dom);
                          requireSame(c, "the measure's space", a[0].type.dom, a[2].type.dom);
                          return kernelType(a[1].type.cod, a[0].type.cod);
                        },
                        [](const auto& v, const auto&, const auto&) -> Value {
                          return condDistrib(as<RandomVariable>(v[0]), as<RandomVariable>(v[1]),
                                             as<Measure>(v[2]));
                        }};
    b["condExpKernel"] = {{M, VK::Partition},
                          [](const auto& a, const auto& c, const auto&) {
                            requireSame(c, "the partition's space", a[0].type.dom,
                                        a[1].type.dom);
                            return kernelType(a[0].type.dom, a[0].type.dom);
                          },
                          [](const auto& v, const auto&, const auto&) -> Value {
                            return condExpKernel(as<Measure>(v[0]), as<PartitionSigma>(v[1]));
                          }};
    b["condExp"] = {{VK::RealRV, M, VK::Partition},
                    [](const auto& a, const auto& c, const auto&) {
                      requireSame(c, "the measure's space", a[0].type.dom, a[1].type.dom);
                      requireSame(c, "the partition's space", a[0].type.dom, a[2].type.dom);
                      return onType(VK::RealRV, a[0].type.dom);
                    },
                    [](const auto& v, const auto&, const auto&) -> Value {
                      return condExp(as<RealRV>(v[0]), as<Measure>(v[1]),
                                     as<PartitionSigma>(v[2]));
                    }};
    b["entropy"] = {{M},
                    [](const auto&, const auto&, const auto&) { return plainType(VK::Real); },
                    [](const auto& v, const auto&, const auto&) -> Value {
                      return entropy(as<Measure>(v[0]));
                    }};
    b["kentropy"] = {{K, M},
                     [](const auto& a, const auto& c, const auto&) {
                       requireSame(c, "the measure's space", a[0].type.dom, a[1].type.dom);
                       return plainType(VK::Real);
                     },
                     [](const auto& v, const auto&, const auto&) -> Value {
                       return kernelEntropy(as<Kernel>(v[0]), as<Measure>(v[1]));
                     }};
    b["condentropy"] = {{R, R, M},
                        [](const auto& a, const auto& c, const auto&) {
                          requireSame(c, "the second variable's domain", a[0].type.dom,
                                      a[1].type.dom);
                          requireSame(c, "the measure's space", a[0].type.dom, a[2].type.dom);
                          return plainType(VK::Real);
                        },
                        [](const auto& v, const auto&, const auto&) -> Value {
                          return condEntropy(as<RandomVariable>(v[0]), as<RandomVariable>(v[1]),
                                             as<Measure>(v[2]));
                        }};
    b["kl"] = {{M, M},
               [](const auto& a, const auto& c, const auto&) {
                 requireSame(c, "the second measure's space", a[0].type.dom, a[1].type.dom);
                 return plainType(VK::ExtReal);
               },
               [](const auto& v, const auto&, const auto&) -> Value {
                 return klDiv(as<Measure>(v[0]), as<Measure>(v[1]));
               }};
    b["condkl"] = {{K, K, M},
                   [sameKernels](const auto& a, const auto& c, const auto&) {
                     sameKernels(a, c);
                     requireSame(c, "the measure's space", a[0].type.dom, a[2].type.dom);
                     return plainType(VK::ExtReal);
                   },
                   [](const auto& v, const auto&, const auto&) -> Value {
                     return condKL(as<Kernel>(v[0]), as<Kernel>(v[1]), as<Measure>(v[2]));
                   }};
    b["renyi"] = {{VK::Number, M, M},
                  [](const auto& a, const auto& c, const auto&) {
                    requireSame(c, "the second measure's space", a[1].type.dom, a[2].type.dom);
                    return plainType(VK::ExtReal);
                  },
                  [](const auto& v, const auto&, const auto&) -> Value {
                    return renyiDiv(as<Rational>(v[0]), as<Measure>(v[1]), as<Measure>(v[2]));
                  }};
    b["indep"] = {{R, R, M},
                  [](const auto& a, const auto& c, const auto&) {
                    requireSame(c, "the second variable's domain", a[0].type.dom, a[1].type.dom);
                    requireSame(c, "the measure's space", a[0].type.dom, a[2].type.dom);
                    return plainType(VK::Bool);
                  },
                  [](const auto& v, const auto&, const auto&) -> Value {
                    return indepFun(as<RandomVariable>(v[0]), as<RandomVariable>(v[1]),
                                    as<Measure>(v[2]));
                  }};
    b["condindep"] = {{R, R, R, M},
                      [](const auto& a, const auto& c, const auto&) {
                        requireSame(c, "the second variable's domain", a[0].type.dom,
                                    a[1].type.dom);
                        requireSame(c, "the third variable's domain", a[0].type.dom,
                                    a[2].type.dom);
                        requireSame(c, "the measure's space", a[0].type.dom, a[3].type.dom);
                        return plainType(VK::Bool);
                      },
                      [](const auto& v, const auto&, const auto&) -> Value {
                        return condIndepFun(as<RandomVariable>(v[0]), as<RandomVariable>(v[1]),
                                            PartitionSigma::generatedBy(as<RandomVariable>(v[2])),
                                            as<Measure>(v[3]));
                      }};
    b["traj"] = {{VK::Chain, VK::Number},
                 [](const auto& a, const auto& c, const auto& doc) {
                   return kernelType(a[0].type.dom, trajSpace(c, doc));
                 },
                 [](const auto& v, const auto& c, const auto&) -> Value {
                   return trajKernel(*as<const KernelChain*>(v[0]), horizon(c.args[1]));
                 }};
    b["law"] = {{VK::Chain, VK::Number},
                [](const auto& a, const auto& c, const auto& doc) {
                  if (!chainOf(a[0], doc).initial()) {
                    failExpr(ErrorCode::MissingInitialMeasure, c,
                             "law: chain '" + a[0].text + "' has no initial measure");
                  }
                  return onType(VK::Measure, trajSpace(c, doc));
                },
                [](const auto& v, const auto& c, const auto&) -> Value {
                  return trajectoryLaw(*as<const KernelChain*>(v[0]), horizon(c.args[1]));
                }};
    b["mgf"] = {{VK::RealRV, M, VK::Number},
                [](const auto& a, const auto& c, const auto&) {
                  requireSame(c, "the measure's space", a[0].type.dom, a[1].type.dom);
                  return plainType(VK::Real);
                },
                [](const auto& v, const auto&, const auto&) -> Value {
                  return mgf(as<RealRV>(v[0]), as<Measure>(v[1]), as<Rational>(v[2]));
                }};
    return b;
  }();
  return table;
}

// ------------------------------------------------------------ typechecking

std::vector<VK> sortsAsKinds(const std::vector<Sort>& sorts) {
  std::vector<VK> out;
  for (Sort s : sorts) {
    switch (s) {
      case Sort::Space: out.push_back(VK::Space); break;
      case Sort::Measure: out.push_back(VK::Measure); break;
      case Sort::Kernel: out.push_back(VK::Kernel); break;
      case Sort::RV: out.push_back(VK::RV); break;
      case Sort::RealRV: out.push_back(VK::RealRV); break;
      case Sort::Partition: out.push_back(VK::Partition); break;
      case Sort::Chain: out.push_back(VK::Chain); break;
    }
  }
  return out;
}

class Checker {
 public:
  explicit Checker(const Document& doc) : doc_(doc) {}

  // A bare top-level name: kernels first, then measures, then the rest.
  void top(Expr& e) {
    if (e.kind != Expr::Kind::Name) return check(e, std::nullopt);
    const auto kinds = sortsAsKinds(doc_.sortsOf(e.text));
    if (kinds.empty()) failExpr(ErrorCode::UnknownName, e, "unknown name '" + e.text + "'");
    for (VK preferred : {VK::Kernel, VK::Measure}) {
      for (VK k : kinds) {
        if (k == preferred) return check(e, k);
      }
    }
    check(e, kinds.front());
  }

  void check(Expr& e, std::optional<VK> expected) {
    switch (e.kind) {
      case Expr::Kind::Number:
        e.type = plainType(VK::Number);
        break;
      case Expr::Kind::Product:
        if (expected && *expected != VK::Space) {
          failExpr(ErrorCode::TypeError, e,
                   "expected a " + std::string(valueKindName(*expected)) +
                       ", found a space product");
        }
        check(e.args[0], VK::Space);
        check(e.args[1], VK::Space);
        e.type = onType(VK::Space, Space::product(e.args[0].type.dom, e.args[1].type.dom));
        break;
      case Expr::Kind::Name:
        e.type = resolveName(e, expected.value_or(VK::Kernel));
        break;
      case Expr::Kind::Call:
        e.type = checkCall(e);
        break;
    }
    if (expected && e.type.kind != *expected) {
      failExpr(ErrorCode::TypeError, e,
               "expected a " + std::string(valueKindName(*expected)) + ", found " +
                   describeType(e.type));
    }
  }

 private:
  Type resolveName(const Expr& e, VK want) {
    switch (want) {
      case VK::Space:
        if (auto* s = doc_.findSpace(e.text)) return onType(VK::Space, *s);
        break;
      case VK::Measure:
        if (auto* m = doc_.findMeasure(e.text)) return onType(VK::Measure, m->space());
        break;
      case VK::Kernel:
        if (auto* k = doc_.findKernel(e.text)) return kernelType(k->domain(), k->codomain());
        break;
      case VK::RV:
        if (auto* f = doc_.findRV(e.text)) return {VK::RV, f->domain(), f->codomain()};
        break;
      case VK::RealRV:
        if (auto* f = doc_.findRealRV(e.text)) return onType(VK::RealRV, f->domain());
        break;
      case VK::Partition:
        if (auto* g = doc_.findPartition(e.text)) return onType(VK::Partition, g->space());
        break;
      case VK::Chain:
        if (auto* c = doc_.findChain(e.text)) return onType(VK::Chain, c->chain->start());
        break;
      default:
        break;
    }
    const auto kinds = sortsAsKinds(doc_.sortsOf(e.text));
    if (kinds.empty()) failExpr(ErrorCode::UnknownName, e, "unknown name '" + e.text + "'");
    failExpr(ErrorCode::TypeError, e,
             "expected a " + std::string(valueKindName(want)) + ", '" + e.text + "' is a " +
                 std::string(valueKindName(kinds.front())));
  }

  Type checkCall(Expr& e) {
    const auto& table = builtins();
    const auto it = table.find(e.text);
    if (it == table.end()) failExpr(ErrorCode::UnknownName, e, "unknown function '" + e.text + "'");
    const Builtin& b = it->second;
    if (e.args.size() != b.params.size()) {
      failExpr(ErrorCode::ArityError, e,
               e.text + " takes " + std::to_string(b.params.size()) + " argument(s), given " +
                   std::to_string(e.args.size()));
    }
    for (std::size_t i = 0; i < e.args.size(); ++i) check(e.args[i], b.params[i]);
    return b.type(e.args, e, doc_);
  }

  const Document& doc_;
};

// -------------------------------------------------------------- evaluation

Value evalNode(const Expr& e, const Document& doc) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return e.number;
    case Expr::Kind::Product:
      return e.type.dom;
    case Expr::Kind::Name:
      switch (e.type.kind) {
        case VK::Space: return *doc.findSpace(e.text);
        case VK::Measure: return *doc.findMeasure(e.text);
        case VK::Kernel: return *doc.findKernel(e.text);
        case VK::RV: return *doc.findRV(e.text);
        case VK::RealRV: return *doc.findRealRV(e.text);
        case VK::Partition: return *doc.findPartition(e.text);
        case VK::Chain: return &*doc.findChain(e.text)->chain;
        default: break;
      }
      failExpr(ErrorCode::TypeError, e, "name '" + e.text + "' has no value");
    case Expr::Kind::Call: {
      std::vector<Value> args;
      args.reserve(e.args.size());
      for (const Expr& a : e.args) args.push_back(evalNode(a, doc));
      return builtins().find(e.text)->second.eval(args, e, doc);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "malformed expression");
}

std::string formatReal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <typename Values>
std::string tableText(const Space& space, const Values& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < space.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += space.atomLabel(i) + ": " + values(i);
  }
  return out + (space.size() == 0 ? "}" : " }");
}

}  // namespace

Expr parseExpr(std::string_view text, const Document& doc) {
  Expr e = ExprParser(text).run();
  Checker(doc).top(e);
  return e;
}

Value evalExpr(const Expr& expr, const Document& doc) { return evalNode(expr, doc); }

Type typeOfValue(const Value& value) {
  struct Visitor {
    Type operator()(const Space& s) const { return onType(VK::Space, s); }
    Type operator()(const Measure& m) const { return onType(VK::Measure, m.space()); }
    Type operator()(const Kernel& k) const { return kernelType(k.domain(), k.codomain()); }
    Type operator()(const RandomVariable& f) const {
      return {VK::RV, f.domain(), f.codomain()};
    }
    Type operator()(const RealRV& f) const { return onType(VK::RealRV, f.domain()); }
    Type operator()(const PartitionSigma& g) const { return onType(VK::Partition, g.space()); }
    Type operator()(const KernelChain* c) const { return onType(VK::Chain, c->start()); }
    Type operator()(const Rational&) const { return plainType(VK::Number); }
    Type operator()(double) const { return plainType(VK::Real); }
    Type operator()(const ExtReal&) const { return plainType(VK::ExtReal); }
    Type operator()(bool) const { return plainType(VK::Bool); }
    Type operator()(const DensityTable& d) const { return onType(VK::Density, d.space()); }
  };
  return std::visit(Visitor{}, value);
}

std::string formatValue(const Value& value) {
  struct Visitor {
    std::string operator()(const Space& s) const { return "space " + s.describe() + "\n"; }
    std::string operator()(const Measure& m) const { return formatMeasure("result", m); }
    std::string operator()(const Kernel& k) const { return formatKernel("result", k); }
    std::string operator()(const RandomVariable& f) const {
      return "rv result : " + f.domain().describe() + " -> " + f.codomain().describe() +
             " = " +
             tableText(f.domain(), [&](std::size_t i) { return f.codomain().atomLabel(f(i)); }) +
             "\n";
    }
    std::string operator()(const RealRV& f) const {
      return "realrv result on " + f.domain().describe() + " = " +
             tableText(f.domain(), [&](std::size_t i) { return rationalToString(f[i]); }) + "\n";
    }
    std::string operator()(const PartitionSigma& g) const {
      std::string out = "partition result on " + g.space().describe() + " = {";
      for (const auto& block : g.blocks()) {
        out += " {";
        for (std::size_t a : block) out += " " + g.space().atomLabel(a);
        out += " }";
      }
      return out + " }\n";
    }
    std::string operator()(const KernelChain* c) const {
      return "chain of length " + std::to_string(c->length()) + " from " +
             c->start().describe() + "\n";
    }
    std::string operator()(const Rational& q) const { return rationalToString(q) + "\n"; }
    std::string operator()(double v) const { return formatReal(v) + "\n"; }
    std::string operator()(const ExtReal& v) const {
      return (v.infinite ? std::string("inf") : formatReal(v.value)) + "\n";
    }
    std::string operator()(bool b) const { return b ? "true\n" : "false\n"; }
    std::string operator()(const DensityTable& d) const {
      return "density on " + d.space().describe() + " = " +
             tableText(d.space(), [&](std::size_t i) { return d[i].toString(); }) + "\n";
    }
  };
  return std::visit(Visitor{}, value);
}

std::vector<std::string> builtinNames() {
  std::vector<std::string> out;
  for (const auto& [name, b] : builtins()) out.push_back(name);
  return out;
}

}  // namespace mk::frontend
