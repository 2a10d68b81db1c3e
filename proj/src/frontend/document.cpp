#include "mk/frontend/document.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mk/algebra.hpp"
#include "mk/error.hpp"
#include "mk/frontend/lexer.hpp"

namespace mk::frontend {

std::string_view sortName(Sort sort) {
  switch (sort) {
    case Sort::Space: return "space";
    case Sort::Measure: return "measure";
    case Sort::Kernel: return "kernel";
    case Sort::RV: return "rv";
    case Sort::RealRV: return "realrv";
    case Sort::Partition: return "partition";
    case Sort::Chain: return "chain";
  }
  return "?";
}

void Document::claim(Sort sort, const std::string& name, bool taken) {
  if (taken) {
    throw Error(ErrorCode::DuplicateName,
                std::string(sortName(sort)) + " '" + name + "' is already declared");
  }
  order_.emplace_back(sort, name);
}

void Document::addSpace(const std::string& name, Space space) {
  if (name == "Unit") throw Error(ErrorCode::DuplicateName, "'Unit' is reserved");
  claim(Sort::Space, name, spaces_.contains(name));
  spaces_.emplace(name, std::move(space));
}

void Document::addMeasure(const std::string& name, Measure measure) {
  claim(Sort::Measure, name, measures_.contains(name));
  measures_.emplace(name, std::move(measure));
}

void Document::addKernel(const std::string& name, Kernel kernel) {
  claim(Sort::Kernel, name, kernels_.contains(name));
  kernels_.emplace(name, std::move(kernel));
}

void Document::addRV(const std::string& name, RandomVariable rv) {
  claim(Sort::RV, name, rvs_.contains(name));
  rvs_.emplace(name, std::move(rv));
}

void Document::addRealRV(const std::string& name, RealRV rv) {
  claim(Sort::RealRV, name, realrvs_.contains(name));
  realrvs_.emplace(name, std::move(rv));
}

void Document::addPartition(const std::string& name, PartitionSigma partition) {
  claim(Sort::Partition, name, partitions_.contains(name));
  partitions_.emplace(name, std::move(partition));
}

void Document::addChain(const std::string& name, ChainDecl chain) {
  claim(Sort::Chain, name, chains_.contains(name));
  chains_.emplace(name, std::move(chain));
}

namespace {

template <typename Map>
const typename Map::mapped_type* findIn(const Map& m, std::string_view name) {
  const auto it = m.find(name);
  return it == m.end() ? nullptr : &it->second;
}

}  // namespace

const Space* Document::findSpace(std::string_view name) const {
  static const Space unit = Space::unit();
  if (name == "Unit") return &unit;
  return findIn(spaces_, name);
}
const Measure* Document::findMeasure(std::string_view name) const {
  return findIn(measures_, name);
}
const Kernel* Document::findKernel(std::string_view name) const { return findIn(kernels_, name); }
const RandomVariable* Document::findRV(std::string_view name) const { return findIn(rvs_, name); }
const RealRV* Document::findRealRV(std::string_view name) const {
  return findIn(realrvs_, name);
}
const PartitionSigma* Document::findPartition(std::string_view name) const {
  return findIn(partitions_, name);
}
const ChainDecl* Document::findChain(std::string_view name) const {
  return findIn(chains_, name);
}

std::vector<Sort> Document::sortsOf(std::string_view name) const {
  std::vector<Sort> out;
  if (findSpace(name)) out.push_back(Sort::Space);
  if (findMeasure(name)) out.push_back(Sort::Measure);
  if (findKernel(name)) out.push_back(Sort::Kernel);
  if (findRV(name)) out.push_back(Sort::RV);
  if (findRealRV(name)) out.push_back(Sort::RealRV);
  if (findPartition(name)) out.push_back(Sort::Partition);
  if (findChain(name)) out.push_back(Sort::Chain);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : ts_(tokenize(text)) {}

  Document run() {
    while (!ts_.atEnd()) declaration();
    return std::move(doc_);
  }

 private:
  using K = Token::Kind;

  void declaration() {
    const Token& kw = ts_.expectWord("at the start of a declaration");
    // Errors raised by core constructors are re-raised at the keyword.
    try {
      if (kw.text == "space") return spaceDecl();
      if (kw.text == "measure") return measureDecl();
      if (kw.text == "kernel") return kernelDecl();
      if (kw.text == "rv") return rvDecl();
      if (kw.text == "realrv") return realrvDecl();
      if (kw.text == "partition") return partitionDecl();
      if (kw.text == "chain") return chainDecl();
    } catch (const Error& e) {
      if (std::string_view(e.what()).find("line ") != std::string_view::npos) throw;
      failAt(e.code(), kw, e.what());
    }
    failAt(ErrorCode::SyntaxError, kw, "unknown declaration '" + kw.text + "'");
  }

  std::string declName() {
    const Token& t = ts_.expectWord("for the declared name");
    return t.text;
  }

  void spaceDecl() {
    const Token& nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expect(K::LBrace, "to open the atom list");
    std::vector<std::string> atoms;
    std::set<std::string> seen;
    while (!ts_.accept(K::RBrace)) {
      const Token& a = ts_.expectWord("as an atom label");
      if (!seen.insert(a.text).second) {
        failAt(ErrorCode::DuplicateName, a, "atom '" + a.text + "' repeated in space " + name);
      }
      atoms.push_back(a.text);
      ts_.accept(K::Comma);
    }
    if (name == "Unit") failAt(ErrorCode::DuplicateName, nameTok, "'Unit' is reserved");
    checkFresh(Sort::Space, name, nameTok);
    doc_.addSpace(name, Space::base(name, std::move(atoms)));
  }

  Space spacePrimary() {
    if (ts_.accept(K::LParen)) {
      Space s = spaceExpr();
      ts_.expect(K::RParen, "to close the space expression");
      return s;
    }
    const Token& t = ts_.expectWord("as a space name");
    const Space* s = doc_.findSpace(t.text);
    if (s == nullptr) failAt(ErrorCode::UnknownName, t, "unknown space '" + t.text + "'");
    return *s;
  }

  Space spaceExpr() {
    Space left = spacePrimary();
    if (!ts_.accept(K::Star)) return left;
    Space right = spacePrimary();
    if (ts_.peek().kind == K::Star) {
      failAt(ErrorCode::SyntaxError, ts_.peek(),
             "products are not associative; parenthesise A * B * C");
    }
    return Space::product(left, right);
  }

  // atom := word | '(' ')' | '(' atom ',' atom ')'
  std::string atomLabel() {
    if (ts_.accept(K::LParen)) {
      if (ts_.accept(K::RParen)) return "()";
      std::string l = atomLabel();
      ts_.expect(K::Comma, "between the coordinates of a product atom");
      std::string r = atomLabel();
      ts_.expect(K::RParen, "to close a product atom");
      return "(" + l + "," + r + ")";
    }
    return ts_.expectWord("as an atom label").text;
  }

  std::size_t atomOf(const Space& space) {
    const Token at = ts_.peek();
    const std::string label = atomLabel();
    const auto idx = space.findAtom(label);
    if (!idx) {
      failAt(ErrorCode::UnknownAtom, at,
             "'" + label + "' is not an atom of " + space.describe());
    }
    return *idx;
  }

  Rational rationalLiteral(bool allowNegative) {
    const Token start = ts_.peek();
    bool negative = false;
    if (ts_.peek().kind == K::Minus) {
      if (!allowNegative) failAt(ErrorCode::SyntaxError, start, "weights must be nonnegative");
      ts_.next();
      negative = true;
    }
    std::string text = ts_.expectWord("as a number").text;
    if (ts_.accept(K::Slash)) text += "/" + ts_.expectWord("as a denominator").text;
    try {
      Rational v = parseRational(text);
      return negative ? Rational(-v) : v;
    } catch (const Error& e) {
      failAt(e.code(), start, e.what());
    }
  }

  // { atom: weight, ... } covering every atom exactly once.
  std::vector<Scalar> weightTable(const Space& space) {
    const Token open = ts_.expect(K::LBrace, "to open a weight table");
    std::vector<std::optional<Scalar>> slots(space.size());
    while (!ts_.accept(K::RBrace)) {
      const Token at = ts_.peek();
      const std::size_t a = atomOf(space);
      ts_.expect(K::Colon, "after an atom");
      Scalar w(rationalLiteral(false));
      if (slots[a]) {
        failAt(ErrorCode::DuplicateName, at, "atom '" + space.atomLabel(a) + "' listed twice");
      }
      slots[a] = w;
      ts_.accept(K::Comma);
    }
    std::vector<Scalar> out;
    out.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) {
        failAt(ErrorCode::WeightCountMismatch, open,
               "no weight for atom '" + space.atomLabel(i) + "' of " + space.describe());
      }
      out.push_back(*slots[i]);
    }
    return out;
  }

  void measureDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expectKeyword("on");
    const Space space = spaceExpr();
    ts_.expect(K::Equals, "before the weights");
    auto weights = weightTable(space);
    checkFresh(Sort::Measure, name, nameTok);
    doc_.addMeasure(name, Measure(space, std::move(weights)));
  }

  void kernelDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expect(K::Colon, "before the kernel type");
    const Space dom = spaceExpr();
    ts_.expect(K::Arrow, "between domain and codomain");
    const Space cod = spaceExpr();
    ts_.expect(K::Equals, "before the rows");
    const Token open = ts_.expect(K::LBrace, "to open the rows");
    std::vector<std::optional<Measure>> rows(dom.size());
    while (!ts_.accept(K::RBrace)) {
      const Token at = ts_.peek();
      const std::size_t x = atomOf(dom);
      ts_.expect(K::Colon, "after a row atom");
      Measure row(cod, weightTable(cod));
      if (rows[x]) failAt(ErrorCode::DuplicateName, at, "row '" + dom.atomLabel(x) + "' twice");
      rows[x] = std::move(row);
      ts_.accept(K::Comma);
    }
    std::vector<Measure> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i]) {
        failAt(ErrorCode::WeightCountMismatch, open,
               "no row for atom '" + dom.atomLabel(i) + "' of " + dom.describe());
      }
      out.push_back(std::move(*rows[i]));
    }
    checkFresh(Sort::Kernel, name, nameTok);
    doc_.addKernel(name, Kernel(dom, cod, std::move(out)));
  }

  void rvDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expect(K::Colon, "before the map type");
    const Space dom = spaceExpr();
    ts_.expect(K::Arrow, "between domain and codomain");
    const Space cod = spaceExpr();
    ts_.expect(K::Equals, "before the table");
    const Token open = ts_.expect(K::LBrace, "to open the table");
    std::vector<std::optional<std::size_t>> table(dom.size());
    while (!ts_.accept(K::RBrace)) {
      const Token at = ts_.peek();
      const std::size_t x = atomOf(dom);
      ts_.expect(K::Arrow, "between an atom and its image");
      const std::size_t y = atomOf(cod);
      if (table[x]) failAt(ErrorCode::DuplicateName, at, "atom '" + dom.atomLabel(x) + "' twice");
      table[x] = y;
      ts_.accept(K::Comma);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table[i]) {
        failAt(ErrorCode::WeightCountMismatch, open,
               "no image for atom '" + dom.atomLabel(i) + "'");
      }
      out.push_back(*table[i]);
    }
    checkFresh(Sort::RV, name, nameTok);
    doc_.addRV(name, RandomVariable(dom, cod, std::move(out)));
  }

  void realrvDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expectKeyword("on");
    const Space dom = spaceExpr();
    ts_.expect(K::Equals, "before the values");
    const Token open = ts_.expect(K::LBrace, "to open the values");
    std::vector<std::optional<Rational>> values(dom.size());
    while (!ts_.accept(K::RBrace)) {
      const Token at = ts_.peek();
      const std::size_t x = atomOf(dom);
      ts_.expect(K::Colon, "after an atom");
      Rational v = rationalLiteral(true);
      if (values[x]) failAt(ErrorCode::DuplicateName, at, "atom '" + dom.atomLabel(x) + "' twice");
      values[x] = v;
      ts_.accept(K::Comma);
    }
    std::vector<Rational> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i]) {
        failAt(ErrorCode::WeightCountMismatch, open,
               "no value for atom '" + dom.atomLabel(i) + "'");
      }
      out.push_back(*values[i]);
    }
    checkFresh(Sort::RealRV, name, nameTok);
    doc_.addRealRV(name, RealRV(dom, std::move(out)));
  }

  void partitionDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ts_.expectKeyword("on");
    const Space space = spaceExpr();
    ts_.expect(K::Equals, "before the blocks");
    const Token open = ts_.expect(K::LBrace, "to open the blocks");
    std::vector<std::vector<std::size_t>> blocks;
    while (!ts_.accept(K::RBrace)) {
      ts_.expect(K::LBrace, "to open a block");
      std::vector<std::size_t> block;
      while (!ts_.accept(K::RBrace)) {
        block.push_back(atomOf(space));
        ts_.accept(K::Comma);
      }
      blocks.push_back(std::move(block));
      ts_.accept(K::Comma);
    }
    checkFresh(Sort::Partition, name, nameTok);
    try {
      doc_.addPartition(name, PartitionSigma(space, std::move(blocks)));
    } catch (const Error& e) {
      failAt(e.code(), open, e.what());
    }
  }

  const Measure& measureRef() {
    const Token& t = ts_.expectWord("as a measure name");
    const Measure* m = doc_.findMeasure(t.text);
    if (m == nullptr) failAt(ErrorCode::UnknownName, t, "unknown measure '" + t.text + "'");
    return *m;
  }

  const Kernel& kernelRef(std::string* name) {
    const Token& t = ts_.expectWord("as a kernel name");
    const Kernel* k = doc_.findKernel(t.text);
    if (k == nullptr) failAt(ErrorCode::UnknownName, t, "unknown kernel '" + t.text + "'");
    *name = t.text;
    return *k;
  }

  void chainDecl() {
    const Token nameTok = ts_.peek();
    const std::string name = declName();
    ChainDecl decl;
    if (ts_.accept(K::Equals)) {
      ts_.expectKeyword("markov");
      ts_.expect(K::LParen, "after markov");
      decl.form = ChainDecl::Form::Markov;
      decl.initial = ts_.peek().text;
      const Measure& initial = measureRef();
      ts_.expect(K::Comma, "after the initial measure");
      const Kernel& step = kernelRef(&decl.step);
      ts_.expect(K::Comma, "after the step kernel");
      const Token& lenTok = ts_.expectWord("as the chain length");
      decl.length = parseLength(lenTok);
      ts_.expect(K::RParen, "to close markov(...)");
      decl.start = step.domain();
      decl.chain = markovChain(initial, step, decl.length);
    } else {
      ts_.expect(K::Colon, "or '=' after the chain name");
      decl.form = ChainDecl::Form::Steps;
      decl.start = spaceExpr();
      std::optional<Measure> initial;
      if (ts_.peek().kind == K::Word && ts_.peek().text == "init") {
        ts_.next();
        decl.initial = ts_.peek().text;
        initial = measureRef();
      }
      ts_.expect(K::Equals, "before the step list");
      ts_.expect(K::LBrace, "to open the step list");
      std::vector<Kernel> steps;
      while (!ts_.accept(K::RBrace)) {
        std::string stepName;
        steps.push_back(kernelRef(&stepName));
        decl.steps.push_back(stepName);
        ts_.accept(K::Comma);
      }
      decl.chain = KernelChain(decl.start, std::move(steps), std::move(initial));
    }
    checkFresh(Sort::Chain, name, nameTok);
    doc_.addChain(name, std::move(decl));
  }

  static std::size_t parseLength(const Token& t) {
    if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), ::isdigit) ||
        t.text.size() > 6) {
      failAt(ErrorCode::SyntaxError, t, "expected a chain length, found '" + t.text + "'");
    }
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  void checkFresh(Sort sort, const std::string& name, const Token& at) {
    for (Sort s : doc_.sortsOf(name)) {
      if (s == sort) {
        failAt(ErrorCode::DuplicateName, at,
               std::string(sortName(sort)) + " '" + name + "' is already declared");
      }
    }
  }

  TokenStream ts_;
  Document doc_;
};

std::string weightsText(const Measure& mu) {
  std::string out = "{";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += mu.space().atomLabel(i) + ": " + mu[i].toString();
  }
  out += mu.size() == 0 ? "}" : " }";
  return out;
}

}  // namespace

Document parseDocument(std::string_view text) { return Parser(text).run(); }

std::string formatMeasure(const std::string& name, const Measure& mu) {
  return "measure " + name + " on " + mu.space().describe() + " = " + weightsText(mu) + "\n";
}

std::string formatKernel(const std::string& name, const Kernel& kappa) {
  std::string out = "kernel " + name + " : " + kappa.domain().describe() + " -> " +
                    kappa.codomain().describe() + " = {\n";
  for (std::size_t x = 0; x < kappa.domain().size(); ++x) {
    out += "  " + kappa.domain().atomLabel(x) + ": " + weightsText(kappa.row(x)) + "\n";
  }
  return out + "}\n";
}

std::string serializeDocument(const Document& doc) {
  std::ostringstream out;
  for (const auto& [sort, name] : doc.order()) {
    switch (sort) {
      case Sort::Space: {
        const Space& s = *doc.findSpace(name);
        out << "space " << name << " {";
        for (std::size_t i = 0; i < s.size(); ++i) out << ' ' << s.atomLabel(i);
        out << (s.size() == 0 ? "}" : " }") << '\n';
        break;
      }
      case Sort::Measure:
        out << formatMeasure(name, *doc.findMeasure(name));
        break;
      case Sort::Kernel:
        out << formatKernel(name, *doc.findKernel(name));
        break;
      case Sort::RV: {
        const RandomVariable& f = *doc.findRV(name);
        out << "rv " << name << " : " << f.domain().describe() << " -> "
            << f.codomain().describe() << " = {";
        for (std::size_t i = 0; i < f.domain().size(); ++i) {
          out << (i == 0 ? " " : ", ") << f.domain().atomLabel(i) << " -> "
              << f.codomain().atomLabel(f(i));
        }
        out << (f.domain().size() == 0 ? "}" : " }") << '\n';
        break;
      }
      case Sort::RealRV: {
        const RealRV& f = *doc.findRealRV(name);
        out << "realrv " << name << " on " << f.domain().describe() << " = {";
        for (std::size_t i = 0; i < f.domain().size(); ++i) {
          out << (i == 0 ? " " : ", ") << f.domain().atomLabel(i) << ": "
              << rationalToString(f[i]);
        }
        out << (f.domain().size() == 0 ? "}" : " }") << '\n';
        break;
      }
      case Sort::Partition: {
        const PartitionSigma& g = *doc.findPartition(name);
        out << "partition " << name << " on " << g.space().describe() << " = {";
        for (const auto& block : g.blocks()) {
          out << " {";
          for (std::size_t a : block) out << ' ' << g.space().atomLabel(a);
          out << " }";
        }
        out << (g.blocks().empty() ? "}" : " }") << '\n';
        break;
      }
      case Sort::Chain: {
        const ChainDecl& c = *doc.findChain(name);
        if (c.form == ChainDecl::Form::Markov) {
          out << "chain " << name << " = markov(" << c.initial << ", " << c.step << ", "
              << c.length << ")\n";
        } else {
          out << "chain " << name << " : " << c.start.describe();
          if (!c.initial.empty()) out << " init " << c.initial;
          out << " = {";
          for (std::size_t i = 0; i < c.steps.size(); ++i) {
            out << (i == 0 ? " " : ", ") << c.steps[i];
          }
          out << (c.steps.empty() ? "}" : " }") << '\n';
        }
        break;
      }
    }
  }
  return out.str();
}

}  // namespace mk::frontend
