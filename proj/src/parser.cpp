#include "crn/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace crn {

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

namespace {

struct Token {
  enum Kind { Ident, Number, Plus, Arrow, RevArrow, LBracket, RBracket, Comma, End };
  Kind kind;
  std::string text;
  int col;
};

class LineLexer {
 public:
  LineLexer(const std::string& line, int line_no) : line_(line), line_no_(line_no) {
    std::size_t hash = line_.find('#');
    if (hash != std::string::npos) line_ = line_.substr(0, hash);
    tokenize();
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return tokens_[pos_].kind == Token::End; }

  [[noreturn]] void fail(const Token& tok, const std::string& message) const {
    throw ParseError(line_no_, tok.col, message);
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < line_.size()) {
      char c = line_[i];
      int col = static_cast<int>(i) + 1;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i + 1;
        while (j < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_'))
          ++j;
        tokens_.push_back({Token::Ident, line_.substr(i, j - i), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && i + 1 < line_.size() &&
                  std::isdigit(static_cast<unsigned char>(line_[i + 1])))) {
        std::size_t j = i + (c == '-' ? 1 : 0);
        while (j < line_.size() &&
               (std::isdigit(static_cast<unsigned char>(line_[j])) || line_[j] == '.'))
          ++j;
        tokens_.push_back({Token::Number, line_.substr(i, j - i), col});
        i = j;
      } else if (c == '+') {
        tokens_.push_back({Token::Plus, "+", col});
        ++i;
      } else if (c == '-' && i + 1 < line_.size() && line_[i + 1] == '>') {
        tokens_.push_back({Token::Arrow, "->", col});
        i += 2;
      } else if (c == '<' && line_.compare(i, 3, "<=>") == 0) {
        tokens_.push_back({Token::RevArrow, "<=>", col});
        i += 3;
      } else if (c == '[') {
        tokens_.push_back({Token::LBracket, "[", col});
        ++i;
      } else if (c == ']') {
        tokens_.push_back({Token::RBracket, "]", col});
        ++i;
      } else if (c == ',') {
        tokens_.push_back({Token::Comma, ",", col});
        ++i;
      } else {
        throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Token::End, "", static_cast<int>(line_.size()) + 1});
  }

  std::string line_;
  int line_no_;
  std::size_t pos_ = 0;
  std::vector<Token> tokens_;
};

// Species name -> count, in first-appearance order within the whole document.
struct ComplexTerms {
  std::vector<std::pair<std::string, int>> terms;
};

int parse_coefficient(LineLexer& lex, const Token& tok) {
  if (tok.text.find('.') != std::string::npos)
    lex.fail(tok, "fractional coefficient '" + tok.text + "'");
  if (!tok.text.empty() && tok.text[0] == '-')
    lex.fail(tok, "negative coefficient '" + tok.text + "'");
  long long value = 0;
  for (char c : tok.text) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000) lex.fail(tok, "coefficient too large");
  }
  return static_cast<int>(value);
}

ComplexTerms parse_complex(LineLexer& lex) {
  ComplexTerms out;
  bool first = true;
  while (true) {
    Token tok = lex.take();
    if (tok.kind == Token::Number) {
      int coeff = parse_coefficient(lex, tok);
      if (coeff == 0) {
        // Bare `0` is the empty complex and must stand alone.
        if (!first || lex.peek().kind == Token::Ident)
          lex.fail(tok, "'0' denotes the empty complex and must stand alone");
        return out;
      }
      Token name = lex.take();
      if (name.kind != Token::Ident)
        lex.fail(name, "expected species name after coefficient");
      out.terms.emplace_back(name.text, coeff);
    } else if (tok.kind == Token::Ident) {
      out.terms.emplace_back(tok.text, 1);
    } else {
      lex.fail(tok, first ? "expected a complex" : "expected a species term after '+'");
    }
    first = false;
    if (lex.peek().kind != Token::Plus) return out;
    lex.take();
  }
}

std::string parse_rate_symbol(LineLexer& lex) {
  Token tok = lex.take();
  if (tok.kind != Token::Ident) lex.fail(tok, "expected rate symbol");
  return tok.text;
}

}  // namespace

NetworkDocument parse_network(const std::string& text) {
  struct RawStep {
    ComplexTerms reactant;
    ComplexTerms product;
    std::string rate_symbol;
    StepLocation loc;
    int symbol_col;
  };

  std::vector<RawStep> raw;
  std::vector<std::string> species;
  std::map<std::string, int> species_index;
  auto intern = [&](const std::string& name) {
    auto it = species_index.find(name);
    if (it != species_index.end()) return it->second;
    int idx = static_cast<int>(species.size());
    species.push_back(name);
    species_index.emplace(name, idx);
    return idx;
  };

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    LineLexer lex(line, line_no);
    if (lex.at_end()) continue;

    StepLocation loc{line_no, lex.peek().col};
    ComplexTerms lhs = parse_complex(lex);
    Token arrow = lex.take();
    bool reversible;
    if (arrow.kind == Token::Arrow) {
      reversible = false;
    } else if (arrow.kind == Token::RevArrow) {
      reversible = true;
    } else {
      lex.fail(arrow, "expected '->' or '<=>'");
    }

    Token lb = lex.take();
    if (lb.kind != Token::LBracket) lex.fail(lb, "expected '[' after arrow");
    int symbol_col = lex.peek().col;
    std::string forward = parse_rate_symbol(lex);
    std::string backward;
    int backward_col = 0;
    if (reversible) {
      Token comma = lex.take();
      if (comma.kind != Token::Comma)
        lex.fail(comma, "expected ',' between the two rate symbols of '<=>'");
      backward_col = lex.peek().col;
      backward = parse_rate_symbol(lex);
    }
    Token rb = lex.take();
    if (rb.kind != Token::RBracket) lex.fail(rb, "expected ']'");

    ComplexTerms rhs = parse_complex(lex);
    if (!lex.at_end()) lex.fail(lex.peek(), "trailing input after reaction step");

    for (const auto& [name, count] : lhs.terms) intern(name);
    for (const auto& [name, count] : rhs.terms) intern(name);

    raw.push_back({lhs, rhs, forward, loc, symbol_col});
    if (reversible) raw.push_back({rhs, lhs, backward, loc, backward_col});
  }

  if (raw.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "no reaction steps");

  const int m_count = static_cast<int>(species.size());
  std::vector<ReactionStep> steps;
  std::vector<StepLocation> locations;
  std::map<std::string, StepLocation> rate_seen;
  for (const RawStep& r : raw) {
    ReactionStep step;
    step.reactant.assign(m_count, 0);
    step.product.assign(m_count, 0);
    for (const auto& [name, count] : r.reactant.terms)
      step.reactant[species_index.at(name)] += count;
    for (const auto& [name, count] : r.product.terms)
      step.product[species_index.at(name)] += count;
    step.rate_symbol = r.rate_symbol;

    if (step.reactant == step.product)
      throw ParseError(r.loc.line, r.loc.col,
                       "null step: reactant complex equals product complex");
    auto [it, inserted] = rate_seen.emplace(r.rate_symbol, r.loc);
    if (!inserted)
      throw ParseError(r.loc.line, r.symbol_col,
                       "duplicate rate symbol '" + r.rate_symbol + "'");
    steps.push_back(std::move(step));
    locations.push_back(r.loc);
  }

  return NetworkDocument{ReactionNetwork(std::move(species), std::move(steps)), text,
                         std::move(locations)};
}

namespace {

std::string complex_to_string(const ReactionNetwork& net, const std::vector<int>& counts) {
  std::string out;
  for (int m = 0; m < net.species_count(); ++m) {
    if (counts[m] == 0) continue;
    if (!out.empty()) out += " + ";
    if (counts[m] != 1) out += std::to_string(counts[m]) + " ";
    out += net.species()[m];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string print_network(const ReactionNetwork& net) {
  std::string out;
  for (int r = 0; r < net.step_count(); ++r) {
    const ReactionStep& s = net.step(r);
    out += complex_to_string(net, s.reactant);
    out += " ->[" + s.rate_symbol + "] ";
    out += complex_to_string(net, s.product);
    out += "\n";
  }
  return out;
}

}  // namespace crn
