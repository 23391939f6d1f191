#ifndef CRN_PARSER_HPP
#define CRN_PARSER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

struct StepLocation {
  int line = 0;
  int col = 0;
};

struct NetworkDocument {
  ReactionNetwork network;
  std::string source;
  std::vector<StepLocation> step_locations;  // one per parsed step
};

/// Parses the .crn grammar: one step per line,
///   <complex> ->[<rate-symbol>] <complex>
///   <complex> <=>[<kf>,<kb>] <complex>      (expands to two steps)
/// where a complex is `c1 Name1 + c2 Name2 + ...` with optional positive
/// integer coefficients (default 1), or a bare `0` for the empty complex.
/// `#` starts a comment. Species are indexed in order of first appearance.
NetworkDocument parse_network(const std::string& text);

/// Canonical printer: one step per line, single spaces, LF endings,
/// coefficient 1 omitted, empty complex printed as `0`, trailing newline.
/// parse(print(net)) is structurally equal to net.
std::string print_network(const ReactionNetwork& net);

}  // namespace crn

#endif
