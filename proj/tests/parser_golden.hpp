#pragma once

// Golden parser cases: canonical AST print for valid input, byte offset of
// the error for invalid input.

#include <cstddef>
#include <string>
#include <vector>

struct GoldenCase {
  std::string text;
  bool valid;
  std::string ast;     // valid cases
  std::size_t offset;  // invalid cases
  std::string message; // invalid cases: prefix of the error message
};

inline const std::vector<GoldenCase>& parser_golden() {
  static const std::vector<GoldenCase> cases{
      {"x", true, "x", 0, ""},
      {"x^2 + y^2", true, "Add(Pow(x,2),Pow(y,2))", 0, ""},
      {"-x^2", true, "Neg(Pow(x,2))", 0, ""},
      {"2^-1", true, "Pow(2,Neg(1))", 0, ""},
      {"2^3^2", true, "Pow(2,Pow(3,2))", 0, ""},
      {"sin(pi*x)*y", true, "Mul(sin(Mul(pi,x)),y)", 0, ""},
      {"min(x,y)", true, "min(x,y)", 0, ""},
      {"1.5e3", true, "1500", 0, ""},
      {"x-y-1", true, "Sub(Sub(x,y),1)", 0, ""},
      {"x/y/2", true, "Div(Div(x,y),2)", 0, ""},
      {"-(-x)", true, "Neg(Neg(x))", 0, ""},
      {".5", true, "0.5", 0, ""},
      {"max(1, 2)", true, "max(1,2)", 0, ""},
      {"exp(abs(x - 0.5))", true, "exp(abs(Sub(x,0.5)))", 0, ""},
      {"3 * -x", true, "Mul(3,Neg(x))", 0, ""},
      {"(x+y)*(x-y)", true, "Mul(Add(x,y),Sub(x,y))", 0, ""},
      {"sqrt(x*x+y*y)", true, "sqrt(Add(Mul(x,x),Mul(y,y)))", 0, ""},
      {"cos(2*pi*y)", true, "cos(Mul(Mul(2,pi),y))", 0, ""},
      {"", false, "", 0, "empty expression"},
      {"x+", false, "", 2, "unexpected end of input"},
      {"(x", false, "", 2, "unexpected end of input"},
      {"x)", false, "", 1, "unexpected ')'"},
      {"z", false, "", 0, "unknown identifier 'z'"},
      {"sin(x,y)", false, "", 0, "function 'sin' expects 1 argument(s), got 2"},
      {"min(x)", false, "", 0, "function 'min' expects 2 argument(s), got 1"},
      {"2e", false, "", 2, "malformed exponent"},
      {"x y", false, "", 2, "unexpected 'y'"},
      {"sin x", false, "", 4, "unexpected 'x'"},
      {"1e999", false, "", 0, "number out of range"},
      {"cos()", false, "", 4, "unexpected ')'"},
  };
  return cases;
}
