#pragma once

// Text syntax for algebra elements. Terms are joined by +/-; a term is a
// rational joined by '*' with x<i>^<k> and s<j> factors, e.g.
//   3/2*x1^2*s1*s2 - s2
// Canonical emission lists odd factors in ascending index order; the parser
// accepts factors in any order and normalizes with the reordering sign.
// Odd generators are named "s" by default; contexts working on the cotangent
// model print and accept "xi" as well.

#include <stdexcept>
#include <string>

#include "gbv/algebra.hpp"

namespace gbv {

class VectorField;

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

struct PrintOptions {
  std::string odd_name = "s";
};

std::string to_string(const Poly& p);
std::string to_string(const SuperFn& f, const PrintOptions& opts = {});
std::string to_string(const VectorField& d, const PrintOptions& opts = {});

// Parses into the ambient algebra Q[x^1..x^m] (x) Lambda(s^1..s^n).
// Accepts "s<j>" and "xi<j>" for the odd generators.
SuperFn parse_superfn(const std::string& text, int m, int n);

// Purely even input: any odd factor is a parse error.
Poly parse_poly(const std::string& text, int m);

// Derivation syntax: "(<superfn>)d/dx<i>" and "(<superfn>)d/ds<j>" terms
// joined by "+" ("d/dxi<j>" is accepted for the odd directions). The declared
// parity is inferred from the coefficients; mixed coefficients are an error.
VectorField parse_vectorfield(const std::string& text, int m, int n);

}  // namespace gbv
