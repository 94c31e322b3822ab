#pragma once

#include "mahler/equation.hpp"

#include <stdexcept>
#include <string>

namespace mahler {

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parses the equation input document: a single JSON object with fields
//   "k" (integer), "d" (integer),
//   "coefficients" (array of d+1 arrays of rational literals, index = power
//   of z, entry i is a_i), "initial_terms" (array of rational literals),
//   optional "name" (string).
// Rational literals are JSON strings in the exact literal format, or JSON
// integers. Unknown and duplicate fields are rejected. The parsed equation
// is validated before being returned.
MahlerEquation parse_equation_document(const std::string& text);

MahlerEquation load_equation_file(const std::string& path);

}  // namespace mahler
