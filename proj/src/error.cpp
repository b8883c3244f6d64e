#include "softint/error.hpp"

#include <sstream>

namespace softint {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Closure: return "closure";
    case Axiom::Associativity: return "associativity";
    case Axiom::Identity: return "identity";
    case Axiom::Inverse: return "inverse";
    case Axiom::Shape: return "shape";
  }
  return "unknown";
}

namespace {

std::string axiom_message(Axiom axiom, const std::vector<std::size_t>& witness) {
  std::ostringstream out;
  out << "group axiom violated: " << to_string(axiom);
  if (!witness.empty()) {
    out << " at (";
    for (std::size_t i = 0; i < witness.size(); ++i)
      out << (i ? "," : "") << witness[i];
    out << ")";
  }
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<std::size_t> witness)
    : Error(axiom_message(axiom, witness)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

BudgetExceeded::BudgetExceeded(std::size_t required_log2, std::size_t budget)
    : Error("enumeration needs 2^" + std::to_string(required_log2) +
            " soft sets, budget is " + std::to_string(budget)),
      required_log2_(required_log2) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

}  // namespace softint
