#include "pdm/errors.hpp"

#include <sstream>

namespace pdm {

namespace {

std::string str(real v) {
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(v);
    return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

DomainError::DomainError(const std::string& what, real x)
    : Error(what + " at x = " + str(x)), x_(x) {}

PositivityError::PositivityError(real x, real mass, real floor)
    : Error("mass " + str(mass) + " below positivity floor " + str(floor) + " at x = " + str(x)), x_(x) {}

NonFiniteError::NonFiniteError(std::size_t node, real x)
    : Error("non-finite value at node " + std::to_string(node) + " (x = " + str(x) + ")"), node_(node) {}

DecayError::DecayError(const std::string& what, real boundary_magnitude, real suggested_lo, real suggested_hi)
    : Error(what + "; boundary magnitude " + str(boundary_magnitude) + ", try domain [" + str(suggested_lo) + ", " +
            str(suggested_hi) + "]"),
      magnitude_(boundary_magnitude),
      lo_(suggested_lo),
      hi_(suggested_hi) {}

}  // namespace pdm
