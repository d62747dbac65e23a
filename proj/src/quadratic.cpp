#include "padic/quadratic.hpp"

#include <sstream>

namespace padic {

std::string Quadratic::str() const {
  std::ostringstream out;
  auto term = [&out](const Int& coeff, const char* var, bool leading) {
    if (coeff == 0) return;
    if (coeff > 0 && !leading) out << "+";
    if (*var != '\0' && (coeff == 1 || coeff == -1)) {
      if (coeff == -1) out << "-";
    } else {
      out << coeff.str();
    }
    out << var;
  };
  term(a, "n^2", true);
  term(b, "n", false);
  term(c, "", false);
  std::string s = out.str();
  return s.empty() ? "0" : s;
}

}  // namespace padic
