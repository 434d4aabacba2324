#include "sumrank/params.hpp"

#include <stdexcept>

#include "sumrank/fields.hpp"

namespace sumrank {

CodeParams CodeParams::make(std::int64_t q, int m, int eta, int ell) {
  if (q < 2 || !prime_power_decompose(static_cast<std::uint64_t>(q)))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (eta < 1) throw std::invalid_argument("eta must be >= 1");
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (static_cast<std::int64_t>(ell) * eta > (std::int64_t{1} << 24)) throw std::invalid_argument("code length n = ell * eta too large");
  return CodeParams{q, m, eta, ell};
}

std::string CodeParams::to_string() const {
  return "(q=" + std::to_string(q) + ", m=" + std::to_string(m) + ", eta=" + std::to_string(eta) +
         ", ell=" + std::to_string(ell) + ", n=" + std::to_string(n()) + ")";
}

}  // namespace sumrank
