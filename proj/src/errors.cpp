#include "fillcurve/errors.hpp"
#include "fillcurve/rng.hpp"

namespace fillcurve {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_a_prime_power: return "NotAPrimePower";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::mixed_fields: return "MixedFields";
    case Errc::bad_subfield_degree: return "BadSubfieldDegree";
    case Errc::no_root_in_target: return "NoRootInTarget";
    case Errc::incompatible_fields: return "IncompatibleFields";
    case Errc::both_zero: return "BothZero";
    case Errc::degree_zero: return "DegreeZero";
    case Errc::zero_form: return "ZeroForm";
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_closed: return "NotClosed";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_irreducible: return "NotIrreducible";
    case Errc::parse: return "ParseError";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : Error(Errc::budget_exceeded, "scan budget " + std::to_string(budget) + " exceeded; need at least " +
                                       std::to_string(needed)),
      needed_(needed),
      budget_(budget) {}

std::uint64_t Rng::below(std::uint64_t n) {
  // Largest multiple of n representable; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x9e3779b97f4a7c15ULL));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  return mix_seed(mix_seed(seed, i), j);
}

}  // namespace fillcurve
