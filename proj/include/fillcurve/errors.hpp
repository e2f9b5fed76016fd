#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fillcurve {

enum class Errc {
  not_a_prime_power,
  division_by_zero,
  mixed_fields,
  bad_subfield_degree,
  no_root_in_target,
  incompatible_fields,
  both_zero,
  degree_zero,
  zero_form,
  degree_mismatch,
  too_large,
  precondition_violated,
  budget_exceeded,
  not_closed,
  even_characteristic,
  index_out_of_range,
  not_irreducible,
  parse,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the scan oracle; carries the smallest budget that would have sufficed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

}  // namespace fillcurve
