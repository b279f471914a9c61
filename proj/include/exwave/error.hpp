#ifndef EXWAVE_ERROR_HPP
#define EXWAVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace exwave {

enum class errc {
  ok = 0,
  invalid_argument,
  parse_error,
  quadrature_failure,
  grid_too_coarse,
  decay_violation,
  ellipticity_violation,
  equivalence_violation,
  out_of_domain,
  branch_contamination,
  hypothesis_failure,
  perturbation_too_large,
  family_too_sparse,
  bound_violation,
  cone_violation,
  unstable_scheme,
  insufficient_data,
  out_of_range,
  parameter_violation,
  obstacle_bounds_violation,
  jacobian_violation,
  inversion_failure,
  history_missing,
  io_error,
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) raise(code, msg);
}

}  // namespace exwave

#endif
