#pragma once

#include <array>
#include <string>

#include "triqd/qmat.hpp"

namespace triqd {

/// Pauli-basis coefficients of the tripartite family. All entries live in
/// [-1, 1]; t holds the three-body coefficients (key "T" in parameter files).
struct ParamSet {
  std::array<double, 3> a{}, b{}, c{}, r{}, s{}, v{}, t{};

  /// a1 = a2 = b1 = b2 = v1 = v2 = v3 = 0 exactly.
  bool is_family_31() const;
  bool in_range() const;
};

struct ValidationReport {
  bool hermitian_ok = false;
  double trace_dev = 0.0;
  double min_eigenvalue = 0.0;
  /// Advisory only: sqrt(sum a^2) + sqrt(sum b^2) + sqrt(sum r^2) <= 1.
  /// Positivity is decided by min_eigenvalue, never by this flag.
  bool advisory_norm_condition = false;
  bool valid = false;
};

/// (1/8)(I + sum_i a_i s_i x I x I + ... + sum_i t_i s_i x s_i x s_i).
/// Hermitian with trace exactly 1; positivity is checked separately.
ComplexMatrix build_state(const ParamSet& p);

/// c |psi><psi| + (1-c) I/8 with |psi> = (|000> + |111>)/sqrt(2).
ComplexMatrix build_werner_ghz(double c);

ValidationReport validate_state(const ComplexMatrix& rho);
ValidationReport validate_state(const ComplexMatrix& rho, const ParamSet& p);

/// Parameter file: one JSON object with optional keys "a","b","c","r","s",
/// "v","T", each a 3-array of numbers in [-1,1]; missing keys default to
/// zeros, unknown keys are an error.
ParamSet load_param_file(const std::string& path);
ParamSet parse_params_json(const std::string& text);

}  // namespace triqd
