#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nilorb/core.hpp"

namespace nilorb {

/// Runs the command line; returns the process exit status
/// (0 success, 2 validation error, 3 internal invariant failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Matrix-engine algebras of ambient dimension <= max_dim (SL_R, SP_R, SU,
/// SO_R with p, q >= 1).
std::vector<AlgebraDescriptor> sweep_algebras(int max_dim);

struct SweepCase {
  AlgebraDescriptor alg;
  MultiplicityDatum datum;
  bool criterion_stable = false;
  bool matrix_stable = false;
  bool round_trip = false;
  std::string error;  // nonempty when the matrix pipeline threw
  bool agrees() const { return error.empty() && round_trip && criterion_stable == matrix_stable; }
};

/// For every nonzero enumerated datum: build the model, extract its datum,
/// decide negation on matrices and compare with the combinatorial verdict.
std::vector<SweepCase> oracle_sweep(const std::vector<AlgebraDescriptor>& algebras);

}  // namespace nilorb
