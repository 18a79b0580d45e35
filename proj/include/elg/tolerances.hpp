#pragma once

namespace elg {

/// Numerical thresholds shared by the library. Defaults are the shipped values.
struct Tolerances {
  double lin = 1e-12;     // linear-algebra identities on 4x4 matrices
  double det = 1e-10;     // |det - 1| for group elements
  double param = 1e-9;    // parameter-space comparisons
  double fact = 1e-10;    // Frobenius residual accepted from factorize_wlr
  double null = 1e-8;     // |ω·ω| < null·|ω|² classifies a Dirac boost as null
  double group = 1e-8;    // relative defect of M·bar(M) = 1 accepted as "in the group"
  double chart = 1e-14;   // smallest cos²(ω/2) accepted by the W·L·R chart
  double fd = 1e-6;       // finite-difference agreement
  double h_fd = 1e-5;     // central-difference step
  double cond_max = 1e8;  // largest Θ condition number accepted for solves
  int max_iter = 50;      // Gauss-Newton iterations per start
  int max_restarts = 4;   // random restarts after a stall
};

}  // namespace elg
