#pragma once

// Even functions of an angle ω written as functions of z = ω², continued to
// z < 0 (ω imaginary). With the metric η = diag(−1,+1,+1,+1) the Dirac-boost
// argument is z = −ω·ω: positive on the trigonometric (timelike) branch,
// negative on the hyperbolic (spacelike) branch, zero on the null branch.
// Every function here is smooth through z = 0, which is what makes the
// closed forms continuous across the three branches.

namespace elg::fn {

double cos_sqrt(double z);         // cos ω
double sinc_sqrt(double z);        // sin ω / ω
double one_minus_cos_sqrt(double z);  // (1 − cos ω) / ω²
double cos_half(double z);         // cos(ω/2)
double sin_half_over(double z);    // sin(ω/2) / ω
double tan_half_over(double z);    // tan(ω/2) / ω
double cot_scaled(double z);       // ω cot ω
double cot_scaled_defect(double z);  // (1 − ω cot ω) / ω²

}  // namespace elg::fn
