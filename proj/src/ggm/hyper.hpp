#pragma once

namespace ggm {

// Prior and sampler tuning. Zero means "unset" for the fields with
// data-dependent defaults (dbar, M, upsilon, tau); validate_hyperparams
// fills those in.
struct Hyperparams {
  double theta = 0.0;    // slab probability, in (0,1)
  double g1 = 1.0;       // slab standard deviation, > 0
  double lambda = 0.0;   // diagonal Exp rate parameter (rate lambda/2), > 0
  int dbar = 0;          // max node degree; default p-1
  double p_birth = 0.75; // BDMH move-class probabilities
  double p_death = 0.125;
  double upsilon = 0.0;  // GIMH tempering, in (0,1]; default 0.75
  int m_moves = 0;       // inner moves per column; default ceil(sqrt(p))
  double tau = 0.0;      // LR slab precision; default g1^-2

  double p_swap() const { return 1.0 - p_birth - p_death; }
};

// Checks ranges and fills the unset defaults for a problem of size p.
Hyperparams validate_hyperparams(Hyperparams h, int p);

}  // namespace ggm
