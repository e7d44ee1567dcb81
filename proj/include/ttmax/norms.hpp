#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ttmax/tt_tensor.hpp"

namespace ttmax {

// Largest Frobenius norm among the mode slices of a core.
double core_norm_f_inf(const TTCore& g);

// Product of core_norm_f_inf over all cores: an upper bound on the
// entrywise magnitude of the represented tensor and on its factorization
// quasinorm.
double gamma_tt_upper(const TTTensor& tt);

// Converts a rank-k CP representation (one n_s x k factor per mode) into the
// equivalent train: first core holds factor rows, interior cores hold
// diagonal slices, last core holds transposed rows.
TTTensor cp_to_tt(const std::vector<Eigen::MatrixXd>& factors);

// Product over factors of the largest row 2-norm; never smaller than
// gamma_tt_upper(cp_to_tt(factors)).
double gamma_cp_upper(const std::vector<Eigen::MatrixXd>& factors);

}  // namespace ttmax
