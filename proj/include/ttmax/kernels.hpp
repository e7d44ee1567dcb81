#pragma once

#include "ttmax/dense_tensor.hpp"
#include "ttmax/tt_tensor.hpp"

namespace ttmax {

// Dense kernels come in two flavours.  The unsuffixed entry points are the
// production versions, parallelized with OpenMP where the loop is order
// independent; the *_serial versions are deliberately naive reference
// implementations kept around so tests can cross-check the fast paths.
// All results are deterministic regardless of thread count.

/// Materialize the represented tensor by sweeping partial chain products
/// left to right; each row block expands independently.
DenseTensor tt_to_dense(const TTTensor& tt);
/// Reference: evaluate every entry with tt_eval.
DenseTensor tt_to_dense_serial(const TTTensor& tt);

/// max_i |a_i - b_i| over two tensors of identical shape.
double max_abs_diff(const DenseTensor& a, const DenseTensor& b);
double max_abs_diff_serial(const DenseTensor& a, const DenseTensor& b);

/// max-norm of a - (tensor represented by tt).
double max_norm_error(const DenseTensor& a, const TTTensor& tt);
double max_norm_error_serial(const DenseTensor& a, const TTTensor& tt);

/// Entrywise metric projection onto the max-norm ball of the given radius
/// around `center`: out_i = center_i + clamp(x_i - center_i, -radius, radius).
DenseTensor clip_to_ball(const DenseTensor& x, const DenseTensor& center, double radius);
DenseTensor clip_to_ball_serial(const DenseTensor& x, const DenseTensor& center, double radius);

}  // namespace ttmax
