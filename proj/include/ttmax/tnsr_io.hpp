#pragma once

#include <iosfwd>
#include <string>

#include "ttmax/dense_tensor.hpp"

namespace ttmax {

/// Text tensor format, version 1: a header line `dims: n_1 n_2 ... n_d`
/// followed by whitespace-separated entries in storage order (last index
/// fastest).  Writers emit 17 significant digits; readers accept any decimal
/// or scientific notation.
void write_tnsr(std::ostream& os, const DenseTensor& a);
void write_tnsr_file(const std::string& path, const DenseTensor& a);

DenseTensor read_tnsr(std::istream& is);
DenseTensor read_tnsr_file(const std::string& path);

}  // namespace ttmax
