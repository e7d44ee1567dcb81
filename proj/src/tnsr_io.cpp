#include "ttmax/tnsr_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ttmax {

void write_tnsr(std::ostream& os, const DenseTensor& a) {
  os << "dims:";
  for (std::int64_t s = 0; s < a.shape().order(); ++s) {
    os << ' ' << a.shape().extent(s);
  }
  os << '\n';
  char buf[64];
  for (std::int64_t i = 0; i < a.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", a.data()[i]);
    os << buf;
  }
}

void write_tnsr_file(const std::string& path, const DenseTensor& a) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_tnsr(os, a);
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + path);
}

DenseTensor read_tnsr(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("tensor file: missing header line");
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "dims:") throw std::runtime_error("tensor file: header must start with 'dims:'");
  std::vector<std::int64_t> dims;
  std::int64_t n = 0;
  while (hs >> n) dims.push_back(n);
  if (!hs.eof()) throw std::runtime_error("tensor file: malformed dimension list");
  const Shape shape(dims);

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(shape.element_count()));
  double v = 0.0;
  while (static_cast<std::int64_t>(values.size()) < shape.element_count() && (is >> v)) {
    values.push_back(v);
  }
  if (static_cast<std::int64_t>(values.size()) != shape.element_count()) {
    throw std::runtime_error("tensor file: fewer values than the dimensions require");
  }
  std::string trailing;
  if (is >> trailing) throw std::runtime_error("tensor file: trailing content after the values");
  return DenseTensor::from_values(shape, std::move(values));
}

DenseTensor read_tnsr_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_tnsr(is);
}

}  // namespace ttmax
