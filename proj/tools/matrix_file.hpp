#ifndef QUDIT_TOOLS_MATRIX_FILE_HPP
#define QUDIT_TOOLS_MATRIX_FILE_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qudit/common.hpp"

namespace qudit::tools {

using OrderedJson = nlohmann::ordered_json;

// On-disk complex matrix format: entries are explicit [re, im] pairs,
// row-major, with the subsystem dimension list alongside.  Loaders reject
// bare reals so silent precision or shape mistakes cannot slip through.

struct MatrixFile {
  std::vector<int> dim_list;
  Matrix data;
  bool hermitian_declared = false;
};

inline OrderedJson matrix_to_json(const Matrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(OrderedJson::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline OrderedJson to_json(const MatrixFile& mf) {
  OrderedJson j;
  j["dim_list"] = mf.dim_list;
  j["hermitian"] = mf.hermitian_declared;
  j["data"] = matrix_to_json(mf.data);
  return j;
}

inline Matrix matrix_from_json(const OrderedJson& rows) {
  if (!rows.is_array() || rows.empty())
    throw InvalidStateError("matrix data must be a non-empty array of rows");
  const Eigen::Index nrows = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index ncols = static_cast<Eigen::Index>(rows.front().size());
  Matrix m(nrows, ncols);
  for (Eigen::Index r = 0; r < nrows; ++r) {
    const auto& row = rows.at(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != ncols)
      throw InvalidStateError("ragged matrix rows");
    for (Eigen::Index c = 0; c < ncols; ++c) {
      const auto& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number())
        throw InvalidStateError("matrix entries must be [re, im] pairs");
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

inline MatrixFile from_json(const OrderedJson& j) {
  MatrixFile mf;
  mf.dim_list = j.at("dim_list").get<std::vector<int>>();
  mf.hermitian_declared = j.value("hermitian", false);
  mf.data = matrix_from_json(j.at("data"));
  Eigen::Index side = 1;
  for (int d : mf.dim_list) side *= d;
  if (mf.data.rows() != side || mf.data.cols() != side)
    throw DimensionMismatchError(
        "dim_list product does not match the matrix side length");
  if (mf.hermitian_declared && !is_hermitian(mf.data, kInputTol))
    throw InvalidStateError("matrix declared Hermitian fails the check");
  return mf;
}

inline MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  OrderedJson j;
  in >> j;
  return from_json(j);
}

inline void write_json_file(const std::string& path, const OrderedJson& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qudit::tools

#endif  // QUDIT_TOOLS_MATRIX_FILE_HPP
