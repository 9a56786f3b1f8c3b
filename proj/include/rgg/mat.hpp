#pragma once
// Row-major 2-D matrix of 64-bit floats. All model math runs on these;
// scalars are 1x1, row vectors 1xn.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgg {

#define RGG_CHECK(cond, msg)                                        \
  do {                                                              \
    if (!(cond)) throw std::logic_error(std::string("rgg: ") + msg); \
  } while (0)

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    RGG_CHECK(rows >= 0 && cols >= 0, "Mat: negative shape");
  }

  static Mat full(int rows, int cols, double v) {
    Mat m(rows, cols);
    for (auto& x : m.data_) x = v;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool same_shape(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  void fill(double v) {
    for (auto& x : data_) x = v;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool all_finite() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

}  // namespace rgg
