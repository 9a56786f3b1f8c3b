#pragma once
// Reverse-mode autodiff over Mat. A Tape records the forward computation;
// backward() walks it in reverse and accumulates gradients into the bound
// Parameters. Ops are free functions returning Var handles.

#include <functional>
#include <vector>

#include "rgg/mat.hpp"
#include "rgg/params.hpp"

namespace rgg {

class Tape;

struct Var {
  int id = -1;
  Tape* tape = nullptr;
  const Mat& val() const;
};

class Tape {
 public:
  Var input(Mat value);       // constant leaf, gradient discarded
  Var leaf(Parameter& p);     // parameter leaf

  // loss must be 1x1; repeated calls accumulate into Parameter::grad
  void backward(Var loss);

  const Mat& value(int id) const { return nodes_[id].value; }
  Mat& grad(int id) { return nodes_[id].grad; }
  int size() const { return static_cast<int>(nodes_.size()); }

  // op plumbing
  using BackFn = std::function<void(Tape&)>;
  Var push(Mat value, BackFn back);

 private:
  struct Node {
    Mat value;
    Mat grad;
    BackFn back;
    Parameter* param = nullptr;
  };
  std::vector<Node> nodes_;
};

// --- primitives ---------------------------------------------------------

Var matmul(Var a, Var b);
Var transpose(Var a);

// add/sub/mul accept equal shapes, a row vector broadcast over a's rows,
// or a 1x1 scalar broadcast
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);

Var scale(Var a, double s);
Var add_const(Var a, double c);
Var pow_const(Var a, double e);
Var relu(Var a);
Var log(Var a);
Var exp(Var a);

Var softmax_rows(Var a);
Var log_softmax_rows(Var a);
Var layer_norm_rows(Var a);  // normalize only; variance clamped at 1e-9

Var concat_cols(const std::vector<Var>& xs);
Var concat_rows(const std::vector<Var>& xs);
Var slice_cols(Var a, int c0, int c1);
Var reshape(Var a, int rows, int cols);
Var gather_rows(Var a, std::vector<int> idx);   // embedding/row lookup
Var pick_cols(Var a, std::vector<int> idx);     // one entry per row -> n x 1

Var sum(Var a);   // 1x1
Var mean(Var a);  // 1x1

// image patches: input (h*w) x c -> (ho*wo) x (k*k*c), zero-padded
Var im2col(Var a, int h, int w, int c, int k, int stride, int pad);

// --- gradient oracle -----------------------------------------------------

struct GradCheckReport {
  double max_rel_err = 0.0;
  int coords_checked = 0;
};

// loss_fn(record): evaluate the loss; when record is true it must also run
// backward so Parameter::grad holds analytic gradients. Central differences
// on up to coords_per_param sampled coordinates per parameter; relative
// error is |analytic - numeric| / max(1, |analytic|, |numeric|).
// Throws if re-evaluation of loss_fn gives a different value.
GradCheckReport finite_difference_check(
    const std::function<double(bool record)>& loss_fn, ParamStore& params,
    int coords_per_param, double eps, Rng& rng);

}  // namespace rgg
