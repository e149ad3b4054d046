#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "posemoe/errors.hpp"
#include "posemoe/rng.hpp"

namespace posemoe {

using Shape = std::vector<std::size_t>;

std::size_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

namespace detail {

/// One node of a recorded computation graph. Values are immutable after
/// construction; the gradient slot is the only mutable state. Each forward
/// pass builds a fresh DAG whose leaves are the (shared) parameter nodes,
/// so independent graphs can live on separate threads.
struct Node {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // empty until backward (or accumulation) touches it
  bool requires_grad = false;
  bool live = false;  // reaches a requires_grad leaf
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;  // leaves have none

  std::size_t numel() const { return value.size(); }
  void ensure_grad() {
    if (grad.size() != value.size()) grad.assign(value.size(), 0.0);
  }
};

}  // namespace detail

/// Dense row-major tensor of 64-bit reals with reverse-mode differentiation.
/// Copying a Tensor copies a handle to the same node.
class Tensor {
 public:
  Tensor() = default;

  /// Leaf with no gradient. Entries must be finite.
  static Tensor constant(Shape shape, std::vector<double> data);
  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double v);
  static Tensor scalar(double v) { return constant({1}, {v}); }

  /// Trainable leaf (gradient slot allocated lazily). Entries must be finite.
  static Tensor parameter(Shape shape, std::vector<double> data);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const { return node_->shape; }
  std::size_t numel() const { return node_->numel(); }
  std::size_t extent(std::size_t axis) const { return node_->shape.at(axis); }
  const std::vector<double>& value() const { return node_->value; }
  bool requires_grad() const { return node_->requires_grad; }

  /// Gradient slot; allocated (zero-filled) on first access.
  std::vector<double>& grad() {
    node_->ensure_grad();
    return node_->grad;
  }
  const std::vector<double>& grad() const {
    node_->ensure_grad();
    return node_->grad;
  }
  void zero_grad() { node_->grad.assign(node_->value.size(), 0.0); }

  /// In-place value update for optimizers; leaves only.
  std::vector<double>& mutable_value();

  double item() const;

  std::shared_ptr<detail::Node> node() const { return node_; }

 private:
  explicit Tensor(std::shared_ptr<detail::Node> node) : node_(std::move(node)) {}
  std::shared_ptr<detail::Node> node_;

  friend Tensor make_op(Shape shape, std::vector<double> value,
                        std::vector<Tensor> parents,
                        std::function<void(detail::Node&)> backward_fn);
};

Tensor make_op(Shape shape, std::vector<double> value, std::vector<Tensor> parents,
               std::function<void(detail::Node&)> backward_fn);

// ----- elementwise -----
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& x, double c);
Tensor gelu(const Tensor& x);
Tensor sigmoid(const Tensor& x);
Tensor sqrt(const Tensor& x);
Tensor abs(const Tensor& x);

inline Tensor operator+(const Tensor& a, const Tensor& b) { return add(a, b); }
inline Tensor operator-(const Tensor& a, const Tensor& b) { return sub(a, b); }
inline Tensor operator*(const Tensor& a, const Tensor& b) { return mul(a, b); }

// ----- broadcasting (only the forms the model needs) -----
/// x[..., n] + b[n]
Tensor add_bias(const Tensor& x, const Tensor& b);
/// x[..., C] * s[..., 1], s broadcast across the last axis
Tensor scale_channels(const Tensor& x, const Tensor& s);
/// x * s where s has shape [1]
Tensor scale_by(const Tensor& x, const Tensor& s);
/// repeat x along a new leading axis of extent n
Tensor tile_front(const Tensor& x, std::size_t n);

// ----- matrix products (Eigen-backed kernels) -----
Tensor matmul(const Tensor& a, const Tensor& b);            // [m,k]x[k,n]
Tensor bmm(const Tensor& a, const Tensor& b);               // [N,m,k]x[N,k,n]
Tensor bmm_nt(const Tensor& a, const Tensor& b);            // [N,m,k]x[N,n,k]^T

// ----- shape -----
Tensor reshape(const Tensor& x, Shape shape);
Tensor permute(const Tensor& x, const std::vector<std::size_t>& perm);
Tensor concat_last(const Tensor& a, const Tensor& b);
Tensor slice_last(const Tensor& x, std::size_t start, std::size_t len);
Tensor slice_front(const Tensor& x, std::size_t start, std::size_t len);

// ----- reductions -----
Tensor sum_last(const Tensor& x);
Tensor sum_all(const Tensor& x);
Tensor mean_all(const Tensor& x);
Tensor mean_front(const Tensor& x);

// ----- normalization -----
Tensor softmax(const Tensor& x, std::size_t axis);
Tensor layer_norm(const Tensor& x, const Tensor& gain, const Tensor& bias);

/// x[..., in] * w[in, out] + b[out]; pass an undefined Tensor to skip the bias.
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

/// Standard normal draws, deterministic per rng state.
Tensor gauss_sample(Rng& rng, Shape shape, bool requires_grad = false);

/// Reverse-mode accumulation from a scalar loss. Gradients of requires_grad
/// leaves accumulate additively across calls; intermediate nodes are reset
/// per call.
void backward(const Tensor& loss);

bool all_finite(const Tensor& t);

/// Named, ordered collection of trainable tensors. Iteration order is the
/// registration order, which makes optimizer sweeps and serialization
/// deterministic.
class ParameterStore {
 public:
  struct Entry {
    std::string name;
    Tensor tensor;
    bool weight_decay = true;
  };

  Tensor add(const std::string& name, Tensor t, bool weight_decay = true);
  const Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  std::size_t size() const { return entries_.size(); }
  std::size_t parameter_count() const;
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

  void zero_grad();

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace posemoe
