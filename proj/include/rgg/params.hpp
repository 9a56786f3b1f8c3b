#pragma once
// Named trainable parameters and checkpoint persistence.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "rgg/mat.hpp"
#include "rgg/rng.hpp"

namespace rgg {

struct Parameter {
  std::string name;
  Mat value;
  Mat grad;
};

class ParamStore {
 public:
  Parameter& create(const std::string& name, int rows, int cols);
  Parameter& at(const std::string& name);
  const Parameter& at(const std::string& name) const;
  const Parameter* find(const std::string& name) const;

  // registration order, stable across runs with the same config
  const std::vector<std::unique_ptr<Parameter>>& all() const { return order_; }
  std::vector<std::unique_ptr<Parameter>>& all() { return order_; }

  void zero_grads();
  std::size_t total_size() const;

 private:
  std::vector<std::unique_ptr<Parameter>> order_;
  std::unordered_map<std::string, Parameter*> by_name_;
};

// Xavier-uniform init over fan_in + fan_out.
void init_xavier(Parameter& p, Rng& rng);

// Checkpoint: JSON manifest (params with shapes and element offsets into the
// blob) plus a raw little-endian f64 blob next to it (.json -> .bin).
void save_checkpoint(const ParamStore& store, const std::string& manifest_path);
void load_checkpoint(ParamStore& store, const std::string& manifest_path);
std::string checkpoint_blob_path(const std::string& manifest_path);

}  // namespace rgg
