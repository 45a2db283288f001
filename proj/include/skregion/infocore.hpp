#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skregion/errors.hpp"

namespace skregion::infocore {

/// A named finite-alphabet random variable. Symbols are 0..cardinality-1.
struct VariableLabel {
  std::string name;
  int cardinality = 0;

  friend bool operator==(const VariableLabel&, const VariableLabel&) = default;
};

/**
 * Labeled joint probability tensor over a list of finite variables.
 *
 * The mass is stored flat, row-major over the declared variable order
 * (last variable fastest). Instances are immutable after construction and
 * every operation on them is a pure function, so concurrent reads are safe.
 *
 * Construction validates: non-empty names, unique names, cardinality >= 1,
 * every entry >= 0, and total mass within 1e-9 of 1. Operations on valid
 * inputs keep the total within 1e-12.
 */
class JointDistribution {
 public:
  JointDistribution(std::vector<VariableLabel> variables,
                    std::vector<double> mass);

  /// The zero-variable distribution (a single entry of mass 1).
  static JointDistribution scalar();

  /// Single-variable distribution from a probability vector.
  static JointDistribution fromMarginal(VariableLabel variable,
                                        std::vector<double> probs);

  const std::vector<VariableLabel>& variables() const noexcept {
    return variables_;
  }
  const std::vector<double>& mass() const noexcept { return mass_; }
  std::size_t size() const noexcept { return mass_.size(); }

  bool has(std::string_view name) const noexcept;
  /// Axis position of a variable; NameError if absent.
  std::size_t axis(std::string_view name) const;
  int cardinality(std::string_view name) const;
  double total() const;

  friend bool operator==(const JointDistribution&,
                         const JointDistribution&) = default;

 private:
  std::vector<VariableLabel> variables_;
  std::vector<double> mass_;
};

/**
 * Conditional probability table mapping input tuples to distributions over
 * output tuples. Rows (one per input tuple, row-major over the declared
 * input order) must be non-negative and sum to 1 within 1e-9; each row is
 * itself row-major over the declared output order.
 */
class Kernel {
 public:
  Kernel(std::vector<VariableLabel> inputVars,
         std::vector<VariableLabel> outputVars, std::vector<double> table);

  /// Input-free kernel, i.e. a plain distribution over the output tuple.
  static Kernel fromDistribution(std::vector<VariableLabel> outputVars,
                                 std::vector<double> probs);

  /// Deterministic copy kernel from one variable to a same-size output.
  static Kernel identity(const VariableLabel& input,
                         const VariableLabel& output);

  const std::vector<VariableLabel>& inputVars() const noexcept {
    return inputVars_;
  }
  const std::vector<VariableLabel>& outputVars() const noexcept {
    return outputVars_;
  }
  std::size_t inputCount() const noexcept { return inputCount_; }
  std::size_t outputCount() const noexcept { return outputCount_; }

  double prob(std::size_t inIndex, std::size_t outIndex) const {
    return table_[inIndex * outputCount_ + outIndex];
  }
  const std::vector<double>& table() const noexcept { return table_; }

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  std::vector<VariableLabel> inputVars_;
  std::vector<VariableLabel> outputVars_;
  std::size_t inputCount_ = 0;
  std::size_t outputCount_ = 0;
  std::vector<double> table_;
};

/// Sum out all variables not in `keep`; kept axes stay in their original
/// relative order. Unknown names raise NameError.
JointDistribution marginalize(const JointDistribution& dist,
                              const std::vector<std::string>& keep);

/// Extend a joint with the kernel's outputs: new mass = old mass x row
/// probability. Kernel inputs are matched to joint variables by name
/// (ShapeError on cardinality mismatch); output names must be fresh
/// (NameError otherwise).
JointDistribution attach(const JointDistribution& dist, const Kernel& k);

/// Shannon entropy of the marginal on `vars`, in bits. 0 log 0 = 0 by an
/// explicit branch; the empty set has entropy 0.
double entropy(const JointDistribution& dist,
               const std::vector<std::string>& vars);

/// I(A;B) = H(A) + H(B) - H(A,B) in bits, clamped to 0 when within -1e-9
/// of it (NumericError when more negative). A and B must be disjoint.
double mutualInfo(const JointDistribution& dist,
                  const std::vector<std::string>& a,
                  const std::vector<std::string>& b);

/// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C), same clamping rules.
double condMutualInfo(const JointDistribution& dist,
                      const std::vector<std::string>& a,
                      const std::vector<std::string>& b,
                      const std::vector<std::string>& c);

struct MarkovResult {
  bool holds = false;
  /// The measured I(X;Z|Y) in bits.
  double witness = 0.0;
};

/// Tests the chain X - Y - Z, i.e. I(X;Z|Y) <= tol.
MarkovResult isMarkov(const JointDistribution& dist,
                      const std::vector<std::string>& x,
                      const std::vector<std::string>& y,
                      const std::vector<std::string>& z, double tol);

}  // namespace skregion::infocore
