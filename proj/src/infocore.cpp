#include "skregion/infocore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace skregion::infocore {

namespace {

constexpr double kConstructTol = 1e-9;
constexpr double kClampFloor = -1e-9;

std::size_t checkedProduct(const std::vector<VariableLabel>& vars,
                           const char* what) {
  std::size_t n = 1;
  for (const auto& v : vars) {
    if (v.name.empty()) throw NameError(std::string(what) + ": empty variable name");
    if (v.cardinality < 1) {
      throw ShapeError(std::string(what) + ": cardinality of '" + v.name +
                       "' must be >= 1");
    }
    n *= static_cast<std::size_t>(v.cardinality);
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v.name).second) {
      throw NameError(std::string(what) + ": duplicate variable '" + v.name + "'");
    }
  }
  return n;
}

void checkNonNegative(const std::vector<double>& values, const char* what) {
  for (double x : values) {
    if (!(x >= 0.0)) {
      throw ValidationError(std::string(what) + ": negative or NaN entry");
    }
  }
}

double clampMeasure(double raw, const char* what) {
  if (raw < kClampFloor) {
    throw NumericError(std::string(what) + ": value " + std::to_string(raw) +
                       " below numerical-consistency floor");
  }
  return raw < 0.0 ? 0.0 : raw + 0.0;
}

// Axes of `names` within dist, preserving dist order. Duplicates collapse.
std::vector<std::size_t> axesOf(const JointDistribution& dist,
                                const std::vector<std::string>& names) {
  std::vector<char> keep(dist.variables().size(), 0);
  for (const auto& n : names) keep[dist.axis(n)] = 1;
  std::vector<std::size_t> axes;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) axes.push_back(i);
  }
  return axes;
}

void requireDisjoint(const std::vector<std::string>& a,
                     const std::vector<std::string>& b, const char* what) {
  std::unordered_set<std::string_view> sa(a.begin(), a.end());
  for (const auto& n : b) {
    if (sa.count(n)) {
      throw ArgumentError(std::string(what) + ": sets overlap on '" + n + "'");
    }
  }
}

std::vector<std::string> unionOf(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Entropy in bits of a non-negative vector, 0 log 0 = 0.
double entropyOf(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return clampMeasure(h, "entropy");
}

}  // namespace

JointDistribution::JointDistribution(std::vector<VariableLabel> variables,
                                     std::vector<double> mass)
    : variables_(std::move(variables)), mass_(std::move(mass)) {
  const std::size_t expected = checkedProduct(variables_, "JointDistribution");
  if (mass_.size() != expected) {
    throw ShapeError("JointDistribution: mass has " +
                     std::to_string(mass_.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  checkNonNegative(mass_, "JointDistribution");
  const double s = total();
  if (std::abs(s - 1.0) > kConstructTol) {
    throw ValidationError("JointDistribution: mass sums to " +
                          std::to_string(s) + ", expected 1");
  }
}

JointDistribution JointDistribution::scalar() {
  return JointDistribution({}, {1.0});
}

JointDistribution JointDistribution::fromMarginal(VariableLabel variable,
                                                  std::vector<double> probs) {
  return JointDistribution({std::move(variable)}, std::move(probs));
}

bool JointDistribution::has(std::string_view name) const noexcept {
  for (const auto& v : variables_) {
    if (v.name == name) return true;
  }
  return false;
}

std::size_t JointDistribution::axis(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw NameError("unknown variable '" + std::string(name) + "'");
}

int JointDistribution::cardinality(std::string_view name) const {
  return variables_[axis(name)].cardinality;
}

double JointDistribution::total() const {
  return std::accumulate(mass_.begin(), mass_.end(), 0.0);
}

Kernel::Kernel(std::vector<VariableLabel> inputVars,
               std::vector<VariableLabel> outputVars,
               std::vector<double> table)
    : inputVars_(std::move(inputVars)),
      outputVars_(std::move(outputVars)),
      table_(std::move(table)) {
  inputCount_ = checkedProduct(inputVars_, "Kernel inputs");
  outputCount_ = checkedProduct(outputVars_, "Kernel outputs");
  for (const auto& in : inputVars_) {
    for (const auto& out : outputVars_) {
      if (in.name == out.name) {
        throw NameError("Kernel: variable '" + in.name +
                        "' on both sides");
      }
    }
  }
  if (outputVars_.empty()) throw ShapeError("Kernel: no output variables");
  if (table_.size() != inputCount_ * outputCount_) {
    throw ShapeError("Kernel: table has " + std::to_string(table_.size()) +
                     " entries, expected " +
                     std::to_string(inputCount_ * outputCount_));
  }
  checkNonNegative(table_, "Kernel");
  for (std::size_t r = 0; r < inputCount_; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < outputCount_; ++c) s += prob(r, c);
    if (std::abs(s - 1.0) > kConstructTol) {
      throw ValidationError("Kernel: row " + std::to_string(r) + " sums to " +
                            std::to_string(s) + ", expected 1");
    }
  }
}

Kernel Kernel::fromDistribution(std::vector<VariableLabel> outputVars,
                                std::vector<double> probs) {
  return Kernel({}, std::move(outputVars), std::move(probs));
}

Kernel Kernel::identity(const VariableLabel& input,
                        const VariableLabel& output) {
  if (input.cardinality != output.cardinality) {
    throw ShapeError("identity kernel needs equal cardinalities");
  }
  const std::size_t n = static_cast<std::size_t>(input.cardinality);
  std::vector<double> table(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = 1.0;
  return Kernel({input}, {output}, std::move(table));
}

JointDistribution marginalize(const JointDistribution& dist,
                              const std::vector<std::string>& keep) {
  const auto axes = axesOf(dist, keep);
  const auto& vars = dist.variables();

  std::vector<VariableLabel> outVars;
  outVars.reserve(axes.size());
  for (std::size_t a : axes) outVars.push_back(vars[a]);

  // Strides of the source tensor and of each kept axis in the result.
  std::vector<std::size_t> stride(vars.size(), 1);
  for (std::size_t i = vars.size(); i-- > 1;) {
    stride[i - 1] =
        stride[i] * static_cast<std::size_t>(vars[i].cardinality);
  }
  std::size_t outSize = 1;
  for (const auto& v : outVars) outSize *= static_cast<std::size_t>(v.cardinality);
  std::vector<std::size_t> outStride(axes.size(), 1);
  for (std::size_t i = axes.size(); i-- > 1;) {
    outStride[i - 1] = outStride[i] *
                       static_cast<std::size_t>(outVars[i].cardinality);
  }

  std::vector<double> out(outSize, 0.0);
  const auto& mass = dist.mass();
  for (std::size_t flat = 0; flat < mass.size(); ++flat) {
    std::size_t outIdx = 0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const std::size_t coord =
          (flat / stride[axes[k]]) %
          static_cast<std::size_t>(vars[axes[k]].cardinality);
      outIdx += coord * outStride[k];
    }
    out[outIdx] += mass[flat];
  }
  return JointDistribution(std::move(outVars), std::move(out));
}

JointDistribution attach(const JointDistribution& dist, const Kernel& k) {
  const auto& vars = dist.variables();
  for (const auto& out : k.outputVars()) {
    if (dist.has(out.name)) {
      throw NameError("attach: output variable '" + out.name +
                      "' already present");
    }
  }
  // Input axes in kernel-declared order, with cardinality agreement.
  std::vector<std::size_t> inAxes;
  inAxes.reserve(k.inputVars().size());
  for (const auto& in : k.inputVars()) {
    const std::size_t a = dist.axis(in.name);
    if (vars[a].cardinality != in.cardinality) {
      throw ShapeError("attach: cardinality mismatch on '" + in.name + "'");
    }
    inAxes.push_back(a);
  }

  std::vector<std::size_t> stride(vars.size(), 1);
  for (std::size_t i = vars.size(); i-- > 1;) {
    stride[i - 1] =
        stride[i] * static_cast<std::size_t>(vars[i].cardinality);
  }
  std::vector<std::size_t> inStride(inAxes.size(), 1);
  for (std::size_t i = inAxes.size(); i-- > 1;) {
    inStride[i - 1] =
        inStride[i] *
        static_cast<std::size_t>(k.inputVars()[i].cardinality);
  }

  std::vector<VariableLabel> outVars = vars;
  outVars.insert(outVars.end(), k.outputVars().begin(), k.outputVars().end());

  const std::size_t outBlock = k.outputCount();
  const auto& mass = dist.mass();
  std::vector<double> out(mass.size() * outBlock);
  for (std::size_t flat = 0; flat < mass.size(); ++flat) {
    std::size_t rowIdx = 0;
    for (std::size_t i = 0; i < inAxes.size(); ++i) {
      const std::size_t coord =
          (flat / stride[inAxes[i]]) %
          static_cast<std::size_t>(vars[inAxes[i]].cardinality);
      rowIdx += coord * inStride[i];
    }
    const double m = mass[flat];
    for (std::size_t c = 0; c < outBlock; ++c) {
      out[flat * outBlock + c] = m * k.prob(rowIdx, c);
    }
  }
  return JointDistribution(std::move(outVars), std::move(out));
}

double entropy(const JointDistribution& dist,
               const std::vector<std::string>& vars) {
  if (vars.empty()) return 0.0;
  return entropyOf(marginalize(dist, vars).mass());
}

double mutualInfo(const JointDistribution& dist,
                  const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
  requireDisjoint(a, b, "mutualInfo");
  const double raw =
      entropy(dist, a) + entropy(dist, b) - entropy(dist, unionOf(a, b));
  return clampMeasure(raw, "mutualInfo");
}

double condMutualInfo(const JointDistribution& dist,
                      const std::vector<std::string>& a,
                      const std::vector<std::string>& b,
                      const std::vector<std::string>& c) {
  requireDisjoint(a, b, "condMutualInfo");
  requireDisjoint(a, c, "condMutualInfo");
  requireDisjoint(b, c, "condMutualInfo");
  if (c.empty()) return mutualInfo(dist, a, b);
  const double raw = entropy(dist, unionOf(a, c)) +
                     entropy(dist, unionOf(b, c)) -
                     entropy(dist, unionOf(unionOf(a, b), c)) -
                     entropy(dist, c);
  return clampMeasure(raw, "condMutualInfo");
}

MarkovResult isMarkov(const JointDistribution& dist,
                      const std::vector<std::string>& x,
                      const std::vector<std::string>& y,
                      const std::vector<std::string>& z, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("isMarkov: tol must be positive");
  const double witness = condMutualInfo(dist, x, z, y);
  return MarkovResult{witness <= tol, witness};
}

}  // namespace skregion::infocore
