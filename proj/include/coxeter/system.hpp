#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter/field.hpp"

namespace cox {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bond label for m(s,s') = infinity.
inline constexpr int kInf = 0;

/// A validated Coxeter matrix with named generators and the derived
/// bilinear form B(alpha_s, alpha_t) = -cos(pi / m(s,t)), B = -1 for m = inf.
/// Supported labels: diagonal 1, off-diagonal {2,3,4,5,6} or kInf.
class CoxeterSystem {
public:
  CoxeterSystem(std::vector<std::vector<int>> matrix,
                std::vector<std::string> names);

  /// Named presets: An, Bn (n>=2), Dn (n>=2), F4, H3, H4, I2(2..6), I2(inf),
  /// Atilde<n> (n>=1), Qn (n mutually commuting generators), Un (rank-n
  /// universal system, all bonds infinite). Compound expressions combine
  /// atoms with 'x' (direct product, cross bonds 2) and '*' (free product,
  /// cross bonds infinite), e.g. "A2xA1" or "A1*A1*A1".
  static CoxeterSystem preset(const std::string& name);

  /// Diagram file format: line 1 is the rank n; each further line is
  /// "i j m" with 1-based generator indices and m in {2,...,6} or "inf".
  /// Omitted pairs default to m = 2.
  static CoxeterSystem from_diagram_text(const std::string& text);

  /// Preset name, or contents of a diagram file if `source` names a file.
  static CoxeterSystem load(const std::string& source);

  int rank() const { return static_cast<int>(names_.size()); }
  int bond(int s, int t) const { return matrix_[s][t]; }
  const std::string& name(int s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;  // -1 if unknown
  bool commute(int s, int t) const { return matrix_[s][t] == 2; }
  const FieldElement& bilinear(int s, int t) const { return form_[s][t]; }
  std::string description() const { return description_; }

  bool same_presentation(const CoxeterSystem& o) const {
    return matrix_ == o.matrix_ && names_ == o.names_;
  }

private:
  std::vector<std::vector<int>> matrix_;
  std::vector<std::string> names_;
  std::vector<std::vector<FieldElement>> form_;
  std::string description_;
};

/// Names of the atomic presets, for the CLI `presets` listing.
std::vector<std::string> preset_catalog();

}  // namespace cox
