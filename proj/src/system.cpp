#include "coxeter/system.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cox {

namespace {

bool valid_bond(int m) { return m == kInf || (m >= 2 && m <= 6); }

std::string bond_str(int m) { return m == kInf ? "inf" : std::to_string(m); }

std::vector<std::vector<int>> matrix_of_rank(int n, int off_diag) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, off_diag));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

struct Atom {
  std::vector<std::vector<int>> matrix;
};

int parse_rank(const std::string& name, size_t prefix_len, int min_rank) {
  const std::string digits = name.substr(prefix_len);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("unknown preset '" + name + "'");
  int n = std::stoi(digits);
  if (n < min_rank)
    throw ParseError("preset '" + name + "': rank must be at least " +
                     std::to_string(min_rank));
  return n;
}

Atom parse_atom(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'I') && name.substr(0, 3) == "I2(") {
    if (name.back() != ')') throw ParseError("malformed preset '" + name + "'");
    std::string label = name.substr(3, name.size() - 4);
    int m;
    if (label == "inf") {
      m = kInf;
    } else if (!label.empty() &&
               label.find_first_not_of("0123456789") == std::string::npos) {
      m = std::stoi(label);
      if (m < 2 || m > 6)
        throw ParseError("preset '" + name +
                         "': label must be 2..6 or inf in the exact engine");
    } else {
      throw ParseError("malformed preset '" + name + "'");
    }
    auto mat = matrix_of_rank(2, 2);
    mat[0][1] = mat[1][0] = m;
    return {mat};
  }
  if (name == "F4") {
    auto mat = matrix_of_rank(4, 2);
    mat[0][1] = mat[1][0] = 3;
    mat[1][2] = mat[2][1] = 4;
    mat[2][3] = mat[3][2] = 3;
    return {mat};
  }
  if (name == "H3" || name == "H4") {
    int n = name[1] - '0';
    auto mat = matrix_of_rank(n, 2);
    mat[0][1] = mat[1][0] = 5;
    for (int i = 1; i + 1 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
    return {mat};
  }
  if (name.rfind("Atilde", 0) == 0) {
    int n = parse_rank(name, 6, 1);
    if (n == 1) {
      auto mat = matrix_of_rank(2, kInf);
      return {mat};
    }
    auto mat = matrix_of_rank(n + 1, 2);
    for (int i = 0; i <= n; ++i) {
      int j = (i + 1) % (n + 1);
      mat[i][j] = mat[j][i] = 3;
    }
    return {mat};
  }
  switch (name.empty() ? '\0' : name[0]) {
    case 'A': {
      int n = parse_rank(name, 1, 1);
      auto mat = matrix_of_rank(n, 2);
      for (int i = 0; i + 1 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
      return {mat};
    }
    case 'B': {
      int n = parse_rank(name, 1, 2);
      auto mat = matrix_of_rank(n, 2);
      for (int i = 0; i + 2 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
      mat[n - 2][n - 1] = mat[n - 1][n - 2] = 4;
      return {mat};
    }
    case 'D': {
      int n = parse_rank(name, 1, 2);
      auto mat = matrix_of_rank(n, 2);
      for (int i = 0; i + 2 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
      if (n >= 3) mat[n - 3][n - 1] = mat[n - 1][n - 3] = 3;
      return {mat};
    }
    case 'Q':
      return {matrix_of_rank(parse_rank(name, 1, 1), 2)};
    case 'U':
      return {matrix_of_rank(parse_rank(name, 1, 1), kInf)};
    default:
      break;
  }
  throw ParseError("unknown preset '" + name + "'");
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::vector<int>> matrix,
                             std::vector<std::string> names)
    : matrix_(std::move(matrix)), names_(std::move(names)) {
  const int n = static_cast<int>(names_.size());
  if (n < 1) throw ParseError("Coxeter system: rank must be >= 1");
  if (static_cast<int>(matrix_.size()) != n)
    throw ParseError("Coxeter system: matrix size does not match rank");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix_[i].size()) != n)
      throw ParseError("Coxeter system: matrix row size does not match rank");
    if (matrix_[i][i] != 1)
      throw ParseError("Coxeter system: diagonal entry at (" +
                       std::to_string(i + 1) + "," + std::to_string(i + 1) +
                       ") must be 1");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] != matrix_[j][i])
        throw ParseError("Coxeter system: asymmetric entry at (" +
                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ")");
      if (!valid_bond(matrix_[i][j]))
        throw ParseError("Coxeter system: label " + bond_str(matrix_[i][j]) +
                         " at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) +
                         ") unsupported (allowed: 2..6, inf)");
    }
  }
  form_.assign(n, std::vector<FieldElement>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int m = matrix_[i][j];
      form_[i][j] = (m == kInf) ? FieldElement(-1)
                                : -FieldElement::cos_pi_over(m);
    }
  }
  description_ = "rank " + std::to_string(n);
}

int CoxeterSystem::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

CoxeterSystem CoxeterSystem::preset(const std::string& name) {
  // Split on 'x' (direct product) and '*' (free product).
  std::vector<std::string> atoms;
  std::vector<char> joins;
  std::string cur;
  int depth = 0;
  for (char ch : name) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == 'x' || ch == '*')) {
      atoms.push_back(cur);
      joins.push_back(ch);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  atoms.push_back(cur);

  std::vector<std::vector<int>> mat;
  for (size_t a = 0; a < atoms.size(); ++a) {
    Atom atom = parse_atom(atoms[a]);
    const int old_n = static_cast<int>(mat.size());
    const int k = static_cast<int>(atom.matrix.size());
    // Cross bonds: 2 for direct product, inf for free product.
    int cross = (a > 0 && joins[a - 1] == '*') ? kInf : 2;
    for (auto& row : mat) row.resize(old_n + k, cross);
    for (int i = 0; i < k; ++i) {
      std::vector<int> row(old_n + k, cross);
      for (int j = 0; j < k; ++j) row[old_n + j] = atom.matrix[i][j];
      mat.push_back(std::move(row));
    }
  }
  std::vector<std::string> names;
  for (size_t i = 0; i < mat.size(); ++i)
    names.push_back("s" + std::to_string(i + 1));
  CoxeterSystem sys(std::move(mat), std::move(names));
  sys.description_ = name + ", " + sys.description_;
  return sys;
}

CoxeterSystem CoxeterSystem::from_diagram_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int rank = -1;
  std::vector<std::vector<int>> mat;
  std::vector<std::vector<bool>> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok[0] == '#') continue;
    if (rank < 0) {
      try {
        rank = std::stoi(tok);
      } catch (...) {
        throw ParseError("diagram line 1: expected rank, got '" + tok + "'");
      }
      if (rank < 1) throw ParseError("diagram: rank must be >= 1");
      mat = matrix_of_rank(rank, 2);
      seen.assign(rank, std::vector<bool>(rank, false));
      continue;
    }
    int i, j;
    std::string mtok;
    try {
      i = std::stoi(tok);
    } catch (...) {
      throw ParseError("diagram line " + std::to_string(lineno) +
                       ": expected index, got '" + tok + "'");
    }
    if (!(ls >> j >> mtok))
      throw ParseError("diagram line " + std::to_string(lineno) +
                       ": expected 'i j m'");
    if (i < 1 || i > rank || j < 1 || j > rank)
      throw ParseError("diagram line " + std::to_string(lineno) +
                       ": index out of range");
    if (i == j)
      throw ParseError("diagram line " + std::to_string(lineno) +
                       ": entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") is diagonal");
    int m;
    if (mtok == "inf") {
      m = kInf;
    } else {
      try {
        m = std::stoi(mtok);
      } catch (...) {
        throw ParseError("diagram line " + std::to_string(lineno) +
                         ": bad label '" + mtok + "'");
      }
    }
    if (!valid_bond(m))
      throw ParseError("diagram entry " + std::to_string(i) + " " +
                       std::to_string(j) + ": label " + mtok +
                       " unsupported (allowed: 2..6, inf)");
    if (seen[i - 1][j - 1] && mat[i - 1][j - 1] != m)
      throw ParseError("diagram entry " + std::to_string(i) + " " +
                       std::to_string(j) + ": conflicting labels");
    seen[i - 1][j - 1] = seen[j - 1][i - 1] = true;
    mat[i - 1][j - 1] = mat[j - 1][i - 1] = m;
  }
  if (rank < 0) throw ParseError("diagram: empty input");
  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i) names.push_back("s" + std::to_string(i + 1));
  return CoxeterSystem(std::move(mat), std::move(names));
}

CoxeterSystem CoxeterSystem::load(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::exists(source, ec)) {
    std::ifstream f(source);
    std::ostringstream buf;
    buf << f.rdbuf();
    return from_diagram_text(buf.str());
  }
  return preset(source);
}

std::vector<std::string> preset_catalog() {
  return {
      "An        symmetric group S_{n+1} (path diagram)",
      "Bn        signed permutations, n >= 2 (last bond 4)",
      "Dn        even-signed permutations, n >= 2",
      "F4        spherical F4",
      "H3, H4    icosahedral types (first bond 5)",
      "I2(m)     dihedral, m in 2..6 or inf",
      "Atilden   affine cycle of rank n+1 (Atilde1 = I2(inf))",
      "Qn        n mutually commuting generators (hypercube)",
      "Un        rank-n universal system (all bonds inf)",
      "AxB       direct product of presets (cross bonds 2)",
      "A*B       free product of presets (cross bonds inf)",
  };
}

}  // namespace cox
