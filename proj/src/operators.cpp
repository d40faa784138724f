#include "padic/operators.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace padic {

namespace {

Rational p_power(const Prime& p, long e) { return pow(Rational(p.value()), e); }

}  // namespace

HalfLineSeq apply_D0(const Prime& p, const HalfLineSeq& f) {
  const Eigen::Index size = f.size();
  HalfLineSeq out(size);
  for (Eigen::Index n = 0; n < size; ++n) {
    const Rational next = n + 1 < size ? f[n + 1] : Rational(0);
    out[n] = p_power(p, n) * (f[n] - next);
  }
  return out;
}

HalfLineSeq apply_D0star(const Prime& p, const HalfLineSeq& g) {
  const Eigen::Index size = g.size();
  const Rational inv_p(1, p.value());
  HalfLineSeq out(size);
  for (Eigen::Index n = 0; n < size; ++n) {
    const Rational prev = n > 0 ? g[n - 1] : Rational(0);
    out[n] = p_power(p, n) * (g[n] - inv_p * prev);
  }
  return out;
}

HalfLineSeq apply_D0starD0(const Prime& p, const HalfLineSeq& f) {
  const Eigen::Index size = f.size();
  const Rational p2(p.value() * p.value());
  HalfLineSeq out(size);
  auto at = [&](Eigen::Index n) { return n < size ? f[n] : Rational(0); };
  for (Eigen::Index n = 0; n < size; ++n) {
    if (n == 0) {
      out[n] = f[0] - at(1);
    } else {
      out[n] = p_power(p, 2 * n - 2) * (-p2 * at(n + 1) + (1 + p2) * f[n] - f[n - 1]);
    }
  }
  return out;
}

std::string to_string(OperatorId op) {
  switch (op) {
    case OperatorId::D0: return "D0";
    case OperatorId::D0Star: return "D0*";
    case OperatorId::D0StarD0: return "D0*D0";
    case OperatorId::TreeD: return "D";
    case OperatorId::TreeDStar: return "D*";
    case OperatorId::TreeDStarD: return "D*D";
  }
  return "?";
}

OperatorId operator_from_string(const std::string& name) {
  for (OperatorId op : {OperatorId::D0, OperatorId::D0Star, OperatorId::D0StarD0, OperatorId::TreeD,
                        OperatorId::TreeDStar, OperatorId::TreeDStarD})
    if (to_string(op) == name) return op;
  throw std::invalid_argument("unknown operator id '" + name + "'");
}

namespace {

// Columns are images of basis vectors; the operators are linear, so applying
// them to unit vectors is the most direct route to the matrix.
MatrixX<Rational> half_line_matrix(OperatorId op, const Prime& p, unsigned N) {
  MatrixX<Rational> m(N, N);
  for (unsigned j = 0; j < N; ++j) {
    HalfLineSeq e = HalfLineSeq::Constant(N, Rational(0));
    e[j] = 1;
    switch (op) {
      case OperatorId::D0: m.col(j) = apply_D0(p, e); break;
      case OperatorId::D0Star: m.col(j) = apply_D0star(p, e); break;
      default: m.col(j) = apply_D0starD0(p, e); break;
    }
  }
  return m;
}

MatrixX<Rational> tree_matrix(OperatorId op, const Prime& p, unsigned depth, Eigen::Index dim) {
  MatrixX<Rational> m(dim, dim);
  Eigen::Index col = 0;
  for (unsigned n = 0; n <= depth; ++n) {
    for (std::uint64_t k = 0; k < level_size(p, n); ++k, ++col) {
      TreeFunction<Rational> e(p, depth);
      e[{n, k}] = 1;
      switch (op) {
        case OperatorId::TreeD: m.col(col) = apply_D(e).flatten(); break;
        case OperatorId::TreeDStar: m.col(col) = apply_Dstar(e).flatten(); break;
        default: m.col(col) = apply_Dstar(apply_D(e)).flatten(); break;
      }
    }
  }
  return m;
}

}  // namespace

TruncMatrix<Rational> truncated_matrix(OperatorId op, const Prime& p, unsigned N,
                                       std::uint64_t dimension_limit) {
  if (N < 1) throw std::invalid_argument("truncated_matrix: N must be >= 1");
  TruncMatrix<Rational> out;
  out.op = op;
  out.prime = p.value();
  out.depth = N;
  const bool half_line = op == OperatorId::D0 || op == OperatorId::D0Star || op == OperatorId::D0StarD0;
  if (half_line) {
    if (N > dimension_limit) throw std::length_error("truncated_matrix: dimension limit exceeded");
    out.entries = half_line_matrix(op, p, N);
    return out;
  }
  std::uint64_t dim = 0;
  try {
    dim = vertex_count(p, N);
  } catch (const std::overflow_error&) {
    throw std::length_error("truncated_matrix: dimension limit exceeded");
  }
  if (dim > dimension_limit) throw std::length_error("truncated_matrix: dimension limit exceeded");
  out.entries = tree_matrix(op, p, N, static_cast<Eigen::Index>(dim));
  return out;
}

void write_matrix_market(std::ostream& out, const TruncMatrix<Rational>& m) {
  out << "%%PadicMatrix " << to_string(m.op) << " p=" << m.prime << " depth=" << m.depth
      << " boundary=" << m.boundary << "\n";
  out << m.entries.rows() << ' ' << m.entries.cols() << "\n";
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      if (j) out << ' ';
      const Rational& x = m.entries(i, j);
      out << mp::numerator(x) << '/' << mp::denominator(x);
    }
    out << "\n";
  }
}

TruncMatrix<Rational> read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("matrix: missing header");
  std::istringstream header(line);
  std::string tag, op_name, p_field, depth_field, boundary_field;
  header >> tag >> op_name >> p_field >> depth_field >> boundary_field;
  if (tag != "%%PadicMatrix" || p_field.rfind("p=", 0) != 0 || depth_field.rfind("depth=", 0) != 0 ||
      boundary_field.rfind("boundary=", 0) != 0)
    throw std::runtime_error("matrix: malformed header");
  TruncMatrix<Rational> m;
  m.op = operator_from_string(op_name);
  m.prime = std::stoull(p_field.substr(2));
  m.depth = static_cast<unsigned>(std::stoul(depth_field.substr(6)));
  m.boundary = boundary_field.substr(9);
  Eigen::Index rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) throw std::runtime_error("matrix: malformed size line");
  m.entries.resize(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      std::string token;
      if (!(in >> token)) throw std::runtime_error("matrix: too few entries");
      m.entries(i, j) = parse_rational(token);
    }
  return m;
}

}  // namespace padic
