#include "sexp/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "sexp/error.hpp"

namespace sexp {

  SparseVector sparse_from_dense(RatVector const& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        out.push_back({i, v[i]});
      }
    }
    return out;
  }

  RatVector dense_from_sparse(SparseVector const& v, std::size_t dim) {
    RatVector out(dim);
    for (auto const& t : v) {
      out.at(t.index) = t.coeff;
    }
    return out;
  }

  void axpy(SparseVector& acc, Rational const& s, SparseVector const& v) {
    if (s.is_zero() || v.empty()) {
      return;
    }
    SparseVector merged;
    merged.reserve(acc.size() + v.size());
    auto a = acc.begin();
    auto b = v.begin();
    while (a != acc.end() || b != v.end()) {
      if (b == v.end() || (a != acc.end() && a->index < b->index)) {
        merged.push_back(std::move(*a));
        ++a;
      } else if (a == acc.end() || b->index < a->index) {
        merged.push_back({b->index, s * b->coeff});
        ++b;
      } else {
        Rational c = a->coeff + s * b->coeff;
        if (!c.is_zero()) {
          merged.push_back({a->index, std::move(c)});
        }
        ++a;
        ++b;
      }
    }
    acc = std::move(merged);
  }

  ////////////////////////////////////////////////////////////////////////
  // LieAlgebra
  ////////////////////////////////////////////////////////////////////////

  LieAlgebra::LieAlgebra(std::size_t dim, std::string name)
      : _dim(dim),
        _name(std::move(name)),
        _brackets(dim * (dim == 0 ? 0 : dim - 1) / 2) {
    for (std::size_t i = 0; i < dim; ++i) {
      _generator_names.push_back("X" + std::to_string(i + 1));
    }
  }

  LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> generator_names)
      : _dim(generator_names.size()),
        _name(std::move(name)),
        _generator_names(std::move(generator_names)),
        _brackets(_dim * (_dim == 0 ? 0 : _dim - 1) / 2) {}

  void LieAlgebra::check_index(std::size_t i) const {
    if (i >= _dim) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator index " + std::to_string(i) + " outside [0, "
                      + std::to_string(_dim) + ")");
    }
  }

  void LieAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector terms) {
    check_index(i);
    check_index(j);
    std::sort(terms.begin(), terms.end(), [](Term const& x, Term const& y) {
      return x.index < y.index;
    });
    SparseVector clean;
    for (auto& t : terms) {
      check_index(t.index);
      if (t.coeff.is_zero()) {
        continue;
      }
      if (!clean.empty() && clean.back().index == t.index) {
        clean.back().coeff += t.coeff;
        if (clean.back().coeff.is_zero()) {
          clean.pop_back();
        }
      } else {
        clean.push_back(std::move(t));
      }
    }
    if (i == j) {
      if (!clean.empty()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "[X_i, X_i] must vanish (i = " + std::to_string(i) + ")");
      }
      return;
    }
    if (i > j) {
      for (auto& t : clean) {
        t.coeff = -t.coeff;
      }
      std::swap(i, j);
    }
    _brackets[pair_index(i, j)] = std::move(clean);
  }

  void LieAlgebra::add_constant(std::size_t i, std::size_t j, std::size_t k,
                                Rational const& value) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      if (!value.is_zero()) {
        throw Error(ErrorCode::IndexOutOfRange, "[X_i, X_i] must vanish");
      }
      return;
    }
    Rational v = i < j ? value : -value;
    auto& slot = _brackets[pair_index(std::min(i, j), std::max(i, j))];
    axpy(slot, v, SparseVector{{k, Rational(1)}});
  }

  SparseVector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) {
      return {};
    }
    if (i < j) {
      return _brackets[pair_index(i, j)];
    }
    SparseVector v = _brackets[pair_index(j, i)];
    for (auto& t : v) {
      t.coeff = -t.coeff;
    }
    return v;
  }

  SparseVector LieAlgebra::bracket(SparseVector const& x, SparseVector const& y) const {
    SparseVector out;
    for (auto const& a : x) {
      for (auto const& b : y) {
        if (a.index == b.index) {
          continue;
        }
        if (a.index < b.index) {
          axpy(out, a.coeff * b.coeff, _brackets[pair_index(a.index, b.index)]);
        } else {
          axpy(out, -(a.coeff * b.coeff), _brackets[pair_index(b.index, a.index)]);
        }
      }
    }
    return out;
  }

  Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j) {
      return 0;
    }
    auto const& v = _brackets[pair_index(std::min(i, j), std::max(i, j))];
    auto it = std::lower_bound(v.begin(), v.end(), k,
                               [](Term const& t, std::size_t x) { return t.index < x; });
    if (it == v.end() || it->index != k) {
      return 0;
    }
    return i < j ? it->coeff : -it->coeff;
  }

  bool LieAlgebra::is_abelian() const {
    return std::all_of(_brackets.begin(), _brackets.end(),
                       [](SparseVector const& v) { return v.empty(); });
  }

  std::size_t LieAlgebra::stored_entry_count() const {
    std::size_t n = 0;
    for (auto const& v : _brackets) {
      n += v.size();
    }
    return n;
  }

  bool LieAlgebra::same_constants(LieAlgebra const& other) const {
    return _dim == other._dim && _brackets == other._brackets;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // sum_m x_m [X_m, X_k]
    SparseVector bracket_with(LieAlgebra const& g, SparseVector const& x, std::size_t k) {
      SparseVector out;
      for (auto const& t : x) {
        if (t.index == k) {
          continue;
        }
        if (t.index < k) {
          axpy(out, t.coeff, g.stored_bracket(t.index, k));
        } else {
          axpy(out, -t.coeff, g.stored_bracket(k, t.index));
        }
      }
      return out;
    }
  }  // namespace

  ValidationReport validate_algebra(LieAlgebra const& algebra) {
    ValidationReport report;
    std::size_t const n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        SparseVector const& ij = algebra.stored_bracket(i, j);
        for (std::size_t k = j + 1; k < n; ++k) {
          SparseVector sum = bracket_with(algebra, ij, k);
          axpy(sum, 1, bracket_with(algebra, algebra.stored_bracket(j, k), i));
          SparseVector ki = algebra.bracket(k, i);
          axpy(sum, 1, bracket_with(algebra, ki, j));
          if (!sum.empty()) {
            report.ok = false;
            report.jacobi_witness = std::array<std::size_t, 4>{i, j, k, sum.front().index};
            std::ostringstream os;
            os << "Jacobi identity fails for generators (" << i << ", " << j << ", "
               << k << "): component " << sum.front().index << " equals "
               << sum.front().coeff;
            report.message = os.str();
            return report;
          }
        }
      }
    }
    report.message = "ok";
    return report;
  }

  ValidationReport validate_tensor(StructureTensor const& tensor) {
    ValidationReport report;
    for (auto const& [key, value] : tensor.entries) {
      for (auto idx : key) {
        if (idx >= tensor.dim) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "structure constant index " + std::to_string(idx)
                          + " outside [0, " + std::to_string(tensor.dim) + ")");
        }
      }
    }
    for (auto const& [key, value] : tensor.entries) {
      if (value.is_zero()) {
        continue;
      }
      auto [i, j, k] = key;
      Rational partner;
      if (auto it = tensor.entries.find({j, i, k}); it != tensor.entries.end()) {
        partner = it->second;
      }
      if (i == j || partner != -value) {
        report.ok = false;
        report.antisymmetry_witness = key;
        std::ostringstream os;
        os << "antisymmetry fails: C_" << i << j << "^" << k << " = " << value
           << " but C_" << j << i << "^" << k << " = " << partner;
        report.message = os.str();
        return report;
      }
    }
    return validate_algebra(algebra_from_tensor(tensor));
  }

  LieAlgebra algebra_from_tensor(StructureTensor const& tensor, std::string name) {
    LieAlgebra g(tensor.dim, std::move(name));
    for (auto const& [key, value] : tensor.entries) {
      auto [i, j, k] = key;
      if (i >= tensor.dim || j >= tensor.dim || k >= tensor.dim) {
        throw Error(ErrorCode::IndexOutOfRange, "structure constant index out of range");
      }
      Rational partner;
      if (auto it = tensor.entries.find({j, i, k}); it != tensor.entries.end()) {
        partner = it->second;
      }
      if (!value.is_zero() && (i == j || partner != -value)) {
        throw Error(ErrorCode::NotAntisymmetric,
                    "C_" + std::to_string(i) + std::to_string(j) + "^"
                        + std::to_string(k) + " has no antisymmetric partner");
      }
      if (i < j) {
        g.add_constant(i, j, k, value);
      }
    }
    return g;
  }

  void require_valid(LieAlgebra const& algebra) {
    auto report = validate_algebra(algebra);
    if (!report.ok) {
      throw Error(ErrorCode::NotAntisymmetric, report.message);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard algebras
  ////////////////////////////////////////////////////////////////////////

  LieAlgebra indefinite_orthogonal(std::size_t p, std::size_t q) {
    std::size_t const n = p + q;
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        basis.emplace_back(a, b);
        names.push_back("T(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
      }
    }
    auto position = [&](std::size_t a, std::size_t b) {
      // a < b
      return a * n - a * (a + 1) / 2 + (b - a - 1);
    };
    auto eta = [&](std::size_t a, std::size_t b) -> long {
      if (a != b) {
        return 0;
      }
      return a < p ? 1 : -1;
    };
    std::string name = q == 0 ? "so(" + std::to_string(n) + ")"
                              : "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
    LieAlgebra g(name, names);
    // T_xy with sign: T_xy = -T_yx, T_xx = 0
    auto add_t = [&](SparseVector& acc, long coeff, std::size_t x, std::size_t y) {
      if (coeff == 0 || x == y) {
        return;
      }
      if (x < y) {
        axpy(acc, coeff, SparseVector{{position(x, y), 1}});
      } else {
        axpy(acc, -coeff, SparseVector{{position(y, x), 1}});
      }
    };
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto [a, b] = basis[i];
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        auto [c, d] = basis[j];
        SparseVector out;
        add_t(out, eta(b, c), a, d);
        add_t(out, -eta(a, c), b, d);
        add_t(out, -eta(b, d), a, c);
        add_t(out, eta(a, d), b, c);
        g.set_bracket(i, j, std::move(out));
      }
    }
    return g;
  }

  LieAlgebra special_orthogonal(std::size_t n) {
    return indefinite_orthogonal(n, 0);
  }

  LieAlgebra sl2() {
    LieAlgebra g("sl2", {"h", "e", "f"});
    g.set_bracket(0, 1, {{1, 2}});
    g.set_bracket(0, 2, {{2, -2}});
    g.set_bracket(1, 2, {{0, 1}});
    return g;
  }

  LieAlgebra heisenberg3() {
    LieAlgebra g("heisenberg3", {"x", "y", "z"});
    g.set_bracket(0, 1, {{2, 1}});
    return g;
  }

  LieAlgebra abelian(std::size_t n) {
    LieAlgebra g(n, "abelian(" + std::to_string(n) + ")");
    return g;
  }

  namespace {
    std::string normalize_name(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
      }
      return out;
    }

    std::optional<std::size_t> parse_count(std::string_view s) {
      std::size_t v = 0;
      if (s.empty()) {
        return std::nullopt;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    }

    // "prefix(N)" or "prefixN" -> argument text
    std::optional<std::string> argument_of(std::string const& s, std::string const& prefix) {
      if (s.rfind(prefix, 0) != 0) {
        return std::nullopt;
      }
      std::string rest = s.substr(prefix.size());
      if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
        rest = rest.substr(1, rest.size() - 2);
      }
      return rest;
    }

    LieAlgebra single_standard(std::string const& original, std::string const& s) {
      if (s == "sl2" || s == "sl(2)") {
        return sl2();
      }
      if (s == "heisenberg3" || s == "heisenberg" || s == "h3") {
        return heisenberg3();
      }
      if (auto arg = argument_of(s, "abelian")) {
        if (auto n = parse_count(*arg); n && *n >= 1) {
          return abelian(*n);
        }
      }
      if (auto arg = argument_of(s, "so")) {
        auto comma = arg->find(',');
        if (comma == std::string::npos) {
          if (auto n = parse_count(*arg); n && *n >= 3 && *n <= 16) {
            return special_orthogonal(*n);
          }
        } else {
          auto p = parse_count(std::string_view(*arg).substr(0, comma));
          auto q = parse_count(std::string_view(*arg).substr(comma + 1));
          if (p && q && *p + *q >= 3 && *p + *q <= 16) {
            return indefinite_orthogonal(*p, *q);
          }
        }
      }
      throw Error(ErrorCode::UnknownName, "unknown algebra name '" + original + "'");
    }
  }  // namespace

  LieAlgebra standard_algebra(std::string const& name) {
    std::string const s = normalize_name(name);
    if (s.empty()) {
      throw Error(ErrorCode::UnknownName, "empty algebra name");
    }
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto plus = s.find('+', start);
      parts.push_back(s.substr(start, plus - start));
      if (plus == std::string::npos) {
        break;
      }
      start = plus + 1;
    }
    LieAlgebra out = single_standard(name, parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
      out = direct_sum(out, single_standard(name, parts[i]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Adjoint, Killing, basis change, direct sum
  ////////////////////////////////////////////////////////////////////////

  AdjointMatrix adjoint(LieAlgebra const& algebra, std::size_t i) {
    if (i >= algebra.dim()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator index " + std::to_string(i) + " outside algebra");
    }
    std::size_t const n = algebra.dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (auto const& t : algebra.bracket(i, j)) {
        m(j, t.index) = t.coeff;
      }
    }
    return {i, std::move(m)};
  }

  RatMatrix killing_form(LieAlgebra const& algebra) {
    std::size_t const n = algebra.dim();
    struct Entry {
      std::size_t row;
      std::size_t col;
      Rational value;
    };
    std::vector<std::vector<Entry>> sparse_ad(n);
    std::vector<RatMatrix> dense_ad;
    dense_ad.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      dense_ad.push_back(adjoint(algebra, i).matrix);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!dense_ad[i](k, l).is_zero()) {
            sparse_ad[i].push_back({k, l, dense_ad[i](k, l)});
          }
        }
      }
    }
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        Rational s;
        for (auto const& e : sparse_ad[i]) {
          Rational const& other = dense_ad[j](e.col, e.row);
          if (!other.is_zero()) {
            s += e.value * other;
          }
        }
        g(i, j) = s;
        g(j, i) = s;
      }
    }
    return g;
  }

  LieAlgebra change_of_basis(LieAlgebra const& algebra, RatMatrix const& a) {
    std::size_t const n = algebra.dim();
    if (a.rows() != n || a.cols() != n) {
      throw Error(ErrorCode::SingularMatrix, "basis change must be a square dim x dim matrix");
    }
    RatMatrix const a_inv = inverse(a);
    std::vector<SparseVector> columns;
    columns.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
      columns.push_back(sparse_from_dense(a.column(c)));
    }
    std::vector<std::string> names;
    for (std::size_t c = 0; c < n; ++c) {
      names.push_back("Y" + std::to_string(c + 1));
    }
    LieAlgebra out(algebra.name(), names);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        SparseVector w = algebra.bracket(columns[x], columns[y]);
        if (w.empty()) {
          continue;
        }
        RatVector coords = a_inv * dense_from_sparse(w, n);
        out.set_bracket(x, y, sparse_from_dense(coords));
      }
    }
    return out;
  }

  LieAlgebra direct_sum(LieAlgebra const& first, LieAlgebra const& second) {
    std::vector<std::string> names = first.generator_names();
    names.insert(names.end(), second.generator_names().begin(),
                 second.generator_names().end());
    std::size_t const shift = first.dim();
    LieAlgebra out(first.name() + "+" + second.name(), names);
    for (std::size_t i = 0; i < first.dim(); ++i) {
      for (std::size_t j = i + 1; j < first.dim(); ++j) {
        out.set_bracket(i, j, first.stored_bracket(i, j));
      }
    }
    for (std::size_t i = 0; i < second.dim(); ++i) {
      for (std::size_t j = i + 1; j < second.dim(); ++j) {
        SparseVector v = second.stored_bracket(i, j);
        for (auto& t : v) {
          t.index += shift;
        }
        out.set_bracket(i + shift, j + shift, std::move(v));
      }
    }
    return out;
  }

}  // namespace sexp
