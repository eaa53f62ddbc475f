#include "sexp/expansion.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "sexp/error.hpp"

namespace sexp {

  ExpandedAlgebra s_expand(Semigroup const& s, LieAlgebra const& base) {
    std::size_t const n = base.dim();
    std::size_t const p = s.order();
    std::vector<std::string> names;
    names.reserve(n * p);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t alpha = 0; alpha < p; ++alpha) {
        names.push_back("l" + std::to_string(alpha + 1) + "*" + base.generator_names()[a]);
      }
    }
    std::string name = (s.name().empty() ? std::string("S") : s.name()) + "x" + base.name();
    LieAlgebra out(std::move(name), std::move(names));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        SparseVector const& ab = base.stored_bracket(a, b);
        if (ab.empty()) {
          continue;
        }
        for (std::size_t alpha = 0; alpha < p; ++alpha) {
          for (std::size_t beta = 0; beta < p; ++beta) {
            std::size_t const gamma = s.product(alpha, beta);
            SparseVector terms;
            terms.reserve(ab.size());
            for (auto const& t : ab) {
              terms.push_back({t.index * p + gamma, t.coeff});
            }
            out.set_bracket(a * p + alpha, b * p + beta, std::move(terms));
          }
        }
      }
    }
    return ExpandedAlgebra(base, s, std::move(out));
  }

  RatMatrix expanded_killing(ExpandedAlgebra const& e) {
    return killing_form(e.algebra());
  }

  std::vector<std::size_t> zero_reduce_survivors(ExpandedAlgebra const& e) {
    auto zero = zero_element(e.semigroup());
    if (!zero) {
      throw Error(ErrorCode::NoZeroElement,
                  "semigroup '" + e.semigroup().name() + "' has no zero element");
    }
    std::vector<std::size_t> survivors;
    for (std::size_t f = 0; f < e.algebra().dim(); ++f) {
      if (e.unflatten(f).second != *zero) {
        survivors.push_back(f);
      }
    }
    return survivors;
  }

  namespace {
    // Restriction of `g` to the generators in `keep` (sorted); components
    // outside `keep` are dropped when `drop_outside`, otherwise they are an
    // error.
    LieAlgebra restrict_to(LieAlgebra const& g, std::vector<std::size_t> const& keep,
                           std::string name, bool drop_outside) {
      std::vector<std::size_t> position(g.dim(), g.dim());
      std::vector<std::string> names;
      for (std::size_t i = 0; i < keep.size(); ++i) {
        position[keep[i]] = i;
        names.push_back(g.generator_names()[keep[i]]);
      }
      LieAlgebra out(std::move(name), std::move(names));
      for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
          SparseVector mapped;
          for (auto const& t : g.stored_bracket(keep[i], keep[j])) {
            if (position[t.index] == g.dim()) {
              if (drop_outside) {
                continue;
              }
              throw Error(ErrorCode::ResonanceFailed,
                          "bracket [" + g.generator_names()[keep[i]] + ", "
                              + g.generator_names()[keep[j]] + "] leaves the span (component "
                              + g.generator_names()[t.index] + ")");
            }
            mapped.push_back({position[t.index], t.coeff});
          }
          out.set_bracket(i, j, std::move(mapped));
        }
      }
      return out;
    }
  }  // namespace

  LieAlgebra zero_reduce(ExpandedAlgebra const& e) {
    auto survivors = zero_reduce_survivors(e);
    return restrict_to(e.algebra(), survivors, e.algebra().name() + "/0S", true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Resonance
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::size_t> const* targets_of(ResonantDecomposition const& d,
                                               std::size_t p, std::size_t q) {
      if (auto it = d.bracket_targets.find({p, q}); it != d.bracket_targets.end()) {
        return &it->second;
      }
      if (auto it = d.bracket_targets.find({q, p}); it != d.bracket_targets.end()) {
        return &it->second;
      }
      return nullptr;
    }

    // owner[A] = p with A in V_p
    std::vector<std::size_t> check_partitions(Semigroup const& s, LieAlgebra const& g,
                                              ResonantDecomposition const& d) {
      auto const parts = d.g_partition.size();
      if (parts == 0 || d.s_partition.size() != parts) {
        throw Error(ErrorCode::MalformedPartition,
                    "need one semigroup subset per algebra subspace");
      }
      std::vector<std::size_t> owner(g.dim(), parts);
      for (std::size_t p = 0; p < parts; ++p) {
        for (auto a : d.g_partition[p]) {
          if (a >= g.dim()) {
            throw Error(ErrorCode::MalformedPartition,
                        "generator index " + std::to_string(a) + " out of range");
          }
          if (owner[a] != parts) {
            throw Error(ErrorCode::MalformedPartition,
                        "generator " + std::to_string(a) + " appears in two subspaces");
          }
          owner[a] = p;
        }
        for (auto alpha : d.s_partition[p]) {
          if (alpha >= s.order()) {
            throw Error(ErrorCode::MalformedPartition,
                        "element index " + std::to_string(alpha) + " out of range");
          }
        }
      }
      for (std::size_t a = 0; a < g.dim(); ++a) {
        if (owner[a] == parts) {
          throw Error(ErrorCode::MalformedPartition,
                      "generator " + std::to_string(a) + " is in no subspace");
        }
      }
      for (auto const& [key, targets] : d.bracket_targets) {
        if (key.first >= parts || key.second >= parts) {
          throw Error(ErrorCode::MalformedPartition, "bracket target key out of range");
        }
        for (auto r : targets) {
          if (r >= parts) {
            throw Error(ErrorCode::MalformedPartition, "bracket target index out of range");
          }
        }
      }
      return owner;
    }
  }  // namespace

  ResonanceReport check_resonance(Semigroup const& s, LieAlgebra const& g,
                                  ResonantDecomposition const& d) {
    auto const owner = check_partitions(s, g, d);
    std::size_t const parts = d.g_partition.size();
    ResonanceReport report;
    for (std::size_t p = 0; p < parts; ++p) {
      for (std::size_t q = p; q < parts; ++q) {
        auto const* targets = targets_of(d, p, q);
        bool brackets_vanish = true;
        for (auto a : d.g_partition[p]) {
          for (auto b : d.g_partition[q]) {
            for (auto const& t : g.bracket(a, b)) {
              brackets_vanish = false;
              std::size_t const r = owner[t.index];
              if (targets == nullptr
                  || std::find(targets->begin(), targets->end(), r) == targets->end()) {
                report.ok = false;
                std::ostringstream os;
                os << "subspace condition fails for (p, q) = (" << p << ", " << q
                   << "): [" << g.generator_names()[a] << ", " << g.generator_names()[b]
                   << "] has a component along " << g.generator_names()[t.index]
                   << " in V_" << r << ", not in i(" << p << ", " << q << ")";
                report.message = os.str();
                return report;
              }
            }
          }
        }
        // A pair with no declared targets and vanishing brackets imposes nothing.
        if (targets == nullptr && brackets_vanish) {
          continue;
        }
        std::set<std::size_t> allowed;
        if (targets != nullptr) {
          for (auto r : *targets) {
            allowed.insert(d.s_partition[r].begin(), d.s_partition[r].end());
          }
        }
        for (auto alpha : d.s_partition[p]) {
          for (auto beta : d.s_partition[q]) {
            std::size_t const prod = s.product(alpha, beta);
            if (!allowed.count(prod)) {
              report.ok = false;
              std::ostringstream os;
              os << "semigroup condition fails for (p, q) = (" << p << ", " << q << "): l"
                 << alpha + 1 << "*l" << beta + 1 << " = l" << prod + 1
                 << " is outside the union of S_r, r in i(" << p << ", " << q << ")";
              report.message = os.str();
              return report;
            }
          }
        }
      }
    }
    report.message = "ok";
    return report;
  }

  ResonantSubalgebra resonant_subalgebra(Semigroup const& s, LieAlgebra const& g,
                                         ResonantDecomposition const& d) {
    auto report = check_resonance(s, g, d);
    if (!report.ok) {
      throw Error(ErrorCode::ResonanceFailed, report.message);
    }
    ExpandedAlgebra const e = s_expand(s, g);
    std::set<std::size_t> chosen;
    for (std::size_t p = 0; p < d.g_partition.size(); ++p) {
      for (auto a : d.g_partition[p]) {
        for (auto alpha : d.s_partition[p]) {
          chosen.insert(e.flat_index(a, alpha));
        }
      }
    }
    std::vector<std::size_t> embedding(chosen.begin(), chosen.end());
    LieAlgebra sub = restrict_to(e.algebra(), embedding, "resonant(" + e.algebra().name() + ")",
                                 false);
    return {std::move(sub), std::move(embedding)};
  }

  std::size_t n_selector(Semigroup const& s, std::span<const std::size_t> elements) {
    if (elements.empty()) {
      throw Error(ErrorCode::IndexOutOfRange, "n-selector of an empty product");
    }
    std::size_t acc = elements.front();
    for (auto x : elements) {
      if (x >= s.order()) {
        throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
      }
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
      acc = s.product(acc, elements[i]);
    }
    return acc;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensors
  ////////////////////////////////////////////////////////////////////////

  Tensor::Tensor(std::size_t rank, std::size_t dim) : _rank(rank), _dim(dim) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      size *= dim;
    }
    _data.resize(size);
  }

  Tensor Tensor::from_matrix(RatMatrix const& m) {
    if (!m.is_square()) {
      throw Error(ErrorCode::IndexOutOfRange, "rank-2 tensor needs a square matrix");
    }
    Tensor t(2, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        t._data[i * m.cols() + j] = m(i, j);
      }
    }
    return t;
  }

  std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
    if (idx.size() != _rank) {
      throw Error(ErrorCode::IndexOutOfRange, "tensor index has wrong rank");
    }
    std::size_t off = 0;
    for (auto i : idx) {
      if (i >= _dim) {
        throw Error(ErrorCode::IndexOutOfRange, "tensor index out of range");
      }
      off = off * _dim + i;
    }
    return off;
  }

  Rational& Tensor::at(std::span<const std::size_t> idx) {
    return _data[offset(idx)];
  }

  Rational const& Tensor::at(std::span<const std::size_t> idx) const {
    return _data[offset(idx)];
  }

  bool Tensor::is_zero() const {
    return std::all_of(_data.begin(), _data.end(), [](Rational const& r) { return r.is_zero(); });
  }

  RatMatrix Tensor::to_matrix() const {
    if (_rank != 2) {
      throw Error(ErrorCode::IndexOutOfRange, "only rank-2 tensors convert to matrices");
    }
    RatMatrix m(_dim, _dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        m(i, j) = _data[i * _dim + j];
      }
    }
    return m;
  }

  namespace {
    bool next_index(std::vector<std::size_t>& idx, std::size_t dim) {
      for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < dim) {
          return true;
        }
        idx[k] = 0;
      }
      return false;
    }
  }  // namespace

  bool is_ad_invariant(LieAlgebra const& g, Tensor const& t) {
    if (t.dim() != g.dim()) {
      return false;
    }
    std::size_t const n = g.dim();
    if (n == 0 || t.rank() == 0) {
      return true;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> idx(t.rank(), 0);
      do {
        Rational sum;
        for (std::size_t slot = 0; slot < t.rank(); ++slot) {
          std::size_t const original = idx[slot];
          for (auto const& term : g.bracket(i, original)) {
            idx[slot] = term.index;
            Rational const& v = t.at(idx);
            if (!v.is_zero()) {
              sum += term.coeff * v;
            }
          }
          idx[slot] = original;
        }
        if (!sum.is_zero()) {
          return false;
        }
      } while (next_index(idx, n));
    }
    return true;
  }

  Tensor expand_invariant_tensor(Semigroup const& s, LieAlgebra const& base,
                                 Tensor const& base_tensor,
                                 std::vector<Rational> const& alphas) {
    auto zero = zero_element(s);
    if (!zero) {
      throw Error(ErrorCode::NoZeroElement,
                  "invariant tensor expansion needs a semigroup with a zero element");
    }
    if (base_tensor.dim() != base.dim()) {
      throw Error(ErrorCode::NotInvariantBase, "base tensor dimension does not match algebra");
    }
    if (!is_ad_invariant(base, base_tensor)) {
      throw Error(ErrorCode::NotInvariantBase, "base tensor is not ad-invariant");
    }
    std::size_t const p = s.order();
    if (alphas.size() + 1 != p) {
      throw Error(ErrorCode::InvalidCounts,
                  "expected " + std::to_string(p - 1) + " alpha values, got "
                      + std::to_string(alphas.size()));
    }
    // alpha per element index; the zero element contributes nothing.
    std::vector<Rational> alpha_of(p);
    for (std::size_t j = 0, k = 0; j < p; ++j) {
      if (j != *zero) {
        alpha_of[j] = alphas[k++];
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> reduced;  // (A, alpha)
    for (std::size_t a = 0; a < base.dim(); ++a) {
      for (std::size_t alpha = 0; alpha < p; ++alpha) {
        if (alpha != *zero) {
          reduced.emplace_back(a, alpha);
        }
      }
    }
    std::size_t const rank = base_tensor.rank();
    Tensor out(rank, reduced.size());
    if (reduced.empty() || rank == 0) {
      return out;
    }
    std::vector<std::size_t> idx(rank, 0), base_idx(rank), elems(rank);
    do {
      for (std::size_t k = 0; k < rank; ++k) {
        base_idx[k] = reduced[idx[k]].first;
        elems[k] = reduced[idx[k]].second;
      }
      std::size_t const j = n_selector(s, elems);
      if (j == *zero || alpha_of[j].is_zero()) {
        continue;
      }
      Rational const& b = base_tensor.at(base_idx);
      if (!b.is_zero()) {
        out.at(idx) = alpha_of[j] * b;
      }
    } while (next_index(idx, reduced.size()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // selector identity and invariance checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using SparseRows = std::vector<SparseVector>;

    SparseRows sparse_rows(RatMatrix const& m) {
      SparseRows rows(m.rows());
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (!m(i, j).is_zero()) {
            rows[i].push_back({j, m(i, j)});
          }
        }
      }
      return rows;
    }

    Rational bilinear(SparseRows const& g, RatVector const& x, RatVector const& y) {
      Rational s;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) {
          continue;
        }
        Rational row;
        for (auto const& t : g[i]) {
          if (!y[t.index].is_zero()) {
            row += t.coeff * y[t.index];
          }
        }
        if (!row.is_zero()) {
          s += x[i] * row;
        }
      }
      return s;
    }
  }  // namespace

  AxiomReport verify_inner_product_axioms(RatMatrix const& killing, std::size_t samples,
                                          std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    std::size_t const n = killing.rows();
    auto random_vector = [&] {
      RatVector v(n);
      for (auto& x : v) {
        x = Rational(num(rng), den(rng));
      }
      return v;
    };
    SparseRows const g = sparse_rows(killing);
    AxiomReport report;
    report.samples = samples;
    auto check = [&](bool ok, char const* what, std::size_t sample) {
      ++report.checks;
      if (!ok) {
        if (report.failures == 0) {
          report.first_failure = std::string(what) + " fails on sample " + std::to_string(sample);
        }
        ++report.failures;
      }
    };
    RatVector const zero(n);
    for (std::size_t k = 0; k < samples; ++k) {
      RatVector const x = random_vector();
      RatVector const y = random_vector();
      RatVector const z = random_vector();
      Rational const c(num(rng), den(rng));
      RatVector sum(n), scaled(n);
      for (std::size_t i = 0; i < n; ++i) {
        sum[i] = x[i] + y[i];
        scaled[i] = c * x[i];
      }
      Rational const xz = bilinear(g, x, z);
      Rational const yz = bilinear(g, y, z);
      Rational const xy = bilinear(g, x, y);
      check(bilinear(g, sum, z) == xz + yz, "additivity", k);
      check(bilinear(g, scaled, y) == c * xy, "homogeneity", k);
      check(bilinear(g, y, x) == xy, "symmetry", k);
      check(bilinear(g, zero, y).is_zero(), "zero vector", k);
    }
    return report;
  }

  AxiomReport verify_inner_product_axioms(ExpandedAlgebra const& e, std::size_t samples,
                                          std::uint64_t seed) {
    return verify_inner_product_axioms(expanded_killing(e), samples, seed);
  }

  bool selector_identity_holds(Semigroup const& s, std::array<std::size_t, 3>* witness) {
    SelectorTensor const k(s);
    std::size_t const p = s.order();
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        for (std::size_t c = 0; c < p; ++c) {
          long lhs = 0, rhs = 0;
          for (std::size_t d = 0; d < p; ++d) {
            int const kab = k(a, b, d);
            int const kbc = k(b, c, d);
            if (kab == 0 && kbc == 0) {
              continue;
            }
            for (std::size_t eps = 0; eps < p; ++eps) {
              for (std::size_t f = 0; f < p; ++f) {
                lhs += kab * k(d, eps, f) * k(c, f, eps);
                rhs += kbc * k(a, eps, f) * k(d, f, eps);
              }
            }
          }
          if (lhs != rhs) {
            if (witness != nullptr) {
              *witness = {a, b, c};
            }
            return false;
          }
        }
      }
    }
    return true;
  }

  AdInvarianceReport verify_ad_invariance(ExpandedAlgebra const& e, RatMatrix const& killing) {
    AdInvarianceReport report;
    std::array<std::size_t, 3> w{};
    if (!selector_identity_holds(e.semigroup(), &w)) {
      report.selector_identity = false;
      std::ostringstream os;
      os << "selector identity fails at (" << w[0] << ", " << w[1] << ", " << w[2] << ")";
      report.first_failure = os.str();
    }
    LieAlgebra const& g = e.algebra();
    std::size_t const n = g.dim();
    std::vector<SparseVector> br(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        br[i * n + j] = g.bracket(i, j);
      }
    }
    auto form = [&](SparseVector const& v, std::size_t z) {
      // (v, X_z)
      Rational s;
      for (auto const& t : v) {
        Rational const& gz = killing(t.index, z);
        if (!gz.is_zero()) {
          s += t.coeff * gz;
        }
      }
      return s;
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          ++report.triples_checked;
          Rational const left = form(br[x * n + y], z);
          Rational const right = form(br[y * n + z], x);
          if (left != right) {
            if (report.killing_invariance) {
              std::ostringstream os;
              os << "([X,Y],Z) != (X,[Y,Z]) at (" << x << ", " << y << ", " << z << ")";
              if (report.first_failure.empty()) {
                report.first_failure = os.str();
              }
            }
            report.killing_invariance = false;
          }
        }
      }
    }
    return report;
  }

  AdInvarianceReport verify_ad_invariance(ExpandedAlgebra const& e) {
    return verify_ad_invariance(e, expanded_killing(e));
  }

}  // namespace sexp
