#include "sexp/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sexp/error.hpp"

namespace sexp {

  namespace {
    constexpr std::uint8_t kUnset = 0xFF;

    std::vector<std::uint8_t> flatten(RawTable const& table) {
      std::size_t const p = table.size();
      if (p > 254) {
        throw Error(ErrorCode::IndexOutOfRange, "semigroup order too large");
      }
      std::vector<std::uint8_t> flat;
      flat.reserve(p * p);
      for (std::size_t a = 0; a < p; ++a) {
        if (table[a].size() != p) {
          throw Error(ErrorCode::IndexOutOfRange,
                      "multiplication table is not square (row " + std::to_string(a) + ")");
        }
        for (std::size_t b = 0; b < p; ++b) {
          if (table[a][b] >= p) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "table entry " + std::to_string(table[a][b]) + " at ("
                            + std::to_string(a) + ", " + std::to_string(b)
                            + ") outside [0, " + std::to_string(p) + ")");
          }
          flat.push_back(static_cast<std::uint8_t>(table[a][b]));
        }
      }
      return flat;
    }
  }  // namespace

  Semigroup unchecked_semigroup(std::size_t order, std::vector<std::uint8_t> table,
                                std::string name) {
    Semigroup s;
    s._order = order;
    s._table = std::move(table);
    s._name = std::move(name);
    return s;
  }

  SemigroupReport validate_semigroup(RawTable const& table, std::string name) {
    std::vector<std::uint8_t> flat = flatten(table);
    std::size_t const p = table.size();
    auto at = [&](std::size_t a, std::size_t b) { return flat[a * p + b]; };
    SemigroupReport report;
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) {
        if (at(a, b) != at(b, a)) {
          report.commutativity_witness = std::array<std::size_t, 2>{a, b};
          std::ostringstream os;
          os << "not commutative: l" << a + 1 << "*l" << b + 1 << " = l" << at(a, b) + 1
             << " but l" << b + 1 << "*l" << a + 1 << " = l" << at(b, a) + 1;
          report.message = os.str();
          return report;
        }
      }
    }
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        for (std::size_t c = 0; c < p; ++c) {
          auto left = at(at(a, b), c);
          auto right = at(a, at(b, c));
          if (left != right) {
            report.associativity_witness = std::array<std::size_t, 3>{a, b, c};
            std::ostringstream os;
            os << "not associative: (l" << a + 1 << "*l" << b + 1 << ")*l" << c + 1
               << " = l" << left + 1 << " but l" << a + 1 << "*(l" << b + 1 << "*l"
               << c + 1 << ") = l" << right + 1;
            report.message = os.str();
            return report;
          }
        }
      }
    }
    report.ok = true;
    report.message = "ok";
    report.semigroup = unchecked_semigroup(p, std::move(flat), std::move(name));
    return report;
  }

  Semigroup Semigroup::from_table(RawTable const& table, std::string name) {
    auto report = validate_semigroup(table, std::move(name));
    if (!report.ok) {
      throw Error(ErrorCode::NotSemigroup, report.message);
    }
    return std::move(*report.semigroup);
  }

  RawTable Semigroup::table() const {
    RawTable t(_order, std::vector<std::size_t>(_order));
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = 0; b < _order; ++b) {
        t[a][b] = product(a, b);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Selectors and M_K
  ////////////////////////////////////////////////////////////////////////

  SelectorTensor::SelectorTensor(Semigroup const& s)
      : _order(s.order()), _k(s.order() * s.order() * s.order(), 0) {
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = 0; b < _order; ++b) {
        _k[(a * _order + b) * _order + s.product(a, b)] = 1;
      }
    }
  }

  SelectorTensor selectors(Semigroup const& s) {
    return SelectorTensor(s);
  }

  RatMatrix MkMatrix::to_rational() const {
    RatMatrix m(_order, _order);
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        m(i, j) = (*this)(i, j);
      }
    }
    return m;
  }

  std::vector<std::vector<long>> MkMatrix::rows() const {
    std::vector<std::vector<long>> out(_order);
    for (std::size_t i = 0; i < _order; ++i) {
      for (std::size_t j = 0; j < _order; ++j) {
        out[i].push_back((*this)(i, j));
      }
    }
    return out;
  }

  MkMatrix mk_matrix_of_table(RawTable const& table) {
    std::vector<std::uint8_t> flat = flatten(table);
    std::size_t const p = table.size();
    // (M_K)_ij = #{(c, d) : ic = d and jd = c}
    std::vector<long> m(p * p, 0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        long count = 0;
        for (std::size_t c = 0; c < p; ++c) {
          std::size_t const d = flat[i * p + c];
          if (flat[j * p + d] == c) {
            ++count;
          }
        }
        m[i * p + j] = count;
      }
    }
    return MkMatrix(p, std::move(m));
  }

  MkMatrix mk_matrix(Semigroup const& s) {
    return mk_matrix_of_table(s.table());
  }

  std::optional<std::size_t> zero_element(Semigroup const& s) {
    for (std::size_t z = 0; z < s.order(); ++z) {
      bool absorbing = true;
      for (std::size_t a = 0; a < s.order() && absorbing; ++a) {
        absorbing = s.product(a, z) == z;
      }
      if (absorbing) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> identity_element(Semigroup const& s) {
    for (std::size_t e = 0; e < s.order(); ++e) {
      bool neutral = true;
      for (std::size_t a = 0; a < s.order() && neutral; ++a) {
        neutral = s.product(e, a) == a;
      }
      if (neutral) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::size_t idempotent_count(Semigroup const& s) {
    std::size_t n = 0;
    for (std::size_t a = 0; a < s.order(); ++a) {
      n += s.product(a, a) == a ? 1 : 0;
    }
    return n;
  }

  Semigroup relabel(Semigroup const& s, Permutation const& perm) {
    std::size_t const p = s.order();
    std::vector<std::uint8_t> out(p * p);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        out[perm[a] * p + perm[b]] = static_cast<std::uint8_t>(perm[s.product(a, b)]);
      }
    }
    return unchecked_semigroup(p, std::move(out), s.name());
  }

  namespace {
    // True iff no relabelling of `flat` is lexicographically smaller.
    bool is_canonical(std::size_t p, std::vector<std::uint8_t> const& flat,
                      std::vector<std::uint8_t>& scratch) {
      Permutation perm(p);
      std::iota(perm.begin(), perm.end(), 0);
      scratch.resize(p * p);
      while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t a = 0; a < p; ++a) {
          for (std::size_t b = 0; b < p; ++b) {
            scratch[perm[a] * p + perm[b]] = static_cast<std::uint8_t>(perm[flat[a * p + b]]);
          }
        }
        if (scratch < flat) {
          return false;
        }
      }
      return true;
    }

    class Enumerator {
     public:
      Enumerator(std::size_t p, bool up_to_iso,
                 std::function<bool(Semigroup const&)> const& visit)
          : _p(p), _up_to_iso(up_to_iso), _visit(visit), _table(p * p, kUnset) {
        for (std::size_t a = 0; a < p; ++a) {
          for (std::size_t b = a; b < p; ++b) {
            _cells.emplace_back(a, b);
          }
        }
      }

      void run() {
        recurse(0);
      }

     private:
      bool consistent() const {
        for (std::size_t a = 0; a < _p; ++a) {
          for (std::size_t b = 0; b < _p; ++b) {
            auto ab = _table[a * _p + b];
            if (ab == kUnset) {
              continue;
            }
            for (std::size_t c = 0; c < _p; ++c) {
              auto bc = _table[b * _p + c];
              if (bc == kUnset) {
                continue;
              }
              auto left = _table[ab * _p + c];
              auto right = _table[a * _p + bc];
              if (left != kUnset && right != kUnset && left != right) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool recurse(std::size_t cell) {
        if (cell == _cells.size()) {
          if (_up_to_iso && !is_canonical(_p, _table, _scratch)) {
            return true;
          }
          return _visit(unchecked_semigroup(_p, _table));
        }
        auto [a, b] = _cells[cell];
        for (std::size_t v = 0; v < _p; ++v) {
          _table[a * _p + b] = static_cast<std::uint8_t>(v);
          _table[b * _p + a] = static_cast<std::uint8_t>(v);
          if (consistent() && !recurse(cell + 1)) {
            return false;
          }
        }
        _table[a * _p + b] = kUnset;
        _table[b * _p + a] = kUnset;
        return true;
      }

      std::size_t _p;
      bool _up_to_iso;
      std::function<bool(Semigroup const&)> const& _visit;
      std::vector<std::uint8_t> _table;
      std::vector<std::uint8_t> _scratch;
      std::vector<std::pair<std::size_t, std::size_t>> _cells;
    };
  }  // namespace

  void for_each_semigroup(std::size_t order, bool up_to_iso,
                          std::function<bool(Semigroup const&)> const& visit) {
    if (order == 0) {
      return;
    }
    if (order > 254) {
      throw Error(ErrorCode::IndexOutOfRange, "semigroup order too large");
    }
    Enumerator(order, up_to_iso, visit).run();
  }

  std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool up_to_iso) {
    std::vector<Semigroup> out;
    for_each_semigroup(order, up_to_iso, [&](Semigroup const& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }

  Semigroup canonical_form(Semigroup const& s) {
    std::size_t const p = s.order();
    Permutation perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    Semigroup best = s;
    do {
      Semigroup candidate = relabel(s, perm);
      if (candidate.flat_table() < best.flat_table()) {
        best = std::move(candidate);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::optional<Permutation> is_isomorphic(Semigroup const& first,
                                           Semigroup const& second) {
    std::size_t const p = first.order();
    if (p != second.order()) {
      return std::nullopt;
    }
    if (idempotent_count(first) != idempotent_count(second)
        || zero_element(first).has_value() != zero_element(second).has_value()
        || identity_element(first).has_value() != identity_element(second).has_value()) {
      return std::nullopt;
    }
    Permutation perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (std::size_t a = 0; a < p && ok; ++a) {
        for (std::size_t b = a; b < p && ok; ++b) {
          ok = perm[first.product(a, b)] == second.product(perm[a], perm[b]);
        }
      }
      if (ok) {
        return perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
  }

  std::size_t selector_pair_count(Semigroup const& s) {
    std::size_t n = 0;
    SelectorTensor const k(s);
    for (std::size_t a = 0; a < s.order(); ++a) {
      for (std::size_t b = a; b < s.order(); ++b) {
        int nonzero = 0;
        for (std::size_t c = 0; c < s.order(); ++c) {
          nonzero += k(a, b, c);
        }
        n += nonzero == 1 ? 1 : 0;
      }
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named families
  ////////////////////////////////////////////////////////////////////////

  Semigroup cyclic_group(std::size_t order) {
    std::vector<std::uint8_t> t(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        t[a * order + b] = static_cast<std::uint8_t>((a + b) % order);
      }
    }
    return unchecked_semigroup(order, std::move(t), "Z" + std::to_string(order));
  }

  Semigroup null_semigroup(std::size_t order) {
    return unchecked_semigroup(order, std::vector<std::uint8_t>(order * order, 0),
                               "null" + std::to_string(order));
  }

  Semigroup chain_semilattice(std::size_t order) {
    std::vector<std::uint8_t> t(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        t[a * order + b] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
    return unchecked_semigroup(order, std::move(t), "chain" + std::to_string(order));
  }

  Semigroup trivial_semigroup() {
    return unchecked_semigroup(1, {0}, "trivial");
  }

  Semigroup named_semigroup(std::string const& name) {
    std::string s;
    for (char c : name) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
      }
    }
    if (s == "trivial") {
      return trivial_semigroup();
    }
    auto order_after = [&](std::string const& prefix) -> std::optional<std::size_t> {
      if (s.rfind(prefix, 0) != 0) {
        return std::nullopt;
      }
      std::string_view rest(s);
      rest.remove_prefix(prefix.size());
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
      if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || n == 0
          || n > 254) {
        return std::nullopt;
      }
      return n;
    };
    if (auto n = order_after("z")) {
      return cyclic_group(*n);
    }
    if (auto n = order_after("null")) {
      return null_semigroup(*n);
    }
    if (auto n = order_after("chain")) {
      return chain_semilattice(*n);
    }
    if (auto n = order_after("semilattice")) {
      return chain_semilattice(*n);
    }
    throw Error(ErrorCode::UnknownName, "unknown semigroup name '" + name + "'");
  }

  std::string render_table(RawTable const& table, std::string const& corner) {
    std::ostringstream os;
    std::size_t const p = table.size();
    std::size_t width = std::to_string(p).size() + 2;
    auto cell = [&](std::string const& text) {
      os << ' ' << text << std::string(width > text.size() ? width - text.size() : 0, ' ');
    };
    cell(corner);
    os << '|';
    for (std::size_t b = 0; b < p; ++b) {
      cell("l" + std::to_string(b + 1));
    }
    os << '\n';
    os << std::string(width + 1, '-') << '+' << std::string((width + 1) * p, '-') << '\n';
    for (std::size_t a = 0; a < p; ++a) {
      cell("l" + std::to_string(a + 1));
      os << '|';
      for (std::size_t b = 0; b < p; ++b) {
        cell("l" + std::to_string(table[a][b] + 1));
      }
      os << '\n';
    }
    return os.str();
  }

  std::string render_table(Semigroup const& s) {
    return render_table(s.table());
  }

}  // namespace sexp
