#ifndef SEXP_SEMIGROUP_HPP_
#define SEXP_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sexp/ratlin.hpp"

namespace sexp {

  using RawTable = std::vector<std::vector<std::size_t>>;
  //! Relabelling: element a of the source is sent to perm[a].
  using Permutation = std::vector<std::size_t>;

  //! Finite commutative semigroup stored as its multiplication table over
  //! 0-based element indices. Instances are always commutative and
  //! associative.
  class Semigroup {
   public:
    Semigroup() = default;

    //! Throws Error(IndexOutOfRange) for a ragged table or out-of-range
    //! entry, Error(NotSemigroup) if the table is not commutative and
    //! associative.
    static Semigroup from_table(RawTable const& table, std::string name = {});

    std::size_t order() const noexcept {
      return _order;
    }
    std::size_t product(std::size_t a, std::size_t b) const noexcept {
      return _table[a * _order + b];
    }
    std::string const& name() const noexcept {
      return _name;
    }
    void set_name(std::string name) {
      _name = std::move(name);
    }
    RawTable table() const;
    std::vector<std::uint8_t> const& flat_table() const noexcept {
      return _table;
    }

    friend bool operator==(Semigroup const& a, Semigroup const& b) {
      return a._order == b._order && a._table == b._table;
    }

   private:
    friend Semigroup unchecked_semigroup(std::size_t, std::vector<std::uint8_t>,
                                         std::string);
    std::size_t _order = 0;
    std::vector<std::uint8_t> _table;
    std::string _name;
  };

  //! Wraps a flat table already known to be a commutative semigroup.
  Semigroup unchecked_semigroup(std::size_t order, std::vector<std::uint8_t> table,
                                std::string name = {});

  struct SemigroupReport {
    bool ok = false;
    std::string message;
    //! (a, b) with ab != ba.
    std::optional<std::array<std::size_t, 2>> commutativity_witness;
    //! (a, b, c) with (ab)c != a(bc).
    std::optional<std::array<std::size_t, 3>> associativity_witness;
    std::optional<Semigroup> semigroup;
  };

  //! Throws Error(IndexOutOfRange) for a ragged table or out-of-range entry.
  SemigroupReport validate_semigroup(RawTable const& table, std::string name = {});

  //! One-hot selector tensor K_ab^c = [ab = c].
  class SelectorTensor {
   public:
    explicit SelectorTensor(Semigroup const& s);
    std::size_t order() const noexcept {
      return _order;
    }
    int operator()(std::size_t a, std::size_t b, std::size_t c) const noexcept {
      return _k[(a * _order + b) * _order + c];
    }

   private:
    std::size_t _order;
    std::vector<std::uint8_t> _k;
  };

  SelectorTensor selectors(Semigroup const& s);

  //! P x P integer matrix with entries sum_{c,d} K_ic^d K_jd^c.
  class MkMatrix {
   public:
    MkMatrix() = default;
    MkMatrix(std::size_t order, std::vector<long> entries)
        : _order(order), _entries(std::move(entries)) {}
    std::size_t order() const noexcept {
      return _order;
    }
    long operator()(std::size_t i, std::size_t j) const noexcept {
      return _entries[i * _order + j];
    }
    RatMatrix to_rational() const;
    std::vector<std::vector<long>> rows() const;
    friend bool operator==(MkMatrix const&, MkMatrix const&) = default;

   private:
    std::size_t _order = 0;
    std::vector<long> _entries;
  };

  MkMatrix mk_matrix(Semigroup const& s);
  //! Same contraction on an arbitrary (possibly non-associative) table.
  MkMatrix mk_matrix_of_table(RawTable const& table);

  std::optional<std::size_t> zero_element(Semigroup const& s);
  std::optional<std::size_t> identity_element(Semigroup const& s);
  std::size_t idempotent_count(Semigroup const& s);

  //! Relabelled copy: result.product(perm[a], perm[b]) = perm[s.product(a, b)].
  Semigroup relabel(Semigroup const& s, Permutation const& perm);

  //! Lexicographically minimal relabelling of the table.
  Semigroup canonical_form(Semigroup const& s);

  //! All commutative associative tables of the given order in lexicographic
  //! (row-major) order. With `up_to_iso`, only the lexicographically minimal
  //! representative of each isomorphism class is kept.
  std::vector<Semigroup> enumerate_semigroups(std::size_t order, bool up_to_iso);

  //! Streaming form; the visitor returns false to stop early.
  void for_each_semigroup(std::size_t order, bool up_to_iso,
                          std::function<bool(Semigroup const&)> const& visit);

  //! A permutation pi with pi(ab) = pi(a)pi(b), or nothing.
  std::optional<Permutation> is_isomorphic(Semigroup const& first,
                                           Semigroup const& second);

  //! Number of unordered pairs {a, b}; each carries exactly one selector.
  std::size_t selector_pair_count(Semigroup const& s);

  // Named families.
  Semigroup cyclic_group(std::size_t order);
  //! All products equal element 0.
  Semigroup null_semigroup(std::size_t order);
  //! Chain semilattice with ab = min(a, b); element 0 is absorbing.
  Semigroup chain_semilattice(std::size_t order);
  Semigroup trivial_semigroup();

  //! Resolves "Z<n>", "null<n>", "chain<n>"/"semilattice<n>", "trivial".
  //! Throws Error(UnknownName).
  Semigroup named_semigroup(std::string const& name);

  //! Multiplication table in the lambda_1..lambda_P layout (1-based labels).
  std::string render_table(RawTable const& table, std::string const& corner = "*");
  std::string render_table(Semigroup const& s);

}  // namespace sexp

#endif  // SEXP_SEMIGROUP_HPP_
