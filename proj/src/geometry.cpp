#include "sexp/geometry.hpp"

#include "sexp/error.hpp"
#include "sexp/expansion.hpp"

namespace sexp {

  SignatureProfile signature_profile(LieAlgebra const& algebra) {
    return {algebra.dim(), exact_inertia(killing_form(algebra))};
  }

  SignatureProfile so_profile(std::size_t n) {
    std::size_t const d = n * (n - 1) / 2;
    return {d, {0, d, 0}};
  }

  SemigroupProfile semigroup_profile(Semigroup const& s) {
    return {s.order(), exact_inertia(mk_matrix(s).to_rational())};
  }

  SignaturePrediction predict_expanded_signature(SignatureProfile const& n,
                                                 SemigroupProfile const& s) {
    auto const& a = n.inertia;
    auto const& b = s.inertia;
    SignaturePrediction out;
    out.inertia.n_plus = a.n_plus * b.n_plus + a.n_minus * b.n_minus;
    out.inertia.n_minus = a.n_minus * b.n_plus + a.n_plus * b.n_minus;
    out.inertia.n_zero = n.dim * s.order - out.inertia.n_plus - out.inertia.n_minus;
    out.summed_n_zero = n.dim * b.n_zero + s.order * a.n_zero;
    out.rank = a.rank() * b.rank();
    out.chi = a.character() * b.character();
    return out;
  }

  long predict_character(long chi, std::size_t p, std::size_t h, std::size_t q) {
    if (h + q > p) {
      throw Error(ErrorCode::InvalidCounts, "H + Q exceeds P");
    }
    return chi * (static_cast<long>(p) - static_cast<long>(h) - 2 * static_cast<long>(q));
  }

  std::string to_string(KillingClass c) {
    switch (c) {
      case KillingClass::I:
        return "I";
      case KillingClass::II:
        return "II";
      case KillingClass::III:
        return "III";
    }
    return "?";
  }

  KillingClass classify(InertiaSignature const& inertia) {
    if (inertia.rank() % 2 == 1) {
      return KillingClass::III;
    }
    return inertia.n_plus == inertia.n_minus ? KillingClass::I : KillingClass::II;
  }

  KillingClass classify(LieAlgebra const& algebra) {
    return classify(signature_profile(algebra).inertia);
  }

  ClassReport classification_preserved_under_expansion(LieAlgebra const& algebra,
                                                       Semigroup const& s) {
    auto const before = signature_profile(algebra);
    auto const after = exact_inertia(expanded_killing(s_expand(s, algebra)));
    ClassReport r;
    r.before = classify(before.inertia);
    r.after = classify(after);
    r.chi_before = before.chi();
    r.chi_after = after.character();
    r.class_one_preserved = r.before != KillingClass::I || r.after == KillingClass::I;
    return r;
  }

  long magnitude_factor(Semigroup const& s, std::size_t a) {
    if (a >= s.order()) {
      throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
    }
    return mk_matrix(s)(a, a);
  }

  AngleFactor angle_factor(Semigroup const& s, std::size_t i, std::size_t j) {
    if (i >= s.order() || j >= s.order()) {
      throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
    }
    auto const mk = mk_matrix(s);
    if (mk(i, i) == 0 || mk(j, j) == 0) {
      throw Error(ErrorCode::IllDefinedAngle,
                  "M_K has a zero diagonal entry at l" + std::to_string((mk(i, i) == 0 ? i : j) + 1));
    }
    return {mk(i, j), mk(i, i) * mk(j, j)};
  }

  std::vector<std::pair<std::size_t, std::size_t>> diagonality_test(Semigroup const& s) {
    auto const mk = mk_matrix(s);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < s.order(); ++i) {
      for (std::size_t j = i + 1; j < s.order(); ++j) {
        if (mk(i, j) != 0) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

}  // namespace sexp
