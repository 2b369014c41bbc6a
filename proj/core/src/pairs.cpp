#include "drazin/pairs.hpp"

#include <algorithm>
#include <utility>

#include "drazin/axioms.hpp"
#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/linalg.hpp"

namespace drazin {

std::string_view to_string(MpWitness witness) noexcept {
  switch (witness) {
    case MpWitness::none: return "none";
    case MpWitness::left_gram_rank_drop: return "left_gram_rank_drop";
    case MpWitness::right_gram_rank_drop: return "right_gram_rank_drop";
    case MpWitness::both_gram_ranks_drop: return "both_gram_ranks_drop";
    case MpWitness::pair_index_exceeds_one: return "pair_index_exceeds_one";
    case MpWitness::not_inner_inverse: return "not_inner_inverse";
  }
  return "unknown";
}

namespace {

template <ExactScalar S>
void require_opposed(const Matrix<S>& f, const Matrix<S>& g) {
  f.require_same_field(g);
  if (g.rows() != f.cols() || g.cols() != f.rows()) {
    raise(Errc::shape_mismatch, "opposing pair shapes " + f.shape_string() + " and " + g.shape_string());
  }
}

template <ExactScalar S>
std::size_t absorbing_index(const Matrix<S>& e, const Matrix<S>& base) {
  Matrix<S> power = Matrix<S>::identity(base.rows(), base.field());
  for (std::size_t k = 0; k <= base.rows(); ++k) {
    if (e * power == power) return k;
    power = power * base;
  }
  raise(Errc::internal_inconsistency, "[DV.1] has no witness below the dimension bound");
}

}  // namespace

template <ExactScalar S>
OpposingPair<S>::OpposingPair(Matrix<S> forward, Matrix<S> backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  require_opposed(forward_, backward_);
}

template <ExactScalar S>
ClineResult<S> cline(const Matrix<S>& f, const Matrix<S>& g) {
  require_opposed(f, g);
  Matrix<S> fg_D = drazin_inverse(g * f).inverse;
  Matrix<S> gf_D = f * fg_D * fg_D * g;
  if (!(gf_D == drazin_inverse(f * g).inverse)) {
    raise(Errc::internal_inconsistency, "Cline's formula disagrees with the direct Drazin inverse");
  }
  return ClineResult<S>{std::move(fg_D), std::move(gf_D)};
}

template <ExactScalar S>
PairDrazinData<S> pair_drazin(const OpposingPair<S>& pair) {
  const Matrix<S>& f = pair.forward();
  const Matrix<S>& g = pair.backward();
  const auto on_a = drazin_inverse(g * f);
  const auto on_b = drazin_inverse(f * g);

  Matrix<S> f_over_g = on_a.inverse * g;
  Matrix<S> g_over_f = on_b.inverse * f;
  if (!(f_over_g == g * on_b.inverse) || !(g_over_f == f * on_a.inverse)) {
    raise(Errc::internal_inconsistency, "the two formulas for the pair inverse disagree");
  }

  Matrix<S> idem_fg = f_over_g * f;
  Matrix<S> idem_gf = g_over_f * g;
  if (!(idem_fg == g * g_over_f) || !(idem_gf == f * f_over_g) || !(idem_fg == on_a.idempotent) ||
      !(idem_gf == on_b.idempotent)) {
    raise(Errc::internal_inconsistency, "induced idempotents of the pair disagree");
  }

  const std::size_t p = absorbing_index(idem_fg, g * f);
  const std::size_t q = absorbing_index(idem_gf, f * g);
  if (p > q + 1 || q > p + 1) raise(Errc::internal_inconsistency, "[DV.1] minima differ by more than one");
  const std::size_t index = std::max(p, q);
  if (on_a.index > index || on_b.index > index) {
    raise(Errc::internal_inconsistency, "composite index exceeds the pair index");
  }
  return PairDrazinData<S>{std::move(g_over_f), std::move(f_over_g), index, std::move(idem_fg),
                           std::move(idem_gf),  p,                   q};
}

template <ExactScalar S>
bool check_pair_group(const OpposingPair<S>& pair, const PairDrazinData<S>& d) {
  const auto& f = pair.forward();
  const auto& g = pair.backward();
  auto dv = check_pair_drazin(f, g, d.g_over_f, d.f_over_g);
  if (!dv.passed || dv.witnessed_index != d.index) {
    raise(Errc::invalid_drazin_data, "pair data fails the [DV] axioms");
  }
  const bool group = check_pair_group(f, g, d.g_over_f, d.f_over_g).passed;
  if (group != (d.index <= 1)) raise(Errc::internal_inconsistency, "[GV] disagrees with the pair index");
  return group;
}

template <ExactScalar S>
bool check_binary_idempotent(const OpposingPair<S>& pair) {
  const auto& f = pair.forward();
  const auto& g = pair.backward();
  if (!(f * g * f == f) || !(g * f * g == g)) return false;
  const Matrix<S> fg = g * f;
  const Matrix<S> gf = f * g;
  if (!(fg * fg == fg) || !(gf * gf == gf)) {
    raise(Errc::internal_inconsistency, "binary idempotent with non-idempotent composite");
  }
  return true;
}

template <ExactScalar S>
MoorePenroseData<S> moore_penrose(const Matrix<S>& f) {
  const Matrix<S> ft = f.transpose();
  MoorePenroseData<S> out{std::nullopt, false, MpWitness::none, rank(f), rank(ft * f), rank(f * ft),
                          std::nullopt};
  const bool left_ok = out.left_gram_rank == out.rank;
  const bool right_ok = out.right_gram_rank == out.rank;
  if (!left_ok || !right_ok) {
    out.witness = !left_ok && !right_ok ? MpWitness::both_gram_ranks_drop
                  : !left_ok            ? MpWitness::left_gram_rank_drop
                                        : MpWitness::right_gram_rank_drop;
    return out;
  }
  auto factors = full_rank_factorization(f);
  const Matrix<S>& l = factors.left;
  const Matrix<S>& r = factors.right;
  const Matrix<S> rt = r.transpose();
  const Matrix<S> lt = l.transpose();
  auto right_gram_inv = try_invert(r * rt);
  auto left_gram_inv = try_invert(lt * l);
  if (!right_gram_inv || !left_gram_inv) {
    raise(Errc::internal_inconsistency, "Gram block singular although Gram ranks are full");
  }
  Matrix<S> pseudo = rt * *right_gram_inv * *left_gram_inv * lt;
  if (!check_moore_penrose(f, pseudo).passed) {
    raise(Errc::internal_inconsistency, "constructed pseudo-inverse fails [MP]");
  }
  out.pseudo = std::move(pseudo);
  out.exists = true;
  return out;
}

template <ExactScalar S>
MoorePenroseData<S> mp_via_pair_drazin(const Matrix<S>& f) {
  const Matrix<S> ft = f.transpose();
  auto d = pair_drazin(OpposingPair<S>(f, ft));
  MoorePenroseData<S> out{std::nullopt, false, MpWitness::none, rank(f), rank(ft * f), rank(f * ft), d.index};
  if (d.index > 1) {
    out.witness = MpWitness::pair_index_exceeds_one;
  } else if (!(f * d.f_over_g * f == f)) {
    out.witness = MpWitness::not_inner_inverse;
  } else {
    out.exists = true;
    out.pseudo = std::move(d.f_over_g);
  }
  return out;
}

template <ExactScalar S>
MpDrazinCheck mp_drazin_check(const Matrix<S>& x) {
  x.require_square("mp_drazin_check");
  const auto d = drazin_inverse(x);
  const auto mp = moore_penrose(x);
  MpDrazinCheck out{};
  out.drazin_satisfies_mp = check_moore_penrose(x, d.inverse).passed;
  out.mp_commutes = mp.exists && x * *mp.pseudo == *mp.pseudo * x;
  out.group_symmetric_idempotent = d.index <= 1 && d.idempotent == d.idempotent.transpose();
  if (out.drazin_satisfies_mp != out.mp_commutes || out.mp_commutes != out.group_symmetric_idempotent) {
    raise(Errc::internal_inconsistency, "equivalent EP conditions disagree");
  }
  out.is_mp_drazin = out.drazin_satisfies_mp;
  if (out.is_mp_drazin) {
    out.witness = "all_conditions_hold";
  } else if (d.index > 1) {
    out.witness = "index_exceeds_one";
  } else if (!mp.exists) {
    out.witness = "no_moore_penrose_inverse";
  } else {
    out.witness = "idempotent_not_symmetric";
  }
  return out;
}

#define DRAZIN_INSTANTIATE_PAIRS(S)                                                  \
  template class OpposingPair<S>;                                                    \
  template ClineResult<S> cline(const Matrix<S>&, const Matrix<S>&);                 \
  template PairDrazinData<S> pair_drazin(const OpposingPair<S>&);                    \
  template bool check_pair_group(const OpposingPair<S>&, const PairDrazinData<S>&);  \
  template bool check_binary_idempotent(const OpposingPair<S>&);                     \
  template MoorePenroseData<S> moore_penrose(const Matrix<S>&);                      \
  template MoorePenroseData<S> mp_via_pair_drazin(const Matrix<S>&);                 \
  template MpDrazinCheck mp_drazin_check(const Matrix<S>&);

DRAZIN_INSTANTIATE_PAIRS(Rational)
DRAZIN_INSTANTIATE_PAIRS(Residue)

}  // namespace drazin
