#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "drazin/matrix.hpp"

namespace drazin {

/// f: A -> B stored as an n x m matrix, g: B -> A stored as m x n.
template <ExactScalar S>
class OpposingPair {
 public:
  /// Throws Errc::shape_mismatch unless g has the transposed shape of f.
  OpposingPair(Matrix<S> forward, Matrix<S> backward);

  const Matrix<S>& forward() const noexcept { return forward_; }
  const Matrix<S>& backward() const noexcept { return backward_; }
  OpposingPair swapped() const { return OpposingPair(backward_, forward_); }

 private:
  Matrix<S> forward_;
  Matrix<S> backward_;
};

/// g_over_f has the shape of f, f_over_g the shape of g.
/// idem_fg acts on A (m x m), idem_gf on B (n x n).
/// index = max(index_fg, index_gf) where index_fg and index_gf are the
/// separate minima of the two [DV.1] equations.
template <ExactScalar S>
struct PairDrazinData {
  Matrix<S> g_over_f;
  Matrix<S> f_over_g;
  std::size_t index;
  Matrix<S> idem_fg;
  Matrix<S> idem_gf;
  std::size_t index_fg;
  std::size_t index_gf;
};

template <ExactScalar S>
struct ClineResult {
  Matrix<S> fg_D;  // (g f)^D in matrix order, on A
  Matrix<S> gf_D;  // (f g)^D in matrix order, on B
};

/// Errc::shape_mismatch if the shapes do not compose both ways.
/// gf_D is built from fg_D by Cline's formula and then compared with a
/// direct computation; a mismatch is Errc::internal_inconsistency.
template <ExactScalar S>
ClineResult<S> cline(const Matrix<S>& f, const Matrix<S>& g);

template <ExactScalar S>
PairDrazinData<S> pair_drazin(const OpposingPair<S>& pair);

/// True iff d.index <= 1. Errc::invalid_drazin_data if d does not pass [DV].
template <ExactScalar S>
bool check_pair_group(const OpposingPair<S>& pair, const PairDrazinData<S>& d);

template <ExactScalar S>
bool check_binary_idempotent(const OpposingPair<S>& pair);

enum class MpWitness {
  none,                   // exists
  left_gram_rank_drop,    // rank(f^T f) < rank(f)
  right_gram_rank_drop,   // rank(f f^T) < rank(f)
  both_gram_ranks_drop,
  pair_index_exceeds_one, // ind(f, f^T) > 1
  not_inner_inverse,      // f f^{D/f^T} f != f
};

std::string_view to_string(MpWitness witness) noexcept;

template <ExactScalar S>
struct MoorePenroseData {
  std::optional<Matrix<S>> pseudo;
  bool exists;
  MpWitness witness;
  std::size_t rank;
  std::size_t left_gram_rank;   // rank(f^T f)
  std::size_t right_gram_rank;  // rank(f f^T)
  std::optional<std::size_t> pair_index;
};

/// f = L R (full rank), f° = R^T (R R^T)^{-1} (L^T L)^{-1} L^T.
template <ExactScalar S>
MoorePenroseData<S> moore_penrose(const Matrix<S>& f);

/// f° = f^{D/f^T} when ind(f, f^T) <= 1 and f f^{D/f^T} f = f.
template <ExactScalar S>
MoorePenroseData<S> mp_via_pair_drazin(const Matrix<S>& f);

/// The three equivalent EP conditions evaluated separately.
struct MpDrazinCheck {
  bool is_mp_drazin;
  std::string witness;
  bool drazin_satisfies_mp;       // x^D passes [MP.1-4]
  bool mp_commutes;               // x° exists and x x° = x° x
  bool group_symmetric_idempotent;  // ind(x) <= 1 and e_x = e_x^T
};

/// Errc::not_square; Errc::internal_inconsistency if the conditions disagree.
template <ExactScalar S>
MpDrazinCheck mp_drazin_check(const Matrix<S>& x);

}  // namespace drazin
