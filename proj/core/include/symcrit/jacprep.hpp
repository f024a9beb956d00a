#ifndef SYMCRIT_JACPREP_HPP
#define SYMCRIT_JACPREP_HPP

#include "symcrit/symmetrize.hpp"

namespace symcrit {

/// Rows of partial derivatives of (f_1..f_s, phi), in the x-ring:
/// (s+1) x n, row i column j = d(row_i)/d(x_{j+1}).
PolyMatrix jacobian(const std::vector<MPoly>& f, const MPoly& phi);

/// Substitute block representatives and rewrite in the e-variables.
/// The input must be invariant under the full symmetric group.
MPoly transport(const BlockRing& br, const MPoly& f);

/// One x-partial row restricted to the slots of lambda: column j takes the
/// representative variable of slot j.  For invariant sources the discarded
/// columns are duplicates.
std::vector<MPoly> restrict_row(const BlockRing& br,
                                const std::vector<MPoly>& xrow);

/// Polynomial system attached to one partition, over its e-ring.
struct PreparedSystem {
  BlockRing br;
  std::vector<MPoly> equations;
  /// Minor size used (0 if only the defining equations were transported).
  int minor_rank = 0;
};

/// length(lambda) == s: the transported defining equations alone.
PreparedSystem prepare_f(const BlockRing& br, const std::vector<MPoly>& f);

/// length(lambda) > s: transported defining equations plus every
/// (s+1)-minor of the symmetrized jacobian matrix in the e-variables.
PreparedSystem prepare_f_h(const BlockRing& br, const std::vector<MPoly>& f,
                           const MPoly& phi);

}  // namespace symcrit

#endif
