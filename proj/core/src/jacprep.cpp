#include "symcrit/jacprep.hpp"

#include "symcrit/error.hpp"

namespace symcrit {

PolyMatrix jacobian(const std::vector<MPoly>& f, const MPoly& phi) {
  require(!f.empty(), ErrorKind::Domain, "need at least one equation");
  const PolyRingPtr& xr = phi.ring();
  for (const MPoly& fi : f)
    require(fi.ring()->same_as(*xr), ErrorKind::Domain,
            "equations and objective live in different rings");
  const int s = int(f.size());
  const int n = xr->nvars();
  PolyMatrix jac(xr, s + 1, n);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j) jac.at(i, j) = f[std::size_t(i)].derivative(j);
  for (int j = 0; j < n; ++j) jac.at(s, j) = phi.derivative(j);
  return jac;
}

MPoly transport(const BlockRing& br, const MPoly& f) {
  return symmetric_coordinates(br, t_lambda(br, f));
}

std::vector<MPoly> restrict_row(const BlockRing& br,
                                const std::vector<MPoly>& xrow) {
  std::vector<MPoly> out;
  out.reserve(std::size_t(br.length()));
  for (int slot = 0; slot < br.length(); ++slot)
    out.push_back(
        t_lambda(br, xrow[std::size_t(br.x_rep_of_slot(slot))]));
  return out;
}

PreparedSystem prepare_f(const BlockRing& br, const std::vector<MPoly>& f) {
  require(int(f.size()) == br.length(), ErrorKind::Domain,
          "partition length must equal the number of equations");
  PreparedSystem out{br, {}, 0};
  for (const MPoly& fi : f) {
    MPoly eq = transport(br, fi);
    if (!eq.is_zero()) out.equations.push_back(std::move(eq));
  }
  return out;
}

PreparedSystem prepare_f_h(const BlockRing& br, const std::vector<MPoly>& f,
                           const MPoly& phi) {
  const int s = int(f.size());
  const int l = br.length();
  require(l > s, ErrorKind::Domain,
          "partition length must exceed the number of equations");

  PreparedSystem out{br, {}, s + 1};
  for (const MPoly& fi : f) {
    MPoly eq = transport(br, fi);
    if (!eq.is_zero()) out.equations.push_back(std::move(eq));
  }

  PolyMatrix jac = jacobian(f, phi);
  PolyMatrix hbar(br.ering(), s + 1, l);
  for (int i = 0; i <= s; ++i) {
    std::vector<MPoly> xrow;
    xrow.reserve(std::size_t(jac.cols()));
    for (int j = 0; j < jac.cols(); ++j) xrow.push_back(jac.at(i, j));
    EquivariantRow row(br, restrict_row(br, xrow));
    std::vector<MPoly> p = symmetrize(row);
    for (int j = 0; j < l; ++j)
      hbar.at(i, j) = symmetric_coordinates(br, p[std::size_t(j)]);
  }

  for (MPoly& m : hbar.minors(s + 1))
    if (!m.is_zero()) out.equations.push_back(std::move(m));
  return out;
}

}  // namespace symcrit
