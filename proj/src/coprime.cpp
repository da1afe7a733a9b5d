#include "exsum/coprime.hpp"

#include <algorithm>

#include "exsum/errors.hpp"
#include "exsum/tree.hpp"

namespace exsum {

namespace {

void canonicalize(std::vector<Poly>& polys) {
  std::sort(polys.begin(), polys.end(), poly_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

// One squarefree P against the basis.
std::vector<Poly> extend_squarefree(const Poly& p, const std::vector<Poly>& basis) {
  if (basis.empty()) return {p};
  const ProductTree tree = product_tree(basis);
  const std::vector<Poly> rems = remainder_tree(p, tree);
  std::vector<Poly> out;
  out.reserve(2 * basis.size() + 1);
  std::vector<Poly> common;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Poly& q = basis[i];
    Poly g = rems[i].is_zero() ? q : poly_gcd(rems[i], q);
    if (g.degree() == 0) {
      out.push_back(q);
      continue;
    }
    if (g.degree() < q.degree()) out.push_back(poly_exact_div(q, g));
    out.push_back(g);
    common.push_back(std::move(g));
  }
  Poly rest = p;
  if (!common.empty()) rest = poly_exact_div(p, product_tree(common).root_product());
  if (rest.degree() > 0) out.push_back(monic(rest));
  return out;
}

}  // namespace

std::size_t CoprimeBasis::total_degree() const {
  std::size_t d = 0;
  for (const Poly& q : polys) d += static_cast<std::size_t>(q.degree());
  return d;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Rat& x = a.coeffs()[static_cast<std::size_t>(i)];
    const Rat& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

CoprimeBasis extend_basis(const Poly& p, const CoprimeBasis& basis) {
  if (p.is_zero()) throw ContractError("extend_basis with the zero polynomial");
  std::vector<Poly> polys = basis.polys;
  if (p.degree() <= 0) return basis;
  for (const Poly& layer : squarefree_decomposition(p)) {
    if (layer.degree() <= 0) continue;
    polys = extend_squarefree(layer, polys);
    canonicalize(polys);
  }
  return {std::move(polys)};
}

CoprimeBasis merge_bases(const CoprimeBasis& q1, const CoprimeBasis& q2) {
  if (q2.empty()) return q1;
  if (q1.empty()) return q2;
  std::size_t bits = 1;
  while ((std::size_t{1} << bits) < q2.size()) ++bits;
  // Products of coprime squarefree members are squarefree, so no Yun step.
  std::vector<Poly> out = q1.polys;
  for (std::size_t l = 0; l < bits; ++l) {
    for (std::size_t b = 0; b < 2; ++b) {
      std::vector<Poly> part;
      for (std::size_t i = 0; i < q2.size(); ++i) {
        if (((i >> l) & 1U) == b) part.push_back(q2.polys[i]);
      }
      if (part.empty()) continue;
      out = extend_squarefree(product_tree(part).root_product(), out);
      canonicalize(out);
    }
  }
  return {std::move(out)};
}

CoprimeBasis coprime_basis(const std::vector<Poly>& ps) {
  std::vector<Poly> live;
  for (const Poly& p : ps) {
    if (p.is_zero()) throw ContractError("coprime_basis of the zero polynomial");
    if (p.degree() > 0) live.push_back(p);
  }
  if (live.empty()) return {};
  if (live.size() == 1) return extend_basis(live.front(), {});
  const std::size_t mid = (live.size() + 1) / 2;
  const CoprimeBasis left = coprime_basis({live.begin(), live.begin() + static_cast<std::ptrdiff_t>(mid)});
  const CoprimeBasis right = coprime_basis({live.begin() + static_cast<std::ptrdiff_t>(mid), live.end()});
  return merge_bases(left, right);
}

std::optional<std::vector<int>> factor_over(const Poly& p, const CoprimeBasis& basis) {
  if (p.is_zero()) return std::nullopt;
  Poly rest = monic(p);
  std::vector<int> exps(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (;;) {
      DivRem qr = poly_divrem(rest, basis.polys[i]);
      if (!qr.remainder.is_zero()) break;
      rest = std::move(qr.quotient);
      ++exps[i];
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  return exps;
}

}  // namespace exsum
