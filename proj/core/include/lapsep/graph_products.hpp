#pragma once

#include <string>
#include <vector>

#include "lapsep/decomposition.hpp"
#include "lapsep/graph.hpp"

namespace lapsep {

/// Subset of the eight per-factor-pair conditions R1..R8 whose disjunction
/// defines a binary graph product; 2^8 = 256 product types. Bit k encodes
/// R_{k+1}.
class ProductMask {
 public:
  explicit ProductMask(unsigned bits);
  static ProductMask named(const std::string& name);
  /// Accepts a name ("strong"), a condition list ("R1,R2,R4"), or an
  /// integer 0..255.
  static ProductMask parse(const std::string& text);

  bool contains(int r) const;  // r in 1..8
  unsigned bits() const { return bits_; }
  std::string to_string() const;

  bool operator==(const ProductMask& other) const = default;

 private:
  unsigned bits_;
};

ProductMask complement_mask(ProductMask mask);

/// Adjacency of the binary product: the sum of the selected T_i terms, each a
/// Kronecker product of factors from {G, I, J-I-G} x {H, I, J-I-H}. Vertices
/// are ordered row-major with the first factor major. Unweighted inputs only.
Graph product_adjacency(ProductMask mask, const Graph& g, const Graph& h);

/// Left fold of product_adjacency over two or more graphs, one mask at every
/// level; the vertex order matches the canonical labeling grid.
Graph product_chain(ProductMask mask, const std::vector<Graph>& graphs);

/// Per-factor matrix kinds appearing in one Kronecker summand of a chain
/// product's adjacency.
enum class FactorKind { Adjacency, Identity, Complement };

/// Expands the chain product's adjacency into Kronecker summands over
/// {G_i, I, J-I-G_i}; complements of prefixes expand via the complement mask.
std::vector<std::vector<FactorKind>> product_kron_terms(ProductMask mask, int m);

/// Separable certificate for the normalized Laplacian of the chain product,
/// built from the Kronecker summands and validated against the product graph.
SeparableCertificate product_laplacian_certificate(ProductMask mask,
                                                   const std::vector<Graph>& graphs);

}  // namespace lapsep
