#include "lapsep/graph_products.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lapsep/density.hpp"

namespace lapsep {

namespace {

// Factor kinds per condition, left then right slot:
//   R1: G x H    R2: G x I    R3: G x (J-I-H)   R4: I x H
//   R5: I x (J-I-H)   R6: (J-I-G) x H   R7: (J-I-G) x I   R8: (J-I-G) x (J-I-H)
constexpr FactorKind kLeftSlot[8] = {
    FactorKind::Adjacency,  FactorKind::Adjacency,  FactorKind::Adjacency,
    FactorKind::Identity,   FactorKind::Identity,   FactorKind::Complement,
    FactorKind::Complement, FactorKind::Complement,
};
constexpr FactorKind kRightSlot[8] = {
    FactorKind::Adjacency, FactorKind::Identity,   FactorKind::Complement,
    FactorKind::Adjacency, FactorKind::Complement, FactorKind::Adjacency,
    FactorKind::Identity,  FactorKind::Complement,
};

Eigen::MatrixXd slot_matrix(FactorKind kind, const Graph& g) {
  const int n = g.size();
  switch (kind) {
    case FactorKind::Adjacency: return g.adjacency();
    case FactorKind::Identity: return Eigen::MatrixXd::Identity(n, n);
    case FactorKind::Complement:
      return Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n) -
             g.adjacency();
  }
  return Eigen::MatrixXd();
}

}  // namespace

ProductMask::ProductMask(unsigned bits) : bits_(bits) {
  if (bits > 255) throw OutOfRangeError("product mask must be in 0..255");
}

ProductMask ProductMask::named(const std::string& name) {
  if (name == "tensor") return ProductMask(0b00000001);          // R1
  if (name == "strong") return ProductMask(0b00001011);          // R1,R2,R4
  if (name == "cartesian") return ProductMask(0b00001010);       // R2,R4
  if (name == "lexicographic") return ProductMask(0b00001111);   // R1..R4
  throw UnknownNameError("unknown product name: " + name);
}

ProductMask ProductMask::parse(const std::string& text) {
  if (text.empty()) throw UnknownNameError("empty product mask");
  if (text[0] == 'R' || text[0] == 'r') {
    unsigned bits = 0;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.size() != 2 || (item[0] != 'R' && item[0] != 'r') ||
          item[1] < '1' || item[1] > '8')
        throw UnknownNameError("bad condition list: " + text);
      bits |= 1u << (item[1] - '1');
    }
    return ProductMask(bits);
  }
  if (std::isdigit(static_cast<unsigned char>(text[0]))) {
    std::size_t pos = 0;
    const int value = std::stoi(text, &pos);
    if (pos != text.size() || value < 0 || value > 255)
      throw UnknownNameError("bad mask integer: " + text);
    return ProductMask(static_cast<unsigned>(value));
  }
  return named(text);
}

bool ProductMask::contains(int r) const {
  if (r < 1 || r > 8) throw OutOfRangeError("condition index must be in 1..8");
  return (bits_ >> (r - 1)) & 1u;
}

std::string ProductMask::to_string() const {
  if (bits_ == 0) return "empty";
  std::string out;
  for (int r = 1; r <= 8; ++r)
    if (contains(r)) {
      if (!out.empty()) out += ',';
      out += 'R';
      out += static_cast<char>('0' + r);
    }
  return out;
}

ProductMask complement_mask(ProductMask mask) {
  return ProductMask(~mask.bits() & 0xFFu);
}

Graph product_adjacency(ProductMask mask, const Graph& g, const Graph& h) {
  if (!g.is_unweighted() || !h.is_unweighted())
    throw NonBinaryWeightsError("graph products require unweighted factors");
  const int n = g.size() * h.size();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(n, n);
  for (int r = 1; r <= 8; ++r)
    if (mask.contains(r))
      adj += kron(slot_matrix(kLeftSlot[r - 1], g), slot_matrix(kRightSlot[r - 1], h));
  return Graph::from_adjacency(std::move(adj));
}

Graph product_chain(ProductMask mask, const std::vector<Graph>& graphs) {
  if (graphs.size() < 2)
    throw DimensionMismatchError("product chains need at least two graphs");
  Graph out = product_adjacency(mask, graphs[0], graphs[1]);
  for (std::size_t k = 2; k < graphs.size(); ++k)
    out = product_adjacency(mask, out, graphs[k]);
  return out;
}

std::vector<std::vector<FactorKind>> product_kron_terms(ProductMask mask, int m) {
  if (m < 1) throw DimensionMismatchError("need at least one factor");
  if (m == 1) return {{FactorKind::Adjacency}};
  std::vector<std::vector<FactorKind>> out;
  for (int r = 1; r <= 8; ++r) {
    if (!mask.contains(r)) continue;
    const FactorKind right = kRightSlot[r - 1];
    std::vector<std::vector<FactorKind>> prefixes;
    switch (kLeftSlot[r - 1]) {
      case FactorKind::Adjacency:
        prefixes = product_kron_terms(mask, m - 1);
        break;
      case FactorKind::Identity:
        prefixes = {std::vector<FactorKind>(m - 1, FactorKind::Identity)};
        break;
      case FactorKind::Complement:
        // The complement of a graph product is the product of the
        // complementary mask.
        if (m - 1 == 1)
          prefixes = {{FactorKind::Complement}};
        else
          prefixes = product_kron_terms(complement_mask(mask), m - 1);
        break;
    }
    for (auto& prefix : prefixes) {
      prefix.push_back(right);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

SeparableCertificate product_laplacian_certificate(ProductMask mask,
                                                   const std::vector<Graph>& graphs) {
  const Graph prod = product_chain(mask, graphs);
  if (prod.is_trivial()) throw ZeroTraceError("product graph is trivial");

  const int m = static_cast<int>(graphs.size());
  std::vector<std::vector<FactorPair>> summands;
  for (const auto& tuple : product_kron_terms(mask, m)) {
    std::vector<FactorPair> summand;
    bool zero_factor = false;
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXd mat = slot_matrix(tuple[k], graphs[k]);
      if (mat.sum() == 0.0 && tuple[k] != FactorKind::Identity) {
        zero_factor = true;
        break;
      }
      FactorPair pair;
      pair.diag = mat.rowwise().sum();
      pair.adj = std::move(mat);
      summand.push_back(std::move(pair));
    }
    if (!zero_factor) summands.push_back(std::move(summand));
  }

  SeparableCertificate cert = kron_separable_certificate(summands);
  const CertificateCheck check = verify_certificate(cert, laplacian_density(prod));
  if (check.residual > 1e-10)
    throw Error("certificate does not match the product Laplacian");
  cert.residual = check.residual;
  cert.meta["mask"] = mask.to_string();
  cert.meta["fold"] = "left";
  return cert;
}

}  // namespace lapsep
