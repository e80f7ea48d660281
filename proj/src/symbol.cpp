#include "ttlab/symbol.hpp"

#include <variant>

namespace ttlab {

struct RationalLeaf {
  TrigPoly num;
  TrigPoly den;
};
struct ConjNode {
  BoundarySymbol child;
};
struct SumNode {
  std::vector<BoundarySymbol> terms;
};
struct ProductNode {
  std::vector<BoundarySymbol> factors;
};

struct BoundarySymbol::Node {
  std::variant<TrigPoly, RationalLeaf, ConjNode, SumNode, ProductNode, BlaschkeProduct> v;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

BoundarySymbol::BoundarySymbol() : BoundarySymbol(TrigPoly{}) {}

BoundarySymbol::BoundarySymbol(TrigPoly p)
    : node_(std::make_shared<const Node>(Node{std::move(p)})) {}

BoundarySymbol::BoundarySymbol(Complex c) : BoundarySymbol(TrigPoly::constant(c)) {}

BoundarySymbol BoundarySymbol::rational(TrigPoly numerator, TrigPoly denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("rational symbol with zero denominator");
  // Coarse guard against poles on the circle; a pole between nodes is caught
  // later by quadrature non-convergence.
  constexpr int kProbe = 4096;
  ArrayXc probe(kProbe);
  for (int j = 0; j < kProbe; ++j) probe[j] = unit(kTwoPi * j / kProbe);
  if ((denominator(probe).abs() == 0.0).any())
    throw std::invalid_argument("rational symbol has a pole on the unit circle");
  return BoundarySymbol(
      std::make_shared<const Node>(Node{RationalLeaf{std::move(numerator), std::move(denominator)}}));
}

BoundarySymbol BoundarySymbol::blaschke(BlaschkeProduct theta) {
  return BoundarySymbol(std::make_shared<const Node>(Node{std::move(theta)}));
}

BoundarySymbol::Kind BoundarySymbol::kind() const {
  return std::visit(overloaded{[](const TrigPoly&) { return Kind::trig_poly; },
                               [](const RationalLeaf&) { return Kind::rational; },
                               [](const ConjNode&) { return Kind::conj_of; },
                               [](const SumNode&) { return Kind::sum; },
                               [](const ProductNode&) { return Kind::product; },
                               [](const BlaschkeProduct&) { return Kind::blaschke; }},
                    node_->v);
}

Complex BoundarySymbol::operator()(Complex xi) const {
  return std::visit(overloaded{[&](const TrigPoly& p) { return p(xi); },
                               [&](const RationalLeaf& r) { return r.num(xi) / r.den(xi); },
                               [&](const ConjNode& c) { return std::conj(c.child(xi)); },
                               [&](const SumNode& s) {
                                 Complex acc{};
                                 for (const auto& t : s.terms) acc += t(xi);
                                 return acc;
                               },
                               [&](const ProductNode& p) {
                                 Complex acc = 1.0;
                                 for (const auto& f : p.factors) acc *= f(xi);
                                 return acc;
                               },
                               [&](const BlaschkeProduct& b) { return b(xi); }},
                    node_->v);
}

ArrayXc BoundarySymbol::operator()(const ArrayXc& xi) const {
  return std::visit(overloaded{[&](const TrigPoly& p) -> ArrayXc { return p(xi); },
                               [&](const RationalLeaf& r) -> ArrayXc { return r.num(xi) / r.den(xi); },
                               [&](const ConjNode& c) -> ArrayXc { return c.child(xi).conjugate(); },
                               [&](const SumNode& s) -> ArrayXc {
                                 ArrayXc acc = ArrayXc::Zero(xi.size());
                                 for (const auto& t : s.terms) acc += t(xi);
                                 return acc;
                               },
                               [&](const ProductNode& p) -> ArrayXc {
                                 ArrayXc acc = ArrayXc::Ones(xi.size());
                                 for (const auto& f : p.factors) acc *= f(xi);
                                 return acc;
                               },
                               [&](const BlaschkeProduct& b) -> ArrayXc { return b(xi); }},
                    node_->v);
}

bool BoundarySymbol::is_analytic() const {
  return std::visit(
      overloaded{[](const TrigPoly& p) { return p.is_analytic(); },
                 [](const RationalLeaf& r) { return r.num.is_analytic() && r.den.is_analytic(); },
                 [](const ConjNode&) { return false; },
                 [](const SumNode& s) {
                   for (const auto& t : s.terms)
                     if (!t.is_analytic()) return false;
                   return true;
                 },
                 [](const ProductNode& p) {
                   for (const auto& f : p.factors)
                     if (!f.is_analytic()) return false;
                   return true;
                 },
                 [](const BlaschkeProduct&) { return true; }},
      node_->v);
}

Complex BoundarySymbol::analytic_eval(Complex z) const {
  if (!is_analytic()) throw std::domain_error("symbol has no holomorphic extension to the disk");
  // For analytic trees the boundary formulas are the holomorphic extension.
  return (*this)(z);
}

const TrigPoly* BoundarySymbol::as_trig_poly() const { return std::get_if<TrigPoly>(&node_->v); }

BoundarySymbol conj(const BoundarySymbol& s) {
  if (const auto* c = std::get_if<ConjNode>(&s.node_->v)) return c->child;
  if (const auto* p = s.as_trig_poly()) return BoundarySymbol(p->conj());
  return BoundarySymbol(std::make_shared<const BoundarySymbol::Node>(BoundarySymbol::Node{ConjNode{s}}));
}

BoundarySymbol operator+(const BoundarySymbol& a, const BoundarySymbol& b) {
  const auto* pa = a.as_trig_poly();
  const auto* pb = b.as_trig_poly();
  if (pa && pb) return BoundarySymbol(*pa + *pb);
  if (pa && pa->is_zero()) return b;
  if (pb && pb->is_zero()) return a;
  SumNode s;
  for (const auto* x : {&a, &b}) {
    if (const auto* inner = std::get_if<SumNode>(&x->node_->v)) {
      s.terms.insert(s.terms.end(), inner->terms.begin(), inner->terms.end());
    } else {
      s.terms.push_back(*x);
    }
  }
  return BoundarySymbol(std::make_shared<const BoundarySymbol::Node>(BoundarySymbol::Node{std::move(s)}));
}

BoundarySymbol operator*(const BoundarySymbol& a, const BoundarySymbol& b) {
  const auto* pa = a.as_trig_poly();
  const auto* pb = b.as_trig_poly();
  if (pa && pb) return BoundarySymbol(*pa * *pb);
  if ((pa && pa->is_zero()) || (pb && pb->is_zero())) return BoundarySymbol();
  ProductNode p;
  for (const auto* x : {&a, &b}) {
    if (const auto* inner = std::get_if<ProductNode>(&x->node_->v)) {
      p.factors.insert(p.factors.end(), inner->factors.begin(), inner->factors.end());
    } else {
      p.factors.push_back(*x);
    }
  }
  return BoundarySymbol(std::make_shared<const BoundarySymbol::Node>(BoundarySymbol::Node{std::move(p)}));
}

BoundarySymbol operator-(const BoundarySymbol& a) { return BoundarySymbol(Complex(-1.0)) * a; }

BoundarySymbol operator-(const BoundarySymbol& a, const BoundarySymbol& b) { return a + (-b); }

BoundarySymbol linear_combination(const std::vector<BoundarySymbol>& terms, const VectorXc& coeffs) {
  if (static_cast<Eigen::Index>(terms.size()) != coeffs.size())
    throw std::invalid_argument("linear_combination: size mismatch");
  BoundarySymbol out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Complex c = coeffs[static_cast<Eigen::Index>(i)];
    if (c != Complex{}) out = out + BoundarySymbol(c) * terms[i];
  }
  return out;
}

}  // namespace ttlab
