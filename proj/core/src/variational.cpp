#include "titeica/variational.hpp"

#include <cmath>
#include <sstream>

#include "titeica/sampling.hpp"

namespace titeica {

namespace {

void require_order(const char* what, int have, int need) {
  if (have < need) {
    std::ostringstream os;
    os << what << ": jet order " << have << " < " << need;
    throw OrderError(os.str());
  }
}

Jet2 zero_like(const Jet2& x) { return Jet2::zero(x.base(), x.order()); }

FirstOrderFn coefficient(const Trivariate& c) {
  return [c](const Jet2& u, const Jet2& v, const Jet2& w, const Jet2&, const Jet2&) {
    return c.at<2>({u, v, w});
  };
}

}  // namespace

Jet2 along(const FirstOrderFn& F, const Jet2& w, int order) {
  require_order("along", w.order(), order + 1);
  const auto& b = w.base();
  return F(Jet2::variable(0, b, order), Jet2::variable(1, b, order), w.truncated(order),
           w.partial(0).truncated(order), w.partial(1).truncated(order));
}

double Lagrangian::eval(double u, double v, double w, double wu, double wv) const {
  const Jet2::Point b{u, v};
  auto c = [&](double x) { return Jet2::constant(x, b, 0); };
  return L(c(u), c(v), c(w), c(wu), c(wv)).value();
}

Lagrangian Lagrangian::L1() {
  Lagrangian out;
  out.kind = LagrangianKind::L1;
  out.name = "L1";
  out.L = [](const Jet2&, const Jet2&, const Jet2& w, const Jet2& wu, const Jet2& wv) {
    return -0.5 * wu * wv - exp(w);
  };
  out.L_w = [](const Jet2&, const Jet2&, const Jet2& w, const Jet2&, const Jet2&) {
    return -exp(w);
  };
  out.L_wu = [](const Jet2&, const Jet2&, const Jet2&, const Jet2&, const Jet2& wv) {
    return -0.5 * wv;
  };
  out.L_wv = [](const Jet2&, const Jet2&, const Jet2&, const Jet2& wu, const Jet2&) {
    return -0.5 * wu;
  };
  return out;
}

Lagrangian Lagrangian::L2() {
  Lagrangian out = L1();
  out.kind = LagrangianKind::L2;
  out.name = "L2";
  out.L = [](const Jet2&, const Jet2&, const Jet2& w, const Jet2& wu, const Jet2& wv) {
    return -0.5 * wu * wv - exp(w) - 0.5 * exp(-2.0 * w);
  };
  out.L_w = [](const Jet2&, const Jet2&, const Jet2& w, const Jet2&, const Jet2&) {
    return exp(-2.0 * w) - exp(w);
  };
  return out;
}

Lagrangian Lagrangian::custom(std::string name, FirstOrderFn L, FirstOrderFn L_w, FirstOrderFn L_wu,
                              FirstOrderFn L_wv) {
  if (!L || !L_w || !L_wu || !L_wv) throw InvalidArgument("Lagrangian::custom: missing function");
  return {LagrangianKind::Custom, std::move(name), std::move(L), std::move(L_w), std::move(L_wu),
          std::move(L_wv)};
}

double euler_lagrange(const Lagrangian& L, const Jet2& w) {
  require_order("euler_lagrange", w.order(), 2);
  return along(L.L_w, w, 0).value() - along(L.L_wu, w, 1).d(1, 0) - along(L.L_wv, w, 1).d(0, 1);
}

// --- Helmholtz ------------------------------------------------------------------------

JetCoords jet_coords(const Jet2& w, int order) {
  require_order("jet_coords", w.order(), order + 2);
  const auto& b = w.base();
  const Jet2 wu = w.partial(0), wv = w.partial(1);
  return {Jet2::variable(0, b, order),       Jet2::variable(1, b, order),
          w.truncated(order),                wu.truncated(order),
          wv.truncated(order),               wu.partial(0).truncated(order),
          wu.partial(1).truncated(order),    wv.partial(1).truncated(order)};
}

SecondOrderOperator operator_of(const PdeKind& kind) {
  const Curve H = kind.nonlinearity();
  SecondOrderOperator op;
  op.name = kind.name();
  op.delta = [H](const JetCoords& c) { return c[6] - H.at<2>({c[2]}); };
  const SecondOrderFn zero = [](const JetCoords& c) { return zero_like(c[0]); };
  op.d_wu = op.d_wv = op.d_wuu = op.d_wvv = zero;
  op.d_wuv = [](const JetCoords& c) { return Jet2::constant(1.0, c[0].base(), c[0].order()); };
  return op;
}

std::array<double, 2> helmholtz_residual(const SecondOrderOperator& op, const Jet2& w) {
  require_order("helmholtz_residual", w.order(), 3);
  const JetCoords c0 = jet_coords(w, 0), c1 = jet_coords(w, 1);
  const Jet2 duv = op.d_wuv(c1);
  return {op.d_wu(c0).value() - op.d_wuu(c1).d(1, 0) - 0.5 * duv.d(0, 1),
          op.d_wv(c0).value() - op.d_wvv(c1).d(0, 1) - 0.5 * duv.d(1, 0)};
}

std::array<double, 2> helmholtz_residual(const PdeKind& kind, const Jet2& w) {
  return helmholtz_residual(operator_of(kind), w);
}

// --- variational symmetries -------------------------------------------------------------

double variational_defect(const VectorField3& X, const Lagrangian& L, const Jet2& w) {
  require_order("variational_defect", w.order(), 2);
  const auto& b = w.base();
  const auto c = X.eval({b[0], b[1], w.value()}, 0);
  const ProlongedValue p = prolong1(X, w);

  // pr1 X (L) as the derivative of L along (zeta, eta, phi, alpha^u, alpha^v)
  const Jet2 t = Jet2::variable(0, {0.0, 0.0}, 1);
  const double pr = L.L(b[0] + c[0].value() * t, b[1] + c[1].value() * t, w.value() + c[2].value() * t,
                        w.d(1, 0) + p.au * t, w.d(0, 1) + p.av * t)
                        .d(1, 0);

  const Jet2 U = Jet2::variable(0, b, 1), V = Jet2::variable(1, b, 1), W = w.truncated(1);
  const double div = X.zeta.at<2>({U, V, W}).d(1, 0) + X.eta.at<2>({U, V, W}).d(0, 1);
  return pr + L.eval(b[0], b[1], w.value(), w.d(1, 0), w.d(0, 1)) * div;
}

double conservation_divergence_defect(const ConservationLaw& law, const PdeKind& kind,
                                      const Jet2& w) {
  require_order("conservation_divergence_defect", w.order(), 2);
  return along(law.P1, w, 1).d(1, 0) + along(law.P2, w, 1).d(0, 1) -
         along(law.Q, w, 0).value() * residual_scalar(kind, w);
}

ConservationLaw noether_law(const VectorField3& X, const Lagrangian& L, const PdeKind& kind) {
  JetSampler gen(0x4e6f);
  for (int i = 0; i < 50; ++i) {
    const Jet2 w = gen.jet(2);
    const double d = variational_defect(X, L, w);
    if (!(std::abs(d) <= 1e-10)) {
      std::ostringstream os;
      os << "noether_law: " << X.name << " is not a variational symmetry of " << L.name
         << " (defect " << d << ")";
      throw InvalidArgument(os.str());
    }
  }
  const FirstOrderFn zeta = coefficient(X.zeta), eta = coefficient(X.eta), phi = coefficient(X.phi);
  const FirstOrderFn Q = [=](const Jet2& u, const Jet2& v, const Jet2& w, const Jet2& wu,
                             const Jet2& wv) {
    return phi(u, v, w, wu, wv) - zeta(u, v, w, wu, wv) * wu - eta(u, v, w, wu, wv) * wv;
  };
  const FirstOrderFn P1 = [=](const Jet2& u, const Jet2& v, const Jet2& w, const Jet2& wu,
                              const Jet2& wv) {
    return -(Q(u, v, w, wu, wv) * L.L_wu(u, v, w, wu, wv) +
             L.L(u, v, w, wu, wv) * zeta(u, v, w, wu, wv));
  };
  const FirstOrderFn P2 = [=](const Jet2& u, const Jet2& v, const Jet2& w, const Jet2& wu,
                              const Jet2& wv) {
    return -(Q(u, v, w, wu, wv) * L.L_wv(u, v, w, wu, wv) +
             L.L(u, v, w, wu, wv) * eta(u, v, w, wu, wv));
  };
  return {X.name + " / " + L.name, kind, P1, P2, Q};
}

// --- tables -------------------------------------------------------------------------------

namespace {

using J = const Jet2&;

struct Row {
  const char* label;
  FirstOrderFn P1, P2, Q;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table{
      {"-W1", [](J u, J, J w, J, J wv) { return 0.5 * wv - u * exp(w); },
       [](J u, J, J, J wu, J) { return 0.5 * wu * (1.0 + u * wu); },
       [](J u, J, J, J wu, J) { return 1.0 + u * wu; }},
      {"-W2", [](J, J v, J, J, J wv) { return 0.5 * wv * (1.0 + v * wv); },
       [](J, J v, J w, J wu, J) { return 0.5 * wu - v * exp(w); },
       [](J, J v, J, J, J wv) { return 1.0 + v * wv; }},
      {"-W3", [](J, J, J w, J, J) { return -exp(w); },
       [](J, J, J, J wu, J) { return 0.5 * wu * wu; },
       [](J, J, J, J wu, J) { return wu; }},
      {"-W4", [](J, J, J, J, J wv) { return 0.5 * wv * wv; },
       [](J, J, J w, J, J) { return -exp(w); },
       [](J, J, J, J, J wv) { return wv; }},
      {"-U1",
       [](J u, J v, J w, J, J wv) {
         return -0.5 * u * exp(-2.0 * w) - 0.5 * v * wv * wv - u * exp(w);
       },
       [](J u, J v, J w, J wu, J) {
         return 0.5 * u * wu * wu + v * exp(w) + 0.5 * v * exp(-2.0 * w);
       },
       [](J u, J v, J, J wu, J wv) { return u * wu - v * wv; }},
      {"-U2", [](J, J, J w, J, J) { return -exp(w) - 0.5 * exp(-2.0 * w); },
       [](J, J, J, J wu, J) { return 0.5 * wu * wu; },
       [](J, J, J, J wu, J) { return wu; }},
      {"-U3", [](J, J, J, J, J wv) { return 0.5 * wv * wv; },
       [](J, J, J w, J, J) { return -exp(w) - 0.5 * exp(-2.0 * w); },
       [](J, J, J, J, J wv) { return wv; }},
  };
  return table;
}

const Row& row(const std::string& label) {
  for (const auto& r : rows())
    if (label == r.label) return r;
  throw InvalidArgument("unknown conservation-law row '" + label + "'");
}

bool is_w_row(const std::string& label) { return label.size() == 3 && label[1] == 'W'; }

}  // namespace

std::vector<std::string> conservation_table_labels() {
  std::vector<std::string> out;
  for (const auto& r : rows()) out.emplace_back(r.label);
  return out;
}

ConservationLaw conservation_table(const std::string& label) {
  const Row& r = row(label);
  return {label, is_w_row(label) ? PdeKind::liouville_omega() : PdeKind::titeica_omega(), r.P1, r.P2,
          r.Q};
}

VectorField3 conservation_table_field(const std::string& label) {
  row(label);
  const int i = label[2] - '1';
  VectorField3 X = is_w_row(label) ? liouville_variational_symmetries()[i] : titeica_symmetries()[i];
  X = -X;
  X.name = label;
  return X;
}

Lagrangian conservation_table_lagrangian(const std::string& label) {
  row(label);
  return is_w_row(label) ? Lagrangian::L1() : Lagrangian::L2();
}

// --- h variable ----------------------------------------------------------------------------

double euler_lagrange_log(const Lagrangian& L, const Jet2& h) {
  require_order("euler_lagrange_log", h.order(), 2);
  if (!(h.value() > 0.0)) throw DomainError("euler_lagrange_log: h must be positive");
  // L~(h, h_u, h_v) = L(ln h, h_u / h, h_v / h)
  const FirstOrderFn Lt_h = [L](J u, J v, J h, J hu, J hv) {
    const Jet2 w = log(h), wu = hu / h, wv = hv / h;
    return L.L_w(u, v, w, wu, wv) / h - (hu / (h * h)) * L.L_wu(u, v, w, wu, wv) -
           (hv / (h * h)) * L.L_wv(u, v, w, wu, wv);
  };
  const FirstOrderFn Lt_hu = [L](J u, J v, J h, J hu, J hv) {
    return L.L_wu(u, v, log(h), hu / h, hv / h) / h;
  };
  const FirstOrderFn Lt_hv = [L](J u, J v, J h, J hu, J hv) {
    return L.L_wv(u, v, log(h), hu / h, hv / h) / h;
  };
  return along(Lt_h, h, 0).value() - along(Lt_hu, h, 1).d(1, 0) - along(Lt_hv, h, 1).d(0, 1);
}

double integrating_factor_defect(const Lagrangian& L, const Jet2& h) {
  PdeKind kind;
  switch (L.kind) {
    case LagrangianKind::L1: kind = PdeKind::liouville_h(); break;
    case LagrangianKind::L2: kind = PdeKind::titeica_h(); break;
    default: throw InvalidArgument("integrating_factor_defect: needs L1 or L2");
  }
  const double x = h.value();
  const double rhs = x * x * residual_scalar(kind, h) / (x * x * x);
  return euler_lagrange_log(L, h) - rhs;
}

}  // namespace titeica
