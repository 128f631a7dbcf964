//! Truncated formal deformations, their semi-classical limits, and
//! NS-Lie filtrations with the associated graded structure.
//!
//! A deformation of order `m` stores, for every slot, the coefficients
//! `P_0, ..., P_m` of `P_t = sum P_i t^i` over `k[t]/(t^{m+1})`. Quadratic
//! laws are checked coefficientwise: the `t^n` part of a law is the sum of
//! the law evaluated with `P_i` innermost and `P_j` outermost, `i + j = n`.

mod filtration;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Space, Vector};
use crate::product::Product;
use crate::report::{check_identity, VerificationReport};
use crate::scalar::int;
use crate::structures::{laws, Kind, Ops, Presentation, Slot};

pub use filtration::{graded_from_filtration, verify_ns_lie_filtration, Filtration, GradedQuotient};

const DEFORMABLE: [Kind; 5] = [
    Kind::Associative,
    Kind::NsAssociative,
    Kind::NsPreLie,
    Kind::LDendriform,
    Kind::PreLie,
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    kind: Kind,
    space: Space,
    order: usize,
    coefficients: BTreeMap<Slot, Vec<Product>>,
}

impl TruncatedDeformation {
    /// `coefficients[slot][i]` is the `t^i` part of that slot's product.
    pub fn new(kind: Kind, space: Space, order: usize, coefficients: BTreeMap<Slot, Vec<Product>>) -> Result<Self> {
        if !DEFORMABLE.contains(&kind) {
            return Err(Error::unsupported("deformation", kind));
        }
        if order == 0 {
            return Err(Error::doc("deformation order must be positive"));
        }
        for (slot, cs) in &coefficients {
            if cs.len() != order + 1 {
                return Err(Error::dim(format!("slot `{slot}` needs {} coefficients, has {}", order + 1, cs.len())));
            }
        }
        let d = TruncatedDeformation {
            kind,
            space,
            order,
            coefficients,
        };
        for i in 0..=order {
            d.coefficient(i)?;
        }
        Ok(d)
    }

    /// The deformation with `base` as constant term and the given higher
    /// coefficients; missing ones are zero.
    pub fn from_base(base: &Presentation, order: usize, higher: &[(Slot, usize, Product)]) -> Result<Self> {
        let n = base.dim();
        let mut coefficients: BTreeMap<Slot, Vec<Product>> = base
            .products()
            .map(|(s, p)| {
                let mut cs = vec![p.clone()];
                cs.extend((0..order).map(|_| Product::square(n)));
                (s, cs)
            })
            .collect();
        for (slot, power, p) in higher {
            let cs = coefficients
                .get_mut(slot)
                .ok_or_else(|| Error::unsupported(&format!("slot `{slot}`"), base.kind()))?;
            if *power == 0 || *power > order {
                return Err(Error::dim(format!("power {power} outside 1..={order}")));
            }
            cs[*power] = p.clone();
        }
        TruncatedDeformation::new(base.kind(), base.space().clone(), order, coefficients)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &BTreeMap<Slot, Vec<Product>> {
        &self.coefficients
    }

    /// The `t^i` coefficients as a presentation of the base kind.
    pub fn coefficient(&self, i: usize) -> Result<Presentation> {
        Presentation::new(
            self.kind,
            self.space.clone(),
            self.coefficients.iter().map(|(s, cs)| (*s, cs[i].clone())),
        )
    }

    pub fn base(&self) -> Presentation {
        self.coefficient(0).expect("validated on construction")
    }

    fn ops(&self, i: usize) -> Ops<'_> {
        Ops::new(self.coefficients.iter().map(|(s, cs)| (*s, &cs[i])))
    }
}

/// The NS-associative deformation an operator `N` induces on an
/// associative one, coefficient by coefficient: `x≻y = N(x)·y`,
/// `x≺y = x·N(y)`, `x⋎y = −N(x·y)`. With `N` Nijenhuis for every `·_t`
/// this is again a deformation; `N = Id` always is.
pub fn split_by_operator(d: &TruncatedDeformation, n: &Matrix) -> Result<TruncatedDeformation> {
    if d.kind != Kind::Associative {
        return Err(Error::unsupported("splitting a deformation", d.kind));
    }
    let dim = d.space.dim();
    if n.rows() != dim || n.cols() != dim {
        return Err(Error::dim(format!("operator is {}x{}, space has dimension {dim}", n.rows(), n.cols())));
    }
    let dots = &d.coefficients[&Slot::Dot];
    let each = |f: &dyn Fn(&Product) -> Result<Product>| dots.iter().map(f).collect::<Result<Vec<_>>>();
    let coefficients = BTreeMap::from([
        (Slot::Succ, each(&|p| p.precompose(Some(n), None))?),
        (Slot::Prec, each(&|p| p.precompose(None, Some(n)))?),
        (Slot::Vee, each(&|p| Ok(p.postcompose(n)?.scale(&-int(1))))?),
    ]);
    TruncatedDeformation::new(Kind::NsAssociative, d.space.clone(), d.order, coefficients)
}

/// Every law of the base kind, coefficientwise for `t^0 .. t^m`.
pub fn verify_deformation(d: &TruncatedDeformation) -> Result<VerificationReport> {
    let names = d.space.names();
    let ops: Vec<Ops> = (0..=d.order).map(|i| d.ops(i)).collect();
    let mut report = VerificationReport::new(format!("{} deformation of order {}", d.kind, d.order));
    for law in laws(d.kind) {
        if law.degree > 2 {
            return Err(Error::unsupported(&format!("coefficientwise check of `{}`", law.name), d.kind));
        }
        let axes = vec![names; law.arity];
        for n in 0..=d.order {
            let name = format!("{}@t^{n}", law.name);
            report.push(check_identity(name, &axes, names, |t| {
                let args: Vec<Vector> = t.iter().map(|&i| d.space.basis_vector(i)).collect();
                if law.degree == 1 {
                    return (law.eval)(&ops[n], &ops[n], &args);
                }
                let mut lhs = Vector::zeros(names.len());
                let mut rhs = Vector::zeros(names.len());
                for i in 0..=n {
                    let (l, r) = (law.eval)(&ops[i], &ops[n - i], &args);
                    lhs += &l;
                    rhs += &r;
                }
                (lhs, rhs)
            }));
        }
    }
    Ok(report)
}

fn require(what: &str, report: VerificationReport) -> Result<()> {
    if report.holds() {
        Ok(())
    } else {
        Err(Error::Precondition {
            what: what.to_string(),
            report: Box::new(report),
        })
    }
}

/// `P(x,y) = Q(y,x)` on basis pairs.
fn flip_equal(name: &str, names: &[String], p: &Product, q: &Product) -> crate::report::IdentityResult {
    check_identity(name, &[names, names], names, |t| (p.eval_basis(t[0], t[1]), q.eval_basis(t[1], t[0])))
}

/// The base symmetry each limit needs, as a report.
fn base_symmetry(d: &TruncatedDeformation) -> VerificationReport {
    let names = d.space.names();
    let c0 = |s: Slot| &d.coefficients[&s][0];
    let mut report = VerificationReport::new("base symmetry for the semi-classical limit");
    match d.kind {
        Kind::Associative => report.push(flip_equal("commutative base", names, c0(Slot::Dot), c0(Slot::Dot))),
        Kind::PreLie => report.push(flip_equal("commutative base", names, c0(Slot::Diamond), c0(Slot::Diamond))),
        Kind::NsAssociative => {
            report.push(flip_equal("succ is flipped prec", names, c0(Slot::Succ), c0(Slot::Prec)));
            report.push(flip_equal("symmetric vee", names, c0(Slot::Vee), c0(Slot::Vee)));
        }
        Kind::NsPreLie => {
            report.push(flip_equal("rtri is flipped ltri", names, c0(Slot::Rtri), c0(Slot::Ltri)));
            report.push(flip_equal("symmetric circ", names, c0(Slot::Circ), c0(Slot::Circ)));
        }
        Kind::LDendriform => report.push(flip_equal("rtri is flipped ltri", names, c0(Slot::Rtri), c0(Slot::Ltri))),
        _ => {}
    }
    report
}

/// First-order data of a verified deformation with a (NS-)commutative base:
///
/// - associative → Poisson with `{x,y} = x·₁y − y·₁x`;
/// - pre-Lie → F-manifold with `{x,y} = x◇₁y − y◇₁x`;
/// - NS-associative → NS-Poisson with `∗ = ≻₀`, `⋎ = ⋎₀`,
///   `◇ = ≻₁ − flip ≺₁`, `◆ = ⋎₁ − flip ⋎₁`;
/// - NS-pre-Lie → NS-F-manifold with `∗ = ▷₀`, `⋎ = ∘₀`,
///   `◇ = ▷₁ − flip ◁₁`, `◆ = ∘₁ − flip ∘₁`;
/// - L-dendriform → NS-F-manifold as above with `⋎ = ◆ = 0`.
pub fn semiclassical_limit(d: &TruncatedDeformation) -> Result<Presentation> {
    if d.order < 2 {
        return Err(Error::unsupported("a semi-classical limit below order 2", d.kind));
    }
    require("deformation identities", verify_deformation(d)?)?;
    require("base symmetry", base_symmetry(d))?;
    let c = |s: Slot, i: usize| &d.coefficients[&s][i];
    let skew = |p: &Product| p.sub(&p.flip()?);
    let cross = |a: &Product, b: &Product| a.sub(&b.flip()?);
    let n = d.space.dim();
    let (kind, products) = match d.kind {
        Kind::Associative => (
            Kind::Poisson,
            vec![(Slot::Dot, c(Slot::Dot, 0).clone()), (Slot::Bracket, skew(c(Slot::Dot, 1))?)],
        ),
        Kind::PreLie => (
            Kind::FManifold,
            vec![
                (Slot::Dot, c(Slot::Diamond, 0).clone()),
                (Slot::Bracket, skew(c(Slot::Diamond, 1))?),
            ],
        ),
        Kind::NsAssociative => (
            Kind::NsPoisson,
            vec![
                (Slot::Star, c(Slot::Succ, 0).clone()),
                (Slot::Vee, c(Slot::Vee, 0).clone()),
                (Slot::Diamond, cross(c(Slot::Succ, 1), c(Slot::Prec, 1))?),
                (Slot::BlackDiamond, skew(c(Slot::Vee, 1))?),
            ],
        ),
        Kind::NsPreLie => (
            Kind::NsFManifold,
            vec![
                (Slot::Star, c(Slot::Rtri, 0).clone()),
                (Slot::Vee, c(Slot::Circ, 0).clone()),
                (Slot::Diamond, cross(c(Slot::Rtri, 1), c(Slot::Ltri, 1))?),
                (Slot::BlackDiamond, skew(c(Slot::Circ, 1))?),
            ],
        ),
        Kind::LDendriform => (
            Kind::NsFManifold,
            vec![
                (Slot::Star, c(Slot::Rtri, 0).clone()),
                (Slot::Vee, Product::square(n)),
                (Slot::Diamond, cross(c(Slot::Rtri, 1), c(Slot::Ltri, 1))?),
                (Slot::BlackDiamond, Product::square(n)),
            ],
        ),
        k => return Err(Error::unsupported("semi-classical limit", k)),
    };
    Ok(Presentation::new(kind, d.space.clone(), products)?
        .with_note(format!("semi-classical limit of a {} deformation", d.kind)))
}
