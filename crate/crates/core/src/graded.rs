//! Graded structures: Gerstenhaber algebras and their nonabelian-split
//! refinements.
//!
//! Every basis element carries an integer degree. Products in the `dot`,
//! `star` and `vee` slots have degree 0; `bracket`, `diamond` and
//! `blackdiamond` have degree `bracket_shift`, which is `-1` for the usual
//! Gerstenhaber grading and `0` when all degrees vanish and the structure
//! should collapse to its ungraded counterpart.
//!
//! Signs for bracket-type operations use the shifted degree
//! `d(x) = |x| + bracket_shift`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Space, Vector};
use crate::operators::{deformed_products, verify_nijenhuis};
use crate::product::Product;
use crate::report::{check_identity, VerificationReport};
use crate::scalar::{int, sign};
use crate::structures::{Kind, Presentation, Slot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GradedKind {
    Gerstenhaber,
    GradedNsCommutative,
    GradedNsLie,
    NsGerstenhaber,
}

impl GradedKind {
    pub const ALL: [GradedKind; 4] = [
        GradedKind::Gerstenhaber,
        GradedKind::GradedNsCommutative,
        GradedKind::GradedNsLie,
        GradedKind::NsGerstenhaber,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            GradedKind::Gerstenhaber => "gerstenhaber",
            GradedKind::GradedNsCommutative => "graded-ns-commutative",
            GradedKind::GradedNsLie => "graded-ns-lie",
            GradedKind::NsGerstenhaber => "ns-gerstenhaber",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        GradedKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }

    /// The ungraded kind with the same slots.
    pub fn ungraded(self) -> Kind {
        match self {
            GradedKind::Gerstenhaber => Kind::Poisson,
            GradedKind::GradedNsCommutative => Kind::NsCommutative,
            GradedKind::GradedNsLie => Kind::NsLie,
            GradedKind::NsGerstenhaber => Kind::NsPoisson,
        }
    }

    pub fn from_ungraded(kind: Kind) -> Result<Self> {
        GradedKind::ALL
            .into_iter()
            .find(|g| g.ungraded() == kind)
            .ok_or_else(|| Error::unsupported("grading", kind))
    }

    pub fn slots(self) -> &'static [Slot] {
        self.ungraded().slots()
    }
}

impl fmt::Display for GradedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn is_bracket_type(s: Slot) -> bool {
    matches!(s, Slot::Bracket | Slot::Diamond | Slot::BlackDiamond)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    kind: GradedKind,
    space: Space,
    degrees: Vec<i64>,
    bracket_shift: i64,
    products: BTreeMap<Slot, Product>,
    pub metadata: Vec<String>,
}

impl GradedPresentation {
    pub fn new(
        kind: GradedKind,
        space: Space,
        degrees: Vec<i64>,
        bracket_shift: i64,
        products: impl IntoIterator<Item = (Slot, Product)>,
    ) -> Result<Self> {
        if degrees.len() != space.dim() {
            return Err(Error::dim("one degree per basis element is required"));
        }
        if !matches!(bracket_shift, 0 | -1) {
            return Err(Error::Homogeneity(format!("bracket shift {bracket_shift} is not 0 or -1")));
        }
        // Reuse slot and dimension validation.
        let ungraded = Presentation::new(kind.ungraded(), space.clone(), products)?;
        let products: BTreeMap<Slot, Product> = ungraded.products().map(|(s, p)| (s, p.clone())).collect();
        for (slot, p) in &products {
            let shift = if is_bracket_type(*slot) { bracket_shift } else { 0 };
            for (i, j, k, _) in p.nonzero_entries() {
                if degrees[k] != degrees[i] + degrees[j] + shift {
                    return Err(Error::Homogeneity(format!(
                        "{slot}: {} {} -> {} breaks the degree {shift} rule",
                        space.name(i),
                        space.name(j),
                        space.name(k)
                    )));
                }
            }
        }
        Ok(GradedPresentation {
            kind,
            space,
            degrees,
            bracket_shift,
            products,
            metadata: Vec::new(),
        })
    }

    /// Regrades an ungraded presentation.
    pub fn from_ungraded(a: &Presentation, degrees: Vec<i64>, bracket_shift: i64) -> Result<Self> {
        let kind = GradedKind::from_ungraded(a.kind())?;
        let products: Vec<(Slot, Product)> = a.products().map(|(s, p)| (s, p.clone())).collect();
        GradedPresentation::new(kind, a.space().clone(), degrees, bracket_shift, products)
    }

    pub fn kind(&self) -> GradedKind {
        self.kind
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn bracket_shift(&self) -> i64 {
        self.bracket_shift
    }

    pub fn product(&self, s: Slot) -> &Product {
        &self.products[&s]
    }

    pub fn products(&self) -> impl Iterator<Item = (Slot, &Product)> {
        self.products.iter().map(|(s, p)| (*s, p))
    }

    /// The same products under the ungraded kind with the same slots.
    pub fn ungraded(&self) -> Presentation {
        Presentation::new(
            self.kind.ungraded(),
            self.space.clone(),
            self.products.iter().map(|(s, p)| (*s, p.clone())),
        )
        .expect("slots were validated on construction")
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.metadata.push(note.into());
        self
    }
}

struct GCtx<'a> {
    g: &'a GradedPresentation,
}

impl GCtx<'_> {
    fn e(&self, i: usize) -> Vector {
        self.g.space.basis_vector(i)
    }
    fn deg(&self, i: usize) -> i64 {
        self.g.degrees[i]
    }
    fn d(&self, i: usize) -> i64 {
        self.g.degrees[i] + self.g.bracket_shift
    }
    fn ap(&self, s: Slot, x: &Vector, y: &Vector) -> Vector {
        self.g.products[&s].eval(x, y)
    }
    fn dot(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::Dot, x, y)
    }
    fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::Bracket, x, y)
    }
    fn star(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::Star, x, y)
    }
    fn vee(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::Vee, x, y)
    }
    fn dm(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::Diamond, x, y)
    }
    fn black(&self, x: &Vector, y: &Vector) -> Vector {
        self.ap(Slot::BlackDiamond, x, y)
    }
    /// `e_i∗e_j + (−1)^{|i||j|} e_j∗e_i + e_i⋎e_j`
    fn odot(&self, i: usize, j: usize) -> Vector {
        let (x, y) = (self.e(i), self.e(j));
        self.star(&x, &y) + self.star(&y, &x).scale(&sign(self.deg(i) * self.deg(j))) + self.vee(&x, &y)
    }
    /// `e_i◇e_j − (−1)^{d(i)d(j)} e_j◇e_i + e_i◆e_j`
    fn dbr(&self, i: usize, j: usize) -> Vector {
        let (x, y) = (self.e(i), self.e(j));
        self.dm(&x, &y) - self.dm(&y, &x).scale(&sign(self.d(i) * self.d(j))) + self.black(&x, &y)
    }
}

type GLawFn = fn(&GCtx, &[usize]) -> (Vector, Vector);

struct GLaw {
    name: &'static str,
    arity: usize,
    eval: GLawFn,
}

fn zero_of(v: &Vector) -> Vector {
    Vector::zeros(v.len())
}

const GERSTENHABER: &[GLaw] = &[
    GLaw {
        name: "graded-commutativity",
        arity: 2,
        eval: |c, t| {
            let (x, y) = (c.e(t[0]), c.e(t[1]));
            (c.dot(&x, &y), c.dot(&y, &x).scale(&sign(c.deg(t[0]) * c.deg(t[1]))))
        },
    },
    GLaw {
        name: "associativity",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            (c.dot(&c.dot(&x, &y), &z), c.dot(&x, &c.dot(&y, &z)))
        },
    },
    GLaw {
        name: "graded-skew-symmetry",
        arity: 2,
        eval: |c, t| {
            let (x, y) = (c.e(t[0]), c.e(t[1]));
            (c.br(&x, &y), -c.br(&y, &x).scale(&sign(c.d(t[0]) * c.d(t[1]))))
        },
    },
    GLaw {
        name: "graded-jacobi",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            let (dx, dy, dz) = (c.d(t[0]), c.d(t[1]), c.d(t[2]));
            let lhs = c.br(&x, &c.br(&y, &z)).scale(&sign(dx * dz))
                + c.br(&y, &c.br(&z, &x)).scale(&sign(dy * dx))
                + c.br(&z, &c.br(&x, &y)).scale(&sign(dz * dy));
            let zero = zero_of(&lhs);
            (lhs, zero)
        },
    },
    GLaw {
        name: "graded-leibniz",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            (
                c.br(&x, &c.dot(&y, &z)),
                c.dot(&c.br(&x, &y), &z) + c.dot(&y, &c.br(&x, &z)).scale(&sign(c.d(t[0]) * c.deg(t[1]))),
            )
        },
    },
];

const GRADED_NS_COMM: &[GLaw] = &[
    GLaw {
        name: "vee-graded-commutativity",
        arity: 2,
        eval: |c, t| {
            let (x, y) = (c.e(t[0]), c.e(t[1]));
            (c.vee(&x, &y), c.vee(&y, &x).scale(&sign(c.deg(t[0]) * c.deg(t[1]))))
        },
    },
    GLaw {
        name: "ns-commutative-1",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            (c.star(&x, &c.star(&y, &z)), c.star(&c.odot(t[0], t[1]), &z))
        },
    },
    GLaw {
        name: "ns-commutative-2",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            let lhs = c.star(&x, &c.vee(&y, &z)) + c.vee(&x, &c.odot(t[1], t[2]));
            let rhs = c.star(&y, &c.vee(&x, &z)) + c.vee(&y, &c.odot(t[0], t[2]));
            (lhs, rhs.scale(&sign(c.deg(t[0]) * c.deg(t[1]))))
        },
    },
];

const GRADED_NS_LIE: &[GLaw] = &[
    GLaw {
        name: "blackdiamond-graded-skew-symmetry",
        arity: 2,
        eval: |c, t| {
            let (x, y) = (c.e(t[0]), c.e(t[1]));
            (c.black(&x, &y), -c.black(&y, &x).scale(&sign(c.d(t[0]) * c.d(t[1]))))
        },
    },
    GLaw {
        name: "ns-lie-1",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            let swapped = c.dm(&y, &c.dm(&x, &z)) - c.dm(&c.dm(&y, &x), &z);
            (
                c.dm(&x, &c.dm(&y, &z)) - c.dm(&c.dm(&x, &y), &z) - swapped.scale(&sign(c.d(t[0]) * c.d(t[1]))),
                c.dm(&c.black(&x, &y), &z),
            )
        },
    },
    GLaw {
        name: "ns-lie-2",
        arity: 3,
        eval: |c, t| {
            let term = |p: usize, q: usize, r: usize| {
                let (a, b, e) = (c.e(p), c.e(q), c.e(r));
                c.dm(&a, &c.black(&b, &e)) + c.black(&a, &c.dbr(q, r))
            };
            let (dx, dy, dz) = (c.d(t[0]), c.d(t[1]), c.d(t[2]));
            let lhs = term(t[0], t[1], t[2])
                + term(t[1], t[2], t[0]).scale(&sign(dx * (dy + dz)))
                + term(t[2], t[0], t[1]).scale(&sign(dz * (dx + dy)));
            let zero = zero_of(&lhs);
            (lhs, zero)
        },
    },
];

const NS_GERSTENHABER: &[GLaw] = &[
    GLaw {
        name: "ns-gerstenhaber-1",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            (
                c.star(&c.dbr(t[0], t[1]), &z),
                c.dm(&x, &c.star(&y, &z)) - c.star(&y, &c.dm(&x, &z)).scale(&sign(c.d(t[0]) * c.deg(t[1]))),
            )
        },
    },
    GLaw {
        name: "ns-gerstenhaber-2",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            (
                c.dm(&c.odot(t[0], t[1]), &z),
                c.star(&x, &c.dm(&y, &z)) + c.star(&y, &c.dm(&x, &z)).scale(&sign(c.deg(t[0]) * c.deg(t[1]))),
            )
        },
    },
    GLaw {
        name: "ns-gerstenhaber-3",
        arity: 3,
        eval: |c, t| {
            let (x, y, z) = (c.e(t[0]), c.e(t[1]), c.e(t[2]));
            let lhs = c.black(&x, &c.odot(t[1], t[2])) + c.dm(&x, &c.vee(&y, &z));
            let tail = c.vee(&y, &c.dbr(t[0], t[2])) + c.star(&y, &c.black(&x, &z));
            let rhs = c.vee(&c.dbr(t[0], t[1]), &z)
                + c.star(&z, &c.black(&x, &y)).scale(&sign(c.deg(t[2]) * (c.deg(t[0]) + c.d(t[1]))))
                + tail.scale(&sign(c.d(t[0]) * c.deg(t[1])));
            (lhs, rhs)
        },
    },
];

const GRADED_CATALOG: &[(GradedKind, &[&[GLaw]])] = &[
    (GradedKind::Gerstenhaber, &[GERSTENHABER]),
    (GradedKind::GradedNsCommutative, &[GRADED_NS_COMM]),
    (GradedKind::GradedNsLie, &[GRADED_NS_LIE]),
    (GradedKind::NsGerstenhaber, &[GRADED_NS_COMM, GRADED_NS_LIE, NS_GERSTENHABER]),
];

pub fn graded_law_names(kind: GradedKind) -> Vec<&'static str> {
    graded_laws(kind).iter().map(|l| l.name).collect()
}

fn graded_laws(kind: GradedKind) -> Vec<&'static GLaw> {
    GRADED_CATALOG
        .iter()
        .find(|(k, _)| *k == kind)
        .map(|(_, groups)| groups.iter().flat_map(|g| g.iter()).collect())
        .unwrap_or_default()
}

pub fn verify_graded(g: &GradedPresentation) -> VerificationReport {
    let mut report = VerificationReport::new(format!("{} structure", g.kind()));
    let ctx = GCtx { g };
    let names = g.space.names();
    for law in graded_laws(g.kind) {
        let axes = vec![names; law.arity];
        report.push(check_identity(law.name, &axes, names, |t| (law.eval)(&ctx, t)));
    }
    report
}

fn check_degree_zero(g: &GradedPresentation, n: &Matrix) -> Result<()> {
    if n.rows() != g.dim() || n.cols() != g.dim() {
        return Err(Error::dim("operator size differs from the algebra dimension"));
    }
    for (i, j, c) in n.entries() {
        if !num_traits::Zero::is_zero(c) && g.degrees[i] != g.degrees[j] {
            return Err(Error::Homogeneity(format!(
                "operator sends {} into degree {}",
                g.space.name(j),
                g.degrees[i]
            )));
        }
    }
    Ok(())
}

/// The Nijenhuis condition for a degree-0 operator on every slot.
pub fn verify_graded_nijenhuis(g: &GradedPresentation, n: &Matrix) -> Result<VerificationReport> {
    check_degree_zero(g, n)?;
    verify_nijenhuis(&g.ungraded(), n)
}

/// `x∗y = N(x)·y`, `x⋎y = −N(x·y)`, `x◇y = {N(x),y}`, `x◆y = −N{x,y}` on a
/// Gerstenhaber algebra.
pub fn graded_induce_from_nijenhuis(g: &GradedPresentation, n: &Matrix, strict: bool) -> Result<GradedPresentation> {
    if g.kind != GradedKind::Gerstenhaber {
        return Err(Error::unsupported("graded Nijenhuis induction", g.kind));
    }
    check_degree_zero(g, n)?;
    if strict {
        let structure = verify_graded(g);
        if !structure.holds() {
            return Err(Error::Precondition {
                what: "input structure".into(),
                report: Box::new(structure),
            });
        }
        let report = verify_graded_nijenhuis(g, n)?;
        if !report.holds() {
            return Err(Error::Precondition {
                what: "Nijenhuis condition".into(),
                report: Box::new(report),
            });
        }
    }
    let minus = -int(1);
    let dot = g.product(Slot::Dot);
    let br = g.product(Slot::Bracket);
    let products = [
        (Slot::Star, dot.precompose(Some(n), None)?),
        (Slot::Vee, dot.postcompose(n)?.scale(&minus)),
        (Slot::Diamond, br.precompose(Some(n), None)?),
        (Slot::BlackDiamond, br.postcompose(n)?.scale(&minus)),
    ];
    Ok(GradedPresentation::new(
        GradedKind::NsGerstenhaber,
        g.space.clone(),
        g.degrees.clone(),
        g.bracket_shift,
        products,
    )?
    .with_note("induced by a Nijenhuis operator on a Gerstenhaber algebra"))
}

/// `x·y = x⊙y` and `{x,y} = [[x,y]]` with their graded signs.
pub fn graded_subadjacent(g: &GradedPresentation) -> Result<GradedPresentation> {
    if g.kind != GradedKind::NsGerstenhaber {
        return Err(Error::unsupported("graded subadjacent", g.kind));
    }
    let ctx = GCtx { g };
    let n = g.dim();
    let dot = Product::from_fn(n, n, n, |i, j| ctx.odot(i, j));
    let bracket = Product::from_fn(n, n, n, |i, j| ctx.dbr(i, j));
    Ok(GradedPresentation::new(
        GradedKind::Gerstenhaber,
        g.space.clone(),
        g.degrees.clone(),
        g.bracket_shift,
        [(Slot::Dot, dot), (Slot::Bracket, bracket)],
    )?
    .with_note("subadjacent of an NS-Gerstenhaber algebra"))
}

/// The Nijenhuis-deformed products `x ⋄_N y` on every slot.
pub fn graded_deform_by_nijenhuis(g: &GradedPresentation, n: &Matrix) -> Result<GradedPresentation> {
    check_degree_zero(g, n)?;
    let deformed = deformed_products(&g.ungraded(), n)?;
    let products: Vec<(Slot, Product)> = deformed.products().map(|(s, p)| (s, p.clone())).collect();
    Ok(GradedPresentation::new(g.kind, g.space.clone(), g.degrees.clone(), g.bracket_shift, products)?
        .with_note("deformed by a Nijenhuis operator"))
}
