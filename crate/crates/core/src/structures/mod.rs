//! Structure kinds, presentations and exhaustive verification.
//!
//! A presentation is a basis together with one bilinear product per slot
//! required by its kind. The identities a kind must satisfy live in the
//! [`laws`] catalog; [`verify_structure`] runs every law of the kind over all
//! basis tuples.
//!
//! Slot names follow the operations they hold:
//!
//! | slot | symbol |
//! |------|--------|
//! | `dot` | `·` |
//! | `bracket` | `{,}` |
//! | `star` | `∗` |
//! | `vee` | `⋎` |
//! | `diamond` | `◇` |
//! | `blackdiamond` | `◆` |
//! | `prec`, `succ` | `≺`, `≻` |
//! | `rtri`, `ltri`, `circ` | `▷`, `◁`, `∘` |

mod derive;
mod laws;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Space, Vector};
use crate::product::Product;
use crate::report::{check_identity, VerificationReport};

pub use derive::{
    compatible_sum, defect_table, embed, f_defects, hertling_manin, hertling_manin_table, subadjacent,
    DefectTable,
};
pub use laws::{laws, Law, LawFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Dot,
    Bracket,
    Star,
    Vee,
    Diamond,
    BlackDiamond,
    Prec,
    Succ,
    Rtri,
    Ltri,
    Circ,
}

impl Slot {
    pub const ALL: [Slot; 11] = [
        Slot::Dot,
        Slot::Bracket,
        Slot::Star,
        Slot::Vee,
        Slot::Diamond,
        Slot::BlackDiamond,
        Slot::Prec,
        Slot::Succ,
        Slot::Rtri,
        Slot::Ltri,
        Slot::Circ,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Slot::Dot => "dot",
            Slot::Bracket => "bracket",
            Slot::Star => "star",
            Slot::Vee => "vee",
            Slot::Diamond => "diamond",
            Slot::BlackDiamond => "blackdiamond",
            Slot::Prec => "prec",
            Slot::Succ => "succ",
            Slot::Rtri => "rtri",
            Slot::Ltri => "ltri",
            Slot::Circ => "circ",
        }
    }

    pub fn from_tag(s: &str) -> Result<Slot> {
        Slot::ALL
            .into_iter()
            .find(|slot| slot.tag() == s)
            .ok_or_else(|| Error::doc(format!("unknown product slot `{s}`")))
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Associative,
    CommutativeAssociative,
    Lie,
    Poisson,
    Zinbiel,
    PreLie,
    PrePoisson,
    NsAssociative,
    NsCommutative,
    NsLie,
    NsPoisson,
    LDendriform,
    NsPreLie,
    FManifold,
    NsFManifold,
}

impl Kind {
    pub const ALL: [Kind; 15] = [
        Kind::Associative,
        Kind::CommutativeAssociative,
        Kind::Lie,
        Kind::Poisson,
        Kind::Zinbiel,
        Kind::PreLie,
        Kind::PrePoisson,
        Kind::NsAssociative,
        Kind::NsCommutative,
        Kind::NsLie,
        Kind::NsPoisson,
        Kind::LDendriform,
        Kind::NsPreLie,
        Kind::FManifold,
        Kind::NsFManifold,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::CommutativeAssociative => "commutative-associative",
            Kind::Lie => "lie",
            Kind::Poisson => "poisson",
            Kind::Zinbiel => "zinbiel",
            Kind::PreLie => "pre-lie",
            Kind::PrePoisson => "pre-poisson",
            Kind::NsAssociative => "ns-associative",
            Kind::NsCommutative => "ns-commutative",
            Kind::NsLie => "ns-lie",
            Kind::NsPoisson => "ns-poisson",
            Kind::LDendriform => "l-dendriform",
            Kind::NsPreLie => "ns-pre-lie",
            Kind::FManifold => "f-manifold",
            Kind::NsFManifold => "ns-f-manifold",
        }
    }

    pub fn from_tag(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }

    pub fn slots(self) -> &'static [Slot] {
        use Slot::*;
        match self {
            Kind::Associative | Kind::CommutativeAssociative => &[Dot],
            Kind::Lie => &[Bracket],
            Kind::Poisson | Kind::FManifold => &[Dot, Bracket],
            Kind::Zinbiel => &[Star],
            Kind::PreLie => &[Diamond],
            Kind::PrePoisson => &[Star, Diamond],
            Kind::NsAssociative => &[Vee, Prec, Succ],
            Kind::NsCommutative => &[Star, Vee],
            Kind::NsLie => &[Diamond, BlackDiamond],
            Kind::NsPoisson | Kind::NsFManifold => &[Star, Vee, Diamond, BlackDiamond],
            Kind::LDendriform => &[Rtri, Ltri],
            Kind::NsPreLie => &[Rtri, Ltri, Circ],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A kind, a basis and one product per required slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    kind: Kind,
    space: Space,
    products: BTreeMap<Slot, Product>,
    pub metadata: Vec<String>,
}

impl Presentation {
    pub fn new(kind: Kind, space: Space, products: impl IntoIterator<Item = (Slot, Product)>) -> Result<Self> {
        let products: BTreeMap<Slot, Product> = products.into_iter().collect();
        let found: Vec<Slot> = products.keys().copied().collect();
        let mut expected = kind.slots().to_vec();
        expected.sort();
        if found != expected {
            return Err(Error::SlotMismatch {
                kind: kind.tag().to_string(),
                expected: expected.iter().map(|s| s.tag().to_string()).collect(),
                found: found.iter().map(|s| s.tag().to_string()).collect(),
            });
        }
        let n = space.dim();
        for (slot, p) in &products {
            if !p.is_square_on(n) {
                return Err(Error::dim(format!("product `{slot}` is not a product on a {n}-dimensional space")));
            }
        }
        Ok(Presentation {
            kind,
            space,
            products,
            metadata: Vec::new(),
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn product(&self, slot: Slot) -> &Product {
        self.products
            .get(&slot)
            .unwrap_or_else(|| panic!("kind {} has no slot {slot}", self.kind))
    }

    pub fn products(&self) -> impl Iterator<Item = (Slot, &Product)> {
        self.products.iter().map(|(s, p)| (*s, p))
    }

    /// Replaces one product, keeping the kind.
    pub fn with_product(&self, slot: Slot, p: Product) -> Result<Self> {
        let mut products = self.products.clone();
        if products.insert(slot, p).is_none() {
            return Err(Error::unsupported(&format!("slot `{slot}`"), self.kind));
        }
        let mut out = Presentation::new(self.kind, self.space.clone(), products)?;
        out.metadata = self.metadata.clone();
        Ok(out)
    }

    /// Same products, different kind with the same slots.
    pub fn retag(&self, kind: Kind) -> Result<Self> {
        let mut out = Presentation::new(kind, self.space.clone(), self.products.clone())?;
        out.metadata = self.metadata.clone();
        Ok(out)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.metadata.push(note.into());
        self
    }

    pub fn ops(&self) -> Ops<'_> {
        Ops::new(self.products())
    }
}

/// Product lookup used when evaluating laws.
#[derive(Clone, Copy)]
pub struct Ops<'a> {
    slots: [Option<&'a Product>; 11],
}

impl<'a> Ops<'a> {
    pub fn new(products: impl IntoIterator<Item = (Slot, &'a Product)>) -> Self {
        let mut slots = [None; 11];
        for (s, p) in products {
            slots[s.index()] = Some(p);
        }
        Ops { slots }
    }

    pub fn apply(&self, s: Slot, x: &Vector, y: &Vector) -> Vector {
        self.slots[s.index()]
            .unwrap_or_else(|| panic!("no product in slot {s}"))
            .eval(x, y)
    }

    /// Like [`Ops::apply`] but an absent slot acts as the zero product.
    pub fn apply_or_zero(&self, s: Slot, x: &Vector, y: &Vector) -> Vector {
        match self.slots[s.index()] {
            Some(p) => p.eval(x, y),
            None => Vector::zeros(x.len()),
        }
    }

    pub fn dot(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Dot, x, y)
    }
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Bracket, x, y)
    }
    pub fn star(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Star, x, y)
    }
    pub fn vee(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply_or_zero(Slot::Vee, x, y)
    }
    pub fn diamond(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Diamond, x, y)
    }
    pub fn black(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply_or_zero(Slot::BlackDiamond, x, y)
    }
    pub fn prec(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Prec, x, y)
    }
    pub fn succ(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Succ, x, y)
    }
    pub fn rtri(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Rtri, x, y)
    }
    pub fn ltri(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply(Slot::Ltri, x, y)
    }
    pub fn circ(&self, x: &Vector, y: &Vector) -> Vector {
        self.apply_or_zero(Slot::Circ, x, y)
    }

    /// `x∗y + y∗x + x⋎y`
    pub fn sym_total(&self, x: &Vector, y: &Vector) -> Vector {
        self.star(x, y) + self.star(y, x) + self.vee(x, y)
    }

    /// `x◇y − y◇x + x◆y`
    pub fn skew_total(&self, x: &Vector, y: &Vector) -> Vector {
        self.diamond(x, y) - self.diamond(y, x) + self.black(x, y)
    }

    /// `x≺y + x≻y + x⋎y`
    pub fn split_total(&self, x: &Vector, y: &Vector) -> Vector {
        self.prec(x, y) + self.succ(x, y) + self.vee(x, y)
    }

    /// `x▷y + x◁y + x∘y`
    pub fn tri_total(&self, x: &Vector, y: &Vector) -> Vector {
        self.rtri(x, y) + self.ltri(x, y) + self.circ(x, y)
    }
}

fn basis_args(space: &Space, t: &[usize]) -> Vec<Vector> {
    t.iter().map(|&i| space.basis_vector(i)).collect()
}

/// Checks every law of the presentation's kind on all basis tuples.
pub fn verify_structure(a: &Presentation) -> VerificationReport {
    let mut report = VerificationReport::new(format!("{} structure", a.kind()));
    let ops = a.ops();
    let names = a.space().names();
    for law in laws(a.kind()) {
        let axes = vec![names; law.arity];
        report.push(check_identity(law.name, &axes, names, |t| {
            (law.eval)(&ops, &ops, &basis_args(a.space(), t))
        }));
    }
    report
}

/// Evaluates one named law of the presentation's kind at a basis tuple.
pub fn evaluate_law(a: &Presentation, name: &str, tuple: &[usize]) -> Option<(Vector, Vector)> {
    let law = laws(a.kind()).into_iter().find(|l| l.name == name)?;
    if tuple.len() != law.arity || tuple.iter().any(|&i| i >= a.dim()) {
        return None;
    }
    let ops = a.ops();
    Some((law.eval)(&ops, &ops, &basis_args(a.space(), tuple)))
}

/// Evaluates a law on arbitrary vectors.
pub fn evaluate_law_on(a: &Presentation, name: &str, args: &[Vector]) -> Option<(Vector, Vector)> {
    let law = laws(a.kind()).into_iter().find(|l| l.name == name)?;
    if args.len() != law.arity || args.iter().any(|v| v.len() != a.dim()) {
        return None;
    }
    let ops = a.ops();
    Some((law.eval)(&ops, &ops, args))
}
