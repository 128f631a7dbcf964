//! Constructions between kinds: subadjacent algebras, embeddings, defect
//! maps and slotwise sums.

use super::laws::{defect1, defect2, defect3, leibniz_defect};
use super::{verify_structure, Kind, Presentation, Slot};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::product::Product;
use crate::report::VerificationReport;
use crate::scalar::{int, Scalar};

fn one() -> Scalar {
    int(1)
}

/// `p + flip(p)`
fn sym(p: &Product) -> Result<Product> {
    p.add(&p.flip()?)
}

/// `p − flip(p)`
fn antisym(p: &Product) -> Result<Product> {
    p.sub(&p.flip()?)
}

fn build(kind: Kind, a: &Presentation, products: Vec<(Slot, Product)>, note: &str) -> Result<Presentation> {
    Ok(Presentation::new(kind, a.space().clone(), products)?.with_note(note))
}

/// The algebra obtained by summing the split operations: `⊙` and `[[,]]`
/// for nonabelian-split kinds, the total product for NS-algebras, and the
/// `◇, ◆` pair for NS-pre-Lie algebras.
pub fn subadjacent(a: &Presentation) -> Result<Presentation> {
    let p = |s| a.product(s);
    let odot = || -> Result<Product> { sym(p(Slot::Star))?.add(p(Slot::Vee)) };
    let ns_bracket = || -> Result<Product> { antisym(p(Slot::Diamond))?.add(p(Slot::BlackDiamond)) };
    let note = format!("subadjacent of a {} structure", a.kind());
    match a.kind() {
        Kind::NsCommutative => build(Kind::CommutativeAssociative, a, vec![(Slot::Dot, odot()?)], &note),
        Kind::Zinbiel => build(Kind::CommutativeAssociative, a, vec![(Slot::Dot, sym(p(Slot::Star))?)], &note),
        Kind::NsLie => build(Kind::Lie, a, vec![(Slot::Bracket, ns_bracket()?)], &note),
        Kind::PreLie => build(Kind::Lie, a, vec![(Slot::Bracket, antisym(p(Slot::Diamond))?)], &note),
        Kind::NsPoisson | Kind::NsFManifold => {
            let target = if a.kind() == Kind::NsPoisson {
                Kind::Poisson
            } else {
                Kind::FManifold
            };
            build(target, a, vec![(Slot::Dot, odot()?), (Slot::Bracket, ns_bracket()?)], &note)
        }
        Kind::PrePoisson => build(
            Kind::Poisson,
            a,
            vec![
                (Slot::Dot, sym(p(Slot::Star))?),
                (Slot::Bracket, antisym(p(Slot::Diamond))?),
            ],
            &note,
        ),
        Kind::NsAssociative => {
            let total = Product::combine(&[(one(), p(Slot::Prec)), (one(), p(Slot::Succ)), (one(), p(Slot::Vee))])?;
            build(Kind::Associative, a, vec![(Slot::Dot, total)], &note)
        }
        Kind::NsPreLie | Kind::LDendriform => {
            let diamond = p(Slot::Rtri).sub(&p(Slot::Ltri).flip()?)?;
            if a.kind() == Kind::NsPreLie {
                let black = antisym(p(Slot::Circ))?;
                build(Kind::NsLie, a, vec![(Slot::Diamond, diamond), (Slot::BlackDiamond, black)], &note)
            } else {
                build(Kind::PreLie, a, vec![(Slot::Diamond, diamond)], &note)
            }
        }
        k => Err(Error::unsupported("subadjacent", k)),
    }
}

/// Views a structure as a special case of a richer kind.
pub fn embed(a: &Presentation, target: Kind) -> Result<Presentation> {
    use Kind::*;
    let n = a.dim();
    let zero = || Product::square(n);
    let p = |s: Slot| a.product(s).clone();
    let products = match (a.kind(), target) {
        (from, to) if from == to => return Ok(a.clone()),
        (CommutativeAssociative, Associative) | (Poisson, FManifold) | (NsPoisson, NsFManifold) => {
            return a.retag(target);
        }
        (Zinbiel, NsCommutative) => vec![(Slot::Star, p(Slot::Star)), (Slot::Vee, zero())],
        (CommutativeAssociative, NsCommutative) => vec![(Slot::Star, zero()), (Slot::Vee, p(Slot::Dot))],
        (PreLie, NsLie) => vec![(Slot::Diamond, p(Slot::Diamond)), (Slot::BlackDiamond, zero())],
        (Lie, NsLie) => vec![(Slot::Diamond, zero()), (Slot::BlackDiamond, p(Slot::Bracket))],
        (PrePoisson, NsPoisson) => vec![
            (Slot::Star, p(Slot::Star)),
            (Slot::Vee, zero()),
            (Slot::Diamond, p(Slot::Diamond)),
            (Slot::BlackDiamond, zero()),
        ],
        (Poisson, NsPoisson) => vec![
            (Slot::Star, zero()),
            (Slot::Vee, p(Slot::Dot)),
            (Slot::Diamond, zero()),
            (Slot::BlackDiamond, p(Slot::Bracket)),
        ],
        (Associative, NsAssociative) => vec![(Slot::Prec, p(Slot::Dot)), (Slot::Succ, zero()), (Slot::Vee, zero())],
        (NsCommutative, NsAssociative) => vec![
            (Slot::Succ, p(Slot::Star)),
            (Slot::Prec, a.product(Slot::Star).flip()?),
            (Slot::Vee, p(Slot::Vee)),
        ],
        (NsAssociative, NsPreLie) => vec![
            (Slot::Rtri, p(Slot::Succ)),
            (Slot::Ltri, p(Slot::Prec)),
            (Slot::Circ, p(Slot::Vee)),
        ],
        (Zinbiel, LDendriform) => vec![(Slot::Rtri, p(Slot::Star)), (Slot::Ltri, a.product(Slot::Star).flip()?)],
        (LDendriform, NsPreLie) => vec![(Slot::Rtri, p(Slot::Rtri)), (Slot::Ltri, p(Slot::Ltri)), (Slot::Circ, zero())],
        (from, to) => {
            return Err(Error::UnsupportedEmbedding {
                from: from.to_string(),
                to: to.to_string(),
            })
        }
    };
    build(target, a, products, &format!("{} embedded as {}", a.kind(), target))
}

fn require_slots(a: &Presentation, slots: &[Slot], operation: &str) -> Result<()> {
    if slots.iter().all(|s| a.kind().slots().contains(s)) {
        Ok(())
    } else {
        Err(Error::unsupported(operation, a.kind()))
    }
}

/// `P_x(y,z) = {x, y·z} − {x,y}·z − y·{x,z}`
pub fn hertling_manin(a: &Presentation, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    require_slots(a, &[Slot::Dot, Slot::Bracket], "the Leibniz defect")?;
    Ok(leibniz_defect(&a.ops(), x, y, z))
}

/// The three defect maps of a structure with `∗, ⋎, ◇, ◆`.
pub fn f_defects(a: &Presentation, x: &Vector, y: &Vector, z: &Vector) -> Result<[Vector; 3]> {
    require_slots(a, &[Slot::Star, Slot::Vee, Slot::Diamond, Slot::BlackDiamond], "defect maps")?;
    let o = a.ops();
    Ok([defect1(&o, x, y, z), defect2(&o, x, y, z), defect3(&o, x, y, z)])
}

/// Nonzero values of some trilinear maps on basis triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectTable {
    pub maps: Vec<String>,
    pub rows: Vec<([usize; 3], Vec<Vector>)>,
}

fn table(n: usize, maps: Vec<String>, f: impl Fn(&Vector, &Vector, &Vector) -> Result<Vec<Vector>>) -> Result<DefectTable> {
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let vals = f(&Vector::basis(n, i), &Vector::basis(n, j), &Vector::basis(n, k))?;
                if vals.iter().any(|v| !v.is_zero()) {
                    rows.push(([i, j, k], vals));
                }
            }
        }
    }
    Ok(DefectTable { maps, rows })
}

pub fn defect_table(a: &Presentation) -> Result<DefectTable> {
    let names = ["F1", "F2", "F3"].map(String::from).to_vec();
    table(a.dim(), names, |x, y, z| Ok(f_defects(a, x, y, z)?.to_vec()))
}

pub fn hertling_manin_table(a: &Presentation) -> Result<DefectTable> {
    table(a.dim(), vec!["P".to_string()], |x, y, z| Ok(vec![hertling_manin(a, x, y, z)?]))
}

/// Slotwise sum of two presentations of one kind, with its verification.
pub fn compatible_sum(a: &Presentation, b: &Presentation) -> Result<(Presentation, VerificationReport)> {
    if a.kind() != b.kind() {
        return Err(Error::unsupported("summing with a different kind", b.kind()));
    }
    if a.space() != b.space() {
        return Err(Error::dim("summands live on different spaces"));
    }
    let products = a
        .products()
        .map(|(s, p)| Ok((s, p.add(b.product(s))?)))
        .collect::<Result<Vec<_>>>()?;
    let sum = build(a.kind(), a, products, "slotwise sum")?;
    let report = verify_structure(&sum);
    Ok((sum, report))
}
