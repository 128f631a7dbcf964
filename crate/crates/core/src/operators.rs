//! Nijenhuis, Reynolds and derivation operators, and the structures they
//! induce.
//!
//! Conditions are checked on every product slot of the algebra, so a
//! Poisson algebra gets one identity for `·` and one for `{,}`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::product::Product;
use crate::report::{check_identity, VerificationReport};
use crate::scalar::int;
use crate::structures::{compatible_sum, verify_structure, Kind, Presentation, Slot};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorRole {
    Nijenhuis,
    Reynolds,
    Derivation,
}

impl OperatorRole {
    pub fn tag(self) -> &'static str {
        match self {
            OperatorRole::Nijenhuis => "nijenhuis",
            OperatorRole::Reynolds => "reynolds",
            OperatorRole::Derivation => "derivation",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "nijenhuis" => Ok(OperatorRole::Nijenhuis),
            "reynolds" => Ok(OperatorRole::Reynolds),
            "derivation" => Ok(OperatorRole::Derivation),
            _ => Err(Error::doc(format!("unknown operator role `{s}`"))),
        }
    }
}

fn check_square(a: &Presentation, n: &Matrix) -> Result<()> {
    if n.rows() != a.dim() || n.cols() != a.dim() {
        return Err(Error::dim(format!(
            "operator is {}x{} but the algebra has dimension {}",
            n.rows(),
            n.cols(),
            a.dim()
        )));
    }
    Ok(())
}

fn per_slot(
    a: &Presentation,
    n: &Matrix,
    role: OperatorRole,
    side: impl Fn(&Product, &Vector, &Vector) -> (Vector, Vector) + Sync,
) -> Result<VerificationReport> {
    check_square(a, n)?;
    let mut report = VerificationReport::new(format!("{} operator on a {} structure", role.tag(), a.kind()));
    let names = a.space().names();
    for (slot, p) in a.products() {
        let name = format!("{}({})", role.tag(), slot);
        report.push(check_identity(name, &[names, names], names, |t| {
            side(p, &a.space().basis_vector(t[0]), &a.space().basis_vector(t[1]))
        }));
    }
    Ok(report)
}

/// `N(x)⋄N(y) = N(N(x)⋄y + x⋄N(y) − N(x⋄y))` for every product `⋄`.
pub fn verify_nijenhuis(a: &Presentation, n: &Matrix) -> Result<VerificationReport> {
    per_slot(a, n, OperatorRole::Nijenhuis, |p, x, y| {
        let (nx, ny) = (n.apply(x), n.apply(y));
        let inner = p.eval(&nx, y) + p.eval(x, &ny) - n.apply(&p.eval(x, y));
        (p.eval(&nx, &ny), n.apply(&inner))
    })
}

/// `R(x)⋄R(y) = R(R(x)⋄y + x⋄R(y) − R(x)⋄R(y))` for every product `⋄`.
pub fn verify_reynolds(a: &Presentation, r: &Matrix) -> Result<VerificationReport> {
    per_slot(a, r, OperatorRole::Reynolds, |p, x, y| {
        let (rx, ry) = (r.apply(x), r.apply(y));
        let both = p.eval(&rx, &ry);
        let inner = p.eval(&rx, y) + p.eval(x, &ry) - both.clone();
        (both, r.apply(&inner))
    })
}

/// `D(x⋄y) = D(x)⋄y + x⋄D(y)` for every product `⋄`.
pub fn verify_derivation(a: &Presentation, d: &Matrix) -> Result<VerificationReport> {
    per_slot(a, d, OperatorRole::Derivation, |p, x, y| {
        (d.apply(&p.eval(x, y)), p.eval(&d.apply(x), y) + p.eval(x, &d.apply(y)))
    })
}

pub fn verify_operator(a: &Presentation, m: &Matrix, role: OperatorRole) -> Result<VerificationReport> {
    match role {
        OperatorRole::Nijenhuis => verify_nijenhuis(a, m),
        OperatorRole::Reynolds => verify_reynolds(a, m),
        OperatorRole::Derivation => verify_derivation(a, m),
    }
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

fn split_target(kind: Kind, operation: &str) -> Result<Kind> {
    match kind {
        Kind::CommutativeAssociative => Ok(Kind::NsCommutative),
        Kind::Lie => Ok(Kind::NsLie),
        Kind::Poisson => Ok(Kind::NsPoisson),
        Kind::FManifold => Ok(Kind::NsFManifold),
        k => Err(Error::unsupported(operation, k)),
    }
}

fn assemble_split(a: &Presentation, target: Kind, sym: Option<(Product, Product)>, skew: Option<(Product, Product)>, note: String) -> Result<Presentation> {
    let mut products = Vec::new();
    if let Some((star, vee)) = sym {
        products.push((Slot::Star, star));
        products.push((Slot::Vee, vee));
    }
    if let Some((diamond, black)) = skew {
        products.push((Slot::Diamond, diamond));
        products.push((Slot::BlackDiamond, black));
    }
    Ok(Presentation::new(target, a.space().clone(), products)?.with_note(note))
}

fn has(a: &Presentation, s: Slot) -> bool {
    a.kind().slots().contains(&s)
}

/// `x∗y = N(x)·y`, `x⋎y = −N(x·y)`, `x◇y = {N(x),y}`, `x◆y = −N{x,y}`.
///
/// In strict mode the algebra and the Nijenhuis condition are verified
/// first and a failure is returned as [`Error::Precondition`].
pub fn induce_from_nijenhuis(a: &Presentation, n: &Matrix, strict: bool) -> Result<Presentation> {
    let target = split_target(a.kind(), "inducing from a Nijenhuis operator")?;
    check_square(a, n)?;
    if strict {
        require("input structure", verify_structure(a))?;
        require("Nijenhuis condition", verify_nijenhuis(a, n)?)?;
    }
    let minus = -int(1);
    let sym = if has(a, Slot::Dot) {
        let dot = a.product(Slot::Dot);
        Some((dot.precompose(Some(n), None)?, dot.postcompose(n)?.scale(&minus)))
    } else {
        None
    };
    let skew = if has(a, Slot::Bracket) {
        let br = a.product(Slot::Bracket);
        Some((br.precompose(Some(n), None)?, br.postcompose(n)?.scale(&minus)))
    } else {
        None
    };
    assemble_split(a, target, sym, skew, format!("induced by a Nijenhuis operator on a {} structure", a.kind()))
}

/// `x∗y = R(x)·y`, `x⋎y = −R(x)·R(y)`, `x◇y = {R(x),y}`, `x◆y = −{R(x),R(y)}`.
pub fn induce_from_reynolds(a: &Presentation, r: &Matrix, strict: bool) -> Result<Presentation> {
    let target = split_target(a.kind(), "inducing from a Reynolds operator")?;
    check_square(a, r)?;
    if strict {
        require("input structure", verify_structure(a))?;
        require("Reynolds condition", verify_reynolds(a, r)?)?;
    }
    let minus = -int(1);
    let pair = |p: &Product| -> Result<(Product, Product)> {
        Ok((p.precompose(Some(r), None)?, p.precompose(Some(r), Some(r))?.scale(&minus)))
    };
    let sym = if has(a, Slot::Dot) { Some(pair(a.product(Slot::Dot))?) } else { None };
    let skew = if has(a, Slot::Bracket) { Some(pair(a.product(Slot::Bracket))?) } else { None };
    assemble_split(a, target, sym, skew, format!("induced by a Reynolds operator on a {} structure", a.kind()))
}

/// `x ⋄_N y = N(x)⋄y + x⋄N(y) − N(x⋄y)` on every slot.
pub fn deformed_products(a: &Presentation, n: &Matrix) -> Result<Presentation> {
    check_square(a, n)?;
    let products = a
        .products()
        .map(|(s, p)| {
            let d = Product::combine(&[
                (int(1), &p.precompose(Some(n), None)?),
                (int(1), &p.precompose(None, Some(n))?),
                (-int(1), &p.postcompose(n)?),
            ])?;
            Ok((s, d))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Presentation::new(a.kind(), a.space().clone(), products)?.with_note("deformed by a Nijenhuis operator"))
}

/// `N(x ⋄_N y) = N(x) ⋄ N(y)` on every slot, evaluated through the deformed
/// products rather than the Nijenhuis formula.
pub fn intertwining_report(a: &Presentation, deformed: &Presentation, n: &Matrix) -> Result<VerificationReport> {
    check_square(a, n)?;
    let mut report = VerificationReport::new("operator intertwines the deformed products");
    let names = a.space().names();
    for (slot, p) in a.products() {
        let q = deformed.product(slot);
        report.push(check_identity(format!("intertwining({slot})"), &[names, names], names, |t| {
            let (x, y) = (a.space().basis_vector(t[0]), a.space().basis_vector(t[1]));
            (n.apply(&q.eval(&x, &y)), p.eval(&n.apply(&x), &n.apply(&y)))
        }));
    }
    Ok(report)
}

/// The deformed algebra; strict mode checks the input and the
/// intertwining property.
pub fn deform_by_nijenhuis(a: &Presentation, n: &Matrix, strict: bool) -> Result<Presentation> {
    if strict {
        require("input structure", verify_structure(a))?;
    }
    let deformed = deformed_products(a, n)?;
    if strict {
        require("intertwining", intertwining_report(a, &deformed, n)?)?;
    }
    Ok(deformed)
}

/// `{x,y} = x·D(y) − y·D(x)` on a commutative associative algebra.
pub fn derivation_bracket(a: &Presentation, d: &Matrix, strict: bool) -> Result<Presentation> {
    if a.kind() != Kind::CommutativeAssociative {
        return Err(Error::unsupported("the derivation bracket", a.kind()));
    }
    check_square(a, d)?;
    if strict {
        require("input structure", verify_structure(a))?;
        require("derivation condition", verify_derivation(a, d)?)?;
    }
    let dot = a.product(Slot::Dot);
    let half = dot.precompose(None, Some(d))?;
    let bracket = half.sub(&half.flip()?)?;
    Ok(Presentation::new(
        Kind::FManifold,
        a.space().clone(),
        [(Slot::Dot, dot.clone()), (Slot::Bracket, bracket)],
    )?
    .with_note("bracket built from a derivation"))
}

/// Results of checking the powers of a Nijenhuis operator.
#[derive(Clone, Debug)]
pub struct HierarchyReport {
    pub powers: Vec<u32>,
    pub operators: Vec<(u32, VerificationReport)>,
    pub structures: Vec<(u32, VerificationReport)>,
    pub sums: Vec<((u32, u32), VerificationReport)>,
}

impl HierarchyReport {
    pub fn holds(&self) -> bool {
        self.sections().iter().all(VerificationReport::holds)
    }

    /// Every report, with subjects naming the power or pair.
    pub fn sections(&self) -> Vec<VerificationReport> {
        let mut out = Vec::new();
        for (k, r) in &self.operators {
            let mut r = r.clone();
            r.subject = format!("N^{k} is Nijenhuis");
            out.push(r);
        }
        for (k, r) in &self.structures {
            let mut r = r.clone();
            r.subject = format!("structure induced by N^{k}");
            out.push(r);
        }
        for ((k, l), r) in &self.sums {
            let mut r = r.clone();
            r.subject = format!("sum of structures induced by N^{k} and N^{l}");
            out.push(r);
        }
        out
    }
}

/// Checks that each `N^k` is Nijenhuis, that it induces a valid split
/// structure, and that the structures for any two powers add up to a valid
/// structure.
pub fn nijenhuis_hierarchy(a: &Presentation, n: &Matrix, powers: &[u32]) -> Result<HierarchyReport> {
    require("Nijenhuis condition", verify_nijenhuis(a, n)?)?;
    let mut powers = powers.to_vec();
    powers.sort_unstable();
    powers.dedup();
    let mut operators = Vec::new();
    let mut structures = Vec::new();
    let mut induced = Vec::new();
    for &k in &powers {
        let nk = n.pow(k)?;
        operators.push((k, verify_nijenhuis(a, &nk)?));
        let s = induce_from_nijenhuis(a, &nk, false)?;
        structures.push((k, verify_structure(&s)));
        induced.push((k, s));
    }
    let mut sums = Vec::new();
    for (idx, (k, sk)) in induced.iter().enumerate() {
        for (l, sl) in &induced[idx + 1..] {
            let (_, report) = compatible_sum(sk, sl)?;
            sums.push(((*k, *l), report));
        }
    }
    Ok(HierarchyReport {
        powers,
        operators,
        structures,
        sums,
    })
}
