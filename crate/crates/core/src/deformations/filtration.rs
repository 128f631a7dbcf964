//! NS-Lie filtrations of NS-algebras and the NS-Poisson structure on the
//! associated graded space.
//!
//! Levels `A_0 ⊆ A_1 ⊆ ... ⊆ A_L = A` are stored in reduced echelon form;
//! indices past `L` mean `A`. The graded space is `⊕_{k<L} A_{k+1}/A_k` and
//! component `k` is spanned by the echelon rows of `A_{k+1}` whose pivots are
//! not pivots of `A_k`.

use crate::error::{Error, Result};
use crate::linalg::{Space, Subspace, Vector};
use crate::product::Product;
use crate::report::{Counterexample, IdentityResult, VerificationReport};
use crate::structures::{verify_structure, Kind, Presentation, Slot};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    space: Space,
    levels: Vec<Subspace>,
}

impl Filtration {
    pub fn new(space: Space, spanning: &[Vec<Vector>]) -> Result<Self> {
        let n = space.dim();
        let levels = spanning
            .iter()
            .map(|vs| Subspace::span(n, vs))
            .collect::<Result<Vec<_>>>()?;
        let Some(top) = levels.last() else {
            return Err(Error::Filtration("no levels".into()));
        };
        if top.dim() != n {
            return Err(Error::Filtration("the top level does not span the space".into()));
        }
        for (k, pair) in levels.windows(2).enumerate() {
            if !pair[1].contains_subspace(&pair[0]) {
                return Err(Error::Filtration(format!("level {k} is not contained in level {}", k + 1)));
            }
        }
        Ok(Filtration { space, levels })
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Index of the top level.
    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &Subspace {
        &self.levels[k.min(self.top())]
    }

    pub fn levels(&self) -> &[Subspace] {
        &self.levels
    }
}

struct Condition {
    name: &'static str,
    /// Offset added to both level indices of the arguments.
    arg_shift: usize,
    /// Offset added to `n + m` for the target level.
    target_shift: usize,
    value: fn(&Presentation, &Vector, &Vector) -> Vector,
}

const CONDITIONS: [Condition; 5] = [
    Condition {
        name: "filtered-succ",
        arg_shift: 0,
        target_shift: 0,
        value: |a, x, y| a.product(Slot::Succ).eval(x, y),
    },
    Condition {
        name: "filtered-prec",
        arg_shift: 0,
        target_shift: 0,
        value: |a, x, y| a.product(Slot::Prec).eval(x, y),
    },
    Condition {
        name: "filtered-vee",
        arg_shift: 0,
        target_shift: 0,
        value: |a, x, y| a.product(Slot::Vee).eval(x, y),
    },
    Condition {
        name: "ns-lie-skew",
        arg_shift: 1,
        target_shift: 1,
        value: |a, x, y| a.product(Slot::Succ).eval(x, y) - a.product(Slot::Prec).eval(y, x),
    },
    Condition {
        name: "ns-lie-vee",
        arg_shift: 1,
        target_shift: 1,
        value: |a, x, y| a.product(Slot::Vee).eval(x, y),
    },
];

fn check_condition(a: &Presentation, f: &Filtration, c: &Condition) -> IdentityResult {
    let names = a.space().names();
    let mut tuples = 0;
    for n in 0..=f.top() {
        for m in 0..=f.top() {
            let (xs, ys) = (f.level(n + c.arg_shift), f.level(m + c.arg_shift));
            let target = f.level(n + m + c.target_shift);
            for (i, x) in xs.basis().iter().enumerate() {
                for (j, y) in ys.basis().iter().enumerate() {
                    tuples += 1;
                    let v = (c.value)(a, x, y);
                    let residual = target.residual(&v);
                    if !residual.is_zero() {
                        let inside = &v - &residual;
                        return IdentityResult {
                            name: c.name.to_string(),
                            tuples,
                            counterexample: Some(Counterexample {
                                tuple: vec![n, m, i, j],
                                labels: vec![
                                    format!("n={n}"),
                                    format!("m={m}"),
                                    a.space().render(x),
                                    a.space().render(y),
                                ],
                                lhs: v,
                                rhs: inside,
                                coords: names.to_vec(),
                            }),
                        };
                    }
                }
            }
        }
    }
    IdentityResult {
        name: c.name.to_string(),
        tuples,
        counterexample: None,
    }
}

/// Membership checks for the filtration and NS-Lie conditions over all
/// level pairs and echelon basis vectors. A failure's tuple is
/// `(n, m, i, j)` with `i, j` indexing echelon basis vectors of the levels
/// involved; its right-hand side is the part of the value lying in the
/// target level.
pub fn verify_ns_lie_filtration(a: &Presentation, f: &Filtration) -> Result<VerificationReport> {
    if a.kind() != Kind::NsAssociative {
        return Err(Error::unsupported("NS-Lie filtration checks", a.kind()));
    }
    if f.space() != a.space() {
        return Err(Error::dim("filtration lives on another space"));
    }
    let mut report = VerificationReport::new("NS-Lie filtration");
    for c in &CONDITIONS {
        report.push(check_condition(a, f, c));
    }
    Ok(report)
}

/// `Gr(A)` with its component structure.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    pub presentation: Presentation,
    /// Component index of each basis element of `Gr(A)`.
    pub component: Vec<usize>,
    /// Chosen representative in `A` of each basis element.
    pub representatives: Vec<Vector>,
}

struct Quotient<'a> {
    f: &'a Filtration,
    /// `(component, pivot, representative)` per Gr basis element.
    basis: Vec<(usize, usize, Vector)>,
}

impl Quotient<'_> {
    /// Coordinates of `v + A_k` in component `k`, as a vector over all of
    /// Gr(A). `v` must lie in `A_{k+1}`.
    fn coset(&self, v: &Vector, k: usize) -> Result<Vector> {
        let mut out = Vector::zeros(self.basis.len());
        let upper = self.f.level(k + 1);
        if !upper.contains(v) {
            return Err(Error::WellDefinedness(format!(
                "value {} is not in level {}",
                self.f.space().render(v),
                k + 1
            )));
        }
        if k >= self.f.top() {
            return Ok(out);
        }
        let r = self.f.level(k).residual(v);
        for (idx, (comp, pivot, _)) in self.basis.iter().enumerate() {
            if *comp == k {
                out.set(idx, r.get(*pivot).clone());
            }
        }
        Ok(out)
    }
}

/// Builds the NS-Poisson structure on `Gr(A)`:
/// `x̄∗ȳ = x≻y + A_{n+m+1}`, `x̄⋎ȳ = x⋎y + A_{n+m+1}`,
/// `x̄◇ȳ = x≻y − y≺x + A_{n+m}`, `x̄◆ȳ = x⋎y − y⋎x + A_{n+m}`
/// for `x ∈ A_{n+1}`, `y ∈ A_{m+1}`. Every product is recomputed with each
/// representative shifted by each basis vector of the lower level and must
/// not change.
pub fn graded_from_filtration(a: &Presentation, f: &Filtration) -> Result<GradedQuotient> {
    let report = verify_ns_lie_filtration(a, f)?;
    if !report.holds() {
        return Err(Error::Precondition {
            what: "NS-Lie filtration".into(),
            report: Box::new(report),
        });
    }
    let structure = verify_structure(a);
    if !structure.holds() {
        return Err(Error::Precondition {
            what: "input structure".into(),
            report: Box::new(structure),
        });
    }
    let mut basis = Vec::new();
    for k in 0..f.top() {
        let lower = f.level(k).pivots();
        let upper = f.level(k + 1);
        for (row, &p) in upper.basis().iter().zip(upper.pivots()) {
            if !lower.contains(&p) {
                basis.push((k, p, row.clone()));
            }
        }
    }
    let q = Quotient { f, basis };
    let dim = q.basis.len();
    let succ = a.product(Slot::Succ);
    let prec = a.product(Slot::Prec);
    let vee = a.product(Slot::Vee);
    type Op<'p> = Box<dyn Fn(&Vector, &Vector) -> Vector + 'p>;
    let ops: [(Slot, usize, Op); 4] = [
        (Slot::Star, 1, Box::new(|x, y| succ.eval(x, y))),
        (Slot::Vee, 1, Box::new(|x, y| vee.eval(x, y))),
        (Slot::Diamond, 0, Box::new(|x, y| succ.eval(x, y) - prec.eval(y, x))),
        (Slot::BlackDiamond, 0, Box::new(|x, y| vee.eval(x, y) - vee.eval(y, x))),
    ];
    let mut products = Vec::new();
    for (slot, extra, op) in &ops {
        let mut p = Product::square(dim);
        for (i, (n, _, x)) in q.basis.iter().enumerate() {
            for (j, (m, _, y)) in q.basis.iter().enumerate() {
                let k = n + m + extra;
                let value = q.coset(&op(x, y), k)?;
                for z in f.level(*n).basis() {
                    if q.coset(&op(&(x + z), y), k)? != value {
                        return Err(Error::WellDefinedness(format!("{slot} depends on the representative of argument {i}")));
                    }
                }
                for w in f.level(*m).basis() {
                    if q.coset(&op(x, &(y + w)), k)? != value {
                        return Err(Error::WellDefinedness(format!("{slot} depends on the representative of argument {j}")));
                    }
                }
                for (l, c) in value.iter_nonzero() {
                    p.set(i, j, l, c.clone());
                }
            }
        }
        products.push((*slot, p));
    }
    let names: Vec<String> = q
        .basis
        .iter()
        .map(|(k, pivot, _)| format!("gr{k}.{}", a.space().name(*pivot)))
        .collect();
    let space = Space::new(names)?;
    let mut presentation = Presentation::new(Kind::NsPoisson, space, products)?;
    for k in 0..f.top() {
        let members: Vec<String> = q
            .basis
            .iter()
            .filter(|(c, _, _)| *c == k)
            .map(|(_, _, v)| a.space().render(v))
            .collect();
        presentation
            .metadata
            .push(format!("component {k} = A{}/A{k}, representatives [{}]", k + 1, members.join(", ")));
    }
    Ok(GradedQuotient {
        component: q.basis.iter().map(|(k, _, _)| *k).collect(),
        representatives: q.basis.into_iter().map(|(_, _, v)| v).collect(),
        presentation,
    })
}
