//! The acceptance criteria as labelled checks, shared by the acceptance
//! harness and the integration tests.

use std::path::Path;

use algkit::cocycles::{
    canonical_twisted_factorization, induce_from_twisted_rb, induced_representation, verify_poisson_2cocycle,
    verify_representation, verify_twisted_rb, CocyclePair, Representation,
};
use algkit::deformations::{
    graded_from_filtration, semiclassical_limit, split_by_operator, verify_deformation, verify_ns_lie_filtration,
    Filtration, GradedQuotient, TruncatedDeformation,
};
use algkit::graded::{graded_induce_from_nijenhuis, graded_subadjacent, verify_graded, verify_graded_nijenhuis, GradedKind, GradedPresentation};
use algkit::io::{parse_document, serialize_document, Bindings, Document};
use algkit::operators::{
    deformed_products, induce_from_nijenhuis, induce_from_reynolds, intertwining_report, nijenhuis_hierarchy,
    verify_nijenhuis, verify_operator, verify_reynolds, OperatorRole,
};
use algkit::structures::subadjacent;
use algkit::{IdentityResult, Kind, Matrix, Presentation, Product, Scalar, Slot, Space, VerificationReport, Vector};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::examples::*;
use crate::fixtures::{bump, bump_matrix, every_kind, positions};
use crate::oracle::{self, Alg};
use crate::pool::{self, Instance};
use crate::search::{filtration_search, flag3, ns_pre_lie_deformation_search};

type Res = Result<(), String>;

#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub result: Res,
}

/// A failure the worked examples are known to show. `expected` is written
/// from hand computation, `observed` comes from the engine.
#[derive(Clone, Debug)]
pub struct KnownFailure {
    pub label: String,
    pub expected: String,
    pub observed: String,
}

impl KnownFailure {
    pub fn reproduced(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub known: Vec<KnownFailure>,
}

impl Outcome {
    fn run(&mut self, label: impl Into<String>, f: impl FnOnce() -> Res) {
        self.checks.push(Check {
            label: label.into(),
            result: f(),
        });
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.result.is_err()).collect()
    }

    /// Every check passes and nothing is known to fail.
    pub fn passed(&self) -> bool {
        self.failed().is_empty() && self.known.is_empty()
    }

    /// Every check passes and every known failure shows up exactly as
    /// recorded.
    pub fn as_recorded(&self) -> bool {
        self.failed().is_empty() && self.known.iter().all(KnownFailure::reproduced)
    }

    pub fn summary(&self) -> String {
        let mut s = format!("{} checks, {} failed", self.checks.len(), self.failed().len());
        if !self.known.is_empty() {
            let n = self.known.iter().filter(|k| k.reproduced()).count();
            s.push_str(&format!(", {} of {} known failures reproduced", n, self.known.len()));
        }
        s
    }

    /// Failing checks and known failures, one per line.
    pub fn details(&self) -> String {
        let mut out = String::new();
        for c in self.failed() {
            out.push_str(&format!("{}: {}\n", c.label, c.result.as_ref().unwrap_err()));
        }
        for k in &self.known {
            let tag = if k.reproduced() { "as recorded" } else { "DIFFERS" };
            out.push_str(&format!("{} [{tag}]: {}\n", k.label, k.observed));
            if !k.reproduced() {
                out.push_str(&format!("  expected: {}\n", k.expected));
            }
        }
        out
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Res {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn describe(r: &IdentityResult) -> String {
    match &r.counterexample {
        None => format!("{} holds", r.name),
        Some(c) => format!("{} at ({}): {} vs {}", r.name, c.labels.join(", "), c.render_lhs(), c.render_rhs()),
    }
}

/// All failing identities of a report, joined.
pub fn failures(r: &VerificationReport) -> String {
    r.results.iter().filter(|x| !x.holds()).map(describe).collect::<Vec<_>>().join("; ")
}

fn holds(r: &VerificationReport) -> Res {
    ensure(r.holds(), || format!("{}: {}", r.subject, failures(r)))
}

fn kind_is(a: &Presentation, k: Kind) -> Res {
    ensure(a.kind() == k, || format!("expected kind {k}, found {}", a.kind()))
}

fn same(a: &Presentation, b: &Presentation, what: &str) -> Res {
    ensure(same_products(a, b), || format!("{what}: product tables differ"))
}

fn sc(n: i64) -> Scalar {
    q(n)
}

fn load(gallery: &Path, file: &str, binds: &[(&str, &Scalar)]) -> Result<Document, String> {
    let path = gallery.join(file);
    let text = std::fs::read_to_string(&path).map_err(|err| format!("{}: {err}", path.display()))?;
    let b: Bindings = binds.iter().map(|(k, v)| (k.to_string(), (*v).clone())).collect();
    parse_document(&text, &b).map_err(|err| format!("{file}: {err}"))
}

fn load_algebra(gallery: &Path, file: &str, binds: &[(&str, &Scalar)]) -> Result<Presentation, String> {
    match load(gallery, file, binds)? {
        Document::Algebra(a) => Ok(a),
        d => Err(format!("{file}: expected an algebra, found {}", d.tag())),
    }
}

fn load_operator(gallery: &Path, file: &str, binds: &[(&str, &Scalar)]) -> Result<Matrix, String> {
    match load(gallery, file, binds)? {
        Document::Operator { matrix, .. } => Ok(matrix),
        d => Err(format!("{file}: expected an operator, found {}", d.tag())),
    }
}

/// 50 points of `{-2..2}^5` spread evenly over the lexicographic order.
pub fn sample_points() -> Vec<[i64; 5]> {
    let total = 5usize.pow(5);
    (0..50)
        .map(|k| {
            let mut c = k * total / 50;
            let mut p = [0i64; 5];
            for slot in (0..5).rev() {
                p[slot] = (c % 5) as i64 - 2;
                c /= 5;
            }
            p
        })
        .collect()
}

fn e4(c: Scalar) -> String {
    let mut v = Vector::zeros(4);
    v.set(3, c);
    Space::standard(4).render(&v)
}

/// Failures of the Reynolds example algebra, computed by hand.
pub fn reynolds_base_failures() -> String {
    format!(
        "jacobi at (e1, e2, e3): {} vs {}; leibniz at (e1, e1, e2): {} vs {}",
        e4(sc(-2)),
        e4(sc(0)),
        e4(sc(1)),
        e4(sc(0))
    )
}

/// Failures of the structure the Reynolds operator induces there, for `a ≠ 0`.
pub fn reynolds_induced_failures(a: &Scalar) -> String {
    let a2 = a * a;
    format!(
        "ns-lie-1 at (e1, e3, e2): {} vs {}; ns-poisson-1 at (e1, e1, e2): {} vs {}; ns-poisson-2 at (e1, e1, e2): {} vs {}",
        e4(sc(2) * &a2 / (sc(2) - a)),
        e4(sc(0)),
        e4(sc(0)),
        e4(a2.clone()),
        e4(sc(2) * &a2),
        e4(sc(0)),
    )
}

fn mul(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows()).map(|i| (0..m.cols()).fold(Scalar::zero(), |acc, j| acc + m.get(i, j) * &v[j])).collect()
}

/// `x∗y = N(x)·y`, `x⋎y = −N(x·y)`, `x◇y = {N(x),y}`, `x◆y = −N{x,y}`
/// written out entry by entry with the oracle's tensors.
fn nijenhuis_split_by_hand(a: &Presentation, n: &Matrix, kind: Kind) -> Presentation {
    let d = a.dim();
    let z = Scalar::zero();
    let dot = oracle::tensor(a.product(Slot::Dot));
    let br = oracle::tensor(a.product(Slot::Bracket));
    let basis = |i: usize| Vector::basis(d, i).coords().to_vec();
    let left = |t: &oracle::T<Scalar>| {
        Product::from_fn(d, d, d, |i, j| Vector::from_vec(oracle::bil(t, d, &z, &mul(n, &basis(i)), &basis(j))))
    };
    let outer = |t: &oracle::T<Scalar>| {
        Product::from_fn(d, d, d, |i, j| {
            Vector::from_vec(oracle::neg(&mul(n, &oracle::bil(t, d, &z, &basis(i), &basis(j)))))
        })
    };
    Presentation::new(
        kind,
        a.space().clone(),
        [(Slot::Star, left(&dot)), (Slot::Vee, outer(&dot)), (Slot::Diamond, left(&br)), (Slot::BlackDiamond, outer(&br))],
    )
    .unwrap()
}

/// Criterion 1: the shipped worked-example documents.
pub fn worked_examples(gallery: &Path) -> Outcome {
    let mut out = Outcome::default();

    for p in sample_points() {
        let [a, b, r, s, t] = p.map(sc);
        out.run(format!("four-dimensional Poisson at a={a} b={b} r={r} s={s} t={t}"), || {
            let alg = load_algebra(gallery, "fourdim-poisson.json", &[("a", &a), ("b", &b)])?;
            same(&alg, &poisson4(&a, &b), "fourdim-poisson.json")?;
            let n = load_operator(gallery, "N.json", &[("r", &r), ("s", &s), ("t", &t)])?;
            ensure(n == nijenhuis4(&r, &s, &t), || "N.json differs from the constructor".into())?;
            holds(&algkit::verify_structure(&alg))?;
            holds(&e(verify_nijenhuis(&alg, &n))?)?;
            let induced = e(induce_from_nijenhuis(&alg, &n, true))?;
            let shown = load_algebra(
                gallery,
                "fourdim-ns-poisson.json",
                &[("a", &a), ("b", &b), ("r", &r), ("s", &s), ("t", &t)],
            )?;
            same(&induced, &shown, "induced table vs fourdim-ns-poisson.json")?;
            holds(&algkit::verify_structure(&induced))
        });
    }

    match load_algebra(gallery, "reynolds-algebra.json", &[]) {
        Err(err) => out.run("reynolds-algebra.json", || Err(err)),
        Ok(base) => {
            out.run("Reynolds example algebra matches the constructor", || {
                same(&base, &reynolds_poisson4(), "reynolds-algebra.json")
            });
            out.known.push(KnownFailure {
                label: "Reynolds example algebra is not Poisson".into(),
                expected: reynolds_base_failures(),
                observed: failures(&algkit::verify_structure(&base)),
            });
            for a in [-3, -1, 0, 1, 3].map(sc) {
                let mut induced_report = None;
                out.run(format!("Reynolds operator at a={a}"), || {
                    let r = load_operator(gallery, "reynolds-operator.json", &[("a", &a)])?;
                    ensure(r == reynolds4(&a), || "reynolds-operator.json differs from the constructor".into())?;
                    holds(&e(verify_reynolds(&base, &r))?)?;
                    let induced = e(induce_from_reynolds(&base, &r, false))?;
                    let shown = load_algebra(gallery, "reynolds-ns-poisson.json", &[("a", &a)])?;
                    same(&induced, &shown, "induced table vs reynolds-ns-poisson.json")?;
                    induced_report = Some(algkit::verify_structure(&induced));
                    Ok(())
                });
                let Some(report) = induced_report else { continue };
                if a.is_zero() {
                    out.run("Reynolds-induced structure at a=0", || holds(&report));
                } else {
                    out.known.push(KnownFailure {
                        label: format!("Reynolds-induced structure at a={a} is not NS-Poisson"),
                        expected: reynolds_induced_failures(&a),
                        observed: failures(&report),
                    });
                }
            }
        }
    }

    for a in -2..=2 {
        for r in -2..=2 {
            for s in -2..=2 {
                let (a, r, s) = (sc(a), sc(r), sc(s));
                out.run(format!("F-manifold at a={a} r={r} s={s}"), || {
                    let f = load_algebra(gallery, "fmanifold2.json", &[("a", &a)])?;
                    same(&f, &fmanifold2(&a), "fmanifold2.json")?;
                    holds(&algkit::verify_structure(&f))?;
                    let n = load_operator(gallery, "fmanifold2-nijenhuis.json", &[("r", &r), ("s", &s)])?;
                    ensure(n == nijenhuis2(&r, &s), || "fmanifold2-nijenhuis.json differs from the constructor".into())?;
                    holds(&e(verify_nijenhuis(&f, &n))?)?;
                    let induced = e(induce_from_nijenhuis(&f, &n, true))?;
                    same(&induced, &nijenhuis_split_by_hand(&f, &n, Kind::NsFManifold), "induced table vs formula")?;
                    holds(&algkit::verify_structure(&induced))?;
                    if n == Matrix::identity(2) {
                        let shown = load_algebra(gallery, "fmanifold2-identity-ns.json", &[("a", &a)])?;
                        same(&induced, &shown, "induced table vs fmanifold2-identity-ns.json")?;
                    }
                    Ok(())
                });
            }
        }
    }

    for a in (-2..=2).map(sc) {
        out.run(format!("NS-F-manifold at a={a}"), || {
            let ns = load_algebra(gallery, "ns-fmanifold3.json", &[("a", &a)])?;
            same(&ns, &nsfmanifold3(&a), "ns-fmanifold3.json")?;
            holds(&algkit::verify_structure(&ns))
        });
    }
    out
}

fn ns_kind(base: Kind) -> Kind {
    if base == Kind::FManifold {
        Kind::NsFManifold
    } else {
        Kind::NsPoisson
    }
}

fn induced_chain(base: &Presentation, induced: &Presentation) -> Res {
    kind_is(induced, ns_kind(base.kind()))?;
    holds(&algkit::verify_structure(induced))?;
    let sub = e(subadjacent(induced))?;
    kind_is(&sub, base.kind())?;
    holds(&algkit::verify_structure(&sub))?;
    let (sub2, rep) = e(induced_representation(induced))?;
    holds(&e(verify_representation(&sub2, &rep))?)
}

fn nijenhuis_replay(a: &Presentation, n: &Matrix) -> Res {
    holds(&e(verify_nijenhuis(a, n))?)?;
    let induced = e(induce_from_nijenhuis(a, n, true))?;
    induced_chain(a, &induced)?;
    let deformed = e(deformed_products(a, n))?;
    holds(&e(intertwining_report(a, &deformed, n))?)
}

fn reynolds_replay(a: &Presentation, r: &Matrix) -> Res {
    holds(&e(verify_reynolds(a, r))?)?;
    let induced = e(induce_from_reynolds(a, r, true))?;
    induced_chain(a, &induced)?;
    if a.kind() == Kind::Poisson {
        let adj = e(Representation::adjoint(a))?;
        let neg = e(CocyclePair::negated_products(a))?;
        holds(&e(verify_poisson_2cocycle(a, &adj, &neg))?)?;
        holds(&e(verify_twisted_rb(a, &adj, &neg, r))?)?;
        let twisted = e(induce_from_twisted_rb(a, &adj, &neg, r, true))?;
        holds(&algkit::verify_structure(&twisted))?;
        same(&twisted, &induced, "twisted Rota-Baxter vs Reynolds induction")?;
    }
    Ok(())
}

/// Criterion 2: every construction on every pool instance.
pub fn construction_replay() -> Outcome {
    let mut out = Outcome::default();
    let pool = pool::pool();
    out.run("pool has at least 20 structures covering dimensions 2 to 6", || {
        let dims: std::collections::BTreeSet<usize> = pool.iter().map(|i| i.algebra.dim()).collect();
        ensure(pool.len() >= 20 && (2..=6).all(|d| dims.contains(&d)), || {
            format!("{} structures, dimensions {dims:?}", pool.len())
        })
    });
    for inst in &pool {
        let a = &inst.algebra;
        out.run(format!("{}: structure", inst.name), || holds(&algkit::verify_structure(a)));
        for (k, n) in inst.nijenhuis.iter().enumerate() {
            out.run(format!("{}: Nijenhuis operator {k}", inst.name), || nijenhuis_replay(a, n));
        }
        for (k, r) in inst.reynolds.iter().enumerate() {
            out.run(format!("{}: Reynolds operator {k}", inst.name), || reynolds_replay(a, r));
        }
    }
    out
}

/// Every NS-Poisson structure induced from the pool, labelled.
pub fn pool_ns_poisson() -> Vec<(String, Presentation)> {
    let mut out = Vec::new();
    for inst in pool::pool().iter().filter(|i| i.algebra.kind() == Kind::Poisson) {
        for (k, n) in inst.nijenhuis.iter().enumerate() {
            if let Ok(p) = induce_from_nijenhuis(&inst.algebra, n, true) {
                out.push((format!("{}: Nijenhuis operator {k}", inst.name), p));
            }
        }
        for (k, r) in inst.reynolds.iter().enumerate() {
            if let Ok(p) = induce_from_reynolds(&inst.algebra, r, true) {
                out.push((format!("{}: Reynolds operator {k}", inst.name), p));
            }
        }
    }
    out
}

fn factorization_round_trip(ns: &Presentation) -> Res {
    let f = e(canonical_twisted_factorization(ns, true))?;
    holds(&algkit::verify_structure(&f.algebra))?;
    holds(&e(verify_representation(&f.algebra, &f.representation))?)?;
    holds(&e(verify_poisson_2cocycle(&f.algebra, &f.representation, &f.cocycle))?)?;
    holds(&e(verify_twisted_rb(&f.algebra, &f.representation, &f.cocycle, &f.operator))?)?;
    let back = e(induce_from_twisted_rb(&f.algebra, &f.representation, &f.cocycle, &f.operator, true))?;
    same(&back, ns, "induced from the factorization vs input")?;
    let doc = Document::Factorization(Box::new(f.clone()));
    match e(parse_document(&serialize_document(&doc), &Bindings::new()))? {
        Document::Factorization(g) if *g == f => Ok(()),
        _ => Err("factorization document does not round-trip".into()),
    }
}

/// Criterion 3.
pub fn converse_factorization() -> Outcome {
    let mut out = Outcome::default();
    let all = pool_ns_poisson();
    out.run("pool yields NS-Poisson structures", || ensure(!all.is_empty(), || "none".into()));
    for (label, ns) in &all {
        out.run(label.clone(), || factorization_round_trip(ns));
    }
    out
}

/// Parameter points `(a, b, r, s, t)` for the hierarchy check.
pub const HIERARCHY_POINTS: [[i64; 5]; 5] = [[1, 0, 2, 1, 3], [1, 1, 1, 1, 1], [2, -1, 1, 2, 0], [-1, 2, -1, 0, 2], [0, 1, 3, -2, 1]];

/// Criterion 4.
pub fn hierarchy() -> Outcome {
    let mut out = Outcome::default();
    for p in HIERARCHY_POINTS {
        let [a, b, r, s, t] = p.map(sc);
        out.run(format!("powers 0..3 at a={a} b={b} r={r} s={s} t={t}"), || {
            let h = e(nijenhuis_hierarchy(&poisson4(&a, &b), &nijenhuis4(&r, &s, &t), &[0, 1, 2, 3]))?;
            ensure(h.operators.len() == 4 && h.structures.len() == 4 && h.sums.len() >= 6, || {
                "hierarchy is missing powers or pairs".into()
            })?;
            h.sections().iter().try_for_each(holds)
        });
    }
    out
}

fn deformation_agrees(d: &TruncatedDeformation) -> Res {
    oracle::compare(&e(verify_deformation(d))?, &oracle::verify_deformation(d))
}

/// Criterion 5.
pub fn semiclassical_limits() -> Outcome {
    let mut out = Outcome::default();
    let qp = quantum_plane(2);
    out.run("quantum plane limit is Poisson with {x,y} = -xy", || {
        holds(&e(verify_deformation(&qp))?)?;
        deformation_agrees(&qp)?;
        let lim = e(semiclassical_limit(&qp))?;
        kind_is(&lim, Kind::Poisson)?;
        holds(&algkit::verify_structure(&lim))?;
        let expected = prod(6, &[(2, 3, 5, sc(-1)), (3, 2, 5, sc(1))]);
        ensure(lim.product(Slot::Bracket) == &expected, || "bracket is not {x,y} = -xy".into())?;
        ensure(lim.product(Slot::Dot) == qp.base().product(Slot::Dot), || "limit product differs from the base".into())
    });
    out.run("NS quantum plane with N = Id", || {
        let ns = e(split_by_operator(&qp, &Matrix::identity(6)))?;
        ensure(ns.kind() == Kind::NsAssociative, || format!("deformation kind {}", ns.kind()))?;
        holds(&e(verify_deformation(&ns))?)?;
        deformation_agrees(&ns)?;
        let lim = e(semiclassical_limit(&ns))?;
        kind_is(&lim, Kind::NsPoisson)?;
        holds(&algkit::verify_structure(&lim))?;
        let sub = e(subadjacent(&lim))?;
        ensure(sub.product(Slot::Dot) == qp.base().product(Slot::Dot), || "subadjacent product differs from the base".into())
    });
    out.run("NS-pre-Lie deformation from the search", || {
        let (d, code) = ns_pre_lie_deformation_search().ok_or("search found nothing")?;
        ensure(code == 1, || format!("search hit changed to candidate {code}"))?;
        holds(&e(verify_deformation(&d))?)?;
        deformation_agrees(&d)?;
        let lim = e(semiclassical_limit(&d))?;
        kind_is(&lim, Kind::NsFManifold)?;
        holds(&algkit::verify_structure(&lim))?;
        oracle::agree_with_engine(&lim)
    });
    out
}

fn level_coords(f: &Filtration) -> Vec<Vec<Vec<Scalar>>> {
    f.levels().iter().map(|l| l.basis().iter().map(|v| v.coords().to_vec()).collect()).collect()
}

fn filtration_agrees(a: &Presentation, f: &Filtration) -> Res {
    let engine = e(verify_ns_lie_filtration(a, f))?;
    let lit = oracle::verify_filtration(a, &level_coords(f));
    let ev: Vec<(&str, bool)> = engine.results.iter().map(|r| (r.name.as_str(), r.holds())).collect();
    let ov: Vec<(&str, bool)> = lit.iter().map(|(n, ok)| (n.as_str(), *ok)).collect();
    ensure(ev == ov, || format!("filtration verdicts differ: engine {ev:?}, oracle {ov:?}"))
}

/// Recomputes each product of `Gr(A)` from the raw NS products, checks it
/// is the coset of the engine's value, and repeats with each representative
/// shifted by every spanning vector of the level below it.
pub fn perturbation_check(a: &Presentation, f: &Filtration, gq: &GradedQuotient) -> Res {
    let alg: Alg<Scalar> = Alg::from_presentation(a);
    let levels = level_coords(f);
    let top = levels.len() - 1;
    let level = |k: usize| &levels[k.min(top)];
    let reps: Vec<Vec<Scalar>> = gq.representatives.iter().map(|v| v.coords().to_vec()).collect();
    let comp = &gq.component;
    let g = &gq.presentation;
    let dim = reps.len();
    let raw = |slot: Slot, x: &Vec<Scalar>, y: &Vec<Scalar>| match slot {
        Slot::Star => alg.succ(x, y),
        Slot::Vee => alg.vee(x, y),
        Slot::Diamond => oracle::sub(&alg.succ(x, y), &alg.prec(y, x)),
        _ => oracle::sub(&alg.vee(x, y), &alg.vee(y, x)),
    };
    for (slot, extra) in [(Slot::Star, 1), (Slot::Vee, 1), (Slot::Diamond, 0), (Slot::BlackDiamond, 0)] {
        for p in 0..dim {
            for r in 0..dim {
                let k = comp[p] + comp[r] + extra;
                let value = g.product(slot).eval_basis(p, r);
                let mut lifted = vec![Scalar::zero(); a.dim()];
                for (idx, c) in value.iter_nonzero() {
                    ensure(comp[idx] == k, || format!("{slot}: value leaves component {k}"))?;
                    lifted = oracle::add(&lifted, &oracle::scale(c, &reps[idx]));
                }
                let zero = vec![Scalar::zero(); a.dim()];
                let shifts = |n: usize| std::iter::once(zero.clone()).chain(level(n).iter().cloned()).collect::<Vec<_>>();
                for u in shifts(comp[p]) {
                    for w in shifts(comp[r]) {
                        let v = raw(slot, &oracle::add(&reps[p], &u), &oracle::add(&reps[r], &w));
                        ensure(oracle::in_span(level(k + 1), &v), || format!("{slot}: value outside level {}", k + 1))?;
                        ensure(oracle::in_span(level(k), &oracle::sub(&v, &lifted)), || {
                            format!("{slot} on basis {p}, {r} changes with the representative")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn graded_quotient_checks(a: &Presentation, f: &Filtration) -> Result<GradedQuotient, String> {
    holds(&algkit::verify_structure(a))?;
    oracle::agree_with_engine(a)?;
    holds(&e(verify_ns_lie_filtration(a, f))?)?;
    filtration_agrees(a, f)?;
    let gq = e(graded_from_filtration(a, f))?;
    kind_is(&gq.presentation, Kind::NsPoisson)?;
    holds(&algkit::verify_structure(&gq.presentation))?;
    perturbation_check(a, f, &gq)?;
    Ok(gq)
}

/// Criterion 6.
pub fn filtration() -> Outcome {
    let mut out = Outcome::default();
    out.run("two-dimensional filtration example", || {
        graded_quotient_checks(&ns_small(), &ns_small_filtration()).map(|_| ())
    });
    out.run("search instance with a nonzero graded product", || {
        let (a, mask) = filtration_search().ok_or("search found nothing")?;
        ensure(mask == 17, || format!("search hit changed to mask {mask}"))?;
        let gq = graded_quotient_checks(&a, &flag3())?;
        let nonzero = gq.presentation.products().any(|(_, p)| !p.is_zero());
        ensure(nonzero, || "graded products all vanish".into())
    });
    out.run("broken filtration is rejected", || {
        let bad = ns_small_bad();
        let f = ns_small_filtration();
        ensure(!e(verify_ns_lie_filtration(&bad, &f))?.holds(), || "filtration check passes".into())?;
        filtration_agrees(&bad, &f)?;
        ensure(graded_from_filtration(&bad, &f).is_err(), || "graded quotient was built".into())
    });
    out
}

fn graded_agrees(g: &GradedPresentation) -> Res {
    oracle::compare(&verify_graded(g), &oracle::verify_graded(g))
}

/// Regrades `a` in degree 0 and compares verdicts and tuples law by law.
pub fn degree_zero_matches(a: &Presentation) -> Res {
    let g = e(GradedPresentation::from_ungraded(a, vec![0; a.dim()], 0))?;
    let (gr, ur) = (verify_graded(&g), algkit::verify_structure(a));
    ensure(gr.results.len() == ur.results.len(), || "law lists differ in length".into())?;
    for (x, y) in gr.results.iter().zip(&ur.results) {
        let tx = x.counterexample.as_ref().map(|c| &c.tuple);
        let ty = y.counterexample.as_ref().map(|c| &c.tuple);
        ensure(tx == ty, || format!("{} vs {}: {tx:?} vs {ty:?}", x.name, y.name))?;
    }
    graded_agrees(&g)
}

/// Ungraded structures for the degree-0 comparison: pool Poisson algebras,
/// their induced NS-Poisson structures, one perturbation of each, and the
/// NS-commutative and NS-Lie fixtures.
pub fn degree_zero_instances() -> Vec<(String, Presentation)> {
    let mut base: Vec<(String, Presentation)> = pool::pool()
        .into_iter()
        .filter(|i| i.algebra.kind() == Kind::Poisson)
        .map(|i| (i.name, i.algebra))
        .collect();
    base.extend(pool_ns_poisson());
    for (k, a) in every_kind() {
        if matches!(k, Kind::NsCommutative | Kind::NsLie) {
            base.push((k.tag().to_string(), a));
        }
    }
    let mut out = Vec::new();
    for (name, a) in base {
        let bumped = bump(&a, positions(&a)[1]);
        out.push((format!("{name} perturbed"), bumped));
        out.push((name, a));
    }
    out
}

/// Criterion 7.
pub fn graded() -> Outcome {
    let mut out = Outcome::default();
    let g = exterior_gerstenhaber();
    out.run("exterior algebra of the two-dimensional Lie algebra", || {
        ensure(g.kind() == GradedKind::Gerstenhaber, || "wrong kind".into())?;
        holds(&verify_graded(&g))?;
        graded_agrees(&g)
    });
    out.run("N = 2 Id induces NS-Gerstenhaber with Gerstenhaber subadjacent", || {
        let n = Matrix::scalar(g.dim(), sc(2));
        holds(&e(verify_graded_nijenhuis(&g, &n))?)?;
        let ind = e(graded_induce_from_nijenhuis(&g, &n, true))?;
        ensure(ind.kind() == GradedKind::NsGerstenhaber, || "wrong induced kind".into())?;
        holds(&verify_graded(&ind))?;
        graded_agrees(&ind)?;
        let sub = e(graded_subadjacent(&ind))?;
        ensure(sub.kind() == GradedKind::Gerstenhaber, || "wrong subadjacent kind".into())?;
        holds(&verify_graded(&sub))?;
        graded_agrees(&sub)
    });
    for (name, a) in degree_zero_instances() {
        out.run(format!("degree 0: {name}"), || degree_zero_matches(&a));
    }
    out
}

/// Checks a failing engine report against an exhaustive literal rescan and
/// that each counterexample's sides differ.
fn failing_and_minimal(r: &VerificationReport, lit: &[(String, Option<Vec<usize>>)]) -> Res {
    ensure(!r.holds(), || "perturbation did not flip the verdict".into())?;
    oracle::compare(r, lit)?;
    for x in &r.results {
        if let Some(c) = &x.counterexample {
            ensure(c.lhs != c.rhs, || format!("{}: counterexample sides are equal", x.name))?;
        }
    }
    Ok(())
}

fn structure_counterexamples(a: &Presentation) -> Res {
    let r = algkit::verify_structure(a);
    failing_and_minimal(&r, &oracle::verify_presentation(a))?;
    for x in &r.results {
        if let Some(c) = &x.counterexample {
            let (l, rr) = oracle::evaluate(a, &x.name, &c.tuple).ok_or_else(|| format!("oracle has no {}", x.name))?;
            ensure(l == c.lhs.coords() && rr == c.rhs.coords(), || format!("{}: oracle evaluates differently", x.name))?;
        }
    }
    Ok(())
}

/// For each slot, the first +1 perturbation that breaks the structure.
pub fn first_flips(a: &Presentation) -> Vec<Presentation> {
    let pos = positions(a);
    a.products()
        .filter_map(|(s, _)| {
            pos.iter()
                .filter(|p| p.0 == s)
                .map(|&p| bump(a, p))
                .find(|b| !algkit::verify_structure(b).holds())
        })
        .collect()
}

fn operator_counterexamples(a: &Presentation, m: &Matrix, role: &str) -> Res {
    let r = e(verify_operator(a, m, e(OperatorRole::from_tag(role))?))?;
    failing_and_minimal(&r, &oracle::verify_operator(a, m, role))?;
    let rows = oracle::rows(m);
    for ((_, p), x) in a.products().zip(&r.results) {
        if let Some(c) = &x.counterexample {
            let (l, rr) = oracle::operator_sides(p, &rows, role, c.tuple[0], c.tuple[1]);
            ensure(l == c.lhs.coords() && rr == c.rhs.coords(), || format!("{}: oracle evaluates differently", x.name))?;
        }
    }
    Ok(())
}

fn first_matrix_flip(m: &Matrix, fails: impl Fn(&Matrix) -> bool) -> Option<Matrix> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).map(|(i, j)| bump_matrix(m, i, j)).find(|b| fails(b))
}

fn first_product_flip(p: &Product, fails: impl Fn(&Product) -> bool) -> Option<Product> {
    for i in 0..p.left_dim() {
        for j in 0..p.right_dim() {
            for k in 0..p.out_dim() {
                let mut b = p.clone();
                b.set(i, j, k, p.get(i, j, k).clone() + Scalar::one());
                if fails(&b) {
                    return Some(b);
                }
            }
        }
    }
    None
}

/// Criterion 8.
pub fn negative_controls() -> Outcome {
    let mut out = Outcome::default();
    for (kind, a) in every_kind() {
        out.run(format!("{kind}: perturbations"), || {
            holds(&algkit::verify_structure(&a))?;
            let flips = first_flips(&a);
            ensure(!flips.is_empty(), || "no perturbation flips the verdict".into())?;
            flips.iter().try_for_each(structure_counterexamples)
        });
    }

    let operators: Vec<(&str, Presentation, Matrix)> = vec![
        ("nijenhuis", poisson4(&sc(1), &sc(1)), nijenhuis4(&sc(2), &sc(1), &sc(3))),
        ("nijenhuis", fmanifold2(&sc(3)), nijenhuis2(&sc(2), &sc(5))),
        ("reynolds", reynolds_poisson4(), reynolds4(&sc(1))),
        ("reynolds", poisson4(&sc(1), &sc(1)), Matrix::identity(4)),
        ("derivation", truncated_polynomials(4), euler(4)),
    ];
    for (role, a, m) in &operators {
        out.run(format!("{role} operator on {}-dimensional {}", a.dim(), a.kind()), || {
            let r = e(OperatorRole::from_tag(role))?;
            holds(&e(verify_operator(a, m, r))?)?;
            let bad = first_matrix_flip(m, |b| !verify_operator(a, b, r).map(|x| x.holds()).unwrap_or(true))
                .ok_or("no entry flips the verdict")?;
            operator_counterexamples(a, &bad, role)
        });
    }

    let a = poisson4(&sc(1), &sc(1));
    out.run("adjoint representation", || {
        let rep = e(Representation::adjoint(&a))?;
        let fails = |mu: &Product| {
            let r = Representation::new(a.dim(), rep.module().clone(), mu.clone(), rep.rho().clone()).unwrap();
            !verify_representation(&a, &r).unwrap().holds()
        };
        let mu = first_product_flip(rep.mu(), fails).ok_or("no entry flips the verdict")?;
        let bad = e(Representation::new(a.dim(), rep.module().clone(), mu.clone(), rep.rho().clone()))?;
        failing_and_minimal(&e(verify_representation(&a, &bad))?, &oracle::verify_representation(&a, &mu, rep.rho()))
    });
    out.run("negated products as a cocycle", || {
        let rep = e(Representation::adjoint(&a))?;
        let c = e(CocyclePair::negated_products(&a))?;
        holds(&e(verify_poisson_2cocycle(&a, &rep, &c))?)?;
        let fails = |h: &Product| {
            let c2 = CocyclePair::new(a.dim(), a.dim(), h.clone(), c.big_h.clone()).unwrap();
            !verify_poisson_2cocycle(&a, &rep, &c2).unwrap().holds()
        };
        let h = first_product_flip(&c.h, fails).ok_or("no entry flips the verdict")?;
        let bad = e(CocyclePair::new(a.dim(), a.dim(), h.clone(), c.big_h.clone()))?;
        failing_and_minimal(
            &e(verify_poisson_2cocycle(&a, &rep, &bad))?,
            &oracle::verify_cocycle(&a, rep.mu(), rep.rho(), &h, &c.big_h),
        )
    });
    out.run("twisted Rota-Baxter operator", || {
        let rep = e(Representation::adjoint(&a))?;
        let c = e(CocyclePair::negated_products(&a))?;
        let id = Matrix::identity(a.dim());
        holds(&e(verify_twisted_rb(&a, &rep, &c, &id))?)?;
        let bad = first_matrix_flip(&id, |m| !verify_twisted_rb(&a, &rep, &c, m).unwrap().holds())
            .ok_or("no entry flips the verdict")?;
        failing_and_minimal(
            &e(verify_twisted_rb(&a, &rep, &c, &bad))?,
            &oracle::verify_twisted(&a, rep.mu(), rep.rho(), &c.h, &c.big_h, &bad),
        )
    });

    let g = exterior_gerstenhaber();
    let ns_g = graded_induce_from_nijenhuis(&g, &Matrix::scalar(g.dim(), sc(2)), true).unwrap();
    for g in [g, ns_g] {
        out.run(format!("graded {}", g.kind()), || {
            let bad = graded_flip(&g).ok_or("no homogeneous entry flips the verdict")?;
            failing_and_minimal(&verify_graded(&bad), &oracle::verify_graded(&bad))
        });
    }

    out.run("quantum plane deformation", || {
        let d = quantum_plane(2);
        let bad = deformation_flip(&d).ok_or("no entry flips the verdict")?;
        failing_and_minimal(&e(verify_deformation(&bad))?, &oracle::verify_deformation(&bad))
    });
    out
}

/// First +1 perturbation of a graded structure that stays homogeneous and
/// breaks it.
fn graded_flip(g: &GradedPresentation) -> Option<GradedPresentation> {
    let slots: Vec<Slot> = g.products().map(|(s, _)| s).collect();
    for s in slots {
        let p = g.product(s);
        let rebuilt = |q: &Product| {
            let products: Vec<(Slot, Product)> =
                g.products().map(|(t, x)| (t, if t == s { q.clone() } else { x.clone() })).collect();
            GradedPresentation::new(g.kind(), g.space().clone(), g.degrees().to_vec(), g.bracket_shift(), products).ok()
        };
        let hit = first_product_flip(p, |q| rebuilt(q).is_some_and(|h| !verify_graded(&h).holds()));
        if let Some(q) = hit {
            return rebuilt(&q);
        }
    }
    None
}

/// First +1 perturbation of a `t^1` coefficient that breaks the deformation.
fn deformation_flip(d: &TruncatedDeformation) -> Option<TruncatedDeformation> {
    for (s, cs) in d.coefficients() {
        let rebuilt = |q: &Product| {
            let mut coeffs = d.coefficients().clone();
            coeffs.get_mut(s).unwrap()[1] = q.clone();
            TruncatedDeformation::new(d.kind(), d.space().clone(), d.order(), coeffs).ok()
        };
        let hit = first_product_flip(&cs[1], |q| rebuilt(q).is_some_and(|x| !verify_deformation(&x).unwrap().holds()));
        if let Some(q) = hit {
            return rebuilt(&q);
        }
    }
    None
}

fn operator_agrees(a: &Presentation, m: &Matrix, role: &str) -> Res {
    oracle::compare(&e(verify_operator(a, m, e(OperatorRole::from_tag(role))?))?, &oracle::verify_operator(a, m, role))
}

fn representation_agrees(a: &Presentation, rep: &Representation) -> Res {
    oracle::compare(&e(verify_representation(a, rep))?, &oracle::verify_representation(a, rep.mu(), rep.rho()))
}

fn instance_agrees(inst: &Instance) -> Res {
    let a = &inst.algebra;
    oracle::agree_with_engine(a)?;
    if let Some(f) = positions(a).into_iter().map(|p| bump(a, p)).find(|b| !algkit::verify_structure(b).holds()) {
        oracle::agree_with_engine(&f)?;
    }
    let operators = inst.nijenhuis.iter().chain(&inst.reynolds);
    for m in operators.clone() {
        operator_agrees(a, m, "nijenhuis")?;
        operator_agrees(a, m, "reynolds")?;
    }
    let mut induced = Vec::new();
    for n in &inst.nijenhuis {
        induced.push(e(induce_from_nijenhuis(a, n, true))?);
    }
    for r in &inst.reynolds {
        induced.push(e(induce_from_reynolds(a, r, true))?);
    }
    for ns in &induced {
        oracle::agree_with_engine(ns)?;
        let (sub, rep) = e(induced_representation(ns))?;
        oracle::agree_with_engine(&sub)?;
        representation_agrees(&sub, &rep)?;
    }
    let adj = e(Representation::adjoint(a))?;
    representation_agrees(a, &adj)?;
    if a.kind() == Kind::Poisson {
        let c = e(CocyclePair::negated_products(a))?;
        oracle::compare(
            &e(verify_poisson_2cocycle(a, &adj, &c))?,
            &oracle::verify_cocycle(a, adj.mu(), adj.rho(), &c.h, &c.big_h),
        )?;
        for m in operators {
            oracle::compare(
                &e(verify_twisted_rb(a, &adj, &c, m))?,
                &oracle::verify_twisted(a, adj.mu(), adj.rho(), &c.h, &c.big_h, m),
            )?;
        }
        graded_agrees(&e(GradedPresentation::from_ungraded(a, vec![0; a.dim()], 0))?)?;
    }
    Ok(())
}

/// Criterion 9.
pub fn oracle_equivalence() -> Outcome {
    let mut out = Outcome::default();
    let results: Vec<(String, Res)> =
        pool::pool().par_iter().map(|inst| (inst.name.clone(), instance_agrees(inst))).collect();
    for (name, r) in results {
        out.run(format!("{name}: every verifier"), || r);
    }
    for (kind, a) in every_kind() {
        out.run(format!("{kind} fixture"), || oracle::agree_with_engine(&a));
    }
    out.run("deformations", || {
        let qp = quantum_plane(2);
        deformation_agrees(&qp)?;
        deformation_agrees(&e(split_by_operator(&qp, &Matrix::identity(6)))?)?;
        let (d, _) = ns_pre_lie_deformation_search().ok_or("search found nothing")?;
        deformation_agrees(&d)
    });
    out.run("filtrations", || {
        filtration_agrees(&ns_small(), &ns_small_filtration())?;
        filtration_agrees(&ns_small_bad(), &ns_small_filtration())?;
        let (a, _) = filtration_search().ok_or("search found nothing")?;
        filtration_agrees(&a, &flag3())
    });
    out.run("graded examples", || {
        let g = exterior_gerstenhaber();
        graded_agrees(&g)?;
        let ind = e(graded_induce_from_nijenhuis(&g, &Matrix::scalar(g.dim(), sc(2)), true))?;
        graded_agrees(&ind)?;
        graded_agrees(&e(graded_subadjacent(&ind))?)
    });
    out
}
