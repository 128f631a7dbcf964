//! Representations of Poisson and F-manifold algebras, Poisson 2-cocycles
//! and twisted Rota–Baxter operators.
//!
//! A representation on `V` is a pair of actions `μ, ρ: A × V → V`, stored as
//! products with a left factor of dimension `dim A`. A cocycle pair
//! `(h, H)` consists of maps `A × A → V`.
//!
//! The Lie cocycle condition is checked as
//! `ρ_x H(y,z) + ρ_y H(z,x) + ρ_z H(x,y) + H(x,{y,z}) + H(y,{z,x}) + H(z,{x,y}) = 0`.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Space, Vector};
use crate::product::Product;
use crate::report::{check_identity, VerificationReport};
use crate::scalar::int;
use crate::structures::{hertling_manin, subadjacent, verify_structure, Kind, Presentation, Slot};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    module: Space,
    mu: Product,
    rho: Product,
}

impl Representation {
    pub fn new(algebra_dim: usize, module: Space, mu: Product, rho: Product) -> Result<Self> {
        let m = module.dim();
        for (name, p) in [("mu", &mu), ("rho", &rho)] {
            if (p.left_dim(), p.right_dim(), p.out_dim()) != (algebra_dim, m, m) {
                return Err(Error::dim(format!("action `{name}` does not map A x V to V")));
            }
        }
        Ok(Representation { module, mu, rho })
    }

    /// `A` acting on itself by `·` and `{,}`.
    pub fn adjoint(a: &Presentation) -> Result<Self> {
        if !matches!(a.kind(), Kind::Poisson | Kind::FManifold) {
            return Err(Error::unsupported("the adjoint representation", a.kind()));
        }
        Representation::new(
            a.dim(),
            a.space().clone(),
            a.product(Slot::Dot).clone(),
            a.product(Slot::Bracket).clone(),
        )
    }

    pub fn algebra_dim(&self) -> usize {
        self.mu.left_dim()
    }

    pub fn module(&self) -> &Space {
        &self.module
    }

    pub fn mu(&self) -> &Product {
        &self.mu
    }

    pub fn rho(&self) -> &Product {
        &self.rho
    }
}

/// Maps `h` (symmetric) and `H` (skew) from `A × A` to `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocyclePair {
    pub h: Product,
    pub big_h: Product,
}

impl CocyclePair {
    pub fn new(algebra_dim: usize, module_dim: usize, h: Product, big_h: Product) -> Result<Self> {
        for (name, p) in [("h", &h), ("H", &big_h)] {
            if (p.left_dim(), p.right_dim(), p.out_dim()) != (algebra_dim, algebra_dim, module_dim) {
                return Err(Error::dim(format!("cocycle `{name}` does not map A x A to V")));
            }
        }
        Ok(CocyclePair { h, big_h })
    }

    /// `(h, H) = −(·, {,})`, the pair under which Reynolds operators are
    /// twisted Rota–Baxter operators.
    pub fn negated_products(a: &Presentation) -> Result<Self> {
        let minus = -int(1);
        CocyclePair::new(
            a.dim(),
            a.dim(),
            a.product(Slot::Dot).scale(&minus),
            a.product(Slot::Bracket).scale(&minus),
        )
    }
}

fn check_rep_dims(a: &Presentation, rep: &Representation) -> Result<()> {
    if rep.algebra_dim() != a.dim() {
        return Err(Error::dim("representation is for an algebra of another dimension"));
    }
    Ok(())
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

type Module3 = fn(&Ctx, &Vector, &Vector, &Vector) -> (Vector, Vector);
type Module4 = fn(&Ctx, &Vector, &Vector, &Vector, &Vector) -> (Vector, Vector);

struct Ctx<'a> {
    a: &'a Presentation,
    rep: &'a Representation,
}

impl Ctx<'_> {
    fn dot(&self, x: &Vector, y: &Vector) -> Vector {
        self.a.product(Slot::Dot).eval(x, y)
    }
    fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.a.product(Slot::Bracket).eval(x, y)
    }
    fn mu(&self, x: &Vector, v: &Vector) -> Vector {
        self.rep.mu.eval(x, v)
    }
    fn rho(&self, x: &Vector, v: &Vector) -> Vector {
        self.rep.rho.eval(x, v)
    }
    /// `(ρ_a μ_b − μ_b ρ_a − μ_{a,b}) w`
    fn r_map(&self, a: &Vector, b: &Vector, w: &Vector) -> Vector {
        self.rho(a, &self.mu(b, w)) - self.mu(b, &self.rho(a, w)) - self.mu(&self.br(a, b), w)
    }
    /// `(μ_a ρ_b + μ_b ρ_a − ρ_{a·b}) w`
    fn s_map(&self, a: &Vector, b: &Vector, w: &Vector) -> Vector {
        self.mu(a, &self.rho(b, w)) + self.mu(b, &self.rho(a, w)) - self.rho(&self.dot(a, b), w)
    }
}

const MODULE_LAWS: &[(&str, Module3)] = &[
    ("mu-multiplicative", |c, x, y, v| (c.mu(&c.dot(x, y), v), c.mu(x, &c.mu(y, v)))),
    ("mu-commuting", |c, x, y, v| (c.mu(x, &c.mu(y, v)), c.mu(y, &c.mu(x, v)))),
    ("rho-lie", |c, x, y, v| {
        (c.rho(&c.br(x, y), v), c.rho(x, &c.rho(y, v)) - c.rho(y, &c.rho(x, v)))
    }),
];

const POISSON_MODULE_LAWS: &[(&str, Module3)] = &[
    ("poisson-module-1", |c, x, y, v| {
        (c.rho(x, &c.mu(y, v)) - c.mu(y, &c.rho(x, v)), c.mu(&c.br(x, y), v))
    }),
    ("poisson-module-2", |c, x, y, v| {
        (c.mu(x, &c.rho(y, v)) + c.mu(y, &c.rho(x, v)), c.rho(&c.dot(x, y), v))
    }),
];

const F_MANIFOLD_MODULE_LAWS: &[(&str, Module4)] = &[
    ("f-manifold-module-1", |c, x, y, z, v| {
        (
            c.r_map(&c.dot(x, y), z, v),
            c.mu(x, &c.r_map(y, z, v)) + c.mu(y, &c.r_map(x, z, v)),
        )
    }),
    ("f-manifold-module-2", |c, x, y, z, v| {
        let p = hertling_manin(c.a, x, y, z).expect("algebra has dot and bracket");
        (c.mu(&p, v), c.s_map(y, z, &c.mu(x, v)) - c.mu(x, &c.s_map(y, z, v)))
    }),
];

/// Module axioms for `μ` and `ρ` plus the compatibility conditions of the
/// algebra's kind (Poisson or F-manifold).
pub fn verify_representation(a: &Presentation, rep: &Representation) -> Result<VerificationReport> {
    if !matches!(a.kind(), Kind::Poisson | Kind::FManifold) {
        return Err(Error::unsupported("representation checks", a.kind()));
    }
    check_rep_dims(a, rep)?;
    let ctx = Ctx { a, rep };
    let an = a.space().names();
    let vn = rep.module.names();
    let av = |i: usize| a.space().basis_vector(i);
    let vv = |i: usize| rep.module.basis_vector(i);
    let mut report = VerificationReport::new(format!("representation of a {} algebra", a.kind()));
    let three: Vec<&(&str, Module3)> = match a.kind() {
        Kind::Poisson => MODULE_LAWS.iter().chain(POISSON_MODULE_LAWS).collect(),
        _ => MODULE_LAWS.iter().collect(),
    };
    for (name, f) in three {
        report.push(check_identity(*name, &[an, an, vn], vn, |t| f(&ctx, &av(t[0]), &av(t[1]), &vv(t[2]))));
    }
    if a.kind() == Kind::FManifold {
        for (name, f) in F_MANIFOLD_MODULE_LAWS {
            report.push(check_identity(*name, &[an, an, an, vn], vn, |t| {
                f(&ctx, &av(t[0]), &av(t[1]), &av(t[2]), &vv(t[3]))
            }));
        }
    }
    Ok(report)
}

fn check_cocycle_dims(a: &Presentation, rep: &Representation, c: &CocyclePair) -> Result<()> {
    check_rep_dims(a, rep)?;
    let m = rep.module.dim();
    for p in [&c.h, &c.big_h] {
        if (p.left_dim(), p.right_dim(), p.out_dim()) != (a.dim(), a.dim(), m) {
            return Err(Error::dim("cocycle does not map A x A to V"));
        }
    }
    Ok(())
}

/// The cocycle conditions for `(h, H)` with values in a Poisson module.
/// Requires the representation to verify.
pub fn verify_poisson_2cocycle(a: &Presentation, rep: &Representation, c: &CocyclePair) -> Result<VerificationReport> {
    if a.kind() != Kind::Poisson {
        return Err(Error::unsupported("Poisson cocycle checks", a.kind()));
    }
    check_cocycle_dims(a, rep, c)?;
    require("representation", verify_representation(a, rep)?)?;
    let ctx = Ctx { a, rep };
    let h = |x: &Vector, y: &Vector| c.h.eval(x, y);
    let hh = |x: &Vector, y: &Vector| c.big_h.eval(x, y);
    let an = a.space().names();
    let vn = rep.module.names();
    let av = |i: usize| a.space().basis_vector(i);
    let mut report = VerificationReport::new("Poisson 2-cocycle");
    report.note("Lie cocycle condition uses H(y,{z,x}) in its second cyclic term");
    report.push(check_identity("h-symmetry", &[an, an], vn, |t| {
        let (x, y) = (av(t[0]), av(t[1]));
        (h(&x, &y), h(&y, &x))
    }));
    report.push(check_identity("H-skew-symmetry", &[an, an], vn, |t| {
        let (x, y) = (av(t[0]), av(t[1]));
        (hh(&x, &y), -hh(&y, &x))
    }));
    report.push(check_identity("commutative-cocycle", &[an, an, an], vn, |t| {
        let (x, y, z) = (av(t[0]), av(t[1]), av(t[2]));
        (
            ctx.mu(&x, &h(&y, &z)) + h(&x, &ctx.dot(&y, &z)),
            ctx.mu(&y, &h(&x, &z)) + h(&y, &ctx.dot(&x, &z)),
        )
    }));
    report.push(check_identity("lie-cocycle", &[an, an, an], vn, |t| {
        let (x, y, z) = (av(t[0]), av(t[1]), av(t[2]));
        let lhs = ctx.rho(&x, &hh(&y, &z))
            + ctx.rho(&y, &hh(&z, &x))
            + ctx.rho(&z, &hh(&x, &y))
            + hh(&x, &ctx.br(&y, &z))
            + hh(&y, &ctx.br(&z, &x))
            + hh(&z, &ctx.br(&x, &y));
        let zero = Vector::zeros(lhs.len());
        (lhs, zero)
    }));
    report.push(check_identity("compatibility-cocycle", &[an, an, an], vn, |t| {
        let (x, y, z) = (av(t[0]), av(t[1]), av(t[2]));
        (
            hh(&x, &ctx.dot(&y, &z)) + ctx.rho(&x, &h(&y, &z)),
            h(&ctx.br(&x, &y), &z) + ctx.mu(&z, &hh(&x, &y)) + h(&y, &ctx.br(&x, &z)) + ctx.mu(&y, &hh(&x, &z)),
        )
    }));
    Ok(report)
}

fn check_module_map(a: &Presentation, rep: &Representation, r: &Matrix) -> Result<()> {
    if r.rows() != a.dim() || r.cols() != rep.module.dim() {
        return Err(Error::dim("operator does not map V to A"));
    }
    Ok(())
}

/// The twisted Rota–Baxter identities for `R: V → A`. Requires the cocycle
/// conditions to hold.
pub fn verify_twisted_rb(a: &Presentation, rep: &Representation, c: &CocyclePair, r: &Matrix) -> Result<VerificationReport> {
    check_module_map(a, rep, r)?;
    require("cocycle", verify_poisson_2cocycle(a, rep, c)?)?;
    let ctx = Ctx { a, rep };
    let an = a.space().names();
    let vn = rep.module.names();
    let vv = |i: usize| rep.module.basis_vector(i);
    let mut report = VerificationReport::new("twisted Rota-Baxter operator");
    report.push(check_identity("twisted-rb-product", &[vn, vn], an, |t| {
        let (u, v) = (vv(t[0]), vv(t[1]));
        let (ru, rv) = (r.apply(&u), r.apply(&v));
        let inner = ctx.mu(&ru, &v) + ctx.mu(&rv, &u) + c.h.eval(&ru, &rv);
        (ctx.dot(&ru, &rv), r.apply(&inner))
    }));
    report.push(check_identity("twisted-rb-bracket", &[vn, vn], an, |t| {
        let (u, v) = (vv(t[0]), vv(t[1]));
        let (ru, rv) = (r.apply(&u), r.apply(&v));
        let inner = ctx.rho(&ru, &v) - ctx.rho(&rv, &u) + c.big_h.eval(&ru, &rv);
        (ctx.br(&ru, &rv), r.apply(&inner))
    }));
    Ok(report)
}

/// `u∗v = μ_{R(u)}v`, `u⋎v = h(Ru,Rv)`, `u◇v = ρ_{R(u)}v`, `u◆v = H(Ru,Rv)`.
pub fn induce_from_twisted_rb(
    a: &Presentation,
    rep: &Representation,
    c: &CocyclePair,
    r: &Matrix,
    strict: bool,
) -> Result<Presentation> {
    if a.kind() != Kind::Poisson {
        return Err(Error::unsupported("twisted Rota-Baxter induction", a.kind()));
    }
    check_module_map(a, rep, r)?;
    check_cocycle_dims(a, rep, c)?;
    if strict {
        require("input structure", verify_structure(a))?;
        require("twisted Rota-Baxter condition", verify_twisted_rb(a, rep, c, r)?)?;
    }
    let products = [
        (Slot::Star, rep.mu.precompose(Some(r), None)?),
        (Slot::Vee, c.h.precompose(Some(r), Some(r))?),
        (Slot::Diamond, rep.rho.precompose(Some(r), None)?),
        (Slot::BlackDiamond, c.big_h.precompose(Some(r), Some(r))?),
    ];
    Ok(Presentation::new(Kind::NsPoisson, rep.module.clone(), products)?
        .with_note("induced by a twisted Rota-Baxter operator"))
}

/// The subadjacent algebra of an NS structure and its representation
/// `μ = ∗`, `ρ = ◇` on the same space.
pub fn induced_representation(a: &Presentation) -> Result<(Presentation, Representation)> {
    if !matches!(a.kind(), Kind::NsPoisson | Kind::NsFManifold) {
        return Err(Error::unsupported("the induced representation", a.kind()));
    }
    let sub = subadjacent(a)?;
    let rep = Representation::new(
        a.dim(),
        a.space().clone(),
        a.product(Slot::Star).clone(),
        a.product(Slot::Diamond).clone(),
    )?;
    Ok((sub, rep))
}

/// Data exhibiting an NS-Poisson algebra as induced by a twisted
/// Rota–Baxter operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub algebra: Presentation,
    pub representation: Representation,
    pub cocycle: CocyclePair,
    pub operator: Matrix,
}

/// Subadjacent algebra, `μ = ∗`, `ρ = ◇`, `h = ⋎`, `H = ◆`, `R = Id`.
pub fn canonical_twisted_factorization(a: &Presentation, strict: bool) -> Result<Factorization> {
    if a.kind() != Kind::NsPoisson {
        return Err(Error::unsupported("twisted factorization", a.kind()));
    }
    if strict {
        require("input structure", verify_structure(a))?;
    }
    let (algebra, representation) = induced_representation(a)?;
    let cocycle = CocyclePair::new(
        a.dim(),
        a.dim(),
        a.product(Slot::Vee).clone(),
        a.product(Slot::BlackDiamond).clone(),
    )?;
    Ok(Factorization {
        algebra,
        representation,
        cocycle,
        operator: Matrix::identity(a.dim()),
    })
}
