//! One valid instance of every structure kind, and the single-entry
//! perturbations used by the negative controls.

use algkit::operators::induce_from_nijenhuis;
use algkit::structures::embed;
use algkit::{Kind, Matrix, Presentation, Product, Scalar, Slot, Space};
use num_traits::One;

use crate::examples::*;
use crate::pool::{self, direct_sum};

/// Upper triangular 2×2 matrices on `e11, e12, e22`.
pub fn triangular() -> Presentation {
    let dot = prod(3, &[(1, 1, 1, q(1)), (1, 2, 2, q(1)), (2, 3, 2, q(1)), (3, 3, 3, q(1))]);
    Presentation::new(Kind::Associative, Space::new(["e11", "e12", "e22"]).unwrap(), [(Slot::Dot, dot)]).unwrap()
}

pub fn sl2_lie() -> Presentation {
    pres(Kind::Lie, 3, vec![(Slot::Bracket, pool::sl2().product(Slot::Bracket).clone())])
}

/// `x∗y = R(x)·y` on `k[x]/(x^n)` with `R` the integration `x^k ↦ x^{k+1}/(k+1)`.
pub fn zinbiel(n: usize) -> Presentation {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j + 1 < n {
                entries.push((i + 1, j + 1, i + j + 2, qr(1, i as i64 + 1)));
            }
        }
    }
    pres(Kind::Zinbiel, n, vec![(Slot::Star, prod(n, &entries))])
}

/// `x◇y = [R(x), y]` on `[e1,e2] = e2` with the Rota–Baxter operator
/// `R(e1) = e2`, `R(e2) = 0`, next to the one-dimensional `e3◇e3 = e3`.
pub fn pre_lie() -> Presentation {
    pres(Kind::PreLie, 3, vec![(Slot::Diamond, prod(3, &[(1, 1, 2, q(-1)), (3, 3, 3, q(1))]))])
}

/// Zinbiel and pre-Lie parts on complementary summands.
pub fn pre_poisson() -> Presentation {
    let z = zinbiel(3);
    let p = pre_lie();
    let star = z.product(Slot::Star).clone();
    let a = pres(Kind::PrePoisson, 3, vec![(Slot::Star, star), (Slot::Diamond, Product::square(3))]);
    let b = pres(Kind::PrePoisson, 3, vec![(Slot::Star, Product::square(3)), (Slot::Diamond, p.product(Slot::Diamond).clone())]);
    direct_sum(Kind::PrePoisson, &a, &b)
}

pub fn ns_commutative() -> Presentation {
    induce_from_nijenhuis(&truncated_polynomials(4), &unit_split(4, &q(2), &q(3)), true).unwrap()
}

pub fn ns_lie() -> Presentation {
    let heis = pres(Kind::Lie, 3, vec![(Slot::Bracket, pool::heisenberg().product(Slot::Bracket).clone())]);
    let n = mat(3, &[(1, 1, q(1)), (2, 2, q(2)), (3, 3, q(2))]);
    induce_from_nijenhuis(&heis, &n, true).unwrap()
}

/// A valid instance of every ungraded kind, in catalog order.
pub fn every_kind() -> Vec<(Kind, Presentation)> {
    let nsa = embed(&ns_commutative(), Kind::NsAssociative).unwrap();
    vec![
        (Kind::Associative, triangular()),
        (Kind::CommutativeAssociative, pool::plane()),
        (Kind::Lie, sl2_lie()),
        (Kind::Poisson, poisson4(&q(1), &q(1))),
        (Kind::Zinbiel, zinbiel(4)),
        (Kind::PreLie, pre_lie()),
        (Kind::PrePoisson, pre_poisson()),
        (Kind::NsAssociative, nsa.clone()),
        (Kind::NsCommutative, ns_commutative()),
        (Kind::NsLie, ns_lie()),
        (Kind::NsPoisson, poisson4_induced(&q(1), &q(1), &q(2), &q(1), &q(3))),
        (Kind::LDendriform, embed(&zinbiel(4), Kind::LDendriform).unwrap()),
        (Kind::NsPreLie, embed(&nsa, Kind::NsPreLie).unwrap()),
        (Kind::FManifold, pool::plane_fmanifold()),
        (Kind::NsFManifold, nsfmanifold3(&q(1))),
    ]
}

/// Every position `(slot, i, j, k)` of a presentation, in slot order then
/// row-major order.
pub fn positions(a: &Presentation) -> Vec<(Slot, usize, usize, usize)> {
    let n = a.dim();
    let mut out = Vec::new();
    for (s, _) in a.products() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out.push((s, i, j, k));
                }
            }
        }
    }
    out
}

/// `a` with one structure constant raised by 1.
pub fn bump(a: &Presentation, (s, i, j, k): (Slot, usize, usize, usize)) -> Presentation {
    let mut p = a.product(s).clone();
    let c = p.get(i, j, k).clone() + Scalar::one();
    p.set(i, j, k, c);
    a.with_product(s, p).unwrap()
}

/// `m` with one entry raised by 1.
pub fn bump_matrix(m: &Matrix, i: usize, j: usize) -> Matrix {
    let mut out = m.clone();
    out.set(i, j, m.get(i, j).clone() + Scalar::one());
    out
}
