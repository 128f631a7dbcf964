//! A fixed pool of Poisson and F-manifold algebras in dimensions 2 to 6,
//! each with operators known to satisfy the Nijenhuis or Reynolds identity.
//! Diagonal operators in dimensions up to 3 come from an exhaustive search
//! checked by the oracle, not by the engine.

use algkit::operators::derivation_bracket;
use algkit::{Kind, Matrix, Presentation, Product, Scalar, Slot, Space};
use num_traits::One;

use crate::examples::*;
use crate::oracle;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub algebra: Presentation,
    pub nijenhuis: Vec<Matrix>,
    pub reynolds: Vec<Matrix>,
}

fn block_product(p: &Product, q: &Product) -> Product {
    let (n, m) = (p.out_dim(), q.out_dim());
    let mut out = Product::square(n + m);
    for (i, j, k, c) in p.nonzero_entries() {
        out.set(i, j, k, c.clone());
    }
    for (i, j, k, c) in q.nonzero_entries() {
        out.set(n + i, n + j, n + k, c.clone());
    }
    out
}

/// `A ⊕ B` on `e1..e(n+m)`; both must carry the same slots.
pub fn direct_sum(kind: Kind, a: &Presentation, b: &Presentation) -> Presentation {
    let products: Vec<(Slot, Product)> = kind
        .slots()
        .iter()
        .map(|&s| (s, block_product(a.product(s), b.product(s))))
        .collect();
    Presentation::new(kind, Space::standard(a.dim() + b.dim()), products).unwrap()
}

pub fn block_matrix(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Matrix::zero(n + m, n + m);
    for (i, j, c) in a.entries() {
        out.set(i, j, c.clone());
    }
    for (i, j, c) in b.entries() {
        out.set(n + i, n + j, c.clone());
    }
    out
}

fn scalar_id(n: usize, c: i64) -> Matrix {
    Matrix::scalar(n, q(c))
}

/// Every diagonal matrix with entries from `values` passing the oracle's
/// check for `role`, in lexicographic order of the diagonal.
pub fn diagonal_search(a: &Presentation, values: &[Scalar], role: &str) -> Vec<Matrix> {
    let n = a.dim();
    let mut found = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let mut m = Matrix::zero(n, n);
        for (i, &k) in idx.iter().enumerate() {
            m.set(i, i, values[k].clone());
        }
        if oracle::verify_operator(a, &m, role).iter().all(|(_, f)| f.is_none()) {
            found.push(m);
        }
        let mut p = n;
        loop {
            if p == 0 {
                return found;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < values.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Search hits that are not multiples of the identity, at most `limit`.
fn interesting(a: &Presentation, role: &str, limit: usize) -> Vec<Matrix> {
    let values = [q(-1), q(0), q(1), q(2)];
    diagonal_search(a, &values, role)
        .into_iter()
        .filter(|m| (1..m.rows()).any(|i| m.get(i, i) != m.get(0, 0)))
        .take(limit)
        .collect()
}

fn zero_dot(kind: Kind, n: usize, bracket: &[(usize, usize, usize, Scalar)]) -> Presentation {
    pres(kind, n, vec![(Slot::Dot, Product::square(n)), (Slot::Bracket, prod(n, bracket))])
}

pub fn sl2() -> Presentation {
    // [h,e] = 2e, [h,f] = −2f, [e,f] = h on e1 = h, e2 = e, e3 = f
    zero_dot(
        Kind::Poisson,
        3,
        &[
            (1, 2, 2, q(2)),
            (2, 1, 2, q(-2)),
            (1, 3, 3, q(-2)),
            (3, 1, 3, q(2)),
            (2, 3, 1, q(1)),
            (3, 2, 1, q(-1)),
        ],
    )
}

pub fn heisenberg() -> Presentation {
    zero_dot(Kind::Poisson, 3, &[(1, 2, 3, q(1)), (2, 1, 3, q(-1))])
}

pub fn affine_line() -> Presentation {
    zero_dot(Kind::Poisson, 2, &[(1, 2, 2, q(1)), (2, 1, 2, q(-1))])
}

/// `k[x]/(x^n)` with the zero bracket.
pub fn polynomial_poisson(n: usize) -> Presentation {
    let ca = truncated_polynomials(n);
    pres(Kind::Poisson, n, vec![(Slot::Dot, ca.product(Slot::Dot).clone()), (Slot::Bracket, Product::square(n))])
}

/// `k[x]/(x^n)` with `{f,g} = f·Dg − g·Df` for the Euler derivation.
pub fn polynomial_fmanifold(n: usize) -> Presentation {
    derivation_bracket(&truncated_polynomials(n), &euler(n), true).unwrap()
}

const MONOMIALS: [(usize, usize); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

fn plane_index(a: usize, b: usize) -> Option<usize> {
    MONOMIALS.iter().position(|&m| m == (a, b))
}

/// `k[x,y]` modulo degree 3 on `1, x, y, x², xy, y²`.
pub fn plane() -> Presentation {
    let mut dot = Vec::new();
    for (i, &(a, b)) in MONOMIALS.iter().enumerate() {
        for (j, &(c, d)) in MONOMIALS.iter().enumerate() {
            if let Some(k) = plane_index(a + c, b + d) {
                dot.push((i + 1, j + 1, k + 1, q(1)));
            }
        }
    }
    pres(Kind::CommutativeAssociative, 6, vec![(Slot::Dot, prod(6, &dot))])
}

/// The plane with `{x^a y^b, x^c y^d} = (bc − ad) x^{a+c} y^{b+d}`, so
/// `{x,y} = −xy`.
pub fn log_canonical_plane() -> Presentation {
    let mut br = Vec::new();
    for (i, &(a, b)) in MONOMIALS.iter().enumerate() {
        for (j, &(c, d)) in MONOMIALS.iter().enumerate() {
            let coef = (b * c) as i64 - (a * d) as i64;
            if let (Some(k), true) = (plane_index(a + c, b + d), coef != 0) {
                br.push((i + 1, j + 1, k + 1, q(coef)));
            }
        }
    }
    let dot = plane().product(Slot::Dot).clone();
    pres(Kind::Poisson, 6, vec![(Slot::Dot, dot), (Slot::Bracket, prod(6, &br))])
}

/// The plane with the bracket of the derivation `x ∂/∂x`.
pub fn plane_fmanifold() -> Presentation {
    let d = Matrix::from_columns(
        6,
        &MONOMIALS.iter().enumerate().map(|(i, &(a, _))| Space::standard(6).basis_vector(i).scale(&q(a as i64))).collect::<Vec<_>>(),
    )
    .unwrap();
    derivation_bracket(&plane(), &d, true).unwrap()
}

fn unit_split_on_plane(p: i64, qq: i64) -> Matrix {
    unit_split(6, &q(p), &q(qq))
}

fn projection(n: usize, keep: std::ops::Range<usize>) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for i in keep {
        m.set(i, i, Scalar::one());
    }
    m
}

fn inst(name: &str, algebra: Presentation, nijenhuis: Vec<Matrix>, reynolds: Vec<Matrix>) -> Instance {
    Instance {
        name: name.to_string(),
        algebra,
        nijenhuis,
        reynolds,
    }
}

/// The pool, in a fixed order.
pub fn pool() -> Vec<Instance> {
    let mut out = Vec::new();
    let id = |n: usize| Matrix::identity(n);

    for (name, a, b, n) in [
        ("poisson4-a1-b0", q(1), q(0), nijenhuis4(&q(2), &q(1), &q(3))),
        ("poisson4-a2-b-1", q(2), q(-1), nijenhuis4(&q(1), &q(2), &q(0))),
        ("poisson4-a-1-b2", q(-1), q(2), nijenhuis4(&q(-1), &q(0), &q(2))),
        ("poisson4-a0-b1", q(0), q(1), nijenhuis4(&q(1), &q(-1), &q(1))),
    ] {
        out.push(inst(name, poisson4(&a, &b), vec![n, scalar_id(4, 2)], vec![id(4)]));
    }
    for (name, a, n) in [
        ("fmanifold2-a3", q(3), nijenhuis2(&q(2), &q(5))),
        ("fmanifold2-a-2", q(-2), nijenhuis2(&q(0), &q(1))),
        ("fmanifold2-a0", q(0), nijenhuis2(&q(-1), &q(2))),
    ] {
        let f = fmanifold2(&a);
        let mut ns = vec![n];
        ns.extend(interesting(&f, "nijenhuis", 2));
        let mut rs = vec![id(2)];
        rs.extend(interesting(&f, "reynolds", 2));
        out.push(inst(name, f, ns, rs));
    }
    for (n, p, qq) in [(3, q(2), q(3)), (4, q(-1), qr(1, 2)), (5, q(3), q(1)), (6, q(1), q(2))] {
        out.push(inst(
            &format!("polynomial-euler-{n}"),
            polynomial_fmanifold(n),
            vec![unit_split(n, &p, &qq), scalar_id(n, -1)],
            vec![id(n)],
        ));
    }
    for (name, a) in [("sl2", sl2()), ("heisenberg", heisenberg()), ("affine-line", affine_line())] {
        let n = a.dim();
        let mut ns = vec![scalar_id(n, 3)];
        ns.extend(interesting(&a, "nijenhuis", 3));
        let mut rs = vec![id(n)];
        rs.extend(interesting(&a, "reynolds", 2));
        out.push(inst(name, a, ns, rs));
    }
    out.push(inst(
        "polynomial-3",
        polynomial_poisson(3),
        vec![unit_split(3, &q(2), &q(-1))],
        vec![id(3), projection(3, 0..1)],
    ));
    out.push(inst(
        "log-canonical-plane",
        log_canonical_plane(),
        vec![unit_split_on_plane(2, -1), scalar_id(6, 2)],
        vec![id(6), projection(6, 0..1)],
    ));
    out.push(inst(
        "plane-euler-x",
        plane_fmanifold(),
        vec![unit_split_on_plane(-1, 3)],
        vec![id(6), projection(6, 0..1)],
    ));
    let (p4, f2) = (poisson4(&q(1), &q(0)), fmanifold2(&q(0)).retag(Kind::Poisson).unwrap());
    out.push(inst(
        "poisson4+fmanifold2-a0",
        direct_sum(Kind::Poisson, &p4, &f2),
        vec![block_matrix(&nijenhuis4(&q(2), &q(1), &q(3)), &nijenhuis2(&q(2), &q(1)))],
        vec![projection(6, 0..4), projection(6, 4..6)],
    ));
    let (f3, fm1) = (fmanifold2(&q(3)), fmanifold2(&q(-1)));
    out.push(inst(
        "fmanifold2-a3+a-1",
        direct_sum(Kind::FManifold, &f3, &fm1),
        vec![block_matrix(&nijenhuis2(&q(2), &q(5)), &nijenhuis2(&q(1), &q(1)))],
        vec![projection(4, 0..2), projection(4, 2..4), id(4)],
    ));
    out.push(inst(
        "affine-line+polynomial-3",
        direct_sum(Kind::Poisson, &affine_line(), &polynomial_poisson(3)),
        vec![block_matrix(&scalar_id(2, 2), &unit_split(3, &q(2), &q(-1)))],
        vec![projection(5, 0..2), projection(5, 2..5)],
    ));
    let pe3 = polynomial_fmanifold(3);
    out.push(inst(
        "fmanifold2-a1+polynomial-euler-3",
        direct_sum(Kind::FManifold, &fmanifold2(&q(1)), &pe3),
        vec![block_matrix(&nijenhuis2(&q(1), &q(-1)), &unit_split(3, &q(2), &q(3)))],
        vec![projection(5, 0..2), projection(5, 2..5)],
    ));
    out
}
