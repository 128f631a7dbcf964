//! Worked examples as engine values, built from sparse entry lists.
//! Indices in the entry lists are 1-based to match the basis names `e1..en`.

use algkit::deformations::{Filtration, TruncatedDeformation};
use algkit::graded::{GradedKind, GradedPresentation};
use algkit::scalar::{int, ratio};
use algkit::{Kind, Matrix, Presentation, Product, Scalar, Slot, Space, Vector};

pub fn q(n: i64) -> Scalar {
    int(n)
}

pub fn qr(p: i64, d: i64) -> Scalar {
    ratio(p, d)
}

/// Square product on `e1..en` from 1-based `(i, j, k, c)` entries.
pub fn prod(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Product {
    Product::from_entries(n, n, n, entries.iter().map(|(i, j, k, c)| (i - 1, j - 1, k - 1, c.clone()))).unwrap()
}

/// Square matrix from 1-based `(row, col, c)` entries, `N(e_col) = Σ c e_row`.
pub fn mat(n: usize, entries: &[(usize, usize, Scalar)]) -> Matrix {
    let mut m = Matrix::zero(n, n);
    for (i, j, c) in entries {
        let cur = m.get(i - 1, j - 1).clone();
        m.set(i - 1, j - 1, cur + c);
    }
    m
}

pub fn pres(kind: Kind, n: usize, products: Vec<(Slot, Product)>) -> Presentation {
    Presentation::new(kind, Space::standard(n), products).unwrap()
}

/// Product tables equal slot by slot; metadata is ignored.
pub fn same_products(a: &Presentation, b: &Presentation) -> bool {
    a.kind() == b.kind() && a.space() == b.space() && a.products().eq(b.products())
}

pub fn vecq(coords: &[i64]) -> Vector {
    Vector::from_vec(coords.iter().map(|&c| int(c)).collect())
}

/// 4-dim Poisson: e1·e1 = e2, e1·e2 = e3, {e1,e4} = a e3 + b e4.
pub fn poisson4(a: &Scalar, b: &Scalar) -> Presentation {
    let dot = prod(4, &[(1, 1, 2, q(1)), (1, 2, 3, q(1)), (2, 1, 3, q(1))]);
    let br = prod(
        4,
        &[(1, 4, 3, a.clone()), (1, 4, 4, b.clone()), (4, 1, 3, -a.clone()), (4, 1, 4, -b.clone())],
    );
    pres(Kind::Poisson, 4, vec![(Slot::Dot, dot), (Slot::Bracket, br)])
}

/// N(e1) = r e1, N(e2) = r e2 + s e3 + t e4, N(e3) = r e3, N(e4) = r e4.
pub fn nijenhuis4(r: &Scalar, s: &Scalar, t: &Scalar) -> Matrix {
    mat(
        4,
        &[
            (1, 1, r.clone()),
            (2, 2, r.clone()),
            (3, 2, s.clone()),
            (4, 2, t.clone()),
            (3, 3, r.clone()),
            (4, 4, r.clone()),
        ],
    )
}

/// The NS-Poisson structure the above operator induces, entered by hand.
pub fn poisson4_induced(a: &Scalar, b: &Scalar, r: &Scalar, s: &Scalar, t: &Scalar) -> Presentation {
    let star = prod(4, &[(1, 1, 2, r.clone()), (1, 2, 3, r.clone()), (2, 1, 3, r.clone())]);
    let vee = prod(
        4,
        &[
            (1, 1, 2, -r.clone()),
            (1, 1, 3, -s.clone()),
            (1, 1, 4, -t.clone()),
            (1, 2, 3, -r.clone()),
            (2, 1, 3, -r.clone()),
        ],
    );
    let ra = r * a;
    let rb = r * b;
    let diamond = prod(
        4,
        &[
            (1, 4, 3, ra.clone()),
            (1, 4, 4, rb.clone()),
            (4, 1, 3, -ra.clone()),
            (4, 1, 4, -rb.clone()),
            (2, 1, 3, -(t * a)),
            (2, 1, 4, -(t * b)),
        ],
    );
    let black = prod(
        4,
        &[(1, 4, 3, -ra.clone()), (1, 4, 4, -rb.clone()), (4, 1, 3, ra), (4, 1, 4, rb)],
    );
    pres(
        Kind::NsPoisson,
        4,
        vec![(Slot::Star, star), (Slot::Vee, vee), (Slot::Diamond, diamond), (Slot::BlackDiamond, black)],
    )
}

/// e1·e1 = e3, e1·e2 = e4, {e1,e4} = e4, {e2,e3} = −2 e4.
pub fn reynolds_poisson4() -> Presentation {
    let dot = prod(4, &[(1, 1, 3, q(1)), (1, 2, 4, q(1)), (2, 1, 4, q(1))]);
    let br = prod(4, &[(1, 4, 4, q(1)), (4, 1, 4, q(-1)), (2, 3, 4, q(-2)), (3, 2, 4, q(2))]);
    pres(Kind::Poisson, 4, vec![(Slot::Dot, dot), (Slot::Bracket, br)])
}

/// R(e1) = a e1, R(e3) = `e3_coef` e3, R(e2) = R(e4) = 0.
pub fn reynolds4_with(a: &Scalar, e3_coef: &Scalar) -> Matrix {
    mat(4, &[(1, 1, a.clone()), (3, 3, e3_coef.clone())])
}

/// The Reynolds operator with e3 coefficient a/(2 − a).
pub fn reynolds4(a: &Scalar) -> Matrix {
    reynolds4_with(a, &(a / (q(2) - a)))
}

pub fn reynolds4_induced(a: &Scalar) -> Presentation {
    let star = prod(4, &[(1, 1, 3, a.clone()), (1, 2, 4, a.clone())]);
    let vee = prod(4, &[(1, 1, 3, -(a * a))]);
    let diamond = prod(4, &[(1, 4, 4, a.clone()), (3, 2, 4, q(2) * a / (q(2) - a))]);
    pres(
        Kind::NsPoisson,
        4,
        vec![(Slot::Star, star), (Slot::Vee, vee), (Slot::Diamond, diamond), (Slot::BlackDiamond, Product::square(4))],
    )
}

/// e1·e1 = e1, e1·e2 = e2, {e1,e2} = a e2.
pub fn fmanifold2(a: &Scalar) -> Presentation {
    let dot = prod(2, &[(1, 1, 1, q(1)), (1, 2, 2, q(1)), (2, 1, 2, q(1))]);
    let br = prod(2, &[(1, 2, 2, a.clone()), (2, 1, 2, -a.clone())]);
    pres(Kind::FManifold, 2, vec![(Slot::Dot, dot), (Slot::Bracket, br)])
}

/// N(e1) = r e1 + s e2, N(e2) = r e2.
pub fn nijenhuis2(r: &Scalar, s: &Scalar) -> Matrix {
    mat(2, &[(1, 1, r.clone()), (2, 1, s.clone()), (2, 2, r.clone())])
}

/// e2∗e3 = e3∗e2 = e1, e3∗e3 = e2, ⋎ = −∗, e2◇e3 = a e1 = −e3◇e2, ◆ = −◇.
pub fn nsfmanifold3(a: &Scalar) -> Presentation {
    let star_entries = [(2, 3, 1, q(1)), (3, 2, 1, q(1)), (3, 3, 2, q(1))];
    let star = prod(3, &star_entries);
    let vee = star.scale(&q(-1));
    let diamond = prod(3, &[(2, 3, 1, a.clone()), (3, 2, 1, -a.clone())]);
    let black = diamond.scale(&q(-1));
    pres(
        Kind::NsFManifold,
        3,
        vec![(Slot::Star, star), (Slot::Vee, vee), (Slot::Diamond, diamond), (Slot::BlackDiamond, black)],
    )
}

/// `k[x]/(x^n)` on the basis `x^0 .. x^{n-1}`, named `e1..en`.
pub fn truncated_polynomials(n: usize) -> Presentation {
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            entries.push((i + 1, j + 1, i + j + 1, q(1)));
        }
    }
    pres(Kind::CommutativeAssociative, n, vec![(Slot::Dot, prod(n, &entries))])
}

/// The Euler derivation `x^k ↦ k x^k`.
pub fn euler(n: usize) -> Matrix {
    mat(n, &(1..=n).map(|k| (k, k, q(k as i64 - 1))).collect::<Vec<_>>())
}

/// `p` on the unit and `q` on the other powers.
pub fn unit_split(n: usize, p: &Scalar, qq: &Scalar) -> Matrix {
    mat(n, &(1..=n).map(|k| (k, k, if k == 1 { p.clone() } else { qq.clone() })).collect::<Vec<_>>())
}

/// `Λ(g)` for `[e1,e2] = e2` with the Schouten bracket.
/// Basis `1, e1, e2, e12` of degrees 0, 1, 1, 2.
pub fn exterior_gerstenhaber() -> GradedPresentation {
    let space = Space::new(["1", "e1", "e2", "e12"]).unwrap();
    // wedge: 1 is the unit, e1∧e2 = e12 = −e2∧e1
    let wedge = prod(
        4,
        &[
            (1, 1, 1, q(1)),
            (1, 2, 2, q(1)),
            (2, 1, 2, q(1)),
            (1, 3, 3, q(1)),
            (3, 1, 3, q(1)),
            (1, 4, 4, q(1)),
            (4, 1, 4, q(1)),
            (2, 3, 4, q(1)),
            (3, 2, 4, q(-1)),
        ],
    );
    let br = prod(
        4,
        &[(2, 3, 3, q(1)), (3, 2, 3, q(-1)), (2, 4, 4, q(1)), (4, 2, 4, q(-1))],
    );
    GradedPresentation::new(GradedKind::Gerstenhaber, space, vec![0, 1, 1, 2], -1, [(Slot::Dot, wedge), (Slot::Bracket, br)])
        .unwrap()
}

/// Quantum plane `k[x,y]` truncated to degree ≤ 2, basis
/// `1, x, y, x², xy, y²`, with `y·x = xy + t xy` and all other products
/// undeformed. Associativity needs nothing more in this degree range.
pub fn quantum_plane(order: usize) -> TruncatedDeformation {
    let space = Space::new(["1", "x", "y", "xx", "xy", "yy"]).unwrap();
    let monomials = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
    let idx = |a: usize, b: usize| monomials.iter().position(|&m| m == (a, b));
    let mut base = Vec::new();
    for (i, &(a1, b1)) in monomials.iter().enumerate() {
        for (j, &(a2, b2)) in monomials.iter().enumerate() {
            if let Some(k) = idx(a1 + a2, b1 + b2) {
                base.push((i + 1, j + 1, k + 1, q(1)));
            }
        }
    }
    let dot = prod(6, &base);
    let base = Presentation::new(Kind::Associative, space, [(Slot::Dot, dot)]).unwrap();
    let first = prod(6, &[(3, 2, 5, q(1))]);
    TruncatedDeformation::from_base(&base, order, &[(Slot::Dot, 1, first)]).unwrap()
}

/// Two-dim NS-associative algebra with `f1 ≻ f1 = f0` only, on `f0, f1`.
pub fn ns_small() -> Presentation {
    let space = Space::new(["f0", "f1"]).unwrap();
    let succ = prod(2, &[(2, 2, 1, q(1))]);
    Presentation::new(
        Kind::NsAssociative,
        space,
        [(Slot::Prec, Product::square(2)), (Slot::Succ, succ), (Slot::Vee, Product::square(2))],
    )
    .unwrap()
}

/// `A_0 = span{f0} ⊆ A_1 = A`.
pub fn ns_small_filtration() -> Filtration {
    let space = Space::new(["f0", "f1"]).unwrap();
    Filtration::new(space, &[vec![vecq(&[1, 0])], vec![vecq(&[1, 0]), vecq(&[0, 1])]]).unwrap()
}

/// Same space with `f0 ⋎ f0 = f1`, which breaks the filtration.
pub fn ns_small_bad() -> Presentation {
    let space = Space::new(["f0", "f1"]).unwrap();
    let succ = prod(2, &[(2, 2, 1, q(1))]);
    let vee = prod(2, &[(1, 1, 2, q(1))]);
    Presentation::new(Kind::NsAssociative, space, [(Slot::Prec, Product::square(2)), (Slot::Succ, succ), (Slot::Vee, vee)])
        .unwrap()
}
