//! The identity catalog.
//!
//! Every law is a function of two product lookups: `i` supplies the
//! products applied first (innermost) and `o` those applied last. Ordinary
//! verification passes the same lookup twice; deformation checks pass two
//! different coefficients of a formal power series and sum over the pairs.
//! Linear laws only read `o`; laws of degree 3 or more read `o` throughout.

use super::{Kind, Ops};
use crate::linalg::Vector;

pub type LawFn = fn(&Ops, &Ops, &[Vector]) -> (Vector, Vector);

#[derive(Clone, Copy)]
pub struct Law {
    pub name: &'static str,
    pub arity: usize,
    /// Number of product applications per term.
    pub degree: u8,
    pub eval: LawFn,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Law({})", self.name)
    }
}

fn zero_like(v: &Vector) -> Vector {
    Vector::zeros(v.len())
}

macro_rules! law {
    ($id:ident, $name:literal, $arity:literal, $deg:literal, |$i:ident, $o:ident, $a:ident| $body:expr) => {
        const $id: Law = Law {
            name: $name,
            arity: $arity,
            degree: $deg,
            eval: {
                #[allow(unused_variables)]
                fn f($i: &Ops, $o: &Ops, $a: &[Vector]) -> (Vector, Vector) {
                    $body
                }
                f
            },
        };
    };
}

law!(COMMUTATIVITY, "commutativity", 2, 1, |i, o, a| {
    (o.dot(&a[0], &a[1]), o.dot(&a[1], &a[0]))
});

law!(ASSOCIATIVITY, "associativity", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.dot(&i.dot(x, y), z), o.dot(x, &i.dot(y, z)))
});

law!(SKEW, "skew-symmetry", 2, 1, |i, o, a| {
    (o.bracket(&a[0], &a[1]), -o.bracket(&a[1], &a[0]))
});

law!(JACOBI, "jacobi", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let lhs = o.bracket(x, &i.bracket(y, z)) + o.bracket(y, &i.bracket(z, x)) + o.bracket(z, &i.bracket(x, y));
    let zero = zero_like(&lhs);
    (lhs, zero)
});

law!(LEIBNIZ, "leibniz", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.bracket(x, &i.dot(y, z)),
        o.dot(&i.bracket(x, y), z) + o.dot(y, &i.bracket(x, z)),
    )
});

law!(ZINBIEL, "zinbiel", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.star(x, &i.star(y, z)), o.star(&(i.star(x, y) + i.star(y, x)), z))
});

law!(PRE_LIE, "pre-lie", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.diamond(x, &i.diamond(y, z)) - o.diamond(&i.diamond(x, y), z),
        o.diamond(y, &i.diamond(x, z)) - o.diamond(&i.diamond(y, x), z),
    )
});

law!(PRE_POISSON_1, "pre-poisson-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.star(&(i.diamond(x, y) - i.diamond(y, x)), z),
        o.diamond(x, &i.star(y, z)) - o.star(y, &i.diamond(x, z)),
    )
});

law!(PRE_POISSON_2, "pre-poisson-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.diamond(&(i.star(x, y) + i.star(y, x)), z),
        o.star(x, &i.diamond(y, z)) + o.star(y, &i.diamond(x, z)),
    )
});

law!(NSA_1, "ns-associative-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.prec(&i.prec(x, y), z), o.prec(x, &i.split_total(y, z)))
});

law!(NSA_2, "ns-associative-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.prec(&i.succ(x, y), z), o.succ(x, &i.prec(y, z)))
});

law!(NSA_3, "ns-associative-3", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.succ(&i.split_total(x, y), z), o.succ(x, &i.succ(y, z)))
});

law!(NSA_4, "ns-associative-4", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.prec(&i.vee(x, y), z) + o.vee(&i.split_total(x, y), z),
        o.succ(x, &i.vee(y, z)) + o.vee(x, &i.split_total(y, z)),
    )
});

law!(VEE_COMM, "vee-commutativity", 2, 1, |i, o, a| {
    (o.vee(&a[0], &a[1]), o.vee(&a[1], &a[0]))
});

law!(NSC_1, "ns-commutative-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (o.star(x, &i.star(y, z)), o.star(&i.sym_total(x, y), z))
});

law!(NSC_2, "ns-commutative-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.star(x, &i.vee(y, z)) + o.vee(x, &i.sym_total(y, z)),
        o.star(y, &i.vee(x, z)) + o.vee(y, &i.sym_total(x, z)),
    )
});

law!(BLACK_SKEW, "blackdiamond-skew-symmetry", 2, 1, |i, o, a| {
    (o.black(&a[0], &a[1]), -o.black(&a[1], &a[0]))
});

law!(NSL_1, "ns-lie-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.diamond(x, &i.diamond(y, z)) - o.diamond(&i.diamond(x, y), z) - o.diamond(y, &i.diamond(x, z))
            + o.diamond(&i.diamond(y, x), z),
        o.diamond(&i.black(x, y), z),
    )
});

law!(NSL_2, "ns-lie-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let term = |p: &Vector, q: &Vector, r: &Vector| o.black(p, &i.skew_total(q, r)) + o.diamond(p, &i.black(q, r));
    let lhs = term(x, y, z) + term(y, z, x) + term(z, x, y);
    let zero = zero_like(&lhs);
    (lhs, zero)
});

law!(NSP_1, "ns-poisson-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.star(&i.skew_total(x, y), z),
        o.diamond(x, &i.star(y, z)) - o.star(y, &i.diamond(x, z)),
    )
});

law!(NSP_2, "ns-poisson-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.diamond(&i.sym_total(x, y), z),
        o.star(x, &i.diamond(y, z)) + o.star(y, &i.diamond(x, z)),
    )
});

law!(NSP_3, "ns-poisson-3", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.black(x, &i.sym_total(y, z)) + o.diamond(x, &i.vee(y, z)),
        o.vee(&i.skew_total(x, y), z)
            + o.star(z, &i.black(x, y))
            + o.vee(y, &i.skew_total(x, z))
            + o.star(y, &i.black(x, z)),
    )
});

law!(NSPL_1, "ns-pre-lie-1", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.rtri(&i.tri_total(x, y), z) - o.rtri(x, &i.rtri(y, z)),
        o.rtri(&i.tri_total(y, x), z) - o.rtri(y, &i.rtri(x, z)),
    )
});

law!(NSPL_2, "ns-pre-lie-2", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    (
        o.rtri(x, &i.ltri(y, z)) - o.ltri(&i.rtri(x, y), z),
        o.ltri(y, &i.tri_total(x, z)) - o.ltri(&i.ltri(y, x), z),
    )
});

law!(NSPL_3, "ns-pre-lie-3", 3, 2, |i, o, a| {
    let (x, y, z) = (&a[0], &a[1], &a[2]);
    let side = |p: &Vector, q: &Vector| {
        o.circ(&i.tri_total(p, q), z) - o.circ(p, &i.tri_total(q, z)) + o.ltri(&i.circ(p, q), z)
            - o.rtri(p, &i.circ(q, z))
    };
    (side(x, y), side(y, x))
});

/// `{a, b·c} − {a,b}·c − b·{a,c}`
pub(crate) fn leibniz_defect(o: &Ops, a: &Vector, b: &Vector, c: &Vector) -> Vector {
    o.bracket(a, &o.dot(b, c)) - o.dot(&o.bracket(a, b), c) - o.dot(b, &o.bracket(a, c))
}

law!(HERTLING_MANIN, "hertling-manin", 4, 3, |i, o, a| {
    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
    (
        leibniz_defect(o, &o.dot(x, y), z, w),
        o.dot(x, &leibniz_defect(o, y, z, w)) + o.dot(y, &leibniz_defect(o, x, z, w)),
    )
});

/// `x◇(y∗z) − y∗(x◇z) − [[x,y]]∗z`
pub(crate) fn defect1(o: &Ops, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    o.diamond(x, &o.star(y, z)) - o.star(y, &o.diamond(x, z)) - o.star(&o.skew_total(x, y), z)
}

/// `x∗(y◇z) + y∗(x◇z) − (x⊙y)◇z`
pub(crate) fn defect2(o: &Ops, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    o.star(x, &o.diamond(y, z)) + o.star(y, &o.diamond(x, z)) - o.diamond(&o.sym_total(x, y), z)
}

/// `x◆(y⊙z) + x◇(y⋎z) − z∗(x◆y) − y∗(x◆z) − y⋎[[x,z]] − [[x,y]]⋎z`
pub(crate) fn defect3(o: &Ops, x: &Vector, y: &Vector, z: &Vector) -> Vector {
    o.black(x, &o.sym_total(y, z)) + o.diamond(x, &o.vee(y, z))
        - o.star(z, &o.black(x, y))
        - o.star(y, &o.black(x, z))
        - o.vee(y, &o.skew_total(x, z))
        - o.vee(&o.skew_total(x, y), z)
}

/// `F1(a,b,c) + F1(a,c,b) + F2(b,c,a) + F3(a,b,c)`, which equals the
/// Leibniz defect of the subadjacent algebra.
pub(crate) fn defect_sum(o: &Ops, a: &Vector, b: &Vector, c: &Vector) -> Vector {
    defect1(o, a, b, c) + defect1(o, a, c, b) + defect2(o, b, c, a) + defect3(o, a, b, c)
}

law!(NSF_1, "ns-f-manifold-1", 4, 3, |i, o, a| {
    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
    (
        defect1(o, &o.sym_total(x, y), z, w),
        o.star(x, &defect1(o, y, z, w)) + o.star(y, &defect1(o, x, z, w)),
    )
});

law!(NSF_2, "ns-f-manifold-2", 4, 3, |i, o, a| {
    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
    (
        o.star(&defect_sum(o, x, y, z), w),
        defect2(o, y, z, &o.star(x, w)) - o.star(x, &defect2(o, y, z, w)),
    )
});

law!(NSF_3, "ns-f-manifold-3", 4, 3, |i, o, a| {
    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
    (
        defect3(o, &o.sym_total(x, y), z, w) + defect2(o, z, w, &o.vee(y, x)),
        o.star(x, &defect3(o, y, z, w))
            + o.star(y, &defect3(o, x, z, w))
            + o.vee(x, &defect_sum(o, y, z, w))
            + o.vee(y, &defect_sum(o, x, z, w)),
    )
});

const COMM_ASSOC: &[Law] = &[COMMUTATIVITY, ASSOCIATIVITY];
const ASSOC: &[Law] = &[ASSOCIATIVITY];
const LIE: &[Law] = &[SKEW, JACOBI];
const NS_COMM: &[Law] = &[VEE_COMM, NSC_1, NSC_2];
const NS_LIE: &[Law] = &[BLACK_SKEW, NSL_1, NSL_2];

/// Which law groups each kind must satisfy, in reporting order.
const CATALOG: &[(Kind, &[&[Law]])] = &[
    (Kind::Associative, &[ASSOC]),
    (Kind::CommutativeAssociative, &[COMM_ASSOC]),
    (Kind::Lie, &[LIE]),
    (Kind::Poisson, &[COMM_ASSOC, LIE, &[LEIBNIZ]]),
    (Kind::FManifold, &[COMM_ASSOC, LIE, &[HERTLING_MANIN]]),
    (Kind::Zinbiel, &[&[ZINBIEL]]),
    (Kind::PreLie, &[&[PRE_LIE]]),
    (Kind::PrePoisson, &[&[ZINBIEL, PRE_LIE, PRE_POISSON_1, PRE_POISSON_2]]),
    (Kind::NsAssociative, &[&[NSA_1, NSA_2, NSA_3, NSA_4]]),
    (Kind::NsCommutative, &[NS_COMM]),
    (Kind::NsLie, &[NS_LIE]),
    (Kind::NsPoisson, &[NS_COMM, NS_LIE, &[NSP_1, NSP_2, NSP_3]]),
    (Kind::NsFManifold, &[NS_COMM, NS_LIE, &[NSF_1, NSF_2, NSF_3]]),
    (Kind::LDendriform, &[&[NSPL_1, NSPL_2]]),
    (Kind::NsPreLie, &[&[NSPL_1, NSPL_2, NSPL_3]]),
];

pub fn laws(kind: Kind) -> Vec<&'static Law> {
    CATALOG
        .iter()
        .find(|(k, _)| *k == kind)
        .map(|(_, groups)| groups.iter().flat_map(|g| g.iter()).collect())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_kind_has_laws_with_unique_names() {
        for kind in Kind::ALL {
            let ls = laws(kind);
            assert!(!ls.is_empty(), "{kind}");
            let mut names: Vec<_> = ls.iter().map(|l| l.name).collect();
            names.sort();
            names.dedup();
            assert_eq!(names.len(), ls.len(), "{kind}");
        }
    }
}
