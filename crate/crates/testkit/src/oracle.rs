//! Literal brute-force evaluation of every identity, independent of the
//! engine in `algkit`.
//!
//! Products are plain nested arrays `t[i][j][k]` and every formula is
//! written out term by term. The arithmetic is generic over [`Ring`] so the
//! same formulas run over the rationals and over truncated power series
//! `k[t]/(t^{m+1})`, which gives a second path for deformation checks.

use std::collections::BTreeMap;
use std::fmt::Debug;

use algkit::structures::Presentation;
use algkit::{Product, Scalar};
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + Debug {
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Ring for Scalar {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// An element of `k[t]/(t^{m+1})`, coefficients by power.
#[derive(Clone, PartialEq, Debug)]
pub struct Trunc(pub Vec<Scalar>);

impl Ring for Trunc {
    fn add(&self, o: &Self) -> Self {
        Trunc(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    fn mul(&self, o: &Self) -> Self {
        let m = self.0.len();
        let mut out = vec![Scalar::zero(); m];
        for (i, a) in self.0.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.0.iter().enumerate().take(m - i) {
                out[i + j] += a * b;
            }
        }
        Trunc(out)
    }
    fn neg(&self) -> Self {
        Trunc(self.0.iter().map(|a| -a.clone()).collect())
    }
    fn zero_like(&self) -> Self {
        Trunc(vec![Scalar::zero(); self.0.len()])
    }
    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

pub type V<R> = Vec<R>;
pub type T<R> = Vec<Vec<Vec<R>>>;

pub fn add<R: Ring>(a: &V<R>, b: &V<R>) -> V<R> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub<R: Ring>(a: &V<R>, b: &V<R>) -> V<R> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn neg<R: Ring>(a: &V<R>) -> V<R> {
    a.iter().map(Ring::neg).collect()
}

pub fn scale<R: Ring>(c: &R, a: &V<R>) -> V<R> {
    a.iter().map(|x| c.mul(x)).collect()
}

/// `x ⋄ y` by the triple sum over all indices.
pub fn bil<R: Ring>(t: &T<R>, out: usize, zero: &R, x: &V<R>, y: &V<R>) -> V<R> {
    let mut r = vec![zero.clone(); out];
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi.mul(yj);
            for (k, rk) in r.iter_mut().enumerate() {
                if !t[i][j][k].is_zero() {
                    *rk = rk.add(&c.mul(&t[i][j][k]));
                }
            }
        }
    }
    r
}

pub fn tensor(p: &Product) -> T<Scalar> {
    (0..p.left_dim())
        .map(|i| {
            (0..p.right_dim())
                .map(|j| (0..p.out_dim()).map(|k| p.get(i, j, k).clone()).collect())
                .collect()
        })
        .collect()
}

/// Runs `f` over all tuples in lexicographic order and returns the first
/// one where the sides differ.
pub fn first_failure<R: Ring>(dims: &[usize], f: impl Fn(&[usize]) -> (V<R>, V<R>)) -> Option<Vec<usize>> {
    if dims.contains(&0) {
        return None;
    }
    let mut t = vec![0; dims.len()];
    loop {
        let (l, r) = f(&t);
        if l != r {
            return Some(t);
        }
        let mut p = dims.len();
        loop {
            if p == 0 {
                return None;
            }
            p -= 1;
            t[p] += 1;
            if t[p] < dims[p] {
                break;
            }
            t[p] = 0;
        }
    }
}

/// The products of one presentation, by slot tag.
pub struct Alg<R: Ring> {
    pub n: usize,
    pub zero: R,
    pub one: R,
    pub t: BTreeMap<String, T<R>>,
}

impl Alg<Scalar> {
    pub fn from_presentation(a: &Presentation) -> Self {
        Alg {
            n: a.dim(),
            zero: Scalar::zero(),
            one: Scalar::one(),
            t: a.products().map(|(s, p)| (s.tag().to_string(), tensor(p))).collect(),
        }
    }
}

/// Law on two algebra elements and one module element.
type Ternary<'a> = dyn Fn(&V<Scalar>, &V<Scalar>, &V<Scalar>) -> (V<Scalar>, V<Scalar>) + 'a;

type Identity<'a, R> = (&'static str, usize, Box<dyn Fn(&[V<R>]) -> (V<R>, V<R>) + 'a>);

impl<R: Ring> Alg<R> {
    pub fn e(&self, i: usize) -> V<R> {
        let mut v = vec![self.zero.clone(); self.n];
        v[i] = self.one.clone();
        v
    }

    fn z(&self) -> V<R> {
        vec![self.zero.clone(); self.n]
    }

    fn op(&self, slot: &str, x: &V<R>, y: &V<R>) -> V<R> {
        match self.t.get(slot) {
            Some(t) => bil(t, self.n, &self.zero, x, y),
            None => self.z(),
        }
    }

    pub fn dot(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("dot", x, y)
    }
    pub fn br(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("bracket", x, y)
    }
    pub fn star(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("star", x, y)
    }
    pub fn vee(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("vee", x, y)
    }
    pub fn dm(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("diamond", x, y)
    }
    pub fn bd(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("blackdiamond", x, y)
    }
    pub fn prec(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("prec", x, y)
    }
    pub fn succ(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("succ", x, y)
    }
    pub fn rt(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("rtri", x, y)
    }
    pub fn lt(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("ltri", x, y)
    }
    pub fn ci(&self, x: &V<R>, y: &V<R>) -> V<R> {
        self.op("circ", x, y)
    }

    /// x⊙y = x∗y + y∗x + x⋎y
    pub fn odot(&self, x: &V<R>, y: &V<R>) -> V<R> {
        add(&add(&self.star(x, y), &self.star(y, x)), &self.vee(x, y))
    }
    /// [[x,y]] = x◇y − y◇x + x◆y
    pub fn dcb(&self, x: &V<R>, y: &V<R>) -> V<R> {
        add(&sub(&self.dm(x, y), &self.dm(y, x)), &self.bd(x, y))
    }
    /// ≺ + ≻ + ⋎
    pub fn nstot(&self, x: &V<R>, y: &V<R>) -> V<R> {
        add(&add(&self.prec(x, y), &self.succ(x, y)), &self.vee(x, y))
    }
    /// ▷ + ◁ + ∘
    pub fn tritot(&self, x: &V<R>, y: &V<R>) -> V<R> {
        add(&add(&self.rt(x, y), &self.lt(x, y)), &self.ci(x, y))
    }

    /// P_x(y,z) = {x,y·z} − {x,y}·z − y·{x,z}
    pub fn hm(&self, x: &V<R>, y: &V<R>, z: &V<R>) -> V<R> {
        let a = self.br(x, &self.dot(y, z));
        let b = self.dot(&self.br(x, y), z);
        let c = self.dot(y, &self.br(x, z));
        sub(&sub(&a, &b), &c)
    }

    pub fn f1(&self, x: &V<R>, y: &V<R>, z: &V<R>) -> V<R> {
        let a = self.dm(x, &self.star(y, z));
        let b = self.star(y, &self.dm(x, z));
        let c = self.star(&self.dcb(x, y), z);
        sub(&sub(&a, &b), &c)
    }

    pub fn f2(&self, x: &V<R>, y: &V<R>, z: &V<R>) -> V<R> {
        let a = self.star(x, &self.dm(y, z));
        let b = self.star(y, &self.dm(x, z));
        let c = self.dm(&self.odot(x, y), z);
        sub(&add(&a, &b), &c)
    }

    pub fn f3(&self, x: &V<R>, y: &V<R>, z: &V<R>) -> V<R> {
        let mut r = add(&self.bd(x, &self.odot(y, z)), &self.dm(x, &self.vee(y, z)));
        r = sub(&r, &self.star(z, &self.bd(x, y)));
        r = sub(&r, &self.star(y, &self.bd(x, z)));
        r = sub(&r, &self.vee(y, &self.dcb(x, z)));
        sub(&r, &self.vee(&self.dcb(x, y), z))
    }

    fn q(&self, x: &V<R>, y: &V<R>, z: &V<R>) -> V<R> {
        let s = add(&self.f1(x, y, z), &self.f1(x, z, y));
        add(&add(&s, &self.f2(y, z, x)), &self.f3(x, y, z))
    }

    /// The identities of a kind, written out literally.
    pub fn identities<'a>(&'a self, kind: &str) -> Vec<Identity<'a, R>> {
        let mut out: Vec<Identity<'a, R>> = Vec::new();
        macro_rules! id {
            ($name:literal, $ar:literal, |$a:ident| $body:expr) => {
                out.push(($name, $ar, Box::new(move |$a: &[V<R>]| $body)))
            };
        }
        let s = self;
        let comm_assoc = |out: &mut Vec<Identity<'a, R>>| {
            out.push(("commutativity", 2, Box::new(move |a: &[V<R>]| (s.dot(&a[0], &a[1]), s.dot(&a[1], &a[0])))));
        };
        let assoc = |out: &mut Vec<Identity<'a, R>>| {
            out.push((
                "associativity",
                3,
                Box::new(move |a: &[V<R>]| (s.dot(&s.dot(&a[0], &a[1]), &a[2]), s.dot(&a[0], &s.dot(&a[1], &a[2])))),
            ));
        };
        let lie = |out: &mut Vec<Identity<'a, R>>| {
            out.push(("skew-symmetry", 2, Box::new(move |a: &[V<R>]| (s.br(&a[0], &a[1]), neg(&s.br(&a[1], &a[0]))))));
            out.push((
                "jacobi",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    let l = add(&add(&s.br(x, &s.br(y, z)), &s.br(y, &s.br(z, x))), &s.br(z, &s.br(x, y)));
                    (l, s.z())
                }),
            ));
        };
        let zinbiel = |out: &mut Vec<Identity<'a, R>>| {
            out.push((
                "zinbiel",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.star(x, &s.star(y, z)), s.star(&add(&s.star(x, y), &s.star(y, x)), z))
                }),
            ));
        };
        let prelie = |out: &mut Vec<Identity<'a, R>>| {
            out.push((
                "pre-lie",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        sub(&s.dm(x, &s.dm(y, z)), &s.dm(&s.dm(x, y), z)),
                        sub(&s.dm(y, &s.dm(x, z)), &s.dm(&s.dm(y, x), z)),
                    )
                }),
            ));
        };
        let nscomm = |out: &mut Vec<Identity<'a, R>>| {
            out.push(("vee-commutativity", 2, Box::new(move |a: &[V<R>]| (s.vee(&a[0], &a[1]), s.vee(&a[1], &a[0])))));
            out.push((
                "ns-commutative-1",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.star(x, &s.star(y, z)), s.star(&s.odot(x, y), z))
                }),
            ));
            out.push((
                "ns-commutative-2",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        add(&s.star(x, &s.vee(y, z)), &s.vee(x, &s.odot(y, z))),
                        add(&s.star(y, &s.vee(x, z)), &s.vee(y, &s.odot(x, z))),
                    )
                }),
            ));
        };
        let nslie = |out: &mut Vec<Identity<'a, R>>| {
            out.push((
                "blackdiamond-skew-symmetry",
                2,
                Box::new(move |a: &[V<R>]| (s.bd(&a[0], &a[1]), neg(&s.bd(&a[1], &a[0])))),
            ));
            out.push((
                "ns-lie-1",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    let mut l = sub(&s.dm(x, &s.dm(y, z)), &s.dm(&s.dm(x, y), z));
                    l = sub(&l, &s.dm(y, &s.dm(x, z)));
                    l = add(&l, &s.dm(&s.dm(y, x), z));
                    (l, s.dm(&s.bd(x, y), z))
                }),
            ));
            out.push((
                "ns-lie-2",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    let mut l = add(&s.bd(x, &s.dcb(y, z)), &s.bd(y, &s.dcb(z, x)));
                    l = add(&l, &s.bd(z, &s.dcb(x, y)));
                    l = add(&l, &s.dm(x, &s.bd(y, z)));
                    l = add(&l, &s.dm(y, &s.bd(z, x)));
                    l = add(&l, &s.dm(z, &s.bd(x, y)));
                    (l, s.z())
                }),
            ));
        };
        let nspl12 = |out: &mut Vec<Identity<'a, R>>| {
            out.push((
                "ns-pre-lie-1",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        sub(&s.rt(&s.tritot(x, y), z), &s.rt(x, &s.rt(y, z))),
                        sub(&s.rt(&s.tritot(y, x), z), &s.rt(y, &s.rt(x, z))),
                    )
                }),
            ));
            out.push((
                "ns-pre-lie-2",
                3,
                Box::new(move |a: &[V<R>]| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        sub(&s.rt(x, &s.lt(y, z)), &s.lt(&s.rt(x, y), z)),
                        sub(&s.lt(y, &s.tritot(x, z)), &s.lt(&s.lt(y, x), z)),
                    )
                }),
            ));
        };
        match kind {
            "associative" => assoc(&mut out),
            "commutative-associative" => {
                comm_assoc(&mut out);
                assoc(&mut out);
            }
            "lie" => lie(&mut out),
            "poisson" | "f-manifold" => {
                comm_assoc(&mut out);
                assoc(&mut out);
                lie(&mut out);
                if kind == "poisson" {
                    id!("leibniz", 3, |a| {
                        let (x, y, z) = (&a[0], &a[1], &a[2]);
                        (s.br(x, &s.dot(y, z)), add(&s.dot(&s.br(x, y), z), &s.dot(y, &s.br(x, z))))
                    });
                } else {
                    id!("hertling-manin", 4, |a| {
                        let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                        (s.hm(&s.dot(x, y), z, w), add(&s.dot(x, &s.hm(y, z, w)), &s.dot(y, &s.hm(x, z, w))))
                    });
                }
            }
            "zinbiel" => zinbiel(&mut out),
            "pre-lie" => prelie(&mut out),
            "pre-poisson" => {
                zinbiel(&mut out);
                prelie(&mut out);
                id!("pre-poisson-1", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        s.star(&sub(&s.dm(x, y), &s.dm(y, x)), z),
                        sub(&s.dm(x, &s.star(y, z)), &s.star(y, &s.dm(x, z))),
                    )
                });
                id!("pre-poisson-2", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        s.dm(&add(&s.star(x, y), &s.star(y, x)), z),
                        add(&s.star(x, &s.dm(y, z)), &s.star(y, &s.dm(x, z))),
                    )
                });
            }
            "ns-associative" => {
                id!("ns-associative-1", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.prec(&s.prec(x, y), z), s.prec(x, &s.nstot(y, z)))
                });
                id!("ns-associative-2", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.prec(&s.succ(x, y), z), s.succ(x, &s.prec(y, z)))
                });
                id!("ns-associative-3", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.succ(&s.nstot(x, y), z), s.succ(x, &s.succ(y, z)))
                });
                id!("ns-associative-4", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (
                        add(&s.prec(&s.vee(x, y), z), &s.vee(&s.nstot(x, y), z)),
                        add(&s.succ(x, &s.vee(y, z)), &s.vee(x, &s.nstot(y, z))),
                    )
                });
            }
            "ns-commutative" => nscomm(&mut out),
            "ns-lie" => nslie(&mut out),
            "ns-poisson" => {
                nscomm(&mut out);
                nslie(&mut out);
                id!("ns-poisson-1", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.star(&s.dcb(x, y), z), sub(&s.dm(x, &s.star(y, z)), &s.star(y, &s.dm(x, z))))
                });
                id!("ns-poisson-2", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    (s.dm(&s.odot(x, y), z), add(&s.star(x, &s.dm(y, z)), &s.star(y, &s.dm(x, z))))
                });
                id!("ns-poisson-3", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    let l = add(&s.bd(x, &s.odot(y, z)), &s.dm(x, &s.vee(y, z)));
                    let mut r = add(&s.vee(&s.dcb(x, y), z), &s.star(z, &s.bd(x, y)));
                    r = add(&r, &s.vee(y, &s.dcb(x, z)));
                    r = add(&r, &s.star(y, &s.bd(x, z)));
                    (l, r)
                });
            }
            "ns-f-manifold" => {
                nscomm(&mut out);
                nslie(&mut out);
                id!("ns-f-manifold-1", 4, |a| {
                    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                    (s.f1(&s.odot(x, y), z, w), add(&s.star(x, &s.f1(y, z, w)), &s.star(y, &s.f1(x, z, w))))
                });
                id!("ns-f-manifold-2", 4, |a| {
                    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                    (s.star(&s.q(x, y, z), w), sub(&s.f2(y, z, &s.star(x, w)), &s.star(x, &s.f2(y, z, w))))
                });
                id!("ns-f-manifold-3", 4, |a| {
                    let (x, y, z, w) = (&a[0], &a[1], &a[2], &a[3]);
                    let l = add(&s.f3(&s.odot(x, y), z, w), &s.f2(z, w, &s.vee(y, x)));
                    let mut r = add(&s.star(x, &s.f3(y, z, w)), &s.star(y, &s.f3(x, z, w)));
                    r = add(&r, &s.vee(x, &s.q(y, z, w)));
                    r = add(&r, &s.vee(y, &s.q(x, z, w)));
                    (l, r)
                });
            }
            "l-dendriform" => nspl12(&mut out),
            "ns-pre-lie" => {
                nspl12(&mut out);
                id!("ns-pre-lie-3", 3, |a| {
                    let (x, y, z) = (&a[0], &a[1], &a[2]);
                    let side = |p: &V<R>, q: &V<R>| {
                        let mut v = sub(&s.ci(&s.tritot(p, q), z), &s.ci(p, &s.tritot(q, z)));
                        v = add(&v, &s.lt(&s.ci(p, q), z));
                        sub(&v, &s.rt(p, &s.ci(q, z)))
                    };
                    (side(x, y), side(y, x))
                });
            }
            other => panic!("oracle has no identities for `{other}`"),
        }
        out
    }

    /// `(identity, first failing tuple)` for every identity of `kind`.
    pub fn verify(&self, kind: &str) -> Vec<(String, Option<Vec<usize>>)> {
        self.identities(kind)
            .into_iter()
            .map(|(name, arity, f)| {
                let dims = vec![self.n; arity];
                let fail = first_failure(&dims, |t| {
                    let args: Vec<V<R>> = t.iter().map(|&i| self.e(i)).collect();
                    f(&args)
                });
                (name.to_string(), fail)
            })
            .collect()
    }
}

/// The oracle verdicts for a presentation.
pub fn verify_presentation(a: &Presentation) -> Vec<(String, Option<Vec<usize>>)> {
    Alg::from_presentation(a).verify(a.kind().tag())
}

/// Compares an engine report with oracle verdicts: same identity names in
/// the same order, same verdicts, same first failing tuple.
pub fn compare(engine: &algkit::VerificationReport, oracle: &[(String, Option<Vec<usize>>)]) -> Result<(), String> {
    let names: Vec<&str> = engine.results.iter().map(|r| r.name.as_str()).collect();
    let onames: Vec<&str> = oracle.iter().map(|(n, _)| n.as_str()).collect();
    if names != onames {
        return Err(format!("identity lists differ: engine {names:?}, oracle {onames:?}"));
    }
    for (r, (name, fail)) in engine.results.iter().zip(oracle) {
        let got = r.counterexample.as_ref().map(|c| c.tuple.clone());
        if &got != fail {
            return Err(format!("{name}: engine {got:?}, oracle {fail:?}"));
        }
    }
    Ok(())
}

/// [`compare`] for the structure identities of `a`.
pub fn agree_with_engine(a: &Presentation) -> Result<(), String> {
    compare(&algkit::verify_structure(a), &verify_presentation(a))
}

fn qsign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn basis_args(n: usize, t: &[usize]) -> Vec<V<Scalar>> {
    t.iter()
        .map(|&i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        })
        .collect()
}

fn apply(m: &[Vec<Scalar>], v: &V<Scalar>) -> V<Scalar> {
    m.iter().map(|row| row.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)).collect()
}

/// Rows of a matrix as plain arrays.
pub fn rows(m: &algkit::Matrix) -> Vec<Vec<Scalar>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect()
}

/// Both sides of the `role` identity for one product at `(e_i, e_j)`.
pub fn operator_sides(p: &Product, m: &[Vec<Scalar>], role: &str, i: usize, j: usize) -> (V<Scalar>, V<Scalar>) {
    let n = p.out_dim();
    let t = tensor(p);
    let b = |x: &V<Scalar>, y: &V<Scalar>| bil(&t, n, &Scalar::zero(), x, y);
    let args = basis_args(n, &[i, j]);
    let (x, y) = (&args[0], &args[1]);
    let (mx, my) = (apply(m, x), apply(m, y));
    match role {
        "nijenhuis" => {
            let inner = sub(&add(&b(&mx, y), &b(x, &my)), &apply(m, &b(x, y)));
            (b(&mx, &my), apply(m, &inner))
        }
        "reynolds" => {
            let inner = sub(&add(&b(&mx, y), &b(x, &my)), &b(&mx, &my));
            (b(&mx, &my), apply(m, &inner))
        }
        "derivation" => (apply(m, &b(x, y)), add(&b(&mx, y), &b(x, &my))),
        other => panic!("unknown operator role `{other}`"),
    }
}

/// Nijenhuis, Reynolds or derivation condition on each slot, in slot order.
pub fn verify_operator(a: &Presentation, m: &algkit::Matrix, role: &str) -> Vec<(String, Option<Vec<usize>>)> {
    let n = a.dim();
    let m = rows(m);
    a.products()
        .map(|(slot, p)| {
            let fail = first_failure(&[n, n], |ij| operator_sides(p, &m, role, ij[0], ij[1]));
            (format!("{role}({})", slot.tag()), fail)
        })
        .collect()
}

/// Both sides of the named identity of `a` at a basis tuple.
pub fn evaluate(a: &Presentation, name: &str, tuple: &[usize]) -> Option<(V<Scalar>, V<Scalar>)> {
    let alg = Alg::from_presentation(a);
    let ids = alg.identities(a.kind().tag());
    let (_, arity, f) = ids.iter().find(|(n, _, _)| *n == name)?;
    if *arity != tuple.len() {
        return None;
    }
    let args: Vec<V<Scalar>> = tuple.iter().map(|&i| alg.e(i)).collect();
    let sides = f(&args);
    Some(sides)
}

/// Module axioms: μ, ρ given as `A × V → V` tensors.
pub fn verify_representation(
    a: &Presentation,
    mu: &Product,
    rho: &Product,
) -> Vec<(String, Option<Vec<usize>>)> {
    let (n, m) = (a.dim(), mu.out_dim());
    let z = Scalar::zero();
    let (dt, bt) = (tensor(a.product(algkit::Slot::Dot)), tensor(a.product(algkit::Slot::Bracket)));
    let (mt, rt) = (tensor(mu), tensor(rho));
    let dot = |x: &V<Scalar>, y: &V<Scalar>| bil(&dt, n, &z, x, y);
    let br = |x: &V<Scalar>, y: &V<Scalar>| bil(&bt, n, &z, x, y);
    let mu = |x: &V<Scalar>, v: &V<Scalar>| bil(&mt, m, &z, x, v);
    let rho = |x: &V<Scalar>, v: &V<Scalar>| bil(&rt, m, &z, x, v);
    let ea = |i: usize| basis_args(n, &[i]).remove(0);
    let ev = |i: usize| basis_args(m, &[i]).remove(0);
    let mut out = Vec::new();
    let mut three = |name: &str, f: &Ternary| {
        let fail = first_failure(&[n, n, m], |t| f(&ea(t[0]), &ea(t[1]), &ev(t[2])));
        out.push((name.to_string(), fail));
    };
    three("mu-multiplicative", &|x, y, v| (mu(&dot(x, y), v), mu(x, &mu(y, v))));
    three("mu-commuting", &|x, y, v| (mu(x, &mu(y, v)), mu(y, &mu(x, v))));
    three("rho-lie", &|x, y, v| (rho(&br(x, y), v), sub(&rho(x, &rho(y, v)), &rho(y, &rho(x, v)))));
    if a.kind() == algkit::Kind::Poisson {
        three("poisson-module-1", &|x, y, v| (sub(&rho(x, &mu(y, v)), &mu(y, &rho(x, v))), mu(&br(x, y), v)));
        three("poisson-module-2", &|x, y, v| (add(&mu(x, &rho(y, v)), &mu(y, &rho(x, v))), rho(&dot(x, y), v)));
        return out;
    }
    // R(a,b)w = ρ_a μ_b w − μ_b ρ_a w − μ_{a,b} w ;  S(a,b)w = μ_a ρ_b w + μ_b ρ_a w − ρ_{a·b} w
    let r = |p: &V<Scalar>, q: &V<Scalar>, w: &V<Scalar>| sub(&sub(&rho(p, &mu(q, w)), &mu(q, &rho(p, w))), &mu(&br(p, q), w));
    let s = |p: &V<Scalar>, q: &V<Scalar>, w: &V<Scalar>| sub(&add(&mu(p, &rho(q, w)), &mu(q, &rho(p, w))), &rho(&dot(p, q), w));
    let pp = |x: &V<Scalar>, y: &V<Scalar>, w: &V<Scalar>| sub(&sub(&br(x, &dot(y, w)), &dot(&br(x, y), w)), &dot(y, &br(x, w)));
    let fail = first_failure(&[n, n, n, m], |t| {
        let (x, y, zz, v) = (ea(t[0]), ea(t[1]), ea(t[2]), ev(t[3]));
        (r(&dot(&x, &y), &zz, &v), add(&mu(&x, &r(&y, &zz, &v)), &mu(&y, &r(&x, &zz, &v))))
    });
    out.push(("f-manifold-module-1".to_string(), fail));
    let fail = first_failure(&[n, n, n, m], |t| {
        let (x, y, zz, v) = (ea(t[0]), ea(t[1]), ea(t[2]), ev(t[3]));
        (mu(&pp(&x, &y, &zz), &v), sub(&s(&y, &zz, &mu(&x, &v)), &mu(&x, &s(&y, &zz, &v))))
    });
    out.push(("f-manifold-module-2".to_string(), fail));
    out
}

/// Cocycle conditions for `(h, H): A × A → V`.
pub fn verify_cocycle(
    a: &Presentation,
    mu: &Product,
    rho: &Product,
    h: &Product,
    big_h: &Product,
) -> Vec<(String, Option<Vec<usize>>)> {
    let (n, m) = (a.dim(), mu.out_dim());
    let z = Scalar::zero();
    let (dt, bt) = (tensor(a.product(algkit::Slot::Dot)), tensor(a.product(algkit::Slot::Bracket)));
    let (mt, rt, ht, hht) = (tensor(mu), tensor(rho), tensor(h), tensor(big_h));
    let dot = |x: &V<Scalar>, y: &V<Scalar>| bil(&dt, n, &z, x, y);
    let br = |x: &V<Scalar>, y: &V<Scalar>| bil(&bt, n, &z, x, y);
    let mu = |x: &V<Scalar>, v: &V<Scalar>| bil(&mt, m, &z, x, v);
    let rho = |x: &V<Scalar>, v: &V<Scalar>| bil(&rt, m, &z, x, v);
    let h = |x: &V<Scalar>, y: &V<Scalar>| bil(&ht, m, &z, x, y);
    let hh = |x: &V<Scalar>, y: &V<Scalar>| bil(&hht, m, &z, x, y);
    let mut out = Vec::new();
    let fail = first_failure(&[n, n], |t| {
        let a = basis_args(n, t);
        (h(&a[0], &a[1]), h(&a[1], &a[0]))
    });
    out.push(("h-symmetry".to_string(), fail));
    let fail = first_failure(&[n, n], |t| {
        let a = basis_args(n, t);
        (hh(&a[0], &a[1]), neg(&hh(&a[1], &a[0])))
    });
    out.push(("H-skew-symmetry".to_string(), fail));
    let fail = first_failure(&[n, n, n], |t| {
        let a = basis_args(n, t);
        let (x, y, w) = (&a[0], &a[1], &a[2]);
        (add(&mu(x, &h(y, w)), &h(x, &dot(y, w))), add(&mu(y, &h(x, w)), &h(y, &dot(x, w))))
    });
    out.push(("commutative-cocycle".to_string(), fail));
    let fail = first_failure(&[n, n, n], |t| {
        let a = basis_args(n, t);
        let (x, y, w) = (&a[0], &a[1], &a[2]);
        let mut l = add(&rho(x, &hh(y, w)), &rho(y, &hh(w, x)));
        l = add(&l, &rho(w, &hh(x, y)));
        l = add(&l, &hh(x, &br(y, w)));
        l = add(&l, &hh(y, &br(w, x)));
        l = add(&l, &hh(w, &br(x, y)));
        (l, vec![Scalar::zero(); m])
    });
    out.push(("lie-cocycle".to_string(), fail));
    let fail = first_failure(&[n, n, n], |t| {
        let a = basis_args(n, t);
        let (x, y, w) = (&a[0], &a[1], &a[2]);
        let l = add(&hh(x, &dot(y, w)), &rho(x, &h(y, w)));
        let mut r = add(&h(&br(x, y), w), &mu(w, &hh(x, y)));
        r = add(&r, &h(y, &br(x, w)));
        r = add(&r, &mu(y, &hh(x, w)));
        (l, r)
    });
    out.push(("compatibility-cocycle".to_string(), fail));
    out
}

/// Twisted Rota–Baxter identities for `R: V → A` (matrix `dim A × dim V`).
#[allow(clippy::too_many_arguments)]
pub fn verify_twisted(
    a: &Presentation,
    mu: &Product,
    rho: &Product,
    h: &Product,
    big_h: &Product,
    r: &algkit::Matrix,
) -> Vec<(String, Option<Vec<usize>>)> {
    let (n, m) = (a.dim(), mu.out_dim());
    let z = Scalar::zero();
    let rm = rows(r);
    let (dt, bt) = (tensor(a.product(algkit::Slot::Dot)), tensor(a.product(algkit::Slot::Bracket)));
    let (mt, rt, ht, hht) = (tensor(mu), tensor(rho), tensor(h), tensor(big_h));
    let mut out = Vec::new();
    let fail = first_failure(&[m, m], |t| {
        let v = basis_args(m, t);
        let (ru, rv) = (apply(&rm, &v[0]), apply(&rm, &v[1]));
        let inner = add(&add(&bil(&mt, m, &z, &ru, &v[1]), &bil(&mt, m, &z, &rv, &v[0])), &bil(&ht, m, &z, &ru, &rv));
        (bil(&dt, n, &z, &ru, &rv), apply(&rm, &inner))
    });
    out.push(("twisted-rb-product".to_string(), fail));
    let fail = first_failure(&[m, m], |t| {
        let v = basis_args(m, t);
        let (ru, rv) = (apply(&rm, &v[0]), apply(&rm, &v[1]));
        let inner = add(&sub(&bil(&rt, m, &z, &ru, &v[1]), &bil(&rt, m, &z, &rv, &v[0])), &bil(&hht, m, &z, &ru, &rv));
        (bil(&bt, n, &z, &ru, &rv), apply(&rm, &inner))
    });
    out.push(("twisted-rb-bracket".to_string(), fail));
    out
}

/// Graded identities with explicit Koszul signs. `shift` is added to the
/// degree of every argument of a bracket-type sign.
pub fn verify_graded(g: &algkit::graded::GradedPresentation) -> Vec<(String, Option<Vec<usize>>)> {
    let n = g.dim();
    let deg = g.degrees().to_vec();
    let sh = g.bracket_shift();
    let z = Scalar::zero();
    let t: BTreeMap<&str, T<Scalar>> = g.products().map(|(s, p)| (s.tag(), tensor(p))).collect();
    let op = |s: &str, x: &V<Scalar>, y: &V<Scalar>| bil(&t[s], n, &z, x, y);
    let e = |i: usize| basis_args(n, &[i]).remove(0);
    let dg = |i: usize| deg[i];
    let dd = |i: usize| deg[i] + sh;
    // ⊙ and [[ , ]] on basis elements
    let odot = |i: usize, j: usize| {
        add(
            &add(&op("star", &e(i), &e(j)), &scale(&qsign(dg(i) * dg(j)), &op("star", &e(j), &e(i)))),
            &op("vee", &e(i), &e(j)),
        )
    };
    let dcb = |i: usize, j: usize| {
        add(
            &sub(&op("diamond", &e(i), &e(j)), &scale(&qsign(dd(i) * dd(j)), &op("diamond", &e(j), &e(i)))),
            &op("blackdiamond", &e(i), &e(j)),
        )
    };
    let zero = || vec![Scalar::zero(); n];
    let mut out: Vec<(String, Option<Vec<usize>>)> = Vec::new();
    let mut run = |name: &str, arity: usize, f: &dyn Fn(usize, usize, usize) -> (V<Scalar>, V<Scalar>)| {
        let fail = first_failure(&vec![n; arity], |t| f(t[0], t[1], if arity > 2 { t[2] } else { 0 }));
        out.push((name.to_string(), fail));
    };
    let kind = g.kind().tag();
    if kind == "gerstenhaber" {
        run("graded-commutativity", 2, &|x, y, _| (op("dot", &e(x), &e(y)), scale(&qsign(dg(x) * dg(y)), &op("dot", &e(y), &e(x)))));
        run("associativity", 3, &|x, y, w| {
            (op("dot", &op("dot", &e(x), &e(y)), &e(w)), op("dot", &e(x), &op("dot", &e(y), &e(w))))
        });
        run("graded-skew-symmetry", 2, &|x, y, _| {
            (op("bracket", &e(x), &e(y)), neg(&scale(&qsign(dd(x) * dd(y)), &op("bracket", &e(y), &e(x)))))
        });
        run("graded-jacobi", 3, &|x, y, w| {
            let b = |p: &V<Scalar>, q: &V<Scalar>| op("bracket", p, q);
            let mut l = scale(&qsign(dd(x) * dd(w)), &b(&e(x), &b(&e(y), &e(w))));
            l = add(&l, &scale(&qsign(dd(y) * dd(x)), &b(&e(y), &b(&e(w), &e(x)))));
            l = add(&l, &scale(&qsign(dd(w) * dd(y)), &b(&e(w), &b(&e(x), &e(y)))));
            (l, zero())
        });
        run("graded-leibniz", 3, &|x, y, w| {
            let l = op("bracket", &e(x), &op("dot", &e(y), &e(w)));
            let r = add(
                &op("dot", &op("bracket", &e(x), &e(y)), &e(w)),
                &scale(&qsign(dd(x) * dg(y)), &op("dot", &e(y), &op("bracket", &e(x), &e(w)))),
            );
            (l, r)
        });
        return out;
    }
    if kind == "graded-ns-commutative" || kind == "ns-gerstenhaber" {
        run("vee-graded-commutativity", 2, &|x, y, _| {
            (op("vee", &e(x), &e(y)), scale(&qsign(dg(x) * dg(y)), &op("vee", &e(y), &e(x))))
        });
        run("ns-commutative-1", 3, &|x, y, w| {
            (op("star", &e(x), &op("star", &e(y), &e(w))), op("star", &odot(x, y), &e(w)))
        });
        run("ns-commutative-2", 3, &|x, y, w| {
            let l = add(&op("star", &e(x), &op("vee", &e(y), &e(w))), &op("vee", &e(x), &odot(y, w)));
            let r = add(&op("star", &e(y), &op("vee", &e(x), &e(w))), &op("vee", &e(y), &odot(x, w)));
            (l, scale(&qsign(dg(y) * dg(x)), &r))
        });
    }
    if kind == "graded-ns-lie" || kind == "ns-gerstenhaber" {
        let dm = |p: &V<Scalar>, q: &V<Scalar>| op("diamond", p, q);
        let bd = |p: &V<Scalar>, q: &V<Scalar>| op("blackdiamond", p, q);
        run("blackdiamond-graded-skew-symmetry", 2, &|x, y, _| {
            (bd(&e(x), &e(y)), neg(&scale(&qsign(dd(x) * dd(y)), &bd(&e(y), &e(x)))))
        });
        run("ns-lie-1", 3, &|x, y, w| {
            let (ex, ey, ew) = (e(x), e(y), e(w));
            let first = sub(&dm(&ex, &dm(&ey, &ew)), &dm(&dm(&ex, &ey), &ew));
            let second = sub(&dm(&ey, &dm(&ex, &ew)), &dm(&dm(&ey, &ex), &ew));
            (sub(&first, &scale(&qsign(dd(x) * dd(y)), &second)), dm(&bd(&ex, &ey), &ew))
        });
        run("ns-lie-2", 3, &|x, y, w| {
            let (ex, ey, ew) = (e(x), e(y), e(w));
            let a1 = add(&dm(&ex, &bd(&ey, &ew)), &bd(&ex, &dcb(y, w)));
            let a2 = add(&dm(&ey, &bd(&ew, &ex)), &bd(&ey, &dcb(w, x)));
            let a3 = add(&dm(&ew, &bd(&ex, &ey)), &bd(&ew, &dcb(x, y)));
            let l = add(
                &add(&a1, &scale(&qsign(dd(x) * (dd(y) + dd(w))), &a2)),
                &scale(&qsign(dd(w) * (dd(x) + dd(y))), &a3),
            );
            (l, zero())
        });
    }
    if kind == "ns-gerstenhaber" {
        run("ns-gerstenhaber-1", 3, &|x, y, w| {
            let l = op("star", &dcb(x, y), &e(w));
            let r = sub(
                &op("diamond", &e(x), &op("star", &e(y), &e(w))),
                &scale(&qsign(dd(x) * dg(y)), &op("star", &e(y), &op("diamond", &e(x), &e(w)))),
            );
            (l, r)
        });
        run("ns-gerstenhaber-2", 3, &|x, y, w| {
            let l = op("diamond", &odot(x, y), &e(w));
            let r = add(
                &op("star", &e(x), &op("diamond", &e(y), &e(w))),
                &scale(&qsign(dg(x) * dg(y)), &op("star", &e(y), &op("diamond", &e(x), &e(w)))),
            );
            (l, r)
        });
        run("ns-gerstenhaber-3", 3, &|x, y, w| {
            let l = add(&op("blackdiamond", &e(x), &odot(y, w)), &op("diamond", &e(x), &op("vee", &e(y), &e(w))));
            let mut r = op("vee", &dcb(x, y), &e(w));
            r = add(&r, &scale(&qsign(dg(w) * (dg(x) + dg(y) + sh)), &op("star", &e(w), &op("blackdiamond", &e(x), &e(y)))));
            let tail = add(&op("vee", &e(y), &dcb(x, w)), &op("star", &e(y), &op("blackdiamond", &e(x), &e(w))));
            r = add(&r, &scale(&qsign(dd(x) * dg(y)), &tail));
            (l, r)
        });
    }
    out
}

/// Coefficientwise deformation check over `k[t]/(t^{m+1})`: one run of the
/// literal identities with power-series constants, then the `t^n` parts are
/// compared separately. Names follow `law@t^n`.
pub fn verify_deformation(d: &algkit::deformations::TruncatedDeformation) -> Vec<(String, Option<Vec<usize>>)> {
    let n = d.space().dim();
    let m = d.order();
    let tz = Trunc(vec![Scalar::zero(); m + 1]);
    let mut tone = tz.clone();
    tone.0[0] = Scalar::one();
    let t: BTreeMap<String, T<Trunc>> = d
        .coefficients()
        .iter()
        .map(|(s, cs)| {
            let tensors: Vec<T<Scalar>> = cs.iter().map(tensor).collect();
            let series = (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| Trunc(tensors.iter().map(|c| c[i][j][k].clone()).collect())).collect()).collect())
                .collect();
            (s.tag().to_string(), series)
        })
        .collect();
    let alg = Alg {
        n,
        zero: tz,
        one: tone,
        t,
    };
    let mut out = Vec::new();
    for (name, arity, f) in alg.identities(d.kind().tag()) {
        for p in 0..=m {
            let fail = first_failure(&vec![n; arity], |tu| {
                let args: Vec<V<Trunc>> = tu.iter().map(|&i| alg.e(i)).collect();
                let (l, r) = f(&args);
                let part = |v: &V<Trunc>| v.iter().map(|c| c.0[p].clone()).collect::<Vec<Scalar>>();
                (part(&l), part(&r))
            });
            out.push((format!("{name}@t^{p}"), fail));
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, |v| v.len());
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !Zero::is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !Zero::is_zero(&rows[i][c]) {
                let f = &rows[i][c] / &pivot;
                let pr = rows[r].clone();
                for (a, b) in rows[i].iter_mut().zip(&pr) {
                    *a -= &f * b;
                }
            }
        }
        r += 1;
    }
    r
}

/// `v ∈ span(gens)` by comparing ranks.
pub fn in_span(gens: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut with = gens.to_vec();
    with.push(v.to_vec());
    rank(gens.to_vec()) == rank(with)
}

/// Filtration conditions by rank tests on the given spanning sets. Level
/// indices past the top mean the whole space. Only the verdict per
/// condition is returned; the engine's tuple indexes echelon bases, which
/// the oracle does not build.
pub fn verify_filtration(a: &Presentation, levels: &[Vec<Vec<Scalar>>]) -> Vec<(String, bool)> {
    let n = a.dim();
    let z = Scalar::zero();
    let top = levels.len() - 1;
    let lv = |k: usize| &levels[k.min(top)];
    let get = |s: &str| tensor(a.product(algkit::Slot::from_tag(s).unwrap()));
    let (pt, st, vt) = (get("prec"), get("succ"), get("vee"));
    let b = |t: &T<Scalar>, x: &V<Scalar>, y: &V<Scalar>| bil(t, n, &z, x, y);
    type F<'f> = Box<dyn Fn(&V<Scalar>, &V<Scalar>) -> V<Scalar> + 'f>;
    let conds: Vec<(&str, usize, F)> = vec![
        ("filtered-succ", 0, Box::new(|x, y| b(&st, x, y))),
        ("filtered-prec", 0, Box::new(|x, y| b(&pt, x, y))),
        ("filtered-vee", 0, Box::new(|x, y| b(&vt, x, y))),
        ("ns-lie-skew", 1, Box::new(|x, y| sub(&b(&st, x, y), &b(&pt, y, x)))),
        ("ns-lie-vee", 1, Box::new(|x, y| b(&vt, x, y))),
    ];
    conds
        .into_iter()
        .map(|(name, shift, f)| {
            let mut ok = true;
            for p in 0..=top {
                for q in 0..=top {
                    for x in lv(p + shift) {
                        for y in lv(q + shift) {
                            if !in_span(lv(p + q + shift), &f(x, y)) {
                                ok = false;
                            }
                        }
                    }
                }
            }
            (name.to_string(), ok)
        })
        .collect()
}
