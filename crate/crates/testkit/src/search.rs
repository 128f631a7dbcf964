//! Small exhaustive searches whose first hits are frozen as examples.
//! Every acceptance test is made with the oracle, never with the engine.

use algkit::deformations::{Filtration, TruncatedDeformation};
use algkit::structures::embed;
use algkit::{Kind, Presentation, Product, Scalar, Slot, Space, Vector};

use crate::examples::*;
use crate::oracle::{self, Alg};

fn all_hold(v: &[(String, Option<Vec<usize>>)]) -> bool {
    v.iter().all(|(_, f)| f.is_none())
}

/// Positions `(i, j, k)` of a square product on `n` elements, row major.
fn positions(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// The NS-commutative algebra that `N = diag(2, −1)` induces on
/// `k[x]/(x^2)`, seen as an NS-pre-Lie algebra.
pub fn ns_pre_lie_base() -> Presentation {
    let ca = truncated_polynomials(2);
    let n = mat(2, &[(1, 1, q(2)), (2, 2, q(-1))]);
    let nsc = algkit::operators::induce_from_nijenhuis(&ca, &n, true).unwrap();
    let nsa = embed(&nsc, Kind::NsAssociative).unwrap();
    embed(&nsa, Kind::NsPreLie).unwrap()
}

/// First order-2 deformation of [`ns_pre_lie_base`] whose `t` coefficient
/// has `▷₁` with entries in {−1, 0, 1}, `◁₁ = ∘₁ = 0`, zero `t²` terms, and a
/// nonzero `▷₁`. Candidates run in base-3 counting order over the row-major
/// entries, digit 0 ↦ 0, 1 ↦ 1, 2 ↦ −1. Returns the hit and the number of
/// candidates tried.
pub fn ns_pre_lie_deformation_search() -> Option<(TruncatedDeformation, usize)> {
    let base = ns_pre_lie_base();
    let pos = positions(2);
    let value = |d: u32| match d {
        0 => q(0),
        1 => q(1),
        _ => q(-1),
    };
    let total = 3usize.pow(pos.len() as u32);
    for code in 1..total {
        let mut rt = Product::square(2);
        let mut c = code;
        for &(i, j, k) in pos.iter().rev() {
            rt.set(i, j, k, value((c % 3) as u32));
            c /= 3;
        }
        let d = TruncatedDeformation::from_base(&base, 2, &[(Slot::Rtri, 1, rt)]).unwrap();
        if all_hold(&oracle::verify_deformation(&d)) {
            return Some((d, code));
        }
    }
    None
}

/// Levels `⟨f0⟩ ⊆ ⟨f0, f1⟩ ⊆ A` on `f0, f1, f2`.
pub fn flag3() -> Filtration {
    let space = Space::new(["f0", "f1", "f2"]).unwrap();
    Filtration::new(
        space,
        &[vec![vecq(&[1, 0, 0])], vec![vecq(&[1, 0, 0]), vecq(&[0, 1, 0])], vec![
            vecq(&[1, 0, 0]),
            vecq(&[0, 1, 0]),
            vecq(&[0, 0, 1]),
        ]],
    )
    .unwrap()
}

fn flag3_levels() -> Vec<Vec<Vec<Scalar>>> {
    flag3()
        .levels()
        .iter()
        .map(|l| l.basis().iter().map(|v: &Vector| v.coords().to_vec()).collect())
        .collect()
}

/// Whether some product of the graded quotient of the standard flag is
/// nonzero: `f_a ≻ f_b` or `f_a ⋎ f_b` with `f_a, f_b` of levels `n+1, m+1`
/// leaving level `n + m + 1`, or the skew parts leaving level `n + m`.
fn graded_nonzero(a: &Presentation, levels: &[Vec<Vec<Scalar>>]) -> bool {
    let top = levels.len() - 1;
    let lv = |k: usize| &levels[k.min(top)];
    let alg = Alg::from_presentation(a);
    for i in 1..a.dim() {
        for j in 1..a.dim() {
            let (n, m) = (i - 1, j - 1);
            let (x, y) = (alg.e(i), alg.e(j));
            let star = alg.succ(&x, &y);
            let vee = alg.vee(&x, &y);
            let dm = oracle::sub(&alg.succ(&x, &y), &alg.prec(&y, &x));
            let bd = oracle::sub(&alg.vee(&x, &y), &alg.vee(&y, &x));
            if !oracle::in_span(lv(n + m + 1), &star)
                || !oracle::in_span(lv(n + m + 1), &vee)
                || !oracle::in_span(lv(n + m), &dm)
                || !oracle::in_span(lv(n + m), &bd)
            {
                return true;
            }
        }
    }
    false
}

/// First NS-associative structure on `f0, f1, f2` with `≻, ≺` supported on
/// `f_i · f_j → f2` for `i, j ∈ {1, 2}` and `⋎` on `f1 ⋎ f1 → f2`, entries
/// in {0, 1}, satisfying the NS-Lie filtration conditions for [`flag3`] and
/// giving a nonzero graded product. Candidates are bitmasks counted up from
/// 1, bit `b` setting the `b`-th support entry (4 of `≻`, 4 of `≺`, then
/// `⋎`). Returns the hit and its mask.
pub fn filtration_search() -> Option<(Presentation, u32)> {
    let support: Vec<(Slot, usize, usize)> = [Slot::Succ, Slot::Prec]
        .into_iter()
        .flat_map(|s| [(s, 1, 1), (s, 1, 2), (s, 2, 1), (s, 2, 2)])
        .chain([(Slot::Vee, 1, 1)])
        .collect();
    let levels = flag3_levels();
    let space = Space::new(["f0", "f1", "f2"]).unwrap();
    for mask in 1u32..(1 << support.len()) {
        let mut ps = [Product::square(3), Product::square(3), Product::square(3)];
        let slot_ix = |s: Slot| match s {
            Slot::Prec => 0,
            Slot::Succ => 1,
            _ => 2,
        };
        for (b, &(s, i, j)) in support.iter().enumerate() {
            if mask & (1 << b) != 0 {
                ps[slot_ix(s)].set(i, j, 2, q(1));
            }
        }
        let [prec, succ, vee] = ps;
        let a = Presentation::new(
            Kind::NsAssociative,
            space.clone(),
            [(Slot::Prec, prec), (Slot::Succ, succ), (Slot::Vee, vee)],
        )
        .unwrap();
        if !all_hold(&oracle::verify_presentation(&a)) {
            continue;
        }
        if !oracle::verify_filtration(&a, &levels).iter().all(|(_, ok)| *ok) {
            continue;
        }
        if graded_nonzero(&a, &levels) {
            return Some((a, mask));
        }
    }
    None
}
