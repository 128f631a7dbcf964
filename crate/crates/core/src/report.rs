//! Verification reports and the exhaustive tuple checker behind them.

use rayon::prelude::*;

use crate::linalg::{render_with, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
        }
    }
}

/// The lexicographically smallest tuple on which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: Vector,
    pub rhs: Vector,
    /// Names of the coordinates of `lhs` and `rhs`.
    pub coords: Vec<String>,
}

impl Counterexample {
    pub fn render_lhs(&self) -> String {
        render_with(&self.coords, &self.lhs)
    }

    pub fn render_rhs(&self) -> String {
        render_with(&self.coords, &self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: String,
    pub tuples: usize,
    pub counterexample: Option<Counterexample>,
}

impl IdentityResult {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub results: Vec<IdentityResult>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            results: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn status(&self) -> Status {
        if self.holds() {
            Status::Holds
        } else {
            Status::Fails
        }
    }

    pub fn holds(&self) -> bool {
        self.results.iter().all(IdentityResult::holds)
    }

    pub fn first_failure(&self) -> Option<&IdentityResult> {
        self.results.iter().find(|r| !r.holds())
    }

    pub fn result(&self, name: &str) -> Option<&IdentityResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn push(&mut self, r: IdentityResult) {
        self.results.push(r);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Appends the results of `other`, prefixing identity names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut r in other.results {
            r.name = format!("{prefix}{}", r.name);
            self.results.push(r);
        }
        self.notes.extend(other.notes);
    }
}

fn decode(mut idx: usize, dims: &[usize], out: &mut [usize]) {
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
}

/// Checks `lhs == rhs` on every tuple of the product index set, in
/// parallel. The reported counterexample is the first failure in
/// lexicographic order regardless of scheduling.
///
/// `axes[p]` names the basis used at tuple position `p`; `coords` names the
/// coordinates of the values.
pub fn check_identity<F>(name: impl Into<String>, axes: &[&[String]], coords: &[String], f: F) -> IdentityResult
where
    F: Fn(&[usize]) -> (Vector, Vector) + Sync,
{
    let dims: Vec<usize> = axes.iter().map(|a| a.len()).collect();
    let total: usize = dims.iter().product();
    let arity = dims.len();
    let fails = |idx: usize| {
        let mut t = vec![0; arity];
        decode(idx, &dims, &mut t);
        let (l, r) = f(&t);
        l != r
    };
    let found = (0..total).into_par_iter().find_first(|&i| fails(i));
    let counterexample = found.map(|idx| {
        let mut tuple = vec![0; arity];
        decode(idx, &dims, &mut tuple);
        let (lhs, rhs) = f(&tuple);
        Counterexample {
            labels: tuple.iter().zip(axes).map(|(&i, a)| a[i].clone()).collect(),
            tuple,
            lhs,
            rhs,
            coords: coords.to_vec(),
        }
    });
    IdentityResult {
        name: name.into(),
        tuples: total,
        counterexample,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn smallest_failing_tuple_is_reported() {
        let names: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
        let coords = vec!["c".to_string()];
        let r = check_identity("t", &[&names, &names], &coords, |t| {
            let l = Vector::from_vec(vec![int((t[0] * t[1]) as i64)]);
            let r = Vector::from_vec(vec![int(if t == [3, 1] || t == [2, 3] { -1 } else { (t[0] * t[1]) as i64 })]);
            (l, r)
        });
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.tuple, vec![2, 3]);
        assert_eq!(ce.labels, vec!["v2", "v3"]);
        assert_eq!(r.tuples, 16);
    }
}
