//! Rewrites `t(a,b,c;n)` as a representation count of an explicit subform
//! of `<a,b,c>` (or a difference of two counts when `8 | a+b+c`).
//!
//! With `S = a + b + c` and `f = <a,b,c>` after a reordering:
//!
//! | condition                            | value                                   |
//! |--------------------------------------|-----------------------------------------|
//! | `S` odd, `a ≡ b ≡ c (mod 4)`         | `r(f, 8n+S)`                            |
//! | `S` odd, otherwise                   | `r(f(x,x-2y,x-2z), 8n+S)`               |
//! | `S ≡ 2 (4)`, `c ≡ 4 (8)`             | `r(f, 8n+S)`                            |
//! | `S ≡ 2 (4)`, `c ≢ 4 (8)`             | `r(f(x,y,y-2z), 8n+S)`                  |
//! | `S ≡ 4 (8)`, `c ≡ 2 (4)`             | `2 r(f(x,x-4y,z), 8n+S)`                |
//! | `S ≡ 4 (8)`, `c ≡ 0 (4)`             | `2 r(f(x,x-4y,x-2z), 8n+S)`             |
//! | `S ≡ 0 (8)`                          | `r(f(x,x-2y,x-2z), 8n+S) - r(f, 2n+S/4)` |
//!
//! For odd `S` the reordering puts an odd coefficient first; for even `S`
//! it puts the two odd coefficients first.

use core::fmt;

use crate::error::{Error, Result};
use crate::forms::TernaryQuadForm;
use crate::report::{Record, VerificationReport};
use crate::triangular::TriangularTriple;

const IDENTITY: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
/// `(x, y, z) -> (x, x-2y, x-2z)`
const SUB_X_2Y_2Z: [[i64; 3]; 3] = [[1, 0, 0], [1, -2, 0], [1, 0, -2]];
/// `(x, y, z) -> (x, y, y-2z)`
const SUB_Y_2Z: [[i64; 3]; 3] = [[1, 0, 0], [0, 1, 0], [0, 1, -2]];
/// `(x, y, z) -> (x, x-4y, z)`
const SUB_X_4Y: [[i64; 3]; 3] = [[1, 0, 0], [1, -4, 0], [0, 0, 1]];
/// `(x, y, z) -> (x, x-4y, x-2z)`
const SUB_X_4Y_2Z: [[i64; 3]; 3] = [[1, 0, 0], [1, -4, 0], [1, 0, -2]];

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Which case of the reduction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    OddUniform,
    OddMixed,
    TwoModFourCFourModEight,
    TwoModFourCOther,
    FourModEightCTwoModFour,
    FourModEightCZeroModFour,
    ZeroModEight,
}

impl Branch {
    pub const ALL: [Branch; 7] = [
        Branch::OddUniform,
        Branch::OddMixed,
        Branch::TwoModFourCFourModEight,
        Branch::TwoModFourCOther,
        Branch::FourModEightCTwoModFour,
        Branch::FourModEightCZeroModFour,
        Branch::ZeroModEight,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Branch::OddUniform => "S odd, a=b=c mod 4",
            Branch::OddMixed => "S odd",
            Branch::TwoModFourCFourModEight => "S=2 mod 4, c=4 mod 8",
            Branch::TwoModFourCOther => "S=2 mod 4, c!=4 mod 8",
            Branch::FourModEightCTwoModFour => "S=4 mod 8, c=2 mod 4",
            Branch::FourModEightCZeroModFour => "S=4 mod 8, c=0 mod 4",
            Branch::ZeroModEight => "S=0 mod 8",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    /// `multiplier * r(form, 8n + S)`
    SingleCount {
        form: TernaryQuadForm,
        multiplier: u64,
    },
    /// `r(plus, 8n + S) - r(minus, 2n + S/4)`
    Difference {
        plus: TernaryQuadForm,
        minus: TernaryQuadForm,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionFormula {
    /// The triple as given.
    pub input: TriangularTriple,
    /// The reordering applied before the case split:
    /// `ordered[i] = input[permutation[i]]`.
    pub permutation: [usize; 3],
    pub ordered: TriangularTriple,
    pub branch: Branch,
    pub kind: ReductionKind,
}

impl ReductionFormula {
    /// `S = a + b + c`.
    pub fn sum(&self) -> u64 {
        self.input.sum()
    }

    /// The formula's value at `n`; equals `t(a,b,c;n)` for `n >= 1`.
    pub fn evaluate(&self, n: u64) -> Result<i128> {
        let s = self.sum();
        let big = n
            .checked_mul(8)
            .and_then(|t| t.checked_add(s))
            .ok_or(Error::Overflow)?;
        match self.kind {
            ReductionKind::SingleCount { form, multiplier } => {
                Ok(multiplier as i128 * form.count(big)? as i128)
            }
            ReductionKind::Difference { plus, minus } => {
                let small = 2 * n + s / 4;
                Ok(plus.count(big)? as i128 - minus.count(small)? as i128)
            }
        }
    }
}

/// One line, e.g. `t(1,1,6;n) = r(8x^2+4y^2+24z^2-24xz-4xy, 8n+8) - r(x^2+y^2+6z^2, 2n+2)`.
impl fmt::Display for ReductionFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.input.coefficients();
        let s = self.sum();
        write!(f, "t({a},{b},{c};n)")?;
        if self.ordered != self.input {
            let [a, b, c] = self.ordered.coefficients();
            write!(f, " = t({a},{b},{c};n)")?;
        }
        match self.kind {
            ReductionKind::SingleCount { form, multiplier } => {
                f.write_str(" = ")?;
                if multiplier != 1 {
                    write!(f, "{multiplier}")?;
                }
                write!(f, "r({}, 8n+{s})", form.polynomial())?;
            }
            ReductionKind::Difference { plus, minus } => {
                write!(
                    f,
                    " = r({}, 8n+{s}) - r({}, 2n+{})",
                    plus.polynomial(),
                    minus.polynomial(),
                    s / 4
                )?;
            }
        }
        write!(f, "  [{}]", self.branch.label())
    }
}

fn hypotheses_hold(t: &[u64; 3], s_odd: bool) -> bool {
    if s_odd {
        t[0] % 2 == 1
    } else {
        t[0] % 2 == 1 && t[1] % 2 == 1 && t[2].is_multiple_of(2)
    }
}

/// Case analysis for `t(a,b,c;n)`. The reordering is the lexicographically
/// smallest one meeting the parity hypotheses.
pub fn reduce(tt: &TriangularTriple) -> Result<ReductionFormula> {
    let coeffs = tt.coefficients();
    let s = tt.sum();
    let s_odd = s % 2 == 1;
    let (permutation, ordered) = PERMUTATIONS
        .iter()
        .map(|&p| (p, [coeffs[p[0]], coeffs[p[1]], coeffs[p[2]]]))
        .filter(|(_, t)| hypotheses_hold(t, s_odd))
        .min_by_key(|&(p, t)| (t, p))
        .ok_or(Error::Precondition(
            "no ordering meets the parity hypotheses",
        ))?;
    let ordered_tt = tt.permuted(permutation);
    let f = ordered_tt.diagonal_form();
    let [a, b, c] = ordered;

    let single = |m: &[[i64; 3]; 3], multiplier: u64| -> Result<ReductionKind> {
        Ok(ReductionKind::SingleCount {
            form: f.substitute(m)?,
            multiplier,
        })
    };
    let (branch, kind) = if s_odd {
        if a % 4 == b % 4 && b % 4 == c % 4 {
            (Branch::OddUniform, single(&IDENTITY, 1)?)
        } else {
            (Branch::OddMixed, single(&SUB_X_2Y_2Z, 1)?)
        }
    } else if s % 4 == 2 {
        if c % 8 == 4 {
            (Branch::TwoModFourCFourModEight, single(&IDENTITY, 1)?)
        } else {
            (Branch::TwoModFourCOther, single(&SUB_Y_2Z, 1)?)
        }
    } else if s % 8 == 4 {
        if c % 4 == 2 {
            (Branch::FourModEightCTwoModFour, single(&SUB_X_4Y, 2)?)
        } else {
            (Branch::FourModEightCZeroModFour, single(&SUB_X_4Y_2Z, 2)?)
        }
    } else {
        (
            Branch::ZeroModEight,
            ReductionKind::Difference {
                plus: f.substitute(&SUB_X_2Y_2Z)?,
                minus: f.substitute(&IDENTITY)?,
            },
        )
    };
    Ok(ReductionFormula {
        input: *tt,
        permutation,
        ordered: ordered_tt,
        branch,
        kind,
    })
}

/// Compares the reduction against `t_direct` for `1 <= n <= n_max`.
/// Records are tagged `lemma21` (odd `S`) or `lemma22` (even `S`).
pub fn verify_reduction(tt: &TriangularTriple, n_max: u64) -> Result<VerificationReport> {
    let formula = reduce(tt)?;
    let identity = if tt.sum() % 2 == 1 {
        "lemma21"
    } else {
        "lemma22"
    };
    (1..=n_max)
        .map(|n| {
            let lhs = tt.count_direct(n)? as i128;
            let rhs = formula.evaluate(n)?;
            Ok(Record::equality(
                identity,
                Some(tt.coefficients()),
                n,
                lhs,
                rhs,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn tt(a: u64, b: u64, c: u64) -> TriangularTriple {
        TriangularTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn odd_uniform_case() {
        let r = reduce(&tt(1, 1, 1)).unwrap();
        assert_eq!(r.branch, Branch::OddUniform);
        assert_eq!(
            r.kind,
            ReductionKind::SingleCount {
                form: TernaryQuadForm::diagonal(1, 1, 1).unwrap(),
                multiplier: 1
            }
        );
        assert_eq!(r.sum(), 3);
    }

    #[test]
    fn even_case_reorders_odd_coefficients_first() {
        let r = reduce(&tt(1, 2, 15)).unwrap();
        assert_eq!(r.ordered.coefficients(), [1, 15, 2]);
        assert_eq!(r.permutation, [0, 2, 1]);
        assert_eq!(r.branch, Branch::TwoModFourCOther);
        let f = TernaryQuadForm::diagonal(1, 15, 2).unwrap();
        assert_eq!(
            r.kind,
            ReductionKind::SingleCount {
                form: f.substitute(&SUB_Y_2Z).unwrap(),
                multiplier: 1
            }
        );
    }

    #[test]
    fn difference_case() {
        let r = reduce(&tt(1, 1, 6)).unwrap();
        assert_eq!(r.branch, Branch::ZeroModEight);
        assert_eq!(
            r.kind,
            ReductionKind::Difference {
                plus: TernaryQuadForm::new(8, 4, 24, 0, -24, -4).unwrap(),
                minus: TernaryQuadForm::diagonal(1, 1, 6).unwrap(),
            }
        );
        let text = format!("{r}");
        assert!(text
            .starts_with("t(1,1,6;n) = r(8x^2+4y^2+24z^2-24xz-4xy, 8n+8) - r(x^2+y^2+6z^2, 2n+2)"));
    }

    #[test]
    fn verify_examples() {
        for t in [tt(1, 1, 1), tt(1, 1, 6), tt(2, 3, 3)] {
            let report = verify_reduction(&t, 100).unwrap();
            assert_eq!(report.len(), 100);
            assert!(report.all_pass(), "{t}: {:?}", report.failures().next());
        }
        assert_eq!(
            reduce(&tt(2, 3, 3)).unwrap().ordered.coefficients(),
            [3, 3, 2]
        );
    }

    #[test]
    fn every_branch_is_reachable_and_correct() {
        let cases = [
            (tt(1, 1, 1), Branch::OddUniform),
            (tt(1, 2, 4), Branch::OddMixed),
            (tt(1, 1, 4), Branch::TwoModFourCFourModEight),
            (tt(1, 1, 8), Branch::TwoModFourCOther),
            (tt(1, 2, 15), Branch::TwoModFourCOther),
            (tt(1, 1, 2), Branch::FourModEightCTwoModFour),
            (tt(1, 3, 8), Branch::FourModEightCZeroModFour),
            (tt(3, 3, 2), Branch::ZeroModEight),
        ];
        for (t, branch) in cases {
            let r = reduce(&t).unwrap();
            assert_eq!(r.branch, branch, "{t}");
            for n in 1..=60 {
                assert_eq!(
                    r.evaluate(n).unwrap(),
                    t.count_direct(n).unwrap() as i128,
                    "{t} n={n}"
                );
            }
        }
    }

    #[test]
    fn permutation_stable_values() {
        let base = tt(3, 10, 7);
        let expected: alloc::vec::Vec<_> = (1..=40)
            .map(|n| reduce(&base).unwrap().evaluate(n).unwrap())
            .collect();
        for p in PERMUTATIONS {
            let r = reduce(&base.permuted(p)).unwrap();
            assert_eq!(r.ordered, reduce(&base).unwrap().ordered);
            let got: alloc::vec::Vec<_> = (1..=40).map(|n| r.evaluate(n).unwrap()).collect();
            assert_eq!(got, expected);
        }
    }
}
