//! Ternary sums of triangular numbers `aT_x + bT_y + cT_z` with
//! `T_x = x(x-1)/2`.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::forms::{ParityClass, TernaryQuadForm, MAX_TARGET};

/// `T_x = x(x-1)/2`. `T_x = T_{1-x}`, so every integer index is allowed.
pub fn triangular_number(x: i64) -> Result<u64> {
    let x = x as i128;
    let t = x * (x - 1) / 2;
    u64::try_from(t).map_err(|_| Error::Overflow)
}

/// Largest `k >= 1` with `T_k <= m`. The indices with `T_x <= m` are then
/// exactly `1-k ..= k`.
fn triangular_index_bound(m: u64) -> i64 {
    // T_k <= m  <=>  (2k-1)^2 <= 8m+1
    let s = (8 * m as u128 + 1).isqrt() as i64;
    (s + 1) / 2
}

/// If `m = T_x` for some `x`, the positive index `x >= 1`.
fn triangular_root(m: u64) -> Option<i64> {
    let d = 8 * m as u128 + 1;
    let s = d.isqrt();
    (s * s == d).then(|| s.div_ceil(2) as i64)
}

/// Coefficients `(a, b, c)` of `aT_x + bT_y + cT_z`: positive with
/// `gcd(a, b, c) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangularTriple {
    a: u64,
    b: u64,
    c: u64,
}

impl TriangularTriple {
    /// Rejects a common factor instead of dividing it out.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::ZeroCoefficient);
        }
        if gcd(gcd(a, b), c) != 1 {
            return Err(Error::NotCoprime { a, b, c });
        }
        if a.max(b).max(c) > crate::forms::MAX_COEFFICIENT as u64 {
            return Err(Error::OutOfRange("triangular coefficient exceeds 10^6"));
        }
        Ok(TriangularTriple { a, b, c })
    }

    pub fn coefficients(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// `a + b + c`.
    pub fn sum(&self) -> u64 {
        self.a + self.b + self.c
    }

    /// `<a, b, c>`.
    pub fn diagonal_form(&self) -> TernaryQuadForm {
        TernaryQuadForm::diagonal(self.a as i64, self.b as i64, self.c as i64)
            .expect("positive bounded coefficients give a definite form")
    }

    /// The same coefficients reordered by `perm` (`result[i] = self[perm[i]]`).
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        let c = self.coefficients();
        TriangularTriple {
            a: c[perm[0]],
            b: c[perm[1]],
            c: c[perm[2]],
        }
    }

    /// `aT_x + bT_y + cT_z`.
    pub fn eval(&self, v: &[i64; 3]) -> Result<u64> {
        let mut acc = 0u64;
        for (k, &x) in self.coefficients().iter().zip(v) {
            let t = k
                .checked_mul(triangular_number(x)?)
                .ok_or(Error::Overflow)?;
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }

    /// `t(a,b,c;n)` by direct enumeration. `z` and `y` run over every index
    /// whose term fits under `n`; `x` comes from the triangular root of
    /// what is left, which contributes the pair `x, 1-x`.
    pub fn count_direct(&self, n: u64) -> Result<u64> {
        if n > MAX_TARGET {
            return Err(Error::OutOfRange("target exceeds 10^9"));
        }
        let mut count = 0u64;
        let kz = triangular_index_bound(n / self.c);
        for z in 1 - kz..=kz {
            let rest_z = n - self.c * triangular_number(z)?;
            let ky = triangular_index_bound(rest_z / self.b);
            for y in 1 - ky..=ky {
                let rest = rest_z - self.b * triangular_number(y)?;
                if rest.is_multiple_of(self.a) && triangular_root(rest / self.a).is_some() {
                    count += 2;
                }
            }
        }
        Ok(count)
    }

    /// Whether `t(a,b,c;n) > 0`, stopping at the first solution. Only
    /// nonnegative-branch indices are scanned since `T_x = T_{1-x}`.
    pub fn is_represented(&self, n: u64) -> Result<bool> {
        if n > MAX_TARGET {
            return Err(Error::OutOfRange("target exceeds 10^9"));
        }
        let kz = triangular_index_bound(n / self.c);
        for z in 1..=kz {
            let rest_z = n - self.c * triangular_number(z)?;
            let ky = triangular_index_bound(rest_z / self.b);
            for y in 1..=ky {
                let rest = rest_z - self.b * triangular_number(y)?;
                if rest.is_multiple_of(self.a) && triangular_root(rest / self.a).is_some() {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// `t(a,b,c;n)` as the number of all-odd solutions of
    /// `ax^2 + by^2 + cz^2 = 8n + a + b + c` (the change of variables
    /// `x -> 2x - 1`).
    pub fn count_via_forms(&self, n: u64) -> Result<u64> {
        let target = n
            .checked_mul(8)
            .and_then(|t| t.checked_add(self.sum()))
            .ok_or(Error::Overflow)?;
        self.diagonal_form()
            .count_parity(target, ParityClass::new([1, 1, 1])?)
    }
}

impl fmt::Display for TriangularTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Accepts `a,b,c` with optional surrounding parentheses.
impl FromStr for TriangularTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = s.split(',').map(|t| t.trim().parse::<u64>());
        match (it.next(), it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), Some(Ok(c)), None) => TriangularTriple::new(a, b, c),
            _ => Err(Error::Parse(
                "expected a triple \"a,b,c\" of positive integers",
            )),
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `t(a,b,c;n)` by direct enumeration.
pub fn t_direct(tt: &TriangularTriple, n: u64) -> Result<u64> {
    tt.count_direct(n)
}

/// `t(a,b,c;n)` as `r_(1,1,1)(<a,b,c>, 8n+a+b+c)`.
pub fn t_via_forms(tt: &TriangularTriple, n: u64) -> Result<u64> {
    tt.count_via_forms(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(a: u64, b: u64, c: u64) -> TriangularTriple {
        TriangularTriple::new(a, b, c).unwrap()
    }

    /// Cube scan over indices with `T_x <= n`; independent of both counters.
    fn brute(tt: &TriangularTriple, n: u64) -> u64 {
        let k = (2 * n as i64).isqrt() + 2;
        let mut c = 0;
        for x in -k..=k + 1 {
            for y in -k..=k + 1 {
                for z in -k..=k + 1 {
                    if tt.eval(&[x, y, z]).unwrap() == n {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn triangular_numbers() {
        assert_eq!(triangular_number(3).unwrap(), 3);
        assert_eq!(triangular_number(1).unwrap(), 0);
        assert_eq!(triangular_number(-1).unwrap(), 1);
        for x in -50..50 {
            assert_eq!(
                triangular_number(x).unwrap(),
                triangular_number(1 - x).unwrap()
            );
        }
        let first: alloc::vec::Vec<_> = (1..=6).map(|x| triangular_number(x).unwrap()).collect();
        assert_eq!(first, [0, 1, 3, 6, 10, 15]);
    }

    #[test]
    fn index_bound_is_tight() {
        for m in 0..500u64 {
            let k = triangular_index_bound(m);
            assert!(triangular_number(k).unwrap() <= m);
            assert!(triangular_number(k + 1).unwrap() > m);
        }
    }

    #[test]
    fn direct_examples() {
        for t in [tt(1, 1, 1), tt(2, 3, 5), tt(7, 15, 105)] {
            assert_eq!(t_direct(&t, 0).unwrap(), 8);
        }
        assert_eq!(t_direct(&tt(1, 1, 1), 1).unwrap(), 24);
        assert_eq!(t_direct(&tt(1, 1, 7), 1).unwrap(), 16);
        assert_eq!(t_direct(&tt(1, 1, 6), 5).unwrap(), 0);
    }

    #[test]
    fn via_forms_examples() {
        assert_eq!(t_via_forms(&tt(1, 1, 1), 1).unwrap(), 24);
        assert_eq!(t_via_forms(&tt(1, 3, 5), 0).unwrap(), 8);
        assert_eq!(t_via_forms(&tt(1, 1, 6), 5).unwrap(), 0);
    }

    #[test]
    fn both_counters_match_cube_scan() {
        for t in [
            tt(1, 1, 1),
            tt(1, 2, 3),
            tt(1, 1, 6),
            tt(2, 3, 5),
            tt(3, 5, 7),
        ] {
            for n in 0..=40 {
                let b = brute(&t, n);
                assert_eq!(t_direct(&t, n).unwrap(), b, "{t} n={n}");
                assert_eq!(t_via_forms(&t, n).unwrap(), b, "{t} n={n}");
                assert_eq!(t.is_represented(n).unwrap(), b > 0, "{t} n={n}");
            }
        }
    }

    #[test]
    fn gcd_is_rejected() {
        assert_eq!(
            TriangularTriple::new(2, 4, 6),
            Err(Error::NotCoprime { a: 2, b: 4, c: 6 })
        );
        assert_eq!(TriangularTriple::new(0, 1, 1), Err(Error::ZeroCoefficient));
        assert!(TriangularTriple::new(2, 4, 7).is_ok());
    }

    #[test]
    fn parse() {
        assert_eq!("1,2,15".parse::<TriangularTriple>().unwrap(), tt(1, 2, 15));
        assert_eq!(
            "(5, 9, 15)".parse::<TriangularTriple>().unwrap(),
            tt(5, 9, 15)
        );
        assert!("1,2".parse::<TriangularTriple>().is_err());
        assert!("3,6,9".parse::<TriangularTriple>().is_err());
    }
}
