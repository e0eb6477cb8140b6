//! Local data for `f = x^2 + y^2 + 6z^2` and the triangular form `(1,1,6)`.
//!
//! `f` has class number one, so it represents every locally represented
//! integer. This is cited, not re-proved; the scans here connect the local
//! criterion to exact global counts.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::forms::TernaryQuadForm;
use crate::triangular::TriangularTriple;

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i128>;

fn f116() -> TernaryQuadForm {
    TernaryQuadForm::diagonal(1, 1, 6).expect("<1,1,6> is definite")
}

/// `N = 2^s t` with `t` odd.
pub fn two_adic_split(n: u64) -> Result<(u32, u64)> {
    if n == 0 {
        return Err(Error::Precondition("N must be positive"));
    }
    let s = n.trailing_zeros();
    Ok((s, n >> s))
}

/// `2^-k` for `k >= 0`.
fn inv_pow2(k: u32) -> Result<Rational> {
    let d = 1i128
        .checked_shl(k)
        .filter(|&d| d > 0)
        .ok_or(Error::Overflow)?;
    Ok(Rational::new(1, d))
}

/// The 2-adic density `α_2(<1,1,6>, 2^s t)` for `s >= 1` and odd `t`.
pub fn alpha2_116(s: u32, t: u64) -> Result<Rational> {
    if s == 0 {
        return Err(Error::Precondition("s must be positive"));
    }
    if t.is_multiple_of(2) {
        return Err(Error::Precondition("t must be odd"));
    }
    let two = Rational::from_integer(2);
    let three = Rational::from_integer(3);
    Ok(if s.is_multiple_of(2) {
        two - three * inv_pow2(s / 2)?
    } else {
        match t % 8 {
            1 => two - inv_pow2((s - 1) / 2)?,
            5 => two,
            _ => two - three * inv_pow2(s.div_ceil(2))?,
        }
    })
}

/// `α_2(<1,1,6>, N)` for even `N`.
pub fn alpha2_of(n: u64) -> Result<Rational> {
    let (s, t) = two_adic_split(n)?;
    alpha2_116(s, t)
}

/// `r(f, 8n+8) α_2(2n+2) = 2 α_2(8n+8) r(f, 2n+2)`, cross-multiplied.
pub fn siegel_ratio_sides(n: u64) -> Result<(Rational, Rational)> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive"));
    }
    let f = f116();
    let big = Rational::from_integer(f.count(8 * n + 8)? as i128);
    let small = Rational::from_integer(f.count(2 * n + 2)? as i128);
    let lhs = big * alpha2_of(2 * n + 2)?;
    let rhs = Rational::from_integer(2) * alpha2_of(8 * n + 8)? * small;
    Ok((lhs, rhs))
}

pub fn siegel_ratio_check(n: u64) -> Result<bool> {
    let (l, r) = siegel_ratio_sides(n)?;
    Ok(l == r)
}

/// `(2 α_2(8n+8), α_2(2n+2))`; the first is strictly larger.
pub fn alpha2_inequality_sides(n: u64) -> Result<(Rational, Rational)> {
    Ok((
        Rational::from_integer(2) * alpha2_of(8 * n + 8)?,
        alpha2_of(2 * n + 2)?,
    ))
}

pub fn alpha2_inequality_check(n: u64) -> Result<bool> {
    let (l, r) = alpha2_inequality_sides(n)?;
    Ok(l > r)
}

/// Whether `n ≡ 2·3^(2r-1) - 1 (mod 3^(2r))` for some `r >= 1`.
///
/// Once `9^r > 9(n+1)` the residue exceeds `n`, so no larger `r` can match.
pub fn is_excluded_116(n: u64) -> bool {
    let bound = 9 * (n as u128 + 1);
    let mut modulus: u128 = 9;
    while modulus <= bound {
        let residue = 2 * (modulus / 3) - 1;
        if n as u128 % modulus == residue {
            return true;
        }
        modulus *= 9;
    }
    false
}

/// `(1,1,6)` represents `n` exactly when `n` is not excluded.
pub fn representability_check_116(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive"));
    }
    let tt = TriangularTriple::new(1, 1, 6)?;
    Ok(tt.is_represented(n)? != is_excluded_116(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i128, d: i128) -> Rational {
        Rational::new(p, d)
    }

    #[test]
    fn alpha2_examples() {
        assert_eq!(alpha2_116(2, 1).unwrap(), q(1, 2));
        assert_eq!(alpha2_116(3, 1).unwrap(), q(3, 2));
        assert_eq!(alpha2_116(1, 5).unwrap(), q(2, 1));
        assert_eq!(alpha2_116(1, 3).unwrap(), q(1, 2));
        assert_eq!(alpha2_116(1, 1).unwrap(), q(1, 1));
        assert_eq!(alpha2_of(4).unwrap(), q(1, 2));
        assert_eq!(alpha2_of(8).unwrap(), q(3, 2));
        assert_eq!(alpha2_of(10).unwrap(), q(2, 1));
        assert!(alpha2_116(0, 1).is_err());
        assert!(alpha2_116(1, 2).is_err());
        assert!(alpha2_of(7).is_err());
    }

    #[test]
    fn split_examples() {
        assert_eq!(two_adic_split(8).unwrap(), (3, 1));
        assert_eq!(two_adic_split(18).unwrap(), (1, 9));
        assert_eq!(two_adic_split(7).unwrap(), (0, 7));
        assert!(two_adic_split(0).is_err());
    }

    #[test]
    fn siegel_ratio_examples() {
        // r(f,16) = 20, r(f,4) = 4; r(f,40) = 32, r(f,10) = 16; n = 5 has both 0
        assert_eq!(siegel_ratio_sides(1).unwrap(), (q(10, 1), q(10, 1)));
        assert!(siegel_ratio_check(4).unwrap());
        assert_eq!(siegel_ratio_sides(5).unwrap().0, q(0, 1));
        assert!(siegel_ratio_check(5).unwrap());
        assert!(siegel_ratio_check(0).is_err());
    }

    #[test]
    fn inequality_small_n() {
        for n in 1..=500 {
            assert!(alpha2_inequality_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn exclusion_examples() {
        assert!(is_excluded_116(5));
        assert!(is_excluded_116(14));
        assert!(is_excluded_116(53));
        assert!(!is_excluded_116(4));
        assert!(!is_excluded_116(0));
        assert!(!is_excluded_116(1));
    }

    #[test]
    fn representability_examples() {
        for n in [4, 5, 14, 53] {
            assert!(representability_check_116(n).unwrap(), "n={n}");
        }
        let tt = TriangularTriple::new(1, 1, 6).unwrap();
        assert_eq!(tt.count_direct(5).unwrap(), 0);
        assert_eq!(tt.count_direct(4).unwrap(), 16);
        assert_eq!(tt.count_direct(14).unwrap(), 0);
    }
}
