use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{BinaryQuadForm, ParityClass};
use crate::triangular::gcd;

/// The three restricted-count identities for `x^2 + 3y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lemma31 {
    /// `m ≡ 1 (4)`: `2 r_(1,0)(m) = r_(1,1)(4m)`
    I,
    /// `m ≡ 3 (4)`: `2 r_(0,1)(m) = r_(1,1)(4m)`
    II,
    /// `m ≡ 4 (8)`: `2 r_(0,0)(m) = r_(1,1)(m)`
    III,
}

impl Lemma31 {
    pub const ALL: [Lemma31; 3] = [Lemma31::I, Lemma31::II, Lemma31::III];

    pub fn admits(&self, m: u64) -> bool {
        m > 0
            && match self {
                Lemma31::I => m % 4 == 1,
                Lemma31::II => m % 4 == 3,
                Lemma31::III => m % 8 == 4,
            }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Lemma31::I => "i",
            Lemma31::II => "ii",
            Lemma31::III => "iii",
        }
    }
}

fn x2_3y2() -> BinaryQuadForm {
    BinaryQuadForm::diagonal(1, 3).expect("x^2+3y^2 is definite")
}

fn odd_odd() -> ParityClass<2> {
    ParityClass::new([1, 1]).expect("valid parity")
}

/// `(2 r_d(x^2+3y^2, m), r_(1,1)(x^2+3y^2, m'))` for the variant's `d` and `m'`.
pub fn lemma31_sides(variant: Lemma31, m: u64) -> Result<(u64, u64)> {
    if !variant.admits(m) {
        return Err(Error::Precondition(
            "m is outside the lemma's residue class",
        ));
    }
    let f = x2_3y2();
    let (d, target) = match variant {
        Lemma31::I => ([1, 0], 4 * m),
        Lemma31::II => ([0, 1], 4 * m),
        Lemma31::III => ([0, 0], m),
    };
    let lhs = 2 * f.count_parity(m, ParityClass::new(d)?)?;
    let rhs = f.count_parity(target, odd_odd())?;
    Ok((lhs, rhs))
}

pub fn lemma31_check(variant: Lemma31, m: u64) -> Result<bool> {
    let (l, r) = lemma31_sides(variant, m)?;
    Ok(l == r)
}

/// The pairs for which `r_(1,1)(ax^2+by^2, m) = r_(1,1)(ax^2+by^2, 4m)` for
/// every `m ≡ 0 (8)`.
pub const LEMMA32_EQUALITY_PAIRS: [(u64, u64); 3] = [(3, 5), (1, 7), (1, 15)];

fn lemma32_admissible(a: u64, b: u64) -> bool {
    a % 2 == 1 && b % 2 == 1 && a < b && gcd(a, b) == 1 && (a + b).is_multiple_of(8)
}

/// Odd coprime `a < b` with `8 | a + b` and `a + b <= max_sum`.
pub fn lemma32_admissible_pairs(max_sum: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for s in (8..=max_sum).step_by(8) {
        for a in (1..s / 2).step_by(2) {
            if lemma32_admissible(a, s - a) {
                out.push((a, s - a));
            }
        }
    }
    out
}

/// `(r_(1,1)(ax^2+by^2, m), r_(1,1)(ax^2+by^2, 4m))`.
pub fn lemma32_sides(a: u64, b: u64, m: u64) -> Result<(u64, u64)> {
    if !lemma32_admissible(a, b) {
        return Err(Error::Precondition(
            "need odd coprime a < b with a + b ≡ 0 (mod 8)",
        ));
    }
    if !m.is_multiple_of(8) {
        return Err(Error::Precondition("m must be divisible by 8"));
    }
    let f = BinaryQuadForm::diagonal(a as i64, b as i64)?;
    Ok((
        f.count_parity(m, odd_odd())?,
        f.count_parity(4 * m, odd_odd())?,
    ))
}

pub fn lemma32_check(a: u64, b: u64, m: u64) -> Result<bool> {
    let (l, r) = lemma32_sides(a, b, m)?;
    Ok(l == r)
}

/// Smallest `m ≡ 0 (8)` with `8 <= m <= m_max` where the two counts differ.
pub fn lemma32_counterexample_search(a: u64, b: u64, m_max: u64) -> Result<Option<u64>> {
    for m in (8..=m_max).step_by(8) {
        if !lemma32_check(a, b, m)? {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
