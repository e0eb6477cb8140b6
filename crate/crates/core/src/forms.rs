//! Positive definite binary and ternary integral forms and exact lattice
//! point enumeration on their level sets.
//!
//! Forms store their literal polynomial coefficients: `q12` is the whole
//! coefficient of `xy`, so the Gram matrix is half-integral. Internally the
//! enumeration works with the doubled Gram matrix `A = 2G`, which is integral.
//!
//! Enumeration completes the square twice. The outer loop runs over the `z`
//! values allowed by the ellipsoid, the middle loop over the `y` values for
//! which the quadratic in `x` has a real root, and `x` is recovered from an
//! exact integer square root of the discriminant.

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported absolute value of a form coefficient.
pub const MAX_COEFFICIENT: i64 = 1_000_000;
/// Largest supported representation target.
pub const MAX_TARGET: u64 = 1_000_000_000;

pub type SolutionTriple = [i64; 3];

macro_rules! ck {
    ($e:expr) => {
        $e.ok_or(Error::Overflow)?
    };
}

/// Residues mod 2 imposed coordinate-wise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityClass<const D: usize>([u8; D]);

impl<const D: usize> ParityClass<D> {
    pub fn new(d: [u8; D]) -> Result<Self> {
        if d.iter().any(|&e| e > 1) {
            return Err(Error::Precondition("parity entries must be 0 or 1"));
        }
        Ok(ParityClass(d))
    }

    pub fn entries(&self) -> [u8; D] {
        self.0
    }

    pub fn matches(&self, v: &[i64; D]) -> bool {
        v.iter()
            .zip(self.0)
            .all(|(x, d)| x.rem_euclid(2) as u8 == d)
    }

    /// All `2^D` classes in lexicographic order.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..1u32 << D).map(|bits| {
            let mut d = [0u8; D];
            for (i, e) in d.iter_mut().enumerate() {
                *e = ((bits >> (D - 1 - i)) & 1) as u8;
            }
            ParityClass(d)
        })
    }
}

impl<const D: usize> FromStr for ParityClass<D> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut d = [0u8; D];
        let mut parts = s.split(',');
        for e in d.iter_mut() {
            *e = match parts.next().map(str::trim) {
                Some("0") => 0,
                Some("1") => 1,
                _ => return Err(Error::Parse("parity class entries must be 0 or 1")),
            };
        }
        if parts.next().is_some() {
            return Err(Error::Parse("too many parity entries"));
        }
        Ok(ParityClass(d))
    }
}

impl<const D: usize> fmt::Display for ParityClass<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `coeffs · v ≡ residue (mod modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearCongruence<const D: usize> {
    coeffs: [i64; D],
    modulus: i64,
    residue: i64,
}

impl<const D: usize> LinearCongruence<D> {
    /// The residue is reduced into `[0, modulus)`.
    pub fn new(coeffs: [i64; D], modulus: i64, residue: i64) -> Result<Self> {
        if modulus < 1 {
            return Err(Error::Precondition("congruence modulus must be positive"));
        }
        Ok(LinearCongruence {
            coeffs,
            modulus,
            residue: residue.rem_euclid(modulus),
        })
    }

    pub fn coeffs(&self) -> [i64; D] {
        self.coeffs
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn residue(&self) -> i64 {
        self.residue
    }

    pub fn matches(&self, v: &[i64; D]) -> bool {
        let m = self.modulus as i128;
        let s: i128 = self
            .coeffs
            .iter()
            .zip(v)
            .map(|(&c, &x)| (c as i128 * x as i128).rem_euclid(m))
            .sum();
        s.rem_euclid(m) == self.residue as i128
    }
}

/// One restriction on a representation; a list of them is a conjunction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint<const D: usize> {
    Parity(ParityClass<D>),
    Congruence(LinearCongruence<D>),
}

impl<const D: usize> Constraint<D> {
    pub fn matches(&self, v: &[i64; D]) -> bool {
        match self {
            Constraint::Parity(p) => p.matches(v),
            Constraint::Congruence(c) => c.matches(v),
        }
    }
}

impl<const D: usize> From<ParityClass<D>> for Constraint<D> {
    fn from(p: ParityClass<D>) -> Self {
        Constraint::Parity(p)
    }
}

impl<const D: usize> From<LinearCongruence<D>> for Constraint<D> {
    fn from(c: LinearCongruence<D>) -> Self {
        Constraint::Congruence(c)
    }
}

/// Per-coordinate parity requirement merged from every parity constraint.
/// `None` when two constraints disagree.
fn parity_mask<const D: usize>(constraints: &[Constraint<D>]) -> Option<[Option<u8>; D]> {
    let mut mask = [None; D];
    for c in constraints {
        if let Constraint::Parity(p) = c {
            for (m, d) in mask.iter_mut().zip(p.entries()) {
                match m {
                    Some(prev) if *prev != d => return None,
                    _ => *m = Some(d),
                }
            }
        }
    }
    Some(mask)
}

#[inline]
fn parity_ok(mask: Option<u8>, x: i64) -> bool {
    mask.is_none_or(|d| (x & 1) as u8 == d)
}

/// Exact square root of `d` if it is a perfect square.
#[inline]
fn exact_sqrt(d: i128) -> Option<i128> {
    if d < 0 {
        return None;
    }
    if let Ok(u) = u64::try_from(d) {
        // squares mod 64 lie in a 12-element set
        const SQUARE_MOD_64: u64 = 0x0202_0212_0203_0213;
        if (SQUARE_MOD_64 >> (u & 63)) & 1 == 0 {
            return None;
        }
        let s = u.isqrt();
        return (s * s == u).then_some(s as i128);
    }
    let s = (d as u128).isqrt() as i128;
    (s * s == d).then_some(s)
}

#[inline]
fn ceil_div(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

fn check_coefficients(cs: &[i64]) -> Result<()> {
    if cs.iter().any(|c| c.unsigned_abs() > MAX_COEFFICIENT as u64) {
        return Err(Error::OutOfRange("form coefficient exceeds 10^6"));
    }
    Ok(())
}

fn check_target(n: u64) -> Result<i128> {
    if n > MAX_TARGET {
        return Err(Error::OutOfRange("target exceeds 10^9"));
    }
    Ok(n as i128)
}

/// `q11 x^2 + q22 y^2 + q33 z^2 + q23 yz + q13 xz + q12 xy`, positive definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryQuadForm {
    q11: i64,
    q22: i64,
    q33: i64,
    q23: i64,
    q13: i64,
    q12: i64,
}

impl TernaryQuadForm {
    pub fn new(q11: i64, q22: i64, q33: i64, q23: i64, q13: i64, q12: i64) -> Result<Self> {
        check_coefficients(&[q11, q22, q33, q23, q13, q12])?;
        let f = TernaryQuadForm {
            q11,
            q22,
            q33,
            q23,
            q13,
            q12,
        };
        if !f.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(f)
    }

    /// `<a,b,c> = ax^2 + by^2 + cz^2`.
    pub fn diagonal(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a, b, c, 0, 0, 0)
    }

    /// `[q11, q22, q33, q23, q13, q12]`.
    pub fn coefficients(&self) -> [i64; 6] {
        [self.q11, self.q22, self.q33, self.q23, self.q13, self.q12]
    }

    pub fn is_diagonal(&self) -> bool {
        self.q23 == 0 && self.q13 == 0 && self.q12 == 0
    }

    /// The doubled Gram matrix `2G`.
    pub fn doubled_gram(&self) -> [[i128; 3]; 3] {
        let (a, b, c) = (self.q11 as i128, self.q22 as i128, self.q33 as i128);
        let (d, e, f) = (self.q23 as i128, self.q13 as i128, self.q12 as i128);
        [[2 * a, f, e], [f, 2 * b, d], [e, d, 2 * c]]
    }

    /// Leading principal minors of `2G`; they have the signs of those of `G`.
    fn doubled_minors(&self) -> [i128; 3] {
        let m = self.doubled_gram();
        let m1 = m[0][0];
        let m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let m3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        [m1, m2, m3]
    }

    pub fn is_positive_definite(&self) -> bool {
        self.doubled_minors().iter().all(|&m| m > 0)
    }

    /// Exact value at `v`; errors on `i64` overflow.
    pub fn eval(&self, v: &SolutionTriple) -> Result<i64> {
        let [x, y, z] = *v;
        let terms = [
            (self.q11, x, x),
            (self.q22, y, y),
            (self.q33, z, z),
            (self.q23, y, z),
            (self.q13, x, z),
            (self.q12, x, y),
        ];
        let mut acc = 0i64;
        for (c, u, w) in terms {
            let t = ck!(c.checked_mul(u).and_then(|t| t.checked_mul(w)));
            acc = ck!(acc.checked_add(t));
        }
        Ok(acc)
    }

    /// Visits every integer solution of `f(v) = n` in `(z, y, x)` order,
    /// skipping coordinates whose parity disagrees with `mask`.
    fn scan<F>(&self, n: u64, mask: [Option<u8>; 3], mut visit: F) -> Result<()>
    where
        F: FnMut(SolutionTriple) -> ControlFlow<()>,
    {
        let n = check_target(n)?;
        let (a, c) = (self.q11 as i128, self.q33 as i128);
        let (d, e, f) = (self.q23 as i128, self.q13 as i128, self.q12 as i128);
        let [_, p, det] = self.doubled_minors();

        // z^2 <= n (G^-1)_33 = 2n (4ab - f^2) / det(2G)
        let z_max = (ck!(n.checked_mul(2).and_then(|t| t.checked_mul(p))) / det).isqrt();
        let two_p = 2 * p;
        let qz = 2 * f * e - 4 * a * d;
        let rz = e * e - 4 * a * c;
        let four_an = ck!(n.checked_mul(4 * a));

        for z in -z_max..=z_max {
            if !parity_ok(mask[2], z as i64) {
                continue;
            }
            // disc_x(y) = -p y^2 + q y + r
            let q = ck!(qz.checked_mul(z));
            let r = ck!(rz
                .checked_mul(z)
                .and_then(|t| t.checked_mul(z))
                .and_then(|t| t.checked_add(four_an)));
            let delta = ck!(q.checked_mul(q).and_then(|qq| p
                .checked_mul(r)
                .and_then(|pr| pr.checked_mul(4))
                .and_then(|t| qq.checked_add(t))));
            if delta < 0 {
                continue;
            }
            let s = (delta as u128).isqrt() as i128;
            let y_lo = ceil_div(q - s - 1, two_p);
            let y_hi = (q + s + 1).div_euclid(two_p);
            let lin_z = e * z;
            for y in y_lo..=y_hi {
                if !parity_ok(mask[1], y as i64) {
                    continue;
                }
                // bounded by delta and the ellipsoid box, no overflow past the checks above
                let disc = -p * y * y + q * y + r;
                let Some(root) = exact_sqrt(disc) else {
                    continue;
                };
                let lin = f * y + lin_z;
                let den = 2 * a;
                let lo = -lin - root;
                if lo % den == 0 {
                    let x = (lo / den) as i64;
                    if parity_ok(mask[0], x) && visit([x, y as i64, z as i64]).is_break() {
                        return Ok(());
                    }
                }
                if root != 0 {
                    let hi = -lin + root;
                    if hi % den == 0 {
                        let x = (hi / den) as i64;
                        if parity_ok(mask[0], x) && visit([x, y as i64, z as i64]).is_break() {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// All `v` with `f(v) = n` satisfying every constraint, ordered
    /// lexicographically by `(z, y, x)`.
    pub fn enumerate(&self, n: u64, constraints: &[Constraint<3>]) -> Result<Vec<SolutionTriple>> {
        let mut out = Vec::new();
        let Some(mask) = parity_mask(constraints) else {
            return Ok(out);
        };
        self.scan(n, mask, |v| {
            if constraints.iter().all(|c| c.matches(&v)) {
                out.push(v);
            }
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Number of solutions satisfying every constraint.
    pub fn count_constrained(&self, n: u64, constraints: &[Constraint<3>]) -> Result<u64> {
        let Some(mask) = parity_mask(constraints) else {
            return Ok(0);
        };
        let mut count = 0u64;
        self.scan(n, mask, |v| {
            if constraints.iter().all(|c| c.matches(&v)) {
                count += 1;
            }
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    /// `r(f, n)`.
    pub fn count(&self, n: u64) -> Result<u64> {
        let mut count = 0u64;
        self.scan(n, [None; 3], |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    /// `r_d(f, n)`: solutions with `v ≡ d (mod 2)`.
    pub fn count_parity(&self, n: u64, d: ParityClass<3>) -> Result<u64> {
        let mut count = 0u64;
        self.scan(n, d.entries().map(Some), |_| {
            count += 1;
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    /// Whether some solution of `f(v) = n` lies in parity class `d`.
    pub fn represents_with_parity(&self, n: u64, d: ParityClass<3>) -> Result<bool> {
        let mut found = false;
        self.scan(n, d.entries().map(Some), |_| {
            found = true;
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    /// The form `g(v) = f(M v)`.
    pub fn substitute(&self, m: &[[i64; 3]; 3]) -> Result<TernaryQuadForm> {
        let a = self.doubled_gram();
        // A' = M^T A M
        let mut am = [[0i128; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0i128;
                for (k, row) in m.iter().enumerate() {
                    s = ck!(s.checked_add(ck!(a[i][k].checked_mul(row[j] as i128))));
                }
                am[i][j] = s;
            }
        }
        let mut g = [[0i128; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0i128;
                for k in 0..3 {
                    s = ck!(s.checked_add(ck!((m[k][i] as i128).checked_mul(am[k][j]))));
                }
                g[i][j] = s;
            }
        }
        let to_i64 = |x: i128| i64::try_from(x).map_err(|_| Error::Overflow);
        TernaryQuadForm::new(
            to_i64(g[0][0] / 2)?,
            to_i64(g[1][1] / 2)?,
            to_i64(g[2][2] / 2)?,
            to_i64(g[1][2])?,
            to_i64(g[0][2])?,
            to_i64(g[0][1])?,
        )
    }

    /// Human-readable polynomial, e.g. `8x^2+4y^2+24z^2-24xz-4xy`.
    pub fn polynomial(&self) -> Polynomial<'_> {
        Polynomial(self)
    }
}

/// `q11,q22,q33;q23,q13,q12`
impl fmt::Display for TernaryQuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{};{},{},{}",
            self.q11, self.q22, self.q33, self.q23, self.q13, self.q12
        )
    }
}

impl FromStr for TernaryQuadForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (diag, cross) = s
            .split_once(';')
            .ok_or(Error::Parse("expected \"q11,q22,q33;q23,q13,q12\""))?;
        let mut q = [0i64; 6];
        let fill = |part: &str, out: &mut [i64]| -> Result<()> {
            let mut it = part.split(',');
            for slot in out.iter_mut() {
                *slot = it
                    .next()
                    .and_then(|t| t.trim().parse().ok())
                    .ok_or(Error::Parse("expected three integers on each side of ';'"))?;
            }
            if it.next().is_some() {
                return Err(Error::Parse("expected three integers on each side of ';'"));
            }
            Ok(())
        };
        let (lo, hi) = q.split_at_mut(3);
        fill(diag, lo)?;
        fill(cross, hi)?;
        TernaryQuadForm::new(q[0], q[1], q[2], q[3], q[4], q[5])
    }
}

pub struct Polynomial<'a>(&'a TernaryQuadForm);

impl fmt::Display for Polynomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [
            (self.0.q11, "x^2"),
            (self.0.q22, "y^2"),
            (self.0.q33, "z^2"),
            (self.0.q23, "yz"),
            (self.0.q13, "xz"),
            (self.0.q12, "xy"),
        ];
        write_terms(f, &terms)
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i64, &str)]) -> fmt::Result {
    let mut first = true;
    for &(c, mono) in terms {
        if c == 0 {
            continue;
        }
        if c < 0 {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        if c.unsigned_abs() != 1 {
            write!(f, "{}", c.unsigned_abs())?;
        }
        f.write_str(mono)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `p11 x^2 + p22 y^2 + p12 xy`, positive definite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinaryQuadForm {
    p11: i64,
    p22: i64,
    p12: i64,
}

impl BinaryQuadForm {
    pub fn new(p11: i64, p22: i64, p12: i64) -> Result<Self> {
        check_coefficients(&[p11, p22, p12])?;
        let disc = 4 * p11 as i128 * p22 as i128 - p12 as i128 * p12 as i128;
        if p11 <= 0 || disc <= 0 {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(BinaryQuadForm { p11, p22, p12 })
    }

    pub fn diagonal(a: i64, b: i64) -> Result<Self> {
        Self::new(a, b, 0)
    }

    /// `[p11, p22, p12]`.
    pub fn coefficients(&self) -> [i64; 3] {
        [self.p11, self.p22, self.p12]
    }

    pub fn is_diagonal(&self) -> bool {
        self.p12 == 0
    }

    pub fn eval(&self, v: &[i64; 2]) -> Result<i64> {
        let [x, y] = *v;
        let mut acc = 0i64;
        for (c, u, w) in [(self.p11, x, x), (self.p22, y, y), (self.p12, x, y)] {
            let t = ck!(c.checked_mul(u).and_then(|t| t.checked_mul(w)));
            acc = ck!(acc.checked_add(t));
        }
        Ok(acc)
    }

    fn scan<F>(&self, n: u64, mask: [Option<u8>; 2], mut visit: F) -> Result<()>
    where
        F: FnMut([i64; 2]) -> ControlFlow<()>,
    {
        let n = check_target(n)?;
        let (a, b, f) = (self.p11 as i128, self.p22 as i128, self.p12 as i128);
        let p = 4 * a * b - f * f;
        let four_an = 4 * a * n;
        // disc_x(y) = 4an - p y^2
        let y_max = (four_an / p).isqrt();
        for y in -y_max..=y_max {
            if !parity_ok(mask[1], y as i64) {
                continue;
            }
            let Some(root) = exact_sqrt(four_an - p * y * y) else {
                continue;
            };
            let den = 2 * a;
            let lo = -f * y - root;
            if lo % den == 0
                && parity_ok(mask[0], (lo / den) as i64)
                && visit([(lo / den) as i64, y as i64]).is_break()
            {
                return Ok(());
            }
            if root != 0 {
                let hi = -f * y + root;
                if hi % den == 0
                    && parity_ok(mask[0], (hi / den) as i64)
                    && visit([(hi / den) as i64, y as i64]).is_break()
                {
                    return Ok(());
                }
            }
        }
        Ok(())
    }

    /// Solutions of `b(v) = n` under the constraints, ordered by `(y, x)`.
    pub fn enumerate(&self, n: u64, constraints: &[Constraint<2>]) -> Result<Vec<[i64; 2]>> {
        let mut out = Vec::new();
        let Some(mask) = parity_mask(constraints) else {
            return Ok(out);
        };
        self.scan(n, mask, |v| {
            if constraints.iter().all(|c| c.matches(&v)) {
                out.push(v);
            }
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    pub fn count_constrained(&self, n: u64, constraints: &[Constraint<2>]) -> Result<u64> {
        let Some(mask) = parity_mask(constraints) else {
            return Ok(0);
        };
        let mut count = 0u64;
        self.scan(n, mask, |v| {
            if constraints.iter().all(|c| c.matches(&v)) {
                count += 1;
            }
            ControlFlow::Continue(())
        })?;
        Ok(count)
    }

    pub fn count(&self, n: u64) -> Result<u64> {
        self.count_constrained(n, &[])
    }

    pub fn count_parity(&self, n: u64, d: ParityClass<2>) -> Result<u64> {
        self.count_constrained(n, &[d.into()])
    }

    /// Constraints cutting out `R~_(1,1)`: both coordinates odd and
    /// `x ≢ y (mod 4)`, i.e. `x - y ≡ 2 (mod 4)`.
    pub fn tilde_constraints() -> [Constraint<2>; 2] {
        [
            Constraint::Parity(ParityClass([1, 1])),
            Constraint::Congruence(LinearCongruence {
                coeffs: [1, -1],
                modulus: 4,
                residue: 2,
            }),
        ]
    }

    /// `r~_(1,1)(b, n)`; only defined for diagonal forms.
    pub fn count_tilde(&self, n: u64) -> Result<u64> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal);
        }
        self.count_constrained(n, &Self::tilde_constraints())
    }
}

impl fmt::Display for BinaryQuadForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &[(self.p11, "x^2"), (self.p22, "y^2"), (self.p12, "xy")])
    }
}

/// `M v` for an integer matrix.
pub fn mat_vec<const D: usize>(m: &[[i64; D]; D], v: &[i64; D]) -> Result<[i64; D]> {
    let mut out = [0i64; D];
    for (o, row) in out.iter_mut().zip(m) {
        let mut s = 0i64;
        for (&c, &x) in row.iter().zip(v) {
            s = ck!(s.checked_add(ck!(c.checked_mul(x))));
        }
        *o = s;
    }
    Ok(out)
}
