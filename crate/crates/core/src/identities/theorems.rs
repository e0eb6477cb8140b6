use crate::error::{Error, Result};
use crate::forms::TernaryQuadForm;
use crate::triangular::{gcd, TriangularTriple};

/// Triples with two of `b/a, c/b, c/a` in `{1, 5/3, 7, 15}`.
pub const TABLE_1: [[u64; 3]; 21] = [
    [1, 1, 7],
    [1, 1, 15],
    [3, 3, 5],
    [1, 7, 7],
    [3, 5, 5],
    [1, 7, 15],
    [1, 9, 15],
    [1, 15, 15],
    [3, 5, 21],
    [1, 7, 49],
    [1, 15, 25],
    [3, 5, 35],
    [3, 5, 45],
    [1, 7, 105],
    [3, 5, 75],
    [1, 15, 105],
    [3, 21, 35],
    [1, 15, 225],
    [9, 15, 25],
    [5, 21, 35],
    [7, 15, 105],
];

/// Triples `(a, 3a, b)`, printed sorted; see [`theorem2_roles`].
pub const TABLE_2: [[u64; 3]; 12] = [
    [1, 3, 5],
    [1, 3, 7],
    [1, 3, 15],
    [1, 3, 21],
    [1, 5, 15],
    [1, 3, 45],
    [3, 5, 9],
    [1, 7, 21],
    [3, 5, 15],
    [3, 7, 21],
    [1, 15, 45],
    [5, 9, 15],
];

pub const THM3_TRIPLES: [[u64; 3]; 3] = [[1, 2, 15], [1, 15, 18], [1, 15, 30]];

pub fn table_triples(which: u8) -> Result<&'static [[u64; 3]]> {
    match which {
        1 => Ok(&TABLE_1),
        2 => Ok(&TABLE_2),
        _ => Err(Error::Precondition("table is 1 or 2")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
}

/// The `n` for which a family is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NDomain {
    All,
    Even,
    NotOneModThree,
}

impl NDomain {
    pub fn contains(&self, n: u64) -> bool {
        n >= 1
            && match self {
                NDomain::All => true,
                NDomain::Even => n.is_multiple_of(2),
                NDomain::NotOneModThree => n % 3 != 1,
            }
    }
}

/// Right-hand side shape, with `N = 8n + a + b + c` and `f = <a,b,c>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityShape {
    /// `2t = r(f, 4N) - r(f, N)`
    FourNMinusN,
    /// `2t = 3 r(f, N) - r(f, 4N)`
    ThreeNMinusFourN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremCase {
    pub id: TheoremId,
    pub triple: TriangularTriple,
    pub domain: NDomain,
    pub shape: IdentityShape,
}

impl TheoremCase {
    /// Validates that `triple` meets the theorem's hypothesis.
    pub fn new(id: TheoremId, triple: [u64; 3]) -> Result<Self> {
        let [a, b, c] = triple;
        let tt = TriangularTriple::new(a, b, c)?;
        let (domain, shape) = match id {
            TheoremId::T1 => {
                if !satisfies_thm1_hypothesis(triple) {
                    return Err(Error::Precondition(
                        "two of b/a, c/b, c/a must lie in {1, 5/3, 7, 15}",
                    ));
                }
                (NDomain::All, IdentityShape::FourNMinusN)
            }
            TheoremId::T2 => {
                theorem2_roles(triple)?;
                (NDomain::All, IdentityShape::ThreeNMinusFourN)
            }
            TheoremId::T3 => {
                if !THM3_TRIPLES.contains(&triple) {
                    return Err(Error::Precondition(
                        "triple must be (1,2,15), (1,15,18) or (1,15,30)",
                    ));
                }
                (NDomain::Even, IdentityShape::FourNMinusN)
            }
            TheoremId::T4 => {
                if triple != [1, 1, 27] {
                    return Err(Error::Precondition("triple must be (1,1,27)"));
                }
                (NDomain::NotOneModThree, IdentityShape::FourNMinusN)
            }
        };
        Ok(TheoremCase {
            id,
            triple: tt,
            domain,
            shape,
        })
    }

    /// `(2 t(a,b,c;n), right-hand side)`. Outside the claimed `n` domain this
    /// is a precondition error unless `force` is set.
    pub fn sides(&self, n: u64, force: bool) -> Result<(i128, i128)> {
        if !force && !self.domain.contains(n) {
            return Err(Error::Precondition("n is outside the identity's domain"));
        }
        let f = self.triple.diagonal_form();
        let big = 8 * n + self.triple.sum();
        let lhs = 2 * self.triple.count_direct(n)? as i128;
        let r_n = f.count(big)? as i128;
        let r_4n = f.count(4 * big)? as i128;
        let rhs = match self.shape {
            IdentityShape::FourNMinusN => r_4n - r_n,
            IdentityShape::ThreeNMinusFourN => 3 * r_n - r_4n,
        };
        Ok((lhs, rhs))
    }

    pub fn check(&self, n: u64) -> Result<bool> {
        let (l, r) = self.sides(n, false)?;
        Ok(l == r)
    }
}

pub fn theorem_sides(id: TheoremId, triple: [u64; 3], n: u64, force: bool) -> Result<(i128, i128)> {
    TheoremCase::new(id, triple)?.sides(n, force)
}

pub fn theorem1_check(triple: [u64; 3], n: u64) -> Result<bool> {
    TheoremCase::new(TheoremId::T1, triple)?.check(n)
}

pub fn theorem2_check(triple: [u64; 3], n: u64) -> Result<bool> {
    TheoremCase::new(TheoremId::T2, triple)?.check(n)
}

pub fn theorem3_check(triple: [u64; 3], n: u64) -> Result<bool> {
    TheoremCase::new(TheoremId::T3, triple)?.check(n)
}

pub fn theorem4_check(n: u64) -> Result<bool> {
    TheoremCase::new(TheoremId::T4, [1, 1, 27])?.check(n)
}

/// `p/q` is one of `1, 5/3, 7, 15`.
fn in_ratio_set(p: u64, q: u64) -> bool {
    p == q || 3 * p == 5 * q || p == 7 * q || p == 15 * q
}

/// `5/3, 7, 15` only.
fn in_ratio_set_without_one(p: u64, q: u64) -> bool {
    3 * p == 5 * q || p == 7 * q || p == 15 * q
}

/// Coprime, not `(1,1,1)`, and after sorting two of `b/a, c/b, c/a` lie in
/// `{1, 5/3, 7, 15}`.
pub fn satisfies_thm1_hypothesis(triple: [u64; 3]) -> bool {
    let mut t = triple;
    t.sort_unstable();
    let [a, b, c] = t;
    if a == 0 || gcd(gcd(a, b), c) != 1 || t == [1, 1, 1] {
        return false;
    }
    [(b, a), (c, b), (c, a)]
        .iter()
        .filter(|&&(p, q)| in_ratio_set(p, q))
        .count()
        >= 2
}

/// Recovers `(a, b)` from a triple containing `a` and `3a`: the first
/// ratio-3 pair for which `a, b` are coprime and odd and one of
/// `b/a, a/b, 3a/b, b/3a` lies in `{5/3, 7, 15}`.
pub fn theorem2_roles(triple: [u64; 3]) -> Result<(u64, u64)> {
    for i in 0..3 {
        for j in 0..3 {
            if i == j || triple[j] != 3 * triple[i] {
                continue;
            }
            let a = triple[i];
            let b = triple[3 - i - j];
            if a.is_multiple_of(2) || b.is_multiple_of(2) || gcd(a, b) != 1 {
                continue;
            }
            let three_a = 3 * a;
            if in_ratio_set_without_one(b, a)
                || in_ratio_set_without_one(a, b)
                || in_ratio_set_without_one(three_a, b)
                || in_ratio_set_without_one(b, three_a)
            {
                return Ok((a, b));
            }
        }
    }
    Err(Error::Precondition(
        "triple is not (a, 3a, b) with one of b/a, a/b, 3a/b, b/3a in {5/3, 7, 15}",
    ))
}

/// A reordering `(a, b, c)` of the triple with `a ≡ b ≡ -c (mod 8)`.
pub fn thm1_orientation(triple: [u64; 3]) -> Option<[u64; 3]> {
    let [p, q, r] = triple;
    [[p, q, r], [p, r, q], [q, r, p]]
        .into_iter()
        .find(|&[a, b, c]| a % 8 == b % 8 && (a + c) % 8 == 0)
}

/// Every solution of `f = 4N` (oriented so that `a ≡ b ≡ -c (mod 8)`) has
/// `(ax^2, by^2, cz^2) mod 8` among
/// `(0,0,4), (0,4,0), (a,4,c), (4,0,0), (4,b,c), (4,4,4)`.
pub fn thm1_residue_split_holds(triple: [u64; 3], n: u64) -> Result<bool> {
    let [a, b, c] = thm1_orientation(triple)
        .ok_or(Error::Precondition("no ordering with a ≡ b ≡ -c (mod 8)"))?;
    let f = TernaryQuadForm::diagonal(a as i64, b as i64, c as i64)?;
    let big = 8 * n + a + b + c;
    let (a8, b8, c8) = ((a % 8) as i64, (b % 8) as i64, (c % 8) as i64);
    let allowed = [
        [0, 0, 4],
        [0, 4, 0],
        [a8, 4, c8],
        [4, 0, 0],
        [4, b8, c8],
        [4, 4, 4],
    ];
    let coeffs = [a as i64, b as i64, c as i64];
    Ok(f.enumerate(4 * big, &[])?.iter().all(|v| {
        let pattern = [0, 1, 2].map(|i| (coeffs[i] * v[i] * v[i]).rem_euclid(8));
        allowed.contains(&pattern)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables() {
        let t1 = table_triples(1).unwrap();
        assert_eq!(t1.len(), 21);
        for t in [[1, 1, 7], [3, 5, 75], [7, 15, 105]] {
            assert!(t1.contains(&t));
        }
        assert!(!t1.contains(&[1, 1, 1]));
        let t2 = table_triples(2).unwrap();
        assert_eq!(t2.len(), 12);
        assert!(t2.contains(&[1, 3, 5]) && t2.contains(&[5, 9, 15]));
        assert!(table_triples(3).is_err());
    }

    #[test]
    fn table_1_meets_fraction_hypothesis() {
        for t in TABLE_1 {
            assert!(satisfies_thm1_hypothesis(t), "{t:?}");
            assert!(thm1_orientation(t).is_some(), "{t:?}");
        }
        assert!(!satisfies_thm1_hypothesis([1, 1, 1]));
        assert!(!satisfies_thm1_hypothesis([1, 2, 15]));
    }

    /// Every coprime sorted triple meeting the hypothesis is in the table.
    #[test]
    fn table_1_is_complete() {
        let mut found = alloc::vec::Vec::new();
        for a in 1..=30u64 {
            for b in a..=450 {
                for c in b..=3375 {
                    if c > 15 * b {
                        break;
                    }
                    if satisfies_thm1_hypothesis([a, b, c]) {
                        found.push([a, b, c]);
                    }
                }
            }
        }
        found.sort();
        let mut table = TABLE_1.to_vec();
        table.sort();
        assert_eq!(found, table);
    }

    #[test]
    fn table_2_roles() {
        assert_eq!(theorem2_roles([1, 3, 5]).unwrap(), (1, 5));
        assert_eq!(theorem2_roles([5, 9, 15]).unwrap(), (5, 9));
        assert_eq!(theorem2_roles([3, 5, 9]).unwrap(), (3, 5));
        for t in TABLE_2 {
            let (a, b) = theorem2_roles(t).unwrap();
            let mut roles = [a, 3 * a, b];
            roles.sort();
            assert_eq!(roles, t);
        }
        assert!(theorem2_roles([1, 3, 9]).is_err());
        assert!(theorem2_roles([1, 1, 7]).is_err());
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(
            theorem_sides(TheoremId::T1, [1, 1, 7], 1, false).unwrap(),
            (32, 32)
        );
        assert!(theorem1_check([3, 3, 5], 1).unwrap());
        assert!(theorem1_check([1, 15, 25], 2).unwrap());
        assert_eq!(
            theorem_sides(TheoremId::T2, [1, 3, 5], 1, false).unwrap(),
            (16, 16)
        );
        assert!(theorem2_check([1, 3, 7], 1).unwrap());
        assert!(theorem2_check([5, 9, 15], 1).unwrap());
        assert_eq!(
            theorem_sides(TheoremId::T3, [1, 2, 15], 2, false).unwrap(),
            (16, 16)
        );
        assert!(theorem3_check([1, 15, 18], 2).unwrap());
        assert!(theorem3_check([1, 15, 30], 4).unwrap());
        assert_eq!(
            theorem_sides(TheoremId::T4, [1, 1, 27], 2, false).unwrap(),
            (16, 16)
        );
        assert!(theorem4_check(3).unwrap());
        assert!(theorem4_check(5).unwrap());
    }

    #[test]
    fn theorem_preconditions() {
        assert!(theorem1_check([1, 1, 1], 1).is_err());
        assert!(theorem1_check([1, 1, 7], 0).is_err());
        assert!(theorem3_check([1, 2, 15], 3).is_err());
        assert!(theorem3_check([1, 2, 17], 2).is_err());
        assert!(theorem4_check(4).is_err());
        assert!(theorem_sides(TheoremId::T4, [1, 1, 27], 4, true).is_ok());
    }

    #[test]
    fn residue_split_small_n() {
        for t in TABLE_1 {
            for n in 1..=20 {
                assert!(thm1_residue_split_holds(t, n).unwrap(), "{t:?} n={n}");
            }
        }
    }
}
