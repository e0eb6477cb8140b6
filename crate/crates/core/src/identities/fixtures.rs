//! Transcribed data: the maps for `x^2+3y^2` and `ax^2+by^2`, the genus
//! fixtures for `(1,2,15)`, `(1,15,18)`, `(1,15,30)` and the forms and map
//! used for `(1,1,27)`.

use alloc::vec;

use super::lemmas::Lemma31;
use super::maps::{
    verify_bijection, BijectionCheck, ConstrainedRepSet, ExplicitLinearMap, LatticeForm,
};
use crate::error::{Error, Result};
use crate::forms::{BinaryQuadForm, Constraint, LinearCongruence, ParityClass, TernaryQuadForm};

/// `psi_1, psi_2, psi_3` for `x^2 + 3y^2`.
pub const PSI_MAPS: [ExplicitLinearMap<2>; 3] = [
    ExplicitLinearMap::new([[1, 3], [-1, 1]], 1),
    ExplicitLinearMap::new([[1, 3], [-1, 1]], 1),
    ExplicitLinearMap::new([[1, 3], [-1, 1]], 2),
];

/// `chi_1, chi_2, chi_3` for `3x^2+5y^2`, `x^2+7y^2`, `x^2+15y^2`.
pub const CHI_MAPS: [((i64, i64), ExplicitLinearMap<2>); 3] = [
    ((3, 5), ExplicitLinearMap::new([[1, -5], [3, 1]], 2)),
    ((1, 7), ExplicitLinearMap::new([[3, -7], [1, 3]], 2)),
    ((1, 15), ExplicitLinearMap::new([[1, 15], [-1, 1]], 2)),
];

/// `(x, y, z) -> (x - 7z, -x - 4y + z, -x - z)`
pub const THM4_PHI: ExplicitLinearMap<3> =
    ExplicitLinearMap::new([[1, 0, -7], [-1, -4, 1], [-1, 0, -1]], 1);

/// A map with its domain and codomain, ready to check.
#[derive(Clone, Debug)]
pub struct BijectionInstance<F, G, const D: usize> {
    pub name: &'static str,
    pub map: ExplicitLinearMap<D>,
    pub domain: ConstrainedRepSet<F, D>,
    pub codomain: ConstrainedRepSet<G, D>,
}

impl<F: LatticeForm<D>, G: LatticeForm<D>, const D: usize> BijectionInstance<F, G, D> {
    pub fn check(&self) -> Result<BijectionCheck<D>> {
        verify_bijection(&self.map, &self.domain, &self.codomain)
    }
}

fn parity2(d: [u8; 2]) -> Constraint<2> {
    Constraint::Parity(ParityClass::new(d).expect("valid parity"))
}

fn congruence3(coeffs: [i64; 3], modulus: i64, residue: i64) -> Constraint<3> {
    Constraint::Congruence(
        LinearCongruence::new(coeffs, modulus, residue).expect("positive modulus"),
    )
}

fn tern(q: [i64; 6]) -> TernaryQuadForm {
    TernaryQuadForm::new(q[0], q[1], q[2], q[3], q[4], q[5])
        .expect("transcribed fixture is definite")
}

/// `psi_k : R_d(x^2+3y^2, m) -> R~_(1,1)(x^2+3y^2, m')` for the lemma
/// variant `k`.
pub fn psi_instance(
    variant: Lemma31,
    m: u64,
) -> Result<BijectionInstance<BinaryQuadForm, BinaryQuadForm, 2>> {
    if !variant.admits(m) {
        return Err(Error::Precondition(
            "m is outside the lemma's residue class",
        ));
    }
    let f = BinaryQuadForm::diagonal(1, 3)?;
    let (name, map, d, target) = match variant {
        Lemma31::I => ("psi1", PSI_MAPS[0], [1, 0], 4 * m),
        Lemma31::II => ("psi2", PSI_MAPS[1], [0, 1], 4 * m),
        Lemma31::III => ("psi3", PSI_MAPS[2], [0, 0], m),
    };
    Ok(BijectionInstance {
        name,
        map,
        domain: ConstrainedRepSet::new(f, m, vec![parity2(d)]),
        codomain: ConstrainedRepSet::new(f, target, BinaryQuadForm::tilde_constraints().to_vec()),
    })
}

/// `chi_k : R~_(1,1)(ax^2+by^2, m) -> R~_(1,1)(ax^2+by^2, 4m)`, `k = 0, 1, 2`.
pub fn chi_instance(
    k: usize,
    m: u64,
) -> Result<BijectionInstance<BinaryQuadForm, BinaryQuadForm, 2>> {
    let &((a, b), map) = CHI_MAPS
        .get(k)
        .ok_or(Error::Precondition("chi index is 0, 1 or 2"))?;
    if !m.is_multiple_of(8) {
        return Err(Error::Precondition("m must be divisible by 8"));
    }
    let f = BinaryQuadForm::diagonal(a, b)?;
    let tilde = BinaryQuadForm::tilde_constraints().to_vec();
    Ok(BijectionInstance {
        name: ["chi1", "chi2", "chi3"][k],
        map,
        domain: ConstrainedRepSet::new(f, m, tilde.clone()),
        codomain: ConstrainedRepSet::new(f, 4 * m, tilde),
    })
}

/// `(g, h)` for `(1,1,27)`:
/// `g = 8x^2+20y^2+29z^2+4yz+8xz+8xy`, `h = 2x^2+5y^2+27z^2+2xy`.
pub fn thm4_forms() -> (TernaryQuadForm, TernaryQuadForm) {
    (tern([8, 20, 29, 4, 8, 8]), tern([2, 5, 27, 0, 0, 2]))
}

/// `phi : {R(g, N) : x even} -> {R(h, 4N) : x odd, x + z ≡ 0 (8)}` with
/// `N = 8n + 29`.
pub fn thm4_phi_instance(n: u64) -> BijectionInstance<TernaryQuadForm, TernaryQuadForm, 3> {
    let (g, h) = thm4_forms();
    let big = 8 * n + 29;
    BijectionInstance {
        name: "phi",
        map: THM4_PHI,
        domain: ConstrainedRepSet::new(g, big, vec![congruence3([1, 0, 0], 2, 0)]),
        codomain: ConstrainedRepSet::new(
            h,
            4 * big,
            vec![congruence3([1, 0, 0], 2, 1), congruence3([1, 0, 1], 8, 0)],
        ),
    }
}

/// One of the three genus fixtures. Targets are `N = 16m + base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusFixture {
    pub triple: [u64; 3],
    pub base: u64,
    pub f1: TernaryQuadForm,
    pub f2: TernaryQuadForm,
    pub f3: TernaryQuadForm,
    pub g1: TernaryQuadForm,
    pub g2: TernaryQuadForm,
    /// Domain of `phi_3` (codomain `f1`).
    pub aux1: TernaryQuadForm,
    /// Domain of `phi_4` (codomain `f3`).
    pub aux2: TernaryQuadForm,
    pub phi1: ExplicitLinearMap<3>,
    pub phi2: ExplicitLinearMap<3>,
    pub phi3: ExplicitLinearMap<3>,
    pub phi4: ExplicitLinearMap<3>,
    /// Linear forms `(on f1, on f2)` whose residues mod 16 split `phi_1`/`phi_2`.
    pub split: ([i64; 3], [i64; 3]),
    /// `(domain residue, codomain residue)` for `phi_1` and for `phi_2`.
    pub phi1_residues: (i64, i64),
    pub phi2_residues: (i64, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SiegelCheck {
    pub target: u64,
    /// `r(f1) + 2 r(f2) + r(f3)` and `r(g1) + r(g2)`.
    pub weighted: (u64, u64),
    /// `r(f1)` and `r(f2)`.
    pub f1_f2: (u64, u64),
    /// `r(g2)` and `r(aux1) + r(aux2)`.
    pub g2_split: (u64, u64),
}

impl SiegelCheck {
    pub fn holds(&self) -> bool {
        self.weighted.0 == self.weighted.1
            && self.f1_f2.0 == self.f1_f2.1
            && self.g2_split.0 == self.g2_split.1
    }
}

impl GenusFixture {
    pub fn case_1_2_15() -> Self {
        GenusFixture {
            triple: [1, 2, 15],
            base: 18,
            f1: tern([4, 4, 8, 0, 0, 2]),
            f2: tern([4, 6, 6, 4, 2, 2]),
            f3: tern([2, 6, 12, 6, 2, 0]),
            g1: tern([4, 8, 18, 8, 4, 0]),
            g2: tern([2, 10, 24, 0, 0, 0]),
            aux1: tern([8, 10, 24, 0, 0, 0]),
            aux2: tern([2, 24, 40, 0, 0, 0]),
            phi1: ExplicitLinearMap::new([[12, 4, 16], [-11, -1, 12], [1, -13, -4]], 16),
            phi2: ExplicitLinearMap::new([[4, 12, -16], [-13, 1, 4], [-1, -11, -12]], 16),
            phi3: ExplicitLinearMap::integral([[0, 1, 2], [0, 1, -2], [1, 0, 0]]),
            phi4: ExplicitLinearMap::integral([[1, 0, 1], [0, 2, 1], [0, 0, -2]]),
            split: ([1, 3, -4], [1, -6, 2]),
            phi1_residues: (0, 0),
            phi2_residues: (8, 8),
        }
    }

    pub fn case_1_15_18() -> Self {
        GenusFixture {
            triple: [1, 15, 18],
            base: 34,
            f1: tern([4, 4, 72, 0, 0, 2]),
            f2: tern([4, 16, 22, 14, -2, 4]),
            f3: tern([6, 16, 16, -8, 6, 6]),
            g1: tern([4, 34, 34, 8, 4, 4]),
            g2: tern([10, 18, 24, 0, 0, 0]),
            aux1: tern([10, 24, 72, 0, 0, 0]),
            aux2: tern([18, 24, 40, 0, 0, 0]),
            phi1: ExplicitLinearMap::new([[1, -5, -68], [-5, -7, 20], [-4, 4, -16]], 16),
            phi2: ExplicitLinearMap::new([[9, -5, -52], [3, 9, 4], [4, -4, 16]], 16),
            phi3: ExplicitLinearMap::integral([[1, -2, 0], [1, 2, 0], [0, 0, 1]]),
            phi4: ExplicitLinearMap::integral([[1, 2, 0], [-1, 0, 1], [-1, 0, -1]]),
            split: ([3, 1, 4], [3, -1, 2]),
            phi1_residues: (0, 0),
            phi2_residues: (8, 8),
        }
    }

    pub fn case_1_15_30() -> Self {
        GenusFixture {
            triple: [1, 15, 30],
            base: 46,
            f1: tern([4, 4, 120, 0, 0, 2]),
            f2: tern([4, 16, 34, 14, -2, 4]),
            f3: tern([10, 16, 16, 8, 10, 10]),
            g1: tern([4, 46, 46, 32, 4, 4]),
            g2: tern([6, 30, 40, 0, 0, 0]),
            aux1: tern([6, 40, 120, 0, 0, 0]),
            aux2: tern([24, 30, 40, 0, 0, 0]),
            phi1: ExplicitLinearMap::new([[7, -13, -4], [-3, 1, -44], [-4, -4, 16]], 16),
            phi2: ExplicitLinearMap::new([[9, -11, 20], [3, 7, 28], [-4, -4, 16]], 16),
            phi3: ExplicitLinearMap::integral([[1, 2, 0], [-1, 2, 0], [0, 0, 1]]),
            phi4: ExplicitLinearMap::integral([[0, -1, -2], [1, 1, 0], [-1, 1, 0]]),
            split: ([3, -1, -4], [3, -1, 2]),
            phi1_residues: (0, 8),
            phi2_residues: (8, 0),
        }
    }

    pub fn all() -> [GenusFixture; 3] {
        [
            Self::case_1_2_15(),
            Self::case_1_15_18(),
            Self::case_1_15_30(),
        ]
    }

    pub fn by_triple(triple: [u64; 3]) -> Option<GenusFixture> {
        Self::all().into_iter().find(|f| f.triple == triple)
    }

    /// `N = 16m + base`.
    pub fn target(&self, m: u64) -> u64 {
        16 * m + self.base
    }

    /// `[f1, f2, f3, g1, g2]`, the genus members.
    pub fn genus_forms(&self) -> [TernaryQuadForm; 5] {
        [self.f1, self.f2, self.f3, self.g1, self.g2]
    }

    /// The weighted genus identity and its two sub-identities at `16m + base`.
    pub fn siegel_identity_check(&self, m: u64) -> Result<SiegelCheck> {
        let n = self.target(m);
        let [r1, r2, r3, s1, s2] = {
            let mut out = [0u64; 5];
            for (o, f) in out.iter_mut().zip(self.genus_forms()) {
                *o = f.count(n)?;
            }
            out
        };
        Ok(SiegelCheck {
            target: n,
            weighted: (r1 + 2 * r2 + r3, s1 + s2),
            f1_f2: (r1, r2),
            g2_split: (s2, self.aux1.count(n)? + self.aux2.count(n)?),
        })
    }

    /// `phi_1 .. phi_4` with their constrained domains and codomains at
    /// `16m + base`.
    pub fn phi_instances(
        &self,
        m: u64,
    ) -> [BijectionInstance<TernaryQuadForm, TernaryQuadForm, 3>; 4] {
        let n = self.target(m);
        let (on_f1, on_f2) = self.split;
        let pair = |name, map, (dr, cr): (i64, i64)| BijectionInstance {
            name,
            map,
            domain: ConstrainedRepSet::new(self.f1, n, vec![congruence3(on_f1, 16, dr)]),
            codomain: ConstrainedRepSet::new(self.f2, n, vec![congruence3(on_f2, 16, cr)]),
        };
        [
            pair("phi1", self.phi1, self.phi1_residues),
            pair("phi2", self.phi2, self.phi2_residues),
            BijectionInstance {
                name: "phi3",
                map: self.phi3,
                domain: ConstrainedRepSet::new(self.aux1, n, vec![]),
                codomain: ConstrainedRepSet::new(self.f1, n, vec![]),
            },
            BijectionInstance {
                name: "phi4",
                map: self.phi4,
                domain: ConstrainedRepSet::new(self.aux2, n, vec![]),
                codomain: ConstrainedRepSet::new(self.f3, n, vec![]),
            },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::maps::apply_map;

    /// Values at `e1, e2, e3, e2+e3, e1+e3, e1+e2` pin all six coefficients.
    fn probe(f: &TernaryQuadForm) -> [i64; 6] {
        [
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [0, 1, 1],
            [1, 0, 1],
            [1, 1, 0],
        ]
        .map(|v| f.eval(&v).unwrap())
    }

    #[test]
    fn fixture_transcription() {
        let c = GenusFixture::case_1_2_15();
        assert_eq!(probe(&c.f1), [4, 4, 8, 12, 12, 10]);
        assert_eq!(probe(&c.f2), [4, 6, 6, 16, 12, 12]);
        assert_eq!(probe(&c.f3), [2, 6, 12, 24, 16, 8]);
        assert_eq!(probe(&c.g1), [4, 8, 18, 34, 26, 12]);
        assert_eq!(probe(&c.g2), [2, 10, 24, 34, 26, 12]);
        let c = GenusFixture::case_1_15_18();
        assert_eq!(probe(&c.f1), [4, 4, 72, 76, 76, 10]);
        assert_eq!(probe(&c.f2), [4, 16, 22, 52, 24, 24]);
        assert_eq!(probe(&c.f3), [6, 16, 16, 24, 28, 28]);
        assert_eq!(probe(&c.g1), [4, 34, 34, 76, 42, 42]);
        assert_eq!(probe(&c.g2), [10, 18, 24, 42, 34, 28]);
        let c = GenusFixture::case_1_15_30();
        assert_eq!(probe(&c.f1), [4, 4, 120, 124, 124, 10]);
        assert_eq!(probe(&c.f2), [4, 16, 34, 64, 36, 24]);
        assert_eq!(probe(&c.f3), [10, 16, 16, 40, 36, 36]);
        assert_eq!(probe(&c.g1), [4, 46, 46, 124, 54, 54]);
        assert_eq!(probe(&c.g2), [6, 30, 40, 70, 46, 36]);
        let (g, h) = thm4_forms();
        assert_eq!(probe(&g), [8, 20, 29, 53, 45, 36]);
        assert_eq!(probe(&h), [2, 5, 27, 32, 29, 9]);
    }

    #[test]
    fn all_fixture_forms_are_definite() {
        for c in GenusFixture::all() {
            for f in c.genus_forms().iter().chain([&c.aux1, &c.aux2]) {
                assert!(f.is_positive_definite());
            }
        }
    }

    #[test]
    fn apply_examples() {
        assert_eq!(apply_map(&PSI_MAPS[0], &[1, 0]).unwrap(), [1, -1]);
        assert_eq!(apply_map(&CHI_MAPS[0].1, &[1, -1]).unwrap(), [3, 1]);
        let phi3 = GenusFixture::case_1_2_15().phi3;
        assert_eq!(apply_map(&phi3, &[1, 1, 1]).unwrap(), [3, -1, 1]);
    }

    #[test]
    fn bijection_examples() {
        let psi1 = psi_instance(Lemma31::I, 1).unwrap();
        let c = psi1.check().unwrap();
        assert!(c.holds());
        assert_eq!((c.domain_size, c.codomain_size), (2, 2));

        let chi1 = BijectionInstance {
            name: "chi1",
            map: CHI_MAPS[0].1,
            domain: ConstrainedRepSet::new(
                BinaryQuadForm::diagonal(3, 5).unwrap(),
                8,
                BinaryQuadForm::tilde_constraints().to_vec(),
            ),
            codomain: ConstrainedRepSet::new(
                BinaryQuadForm::diagonal(3, 5).unwrap(),
                32,
                BinaryQuadForm::tilde_constraints().to_vec(),
            ),
        };
        assert!(chi1.check().unwrap().holds());
        assert_eq!(
            chi_instance(0, 8).unwrap().check().unwrap(),
            chi1.check().unwrap()
        );

        let phi = thm4_phi_instance(2);
        assert_eq!(phi.domain.target, 45);
        assert_eq!(phi.codomain.target, 180);
        let c = phi.check().unwrap();
        assert!(c.holds(), "{c:?}");
        assert!(c.domain_size > 0);
    }

    #[test]
    fn siegel_examples() {
        let [a, b, c] = GenusFixture::all();
        assert!(a.siegel_identity_check(0).unwrap().holds());
        assert_eq!(a.siegel_identity_check(0).unwrap().target, 18);
        assert!(b.siegel_identity_check(1).unwrap().holds());
        assert_eq!(b.siegel_identity_check(1).unwrap().target, 50);
        assert!(c.siegel_identity_check(0).unwrap().holds());
        assert_eq!(c.siegel_identity_check(0).unwrap().target, 46);
    }

    #[test]
    fn phi_instances_hold_for_small_m() {
        for fixture in GenusFixture::all() {
            for m in 0..=5 {
                for inst in fixture.phi_instances(m) {
                    let c = inst.check().unwrap();
                    assert!(c.holds(), "{:?} {} m={m}: {c:?}", fixture.triple, inst.name);
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(psi_instance(Lemma31::I, 3).is_err());
        assert!(chi_instance(0, 12).is_err());
        assert!(chi_instance(3, 8).is_err());
    }
}
