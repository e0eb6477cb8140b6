use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forms::{BinaryQuadForm, Constraint, TernaryQuadForm};

/// A form whose level sets can be enumerated under constraints.
pub trait LatticeForm<const D: usize> {
    fn solutions(&self, n: u64, constraints: &[Constraint<D>]) -> Result<Vec<[i64; D]>>;
}

impl LatticeForm<2> for BinaryQuadForm {
    fn solutions(&self, n: u64, constraints: &[Constraint<2>]) -> Result<Vec<[i64; 2]>> {
        self.enumerate(n, constraints)
    }
}

impl LatticeForm<3> for TernaryQuadForm {
    fn solutions(&self, n: u64, constraints: &[Constraint<3>]) -> Result<Vec<[i64; 3]>> {
        self.enumerate(n, constraints)
    }
}

/// `{ v : form(v) = target, v satisfies every constraint }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstrainedRepSet<F, const D: usize> {
    pub form: F,
    pub target: u64,
    pub constraints: Vec<Constraint<D>>,
}

impl<F: LatticeForm<D>, const D: usize> ConstrainedRepSet<F, D> {
    pub fn new(form: F, target: u64, constraints: Vec<Constraint<D>>) -> Self {
        ConstrainedRepSet {
            form,
            target,
            constraints,
        }
    }

    pub fn elements(&self) -> Result<Vec<[i64; D]>> {
        self.form.solutions(self.target, &self.constraints)
    }
}

/// `v -> (numerator · v) / denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExplicitLinearMap<const D: usize> {
    pub numerator: [[i64; D]; D],
    pub denominator: i64,
}

impl<const D: usize> ExplicitLinearMap<D> {
    pub const fn new(numerator: [[i64; D]; D], denominator: i64) -> Self {
        ExplicitLinearMap {
            numerator,
            denominator,
        }
    }

    pub fn integral(numerator: [[i64; D]; D]) -> Self {
        Self::new(numerator, 1)
    }

    /// The exact image; fails when some coordinate is not divisible by the
    /// denominator.
    pub fn apply(&self, v: &[i64; D]) -> Result<[i64; D]> {
        let mut out = [0i64; D];
        for (o, row) in out.iter_mut().zip(&self.numerator) {
            let s: i128 = row
                .iter()
                .zip(v)
                .map(|(&c, &x)| c as i128 * x as i128)
                .sum();
            if s % self.denominator as i128 != 0 {
                return Err(Error::MapDomain { point: v.to_vec() });
            }
            *o = i64::try_from(s / self.denominator as i128).map_err(|_| Error::Overflow)?;
        }
        Ok(out)
    }
}

pub fn apply_map<const D: usize>(map: &ExplicitLinearMap<D>, v: &[i64; D]) -> Result<[i64; D]> {
    map.apply(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BijectionFailure<const D: usize> {
    /// The image of `point` has a non-integral coordinate.
    NotIntegral { point: [i64; D] },
    /// `point` maps outside the codomain.
    OutsideCodomain { point: [i64; D], image: [i64; D] },
    /// Two domain points share `image`.
    NotInjective { image: [i64; D] },
    /// `missing` is in the codomain but not in the image.
    NotSurjective { missing: [i64; D] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionCheck<const D: usize> {
    pub domain_size: usize,
    pub codomain_size: usize,
    pub failure: Option<BijectionFailure<D>>,
}

impl<const D: usize> BijectionCheck<D> {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Enumerates both sets and checks that `map` sends the domain onto the
/// codomain one-to-one.
pub fn verify_bijection<F, G, const D: usize>(
    map: &ExplicitLinearMap<D>,
    domain: &ConstrainedRepSet<F, D>,
    codomain: &ConstrainedRepSet<G, D>,
) -> Result<BijectionCheck<D>>
where
    F: LatticeForm<D>,
    G: LatticeForm<D>,
{
    let dom = domain.elements()?;
    let cod: BTreeSet<[i64; D]> = codomain.elements()?.into_iter().collect();
    let mut check = BijectionCheck {
        domain_size: dom.len(),
        codomain_size: cod.len(),
        failure: None,
    };
    let mut image = BTreeSet::new();
    for point in dom {
        let mapped = match map.apply(&point) {
            Ok(m) => m,
            Err(Error::MapDomain { .. }) => {
                check.failure = Some(BijectionFailure::NotIntegral { point });
                return Ok(check);
            }
            Err(e) => return Err(e),
        };
        if !cod.contains(&mapped) {
            check.failure = Some(BijectionFailure::OutsideCodomain {
                point,
                image: mapped,
            });
            return Ok(check);
        }
        if !image.insert(mapped) {
            check.failure = Some(BijectionFailure::NotInjective { image: mapped });
            return Ok(check);
        }
    }
    if let Some(missing) = cod.difference(&image).next() {
        check.failure = Some(BijectionFailure::NotSurjective { missing: *missing });
    }
    Ok(check)
}
