//! Identity scans behind `trisum verify`.

use std::fmt;
use std::str::FromStr;

use trisum_core::identities::{
    lemma31_sides, lemma32_sides, GenusFixture, Lemma31, TheoremCase, TheoremId,
    LEMMA32_EQUALITY_PAIRS, TABLE_1, TABLE_2, THM3_TRIPLES,
};
use trisum_core::local::{alpha2_inequality_sides, is_excluded_116, siegel_ratio_sides, Rational};
use trisum_core::reductions::{reduce, ReductionFormula};
use trisum_core::{Record, Result, TriangularTriple};

use crate::parallel::par_map;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Lemma21,
    Lemma22,
    Lemma31,
    Lemma32,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Siegel,
    AlphaRatio,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Lemma21,
        IdentityId::Lemma22,
        IdentityId::Lemma31,
        IdentityId::Lemma32,
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Thm3,
        IdentityId::Thm4,
        IdentityId::Thm5,
        IdentityId::Siegel,
        IdentityId::AlphaRatio,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Lemma21 => "lemma21",
            IdentityId::Lemma22 => "lemma22",
            IdentityId::Lemma31 => "lemma31",
            IdentityId::Lemma32 => "lemma32",
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm3 => "thm3",
            IdentityId::Thm4 => "thm4",
            IdentityId::Thm5 => "thm5",
            IdentityId::Siegel => "siegel",
            IdentityId::AlphaRatio => "alpha-ratio",
        }
    }

    /// Upper end of the scanned range when `--nmax` is absent.
    pub fn default_nmax(&self) -> u64 {
        match self {
            IdentityId::Lemma21 | IdentityId::Lemma22 => 100,
            IdentityId::Lemma31 | IdentityId::Lemma32 => 10_000,
            IdentityId::Thm5 => 100_000,
            IdentityId::Siegel => 500,
            _ => 2000,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                format!(
                    "unknown identity '{s}' (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub nmax: u64,
    pub workers: usize,
    /// Also compute both sides where the identity is not claimed. Those
    /// records carry a `.forced` suffix and never count as failures.
    pub force: bool,
}

pub const FORCED_SUFFIX: &str = ".forced";

pub fn is_forced(r: &Record) -> bool {
    r.identity.ends_with(FORCED_SUFFIX)
}

/// One unit of work; each yields one or more records.
#[derive(Clone, Debug)]
enum Task {
    Reduction(Box<ReductionFormula>, u64),
    Lemma31(Lemma31, u64),
    Lemma32(u64, u64, u64),
    Theorem(TheoremCase, u64),
    Thm5(u64),
    Siegel(usize, u64),
    AlphaRatio(u64),
}

/// Coprime sorted triples with entries at most `bound`.
pub fn coprime_triples(bound: u64) -> Vec<TriangularTriple> {
    let mut out = Vec::new();
    for a in 1..=bound {
        for b in a..=bound {
            for c in b..=bound {
                if let Ok(tt) = TriangularTriple::new(a, b, c) {
                    out.push(tt);
                }
            }
        }
    }
    out
}

fn tasks(id: IdentityId, opts: &VerifyOptions) -> Result<Vec<Task>> {
    let nmax = opts.nmax;
    let mut out = Vec::new();
    match id {
        IdentityId::Lemma21 | IdentityId::Lemma22 => {
            let want_odd = id == IdentityId::Lemma21;
            for tt in coprime_triples(8) {
                if (tt.sum() % 2 == 1) != want_odd {
                    continue;
                }
                let f = Box::new(reduce(&tt)?);
                out.extend((1..=nmax).map(|n| Task::Reduction(f.clone(), n)));
            }
        }
        IdentityId::Lemma31 => {
            for v in Lemma31::ALL {
                out.extend(
                    (1..=nmax)
                        .filter(|&m| v.admits(m))
                        .map(|m| Task::Lemma31(v, m)),
                );
            }
        }
        IdentityId::Lemma32 => {
            for (a, b) in LEMMA32_EQUALITY_PAIRS {
                out.extend((8..=nmax).step_by(8).map(|m| Task::Lemma32(a, b, m)));
            }
        }
        IdentityId::Thm1 | IdentityId::Thm2 | IdentityId::Thm3 | IdentityId::Thm4 => {
            let (tid, triples): (TheoremId, &[[u64; 3]]) = match id {
                IdentityId::Thm1 => (TheoremId::T1, &TABLE_1),
                IdentityId::Thm2 => (TheoremId::T2, &TABLE_2),
                IdentityId::Thm3 => (TheoremId::T3, &THM3_TRIPLES),
                _ => (TheoremId::T4, &[[1, 1, 27]]),
            };
            let mut sorted = triples.to_vec();
            sorted.sort();
            for t in sorted {
                let case = TheoremCase::new(tid, t)?;
                out.extend(
                    (1..=nmax)
                        .filter(|&n| opts.force || case.domain.contains(n))
                        .map(|n| Task::Theorem(case, n)),
                );
            }
        }
        IdentityId::Thm5 => out.extend((1..=nmax).map(Task::Thm5)),
        IdentityId::Siegel => {
            let mut order: Vec<usize> = (0..3).collect();
            let fixtures = GenusFixture::all();
            order.sort_by_key(|&i| fixtures[i].triple);
            for i in order {
                out.extend((0..=nmax).map(|m| Task::Siegel(i, m)));
            }
        }
        IdentityId::AlphaRatio => out.extend((1..=nmax).map(Task::AlphaRatio)),
    }
    Ok(out)
}

/// `(a/b, c/d) -> (a d, c b)`; order and equality are preserved.
fn cross(l: Rational, r: Rational) -> (i128, i128) {
    (l.numer() * r.denom(), r.numer() * l.denom())
}

const T116: Option<[u64; 3]> = Some([1, 1, 6]);

fn run_task(task: &Task) -> Result<Vec<Record>> {
    Ok(match task {
        Task::Reduction(f, n) => {
            let tt = f.input;
            let identity = if tt.sum() % 2 == 1 {
                "lemma21"
            } else {
                "lemma22"
            };
            let lhs = tt.count_direct(*n)? as i128;
            vec![Record::equality(
                identity,
                Some(tt.coefficients()),
                *n,
                lhs,
                f.evaluate(*n)?,
            )]
        }
        Task::Lemma31(v, m) => {
            let (l, r) = lemma31_sides(*v, *m)?;
            vec![Record::equality(
                format!("lemma31.{}", v.label()),
                None,
                *m,
                l as i128,
                r as i128,
            )]
        }
        Task::Lemma32(a, b, m) => {
            let (l, r) = lemma32_sides(*a, *b, *m)?;
            vec![Record::equality(
                format!("lemma32({a},{b})"),
                None,
                *m,
                l as i128,
                r as i128,
            )]
        }
        Task::Theorem(case, n) => {
            let (l, r) = case.sides(*n, true)?;
            let base = match case.id {
                TheoremId::T1 => "thm1",
                TheoremId::T2 => "thm2",
                TheoremId::T3 => "thm3",
                TheoremId::T4 => "thm4",
            };
            let identity = if case.domain.contains(*n) {
                base.to_string()
            } else {
                format!("{base}{FORCED_SUFFIX}")
            };
            vec![Record::equality(
                identity,
                Some(case.triple.coefficients()),
                *n,
                l,
                r,
            )]
        }
        Task::Thm5(n) => {
            let tt = TriangularTriple::new(1, 1, 6)?;
            let represented = tt.is_represented(*n)? as i128;
            let allowed = !is_excluded_116(*n) as i128;
            vec![Record::equality("thm5", T116, *n, represented, allowed)]
        }
        Task::Siegel(i, m) => {
            let fx = &GenusFixture::all()[*i];
            let c = fx.siegel_identity_check(*m)?;
            let t = Some(fx.triple);
            let rec = |name: &str, (l, r): (u64, u64)| {
                Record::equality(name, t, *m, l as i128, r as i128)
            };
            vec![
                rec("siegel", c.weighted),
                rec("siegel.f1-f2", c.f1_f2),
                rec("siegel.g2-split", c.g2_split),
            ]
        }
        Task::AlphaRatio(n) => {
            let (l, r) = siegel_ratio_sides(*n)?;
            let (l, r) = cross(l, r);
            let (gl, gr) = alpha2_inequality_sides(*n)?;
            let (gl, gr) = cross(gl, gr);
            vec![
                Record::equality("alpha-ratio", T116, *n, l, r),
                Record {
                    identity: "alpha-ineq".into(),
                    triple: T116,
                    n: *n,
                    lhs: gl,
                    rhs: gr,
                    pass: gl > gr,
                },
            ]
        }
    })
}

/// Totals for one scan. Forced records are counted apart and never fail it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summary {
    pub checked: usize,
    pub failed: usize,
    pub forced: usize,
    pub first_failure: Option<Record>,
}

impl Summary {
    pub fn of(records: &[Record]) -> Self {
        let forced = records.iter().filter(|r| is_forced(r)).count();
        let mut failures = records.iter().filter(|r| !is_forced(r) && !r.pass);
        let first_failure = failures.next().cloned();
        Summary {
            checked: records.len() - forced,
            failed: first_failure.iter().count() + failures.count(),
            forced,
            first_failure,
        }
    }

    /// 0 when every checked record passes, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.failed > 0)
    }
}

/// Every record for `id` over its range, sorted by `(triple, identity, n)`.
pub fn run_verification(id: IdentityId, opts: &VerifyOptions) -> Result<Vec<Record>> {
    let tasks = tasks(id, opts)?;
    let mut records: Vec<Record> = par_map(&tasks, opts.workers, run_task)?
        .into_iter()
        .flatten()
        .collect();
    records.sort_by(|a, b| (a.triple, &a.identity, a.n).cmp(&(b.triple, &b.identity, b.n)));
    Ok(records)
}
