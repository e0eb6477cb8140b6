//! Per-instance verification records.

use alloc::string::String;
use alloc::vec::Vec;

/// One checked instance of an identity: both sides and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Record {
    pub identity: String,
    pub triple: Option<[u64; 3]>,
    pub n: u64,
    pub lhs: i128,
    pub rhs: i128,
    pub pass: bool,
}

impl Record {
    /// Equality record: `pass` iff `lhs == rhs`.
    pub fn equality(
        identity: impl Into<String>,
        triple: Option<[u64; 3]>,
        n: u64,
        lhs: i128,
        rhs: i128,
    ) -> Self {
        Record {
            identity: identity.into(),
            triple,
            n,
            lhs,
            rhs,
            pass: lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.pass).count()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

impl FromIterator<Record> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = Record>>(iter: I) -> Self {
        VerificationReport {
            records: iter.into_iter().collect(),
        }
    }
}
