//! IO, parallel scans and file formats on top of `trisum-core`.

pub mod output;
pub mod parallel;
pub mod verify;

pub use output::{write_records, Format};
pub use parallel::par_map;
pub use verify::{run_verification, IdentityId, VerifyOptions};
