use std::path::PathBuf;

use brill_core::Error;

pub const DEFAULT_TERM_CAP: u128 = 10_000_000;
pub const DEFAULT_COLUMN_CAP: usize = 5_000;

/// Resource limits shared by every command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Maximum estimated number of terms of any element a command builds.
    pub terms: u128,
    /// Maximum number of columns of a matrix handed to exact elimination.
    pub columns: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            terms: DEFAULT_TERM_CAP,
            columns: DEFAULT_COLUMN_CAP,
        }
    }
}

impl Caps {
    pub fn check_terms(&self, what: &'static str, estimate: u128) -> Result<(), Error> {
        if estimate > self.terms {
            return Err(Error::CapExceeded {
                what,
                estimate,
                cap: self.terms,
            });
        }
        Ok(())
    }
}

/// Everything a command run depends on; two runs with equal configs produce
/// identical output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub d: u32,
    pub n: usize,
    pub seed: u64,
    pub caps: Caps,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(d: u32, n: usize, caps: Caps) -> Result<Self, Error> {
        if d < 2 || n < 2 {
            return Err(Error::InvalidArgument(format!(
                "need d ≥ 2 and n ≥ 2, got d = {d}, n = {n}"
            )));
        }
        Ok(RunConfig {
            d,
            n,
            seed: 0,
            caps,
            out: None,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_out(mut self, out: PathBuf) -> Self {
        self.out = Some(out);
        self
    }
}
