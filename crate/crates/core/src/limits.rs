/// Resource caps for the exhaustive enumerators and oracles.
///
/// These are configuration, not hard limits of the algorithms: raising them
/// only costs time and memory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest index accepted by the tableau and tree enumerators.
    pub max_enumeration: usize,
    /// Longest path accepted by the brute-force path counter.
    pub max_path_len: usize,
    /// Most cells for the exact chain solve, which is dense in `2^n` states.
    pub max_chain_cells: usize,
}

impl Limits {
    pub const DEFAULT_ENUMERATION: usize = 12;
    pub const DEFAULT_PATH_LEN: usize = 14;
    pub const DEFAULT_CHAIN_CELLS: usize = 8;

    pub fn with_enumeration(mut self, cap: usize) -> Self {
        self.max_enumeration = cap;
        self
    }

    pub fn with_path_len(mut self, cap: usize) -> Self {
        self.max_path_len = cap;
        self
    }

    pub fn with_chain_cells(mut self, cap: usize) -> Self {
        self.max_chain_cells = cap;
        self
    }

    /// Fail with `CapExceeded` when the chain on `n` cells is too large.
    pub fn check_chain(&self, n: usize) -> crate::Result<()> {
        if n > self.max_chain_cells {
            return Err(crate::Error::CapExceeded {
                what: "chain cell count",
                requested: n,
                cap: self.max_chain_cells,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration: Self::DEFAULT_ENUMERATION,
            max_path_len: Self::DEFAULT_PATH_LEN,
            max_chain_cells: Self::DEFAULT_CHAIN_CELLS,
        }
    }
}
