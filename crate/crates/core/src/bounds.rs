//! Default problem-size limits for the exhaustive verifications.
//!
//! Setting `PROOK_MAX_K` replaces every bound except the `enumerate` output
//! cap with the given value.

pub const MAX_K_ENV: &str = "PROOK_MAX_K";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Rank-based rook-module suites, by `n`.
    pub rook_n: usize,
    /// Largest `n` printed by `enumerate`.
    pub enumerate_n: usize,
    /// Commutant nullspace solves (`4^k` unknowns).
    pub commutant_k: usize,
    /// Symbolic Laurent identities.
    pub quantum_k: usize,
    /// Highest-weight vectors and the direct-sum rank.
    pub highest_weight_k: usize,
    /// Exhaustive colored-diagram product checks.
    pub hecke_k: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            rook_n: 5,
            enumerate_n: 10,
            commutant_k: 5,
            quantum_k: 8,
            highest_weight_k: 10,
            hecke_k: 5,
        }
    }
}

impl Bounds {
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(k) = std::env::var(MAX_K_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            b = b.with_max_k(k);
        }
        b
    }

    pub fn with_max_k(mut self, k: usize) -> Self {
        self.rook_n = k;
        self.commutant_k = k;
        self.quantum_k = k;
        self.highest_weight_k = k;
        self.hecke_k = k;
        self
    }
}
