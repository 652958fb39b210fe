/// Search effort knobs shared by the parameter estimators and the theta
/// bracket machinery. All randomness is derived from `seed` through the
/// splittable counter scheme, so enlarging a budget never reshuffles the
/// streams that already ran.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    /// Multistart count for basis / vector searches.
    pub starts: usize,
    /// Local refinement proposals per start.
    pub refine_steps: usize,
    pub seed: u64,
}

impl Budget {
    /// Default for the basis searches of the parameter estimators.
    pub fn search_default(seed: u64) -> Self {
        Self {
            starts: 64,
            refine_steps: 120,
            seed,
        }
    }

    /// Default for the theta alternating maximization.
    pub fn theta_default(seed: u64) -> Self {
        Self {
            starts: 50,
            refine_steps: 40,
            seed,
        }
    }

    pub fn with_starts(mut self, starts: usize) -> Self {
        self.starts = starts;
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::search_default(0)
    }
}
