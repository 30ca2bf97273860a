//! Iterated four-variable extension: from a seed triple on n variables
//! whose members and sum are all bent, each level builds the triple
//! (g, g', g'') on four more variables, giving verified bent functions
//! on n + 4k variables until the capacity cap.

use crate::constructions::{hodzic, BentTriple, HodzicVariant};
use crate::error::{Error, Result};
use crate::function::MAX_VARIABLES;

/// The fixed variant assignment applied at every level.
pub const LEVEL_VARIANTS: [HodzicVariant; 3] = [
    HodzicVariant::G,
    HodzicVariant::GPrime,
    HodzicVariant::GDoublePrime,
];

/// One rung of the iteration: the current triple, how it was built, and
/// how far bentness has actually been transform-checked.
#[derive(Clone, Debug)]
pub struct IterationState {
    level: usize,
    triple: BentTriple,
    provenance: Vec<[HodzicVariant; 3]>,
    verified_through: usize,
}

impl IterationState {
    /// Wraps a seed triple as level 0, transform-checking all four
    /// bentness conditions. Rejection names the failing condition.
    pub fn seed(triple: BentTriple) -> Result<Self> {
        if let Some(condition) = triple.failing_condition() {
            return Err(Error::NotBent {
                which: condition.to_string(),
            });
        }
        Ok(Self {
            level: 0,
            triple,
            provenance: Vec::new(),
            verified_through: 0,
        })
    }

    /// Level index k; the triple lives on n0 + 4k variables.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn triple(&self) -> &BentTriple {
        &self.triple
    }

    /// Variant tags applied per level, one entry per step taken.
    pub fn provenance(&self) -> &[[HodzicVariant; 3]] {
        &self.provenance
    }

    /// Highest level whose triple was transform-checked.
    pub fn verified_through(&self) -> usize {
        self.verified_through
    }

    /// Builds the next triple and transform-checks it.
    pub fn next_level(&self) -> Result<IterationState> {
        self.step(true)
    }

    fn step(&self, verify: bool) -> Result<IterationState> {
        let n = self.triple.n();
        if n + 4 > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n: n + 4,
                max: MAX_VARIABLES,
            });
        }
        let g = hodzic(&self.triple, LEVEL_VARIANTS[0])?;
        let gp = hodzic(&self.triple, LEVEL_VARIANTS[1])?;
        let gpp = hodzic(&self.triple, LEVEL_VARIANTS[2])?;
        let next = BentTriple::new(g, gp, gpp)?;
        if verify {
            if let Some(condition) = next.failing_condition() {
                // the construction guarantees bentness, so a failure here
                // means a transcription bug, not bad input
                return Err(Error::IdentityViolation {
                    claim: "iterated construction bentness",
                    detail: format!("{condition} not bent at level {}", self.level + 1),
                });
            }
        }
        let mut provenance = self.provenance.clone();
        provenance.push(LEVEL_VARIANTS);
        Ok(IterationState {
            level: self.level + 1,
            triple: next,
            provenance,
            verified_through: if verify {
                self.level + 1
            } else {
                self.verified_through
            },
        })
    }
}

/// Runs k levels from a seed triple, returning the states for levels
/// 1..=k. Capacity is checked before any work; the seed must satisfy all
/// four bentness conditions. With `verify` every produced function and
/// each level's triple sum are transform-checked; without it levels
/// after the seed are trusted to the construction.
pub fn run_iteration(seed: BentTriple, k: usize, verify: bool) -> Result<Vec<IterationState>> {
    if k == 0 {
        return Err(Error::ZeroIterationDepth);
    }
    let target = seed.n().saturating_add(k.saturating_mul(4));
    if target > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n: target,
            max: MAX_VARIABLES,
        });
    }
    let mut state = IterationState::seed(seed)?;
    let mut levels = Vec::with_capacity(k);
    for _ in 0..k {
        state = state.step(verify)?;
        levels.push(state.clone());
    }
    Ok(levels)
}
