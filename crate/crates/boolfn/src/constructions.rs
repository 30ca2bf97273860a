//! Secondary constructions of bent functions.
//!
//! Starting from three functions A, B, C on a common even n, the
//! two-variable extension builds
//!
//!   f(x, x_{n+1}, x_{n+2}) = AB + AC + BC + x_{n+1}x_{n+2}
//!                            + c1(x) x_{n+1} + c2(x) x_{n+2}
//!
//! with cross terms (c1, c2) picked per variant, and the four-variable
//! extension builds
//!
//!   g(x, x_{n+1}..x_{n+4}) = P (x_{n+1}+x_{n+2}) + Q (1+x_{n+1}+x_{n+3})
//!                            + (R + x_{n+1})(x_{n+2}+x_{n+3})
//!                            + (x_{n+1}+x_{n+2}) x_{n+4}
//!
//! with (P, Q, R) a role assignment of (A, B, C) per variant. Both are
//! total constructors: bentness of the inputs is never required here, so
//! verifiers can probe them on inputs violating the hypothesis.

use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::function::{index_of_bits, BooleanFunction, MAX_VARIABLES};
use crate::spectral::is_bent;

/// Cross-term selection for the two-variable extension.
///
/// The coefficient pairs (c1, c2) of x_{n+1} and x_{n+2} are hard-coded
/// rather than produced by permuting (A, B, C); the permutation
/// equivalence is asserted by tests instead of assumed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RothausVariant {
    /// (c1, c2) = (A+B, A+C)
    F,
    /// (c1, c2) = (B+C, A+B)
    FPrime,
    /// (c1, c2) = (A+C, B+C)
    FDoublePrime,
}

/// Role assignment (P, Q, R) for the four-variable extension.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HodzicVariant {
    /// (P, Q, R) = (B, A, C)
    G,
    /// (P, Q, R) = (A, C, B)
    GPrime,
    /// (P, Q, R) = (C, B, A)
    GDoublePrime,
}

/// Three functions on a common even n with lazily cached bentness flags
/// for A, B, C and A+B+C.
#[derive(Clone, Debug)]
pub struct BentTriple {
    a: BooleanFunction,
    b: BooleanFunction,
    c: BooleanFunction,
    flags: [OnceLock<bool>; 4],
}

/// Names of the four hypothesis conditions, in flag order.
pub const TRIPLE_CONDITIONS: [&str; 4] = ["A", "B", "C", "A+B+C"];

impl BentTriple {
    /// Wraps three functions sharing an even variable count. Bentness is
    /// not checked here; flags are computed on first use.
    pub fn new(a: BooleanFunction, b: BooleanFunction, c: BooleanFunction) -> Result<Self> {
        if a.n() != b.n() || a.n() != c.n() {
            return Err(Error::DimensionMismatch {
                left: a.n(),
                right: if a.n() != b.n() { b.n() } else { c.n() },
            });
        }
        if !a.n().is_multiple_of(2) {
            return Err(Error::OddVariableCount { n: a.n() });
        }
        Ok(Self {
            a,
            b,
            c,
            flags: Default::default(),
        })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn a(&self) -> &BooleanFunction {
        &self.a
    }

    pub fn b(&self) -> &BooleanFunction {
        &self.b
    }

    pub fn c(&self) -> &BooleanFunction {
        &self.c
    }

    /// A + B + C.
    pub fn sum(&self) -> BooleanFunction {
        self.a
            .xor(&self.b)
            .and_then(|ab| ab.xor(&self.c))
            .expect("dimensions checked at construction")
    }

    fn flag(&self, i: usize) -> bool {
        *self.flags[i].get_or_init(|| {
            let f = match i {
                0 => self.a.clone(),
                1 => self.b.clone(),
                2 => self.c.clone(),
                _ => self.sum(),
            };
            is_bent(&f)
        })
    }

    pub fn a_bent(&self) -> bool {
        self.flag(0)
    }

    pub fn b_bent(&self) -> bool {
        self.flag(1)
    }

    pub fn c_bent(&self) -> bool {
        self.flag(2)
    }

    pub fn sum_bent(&self) -> bool {
        self.flag(3)
    }

    /// All four hypothesis conditions: A, B, C and A+B+C bent.
    pub fn all_bent(&self) -> bool {
        (0..4).all(|i| self.flag(i))
    }

    /// Name of the first failing condition, if any.
    pub fn failing_condition(&self) -> Option<&'static str> {
        (0..4).find(|&i| !self.flag(i)).map(|i| TRIPLE_CONDITIONS[i])
    }
}

pub(crate) fn majority(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
) -> Result<BooleanFunction> {
    let ab = a.and(b)?;
    let ac = a.and(c)?;
    let bc = b.and(c)?;
    ab.xor(&ac)?.xor(&bc)
}

pub(crate) fn rothaus_parts(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    variant: RothausVariant,
) -> Result<BooleanFunction> {
    if a.n() != b.n() || a.n() != c.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: if a.n() != b.n() { b.n() } else { c.n() },
        });
    }
    if a.n() + 2 > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n: a.n() + 2,
            max: MAX_VARIABLES,
        });
    }
    let d = majority(a, b, c)?;
    let (c1, c2) = match variant {
        RothausVariant::F => (a.xor(b)?, a.xor(c)?),
        RothausVariant::FPrime => (b.xor(c)?, a.xor(b)?),
        RothausVariant::FDoublePrime => (a.xor(c)?, b.xor(c)?),
    };
    // blocks indexed by (x_{n+1}, x_{n+2}): the constant x_{n+1}x_{n+2}
    // flips only the (1,1) block
    let f00 = d.clone();
    let f10 = d.xor(&c1)?;
    let f01 = d.xor(&c2)?;
    let f11 = d.xor(&c1)?.xor(&c2)?.not();
    BooleanFunction::concat(&[f00, f10, f01, f11])
}

/// Two-variable extension of a triple; output lives on n + 2 variables
/// with the new variables at the top of the index.
pub fn rothaus(t: &BentTriple, variant: RothausVariant) -> Result<BooleanFunction> {
    rothaus_parts(&t.a, &t.b, &t.c, variant)
}

/// The three variant extensions (f, f', f'') of one input triple. Unlike
/// [`rothaus`] this does not require an even variable count, so the
/// level identities can be probed on arbitrary inputs.
pub fn rothaus_all_variants(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
) -> Result<[BooleanFunction; 3]> {
    Ok([
        rothaus_parts(a, b, c, RothausVariant::F)?,
        rothaus_parts(a, b, c, RothausVariant::FPrime)?,
        rothaus_parts(a, b, c, RothausVariant::FDoublePrime)?,
    ])
}

pub(crate) fn hodzic_parts(
    a: &BooleanFunction,
    b: &BooleanFunction,
    c: &BooleanFunction,
    variant: HodzicVariant,
) -> Result<BooleanFunction> {
    if a.n() != b.n() || a.n() != c.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: if a.n() != b.n() { b.n() } else { c.n() },
        });
    }
    let n = a.n();
    if n + 4 > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n: n + 4,
            max: MAX_VARIABLES,
        });
    }
    let (p, q, r) = match variant {
        HodzicVariant::G => (b, a, c),
        HodzicVariant::GPrime => (a, c, b),
        HodzicVariant::GDoublePrime => (c, b, a),
    };
    let mut blocks = Vec::with_capacity(16);
    for top in 0..16usize {
        let (y1, y2, y3, y4) = (top & 1, (top >> 1) & 1, (top >> 2) & 1, (top >> 3) & 1);
        let s1 = y1 ^ y2; // coefficient of P
        let s2 = 1 ^ y1 ^ y3; // coefficient of Q
        let s3 = y2 ^ y3; // coefficient of R
        let constant = (y1 & s3) ^ (s1 & y4);
        let mut block = BooleanFunction::zero(n)?;
        if s1 == 1 {
            block = block.xor(p)?;
        }
        if s2 == 1 {
            block = block.xor(q)?;
        }
        if s3 == 1 {
            block = block.xor(r)?;
        }
        if constant == 1 {
            block = block.not();
        }
        blocks.push(block);
    }
    BooleanFunction::concat(&blocks)
}

/// Four-variable extension of a triple; output lives on n + 4 variables
/// with the new variables at the top of the index.
pub fn hodzic(t: &BentTriple, variant: HodzicVariant) -> Result<BooleanFunction> {
    hodzic_parts(&t.a, &t.b, &t.c, variant)
}

/// Maiorana-McFarland bent function f(x, y) = x . pi(y) + rho(y) on 2m
/// variables, x in the low m positions. `pi` is an index table of length
/// 2^m and must be a bijection.
pub fn mm_bent(pi: &[usize], rho: &BooleanFunction) -> Result<BooleanFunction> {
    let m = rho.n();
    let size = 1usize << m;
    if pi.len() != size {
        return Err(Error::NotAPermutation { len: pi.len() });
    }
    if 2 * m > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n: 2 * m,
            max: MAX_VARIABLES,
        });
    }
    let mut seen = vec![false; size];
    for &v in pi {
        if v >= size || seen[v] {
            return Err(Error::NotAPermutation { len: pi.len() });
        }
        seen[v] = true;
    }
    let mask = size - 1;
    BooleanFunction::from_fn(2 * m, |idx| {
        let x = idx & mask;
        let y = idx >> m;
        ((x & pi[y]).count_ones() & 1 == 1) ^ rho.get(y)
    })
}

/// The inner-product quadratic x1x2 + x3x4 + ... + x_{n-1}x_n, the
/// canonical bent function on every even n.
pub fn inner_product_quadratic(n: usize) -> Result<BooleanFunction> {
    if !n.is_multiple_of(2) {
        return Err(Error::OddVariableCount { n });
    }
    // adjacent disjoint pairs: AND bits 2i against 2i+1, XOR across pairs
    BooleanFunction::from_fn(n, |idx| {
        (idx & (idx >> 1) & 0x5555_5555).count_ones() & 1 == 1
    })
}

/// The linear function x -> mask . x.
pub fn linear_function(n: usize, mask: &[bool]) -> Result<BooleanFunction> {
    if mask.len() != n {
        return Err(Error::InputLengthMismatch {
            expected: n,
            got: mask.len(),
        });
    }
    let m = index_of_bits(mask);
    BooleanFunction::from_fn(n, |idx| (m & idx).count_ones() & 1 == 1)
}

/// Builds the triple (A, A + l1.x, A + l2.x) from a bent A. Adding an
/// affine function preserves bentness, so all four hypothesis conditions
/// hold automatically.
pub fn affine_shift_triple(
    a: &BooleanFunction,
    l1: &[bool],
    l2: &[bool],
) -> Result<BentTriple> {
    if !is_bent(a) {
        return Err(Error::NotBent {
            which: "A".to_string(),
        });
    }
    let b = a.xor(&linear_function(a.n(), l1)?)?;
    let c = a.xor(&linear_function(a.n(), l2)?)?;
    BentTriple::new(a.clone(), b, c)
}

/// Seeded Maiorana-McFarland sample: a Fisher-Yates-shuffled permutation
/// and a random rho, both drawn from ChaCha8 seeded with `seed`.
/// Identical seeds give identical tables.
pub fn random_mm_bent(m: usize, seed: u64) -> Result<BooleanFunction> {
    if 2 * m > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n: 2 * m,
            max: MAX_VARIABLES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pi: Vec<usize> = (0..(1usize << m)).collect();
    pi.shuffle(&mut rng);
    let rho = BooleanFunction::random(m, &mut rng)?;
    mm_bent(&pi, &rho)
}
