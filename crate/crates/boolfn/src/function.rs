//! Bit-packed truth tables of Boolean functions on up to 24 variables.
//!
//! A function f on n variables is stored as 2^n bits, where bit
//! idx(x1,..,xn) = sum x_i * 2^(i-1) holds f(x). x1 is the least
//! significant input bit, so appending variables at the top concatenates
//! table blocks.

use crate::error::{Error, Result};
use rand::Rng;

/// Hard capacity limit: tables up to 2^24 bits (2 MiB packed).
pub const MAX_VARIABLES: usize = 24;

/// Truth-table index of an input vector, least significant bit first.
pub fn index_of_bits(x: &[bool]) -> usize {
    x.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | ((b as usize) << i))
}

fn word_len(n: usize) -> usize {
    (1usize << n).div_ceil(64)
}

fn tail_mask(n: usize) -> u64 {
    let bits = 1usize << n;
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn check_var_count(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_VARIABLES,
        });
    }
    Ok(())
}

/// A Boolean function f: F_2^n -> F_2 as a bit-packed truth table.
///
/// Immutable after construction; all operations return new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    /// Builds a function by evaluating `f` at every table index.
    pub fn from_fn<F: FnMut(usize) -> bool>(n: usize, mut f: F) -> Result<Self> {
        check_var_count(n)?;
        let mut words = vec![0u64; word_len(n)];
        for idx in 0..(1usize << n) {
            if f(idx) {
                words[idx >> 6] |= 1u64 << (idx & 63);
            }
        }
        Ok(Self { n, words })
    }

    /// The constant-zero function.
    pub fn zero(n: usize) -> Result<Self> {
        check_var_count(n)?;
        Ok(Self {
            n,
            words: vec![0; word_len(n)],
        })
    }

    /// A constant function.
    pub fn constant(n: usize, value: bool) -> Result<Self> {
        check_var_count(n)?;
        let mut words = vec![0u64; word_len(n)];
        if value {
            words.fill(u64::MAX);
            let last = words.len() - 1;
            words[last] &= tail_mask(n);
        }
        Ok(Self { n, words })
    }

    /// The coordinate projection onto input bit `i` (0-based, so `i = 0`
    /// is the least significant input).
    pub fn coordinate(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InputLengthMismatch {
                expected: n,
                got: i + 1,
            });
        }
        Self::from_fn(n, |idx| (idx >> i) & 1 == 1)
    }

    /// A function on n <= 6 variables from the low 2^n bits of `bits`.
    pub fn from_table_bits(n: usize, bits: u64) -> Result<Self> {
        check_var_count(n)?;
        if n > 6 {
            return Err(Error::TooManyVariables { n, max: 6 });
        }
        Ok(Self {
            n,
            words: vec![bits & tail_mask(n)],
        })
    }

    /// A uniformly random function, driven entirely by `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_var_count(n)?;
        let mut words: Vec<u64> = (0..word_len(n)).map(|_| rng.gen()).collect();
        let last = words.len() - 1;
        words[last] &= tail_mask(n);
        Ok(Self { n, words })
    }

    /// Parses a truth-table string.
    ///
    /// Two formats are accepted:
    /// - a binary string of 2^n characters '0'/'1', index 0 leftmost;
    /// - a hex string prefixed `0x`, where byte j (two hex digits, in
    ///   increasing-index order) holds table indices 8j..8j+7 at bit
    ///   position idx mod 8. A single hex digit encodes the 4-bit table
    ///   of a 2-variable function.
    ///
    /// The variable count is inferred from the length.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(digits) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
            Self::parse_hex(digits)
        } else {
            Self::parse_binary(text)
        }
    }

    fn parse_binary(text: &str) -> Result<Self> {
        let bits = text.len();
        if bits < 2 || !bits.is_power_of_two() {
            return Err(Error::InvalidLength { bits });
        }
        let n = bits.trailing_zeros() as usize;
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        let mut words = vec![0u64; word_len(n)];
        for (idx, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => words[idx >> 6] |= 1u64 << (idx & 63),
                _ => return Err(Error::InvalidCharacter { ch, pos: idx }),
            }
        }
        Ok(Self { n, words })
    }

    fn parse_hex(digits: &str) -> Result<Self> {
        let bits = digits.len() * 4;
        if bits < 4 || !bits.is_power_of_two() {
            return Err(Error::InvalidLength { bits });
        }
        let n = bits.trailing_zeros() as usize;
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        let mut nibbles = Vec::with_capacity(digits.len());
        for (pos, ch) in digits.chars().enumerate() {
            let v = ch
                .to_digit(16)
                .ok_or(Error::InvalidCharacter { ch, pos: pos + 2 })?;
            nibbles.push(v as u64);
        }
        let mut words = vec![0u64; word_len(n)];
        if nibbles.len() == 1 {
            words[0] = nibbles[0];
        } else {
            for (j, pair) in nibbles.chunks_exact(2).enumerate() {
                let byte = (pair[0] << 4) | pair[1];
                words[j >> 3] |= byte << (8 * (j & 7));
            }
        }
        Ok(Self { n, words })
    }

    /// Number of input variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Table length, 2^n.
    pub fn table_len(&self) -> usize {
        1usize << self.n
    }

    /// Value at table index `idx`.
    ///
    /// Panics if `idx >= 2^n`.
    pub fn get(&self, idx: usize) -> bool {
        assert!(idx < self.table_len(), "table index out of range");
        (self.words[idx >> 6] >> (idx & 63)) & 1 == 1
    }

    /// Evaluates the function at an input vector (x1 first).
    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::InputLengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(self.get(index_of_bits(x)))
    }

    /// Number of inputs mapped to 1.
    pub fn hamming_weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// True when the function is constant zero.
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Pointwise XOR.
    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    /// Pointwise AND (product of functions).
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self { n: self.n, words })
    }

    /// Pointwise complement, f XOR 1.
    pub fn not(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let last = words.len() - 1;
        words[last] &= tail_mask(self.n);
        Self { n: self.n, words }
    }

    /// Direct sum h(x, y) = f(x) XOR g(y) on n + m variables, with the
    /// inputs of `self` in the low positions.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        if self.n >= 6 {
            // block-aligned: one full copy of the table per upper index
            let mut words = Vec::with_capacity(word_len(n));
            for y in 0..other.table_len() {
                if other.get(y) {
                    words.extend(self.words.iter().map(|w| !w));
                } else {
                    words.extend_from_slice(&self.words);
                }
            }
            Ok(Self { n, words })
        } else {
            let mask = self.table_len() - 1;
            let low = self.n;
            Self::from_fn(n, |idx| self.get(idx & mask) ^ other.get(idx >> low))
        }
    }

    /// Concatenates 2^k same-size blocks into a function on n + k
    /// variables; block q becomes the restriction at top-variable
    /// assignment with index q.
    pub fn concat(blocks: &[Self]) -> Result<Self> {
        let count = blocks.len();
        if count < 2 || !count.is_power_of_two() {
            return Err(Error::InvalidLength { bits: count });
        }
        let k = count.trailing_zeros() as usize;
        let inner = blocks[0].n;
        for b in blocks {
            blocks[0].check_same_n(b)?;
        }
        let n = inner + k;
        if n > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                n,
                max: MAX_VARIABLES,
            });
        }
        if inner >= 6 {
            let mut words = Vec::with_capacity(word_len(n));
            for b in blocks {
                words.extend_from_slice(&b.words);
            }
            Ok(Self { n, words })
        } else {
            let mask = (1usize << inner) - 1;
            Self::from_fn(n, |idx| blocks[idx >> inner].get(idx & mask))
        }
    }

    /// Splits off the top two variables, returning the four restrictions
    /// (f00, f10, f01, f11) where f_ab(x) = f(x, x_{n+1}=a, x_{n+2}=b).
    ///
    /// `Self::concat` on the result reproduces the input.
    pub fn decompose_top2(&self) -> Result<[Self; 4]> {
        if self.n < 3 {
            return Err(Error::TooFewVariables { n: self.n, min: 3 });
        }
        let inner = self.n - 2;
        let block_bits = 1usize << inner;
        let part = |q: usize| -> Self {
            if inner >= 6 {
                let wpb = block_bits >> 6;
                Self {
                    n: inner,
                    words: self.words[q * wpb..(q + 1) * wpb].to_vec(),
                }
            } else {
                let base = q * block_bits;
                Self::from_fn(inner, |idx| self.get(base + idx)).expect("inner >= 1")
            }
        };
        Ok([part(0), part(1), part(2), part(3)])
    }

    /// Table rendered as '0'/'1' characters, index 0 leftmost.
    pub fn to_binary_string(&self) -> String {
        (0..self.table_len())
            .map(|idx| if self.get(idx) { '1' } else { '0' })
            .collect()
    }

    /// Packed table bytes in increasing-index order; bit idx mod 8 of
    /// byte idx div 8 holds table index idx.
    pub fn to_le_bytes(&self) -> Vec<u8> {
        let nbytes = self.table_len().div_ceil(8);
        (0..nbytes)
            .map(|j| ((self.words[j >> 3] >> (8 * (j & 7))) & 0xff) as u8)
            .collect()
    }

    /// Hex rendering, `0x`-prefixed. Needs at least 4 table bits (n >= 2);
    /// a 2-variable table is one hex digit, larger tables whole bytes.
    pub fn to_hex_string(&self) -> Result<String> {
        if self.n < 2 {
            return Err(Error::HexTooSmall { n: self.n });
        }
        if self.n == 2 {
            return Ok(format!("0x{:x}", self.words[0] & 0xf));
        }
        let mut out = String::with_capacity(2 + self.table_len() / 4);
        out.push_str("0x");
        for byte in self.to_le_bytes() {
            out.push_str(&format!("{byte:02x}"));
        }
        Ok(out)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_len(n));
        Self { n, words }
    }
}

impl std::fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_binary_string())
    }
}

impl std::fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 6 {
            write!(f, "BooleanFunction(n={}, {})", self.n, self.to_binary_string())
        } else {
            write!(
                f,
                "BooleanFunction(n={}, weight={})",
                self.n,
                self.hamming_weight()
            )
        }
    }
}
