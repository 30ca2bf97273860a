//! Algebraic normal form via the Moebius transform.
//!
//! Every f on n variables is uniquely f(x) = XOR over alpha <= x of
//! lambda_alpha, with the coefficient table obtained from the truth table
//! by the self-inverse butterfly below.

use crate::function::BooleanFunction;

const FOLD_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place Moebius butterfly over a packed bit table of 2^n entries.
/// Applying it twice is the identity.
pub(crate) fn moebius_in_place(words: &mut [u64], n: usize) {
    for (k, mask) in FOLD_MASKS.iter().enumerate().take(n.min(6)) {
        let shift = 1u32 << k;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for k in 6..n {
        let stride = 1usize << (k - 6);
        for block in (0..words.len()).step_by(stride * 2) {
            for i in 0..stride {
                words[block + stride + i] ^= words[block + i];
            }
        }
    }
}

/// Moebius-transformed coefficient table: bit at index idx(alpha) is the
/// coefficient lambda_alpha of the monomial prod x_i^{a_i}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicNormalForm {
    n: usize,
    coeffs: BooleanFunction,
}

impl AlgebraicNormalForm {
    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient lambda_alpha at monomial index `alpha`.
    pub fn coefficient(&self, alpha: usize) -> bool {
        self.coeffs.get(alpha)
    }

    /// True for the zero function, whose degree is reported as 0 by
    /// convention (the usual -infinity is not representable).
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Algebraic degree: the largest Hamming weight of an alpha with a
    /// set coefficient; 0 for constants.
    pub fn degree(&self) -> usize {
        let mut max = 0usize;
        for (wi, &w) in self.coeffs.words().iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let alpha = (wi << 6) | b;
                max = max.max(alpha.count_ones() as usize);
            }
        }
        max
    }

    /// The coefficient table reinterpreted as a truth table, so the
    /// transform can be applied again.
    pub fn as_table(&self) -> &BooleanFunction {
        &self.coeffs
    }
}

impl BooleanFunction {
    /// Algebraic normal form of the function.
    pub fn moebius(&self) -> AlgebraicNormalForm {
        let mut words = self.words().to_vec();
        moebius_in_place(&mut words, self.n());
        AlgebraicNormalForm {
            n: self.n(),
            coeffs: BooleanFunction::from_words(self.n(), words),
        }
    }

    /// Degree of the algebraic normal form; 0 for constants.
    pub fn algebraic_degree(&self) -> usize {
        self.moebius().degree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(tt: &str) -> BooleanFunction {
        BooleanFunction::parse(tt).unwrap()
    }

    /// Subset-sum definition, independent of the butterfly.
    fn naive_anf(g: &BooleanFunction) -> Vec<bool> {
        let len = g.table_len();
        (0..len)
            .map(|alpha| {
                let mut acc = false;
                for x in 0..len {
                    if x & alpha == x {
                        acc ^= g.get(x);
                    }
                }
                acc
            })
            .collect()
    }

    #[test]
    fn monomial_and_constant() {
        // x1x2 has the single coefficient at alpha = (1,1)
        let anf = f("0001").moebius();
        assert_eq!(anf.as_table().to_binary_string(), "0001");
        assert_eq!(anf.degree(), 2);
        // constant one has the single coefficient at alpha = 0
        let anf = BooleanFunction::constant(2, true).unwrap().moebius();
        assert_eq!(anf.as_table().to_binary_string(), "1000");
        assert_eq!(anf.degree(), 0);
        assert!(!anf.is_zero());
    }

    #[test]
    fn linear_sum_has_two_coefficients() {
        // x1 xor x2: coefficients at (1,0) and (0,1) only
        let anf = f("0110").moebius();
        assert_eq!(anf.as_table().to_binary_string(), "0110");
        assert_eq!(anf.degree(), 1);
    }

    #[test]
    fn zero_function_degree_convention() {
        let anf = BooleanFunction::zero(3).unwrap().moebius();
        assert!(anf.is_zero());
        assert_eq!(anf.degree(), 0);
    }

    #[test]
    fn matches_subset_sum_definition() {
        for n in 1..=8 {
            let mut state = 0xdeadbeefu64.wrapping_add(n as u64);
            let g = BooleanFunction::from_fn(n, |_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 63 == 1
            })
            .unwrap();
            let anf = g.moebius();
            let expect = naive_anf(&g);
            for (alpha, &bit) in expect.iter().enumerate() {
                assert_eq!(anf.coefficient(alpha), bit, "n={n} alpha={alpha}");
            }
            // self-inverse
            assert_eq!(&anf.as_table().moebius().coeffs, &g);
        }
    }

    #[test]
    fn quadratic_degree() {
        assert_eq!(f("0001000100011110").algebraic_degree(), 2);
        assert_eq!(BooleanFunction::zero(4).unwrap().algebraic_degree(), 0);
    }
}
