//! Poseidon over the BN254 scalar field with the circom parameter set:
//! x^5 S-box, 8 full rounds, state width = inputs + 1, capacity element first.

use std::sync::OnceLock;

use ark_bn254::Fr;
use ark_ff::{BigInt, Field, PrimeField};

use super::poseidon_constants as k;
use super::{FieldElement, PrimitivesError};

/// Largest supported number of hash inputs (state width 5).
pub const MAX_ARITY: usize = 4;

/// Round constants and MDS matrix for one state width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoseidonParams {
    pub width: usize,
    pub full_rounds: usize,
    pub partial_rounds: usize,
    /// `(full_rounds + partial_rounds) * width` constants, round-major.
    pub round_constants: Vec<Fr>,
    /// Row-major; the linear layer computes `state'[i] = sum_j mds[i][j] * state[j]`.
    pub mds: Vec<Vec<Fr>>,
}

fn to_fr(limbs: &[u64; 4]) -> Fr {
    Fr::from_bigint(BigInt::new(*limbs)).expect("vendored constant is canonical")
}

impl PoseidonParams {
    /// Builds the parameter set for `width` (2..=5) from the vendored constants.
    pub fn new(width: usize) -> Option<Self> {
        let (partial_rounds, rc, mds): (usize, &[[u64; 4]], Vec<Vec<Fr>>) = match width {
            2 => (k::PARTIAL_ROUNDS_T2, &k::ROUND_CONSTANTS_T2, rows(&k::MDS_T2)),
            3 => (k::PARTIAL_ROUNDS_T3, &k::ROUND_CONSTANTS_T3, rows(&k::MDS_T3)),
            4 => (k::PARTIAL_ROUNDS_T4, &k::ROUND_CONSTANTS_T4, rows(&k::MDS_T4)),
            5 => (k::PARTIAL_ROUNDS_T5, &k::ROUND_CONSTANTS_T5, rows(&k::MDS_T5)),
            _ => return None,
        };
        Some(PoseidonParams {
            width,
            full_rounds: k::FULL_ROUNDS,
            partial_rounds,
            round_constants: rc.iter().map(to_fr).collect(),
            mds,
        })
    }

    pub fn total_rounds(&self) -> usize {
        self.full_rounds + self.partial_rounds
    }

    /// Whether round `r` applies the S-box to every cell.
    pub fn is_full_round(&self, r: usize) -> bool {
        let half = self.full_rounds / 2;
        r < half || r >= half + self.partial_rounds
    }

    pub fn round_constant(&self, round: usize, cell: usize) -> Fr {
        self.round_constants[round * self.width + cell]
    }

    pub fn permute(&self, state: &mut [Fr]) {
        assert_eq!(state.len(), self.width);
        let mut next = vec![Fr::from(0u64); self.width];
        for r in 0..self.total_rounds() {
            for (i, cell) in state.iter_mut().enumerate() {
                *cell += self.round_constant(r, i);
            }
            if self.is_full_round(r) {
                state.iter_mut().for_each(|c| *c = sbox(*c));
            } else {
                state[0] = sbox(state[0]);
            }
            for (i, out) in next.iter_mut().enumerate() {
                *out = self.mds[i].iter().zip(state.iter()).map(|(m, s)| *m * s).sum();
            }
            state.copy_from_slice(&next);
        }
    }
}

fn rows<const T: usize>(m: &[[[u64; 4]; T]; T]) -> Vec<Vec<Fr>> {
    m.iter().map(|row| row.iter().map(to_fr).collect()).collect()
}

#[inline]
fn sbox(x: Fr) -> Fr {
    let x2 = x.square();
    x2.square() * x
}

/// Shared, lazily built parameters for state width 2..=5.
pub(crate) fn params_for_width(width: usize) -> &'static PoseidonParams {
    static PARAMS: [OnceLock<PoseidonParams>; MAX_ARITY] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    assert!((2..=MAX_ARITY + 1).contains(&width), "unsupported width {width}");
    PARAMS[width - 2].get_or_init(|| PoseidonParams::new(width).expect("width checked"))
}

/// Hashes 1..=4 field elements.
pub fn poseidon_hash(inputs: &[FieldElement]) -> Result<FieldElement, PrimitivesError> {
    if inputs.is_empty() {
        return Err(PrimitivesError::EmptyInput);
    }
    if inputs.len() > MAX_ARITY {
        return Err(PrimitivesError::ArityTooLarge(inputs.len()));
    }
    let params = params_for_width(inputs.len() + 1);
    let mut state = Vec::with_capacity(params.width);
    state.push(Fr::from(0u64));
    state.extend(inputs.iter().map(|x| x.0));
    params.permute(&mut state);
    Ok(FieldElement(state[0]))
}

/// Hash of two elements; arity is fixed so this cannot fail.
pub(crate) fn hash2(a: FieldElement, b: FieldElement) -> FieldElement {
    poseidon_hash(&[a, b]).expect("arity 2 is supported")
}

pub(crate) fn hash4(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> FieldElement {
    poseidon_hash(&[a, b, c, d]).expect("arity 4 is supported")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn published_circom_vectors() {
        let one = FieldElement::from_u64(1);
        let two = FieldElement::from_u64(2);
        assert_eq!(
            hex::encode(poseidon_hash(&[one]).unwrap().to_bytes().iter().rev().copied().collect::<Vec<_>>()),
            "29176100eaa962bdc1fe6c654d6a3c130e96a4d1168b33848b897dc502820133"
        );
        assert_eq!(
            hex::encode(poseidon_hash(&[one, two]).unwrap().to_bytes().iter().rev().copied().collect::<Vec<_>>()),
            "115cc0f5e7d690413df64c6b9662e9cf2a3617f2743245519e19607a4417189a"
        );
    }

    #[test]
    fn hash_of_zero_matches_reference() {
        assert_eq!(
            poseidon_hash(&[FieldElement::ZERO]).unwrap(),
            fe("19014214495641488759237505126948346942972912379615652741039992445865937985820")
        );
    }

    #[test]
    fn arity_errors() {
        assert_eq!(poseidon_hash(&[]), Err(PrimitivesError::EmptyInput));
        assert_eq!(poseidon_hash(&[FieldElement::ZERO; 5]), Err(PrimitivesError::ArityTooLarge(5)));
    }

    #[test]
    fn deterministic_and_order_sensitive() {
        let a = FieldElement::from_u64(7);
        let b = FieldElement::from_u64(11);
        assert_eq!(poseidon_hash(&[a]).unwrap(), poseidon_hash(&[a]).unwrap());
        assert_ne!(hash2(a, b), hash2(b, a));
    }

    #[test]
    fn independently_built_params_agree() {
        for width in 2..=5 {
            assert_eq!(PoseidonParams::new(width).unwrap(), PoseidonParams::new(width).unwrap());
        }
        assert!(PoseidonParams::new(6).is_none());
    }

    #[test]
    fn round_counts() {
        let expected = [(2, 56), (3, 57), (4, 56), (5, 60)];
        for (width, rp) in expected {
            let p = params_for_width(width);
            assert_eq!(p.full_rounds, 8);
            assert_eq!(p.partial_rounds, rp);
            assert_eq!(p.round_constants.len(), (8 + rp) * width);
        }
    }
}
