//! Constraint gadgets: Poseidon, bit decomposition, and Baby Jubjub arithmetic.

use ark_bn254::Fr;
use ark_ff::{BigInteger, Field, One, PrimeField, Zero};

use super::r1cs::{Builder, LinearCombination as Lc, Wire};
use crate::primitives::{curve_a, curve_d, params_for_width, Point};

fn one() -> Lc {
    Lc::constant(Fr::one())
}

/// x^5 in three constraints.
fn sbox(b: &mut Builder, x: &Lc) -> Lc {
    let x2 = b.mul(x, x);
    let x4 = b.mul(&x2, &x2);
    b.mul(&x4, x)
}

/// Poseidon over 1..=4 inputs; mirrors `primitives::poseidon_hash`.
pub fn poseidon(b: &mut Builder, inputs: &[Lc]) -> Lc {
    let params = params_for_width(inputs.len() + 1);
    let mut state: Vec<Lc> = std::iter::once(Lc::zero()).chain(inputs.iter().cloned()).collect();
    for r in 0..params.total_rounds() {
        for (i, cell) in state.iter_mut().enumerate() {
            *cell = &*cell + &Lc::constant(params.round_constant(r, i));
        }
        if params.is_full_round(r) {
            for cell in state.iter_mut() {
                *cell = sbox(b, cell);
            }
        } else {
            state[0] = sbox(b, &state[0]);
        }
        state = params
            .mds
            .iter()
            .map(|row| row.iter().zip(&state).fold(Lc::zero(), |acc, (m, s)| &acc + &(s * *m)))
            .collect();
    }
    state.swap_remove(0)
}

/// Little-endian decomposition of `x` into `n` boolean wires.
pub fn to_bits_le(b: &mut Builder, x: &Lc, n: usize) -> Vec<Wire> {
    let value = b.eval(x).into_bigint().to_bits_le();
    let bits: Vec<Wire> = (0..n).map(|i| b.alloc_private(if value[i] { Fr::one() } else { Fr::zero() })).collect();
    let mut packed = Lc::zero();
    let mut coeff = Fr::one();
    for bit in &bits {
        let bl: Lc = (*bit).into();
        b.enforce(bl.clone(), &one() - &bl, Lc::zero());
        packed = &packed + &(bl * coeff);
        coeff += coeff;
    }
    b.enforce(packed, one(), x.clone());
    bits
}

/// Constrains the little-endian `bits` to encode an integer `<= bound`.
pub fn enforce_le_constant(b: &mut Builder, bits: &[Wire], bound: &[bool]) {
    assert!(bound.len() >= bits.len());
    assert!(bound[bits.len()..].iter().all(|x| !x), "bound wider than bits");
    // `run` is 1 while every higher bit equals the bound's bit.
    let mut run: Option<Lc> = None;
    for i in (0..bits.len()).rev() {
        let bit: Lc = bits[i].into();
        match (bound[i], run.take()) {
            (true, None) => run = Some(bit),
            (true, Some(r)) => run = Some(b.mul(&r, &bit)),
            (false, None) => {
                b.enforce(bit, one(), Lc::zero());
            }
            (false, Some(r)) => {
                b.enforce(r.clone(), bit, Lc::zero());
                run = Some(r);
            }
        }
    }
}

/// 1 if `x == 0`, else 0. Two constraints.
pub fn is_zero(b: &mut Builder, x: &Lc) -> Wire {
    let v = b.eval(x);
    let inv = b.alloc_private(v.inverse().unwrap_or_default());
    let eq = b.alloc_private(if v.is_zero() { Fr::one() } else { Fr::zero() });
    let eql: Lc = eq.into();
    b.enforce(x.clone(), inv.into(), &one() - &eql);
    b.enforce(x.clone(), eql, Lc::zero());
    eq
}

/// A curve point whose coordinates are linear combinations.
#[derive(Clone, Debug)]
pub struct EdPoint {
    pub x: Lc,
    pub y: Lc,
}

impl EdPoint {
    pub fn constant(p: &Point) -> Self {
        EdPoint { x: Lc::constant(p.x.inner()), y: Lc::constant(p.y.inner()) }
    }

    pub fn from_wires(x: Wire, y: Wire) -> Self {
        EdPoint { x: x.into(), y: y.into() }
    }
}

/// Unified twisted Edwards addition (complete on Baby Jubjub). Six constraints.
pub fn ed_add(b: &mut Builder, p: &EdPoint, q: &EdPoint) -> EdPoint {
    let (a, d) = (curve_a(), curve_d());
    let beta = b.mul(&p.x, &q.y);
    let gamma = b.mul(&p.y, &q.x);
    let delta = b.mul(&(&p.y - &(&p.x * a)), &(&q.x + &q.y));
    let tau = b.mul(&beta, &gamma);
    let dtau = &tau * d;
    let x = b.div(&(&beta + &gamma), &(&one() + &dtau));
    let y = b.div(&(&(&delta + &(&beta * a)) - &gamma), &(&one() - &dtau));
    EdPoint { x, y }
}

/// Doubling via the curve equation. Five constraints; valid for on-curve input.
pub fn ed_double(b: &mut Builder, p: &EdPoint) -> EdPoint {
    let a = curve_a();
    let xx = b.mul(&p.x, &p.x);
    let yy = b.mul(&p.y, &p.y);
    let xy = b.mul(&p.x, &p.y);
    let axx = &xx * a;
    let x = b.div(&(&xy * Fr::from(2u64)), &(&axx + &yy));
    let two = Lc::constant(Fr::from(2u64));
    let y = b.div(&(&yy - &axx), &(&(&two - &axx) - &yy));
    EdPoint { x, y }
}

/// `bit ? p : identity`. Two constraints.
pub fn ed_select_or_identity(b: &mut Builder, bit: Wire, p: &EdPoint) -> EdPoint {
    let bl: Lc = bit.into();
    let x = b.mul(&bl, &p.x);
    let ty = b.mul(&bl, &(&p.y - &one()));
    EdPoint { x, y: &ty + &one() }
}

/// Constrains `p` to satisfy the curve equation. Three constraints.
pub fn ed_assert_on_curve(b: &mut Builder, p: &EdPoint) {
    let (a, d) = (curve_a(), curve_d());
    let xx = b.mul(&p.x, &p.x);
    let yy = b.mul(&p.y, &p.y);
    b.enforce(&xx * d, yy.clone(), &(&(&xx * a) + &yy) - &one());
}

/// `scalar * base` for little-endian scalar bits, one addition per bit.
pub fn ed_fixed_base_mul(b: &mut Builder, bits: &[Wire], powers: &[Point]) -> EdPoint {
    assert!(powers.len() >= bits.len() && !bits.is_empty());
    let term = |bit: Wire, p: &Point| {
        let bl: Lc = bit.into();
        EdPoint { x: &bl * p.x.inner(), y: &one() + &(&bl * (p.y.inner() - Fr::one())) }
    };
    let mut acc = term(bits[0], &powers[0]);
    for (bit, p) in bits.iter().zip(powers).skip(1) {
        let t = term(*bit, p);
        acc = ed_add(b, &acc, &t);
    }
    acc
}

/// `scalar * p` for a variable point, MSB-first double-and-add.
pub fn ed_var_base_mul(b: &mut Builder, bits: &[Wire], p: &EdPoint) -> EdPoint {
    let (top, rest) = bits.split_last().expect("non-empty scalar");
    let mut acc = ed_select_or_identity(b, *top, p);
    for bit in rest.iter().rev() {
        acc = ed_double(b, &acc);
        let addend = ed_select_or_identity(b, *bit, p);
        acc = ed_add(b, &acc, &addend);
    }
    acc
}
