use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use ark_bn254::Fr;
use ark_ff::{BigInteger, PrimeField};

use super::gadgets::{
    ed_add, ed_assert_on_curve, ed_fixed_base_mul, ed_var_base_mul, enforce_le_constant, is_zero, poseidon, to_bits_le,
    EdPoint,
};
use super::r1cs::{is_satisfied, Builder, ConstraintSystem, LinearCombination as Lc, Wire};
use super::CircuitError;
use crate::primitives::{FieldElement, Point, PoseidonParams, SUBGROUP_ORDER_DEC};
use crate::protocol::Credential;

pub const PUBLIC_INPUTS: [&str; 5] = ["c", "pk_x", "pk_y", "t_exp", "out"];
pub const PRIVATE_INPUTS: [&str; 4] = ["token", "r_x", "r_y", "s"];

/// Bits of a reduced signature scalar (the subgroup order is below 2^251).
const SCALAR_BITS: usize = 251;

/// The compiled authentication circuit. Cheap to clone.
#[derive(Clone, Debug)]
pub struct AuthCircuitLayout {
    cs: Arc<ConstraintSystem>,
    fingerprint: [u8; 32],
}

impl PartialEq for AuthCircuitLayout {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl AuthCircuitLayout {
    /// Wraps an arbitrary constraint system, e.g. a test circuit.
    pub fn from_constraint_system(cs: ConstraintSystem) -> Self {
        let fingerprint = cs.fingerprint();
        AuthCircuitLayout { cs: Arc::new(cs), fingerprint }
    }

    pub fn constraint_count(&self) -> usize {
        self.cs.num_constraints()
    }

    pub fn constraint_system(&self) -> &ConstraintSystem {
        &self.cs
    }

    pub fn public_input_names(&self) -> &[String] {
        self.cs.public_names()
    }

    pub fn num_public_inputs(&self) -> usize {
        self.cs.num_public()
    }

    pub fn fingerprint(&self) -> [u8; 32] {
        self.fingerprint
    }

    pub fn wire(&self, name: &str) -> Option<Wire> {
        self.cs.wire(name)
    }

    /// Stable human-readable summary.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "circuit: sans-session-auth");
        let _ = writeln!(s, "constraints: {}", self.constraint_count());
        let _ = writeln!(s, "public inputs: {}", self.cs.public_names().join(", "));
        let named: Vec<&str> = self.cs.private_names().iter().map(|(n, _)| n.as_str()).collect();
        let _ = writeln!(s, "named private wires: {}", named.join(", "));
        let _ = writeln!(s, "private wires: {}", self.cs.num_private());
        let _ = writeln!(s, "fingerprint: {}", hex::encode(self.fingerprint));
        s
    }
}

/// One value per wire, public and private.
#[derive(Clone, PartialEq, Eq)]
pub struct WitnessAssignment {
    pub(crate) public: Vec<FieldElement>,
    pub(crate) private: Vec<FieldElement>,
}

impl std::fmt::Debug for WitnessAssignment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WitnessAssignment")
            .field("public", &self.public)
            .field("private_wires", &self.private.len())
            .finish()
    }
}

impl WitnessAssignment {
    pub fn new(public: Vec<FieldElement>, private: Vec<FieldElement>) -> Self {
        WitnessAssignment { public, private }
    }

    pub fn public_inputs(&self) -> &[FieldElement] {
        &self.public
    }

    pub fn private_values(&self) -> &[FieldElement] {
        &self.private
    }

    pub fn get(&self, wire: Wire) -> Option<FieldElement> {
        match wire {
            Wire::One => Some(FieldElement::ONE),
            Wire::Public(i) => self.public.get(i).copied(),
            Wire::Private(i) => self.private.get(i).copied(),
        }
    }

    /// Overwrites one wire; returns false if the wire does not exist.
    pub fn set(&mut self, wire: Wire, value: FieldElement) -> bool {
        let slot = match wire {
            Wire::One => None,
            Wire::Public(i) => self.public.get_mut(i),
            Wire::Private(i) => self.private.get_mut(i),
        };
        match slot {
            Some(s) => {
                *s = value;
                true
            }
            None => false,
        }
    }

    pub(crate) fn public_fr(&self) -> Vec<Fr> {
        self.public.iter().map(|v| v.inner()).collect()
    }

    pub(crate) fn private_fr(&self) -> Vec<Fr> {
        self.private.iter().map(|v| v.inner()).collect()
    }
}

struct AuthInputs {
    c: FieldElement,
    pk: Point,
    t_exp: FieldElement,
    token: FieldElement,
    r: Point,
    s: FieldElement,
}

fn synthesize(b: &mut Builder, inp: &AuthInputs) {
    let c = b.alloc_public("c", inp.c.inner());
    let pk_x = b.alloc_public("pk_x", inp.pk.x.inner());
    let pk_y = b.alloc_public("pk_y", inp.pk.y.inner());
    let t_exp = b.alloc_public("t_exp", inp.t_exp.inner());

    let token: Lc = b.alloc_named("token", inp.token.inner()).into();
    let r_x = b.alloc_named("r_x", inp.r.x.inner());
    let r_y = b.alloc_named("r_y", inp.r.y.inner());
    let s = b.alloc_named("s", inp.s.inner());

    let pk = EdPoint::from_wires(pk_x, pk_y);
    let r = EdPoint::from_wires(r_x, r_y);
    ed_assert_on_curve(b, &r);

    // Signed message and Fiat-Shamir challenge.
    let msg = poseidon(b, &[token.clone(), t_exp.into()]);
    let binding = poseidon(b, &[r.x.clone(), r.y.clone(), pk.x.clone(), pk.y.clone()]);
    let k = poseidon(b, &[binding, msg]);

    // s*B, with s < 2^251.
    let s_bits = to_bits_le(b, &s.into(), SCALAR_BITS);
    let lhs = ed_fixed_base_mul(b, &s_bits, crate::primitives::babyjubjub_base_powers());

    // R + k*pk, with k's bits forced to the canonical representative.
    let k_bits = to_bits_le(b, &k, Fr::MODULUS_BIT_SIZE as usize);
    let mut bound = Fr::MODULUS;
    bound.sub_with_borrow(&1u64.into());
    enforce_le_constant(b, &k_bits, &bound.to_bits_le());
    let k_pk = ed_var_base_mul(b, &k_bits, &pk);
    let rhs = ed_add(b, &r, &k_pk);

    let eq_x = is_zero(b, &(&lhs.x - &rhs.x));
    let eq_y = is_zero(b, &(&lhs.y - &rhs.y));
    let bit_value = b.eval(&eq_x.into()) * b.eval(&eq_y.into());
    let bit = b.alloc_named("b", bit_value);
    b.enforce(eq_x.into(), eq_y.into(), bit.into());
    let bit_lc: Lc = bit.into();
    b.enforce(bit_lc.clone(), &Lc::constant(Fr::from(1u64)) - &bit_lc, Lc::zero());

    let h = poseidon(b, &[c.into(), token]);
    let out_value = b.eval(&bit_lc) * b.eval(&h);
    let out = b.alloc_public("out", out_value);
    b.enforce(bit_lc, h, out.into());
}

/// Builds the authentication circuit. The result is cached process-wide.
pub fn build_circuit() -> Result<AuthCircuitLayout, CircuitError> {
    static LAYOUT: OnceLock<AuthCircuitLayout> = OnceLock::new();
    if let Some(l) = LAYOUT.get() {
        return Ok(l.clone());
    }
    for width in [3, 5] {
        if PoseidonParams::new(width).is_none() {
            return Err(CircuitError::ParameterUnavailable(format!("poseidon width {width}")));
        }
    }
    let dummy = AuthInputs {
        c: FieldElement::ZERO,
        pk: Point::base(),
        t_exp: FieldElement::ZERO,
        token: FieldElement::ZERO,
        r: Point::identity(),
        s: FieldElement::ZERO,
    };
    let mut b = Builder::new();
    synthesize(&mut b, &dummy);
    let (cs, _, _) = b.finish();
    Ok(LAYOUT.get_or_init(|| AuthCircuitLayout::from_constraint_system(cs)).clone())
}

fn subgroup_order() -> FieldElement {
    SUBGROUP_ORDER_DEC.parse().expect("constant")
}

/// Computes every wire value for proving `cred` against challenge `c`.
///
/// A credential whose signature does not verify still produces an assignment,
/// with `b = 0` and `out = 0`.
pub fn assign_witness(cred: &Credential, c: FieldElement) -> Result<WitnessAssignment, CircuitError> {
    let pk = cred.operator_pk;
    let r = cred.signature.r;
    if !pk.is_on_curve() || !pk.is_in_subgroup() {
        return Err(CircuitError::MalformedCredential("operator key not in subgroup"));
    }
    if !r.is_on_curve() || !r.is_in_subgroup() {
        return Err(CircuitError::MalformedCredential("signature R not in subgroup"));
    }
    if cred.signature.s.inner() >= subgroup_order().inner() {
        return Err(CircuitError::MalformedCredential("signature scalar not reduced"));
    }
    let inputs = AuthInputs {
        c,
        pk,
        t_exp: FieldElement::from_u64(cred.t_exp),
        token: cred.token.value(),
        r,
        s: cred.signature.s,
    };
    let mut b = Builder::new();
    synthesize(&mut b, &inputs);
    let (_, public, private) = b.finish();
    Ok(WitnessAssignment {
        public: public.into_iter().map(FieldElement::from).collect(),
        private: private.into_iter().map(FieldElement::from).collect(),
    })
}

/// Direct constraint evaluation, independent of the proving system.
pub fn satisfied(layout: &AuthCircuitLayout, w: &WitnessAssignment) -> Result<bool, CircuitError> {
    Ok(is_satisfied(layout.constraint_system(), &w.public_fr(), &w.private_fr())?)
}
