//! A minimal rank-1 constraint system: wires, sparse linear combinations,
//! constraints `<a,z> * <b,z> = <c,z>`, and a builder that records a
//! satisfying assignment while the constraints are emitted.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use ark_bn254::Fr;
use ark_ff::{Field, One, Zero};
use sha2::{Digest, Sha256};

use crate::primitives::FieldElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Wire {
    /// The constant 1.
    One,
    Public(usize),
    Private(usize),
}

/// Sparse `sum coeff_i * wire_i`, kept sorted by wire with no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearCombination(Vec<(Wire, Fr)>);

impl LinearCombination {
    pub fn zero() -> Self {
        LinearCombination(Vec::new())
    }

    pub fn constant(c: Fr) -> Self {
        LinearCombination::from(Wire::One) * c
    }

    pub fn terms(&self) -> &[(Wire, Fr)] {
        &self.0
    }

    fn from_map(map: BTreeMap<Wire, Fr>) -> Self {
        LinearCombination(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn combine(&self, other: &Self, sign: Fr) -> Self {
        let mut map: BTreeMap<Wire, Fr> = self.0.iter().copied().collect();
        for (w, c) in &other.0 {
            *map.entry(*w).or_insert_with(Fr::zero) += sign * c;
        }
        Self::from_map(map)
    }

    pub fn eval(&self, public: &[Fr], private: &[Fr]) -> Fr {
        self.0
            .iter()
            .map(|(w, c)| {
                let v = match w {
                    Wire::One => Fr::one(),
                    Wire::Public(i) => public[*i],
                    Wire::Private(i) => private[*i],
                };
                v * c
            })
            .sum()
    }

    fn max_indices(&self) -> (Option<usize>, Option<usize>) {
        let mut out = (None, None);
        for (w, _) in &self.0 {
            match w {
                Wire::Public(i) => out.0 = out.0.max(Some(*i)),
                Wire::Private(i) => out.1 = out.1.max(Some(*i)),
                Wire::One => {}
            }
        }
        out
    }
}

impl From<Wire> for LinearCombination {
    fn from(w: Wire) -> Self {
        LinearCombination(vec![(w, Fr::one())])
    }
}

impl Add<&LinearCombination> for &LinearCombination {
    type Output = LinearCombination;
    fn add(self, rhs: &LinearCombination) -> LinearCombination {
        self.combine(rhs, Fr::one())
    }
}

impl Sub<&LinearCombination> for &LinearCombination {
    type Output = LinearCombination;
    fn sub(self, rhs: &LinearCombination) -> LinearCombination {
        self.combine(rhs, -Fr::one())
    }
}

impl Mul<Fr> for LinearCombination {
    type Output = LinearCombination;
    fn mul(self, k: Fr) -> LinearCombination {
        if k.is_zero() {
            return LinearCombination::zero();
        }
        LinearCombination(self.0.into_iter().map(|(w, c)| (w, c * k)).collect())
    }
}

impl Mul<Fr> for &LinearCombination {
    type Output = LinearCombination;
    fn mul(self, k: Fr) -> LinearCombination {
        self.clone() * k
    }
}

impl Neg for &LinearCombination {
    type Output = LinearCombination;
    fn neg(self) -> LinearCombination {
        self * -Fr::one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: LinearCombination,
    pub b: LinearCombination,
    pub c: LinearCombination,
}

/// The shape of a circuit: wire counts, names and constraints. No values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub(crate) public_names: Vec<String>,
    pub(crate) private_count: usize,
    pub(crate) private_names: Vec<(String, usize)>,
    pub(crate) constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn num_public(&self) -> usize {
        self.public_names.len()
    }

    pub fn num_private(&self) -> usize {
        self.private_count
    }

    pub fn public_names(&self) -> &[String] {
        &self.public_names
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Named private wires, in allocation order.
    pub fn private_names(&self) -> &[(String, usize)] {
        &self.private_names
    }

    pub fn wire(&self, name: &str) -> Option<Wire> {
        if let Some(i) = self.public_names.iter().position(|n| n == name) {
            return Some(Wire::Public(i));
        }
        self.private_names.iter().find(|(n, _)| n == name).map(|(_, i)| Wire::Private(*i))
    }

    /// SHA-256 over the names, dimensions and every coefficient.
    pub fn fingerprint(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(b"sans-r1cs-v1");
        h.update((self.public_names.len() as u64).to_le_bytes());
        for n in &self.public_names {
            h.update((n.len() as u64).to_le_bytes());
            h.update(n.as_bytes());
        }
        h.update((self.private_count as u64).to_le_bytes());
        h.update((self.constraints.len() as u64).to_le_bytes());
        for con in &self.constraints {
            for lc in [&con.a, &con.b, &con.c] {
                h.update((lc.0.len() as u64).to_le_bytes());
                for (w, c) in &lc.0 {
                    let (tag, idx) = match w {
                        Wire::One => (0u8, 0usize),
                        Wire::Public(i) => (1, *i),
                        Wire::Private(i) => (2, *i),
                    };
                    h.update([tag]);
                    h.update((idx as u64).to_le_bytes());
                    h.update(FieldElement::from(*c).to_bytes());
                }
            }
        }
        h.finalize().into()
    }

    /// Index of the first violated constraint, if any.
    pub fn first_unsatisfied(&self, public: &[Fr], private: &[Fr]) -> Option<usize> {
        self.constraints
            .iter()
            .position(|con| con.a.eval(public, private) * con.b.eval(public, private) != con.c.eval(public, private))
    }
}

/// Emits constraints and records wire values at the same time.
///
/// Gadgets always compute values; when only the shape is wanted the inputs are
/// dummies and the values are discarded.
#[derive(Default)]
pub struct Builder {
    cs: ConstraintSystem,
    public: Vec<Fr>,
    private: Vec<Fr>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn alloc_public(&mut self, name: &str, value: Fr) -> Wire {
        self.cs.public_names.push(name.to_string());
        self.public.push(value);
        Wire::Public(self.public.len() - 1)
    }

    pub fn alloc_private(&mut self, value: Fr) -> Wire {
        self.private.push(value);
        self.cs.private_count += 1;
        Wire::Private(self.private.len() - 1)
    }

    pub fn alloc_named(&mut self, name: &str, value: Fr) -> Wire {
        let w = self.alloc_private(value);
        if let Wire::Private(i) = w {
            self.cs.private_names.push((name.to_string(), i));
        }
        w
    }

    pub fn enforce(&mut self, a: LinearCombination, b: LinearCombination, c: LinearCombination) {
        self.cs.constraints.push(Constraint { a, b, c });
    }

    pub fn eval(&self, lc: &LinearCombination) -> Fr {
        lc.eval(&self.public, &self.private)
    }

    /// Allocates `a * b` and constrains it.
    pub fn mul(&mut self, a: &LinearCombination, b: &LinearCombination) -> LinearCombination {
        let v = self.eval(a) * self.eval(b);
        let w = self.alloc_private(v);
        self.enforce(a.clone(), b.clone(), w.into());
        w.into()
    }

    /// Allocates `num / den` constrained by `den * q = num`. A zero denominator
    /// yields the value 0, which leaves the constraint unsatisfied unless `num`
    /// is also 0.
    pub fn div(&mut self, num: &LinearCombination, den: &LinearCombination) -> LinearCombination {
        let v = self.eval(den).inverse().map(|inv| inv * self.eval(num)).unwrap_or_default();
        let w = self.alloc_private(v);
        self.enforce(den.clone(), w.into(), num.clone());
        w.into()
    }

    pub fn finish(self) -> (ConstraintSystem, Vec<Fr>, Vec<Fr>) {
        (self.cs, self.public, self.private)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error(
    "assignment has {got_public} public / {got_private} private values, circuit needs {want_public} / {want_private}"
)]
pub struct DimensionMismatch {
    pub want_public: usize,
    pub want_private: usize,
    pub got_public: usize,
    pub got_private: usize,
}

/// Checks every constraint against the given values.
pub fn is_satisfied(cs: &ConstraintSystem, public: &[Fr], private: &[Fr]) -> Result<bool, DimensionMismatch> {
    if public.len() != cs.num_public() || private.len() != cs.num_private() {
        return Err(DimensionMismatch {
            want_public: cs.num_public(),
            want_private: cs.num_private(),
            got_public: public.len(),
            got_private: private.len(),
        });
    }
    debug_assert!(cs.constraints.iter().all(|con| {
        [&con.a, &con.b, &con.c].iter().all(|lc| {
            let (p, s) = lc.max_indices();
            !matches!(p, Some(i) if i >= public.len()) && !matches!(s, Some(i) if i >= private.len())
        })
    }));
    Ok(cs.first_unsatisfied(public, private).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_combinations_merge_and_cancel() {
        let a = LinearCombination::from(Wire::Private(0));
        let b = LinearCombination::from(Wire::Private(1));
        let sum = &a + &b;
        assert_eq!(sum.terms().len(), 2);
        let back = &sum - &b;
        assert_eq!(back, a);
        assert!((&a - &a).terms().is_empty());
        assert_eq!(a.clone() * Fr::zero(), LinearCombination::zero());
    }

    #[test]
    fn square_gadget_satisfies_and_detects_tamper() {
        let mut b = Builder::new();
        let x = b.alloc_public("x", Fr::from(3u64));
        let xl: LinearCombination = x.into();
        let sq = b.mul(&xl, &xl);
        assert_eq!(b.eval(&sq), Fr::from(9u64));
        let (cs, public, mut private) = b.finish();
        assert!(is_satisfied(&cs, &public, &private).unwrap());
        private[0] += Fr::one();
        assert!(!is_satisfied(&cs, &public, &private).unwrap());
        assert!(is_satisfied(&cs, &public, &[]).is_err());
    }

    #[test]
    fn division_by_zero_is_unsatisfiable() {
        let mut b = Builder::new();
        let one = LinearCombination::constant(Fr::one());
        b.div(&one, &LinearCombination::zero());
        let (cs, public, private) = b.finish();
        assert!(!is_satisfied(&cs, &public, &private).unwrap());
    }
}
