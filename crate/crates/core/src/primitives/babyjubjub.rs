//! Baby Jubjub: the twisted Edwards curve `a x^2 + y^2 = 1 + d x^2 y^2` with
//! a = 168700, d = 168696 over the BN254 scalar field, in circomlib coordinates.

use std::sync::OnceLock;

use ark_bn254::Fr;
use ark_ff::{BigInteger, Field, MontFp, One, PrimeField};

use super::{FieldElement, PrimitivesError, FIELD_ELEMENT_LEN};

/// Scalars modulo the prime subgroup order.
pub(crate) type Scalar = ark_ed_on_bn254::Fr;

pub const SUBGROUP_ORDER_DEC: &str = "2736030358979909402780800718157159386076813972158567259200215660948447373041";

const A: Fr = MontFp!("168700");
const D: Fr = MontFp!("168696");

pub(crate) fn curve_a() -> Fr {
    A
}

pub(crate) fn curve_d() -> Fr {
    D
}

/// An affine point on Baby Jubjub.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Point({}, {})", self.x, self.y)
    }
}

impl Point {
    pub const ENCODED_LEN: usize = 2 * FIELD_ELEMENT_LEN;

    pub fn identity() -> Self {
        Point { x: FieldElement::ZERO, y: FieldElement::ONE }
    }

    /// Generator of the prime-order subgroup (circomlib's `Base8`).
    pub fn base() -> Self {
        Point {
            x: FieldElement(MontFp!("5299619240641551281634865583518297030282874472190772894086521144482721001553")),
            y: FieldElement(MontFp!("16950150798460657717958625567821834550301663161624707787222815936182638968203")),
        }
    }

    pub fn is_on_curve(&self) -> bool {
        let (x2, y2) = (self.x.0.square(), self.y.0.square());
        A * x2 + y2 == Fr::one() + D * x2 * y2
    }

    pub fn is_in_subgroup(&self) -> bool {
        self.is_on_curve() && self.mul_bits_le(&Scalar::MODULUS.to_bits_le()) == Point::identity()
    }

    pub fn add(&self, other: &Point) -> Point {
        let (x1, y1, x2, y2) = (self.x.0, self.y.0, other.x.0, other.y.0);
        let t = D * x1 * x2 * y1 * y2;
        let x3 = (x1 * y2 + y1 * x2) * (Fr::one() + t).inverse().expect("complete addition");
        let y3 = (y1 * y2 - A * x1 * x2) * (Fr::one() - t).inverse().expect("complete addition");
        Point { x: FieldElement(x3), y: FieldElement(y3) }
    }

    pub fn double(&self) -> Point {
        self.add(self)
    }

    fn mul_bits_le(&self, bits: &[bool]) -> Point {
        let mut acc = Point::identity();
        for bit in bits.iter().rev() {
            acc = acc.double();
            if *bit {
                acc = acc.add(self);
            }
        }
        acc
    }

    pub(crate) fn mul_scalar(&self, k: &Scalar) -> Point {
        self.mul_bits_le(&k.into_bigint().to_bits_le())
    }

    /// Multiplies by the full integer value of a base-field element.
    pub fn mul_field(&self, k: &FieldElement) -> Point {
        self.mul_bits_le(&k.0.into_bigint().to_bits_le())
    }

    pub fn to_bytes(&self) -> [u8; Self::ENCODED_LEN] {
        let mut out = [0u8; Self::ENCODED_LEN];
        out[..FIELD_ELEMENT_LEN].copy_from_slice(&self.x.to_bytes());
        out[FIELD_ELEMENT_LEN..].copy_from_slice(&self.y.to_bytes());
        out
    }

    /// Decodes `x || y` and checks curve and subgroup membership.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, PrimitivesError> {
        if bytes.len() != Self::ENCODED_LEN {
            return Err(PrimitivesError::MalformedPoint("wrong length"));
        }
        let x = FieldElement::from_bytes(&bytes[..FIELD_ELEMENT_LEN])
            .map_err(|_| PrimitivesError::MalformedPoint("non-canonical x"))?;
        let y = FieldElement::from_bytes(&bytes[FIELD_ELEMENT_LEN..])
            .map_err(|_| PrimitivesError::MalformedPoint("non-canonical y"))?;
        Point::from_coordinates(x, y)
    }

    pub fn from_coordinates(x: FieldElement, y: FieldElement) -> Result<Self, PrimitivesError> {
        let p = Point { x, y };
        if !p.is_on_curve() {
            return Err(PrimitivesError::MalformedPoint("not on curve"));
        }
        if !p.is_in_subgroup() {
            return Err(PrimitivesError::MalformedPoint("not in prime-order subgroup"));
        }
        Ok(p)
    }
}

/// `2^i * base` for every bit position of a subgroup scalar.
pub(crate) fn base_powers() -> &'static [Point] {
    static POWERS: OnceLock<Vec<Point>> = OnceLock::new();
    POWERS.get_or_init(|| {
        let mut out = Vec::with_capacity(Scalar::MODULUS_BIT_SIZE as usize);
        let mut p = Point::base();
        for _ in 0..Scalar::MODULUS_BIT_SIZE {
            out.push(p);
            p = p.double();
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_has_prime_order() {
        let b = Point::base();
        assert!(b.is_on_curve());
        assert!(b.is_in_subgroup());
        assert_ne!(b, Point::identity());
        assert_eq!(Scalar::MODULUS.to_string(), SUBGROUP_ORDER_DEC);
    }

    #[test]
    fn identity_is_neutral() {
        let b = Point::base();
        assert_eq!(b.add(&Point::identity()), b);
        assert_eq!(Point::identity().double(), Point::identity());
    }

    #[test]
    fn scalar_mul_distributes() {
        let b = Point::base();
        let two = b.mul_scalar(&Scalar::from(2u64));
        assert_eq!(two, b.double());
        let five = b.mul_scalar(&Scalar::from(5u64));
        assert_eq!(five, two.double().add(&b));
        assert_eq!(b.mul_field(&FieldElement::from_u64(5)), five);
    }

    #[test]
    fn off_curve_and_low_order_points_rejected() {
        let off = Point { x: FieldElement::ONE, y: FieldElement::ONE };
        assert!(Point::from_bytes(&off.to_bytes()).is_err());
        // (0, -1) has order 2.
        let order_two = Point { x: FieldElement::ZERO, y: FieldElement::ZERO - FieldElement::ONE };
        assert!(order_two.is_on_curve());
        assert_eq!(
            Point::from_bytes(&order_two.to_bytes()),
            Err(PrimitivesError::MalformedPoint("not in prime-order subgroup"))
        );
    }

    #[test]
    fn base_powers_are_doublings() {
        let powers = base_powers();
        assert_eq!(powers.len(), 251);
        assert_eq!(powers[3], Point::base().mul_scalar(&Scalar::from(8u64)));
    }
}
