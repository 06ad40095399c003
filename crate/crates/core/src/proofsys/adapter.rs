use ark_bn254::Fr;
use ark_relations::lc;
use ark_relations::r1cs::{ConstraintSynthesizer, ConstraintSystemRef, LinearCombination, SynthesisError, Variable};

use crate::circuit::{ConstraintSystem, LinearCombination as Lc, Wire};

/// Replays a [`ConstraintSystem`] into arkworks.
pub(crate) struct R1csAdapter<'a> {
    cs: &'a ConstraintSystem,
    values: Option<(Vec<Fr>, Vec<Fr>)>,
}

impl<'a> R1csAdapter<'a> {
    pub(crate) fn shape(cs: &'a ConstraintSystem) -> Self {
        R1csAdapter { cs, values: None }
    }

    pub(crate) fn with_values(cs: &'a ConstraintSystem, public: Vec<Fr>, private: Vec<Fr>) -> Self {
        R1csAdapter { cs, values: Some((public, private)) }
    }
}

fn convert(lc: &Lc, public: &[Variable], private: &[Variable]) -> LinearCombination<Fr> {
    let mut out = lc!();
    for (w, c) in lc.terms() {
        let var = match w {
            Wire::One => Variable::One,
            Wire::Public(i) => public[*i],
            Wire::Private(i) => private[*i],
        };
        out.0.push((*c, var));
    }
    out
}

impl ConstraintSynthesizer<Fr> for R1csAdapter<'_> {
    fn generate_constraints(self, ark: ConstraintSystemRef<Fr>) -> Result<(), SynthesisError> {
        let value = |v: Option<Fr>| move || v.ok_or(SynthesisError::AssignmentMissing);
        let (public_vals, private_vals) = match &self.values {
            Some((p, s)) => (p.iter().map(|v| Some(*v)).collect(), s.iter().map(|v| Some(*v)).collect()),
            None => (vec![None; self.cs.num_public()], vec![None; self.cs.num_private()]),
        };
        let public = public_vals
            .into_iter()
            .map(|v: Option<Fr>| ark.new_input_variable(value(v)))
            .collect::<Result<Vec<_>, _>>()?;
        let private = private_vals
            .into_iter()
            .map(|v: Option<Fr>| ark.new_witness_variable(value(v)))
            .collect::<Result<Vec<_>, _>>()?;
        for con in self.cs.constraints() {
            ark.enforce_constraint(
                convert(&con.a, &public, &private),
                convert(&con.b, &public, &private),
                convert(&con.c, &public, &private),
            )?;
        }
        Ok(())
    }
}
