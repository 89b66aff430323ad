use crate::boolean_algebra::BAElement;
use crate::error::{Error, Result};
use crate::rings::Elem;

use super::{SpeckerAlgebra, SpeckerElement};

/// An unnormalized sum `Σ aᵢ·eᵢ`; the idempotents may overlap.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalCombination {
    pub terms: Vec<(Elem, BAElement)>,
}

impl FormalCombination {
    pub fn new(terms: Vec<(Elem, BAElement)>) -> Self {
        FormalCombination { terms }
    }
}

/// Orthogonal decomposition with distinct nonzero coefficients and nonempty,
/// pairwise disjoint idempotents, sorted by least atom. The zero part is
/// left implicit; see [`OrthogonalForm::full_form`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrthogonalForm {
    parts: Vec<(Elem, BAElement)>,
}

impl OrthogonalForm {
    pub fn parts(&self) -> &[(Elem, BAElement)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn into_combination(self) -> FormalCombination {
        FormalCombination { terms: self.parts }
    }

    /// The parts plus `(0, ¬⋁ idems)` when the parts do not cover top.
    pub fn full_form(&self, parent: &SpeckerAlgebra) -> Vec<(Elem, BAElement)> {
        let b = parent.algebra();
        let covered = b
            .complete_join(self.parts.iter().map(|(_, e)| e))
            .expect("parts belong to the parent algebra");
        let mut full = self.parts.clone();
        if !covered.is_top() {
            full.push((parent.ring().zero(), covered.complement()));
            full.sort_by_key(|(_, e)| e.least_atom());
        }
        full
    }

    /// Checks the orthogonal-form invariants against `parent`.
    pub fn validate(&self, parent: &SpeckerAlgebra) -> Result<()> {
        let ring = parent.ring();
        for (i, (a, e)) in self.parts.iter().enumerate() {
            ring.check(a)?;
            parent.check_ba(e)?;
            if ring.is_zero(a) {
                return Err(Error::InvalidArgument("zero coefficient in orthogonal form".into()));
            }
            if e.is_bottom() {
                return Err(Error::InvalidArgument("empty idempotent in orthogonal form".into()));
            }
            for (b, f) in &self.parts[i + 1..] {
                if a == b {
                    return Err(Error::InvalidArgument(format!("repeated coefficient {a}")));
                }
                if !e.is_disjoint(f)? {
                    return Err(Error::InvalidArgument(format!("{e} and {f} overlap")));
                }
            }
        }
        if self
            .parts
            .windows(2)
            .any(|w| w[0].1.least_atom() >= w[1].1.least_atom())
        {
            return Err(Error::InvalidArgument("parts not sorted by least atom".into()));
        }
        Ok(())
    }
}

impl SpeckerAlgebra {
    /// Normal form of a formal combination.
    ///
    /// Refines the idempotents into minterm blocks, sums the coefficients
    /// over each block, merges blocks with equal sums and drops the zero block.
    pub fn normalize(&self, c: &FormalCombination) -> Result<OrthogonalForm> {
        let ring = self.ring();
        for (a, e) in &c.terms {
            ring.check(a)?;
            self.check_ba(e)?;
        }
        let idems: Vec<BAElement> = c.terms.iter().map(|(_, e)| e.clone()).collect();
        let blocks = self.algebra().minterm_refinement(&idems)?;

        let mut merged: Vec<(Elem, BAElement)> = Vec::new();
        for block in blocks {
            let atom = block.least_atom().expect("minterms are nonempty");
            let coeff = c
                .terms
                .iter()
                .filter(|(_, e)| e.contains(atom))
                .fold(ring.zero(), |acc, (a, _)| ring.add(&acc, a));
            if ring.is_zero(&coeff) {
                continue;
            }
            match merged.iter_mut().find(|(a, _)| *a == coeff) {
                Some((_, e)) => *e = e.join(&block)?,
                None => merged.push((coeff, block)),
            }
        }
        // blocks arrive ordered by least atom, so merged parts already are
        Ok(OrthogonalForm { parts: merged })
    }

    /// Evaluates an orthogonal form (or any formal combination) pointwise.
    pub fn evaluate(&self, c: &FormalCombination) -> Result<SpeckerElement> {
        let ring = self.ring();
        let mut values = vec![ring.zero(); self.atom_count()];
        for (a, e) in &c.terms {
            ring.check(a)?;
            self.check_ba(e)?;
            for &x in e.atoms() {
                values[x] = ring.add(&values[x], a);
            }
        }
        Ok(SpeckerElement { values })
    }

    pub fn to_pointwise(&self, o: &OrthogonalForm) -> Result<SpeckerElement> {
        o.validate(self)?;
        self.evaluate(&FormalCombination {
            terms: o.parts.clone(),
        })
    }

    /// Groups atoms by value, dropping the zero group.
    pub fn from_pointwise(&self, s: &SpeckerElement) -> Result<OrthogonalForm> {
        self.check(s)?;
        let ring = self.ring();
        let mut parts: Vec<(Elem, Vec<usize>)> = Vec::new();
        for (x, v) in s.values().iter().enumerate() {
            if ring.is_zero(v) {
                continue;
            }
            match parts.iter_mut().find(|(a, _)| a == v) {
                Some((_, atoms)) => atoms.push(x),
                None => parts.push((v.clone(), vec![x])),
            }
        }
        let b = self.algebra();
        Ok(OrthogonalForm {
            parts: parts
                .into_iter()
                .map(|(a, atoms)| Ok((a, b.element(atoms)?)))
                .collect::<Result<_>>()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolean_algebra::FiniteBooleanAlgebra;
    use crate::rings::Ring;

    fn z2() -> SpeckerAlgebra {
        SpeckerAlgebra::new(Ring::Integers, FiniteBooleanAlgebra::new(2).unwrap())
    }

    fn term(s: &SpeckerAlgebra, a: i64, atoms: &[usize]) -> (Elem, BAElement) {
        (
            s.ring().from_i64(a),
            s.algebra().element(atoms.iter().copied()).unwrap(),
        )
    }

    #[test]
    fn normalize_examples() {
        let s = z2();
        let c = FormalCombination::new(vec![term(&s, 2, &[0, 1]), term(&s, 3, &[0])]);
        let o = s.normalize(&c).unwrap();
        assert_eq!(o.parts(), &[term(&s, 5, &[0]), term(&s, 2, &[1])]);

        let o = s.normalize(&FormalCombination::default()).unwrap();
        assert!(o.is_empty());
        assert_eq!(o.full_form(&s), vec![term(&s, 0, &[0, 1])]);

        let c = FormalCombination::new(vec![term(&s, 1, &[0]), term(&s, 1, &[1])]);
        assert_eq!(s.normalize(&c).unwrap().parts(), &[term(&s, 1, &[0, 1])]);
    }

    #[test]
    fn normalize_rejects_foreign_idempotents() {
        let s = z2();
        let foreign = FiniteBooleanAlgebra::new(3).unwrap().top();
        let c = FormalCombination::new(vec![(s.ring().one(), foreign)]);
        assert!(matches!(s.normalize(&c), Err(Error::MixedAlgebras(_))));
    }

    #[test]
    fn pointwise_round_trip_examples() {
        let s = z2();
        let o = s
            .normalize(&FormalCombination::new(vec![term(&s, 5, &[0]), term(&s, 2, &[1])]))
            .unwrap();
        assert_eq!(s.to_pointwise(&o).unwrap(), s.from_ints(&[5, 2]).unwrap());
        assert!(s.from_pointwise(&s.zero()).unwrap().is_empty());
        assert_eq!(
            s.from_pointwise(&s.from_ints(&[3, 3]).unwrap()).unwrap().parts(),
            &[term(&s, 3, &[0, 1])]
        );
    }

    #[test]
    fn full_form_appends_zero_part_in_order() {
        let s = SpeckerAlgebra::new(Ring::Integers, FiniteBooleanAlgebra::new(3).unwrap());
        let o = s.from_pointwise(&s.from_ints(&[0, 4, 0]).unwrap()).unwrap();
        assert_eq!(o.full_form(&s), vec![term(&s, 0, &[0, 2]), term(&s, 4, &[1])]);
    }

    #[test]
    fn validate_catches_bad_forms() {
        let s = z2();
        let bad = OrthogonalForm {
            parts: vec![term(&s, 1, &[0]), term(&s, 1, &[1])],
        };
        assert!(bad.validate(&s).is_err());
        let bad = OrthogonalForm {
            parts: vec![term(&s, 1, &[0, 1]), term(&s, 2, &[1])],
        };
        assert!(bad.validate(&s).is_err());
        let bad = OrthogonalForm {
            parts: vec![term(&s, 0, &[0])],
        };
        assert!(bad.validate(&s).is_err());
    }

    #[test]
    fn from_pointwise_is_a_bijection_on_z4() {
        let s = SpeckerAlgebra::new(Ring::Modular(4), FiniteBooleanAlgebra::new(2).unwrap());
        let mut seen = std::collections::HashSet::new();
        for e in s.elements().unwrap() {
            let o = s.from_pointwise(&e).unwrap();
            o.validate(&s).unwrap();
            assert_eq!(s.to_pointwise(&o).unwrap(), e);
            assert_eq!(s.normalize(&o.clone().into_combination()).unwrap(), o);
            assert!(seen.insert(o));
        }
        assert_eq!(seen.len(), 16);
    }
}
