//! The f-algebra order on a Specker algebra over a totally ordered ring.
//!
//! `f ≤ g` iff `f(x) ≤ g(x)` at every atom; lattice operations are
//! pointwise. Positivity is also computed from the orthogonal form
//! (every coefficient nonnegative) so the two characterizations can be
//! checked against each other.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::functors::AlgebraHom;
use crate::rings::Elem;
use crate::specker::{SpeckerAlgebra, SpeckerElement};

/// A Specker algebra whose ring carries a validated total order.
#[derive(Clone, Debug)]
pub struct OrderedContext {
    algebra: SpeckerAlgebra,
}

impl OrderedContext {
    pub fn new(algebra: &SpeckerAlgebra) -> Result<Self> {
        let ring = algebra.ring();
        if !ring.has_order() {
            return Err(Error::UnorderedRing);
        }
        ring.validate_order(&ring.sample_elements())?;
        if ring.idempotents()?.len() != 2 {
            return Err(Error::InconsistentBackend(
                "totally ordered ring with a nontrivial idempotent".into(),
            ));
        }
        Ok(OrderedContext {
            algebra: algebra.clone(),
        })
    }

    pub fn algebra(&self) -> &SpeckerAlgebra {
        &self.algebra
    }

    fn cmp(&self, a: &Elem, b: &Elem) -> Ordering {
        self.algebra
            .ring()
            .compare(a, b)
            .expect("ring order validated on construction")
    }

    pub fn leq(&self, f: &SpeckerElement, g: &SpeckerElement) -> Result<bool> {
        self.algebra.check(f)?;
        self.algebra.check(g)?;
        Ok(f
            .values()
            .iter()
            .zip(g.values())
            .all(|(a, b)| self.cmp(a, b) != Ordering::Greater))
    }

    fn pointwise(
        &self,
        f: &SpeckerElement,
        g: &SpeckerElement,
        pick: impl Fn(Ordering) -> bool,
    ) -> Result<SpeckerElement> {
        self.algebra.check(f)?;
        self.algebra.check(g)?;
        self.algebra.element(
            f.values()
                .iter()
                .zip(g.values())
                .map(|(a, b)| if pick(self.cmp(a, b)) { a.clone() } else { b.clone() })
                .collect(),
        )
    }

    pub fn join(&self, f: &SpeckerElement, g: &SpeckerElement) -> Result<SpeckerElement> {
        self.pointwise(f, g, |o| o == Ordering::Greater)
    }

    pub fn meet(&self, f: &SpeckerElement, g: &SpeckerElement) -> Result<SpeckerElement> {
        self.pointwise(f, g, |o| o == Ordering::Less)
    }

    pub fn abs(&self, f: &SpeckerElement) -> Result<SpeckerElement> {
        self.algebra.check(f)?;
        let ring = self.algebra.ring();
        self.algebra.element(
            f.values()
                .iter()
                .map(|a| ring.abs(a))
                .collect::<Result<_>>()?,
        )
    }

    pub fn is_positive(&self, f: &SpeckerElement) -> Result<bool> {
        self.leq(&self.algebra.zero(), f)
    }

    /// `0 ≤ f` read off the orthogonal form: every coefficient is `≥ 0`.
    pub fn is_positive_orthogonal(&self, f: &SpeckerElement) -> Result<bool> {
        let form = self.algebra.from_pointwise(f)?;
        let zero = self.algebra.ring().zero();
        Ok(form
            .full_form(&self.algebra)
            .iter()
            .all(|(a, _)| self.cmp(&zero, a) != Ordering::Greater))
    }

    /// The f-ring law: `a ∧ b = 0` and `c ≥ 0` imply `(a·c) ∧ b = 0`.
    pub fn f_ring_axiom_check(
        &self,
        a: &SpeckerElement,
        b: &SpeckerElement,
        c: &SpeckerElement,
    ) -> Result<FRingCheck> {
        let s = &self.algebra;
        let applicable = s.is_zero(&self.meet(a, b)?) && self.is_positive(c)?;
        if !applicable {
            return Ok(FRingCheck {
                holds: true,
                vacuous: true,
            });
        }
        let lhs = self.meet(&s.mul(a, c)?, b)?;
        Ok(FRingCheck {
            holds: s.is_zero(&lhs),
            vacuous: false,
        })
    }

    /// `2(f ∨ g) = f + g + |f − g|` and `2(f ∧ g) = f + g − |f − g|`.
    pub fn lattice_identities_hold(&self, f: &SpeckerElement, g: &SpeckerElement) -> Result<bool> {
        let s = &self.algebra;
        let two = s.ring().from_i64(2);
        let sum = s.add(f, g)?;
        let dist = self.abs(&s.sub(f, g)?)?;
        Ok(s.scale(&two, &self.join(f, g)?)? == s.add(&sum, &dist)?
            && s.scale(&two, &self.meet(f, g)?)? == s.sub(&sum, &dist)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FRingCheck {
    pub holds: bool,
    /// The hypotheses `a ∧ b = 0`, `c ≥ 0` did not hold.
    pub vacuous: bool,
}

/// Checks that `α` commutes with `∨`, `∧` and `|·|` on `pairs`, and that the
/// join and meet identities hold on the source for each pair.
pub fn lattice_hom_check(alpha: &AlgebraHom, pairs: &[(SpeckerElement, SpeckerElement)]) -> Result<bool> {
    if alpha.source().ring() != alpha.target().ring() {
        return Err(Error::RingMismatch(format!(
            "{} and {}",
            alpha.source().ring(),
            alpha.target().ring()
        )));
    }
    let src = OrderedContext::new(alpha.source())?;
    let tgt = OrderedContext::new(alpha.target())?;
    for (f, g) in pairs {
        let (af, ag) = (alpha.apply(f)?, alpha.apply(g)?);
        if alpha.apply(&src.join(f, g)?)? != tgt.join(&af, &ag)?
            || alpha.apply(&src.meet(f, g)?)? != tgt.meet(&af, &ag)?
            || alpha.apply(&src.abs(f)?)? != tgt.abs(&af)?
            || !src.lattice_identities_hold(f, g)?
        {
            return Ok(false);
        }
    }
    Ok(true)
}
