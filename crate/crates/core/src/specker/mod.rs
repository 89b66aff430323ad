//! The Boolean power `R[B] = C(X, R_disc)` for a finite Boolean algebra `B`.
//!
//! `X` is the (discrete) set of atoms of `B`, so an element is just a value
//! in `R` for every atom. This pointwise representation is canonical; the
//! orthogonal form and the Foster form are derived views.

mod foster;
mod form;
mod idempotents;
mod quotient;

use std::fmt;

use rand::Rng;

use crate::boolean_algebra::{BAElement, FiniteBooleanAlgebra};
use crate::error::{Error, Result};
use crate::rings::{Elem, Ring};

pub use foster::FosterFunction;
pub use form::{FormalCombination, OrthogonalForm};
pub use idempotents::IdempotentAlgebra;
pub use quotient::SpeckerQuotient;

/// A Specker algebra over `ring`, presented by the finite Boolean algebra `algebra`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpeckerAlgebra {
    ring: Ring,
    algebra: FiniteBooleanAlgebra,
}

/// An element of a Specker algebra: one ring value per atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpeckerElement {
    values: Vec<Elem>,
}

impl SpeckerElement {
    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn value(&self, atom: usize) -> &Elem {
        &self.values[atom]
    }
}

impl fmt::Display for SpeckerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl SpeckerAlgebra {
    pub fn new(ring: Ring, algebra: FiniteBooleanAlgebra) -> Self {
        SpeckerAlgebra { ring, algebra }
    }

    /// `R` itself, as the Specker algebra over the two-element Boolean algebra.
    pub fn base(ring: Ring) -> Self {
        SpeckerAlgebra {
            ring,
            algebra: FiniteBooleanAlgebra::new(1).expect("one atom"),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn algebra(&self) -> FiniteBooleanAlgebra {
        self.algebra
    }

    pub fn atom_count(&self) -> usize {
        self.algebra.atom_count()
    }

    pub fn element(&self, values: Vec<Elem>) -> Result<SpeckerElement> {
        let s = SpeckerElement { values };
        self.check(&s)?;
        Ok(s)
    }

    /// Builds an element from small integers, mapped through `Z → R`.
    pub fn from_ints(&self, values: &[i64]) -> Result<SpeckerElement> {
        self.element(values.iter().map(|&v| self.ring.from_i64(v)).collect())
    }

    pub fn check(&self, s: &SpeckerElement) -> Result<()> {
        if s.values.len() != self.atom_count() {
            return Err(Error::MixedAlgebras(format!(
                "element has {} values, algebra has {} atoms",
                s.values.len(),
                self.atom_count()
            )));
        }
        s.values.iter().try_for_each(|v| self.ring.check(v))
    }

    pub(crate) fn check_ba(&self, e: &BAElement) -> Result<()> {
        if e.algebra() != self.algebra {
            return Err(Error::MixedAlgebras(format!(
                "idempotent of {} used over {}",
                e.algebra(),
                self.algebra
            )));
        }
        Ok(())
    }

    pub fn constant(&self, a: &Elem) -> SpeckerElement {
        SpeckerElement {
            values: vec![a.clone(); self.atom_count()],
        }
    }

    pub fn zero(&self) -> SpeckerElement {
        self.constant(&self.ring.zero())
    }

    pub fn one(&self) -> SpeckerElement {
        self.constant(&self.ring.one())
    }

    pub fn is_zero(&self, s: &SpeckerElement) -> bool {
        s.values.iter().all(|v| self.ring.is_zero(v))
    }

    /// The canonical generator `y_e`: the characteristic function of `e`.
    pub fn generator(&self, e: &BAElement) -> Result<SpeckerElement> {
        self.check_ba(e)?;
        Ok(self.indicator(e))
    }

    fn indicator(&self, e: &BAElement) -> SpeckerElement {
        SpeckerElement {
            values: (0..self.atom_count())
                .map(|x| {
                    if e.contains(x) {
                        self.ring.one()
                    } else {
                        self.ring.zero()
                    }
                })
                .collect(),
        }
    }

    /// Characteristic function of a single atom.
    pub fn atom_indicator(&self, atom: usize) -> SpeckerElement {
        self.indicator(&self.algebra.atom(atom).expect("atom in range"))
    }

    /// `a · y_e`.
    pub fn scaled_generator(&self, a: &Elem, e: &BAElement) -> Result<SpeckerElement> {
        self.scale(a, &self.generator(e)?)
    }

    fn zip_with(
        &self,
        s: &SpeckerElement,
        t: &SpeckerElement,
        op: impl Fn(&Elem, &Elem) -> Elem,
    ) -> Result<SpeckerElement> {
        self.check(s)?;
        self.check(t)?;
        Ok(SpeckerElement {
            values: s.values.iter().zip(&t.values).map(|(a, b)| op(a, b)).collect(),
        })
    }

    pub fn add(&self, s: &SpeckerElement, t: &SpeckerElement) -> Result<SpeckerElement> {
        self.zip_with(s, t, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, s: &SpeckerElement, t: &SpeckerElement) -> Result<SpeckerElement> {
        self.zip_with(s, t, |a, b| self.ring.sub(a, b))
    }

    pub fn mul(&self, s: &SpeckerElement, t: &SpeckerElement) -> Result<SpeckerElement> {
        self.zip_with(s, t, |a, b| self.ring.mul(a, b))
    }

    pub fn neg(&self, s: &SpeckerElement) -> Result<SpeckerElement> {
        self.check(s)?;
        Ok(SpeckerElement {
            values: s.values.iter().map(|a| self.ring.neg(a)).collect(),
        })
    }

    /// Scalar multiplication by a ring element.
    pub fn scale(&self, a: &Elem, s: &SpeckerElement) -> Result<SpeckerElement> {
        self.ring.check(a)?;
        self.check(s)?;
        Ok(SpeckerElement {
            values: s.values.iter().map(|v| self.ring.mul(a, v)).collect(),
        })
    }

    /// Sum of a sequence of elements (zero for an empty sequence).
    pub fn sum<'a, I>(&self, items: I) -> Result<SpeckerElement>
    where
        I: IntoIterator<Item = &'a SpeckerElement>,
    {
        items
            .into_iter()
            .try_fold(self.zero(), |acc, s| self.add(&acc, s))
    }

    /// `s` is idempotent iff each of its values is an idempotent of `R`.
    pub fn is_idempotent(&self, s: &SpeckerElement) -> Result<bool> {
        self.check(s)?;
        Ok(s.values.iter().all(|v| self.ring.is_idempotent(v)))
    }

    /// Faithfulness of an idempotent `e`: `a·e = 0` forces `a = 0`.
    ///
    /// Decided by checking that the values of `e` join to `1` in `Id(R)`.
    pub fn is_faithful(&self, e: &SpeckerElement) -> Result<bool> {
        if !self.is_idempotent(e)? {
            return Err(Error::NotIdempotent);
        }
        let ids = self.ring.idempotent_algebra()?;
        let join = e
            .values
            .iter()
            .fold(self.ring.zero(), |acc, v| ids.join(&acc, v));
        Ok(join == self.ring.one())
    }

    /// Number of elements, `None` if infinite or too large for a `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        let n = self.ring.cardinality()?;
        n.checked_pow(u32::try_from(self.atom_count()).ok()?)
    }

    /// All elements of a finite Specker algebra, lexicographic with atom 0
    /// most significant.
    pub fn elements(&self) -> Result<Vec<SpeckerElement>> {
        let ring_elements = self.ring.elements()?;
        let mut out = vec![Vec::new()];
        for _ in 0..self.atom_count() {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<Elem>| {
                    ring_elements.iter().map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v.clone());
                        next
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|values| SpeckerElement { values })
            .collect())
    }

    pub fn random_element<G: Rng + ?Sized>(&self, rng: &mut G, bound: i64) -> SpeckerElement {
        SpeckerElement {
            values: (0..self.atom_count())
                .map(|_| self.ring.random_element(rng, bound))
                .collect(),
        }
    }

    /// Elements to run a verification over: every element when the carrier
    /// has at most `limit` elements, otherwise `samples` random ones.
    pub fn check_set<G: Rng + ?Sized>(
        &self,
        limit: u128,
        samples: usize,
        rng: &mut G,
    ) -> Result<(Vec<SpeckerElement>, Coverage)> {
        match self.cardinality() {
            Some(n) if n <= limit => Ok((self.elements()?, Coverage::Exhaustive)),
            _ => Ok((
                (0..samples).map(|_| self.random_element(rng, 10)).collect(),
                Coverage::Sampled(samples),
            )),
        }
    }
}

impl fmt::Display for SpeckerAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.ring, self.algebra)
    }
}

/// How a finite-instance verification covered its carrier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    Exhaustive,
    Sampled(usize),
}

/// Default carrier size up to which checks are exhaustive.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u128 = 10_000;
