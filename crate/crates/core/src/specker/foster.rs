use std::collections::BTreeMap;

use crate::boolean_algebra::BAElement;
use crate::error::{Error, Result};
use crate::rings::Elem;

use super::{SpeckerAlgebra, SpeckerElement};

/// Foster's representation of a Boolean-power element: a finite-support map
/// `R → B` whose nonzero values partition the top of `B`. Entries with an
/// empty cell are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FosterFunction {
    cells: BTreeMap<Elem, BAElement>,
}

impl FosterFunction {
    pub fn cells(&self) -> &BTreeMap<Elem, BAElement> {
        &self.cells
    }

    /// Value at `a`; `None` stands for the bottom element.
    pub fn get(&self, a: &Elem) -> Option<&BAElement> {
        self.cells.get(a)
    }

    fn collect<I>(parent: &SpeckerAlgebra, contributions: I) -> Result<FosterFunction>
    where
        I: IntoIterator<Item = (Elem, BAElement)>,
    {
        let mut cells: BTreeMap<Elem, BAElement> = BTreeMap::new();
        for (a, cell) in contributions {
            if cell.is_bottom() {
                continue;
            }
            let joined = match cells.get(&a) {
                Some(prev) => prev.join(&cell)?,
                None => cell,
            };
            cells.insert(a, joined);
        }
        let f = FosterFunction { cells };
        f.validate(parent)?;
        Ok(f)
    }
}

impl SpeckerAlgebra {
    pub fn foster_from_cells(&self, cells: BTreeMap<Elem, BAElement>) -> Result<FosterFunction> {
        let f = FosterFunction { cells };
        f.validate(self)?;
        Ok(f)
    }

    /// `s ↦ s^⊥`: each value maps to the set of atoms where it is taken.
    pub fn to_foster(&self, s: &SpeckerElement) -> Result<FosterFunction> {
        self.check(s)?;
        let b = self.algebra();
        FosterFunction::collect(
            self,
            s.values()
                .iter()
                .enumerate()
                .map(|(x, v)| (v.clone(), b.atom(x).expect("atom in range"))),
        )
    }

    /// `f ↦ Σ a·f(a)`.
    pub fn from_foster(&self, f: &FosterFunction) -> Result<SpeckerElement> {
        f.validate(self)?;
        let mut values = vec![self.ring().zero(); self.atom_count()];
        for (a, cell) in &f.cells {
            for &x in cell.atoms() {
                values[x] = a.clone();
            }
        }
        self.element(values)
    }

    /// `(f + g)(a) = ⋁ { f(b) ∧ g(c) : b + c = a }`.
    pub fn foster_add(&self, f: &FosterFunction, g: &FosterFunction) -> Result<FosterFunction> {
        self.foster_combine(f, g, |b, c| self.ring().add(b, c))
    }

    /// `(fg)(a) = ⋁ { f(b) ∧ g(c) : bc = a }`.
    pub fn foster_mul(&self, f: &FosterFunction, g: &FosterFunction) -> Result<FosterFunction> {
        self.foster_combine(f, g, |b, c| self.ring().mul(b, c))
    }

    fn foster_combine(
        &self,
        f: &FosterFunction,
        g: &FosterFunction,
        op: impl Fn(&Elem, &Elem) -> Elem,
    ) -> Result<FosterFunction> {
        f.validate(self)?;
        g.validate(self)?;
        let mut contributions = Vec::with_capacity(f.cells.len() * g.cells.len());
        for (b, fb) in &f.cells {
            for (c, gc) in &g.cells {
                contributions.push((op(b, c), fb.meet(gc)?));
            }
        }
        FosterFunction::collect(self, contributions)
    }

    /// `(bf)(a) = ⋁ { f(c) : bc = a }`; colliding products are joined.
    pub fn foster_scalar(&self, b: &Elem, f: &FosterFunction) -> Result<FosterFunction> {
        self.ring().check(b)?;
        f.validate(self)?;
        FosterFunction::collect(
            self,
            f.cells
                .iter()
                .map(|(c, cell)| (self.ring().mul(b, c), cell.clone())),
        )
    }
}

impl FosterFunction {
    /// Nonempty cells, pairwise disjoint, joining to top.
    pub fn validate(&self, parent: &SpeckerAlgebra) -> Result<()> {
        let ring = parent.ring();
        let cells: Vec<(&Elem, &BAElement)> = self.cells.iter().collect();
        for (i, (a, cell)) in cells.iter().enumerate() {
            ring.check(a)?;
            parent.check_ba(cell)?;
            if cell.is_bottom() {
                return Err(Error::InvalidArgument(format!("empty cell stored at {a}")));
            }
            for (_, other) in &cells[i + 1..] {
                if !cell.is_disjoint(other)? {
                    return Err(Error::InvalidArgument(format!(
                        "cells {cell} and {other} overlap"
                    )));
                }
            }
        }
        let cover = parent.algebra().complete_join(self.cells.values())?;
        if !cover.is_top() {
            return Err(Error::InvalidArgument("cells do not cover top".into()));
        }
        Ok(())
    }
}
